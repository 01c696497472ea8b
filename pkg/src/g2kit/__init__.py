"""Exact exterior-calculus checks of G2 and contact compatibility structures
on 7-dimensional coordinate patches."""
from .compat import (
    ContactG2Structure, InvariantViolation, check_a_compatible, check_b_compatible,
    check_contact_g2, check_decomposable_contraction, check_thm61, contact_g2_from_a_compatible,
    identity_suite, integrand_identity,
)
from .contact import (
    AlmostContactMetricStructure, AlmostContactStructure, ContactCertificate,
    ExactModeError, ReebError, VanishingFieldError, acms_at_point, build_acms,
    check_fundamental_form,
    contact_certificate, reeb_solve, reeb_verify, verify_acs, verify_associated,
    verify_metric_structure,
)
from .exterior import *  # noqa: F401,F403
from .g2core import (
    G2Structure, G2StructureError, Lambda2Split, NotG2FormError, cross_product,
    gram_from_phi, lambda2_ranks, metric_from_phi, project_lambda2, standard_phi,
    torsion_flags, torsion_report, verify_metric_compat,
)
from .report import CheckReport, Clause, CompatReport, SamplingSpec, Verdict
from .runner import (
    RunReport, Scenario, ScenarioError, load_scenario, parse_scenario, render_report, run_checks,
)

__version__ = "0.1.0"
