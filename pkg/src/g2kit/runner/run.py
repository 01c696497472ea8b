"""Dispatch scenario checks to the library and collect their reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from ..compat import (
    check_a_compatible, check_b_compatible, check_contact_g2, check_decomposable_contraction, identity_suite,
    integrand_identity, ContactG2Structure,
)
from ..contact import (
    build_acms, check_fundamental_form, contact_certificate, reeb_solve, reeb_verify,
    verify_associated, verify_metric_structure,
)
from ..exterior import IDENTITY, KForm, wedge
from ..exterior.polynomial import NVARS
from ..g2core import G2Structure, metric_from_phi, project_lambda2, torsion_report, verify_metric_compat
from ..report import (
    DEFAULT_SAMPLING, CheckReport, Clause, SamplingSpec, Verdict, combine, exact_clause,
)
from .scenario import CHECK_SIGNATURES, Scenario

ORIGIN = (Fraction(0),) * NVARS


@dataclass
class CheckResult:
    index: int
    kind: str
    args: dict[str, Any]
    report: CheckReport

    @property
    def verdict(self) -> Verdict:
        return self.report.verdict or Verdict.SKIPPED


@dataclass
class RunReport:
    scenario: str
    coordinates: tuple[str, ...]
    sampling: SamplingSpec
    tol: float
    results: list[CheckResult] = field(default_factory=list)
    structure_error: str | None = None

    @property
    def verdict(self) -> str:
        if self.structure_error:
            return Verdict.FAILED.value
        v = combine(r.verdict for r in self.results)
        return v.value if v else "no checks"

    @property
    def failed(self) -> bool:
        return self.verdict == Verdict.FAILED.value

    def clauses(self):
        for r in self.results:
            yield from r.report.clauses


@dataclass
class _Context:
    sc: Scenario
    s: G2Structure
    sampling: SamplingSpec
    tol: float


def _metric_from_phi(ctx: _Context, point=ORIGIN) -> CheckReport:
    report = CheckReport("metric from phi")
    ext = metric_from_phi(ctx.s.phi, point)
    declared = np.array([[float(x) for x in r] for r in ctx.s.metric.entries])
    dev = float(np.max(np.abs(ext.metric - declared)))
    ok = dev <= ctx.tol
    report.add(Clause("metric_from_phi(phi) = g", Verdict.PROVEN if ok else Verdict.FAILED,
                      None if ok else dev, f"numeric, max deviation {dev:.3g} (tol {ctx.tol:g})"))
    same = ext.orientation == ctx.s.orientation
    report.add(Clause("induced orientation matches", Verdict.PROVEN if same else Verdict.FAILED,
                      detail=f"sign(det B) = {ext.orientation:+d}"))
    report.derived["volume_scale"] = ext.volume_scale
    return report


def _reeb_solve(ctx: _Context, alpha, R, point=ORIGIN) -> CheckReport:
    report = CheckReport("reeb solve")
    expected = R.at(point)
    exact = reeb_solve(alpha, point)
    report.add(Clause("reeb_solve(alpha) = R at point",
                      Verdict.PROVEN if tuple(exact) == tuple(expected) else Verdict.FAILED,
                      None if tuple(exact) == tuple(expected) else tuple(exact),
                      f"at {tuple(str(x) for x in point)}"))
    numeric = reeb_solve(alpha, tuple(float(x) for x in point), ctx.tol)
    dev = max(abs(a - float(b)) for a, b in zip(numeric, expected))
    ok = dev <= ctx.tol * 1e3
    report.add(Clause("float reeb_solve(alpha) = R at point",
                      Verdict.PROVEN if ok else Verdict.FAILED, None if ok else dev,
                      f"numeric, max deviation {dev:.3g}"))
    report.derived["reeb_field"] = tuple(exact)
    return report


def _contact(ctx: _Context, alpha) -> CheckReport:
    report = CheckReport("contact condition")
    cert = contact_certificate(alpha, ctx.sampling)
    report.add(cert.as_clause())
    report.derived["contact_volume"] = cert.top
    return report


def _contact_g2(ctx: _Context, R, alpha, f, g) -> CheckReport:
    return check_contact_g2(ContactG2Structure(ctx.s, R, alpha, f, g, ctx.sampling))


def _acms(ctx: _Context, R) -> CheckReport:
    return verify_metric_structure(build_acms(ctx.s, R, ctx.sampling))


def _associated(ctx: _Context, R) -> CheckReport:
    return verify_associated(build_acms(ctx.s, R, ctx.sampling), ctx.sampling, ctx.s)


def _lambda2(ctx: _Context, beta) -> CheckReport:
    s = ctx.s
    report = CheckReport("2-form splitting")
    split = project_lambda2(beta, s)
    report.add(exact_clause("part7 + part14 = beta", split.part7 + split.part14, beta))
    report.add(exact_clause("*(phi ^ part7) = 2 part7", s.star(wedge(s.phi, split.part7)), split.part7 * 2))
    report.add(exact_clause("*(phi ^ part14) = -part14", s.star(wedge(s.phi, split.part14)), -split.part14))
    report.add(exact_clause("*phi ^ part14 = 0", wedge(s.star_phi, split.part14), KForm.zero(6)))
    report.derived["part7"] = split.part7
    report.derived["part14"] = split.part14
    return report


_RUNNERS: dict[str, Callable[..., CheckReport]] = {
    "metric_compat": lambda ctx: verify_metric_compat(ctx.s.phi, ctx.s.metric, ctx.s.vol),
    "metric_from_phi": _metric_from_phi,
    "torsion": lambda ctx: torsion_report(ctx.s),
    "contact": _contact,
    "reeb": lambda ctx, alpha, R: reeb_verify(alpha, R),
    "reeb_solve": _reeb_solve,
    "a_compatible": lambda ctx, alpha, R: check_a_compatible(ctx.s, alpha, R, ctx.sampling),
    "b_compatible": lambda ctx, alpha, X, Y: check_b_compatible(ctx.s, alpha, X, Y, ctx.sampling),
    "contact_g2": _contact_g2,
    "acms": _acms,
    "associated": _associated,
    "fundamental_form": lambda ctx, R, alpha: check_fundamental_form(ctx.s, R, alpha, ctx.sampling),
    "lambda2": _lambda2,
    "decomposable_contraction": lambda ctx, X, Y, Z: check_decomposable_contraction(ctx.s, X, Y, Z, ctx.sampling),
    "integrand": lambda ctx, R: integrand_identity(ctx.s, R),
    "identity_suite": lambda ctx, trials=500: identity_suite(ctx.s, trials, ctx.sampling.seed),
}


def _resolve(sc: Scenario, check: dict) -> dict:
    tables = {"form": sc.forms, "field": sc.fields, "scalar": sc.scalars}
    sig = CHECK_SIGNATURES[check["type"]]
    out = {}
    for key, value in check.items():
        if key == "type":
            continue
        table = tables.get(sig[key].rstrip("?"))
        out[key] = table[value] if table is not None else value
    return out


def _describe_args(check: dict) -> dict:
    return {k: (list(map(str, v)) if isinstance(v, tuple) else v)
            for k, v in check.items() if k != "type"}


def run_checks(sc: Scenario, opts: SamplingSpec = DEFAULT_SAMPLING, tol: float = 1e-12) -> RunReport:
    """Run every check of ``sc`` in order.

    An exception inside one check becomes a failed clause of that check; the
    remaining checks still run.
    """
    run = RunReport(sc.name, sc.coordinates, opts, tol)
    try:
        s = G2Structure(sc.phi_form, sc.metric or IDENTITY, sc.orientation)
    except Exception as exc:  # noqa: BLE001 - any construction failure is reported
        run.structure_error = f"{type(exc).__name__}: {exc}"
        for k, check in enumerate(sc.checks):
            report = CheckReport(check["type"])
            report.add(Clause("G2 structure", Verdict.FAILED, detail=run.structure_error))
            run.results.append(CheckResult(k, check["type"], _describe_args(check), report))
        return run
    ctx = _Context(sc, s, opts, tol)
    for k, check in enumerate(sc.checks):
        kind = check["type"]
        try:
            report = _RUNNERS[kind](ctx, **_resolve(sc, check))
        except Exception as exc:  # noqa: BLE001
            report = CheckReport(kind)
            report.add(Clause("check raised", Verdict.FAILED, detail=f"{type(exc).__name__}: {exc}"))
        run.results.append(CheckResult(k, kind, _describe_args(check), report))
    return run
