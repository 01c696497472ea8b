"""Contact forms, Reeb fields and almost contact (metric) structures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from .exterior import (
    AXES, ConstantMetric, KForm, Polynomial, VectorField, ZERO, coordinate_field, d,
    flat, interior_product, pair, permutation_sign, wedge, wedge_power,
)
from .exterior import linalg
from .exterior.polynomial import NVARS
from .g2core import G2Structure, cross_product
from .report import (
    DEFAULT_SAMPLING, CheckReport, Clause, SamplingSpec, Verdict, certify_nonvanishing,
    exact_clause,
)


class ReebError(ValueError):
    pass


class VanishingFieldError(ValueError):
    pass


class ExactModeError(ValueError):
    """The exact construction would leave the rationals; use the pointwise numeric path."""


@dataclass
class ContactCertificate:
    alpha: KForm
    top: KForm
    status: Verdict
    witness: tuple | None = None
    min_abs: Fraction | None = None

    def as_clause(self, name: str = "alpha ^ (d alpha)^3 != 0") -> Clause:
        detail = f"alpha ^ (d alpha)^3 = {self.top.pretty()}"
        if self.status is Verdict.SAMPLED:
            detail += f"; min |coeff| on samples = {self.min_abs}"
        return Clause(name, self.status, None if self.status.ok else self.top, detail,
                      self.witness)


def contact_volume(alpha: KForm) -> KForm:
    return wedge(alpha, wedge_power(d(alpha), 3))


def contact_certificate(alpha: KForm, sampling: SamplingSpec = DEFAULT_SAMPLING) -> ContactCertificate:
    """Certify ``alpha ^ (d alpha)^3`` as nowhere zero.

    A nonzero constant coefficient is a proof; otherwise the coefficient is
    probed on ``sampling`` and any zero or sign change fails the certificate.
    """
    if alpha.degree != 1:
        raise ValueError("contact_certificate needs a 1-form")
    top = contact_volume(alpha)
    cert = certify_nonvanishing(top[AXES], sampling)
    return ContactCertificate(alpha, top, cert.verdict, cert.witness, cert.min_abs)


def _is_exact_point(pt) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in pt)


def reeb_solve(alpha: KForm, pt: Sequence, tol: float = 1e-10) -> tuple:
    """Solve iota_R d alpha = 0, alpha(R) = 1 at ``pt``.

    Exact elimination at rational points, SVD otherwise.
    """
    if alpha.degree != 1:
        raise ValueError("reeb_solve needs a 1-form")
    dalpha = d(alpha)
    if _is_exact_point(pt):
        pt = tuple(Fraction(x) for x in pt)
        M = [[dalpha.coefficient(i, j).evaluate(pt) for j in AXES] for i in AXES]
        a = [alpha[(i,)].evaluate(pt) for i in AXES]
        kernel = linalg.nullspace(M, NVARS)
        if len(kernel) != 1:
            raise ReebError(f"d alpha degenerate at {pt}: kernel dimension {len(kernel)}")
        r0 = kernel[0]
        norm = sum(x * y for x, y in zip(a, r0))
        if norm == 0:
            raise ReebError("alpha vanishes on the kernel of d alpha")
        return tuple(x / norm for x in r0)
    M = np.array([[float(dalpha.coefficient(i, j).evaluate(pt)) for j in AXES] for i in AXES])
    a = np.array([float(alpha[(i,)].evaluate(pt)) for i in AXES])
    _, svals, vt = np.linalg.svd(M)
    scale = max(svals[0], 1.0)
    nullity = int(np.sum(svals <= tol * scale))
    if nullity != 1:
        raise ReebError(f"d alpha degenerate at {tuple(pt)}: kernel dimension {nullity}")
    r0 = vt[-1]
    norm = float(a @ r0)
    if abs(norm) <= tol:
        raise ReebError("alpha vanishes on the kernel of d alpha")
    return tuple(r0 / norm)


def reeb_verify(alpha: KForm, R: VectorField) -> CheckReport:
    report = CheckReport("reeb field")
    report.add(exact_clause("iota_R d alpha = 0", interior_product(R, d(alpha)), KForm.zero(1)))
    report.add(exact_clause("alpha(R) = 1", pair(alpha, R), Polynomial.const(1)))
    return report


# -- endomorphism fields ---------------------------------------------------
# A field J of endomorphisms is a 7x7 tuple of polynomials with J[i][j] the
# d/dx_{i+1} component of J(d/dx_{j+1}).

def poly_matrix(rows) -> tuple:
    return tuple(tuple(Polynomial.coerce(x) for x in row) for row in rows)


def apply(J, v: VectorField) -> VectorField:
    return VectorField([
        sum((J[i][j] * v.components[j] for j in range(NVARS) if J[i][j]), ZERO)
        for i in range(NVARS)
    ])


def compose(A, B) -> tuple:
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(NVARS) if A[i][k] and B[k][j]), ZERO)
              for j in range(NVARS))
        for i in range(NVARS))


def _matrix_residual(A, B):
    diff = tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))
    return None if all(not x for row in diff for x in row) else diff


@dataclass(frozen=True)
class AlmostContactStructure:
    """The triple (J, R, alpha); use :func:`verify_acs` to check its axioms."""

    J: tuple
    R: VectorField
    alpha: KForm


@dataclass(frozen=True)
class AlmostContactMetricStructure:
    acs: AlmostContactStructure
    g: ConstantMetric

    @property
    def J(self):
        return self.acs.J

    @property
    def R(self):
        return self.acs.R

    @property
    def alpha(self):
        return self.acs.alpha


def verify_acs(J, R: VectorField, alpha: KForm) -> CheckReport:
    """alpha(R) = 1 and J^2 = -I + alpha (x) R, plus the consequences J(R) = 0, alpha o J = 0."""
    report = CheckReport("almost contact structure")
    report.add(exact_clause("alpha(R) = 1", pair(alpha, R), Polynomial.const(1)))
    outer = poly_matrix([[R.components[i] * alpha[(j + 1,)] for j in range(NVARS)]
                         for i in range(NVARS)])
    target = tuple(tuple(o - int(i == j) for j, o in enumerate(row)) for i, row in enumerate(outer))
    res = _matrix_residual(compose(J, J), target)
    report.add(Clause("J^2 = -I + alpha (x) R", Verdict.FAILED if res else Verdict.PROVEN, res))
    report.add(exact_clause("J(R) = 0", apply(J, R), VectorField.zero()))
    alpha_J = KForm(1, {(j + 1,): sum((alpha[(i + 1,)] * J[i][j] for i in range(NVARS)), ZERO)
                        for j in range(NVARS)})
    report.add(exact_clause("alpha o J = 0", alpha_J, KForm.zero(1)))
    return report


def _metric_equation(J, alpha: KForm, g: ConstantMetric) -> Clause:
    cols = [apply(J, coordinate_field(j)) for j in AXES]
    lhs = [[g.inner(cols[i], cols[j]) for j in range(NVARS)] for i in range(NVARS)]
    rhs = [[Polynomial.const(g.entries[i][j]) - alpha[(i + 1,)] * alpha[(j + 1,)]
            for j in range(NVARS)] for i in range(NVARS)]
    res = _matrix_residual(poly_matrix(lhs), poly_matrix(rhs))
    return Clause("g(Ju,Jv) = g(u,v) - alpha(u) alpha(v)",
                  Verdict.FAILED if res else Verdict.PROVEN, res, "all basis pairs")


def verify_metric_structure(acms: AlmostContactMetricStructure) -> CheckReport:
    report = verify_acs(acms.J, acms.R, acms.alpha)
    report.title = "almost contact metric structure"
    report.add(_metric_equation(acms.J, acms.alpha, acms.g))
    return report


def build_acms(s: G2Structure, R: VectorField,
               sampling: SamplingSpec = DEFAULT_SAMPLING) -> AlmostContactMetricStructure:
    """(J_R, R, alpha_R, g) with R normalised, alpha_R = R-flat and J_R(u) = R x u."""
    n2 = s.norm2(R)
    if n2.is_zero():
        raise VanishingFieldError("vanishing field: |R|^2 is identically zero")
    if not n2.is_constant():
        cert = certify_nonvanishing(n2, sampling)
        if not cert.verdict.ok:
            raise VanishingFieldError(f"vanishing field: |R|^2 = 0 at {cert.witness}")
        raise ExactModeError(
            f"|R|^2 = {n2.pretty()} is not constant; use acms_at_point for a pointwise "
            "numeric structure")
    norm = linalg.rational_sqrt(n2.constant_value())
    if norm is None:
        raise ExactModeError(
            f"|R| = sqrt({n2.constant_value()}) is irrational; use acms_at_point for a "
            "pointwise numeric structure")
    unit = R / norm
    alpha = flat(unit, s.metric)
    columns = [cross_product(unit, coordinate_field(j), s) for j in AXES]
    J = tuple(tuple(columns[j].components[i] for j in range(NVARS)) for i in range(NVARS))
    acms = AlmostContactMetricStructure(AlmostContactStructure(J, unit, alpha), s.metric)
    report = verify_metric_structure(acms)
    if not report.passed:
        raise AssertionError(f"constructed structure fails its axioms: {report.failures()}")
    return acms


def phi_tensor(phi: KForm, pt: Sequence) -> np.ndarray:
    """Fully antisymmetric float array phi[a, b, c] = phi(e_a, e_b, e_c) at ``pt``."""
    T = np.zeros((NVARS,) * phi.degree)
    for index, c in phi.items():
        v = float(c.evaluate(pt))
        for perm in permutations(index):
            T[tuple(i - 1 for i in perm)] = permutation_sign(perm) * v
    return T


def acms_at_point(s: G2Structure, R: VectorField, pt: Sequence):
    """Float (J, R_unit, alpha) at one point; the fallback when exact normalisation fails."""
    g = np.array([[float(x) for x in row] for row in s.metric.entries])
    r = np.array([float(x) for x in R.at(pt)])
    n = float(np.sqrt(r @ g @ r))
    if n == 0.0:
        raise VanishingFieldError(f"vanishing field at {tuple(pt)}")
    r = r / n
    T = phi_tensor(s.phi, pt)
    # (r x e_j)^k = g^{kl} phi(r, e_j, e_l)
    J = np.linalg.inv(g) @ np.einsum("a,ajl->lj", r, T)
    return J, r, g @ r


def _kernel_basis(alpha: KForm, pt) -> list:
    row = [alpha[(i,)].evaluate(pt) for i in AXES]
    return linalg.nullspace([row], NVARS)


def _apply_at(Jv, vec):
    return [sum(Jv[i][j] * vec[j] for j in range(NVARS)) for i in range(NVARS)]


def _form2_at(dav, x, y):
    return sum(dav[i][j] * x[i] * y[j] for i in range(NVARS) for j in range(NVARS))


def _fundamental_form_clause(J, g: ConstantMetric, dalpha: KForm) -> Clause:
    cols = [apply(J, coordinate_field(j)) for j in AXES]
    gJ = [[g.inner(cols[i], coordinate_field(j + 1)) for j in range(NVARS)] for i in range(NVARS)]
    bad = [(i + 1, j + 1) for i in range(NVARS) for j in range(NVARS)
           if gJ[i][j] != dalpha.coefficient(i + 1, j + 1)]
    omega_J = KForm(2, {(i + 1, j + 1): gJ[i][j] for i in range(NVARS) for j in range(i + 1, NVARS)})
    return Clause("d alpha(X,Y) = g(JX,Y)", Verdict.FAILED if bad else Verdict.PROVEN,
                  (omega_J - dalpha) if bad else None,
                  f"fails on ordered pairs {bad}" if bad else "all ordered basis pairs")


def check_fundamental_form(s: G2Structure, R: VectorField, alpha: KForm,
                           sampling: SamplingSpec = DEFAULT_SAMPLING) -> CheckReport:
    """Compare d alpha with the fundamental 2-form g(J_R ., .) of the structure built from R.

    When they agree, d alpha = iota_R phi follows and is checked exactly.
    """
    acms = build_acms(s, R, sampling)
    report = CheckReport("fundamental form")
    dalpha = d(alpha)
    clause = report.add(_fundamental_form_clause(acms.J, acms.g, dalpha))
    name = "d alpha = iota_R phi"
    if clause.ok:
        report.add(exact_clause(name, dalpha, interior_product(acms.R, s.phi)))
    else:
        report.add(Clause(name, Verdict.SKIPPED, detail="premise d alpha = g(J.,.) failed"))
    return report


def verify_associated(acms: AlmostContactMetricStructure,
                      sampling: SamplingSpec = DEFAULT_SAMPLING,
                      structure: G2Structure | None = None) -> CheckReport:
    """Check an almost contact metric structure is associated with ker(alpha).

    Both metric equations are exact identities over all basis pairs.  The
    d alpha-compatibility of J on ker(alpha) is checked at one point when all
    data is constant, else at the seeded random sample points (the kernel basis
    varies with the point); positivity is always reported as sampled.  With a
    ``structure``, a passing d alpha = g(J., .) is followed by the exact
    comparison d alpha = iota_R phi.
    """
    J, R, alpha, g = acms.J, acms.R, acms.alpha, acms.g
    report = CheckReport("associated almost contact metric structure")
    report.add(_metric_equation(J, alpha, g))

    dalpha = d(alpha)
    eq7 = report.add(_fundamental_form_clause(J, g, dalpha))

    constant = alpha.is_constant() and all(x.is_constant() for row in J for x in row)
    pts = [(Fraction(0),) * NVARS] if constant else \
        [(Fraction(0),) * NVARS] + SamplingSpec(grid=0, samples=sampling.samples,
                                                low=sampling.low, high=sampling.high,
                                                seed=sampling.seed).points()
    invariance_fail = None
    positivity_fail = None
    for pt in pts:
        basis = _kernel_basis(alpha, pt)
        Jv = [[x.evaluate(pt) for x in row] for row in J]
        dav = [[dalpha.coefficient(i, j).evaluate(pt) for j in AXES] for i in AXES]
        images = [_apply_at(Jv, b) for b in basis]
        for a in range(len(basis)):
            for b in range(len(basis)):
                if _form2_at(dav, images[a], images[b]) != _form2_at(dav, basis[a], basis[b]):
                    invariance_fail = invariance_fail or pt
        # quadratic form X -> d alpha(X, JX) restricted to ker(alpha)
        q = [[(_form2_at(dav, basis[a], images[b]) + _form2_at(dav, basis[b], images[a])) / 2
              for b in range(len(basis))] for a in range(len(basis))]
        if not basis or not linalg.is_positive_definite(q):
            positivity_fail = positivity_fail or pt
    inv_verdict = Verdict.FAILED if invariance_fail else (Verdict.PROVEN if constant else Verdict.SAMPLED)
    report.add(Clause("d alpha(JX,JY) = d alpha(X,Y) on ker alpha", inv_verdict,
                      detail=f"checked at {len(pts)} point(s)", witness=invariance_fail))
    report.add(Clause("d alpha(X,JX) > 0 on ker alpha",
                      Verdict.FAILED if positivity_fail else Verdict.SAMPLED,
                      detail=f"positive definite on ker alpha at {len(pts)} point(s)",
                      witness=positivity_fail))

    for c in reeb_verify(alpha, R).clauses:
        report.add(c)

    if structure is not None:
        name = "d alpha = iota_R phi"
        if eq7.ok:
            report.add(exact_clause(name, dalpha, interior_product(R, structure.phi)))
        else:
            report.add(Clause(name, Verdict.SKIPPED, detail="premise d alpha = g(J.,.) failed"))
    return report
