"""G2 3-forms: the model form, metric/volume extraction, cross product,
torsion flags and the splitting of 2-forms into the 7 + 14 summands."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from .exterior import (
    AXES, IDENTITY, ConstantMetric, KForm, VectorField, coordinate_field, d, e,
    hodge_star, interior_product, sharp, volume_form, wedge,
)
from .exterior import linalg
from .exterior.polynomial import NVARS
from .report import CheckReport, Clause, Verdict, exact_clause


class NotG2FormError(ValueError):
    pass


class G2StructureError(ValueError):
    pass


PHI0_TERMS = {
    (1, 2, 3): 1, (1, 4, 5): 1, (1, 6, 7): 1, (2, 4, 6): 1,
    (2, 5, 7): -1, (3, 4, 7): -1, (3, 5, 6): -1,
}


def standard_phi() -> KForm:
    """e123 + e145 + e167 + e246 - e257 - e347 - e356."""
    return KForm(3, PHI0_TERMS)


def gram_from_phi(phi: KForm, pt: Sequence = (0,) * NVARS) -> list[list[Fraction]]:
    """B with (iota_i phi) ^ (iota_j phi) ^ phi = 6 B_ij e^{1..7} at ``pt``.

    Float coordinates are converted to their exact binary rationals first, so
    the result is always an exact symmetric matrix.
    """
    if phi.degree != 3:
        raise ValueError("gram_from_phi needs a 3-form")
    pt = tuple(Fraction(x) for x in pt)
    frozen = phi.at(pt)
    contractions = [interior_product(coordinate_field(i), frozen) for i in AXES]
    B = [[Fraction(0)] * NVARS for _ in range(NVARS)]
    for i in range(NVARS):
        left = wedge(contractions[i], frozen)
        for j in range(i, NVARS):
            top = wedge(contractions[j], left)
            val = top[AXES].constant_value() / 6 if top else Fraction(0)
            B[i][j] = B[j][i] = val
    return B


class MetricExtraction(NamedTuple):
    metric: np.ndarray
    volume_scale: float
    orientation: int


def metric_from_phi(phi: KForm, pt: Sequence = (0,) * NVARS) -> MetricExtraction:
    """Numeric metric ``g = |det B|^{-1/9} (+-B)`` induced by ``phi`` at ``pt``.

    A negative-definite B means ``phi`` induces the reversed orientation; the
    sign is returned rather than treated as an error.
    """
    B = gram_from_phi(phi, pt)
    detB = linalg.det(B)
    if detB == 0:
        raise NotG2FormError("not a G2 3-form at this point: B is degenerate")
    orientation = 1 if detB > 0 else -1
    signed = [[orientation * x for x in row] for row in B]
    if not linalg.is_positive_definite(signed):
        raise NotG2FormError("not a G2 3-form at this point: B is indefinite")
    scale = float(abs(detB)) ** (1.0 / 9.0)
    g = np.array([[float(x) for x in row] for row in signed]) / scale
    return MetricExtraction(g, scale, orientation)


def _pairwise_identity(phi: KForm, g: ConstantMetric, vol: KForm) -> dict:
    failures = {}
    contractions = [interior_product(coordinate_field(i), phi) for i in AXES]
    for i in range(NVARS):
        left = wedge(contractions[i], phi)
        for j in range(i, NVARS):
            lhs = wedge(contractions[j], left)
            rhs = vol * (6 * g.entries[i][j])
            if lhs != rhs:
                failures[f"({i + 1},{j + 1})"] = lhs - rhs
    return failures


def verify_metric_compat(phi: KForm, g: ConstantMetric, vol: KForm) -> CheckReport:
    """Exact check of (iota_i phi)^(iota_j phi)^phi = 6 g_ij vol on all 28 basis pairs."""
    report = CheckReport("metric compatibility")
    failures = _pairwise_identity(phi, g, vol)
    if failures:
        report.add(Clause("(iota_u phi)^(iota_v phi)^phi = 6 g(u,v) Vol", Verdict.FAILED,
                          failures, f"fails on pairs {', '.join(failures)}"))
    else:
        report.add(Clause("(iota_u phi)^(iota_v phi)^phi = 6 g(u,v) Vol", Verdict.PROVEN,
                          detail="all 28 basis pairs"))
    return report


@dataclass(frozen=True)
class G2Structure:
    """A 3-form together with a declared constant metric and orientation.

    Construction verifies the metric-volume identity exactly; use
    :func:`metric_from_phi` to discover the metric of an unfamiliar form.
    """

    phi: KForm
    metric: ConstantMetric = IDENTITY
    orientation: int = 1
    vol: KForm = field(init=False, compare=False)

    def __post_init__(self):
        if self.phi.degree != 3:
            raise G2StructureError("phi must be a 3-form")
        object.__setattr__(self, "vol", volume_form(self.metric, self.orientation))
        report = verify_metric_compat(self.phi, self.metric, self.vol)
        if not report.passed:
            raise G2StructureError(
                "declared metric/orientation is incompatible with phi: "
                + report.clauses[0].detail)

    @classmethod
    def standard(cls) -> "G2Structure":
        return cls(standard_phi())

    @cached_property
    def star_phi(self) -> KForm:
        return self.star(self.phi)

    def star(self, a: KForm) -> KForm:
        return hodge_star(a, self.metric, self.orientation)

    def inner(self, u: VectorField, v: VectorField):
        return self.metric.inner(u, v)

    def norm2(self, v: VectorField):
        return self.metric.norm2(v)


def cross_product(u: VectorField, v: VectorField, s: G2Structure) -> VectorField:
    """``u x v`` defined by g(u x v, w) = phi(u, v, w)."""
    return sharp(interior_product(v, interior_product(u, s.phi)), s.metric)


def torsion_flags(s: G2Structure | KForm) -> tuple[bool, bool]:
    """(d phi == 0, d(*phi) == 0), decided exactly.

    A bare 3-form is starred with the Euclidean metric and standard
    orientation, which is only meaningful where it is close to the model form.
    """
    if isinstance(s, KForm):
        return d(s).is_zero(), d(hodge_star(s)).is_zero()
    return d(s.phi).is_zero(), d(s.star_phi).is_zero()


def torsion_report(s: G2Structure) -> CheckReport:
    report = CheckReport("torsion")
    report.add(exact_clause("d phi = 0", d(s.phi), KForm.zero(4)))
    report.add(exact_clause("d(*phi) = 0", d(s.star_phi), KForm.zero(5)))
    return report


@dataclass(frozen=True)
class Lambda2Split:
    part7: KForm
    part14: KForm


def project_lambda2(beta: KForm, s: G2Structure) -> Lambda2Split:
    """Split a 2-form into its 7- and 14-dimensional G2 components.

    With the orientation fixed by the metric-volume identity, ``*(phi ^ .)``
    acts as +2 on the first summand and -1 on the second, so
    part7 = (beta + *(phi^beta))/3 and part14 = (2 beta - *(phi^beta))/3.
    """
    if beta.degree != 2:
        raise ValueError("project_lambda2 needs a 2-form")
    t = s.star(wedge(s.phi, beta))
    return Lambda2Split((beta + t) / 3, (beta * 2 - t) / 3)


def lambda2_ranks(s: G2Structure) -> tuple[int, int]:
    """Numeric ranks of the two projections on the 21 basis 2-forms (constant phi)."""
    basis = list(combinations(AXES, 2))
    m7 = np.zeros((len(basis), len(basis)))
    m14 = np.zeros_like(m7)
    for col, idx in enumerate(basis):
        split = project_lambda2(e(*idx), s)
        for row, jdx in enumerate(basis):
            m7[row, col] = float(split.part7[jdx].constant_value()) if split.part7[jdx] else 0.0
            m14[row, col] = float(split.part14[jdx].constant_value()) if split.part14[jdx] else 0.0
    return int(np.linalg.matrix_rank(m7)), int(np.linalg.matrix_rank(m14))
