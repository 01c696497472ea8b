"""Constant Riemannian metrics, musical isomorphisms and the Hodge star."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .forms import AXES, KForm, VectorField, complement, e, permutation_sign
from .polynomial import NVARS, Polynomial, ZERO


class MetricError(ValueError):
    pass


class IrrationalVolumeError(ValueError):
    """sqrt(det g) is irrational, so the exact Hodge star leaves the rationals."""


class ConstantMetric:
    """A symmetric positive-definite 7x7 matrix of rationals."""

    __slots__ = ("entries", "det", "sqrt_det", "_inverse", "_minor_cache", "_is_identity")

    def __init__(self, entries: Sequence[Sequence] | None = None):
        m = linalg.identity(NVARS) if entries is None else linalg.to_fraction_matrix(entries)
        if len(m) != NVARS or any(len(row) != NVARS for row in m):
            raise MetricError("metric must be 7x7")
        if any(m[i][j] != m[j][i] for i in range(NVARS) for j in range(i)):
            raise MetricError("metric is not symmetric")
        if not linalg.is_positive_definite(m):
            raise MetricError("metric is not positive definite")
        self.entries = tuple(tuple(row) for row in m)
        self.det = linalg.det(m)
        self.sqrt_det = linalg.rational_sqrt(self.det)
        self._inverse = None
        self._minor_cache: dict = {}
        self._is_identity = self.entries == tuple(map(tuple, linalg.identity(NVARS)))

    @classmethod
    def identity(cls) -> "ConstantMetric":
        return cls()

    @property
    def is_identity(self) -> bool:
        return self._is_identity

    @property
    def inverse(self) -> tuple:
        if self._inverse is None:
            self._inverse = tuple(map(tuple, linalg.inverse(self.entries)))
        return self._inverse

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def inner(self, u: VectorField, v: VectorField) -> Polynomial:
        total = ZERO
        for i in range(NVARS):
            ui = u.components[i]
            if not ui:
                continue
            for j in range(NVARS):
                gij = self.entries[i][j]
                if gij and v.components[j]:
                    total = total + ui * v.components[j] * gij
        return total

    def norm2(self, v: VectorField) -> Polynomial:
        return self.inner(v, v)

    def inverse_minor(self, rows: tuple, cols: tuple) -> Fraction:
        """det of the inverse metric restricted to ``rows x cols`` (1-based)."""
        key = (rows, cols)
        hit = self._minor_cache.get(key)
        if hit is None:
            inv = self.inverse
            hit = linalg.det([[inv[r - 1][c - 1] for c in cols] for r in rows]) if rows else Fraction(1)
            self._minor_cache[key] = hit
        return hit

    def __eq__(self, other):
        return isinstance(other, ConstantMetric) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        if self._is_identity:
            return "ConstantMetric(identity)"
        return f"ConstantMetric({[list(map(str, r)) for r in self.entries]})"


IDENTITY = ConstantMetric.identity()


def volume_form(g: ConstantMetric = IDENTITY, orientation: int = 1) -> KForm:
    """``sqrt(det g) * orientation * e^{1..7}``."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    if g.sqrt_det is None:
        raise IrrationalVolumeError(
            f"sqrt(det g) = sqrt({g.det}) is irrational; exact volume form unavailable, "
            "use the pointwise numeric routines instead")
    return e(*AXES) * (g.sqrt_det * orientation)


def flat(v: VectorField, g: ConstantMetric = IDENTITY) -> KForm:
    """Lower an index: ``flat(v)(w) = g(v, w)``."""
    if g.is_identity:
        return KForm(1, {(i,): c for i, c in zip(AXES, v.components)})
    comps = {}
    for j in range(NVARS):
        acc = ZERO
        for i in range(NVARS):
            if g.entries[i][j] and v.components[i]:
                acc = acc + v.components[i] * g.entries[i][j]
        comps[(j + 1,)] = acc
    return KForm(1, comps)


def sharp(a: KForm, g: ConstantMetric = IDENTITY) -> VectorField:
    """Raise an index of a 1-form with the inverse metric."""
    if a.degree != 1:
        raise ValueError("sharp() needs a 1-form")
    if g.is_identity:
        return VectorField([a[(i,)] for i in AXES])
    inv = g.inverse
    comps = []
    for i in range(NVARS):
        acc = ZERO
        for j in range(NVARS):
            if inv[i][j]:
                acc = acc + a[(j + 1,)] * inv[i][j]
        comps.append(acc)
    return VectorField(comps)


def raise_indices(a: KForm, g: ConstantMetric = IDENTITY) -> dict:
    """Contravariant components ``A^I = sum_J det(g^{-1}[I, J]) a_J`` of a form."""
    if g.is_identity:
        return dict(a.items())
    out = {}
    for index in combinations(AXES, a.degree):
        acc = ZERO
        for j, c in a.items():
            m = g.inverse_minor(index, j)
            if m:
                acc = acc + c * m
        if acc:
            out[index] = acc
    return out


def hodge_star(a: KForm, g: ConstantMetric = IDENTITY, orientation: int = 1) -> KForm:
    """Hodge star with ``a ^ *a = |a|^2 Vol_g`` and ``Vol_g = sqrt(det g) * orientation * e^{1..7}``."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    if g.sqrt_det is None:
        raise IrrationalVolumeError(
            f"sqrt(det g) = sqrt({g.det}) is irrational; the exact Hodge star is unavailable, "
            "use the pointwise numeric routines instead")
    scale = g.sqrt_det * orientation
    out = {}
    for index, c in raise_indices(a, g).items():
        comp = complement(index)
        s = permutation_sign(index + comp) * scale
        out[comp] = c * s
    return KForm(NVARS - a.degree, out)


star = hodge_star


def form_inner(a: KForm, b: KForm, g: ConstantMetric = IDENTITY) -> Polynomial:
    """Pointwise inner product of two k-forms induced by ``g``."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    raised = raise_indices(a, g)
    total = ZERO
    for index, c in raised.items():
        bc = b[index]
        if bc:
            total = total + c * bc
    return total
