"""Alternating forms and vector fields with polynomial coefficients on a 7-patch.

Conventions used throughout the package:

* ``e(i, j, k)`` is ``dx_i ^ dx_j ^ dx_k``; basis keys are strictly increasing
  tuples of axes in ``1..7``.
* ``e^I(v_1, ..., v_k) = det[dx_{i_l}(v_m)]``, so the interior product contracts
  the first slot: ``(iota_v a)(w_2, ...) = a(v, w_2, ...)``.
* The wedge sign of two basis monomials is the parity of the inversion count of
  their concatenated index sequence.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import det
from .polynomial import DEFAULT_NAMES, NVARS, Polynomial, ZERO, as_fraction, random_polynomial

AXES = tuple(range(1, NVARS + 1))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if ``seq`` has a repeat."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def complement(index: tuple) -> tuple:
    return tuple(i for i in AXES if i not in index)


def _check_index(index, degree):
    index = tuple(int(i) for i in index)
    if len(index) != degree:
        raise ValueError(f"multi-index {index} has length {len(index)}, expected {degree}")
    if any(not 1 <= i <= NVARS for i in index):
        raise ValueError(f"multi-index {index} has an axis outside 1..{NVARS}")
    if any(a >= b for a, b in zip(index, index[1:])):
        raise ValueError(f"non-increasing multi-index {list(index)}")
    return index


class KForm:
    """A degree-``k`` differential form ``sum_I c_I e^I`` with polynomial ``c_I``.

    Degrees above 7 are allowed only as the zero form (no index of that length
    exists), which keeps ``wedge`` and ``d`` total.
    """

    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Mapping[tuple, object] | None = None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.degree = int(degree)
        clean = {}
        for index, c in (coeffs or {}).items():
            index = _check_index(index, degree)
            c = Polynomial.coerce(c)
            if c:
                clean[index] = clean[index] + c if index in clean else c
                if not clean[index]:
                    del clean[index]
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, degree: int, coeffs: dict) -> "KForm":
        f = cls.__new__(cls)
        f.degree = degree
        f._coeffs = coeffs
        f._hash = None
        return f

    @classmethod
    def zero(cls, degree: int) -> "KForm":
        return cls._raw(degree, {})

    @classmethod
    def scalar(cls, p) -> "KForm":
        p = Polynomial.coerce(p)
        return cls._raw(0, {(): p} if p else {})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, index) -> Polynomial:
        return self._coeffs.get(tuple(index), ZERO)

    def coefficient(self, *index) -> Polynomial:
        """Coefficient of ``e^{index}``; unsorted indices pick up the permutation sign."""
        s = permutation_sign(index)
        if not s:
            return ZERO
        return self[tuple(sorted(index))] * s

    def top_coefficient(self) -> Polynomial:
        if self.degree != NVARS:
            raise ValueError("top_coefficient needs a 7-form")
        return self[AXES]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self._coeffs.values())

    def at(self, pt: Sequence) -> "KForm":
        """Freeze every coefficient at ``pt`` (exact points only)."""
        return KForm._raw(self.degree, {
            i: v for i, c in self._coeffs.items()
            if (v := Polynomial.const(c.evaluate(pt)))
        })

    # -- linear structure ------------------------------------------------
    def _same_degree(self, other):
        if not isinstance(other, KForm):
            raise TypeError(f"cannot combine KForm with {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same_degree(other)
        out = dict(self._coeffs)
        for i, c in other._coeffs.items():
            s = out[i] + c if i in out else c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return KForm._raw(self.degree, out)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return KForm._raw(self.degree, {i: -c for i, c in self._coeffs.items()})

    def __sub__(self, other):
        self._same_degree(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, KForm):
            return NotImplemented
        try:
            p = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return KForm._raw(self.degree, {
            i: v for i, c in self._coeffs.items() if (v := c * p)
        })

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / as_fraction(other))

    def wedge(self, *others: "KForm") -> "KForm":
        return wedge(self, *others)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def sorted_items(self):
        return sorted(self._coeffs.items())

    def pretty(self, names=None) -> str:
        if not self._coeffs:
            return "0"
        chunks = []
        for index, c in self.sorted_items():
            basis = "e" + "".join(map(str, index)) if index else "1"
            text = c.pretty(names) if names else c.pretty()
            if c.is_constant():
                v = c.constant_value()
                coeff = "" if abs(v) == 1 else f"{abs(v)}*"
                chunks.append(("-" if v < 0 else "+", f"{coeff}{basis}"))
            else:
                chunks.append(("+", f"({text})*{basis}"))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"KForm({self.degree}, {self.pretty()})"


def e(*index: int) -> KForm:
    """Basis monomial ``dx_{i1} ^ ... ^ dx_{ik}``; any index order is accepted."""
    s = permutation_sign(index)
    if not s:
        return KForm.zero(len(index))
    return KForm._raw(len(index), {tuple(sorted(index)): Polynomial.const(s)})


def dx(axis: int) -> KForm:
    return e(axis)


def volume_monomial() -> KForm:
    return e(*AXES)


def one_form(components: Sequence) -> KForm:
    """``sum_i components[i-1] dx_i``."""
    if len(components) != NVARS:
        raise ValueError("need seven components")
    return KForm(1, {(i,): c for i, c in zip(AXES, components)})


def _wedge2(a: KForm, b: KForm) -> KForm:
    deg = a.degree + b.degree
    if deg > NVARS:
        return KForm.zero(deg)
    out: dict = {}
    for ia, ca in a._coeffs.items():
        sa = set(ia)
        for ib, cb in b._coeffs.items():
            if sa.intersection(ib):
                continue
            merged = ia + ib
            sign = permutation_sign(merged)
            key = tuple(sorted(merged))
            term = ca * cb
            if sign < 0:
                term = -term
            s = out[key] + term if key in out else term
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return KForm._raw(deg, out)


def wedge(*forms: KForm) -> KForm:
    if not forms:
        return KForm.scalar(1)
    out = forms[0]
    for f in forms[1:]:
        out = _wedge2(out, f)
    return out


def wedge_power(a: KForm, n: int) -> KForm:
    out = KForm.scalar(1)
    for _ in range(n):
        out = _wedge2(out, a)
    return out


def exterior_derivative(a: KForm) -> KForm:
    out: dict = {}
    for index, c in a._coeffs.items():
        for j in AXES:
            if j in index:
                continue
            dc = c.partial(j)
            if not dc:
                continue
            # dx_j ^ e^I: move dx_j past the indices smaller than j
            pos = sum(1 for i in index if i < j)
            key = index[:pos] + (j,) + index[pos:]
            term = -dc if pos % 2 else dc
            s = out[key] + term if key in out else term
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return KForm._raw(a.degree + 1, out)


d = exterior_derivative


class VectorField:
    """Seven polynomial components in the coordinate frame ``d/dx_1 .. d/dx_7``."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence):
        comps = tuple(Polynomial.coerce(c) for c in components)
        if len(comps) != NVARS:
            raise ValueError(f"a vector field needs {NVARS} components, got {len(comps)}")
        self.components = comps

    @classmethod
    def zero(cls) -> "VectorField":
        return cls([ZERO] * NVARS)

    def __getitem__(self, axis: int) -> Polynomial:
        """Component along ``d/dx_axis`` (1-based)."""
        return self.components[axis - 1]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_constant(self) -> bool:
        return all(c.is_constant() for c in self.components)

    def at(self, pt: Sequence) -> tuple:
        return tuple(c.evaluate(pt) for c in self.components)

    def constant_values(self) -> tuple:
        return tuple(c.constant_value() for c in self.components)

    def __add__(self, other):
        return VectorField([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return VectorField([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return VectorField([-a for a in self.components])

    def __mul__(self, other):
        if isinstance(other, VectorField):
            return NotImplemented
        p = Polynomial.coerce(other)
        return VectorField([a * p for a in self.components])

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / as_fraction(other))

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def pretty(self, names=None) -> str:
        names = names or DEFAULT_NAMES
        parts = []
        for n, c in zip(names, self.components):
            if not c:
                continue
            if c.is_constant():
                v = c.constant_value()
                parts.append(f"d/d{n}" if v == 1 else f"-d/d{n}" if v == -1 else f"{v}*d/d{n}")
            else:
                parts.append(f"({c.pretty(names)})*d/d{n}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"VectorField({self.pretty()})"


def coordinate_field(axis: int) -> VectorField:
    """The coordinate vector field ``d/dx_axis``."""
    comps = [ZERO] * NVARS
    comps[axis - 1] = Polynomial.const(1)
    return VectorField(comps)


def constant_field(values: Sequence) -> VectorField:
    return VectorField([Polynomial.const(v) for v in values])


def interior_product(v: VectorField, a: KForm) -> KForm:
    """Contract ``v`` into the first slot of ``a``."""
    if a.degree == 0:
        raise ValueError("interior product of a 0-form is undefined")
    out: dict = {}
    for index, c in a._coeffs.items():
        for s, axis in enumerate(index):
            vi = v.components[axis - 1]
            if not vi:
                continue
            key = index[:s] + index[s + 1:]
            term = vi * c
            if s % 2:
                term = -term
            acc = out[key] + term if key in out else term
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return KForm._raw(a.degree - 1, out)


iota = interior_product


def pair(alpha: KForm, v: VectorField) -> Polynomial:
    """``alpha(v)`` for a 1-form, as a polynomial."""
    if alpha.degree != 1:
        raise ValueError("pair() needs a 1-form")
    return interior_product(v, alpha)[()]


def _vector_values(v, pt):
    if isinstance(v, VectorField):
        return v.at(pt)
    vals = tuple(v)
    if len(vals) != NVARS:
        raise ValueError("vector must have seven components")
    return vals


def eval_form(a: KForm, pt: Sequence, vectors: Sequence):
    """Evaluate ``a(v_1, ..., v_k)`` at ``pt``; vectors may be fields or 7-tuples."""
    if len(vectors) != a.degree:
        raise ValueError(f"a {a.degree}-form takes {a.degree} vectors, got {len(vectors)}")
    vals = [_vector_values(v, pt) for v in vectors]
    total = Fraction(0)
    for index, c in a._coeffs.items():
        coef = c.evaluate(pt)
        if not coef:
            continue
        if index:
            m = [[vals[col][axis - 1] for col in range(len(vals))] for axis in index]
            coef = coef * det(m)
        total = total + coef
    return total


def constant_primitive(a: KForm) -> KForm:
    """A polynomial primitive of a constant form: ``c e^{i1..ik} -> c x_{i1} e^{i2..ik}``."""
    if a.degree == 0:
        raise ValueError("0-forms have no primitive")
    if not a.is_constant():
        raise ValueError("constant_primitive needs constant coefficients")
    out = KForm.zero(a.degree - 1)
    for index, c in a.items():
        out = out + KForm(a.degree - 1, {index[1:]: c * Polynomial.var(index[0])})
    return out


def random_form(rng, degree: int, density: float = 0.5, polynomial: bool = True,
                **poly_kw) -> KForm:
    """Random form of the given degree; constant rational coefficients unless ``polynomial``."""
    coeffs = {}
    for index in combinations(AXES, degree):
        if rng.random() > density:
            continue
        if polynomial:
            coeffs[index] = random_polynomial(rng, **poly_kw)
        else:
            coeffs[index] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return KForm(degree, coeffs)


def random_constant_field(rng, span: int = 5) -> VectorField:
    return constant_field([Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in AXES])
