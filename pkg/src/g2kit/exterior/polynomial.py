"""Sparse multivariate polynomials over the rationals in seven variables.

Exponent vectors are 7-tuples of non-negative ints; coefficients are
:class:`fractions.Fraction`.  Zero coefficients are never stored, so the zero
polynomial is the empty term map and equality is structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

NVARS = 7
DEFAULT_NAMES = tuple(f"x{i}" for i in range(1, NVARS + 1))

_ZERO_EXP = (0,) * NVARS


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and rational strings to ``Fraction``; reject floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _grlex_key(exp):
    # descending total degree, then descending lex on (x1, ..., x7)
    return (-sum(exp), tuple(-e for e in exp))


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp!r}")
                c = as_fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = as_fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, axis: int, power: int = 1) -> "Polynomial":
        """The monomial ``x_axis ** power`` (axis is 1-based)."""
        if not 1 <= axis <= NVARS:
            raise ValueError(f"axis must lie in 1..{NVARS}, got {axis}")
        exp = [0] * NVARS
        exp[axis - 1] = power
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        """Accept a Polynomial, an exact scalar, or polynomial text in x1..x7."""
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, str):
            return parse_polynomial(value)
        return cls.const(value)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            st, ot = self._terms, other._terms
            if not st or not ot:
                return Polynomial._raw({})
            if len(ot) == 1 and _ZERO_EXP in ot:
                c = ot[_ZERO_EXP]
                return Polynomial._raw({e: v * c for e, v in st.items()})
            if len(st) == 1 and _ZERO_EXP in st:
                c = st[_ZERO_EXP]
                return Polynomial._raw({e: v * c for e, v in ot.items()})
            out: dict = {}
            for e1, c1 in st.items():
                for e2, c2 in ot.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, 0) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
            return Polynomial._raw(out)
        if type(other) not in (int, Fraction):
            try:
                other = as_fraction(other)
            except TypeError:
                return NotImplemented
        if not other:
            return Polynomial._raw({})
        return Polynomial._raw({e: v * other for e, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def partial(self, axis: int) -> "Polynomial":
        """Exact partial derivative with respect to ``x_axis`` (1-based)."""
        k = axis - 1
        out = {}
        for exp, c in self._terms.items():
            p = exp[k]
            if p:
                e = list(exp)
                e[k] = p - 1
                out[tuple(e)] = c * p
        return Polynomial._raw(out)

    def __call__(self, pt: Sequence):
        return self.evaluate(pt)

    def evaluate(self, pt: Sequence):
        """Evaluate at a 7-point; exact when every coordinate is rational."""
        if len(pt) != NVARS:
            raise ValueError(f"point must have {NVARS} coordinates")
        total = 0
        for exp, c in self._terms.items():
            term = c
            for x, e in zip(pt, exp):
                if e:
                    term = term * x**e
            total = total + term
        if isinstance(total, int):
            total = Fraction(total)
        return total

    def substitute_constant(self, pt: Sequence) -> "Polynomial":
        return Polynomial.const(self.evaluate(pt))

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        try:
            return self._terms == Polynomial.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    # -- text ------------------------------------------------------------
    def to_string(self, names: Sequence[str] = DEFAULT_NAMES) -> str:
        """Canonical serialization: every term carries its rational coefficient."""
        if not self._terms:
            return "0"
        parts = []
        for i, (exp, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            body = str(abs(c))
            for name, e in zip(names, exp):
                if e == 1:
                    body += f"*{name}"
                elif e > 1:
                    body += f"*{name}^{e}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def pretty(self, names: Sequence[str] = DEFAULT_NAMES) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (exp, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
            )
            mag = abs(c)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text: str, names: Sequence[str] = DEFAULT_NAMES) -> Polynomial:
    """Parse ``[sign] rational [* var [^ power]]...`` terms joined by ``+``/``-``.

    A leading coefficient may be omitted (``x3`` means ``1*x3``).
    """
    index = {n: i for i, n in enumerate(names)}
    if len(index) != NVARS:
        raise ValueError("need exactly seven distinct variable names")
    tokens = []
    pos = 0
    text = text.strip()
    if not text:
        raise PolynomialSyntaxError("empty polynomial")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos}: {text[pos:]!r}")
        num, ident, caret, star, sign = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            tokens.append(("var", ident))
        elif caret:
            tokens.append(("^", caret))
        elif star:
            tokens.append(("*", star))
        else:
            tokens.append(("sign", sign))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    result: dict = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolynomialSyntaxError("terms must be separated by '+' or '-'")
        first = False
        coeff = Fraction(1)
        exp = [0] * NVARS
        expect_factor = True
        saw_factor = False
        while i < n and expect_factor:
            kind, val = tokens[i]
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                if val not in index:
                    raise PolynomialSyntaxError(f"unknown variable {val!r}")
                i += 1
                power = 1
                if i < n and tokens[i][0] == "^":
                    if i + 1 >= n or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                        raise PolynomialSyntaxError("exponent must be a non-negative integer")
                    power = int(tokens[i + 1][1])
                    i += 2
                exp[index[val]] += power
            else:
                raise PolynomialSyntaxError(f"unexpected {val!r}")
            saw_factor = True
            if i < n and tokens[i][0] == "*":
                i += 1
                expect_factor = True
                if i >= n:
                    raise PolynomialSyntaxError("dangling '*'")
            else:
                expect_factor = False
        if not saw_factor:
            raise PolynomialSyntaxError("missing term after sign")
        key = tuple(exp)
        s = result.get(key, 0) + sign * coeff
        if s:
            result[key] = s
        else:
            result.pop(key, None)
    return Polynomial._raw(result)


def random_polynomial(rng, max_terms: int = 3, max_degree: int = 2,
                      coeff_range: int = 4, axes: Iterable[int] = range(1, NVARS + 1)) -> Polynomial:
    """Small random polynomial with integer-over-small-denominator coefficients."""
    axes = list(axes)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = [0] * NVARS
        for _ in range(rng.randint(0, max_degree)):
            exp[rng.choice(axes) - 1] += 1
        c = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + c
    return Polynomial(terms)


ZERO = Polynomial()
ONE = Polynomial.const(1)
