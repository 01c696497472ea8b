"""Check verdicts, residual-carrying reports, and the sampling used for
nonvanishing certification."""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exterior import KForm, Polynomial, VectorField
from .exterior.polynomial import DEFAULT_NAMES, NVARS, parse_polynomial


class Verdict(str, enum.Enum):
    PROVEN = "proven"
    SAMPLED = "verified-on-samples"
    FAILED = "failed"
    SKIPPED = "not-asserted"

    @property
    def ok(self) -> bool:
        return self is not Verdict.FAILED


def combine(verdicts) -> Verdict | None:
    verdicts = [v for v in verdicts if v is not Verdict.SKIPPED]
    if not verdicts:
        return None
    if Verdict.FAILED in verdicts:
        return Verdict.FAILED
    if Verdict.SAMPLED in verdicts:
        return Verdict.SAMPLED
    return Verdict.PROVEN


@dataclass
class Clause:
    name: str
    verdict: Verdict
    residual: Any = None
    detail: str = ""
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.verdict.ok


def exact_clause(name: str, lhs, rhs, detail: str = "") -> Clause:
    """Exact equality check; the residual ``lhs - rhs`` is kept on failure."""
    residual = lhs - rhs
    zero = residual.is_zero()
    return Clause(name, Verdict.PROVEN if zero else Verdict.FAILED,
                  None if zero else residual, detail)


@dataclass
class CheckReport:
    title: str
    clauses: list[Clause] = field(default_factory=list)
    derived: dict[str, Any] = field(default_factory=dict)

    def add(self, clause: Clause) -> Clause:
        self.clauses.append(clause)
        return clause

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def verdict(self) -> Verdict | None:
        return combine(c.verdict for c in self.clauses)

    @property
    def passed(self) -> bool:
        v = self.verdict
        return v is not None and v.ok

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.verdict is Verdict.FAILED]

    def to_dict(self, names: Sequence[str] = DEFAULT_NAMES) -> dict:
        v = self.verdict
        return {
            "title": self.title,
            "verdict": v.value if v else "no clauses",
            "clauses": [
                {
                    "name": c.name,
                    "verdict": c.verdict.value,
                    "detail": c.detail,
                    "residual": encode_value(c.residual, names),
                    "witness": encode_value(c.witness, names),
                }
                for c in self.clauses
            ],
            "derived": {k: encode_value(v, names) for k, v in self.derived.items()},
        }

    @classmethod
    def from_dict(cls, data: dict, names: Sequence[str] = DEFAULT_NAMES) -> "CheckReport":
        return cls(
            title=data["title"],
            clauses=[
                Clause(c["name"], Verdict(c["verdict"]), decode_value(c["residual"], names),
                       c["detail"], decode_value(c["witness"], names))
                for c in data["clauses"]
            ],
            derived={k: decode_value(v, names) for k, v in data["derived"].items()},
        )


# ``CompatReport`` carries derived quantities alongside clause verdicts; the
# structure is shared with the lower-level checks.
CompatReport = CheckReport


def encode_kform(f: KForm, names: Sequence[str] = DEFAULT_NAMES) -> dict:
    return {
        "degree": f.degree,
        "terms": [{"indices": list(i), "coeff": c.to_string(names)} for i, c in f.sorted_items()],
    }


def decode_kform(data: dict, names: Sequence[str] = DEFAULT_NAMES) -> KForm:
    return KForm(data["degree"], {tuple(t["indices"]): parse_polynomial(t["coeff"], names)
                                  for t in data["terms"]})


def encode_value(v, names: Sequence[str] = DEFAULT_NAMES):
    """Tagged JSON encoding of residuals, witnesses and derived quantities."""
    if v is None or isinstance(v, (bool, str, int)):
        return v
    if isinstance(v, float):
        return {"float": repr(v)}
    if isinstance(v, Fraction):
        return {"rational": str(v)}
    if isinstance(v, Polynomial):
        return {"polynomial": v.to_string(names)}
    if isinstance(v, KForm):
        return {"form": encode_kform(v, names)}
    if isinstance(v, VectorField):
        return {"field": [c.to_string(names) for c in v.components]}
    if isinstance(v, (list, tuple)):
        return {"list": [encode_value(x, names) for x in v]}
    if isinstance(v, dict):
        return {"map": {str(k): encode_value(x, names) for k, x in v.items()}}
    if isinstance(v, enum.Enum):
        return v.value
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_value(v, names: Sequence[str] = DEFAULT_NAMES):
    if v is None or isinstance(v, (bool, str, int)):
        return v
    (tag, payload), = v.items()
    if tag == "float":
        return float(payload)
    if tag == "rational":
        return Fraction(payload)
    if tag == "polynomial":
        return parse_polynomial(payload, names)
    if tag == "form":
        return decode_kform(payload, names)
    if tag == "field":
        return VectorField([parse_polynomial(c, names) for c in payload])
    if tag == "list":
        return tuple(decode_value(x, names) for x in payload)
    if tag == "map":
        return {k: decode_value(x, names) for k, x in payload.items()}
    raise ValueError(f"unknown tag {tag!r}")


@dataclass(frozen=True)
class SamplingSpec:
    """Where non-constant polynomials are probed: a lattice plus seeded random points."""

    grid: int = 4
    low: Fraction = Fraction(-1)
    high: Fraction = Fraction(1)
    samples: int = 64
    seed: int = 0

    def points(self) -> list[tuple]:
        low, high = Fraction(self.low), Fraction(self.high)
        if self.grid == 1:
            axis = [(low + high) / 2]
        elif self.grid > 1:
            axis = [low + (high - low) * k / (self.grid - 1) for k in range(self.grid)]
        else:
            axis = []
        pts = list(itertools.product(axis, repeat=NVARS)) if axis else []
        rng = random.Random(self.seed)
        for _ in range(self.samples):
            pts.append(tuple(low + (high - low) * Fraction(rng.randint(0, 1000), 1000)
                             for _ in range(NVARS)))
        return pts


DEFAULT_SAMPLING = SamplingSpec()


@dataclass
class Nonvanishing:
    verdict: Verdict
    witness: tuple | None = None
    min_abs: Fraction | None = None


def certify_nonvanishing(p: Polynomial, sampling: SamplingSpec = DEFAULT_SAMPLING) -> Nonvanishing:
    """A nonzero constant is a proof; otherwise probe the sample points.

    Any exact zero or sign change among the samples fails the certificate.
    """
    if p.is_constant():
        c = p.constant_value()
        if c:
            return Nonvanishing(Verdict.PROVEN, None, abs(c))
        return Nonvanishing(Verdict.FAILED, (Fraction(0),) * NVARS, Fraction(0))
    sign = 0
    first_pt = None
    min_abs = None
    for pt in sampling.points():
        v = p.evaluate(pt)
        if v == 0:
            return Nonvanishing(Verdict.FAILED, pt, Fraction(0))
        s = 1 if v > 0 else -1
        if sign and s != sign:
            return Nonvanishing(Verdict.FAILED, pt, min_abs)
        if not sign:
            sign, first_pt = s, pt
        a = abs(v)
        if min_abs is None or a < min_abs:
            min_abs = a
    if sign == 0:
        return Nonvanishing(Verdict.FAILED, None, None)
    return Nonvanishing(Verdict.SAMPLED, None, min_abs)


def nonvanishing_clause(name: str, p: Polynomial, sampling: SamplingSpec = DEFAULT_SAMPLING) -> Clause:
    cert = certify_nonvanishing(p, sampling)
    detail = f"value {p.pretty()}"
    if cert.verdict is Verdict.FAILED:
        detail += " vanishes or changes sign"
    elif cert.verdict is Verdict.SAMPLED:
        detail += f"; min |value| on samples = {cert.min_abs}"
    return Clause(name, cert.verdict, None if cert.verdict.ok else p, detail, cert.witness)


def point(values: Sequence) -> tuple:
    vals = tuple(Fraction(v) if not isinstance(v, float) else v for v in values)
    if len(vals) != NVARS:
        raise ValueError("a point has seven coordinates")
    return vals
