"""A-/B-compatibility, contact-G2-structures, the decomposability-hypothesis
checker, and a randomized suite of the exterior identities they rest on."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .contact import contact_certificate, contact_volume
from .exterior import (
    KForm, Polynomial, VectorField, constant_primitive, d, flat, interior_product,
    pair, random_constant_field, random_form, wedge,
)
from .g2core import G2Structure, cross_product
from .report import (
    DEFAULT_SAMPLING, Clause, CompatReport, SamplingSpec, Verdict, certify_nonvanishing,
    exact_clause, nonvanishing_clause,
)


class InvariantViolation(ValueError):
    pass


def _reciprocal(p: Polynomial):
    if p.is_constant() and p.constant_value():
        return 1 / p.constant_value()
    return f"1/({p.pretty()})"


def check_a_compatible(s: G2Structure, alpha: KForm, R: VectorField,
                       sampling: SamplingSpec = DEFAULT_SAMPLING) -> CompatReport:
    """d alpha = iota_R phi with alpha contact and alpha(R) nowhere zero.

    Since d alpha = iota_R phi forces iota_R d alpha = 0, the rescaling
    f = 1/alpha(R) makes fR the Reeb field of alpha itself.
    """
    report = CompatReport("A-compatibility")
    report.add(exact_clause("d alpha = iota_R phi", d(alpha), interior_product(R, s.phi)))
    aR = pair(alpha, R)
    report.add(nonvanishing_clause("alpha(R) nowhere zero", aR, sampling))
    cert = contact_certificate(alpha, sampling)
    report.add(cert.as_clause())
    report.add(exact_clause("iota_R d alpha = 0", interior_product(R, d(alpha)), KForm.zero(1)))
    report.derived["contact_volume"] = cert.top
    if report.passed:
        f = _reciprocal(aR)
        report.derived["f"] = f
        if isinstance(f, Fraction):
            report.derived["reeb_field"] = R * f
    return report


def check_b_compatible(s: G2Structure, alpha: KForm, X: VectorField, Y: VectorField,
                       sampling: SamplingSpec = DEFAULT_SAMPLING) -> CompatReport:
    report = CompatReport("B-compatibility")
    contracted = interior_product(Y, interior_product(X, s.phi))
    report.add(exact_clause("alpha = iota_Y iota_X phi", alpha, contracted))
    cert = contact_certificate(alpha, sampling)
    report.add(cert.as_clause())
    report.derived["contact_volume"] = cert.top
    return report


@dataclass(frozen=True)
class ContactG2Structure:
    """(phi, R, alpha, f, g) with f, g and R nowhere zero.

    The two defining equations are not enforced here; :func:`check_contact_g2`
    reports them.
    """

    s: G2Structure
    R: VectorField
    alpha: KForm
    f: Polynomial
    g_fn: Polynomial
    sampling: SamplingSpec = DEFAULT_SAMPLING

    def __post_init__(self):
        object.__setattr__(self, "f", Polynomial.coerce(self.f))
        object.__setattr__(self, "g_fn", Polynomial.coerce(self.g_fn))
        for name, p in (("f", self.f), ("g", self.g_fn), ("|R|^2", self.s.norm2(self.R))):
            cert = certify_nonvanishing(p, self.sampling)
            if not cert.verdict.ok:
                raise InvariantViolation(f"{name} = {p.pretty()} vanishes at {cert.witness}")


def check_contact_g2(c: ContactG2Structure,
                     sampling: SamplingSpec | None = None) -> CompatReport:
    """Both defining equations plus the consequences derived from them.

    With alpha' = g alpha the Reeb equations for R' = R/(fg) are equivalent
    to alpha'(R) = fg and iota_R d alpha' = 0, which are checked exactly
    without dividing by fg.
    """
    sampling = sampling or c.sampling
    s, R, alpha, f, g = c.s, c.R, c.alpha, c.f, c.g_fn
    report = CompatReport("contact-G2-structure")
    report.add(exact_clause("alpha(R) = f", pair(alpha, R), f))
    alpha_p = alpha * g
    dalpha_p = d(alpha_p)
    report.add(exact_clause("d(g alpha) = iota_R phi", dalpha_p, interior_product(R, s.phi)))
    report.add(nonvanishing_clause("f nowhere zero", f, sampling))
    report.add(nonvanishing_clause("g nowhere zero", g, sampling))
    top = contact_volume(alpha_p)
    report.add(exact_clause("alpha' ^ (d alpha')^3 = 6 f g |R|^2 Vol", top,
                            s.vol * (f * g * s.norm2(R) * 6)))
    report.add(exact_clause("alpha'(R') = 1  [alpha'(R) = f g]", pair(alpha_p, R), f * g))
    report.add(exact_clause("iota_R' d alpha' = 0", interior_product(R, dalpha_p), KForm.zero(1)))
    report.add(contact_certificate(alpha, sampling).as_clause("alpha is contact"))
    induced = check_a_compatible(s, alpha_p, R, sampling)
    report.add(Clause("ker(alpha) is A-compatible", induced.verdict or Verdict.FAILED,
                      detail="via alpha' = g alpha: " + ", ".join(
                          f"{x.name}: {x.verdict.value}" for x in induced.clauses)))
    report.derived["alpha_prime"] = alpha_p
    report.derived["contact_volume"] = top
    fg = f * g
    if fg.is_constant() and fg.constant_value():
        report.derived["reeb_field"] = R / fg.constant_value()
    else:
        report.derived["reeb_scale"] = _reciprocal(fg)
    return report


def contact_g2_from_a_compatible(s: G2Structure, alpha: KForm, R: VectorField,
                                 sampling: SamplingSpec = DEFAULT_SAMPLING) -> ContactG2Structure:
    """The quintuple (phi, R, alpha, alpha(R), 1) attached to A-compatible data."""
    return ContactG2Structure(s, R, alpha, pair(alpha, R), Polynomial.const(1), sampling)


def check_decomposable_contraction(s: G2Structure, X: VectorField, Y: VectorField, Z: VectorField,
                sampling: SamplingSpec = DEFAULT_SAMPLING) -> CompatReport:
    """Hypotheses iota_Z phi = Y^b ^ X^b and d(iota_X iota_Y phi) = iota_X iota_Y *phi.

    Conclusions are asserted only when every hypothesis holds.  When the first
    fails, the report carries (iota_Z phi)^2 ^ phi next to (Y^b ^ X^b)^2 ^ phi:
    the former is 6|Z|^2 Vol, the latter vanishes for any decomposable 2-form.
    """
    report = CompatReport("decomposable contraction hypothesis")
    for name, v in (("X", X), ("Y", Y), ("Z", Z)):
        report.add(nonvanishing_clause(f"{name} nowhere zero", s.norm2(v), sampling))
    Xb, Yb = flat(X, s.metric), flat(Y, s.metric)
    iZ = interior_product(Z, s.phi)
    decomposable = wedge(Yb, Xb)
    h1 = report.add(exact_clause("iota_Z phi = Y^b ^ X^b", iZ, decomposable))
    report.add(exact_clause(
        "d(iota_X iota_Y phi) = iota_X iota_Y *phi",
        d(interior_product(X, interior_product(Y, s.phi))),
        interior_product(X, interior_product(Y, s.star_phi))))
    if not h1.ok:
        lhs = wedge(iZ, iZ, s.phi)
        rhs = wedge(decomposable, decomposable, s.phi)
        report.derived["(iota_Z phi)^2 ^ phi"] = lhs
        report.derived["(Y^b ^ X^b)^2 ^ phi"] = rhs
        report.add(Clause(
            "decomposability diagnostic", Verdict.FAILED if lhs != rhs else Verdict.PROVEN,
            lhs - rhs if lhs != rhs else None,
            f"(iota_Z phi)^2 ^ phi = {lhs.pretty()} versus (Y^b ^ X^b)^2 ^ phi = {rhs.pretty()}"))

    # Under the orientation of Vol, *(phi ^ beta) = 2 beta on the 7-dimensional
    # summand, so the chain gives 3 d alpha = 2 iota_Z phi (not -2).
    names = ("d alpha = 2/3 iota_Z phi",
             "alpha ^ (d alpha)^3 = 16/9 |Z|^4 Vol",
             "Z/|Z|^2 is the Reeb field of alpha")
    if all(c.ok for c in report.clauses):
        alpha = flat(Z, s.metric)
        report.derived["alpha"] = alpha
        report.add(exact_clause(names[0], d(alpha), iZ * Fraction(2, 3)))
        n2 = s.norm2(Z)
        report.add(exact_clause(names[1], contact_volume(alpha), s.vol * (n2 * n2 * Fraction(16, 9))))
        # iota_Z d alpha = 0 and alpha(Z) = |Z|^2 together give the Reeb field
        report.add(exact_clause(names[2], interior_product(Z, d(alpha)), KForm.zero(1)))
    else:
        for n in names:
            report.add(Clause(n, Verdict.SKIPPED, detail="hypotheses not satisfied"))
    return report


# name used by the published operation list
check_thm61 = check_decomposable_contraction


def integrand_identity(s: G2Structure, R: VectorField) -> CompatReport:
    """For constant R and phi, build alpha with d alpha = iota_R phi and check
    d alpha ^ d alpha ^ phi = 6 |R|^2 Vol."""
    report = CompatReport("closed-manifold integrand")
    beta = interior_product(R, s.phi)
    alpha = constant_primitive(beta)
    report.add(exact_clause("d alpha = iota_R phi", d(alpha), beta))
    da = d(alpha)
    report.add(exact_clause("d alpha ^ d alpha ^ phi = 6 |R|^2 Vol", wedge(da, da, s.phi),
                            s.vol * (s.norm2(R) * 6)))
    report.derived["alpha"] = alpha
    return report


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def identity_suite(s: G2Structure, trials: int = 500, seed: int = 0) -> CompatReport:
    """Randomized exact checks of the contraction, Hodge and cross-product identities.

    Every trial draws fresh rational constant vectors and forms; a clause
    records the first failing trial and its residual.
    """
    rng = random.Random(seed)
    star, phi, sphi, g = s.star, s.phi, s.star_phi, s.metric
    n = 7

    def fb(v):
        return flat(v, g)

    checks = {
        "iota_X iota_Y *phi = -*(X^b ^ Y^b ^ phi)":
            lambda X, Y, v, k, a, lam, mu: (
                interior_product(X, interior_product(Y, sphi)),
                -star(wedge(fb(X), fb(Y), phi))),
        "iota_X iota_Y phi = *(Y^b ^ X^b ^ *phi)":
            lambda X, Y, v, k, a, lam, mu: (
                interior_product(X, interior_product(Y, phi)),
                star(wedge(fb(Y), fb(X), sphi))),
        "(iota_v phi) ^ *phi = 3 *v^b":
            lambda X, Y, v, k, a, lam, mu: (
                wedge(interior_product(v, phi), sphi), star(fb(v)) * 3),
        "(iota_u phi)^(iota_v phi)^phi = 6 g(u,v) Vol":
            lambda X, Y, v, k, a, lam, mu: (
                wedge(interior_product(X, phi), interior_product(Y, phi), phi),
                s.vol * (g.inner(X, Y) * 6)),
        "phi(u,v,w) = g(u x v, w)":
            lambda X, Y, v, k, a, lam, mu: (
                interior_product(v, interior_product(Y, interior_product(X, phi))),
                KForm.scalar(g.inner(cross_product(X, Y, s), v))),
        "u x (u x v) = -|u|^2 v + g(u,v) u":
            lambda X, Y, v, k, a, lam, mu: (
                fb(cross_product(X, cross_product(X, Y, s), s)),
                fb(Y * (-g.norm2(X)) + X * g.inner(X, Y))),
        "*(phi ^ iota_v phi) = 2 iota_v phi":
            lambda X, Y, v, k, a, lam, mu: (
                star(wedge(phi, interior_product(v, phi))), interior_product(v, phi) * 2),
        "*(*phi ^ *(*phi ^ iota_v phi)) = 3 iota_v phi":
            lambda X, Y, v, k, a, lam, mu: (
                star(wedge(sphi, star(wedge(sphi, interior_product(v, phi))))),
                interior_product(v, phi) * 3),
        "iota_v *a = (-1)^k *(v^b ^ a)":
            lambda X, Y, v, k, a, lam, mu: (
                interior_product(v, star(a)), star(wedge(fb(v), a)) * _sign(a.degree)),
        "iota_v a = (-1)^(nk+n) *(v^b ^ *a)":
            lambda X, Y, v, k, a, lam, mu: (
                interior_product(v, lam),
                star(wedge(fb(v), star(lam))) * _sign(n * lam.degree + n)),
        "(iota_v lam) ^ mu = (-1)^(k+1) lam ^ (iota_v mu)":
            lambda X, Y, v, k, a, lam, mu: (
                wedge(interior_product(v, lam), mu),
                wedge(lam, interior_product(v, mu)) * _sign(lam.degree + 1)),
    }
    first_failure: dict = {}
    for t in range(trials):
        X, Y, v = (random_constant_field(rng) for _ in range(3))
        # degrees 0..6 so that *a has positive degree
        a = random_form(rng, rng.randint(0, n - 1), polynomial=False)
        k = rng.randint(1, n)
        lam = random_form(rng, k, polynomial=False)
        mu = random_form(rng, n + 1 - k, polynomial=False)
        for name, fn in checks.items():
            if name in first_failure:
                continue
            lhs, rhs = fn(X, Y, v, k, a, lam, mu)
            if lhs != rhs:
                first_failure[name] = (t, lhs - rhs)
    report = CompatReport("identity suite")
    for name in checks:
        if name in first_failure:
            t, res = first_failure[name]
            report.add(Clause(name, Verdict.FAILED, res, f"first failure at trial {t}"))
        else:
            report.add(Clause(name, Verdict.PROVEN, detail=f"{trials} random trials, seed {seed}"))
    report.derived["trials"] = trials
    report.derived["seed"] = seed
    return report
