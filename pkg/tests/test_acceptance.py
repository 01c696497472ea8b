"""Acceptance criteria 1-12, one test each.

Each test prints a single ``PASS``/``FAIL`` line; the lines are collected and
repeated in the terminal summary.  Run directly with ``python
tests/test_acceptance.py`` for the summary alone.
"""
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from g2kit import (
    ContactG2Structure, G2Structure, KForm, VectorField, build_acms, check_contact_g2,
    check_fundamental_form, check_decomposable_contraction, constant_field, coordinate_field, d, e,
    hodge_star, identity_suite, interior_product, lambda2_ranks, metric_from_phi, one_form,
    project_lambda2, random_form, torsion_flags, verify_acs, verify_metric_compat,
    verify_metric_structure, volume_form, wedge,
)
from g2kit.exterior import IDENTITY
from g2kit.report import Verdict
from g2kit.runner import bundled_names, load_scenario, render_report, run_checks

START = time.perf_counter()
RESULTS: dict[int, str] = {}

S0 = G2Structure.standard()
PHI0 = S0.phi
TOP = e(1, 2, 3, 4, 5, 6, 7)
ALPHA0 = one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])


def record(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def rand_vec(rng, span=5):
    return [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(7)]


def unit_vector(rng):
    w = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(6)]
    n = sum(x * x for x in w)
    return [2 * x / (n + 1) for x in w] + [(n - 1) / (n + 1)]


def test_criterion_01_motivating_example():
    t0 = time.perf_counter()
    X = coordinate_field(7)
    Y = VectorField(["-x7", 0, "x5", 0, "-x3", -1, 0])
    r1 = d(ALPHA0) - interior_product(coordinate_field(1), PHI0)
    r2 = ALPHA0 - interior_product(Y, interior_product(X, PHI0))
    dt = time.perf_counter() - t0
    ok = r1.is_zero() and r2.is_zero() and dt < 1.0
    record(1, ok, f"d alpha0 - iota_d1 phi0 = {r1}, alpha0 - iota_Y iota_X phi0 = {r2}, {dt * 1e3:.1f} ms")


def test_criterion_02_second_example():
    alpha = one_form(["x3", "1", "0", "-x6", "x7", "0", "0"])
    X = coordinate_field(7)
    Y = VectorField([0, "-x7", "x6", 0, 1, "-x3", 0])
    r1 = d(alpha) - interior_product(coordinate_field(2), PHI0)
    r2 = alpha - interior_product(Y, interior_product(X, PHI0))
    record(2, r1.is_zero() and r2.is_zero(), f"A-residual {r1}, B-residual {r2}")


def test_criterion_03_metric_volume_and_double_cross():
    from g2kit import cross_product
    rng = random.Random(3)
    bad2 = bad3 = 0
    n = 200
    for _ in range(n):
        u, v = constant_field(rand_vec(rng)), constant_field(rand_vec(rng))
        lhs = wedge(interior_product(u, PHI0), interior_product(v, PHI0), PHI0)
        bad2 += lhs != TOP * (6 * S0.inner(u, v))
        uuv = cross_product(u, cross_product(u, v, S0), S0)
        bad3 += uuv != v * (-S0.norm2(u)) + u * S0.inner(u, v)
    record(3, bad2 == 0 and bad3 == 0,
           f"metric-volume identity {n - bad2}/{n} pairs, double cross {n - bad3}/{n} pairs")


def test_criterion_04_metric_extraction():
    rng = random.Random(4)
    worst = 0.0
    for _ in range(10):
        p = tuple(rng.uniform(-1, 1) for _ in range(7))
        worst = max(worst, float(np.max(np.abs(metric_from_phi(PHI0, p).metric - np.eye(7)))))
    compat = verify_metric_compat(PHI0, IDENTITY, volume_form())
    ok = worst < 1e-12 and compat.verdict is Verdict.PROVEN
    record(4, ok, f"max |g - I| = {worst:.2e} over 10 points; compat {compat.verdict.value}")


def test_criterion_05_lambda2_split():
    rng = random.Random(5)
    n = 200
    sums = minus2 = plus2 = annihilated = 0
    for _ in range(n):
        beta = random_form(rng, 2, polynomial=False)
        split = project_lambda2(beta, S0)
        sums += split.part7 + split.part14 == beta
        image = hodge_star(wedge(PHI0, split.part7))
        minus2 += image == split.part7 * -2
        plus2 += image == split.part7 * 2
        annihilated += wedge(S0.star_phi, split.part14).is_zero()
    ranks = lambda2_ranks(S0)
    ok = sums == minus2 == annihilated == n and ranks == (7, 14)
    record(5, ok, f"sum {sums}/{n}, *(phi0^part7) = -2 part7 {minus2}/{n} "
                  f"(= +2 part7 {plus2}/{n} under the metric-volume orientation), "
                  f"*phi0^part14 = 0 {annihilated}/{n}, ranks {ranks}")


def test_criterion_06_almost_contact_metric():
    rng = random.Random(6)
    n = 50
    good = 0
    for _ in range(n):
        R = constant_field(unit_vector(rng))
        acms = build_acms(S0, R)
        acs = verify_acs(acms.J, acms.R, acms.alpha)
        full = verify_metric_structure(acms)
        good += acs.verdict is Verdict.PROVEN and full.verdict is Verdict.PROVEN
    record(6, good == n, f"{good}/{n} random rational unit R pass (i), (ii), J(R) = 0, "
                         "alpha o J = 0 and the metric equation exactly")


def test_criterion_07_fundamental_form():
    r = check_fundamental_form(S0, coordinate_field(1), ALPHA0)
    summary = ", ".join(f"{c.name}: {c.verdict.value}" for c in r.clauses)
    record(7, r.verdict is Verdict.PROVEN, summary)


def test_criterion_08_identity_suites():
    suite = identity_suite(S0, trials=500, seed=0)
    rng = random.Random(8)
    dd_bad = sum(not d(d(random_form(rng, k, max_terms=3, max_degree=3))).is_zero()
                 for k in range(6) for _ in range(200))
    ss_bad = sum(hodge_star(hodge_star(a)) != a
                 for k in range(8) for a in (random_form(rng, k) for _ in range(60)))
    ok = suite.verdict is Verdict.PROVEN and dd_bad == 0 and ss_bad == 0
    failed = [c.name for c in suite.failures()]
    record(8, ok, f"{len(suite.clauses)} identities x 500 trials {suite.verdict.value}"
                  f"{' ' + str(failed) if failed else ''}; d o d failures {dd_bad}/1200; "
                  f"** failures {ss_bad}/480")


def test_criterion_09_volume_identity():
    tstar = load_scenario("tstar_r3")
    tuples = [
        ("R^7", S0, coordinate_field(1), ALPHA0),
        ("T*R^3 x R", G2Structure(tstar.phi_form), tstar.fields["R"], tstar.forms["alpha"]),
    ]
    parts = []
    ok = True
    for label, s, R, alpha in tuples:
        r = check_contact_g2(ContactG2Structure(s, R, alpha, 1, 1))
        c = r.clause("alpha' ^ (d alpha')^3 = 6 f g |R|^2 Vol")
        top = r.derived["contact_volume"]
        ok &= c.verdict is Verdict.PROVEN and top == TOP * 6
        parts.append(f"{label}: {top}")
    record(9, ok, "; ".join(parts))


def test_criterion_10_torsion_flags():
    flags = {"phi0": torsion_flags(S0)}
    for name in ("cy_times_r", "k4_times_r3", "tstar_r3"):
        flags[name] = torsion_flags(G2Structure(load_scenario(name).phi_form))
    ok = all(f == (True, True) for f in flags.values())
    record(10, ok, ", ".join(f"{k} {v}" for k, v in flags.items()))


def test_criterion_11_decomposability_diagnostic():
    r = check_decomposable_contraction(S0, coordinate_field(7), coordinate_field(6), coordinate_field(1))
    h1 = r.clause("iota_Z phi = Y^b ^ X^b")
    lhs = r.derived.get("(iota_Z phi)^2 ^ phi")
    rhs = r.derived.get("(Y^b ^ X^b)^2 ^ phi")
    conclusions = [c for c in r.clauses if c.name.startswith(("d alpha", "alpha ^", "Z/"))]
    ok = (h1.verdict is Verdict.FAILED and lhs == TOP * 6 and rhs is not None and rhs.is_zero()
          and len(conclusions) == 3 and all(c.verdict is Verdict.SKIPPED for c in conclusions))
    record(11, ok, f"hypothesis iota_Z phi = Y^b ^ X^b {h1.verdict.value}; diagnostic {lhs} versus {rhs}; "
                   f"conclusions {sorted({c.verdict.value for c in conclusions})}")


def test_criterion_12_bundled_scenarios():
    verdicts = {}
    identical = True
    for name in bundled_names():
        first = run_checks(load_scenario(name))
        second = run_checks(load_scenario(name))
        verdicts[name] = first.verdict
        identical &= render_report(first, "json").encode() == render_report(second, "json").encode()
    elapsed = time.perf_counter() - START
    ok = (len(verdicts) == 5 and all(v == Verdict.PROVEN.value for v in verdicts.values())
          and identical and elapsed < 30)
    record(12, ok, f"{verdicts}; JSON byte-identical: {identical}; "
                   f"acceptance suite {elapsed:.1f} s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
