from fractions import Fraction
from itertools import combinations

from hypothesis import settings, strategies as st

from g2kit import KForm, Polynomial, VectorField

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-4, max_value=4)
exponents = st.tuples(*[st.integers(0, 2)] * 7).filter(lambda e: sum(e) <= 3)


@st.composite
def polynomials(draw, max_terms=3, constant=False):
    if constant:
        return Polynomial.const(draw(rationals))
    terms = draw(st.dictionaries(exponents, rationals, max_size=max_terms))
    return Polynomial(terms)


@st.composite
def forms(draw, degree=None, constant=False, max_terms=4):
    k = draw(st.integers(0, 7)) if degree is None else degree
    basis = list(combinations(range(1, 8), k))
    chosen = draw(st.lists(st.sampled_from(basis), max_size=max_terms, unique=True))
    return KForm(k, {i: draw(polynomials(max_terms=2, constant=constant)) for i in chosen})


@st.composite
def fields(draw, constant=True):
    return VectorField([draw(polynomials(max_terms=2, constant=constant)) for _ in range(7)])


def pt(*values):
    return tuple(Fraction(v) for v in values)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
