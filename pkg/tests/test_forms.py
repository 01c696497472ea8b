import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g2kit import (
    ConstantMetric, IrrationalVolumeError, KForm, Polynomial, VectorField, coordinate_field,
    d, dx, e, eval_form, flat, hodge_star, interior_product, one_form, parse_polynomial,
    random_form, sharp, standard_phi, volume_form, wedge, wedge_power,
)
from g2kit.exterior import form_inner, permutation_sign

import oracles
from conftest import fields, forms, pt

P = parse_polynomial
ALPHA0 = one_form(["1", "-x3", "0", "-x5", "0", "-x7", "0"])
DALPHA0 = e(2, 3) + e(4, 5) + e(6, 7)


def test_one_form_helper_parses():
    assert ALPHA0 == KForm(1, {(1,): 1, (2,): P("-x3"), (4,): P("-x5"), (6,): P("-x7")})


def test_basis_wedge_antisymmetry():
    assert wedge(dx(1), dx(2)) == e(1, 2)
    assert wedge(dx(2), dx(1)) == -e(1, 2)
    assert e(2, 1) == -e(1, 2)
    assert e(1, 1).is_zero()


def test_cube_of_d_alpha0_matches_brute_force():
    expected = oracles.tensor(DALPHA0)
    t2 = oracles.tensor_wedge(expected, 2, expected, 2)
    t2 = {k: v for k, v in t2.items()}
    # re-expand the increasing components into a full tensor before the next product
    full2 = oracles.tensor(KForm(4, t2))
    t3 = oracles.tensor_wedge(full2, 4, expected, 2)
    assert t3 == {(2, 3, 4, 5, 6, 7): 6}
    assert wedge_power(DALPHA0, 3) == e(2, 3, 4, 5, 6, 7) * 6


def test_contact_volume_of_alpha0():
    assert wedge(ALPHA0, wedge_power(d(ALPHA0), 3)) == e(1, 2, 3, 4, 5, 6, 7) * 6


def test_exterior_derivative_examples():
    assert d(ALPHA0) == DALPHA0
    assert d(standard_phi()).is_zero()
    assert d(one_form(["0", "0", "x2", "0", "0", "0", "0"])) == e(2, 3)


def test_d_of_top_form_is_zero_of_degree_eight():
    top = e(1, 2, 3, 4, 5, 6, 7) * P("x1^2")
    out = d(top)
    assert out.is_zero() and out.degree == 8


def test_interior_products_of_phi0():
    phi = standard_phi()
    assert interior_product(coordinate_field(1), phi) == DALPHA0
    assert interior_product(coordinate_field(2), phi) == -e(1, 3) + e(4, 6) - e(5, 7)
    X = coordinate_field(7)
    Y = VectorField([P("-x7"), 0, P("x5"), 0, P("-x3"), -1, 0])
    assert interior_product(Y, interior_product(X, phi)) == ALPHA0


def test_interior_product_of_function_rejected():
    with pytest.raises(ValueError):
        interior_product(coordinate_field(1), KForm.scalar(1))


def test_flat_and_sharp():
    assert flat(coordinate_field(1)) == dx(1)
    assert sharp(dx(3)) == coordinate_field(3)
    g = ConstantMetric([[4 if i == j == 0 else int(i == j) for j in range(7)] for i in range(7)])
    assert flat(coordinate_field(1), g) == dx(1) * 4
    assert sharp(dx(1) * 4, g) == coordinate_field(1)


def test_hodge_examples():
    assert hodge_star(e(1, 2, 3)) == e(4, 5, 6, 7)
    assert hodge_star(KForm.scalar(1)) == e(1, 2, 3, 4, 5, 6, 7)
    assert hodge_star(e(1, 2, 3, 4, 5, 6, 7)) == KForm.scalar(1)
    expected = (e(4, 5, 6, 7) + e(2, 3, 6, 7) + e(2, 3, 4, 5) + e(1, 3, 5, 7)
                - e(1, 3, 4, 6) - e(1, 2, 5, 6) - e(1, 2, 4, 7))
    assert hodge_star(standard_phi()) == expected


def test_hodge_orientation_flips_sign():
    assert hodge_star(e(1, 2, 3), orientation=-1) == -e(4, 5, 6, 7)


def test_eval_form_examples():
    phi = standard_phi()
    basis = [coordinate_field(i) for i in range(1, 8)]
    origin = pt(*[0] * 7)
    assert eval_form(phi, origin, basis[:3]) == 1
    assert eval_form(phi, pt(3, -1, 2, 0, 5, 1, 1), [basis[1], basis[0], basis[2]]) == -1
    rng = random.Random(1)
    for _ in range(20):
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(7)]
        p = tuple(Fraction(rng.randint(-9, 9)) for _ in range(7))
        assert eval_form(d(ALPHA0), p, [basis[0], VectorField(v)]) == 0


def test_non_increasing_index_rejected():
    with pytest.raises(ValueError, match="non-increasing"):
        KForm(3, {(2, 2, 3): 1})


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((3, 1, 2)) == 1
    assert permutation_sign((1, 1)) == 0


# -- oracles -----------------------------------------------------------------

@given(forms(constant=True, max_terms=3), forms(constant=True, max_terms=3))
def test_wedge_matches_permutation_sum(a, b):
    if a.degree + b.degree > 7:
        assert wedge(a, b).is_zero()
        return
    expected = oracles.tensor_wedge(oracles.tensor(a), a.degree, oracles.tensor(b), b.degree)
    assert oracles.form_components(wedge(a, b)) == expected


@given(forms(constant=True))
def test_hodge_matches_levi_civita(a):
    expected = oracles.tensor_star(oracles.tensor(a), a.degree)
    assert oracles.form_components(hodge_star(a)) == expected


def test_eval_matches_determinant_oracle():
    rng = random.Random(3)
    for k in range(1, 5):
        for _ in range(10):
            a = random_form(rng, k, polynomial=False)
            vecs = [[Fraction(rng.randint(-3, 3)) for _ in range(7)] for _ in range(k)]
            got = eval_form(a, pt(*[0] * 7), [VectorField(v) for v in vecs])
            assert got == oracles.evaluate(a, vecs)


# -- properties --------------------------------------------------------------

@given(forms(), forms())
def test_graded_commutativity(a, b):
    assert wedge(a, b) == wedge(b, a) * (-1) ** (a.degree * b.degree)


@given(forms(), forms(), forms())
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@pytest.mark.parametrize("degree", range(6))
def test_d_squared_is_zero(degree):
    rng = random.Random(100 + degree)
    for _ in range(200):
        a = random_form(rng, degree, max_terms=3, max_degree=3)
        assert d(d(a)).is_zero()


@given(forms(), forms())
def test_d_is_a_graded_derivation(a, b):
    assert d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)) * (-1) ** a.degree


@given(fields(constant=False), forms(), forms())
def test_interior_product_leibniz(v, a, b):
    if a.degree + b.degree == 0:
        return
    lhs = interior_product(v, wedge(a, b))
    left = wedge(interior_product(v, a), b) if a.degree else KForm.zero(a.degree + b.degree - 1)
    right = wedge(a, interior_product(v, b)) if b.degree else KForm.zero(a.degree + b.degree - 1)
    assert lhs == left + right * (-1) ** a.degree


@given(fields(), forms())
def test_contraction_of_star(v, a):
    # iota_v *a = (-1)^k *(v^b ^ a)
    if a.degree == 7:
        return
    k = a.degree
    assert interior_product(v, hodge_star(a)) == hodge_star(wedge(flat(v), a)) * (-1) ** k


@given(fields(), forms())
def test_contraction_via_double_star(v, a):
    # iota_v a = (-1)^{nk+n} *(v^b ^ *a), n = 7
    if a.degree == 0:
        return
    k = a.degree
    assert interior_product(v, a) == hodge_star(wedge(flat(v), hodge_star(a))) * (-1) ** (7 * k + 7)


@given(fields(), st.integers(1, 7), st.data())
def test_contraction_moves_across_wedge(v, k, data):
    lam = data.draw(forms(degree=k))
    mu = data.draw(forms(degree=8 - k))
    lhs = wedge(interior_product(v, lam), mu)
    rhs = wedge(lam, interior_product(v, mu)) * (-1) ** (k + 1)
    assert lhs == rhs


@given(forms())
def test_star_star_is_identity(a):
    assert hodge_star(hodge_star(a)) == a


@given(forms(constant=True), forms(constant=True))
def test_star_defines_the_inner_product(a, b):
    if a.degree != b.degree:
        return
    assert wedge(a, hodge_star(b)) == volume_form() * form_inner(a, b)


def test_star_with_rational_volume_metric():
    diag = [4, 1, 1, 1, 1, 1, 9]
    g = ConstantMetric([[diag[i] if i == j else 0 for j in range(7)] for i in range(7)])
    rng = random.Random(5)
    for k in range(8):
        for _ in range(5):
            a = random_form(rng, k, polynomial=False)
            b = random_form(rng, k, polynomial=False)
            assert wedge(a, hodge_star(b, g)) == volume_form(g) * form_inner(a, b, g)
            assert hodge_star(hodge_star(a, g), g) == a


def test_irrational_volume_raises():
    g = ConstantMetric([[2 if i == j == 0 else int(i == j) for j in range(7)] for i in range(7)])
    with pytest.raises(IrrationalVolumeError):
        hodge_star(e(1), g)


def test_polynomial_coefficients_survive_star():
    a = e(1, 2) * P("x1*x3 - 2")
    assert hodge_star(a) == e(3, 4, 5, 6, 7) * P("x1*x3 - 2")
    assert isinstance(hodge_star(a)[(3, 4, 5, 6, 7)], Polynomial)
