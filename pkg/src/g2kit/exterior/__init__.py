"""Exact exterior calculus on 7-dimensional coordinate patches."""
from .forms import (
    AXES, KForm, VectorField, complement, constant_field, constant_primitive,
    coordinate_field, d, dx, e, eval_form, exterior_derivative, interior_product,
    iota, one_form, pair, permutation_sign, random_constant_field, random_form,
    volume_monomial, wedge, wedge_power,
)
from .metric import (
    IDENTITY, ConstantMetric, IrrationalVolumeError, MetricError, flat, form_inner,
    hodge_star, raise_indices, sharp, star, volume_form,
)
from .polynomial import (
    DEFAULT_NAMES, NVARS, ONE, ZERO, Polynomial, PolynomialSyntaxError, as_fraction,
    parse_polynomial, random_polynomial,
)

__all__ = [
    "AXES", "DEFAULT_NAMES", "IDENTITY", "NVARS", "ONE", "ZERO",
    "ConstantMetric", "IrrationalVolumeError", "KForm", "MetricError", "Polynomial",
    "PolynomialSyntaxError", "VectorField",
    "as_fraction", "complement", "constant_field", "constant_primitive",
    "coordinate_field", "d", "dx", "e", "eval_form", "exterior_derivative", "flat",
    "form_inner", "hodge_star", "interior_product", "iota", "one_form", "pair",
    "parse_polynomial", "permutation_sign", "raise_indices", "random_constant_field",
    "random_form", "random_polynomial", "sharp", "star", "volume_form",
    "volume_monomial", "wedge", "wedge_power",
]
