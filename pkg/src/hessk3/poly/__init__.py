"""Exact sparse polynomial arithmetic."""

from .multipoly import (
    MultiPoly,
    NonExactDivision,
    PolyError,
    PolyRing,
    det_poly_matrix,
    discriminant_univariate,
    exact_div,
    resultant,
    univariate_coefficients,
)
from .numberfield import NFElement, NumberField, cyclotomic_field, quadratic_field

__all__ = [
    "MultiPoly",
    "NFElement",
    "NonExactDivision",
    "NumberField",
    "PolyError",
    "PolyRing",
    "cyclotomic_field",
    "det_poly_matrix",
    "discriminant_univariate",
    "exact_div",
    "quadratic_field",
    "resultant",
    "univariate_coefficients",
]
