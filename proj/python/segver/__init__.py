"""Dimensions of linear systems on products of projective lines."""

from ._segver import (
    DEFAULT_PRIME,
    catalecticant,
    catalecticant_determinant,
    certify,
    check_certificate,
    classify,
    cremona_chain,
    critical_range,
    dim,
    dim_at_points,
    dim_projective,
    expected_dimension,
    monomial_basis,
    secant,
    symbolic_catalecticant,
    to_projective,
    virtual_dimension,
)

__all__ = [
    "DEFAULT_PRIME",
    "catalecticant",
    "catalecticant_determinant",
    "certify",
    "check_certificate",
    "classify",
    "cremona_chain",
    "critical_range",
    "dim",
    "dim_at_points",
    "dim_projective",
    "expected_dimension",
    "monomial_basis",
    "secant",
    "symbolic_catalecticant",
    "to_projective",
    "virtual_dimension",
]
