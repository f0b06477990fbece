"""Plane curves of degree at most three over GF(p)."""

from cubiclab.curves.classify import (
    LinearForm,
    classify_irreducibility,
    classify_rational,
    conic_discriminant,
    find_linear_factor,
    is_irreducible_conic,
)
from cubiclab.curves.generate import (
    random_irreducible_conic,
    random_irreducible_cubic,
    random_line,
)
from cubiclab.curves.io import read_curves, read_points, write_curves, write_points
from cubiclab.curves.models import (
    CURVE_CSV_HEADER,
    MONOMIALS,
    POINT_CSV_HEADER,
    AffinePoint,
    CurveCoeffs,
    IrreducibilityClass,
    RationalClass,
)
from cubiclab.curves.ops import (
    column_polynomial,
    evaluate,
    evaluate_vector,
    incident,
    line,
    multiply,
    rational_points,
    translate,
)

__all__ = [
    "CURVE_CSV_HEADER",
    "MONOMIALS",
    "POINT_CSV_HEADER",
    "AffinePoint",
    "CurveCoeffs",
    "IrreducibilityClass",
    "LinearForm",
    "RationalClass",
    "classify_irreducibility",
    "classify_rational",
    "column_polynomial",
    "conic_discriminant",
    "evaluate",
    "evaluate_vector",
    "find_linear_factor",
    "incident",
    "is_irreducible_conic",
    "line",
    "multiply",
    "random_irreducible_conic",
    "random_irreducible_cubic",
    "random_line",
    "rational_points",
    "read_curves",
    "read_points",
    "translate",
    "write_curves",
    "write_points",
]
