"""Exact arithmetic in GF(p) and GF(p^3)."""

from cubiclab.field.cubic import (
    CubicModulus,
    Fp3Element,
    find_cubic_modulus,
    fp3_arith,
    fp3_inv,
    frobenius,
)
from cubiclab.field.poly import poly_roots
from cubiclab.field.prime import (
    MAX_MODULUS,
    ArithOp,
    FpElement,
    PrimeModulus,
    fp_arith,
    fp_inv,
    fp_pow,
    inv_mod,
)

__all__ = [
    "MAX_MODULUS",
    "ArithOp",
    "CubicModulus",
    "Fp3Element",
    "FpElement",
    "PrimeModulus",
    "find_cubic_modulus",
    "fp3_arith",
    "fp3_inv",
    "fp_arith",
    "fp_inv",
    "fp_pow",
    "frobenius",
    "inv_mod",
    "poly_roots",
]
