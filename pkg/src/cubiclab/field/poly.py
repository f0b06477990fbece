"""Univariate polynomials over a finite field context.

Polynomials are lists of raw field values, lowest degree first, with no trailing
zeros; the zero polynomial is the empty list. A field context is any object with
the arithmetic protocol implemented by PrimeModulus and CubicModulus
(zero/one/add/sub/neg/mul/inv/is_zero/random/key plus order/characteristic/degree).
"""

from typing import Any, Protocol

import numpy as np

from cubiclab.errors import InvalidInputError

# Fixed seed for equal-degree splitting: the root set never depends on it,
# only the number of splitting attempts does.
_SPLIT_SEED = 0x5EED


class FieldContext(Protocol):
    """Arithmetic protocol shared by GF(p) and GF(p^3)."""

    @property
    def order(self) -> int: ...

    @property
    def characteristic(self) -> int: ...

    @property
    def degree(self) -> int: ...

    def zero(self) -> Any: ...

    def one(self) -> Any: ...

    def add(self, a: Any, b: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any: ...

    def neg(self, a: Any) -> Any: ...

    def mul(self, a: Any, b: Any) -> Any: ...

    def inv(self, a: Any) -> Any: ...

    def is_zero(self, a: Any) -> bool: ...

    def random(self, rng: np.random.Generator) -> Any: ...

    def key(self, a: Any) -> tuple[int, ...]: ...


Poly = list[Any]


def trim(f: Poly, field: FieldContext) -> Poly:
    """Drop trailing zero coefficients."""
    f = list(f)
    while f and field.is_zero(f[-1]):
        f.pop()
    return f


def degree(f: Poly) -> int:
    """Degree of a trimmed polynomial (-1 for the zero polynomial)."""
    return len(f) - 1


def poly_add(f: Poly, g: Poly, field: FieldContext) -> Poly:
    n = max(len(f), len(g))
    zero = field.zero()
    return trim(
        [
            field.add(f[i] if i < len(f) else zero, g[i] if i < len(g) else zero)
            for i in range(n)
        ],
        field,
    )


def poly_sub(f: Poly, g: Poly, field: FieldContext) -> Poly:
    n = max(len(f), len(g))
    zero = field.zero()
    return trim(
        [
            field.sub(f[i] if i < len(f) else zero, g[i] if i < len(g) else zero)
            for i in range(n)
        ],
        field,
    )


def poly_mul(f: Poly, g: Poly, field: FieldContext) -> Poly:
    if not f or not g:
        return []
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if field.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out, field)


def poly_divmod(f: Poly, g: Poly, field: FieldContext) -> tuple[Poly, Poly]:
    """Euclidean division f = q*g + r with deg r < deg g.

    Raises:
        ZeroDivisionError: If g is the zero polynomial
    """
    g = trim(g, field)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")

    remainder = trim(f, field)
    if len(remainder) < len(g):
        return [], remainder

    lead_inv = field.inv(g[-1])
    quotient = [field.zero()] * (len(remainder) - len(g) + 1)
    while len(remainder) >= len(g):
        shift = len(remainder) - len(g)
        factor = field.mul(remainder[-1], lead_inv)
        quotient[shift] = factor
        for j, b in enumerate(g):
            remainder[shift + j] = field.sub(remainder[shift + j], field.mul(factor, b))
        remainder = trim(remainder, field)

    return trim(quotient, field), remainder


def poly_mod(f: Poly, g: Poly, field: FieldContext) -> Poly:
    return poly_divmod(f, g, field)[1]


def monic(f: Poly, field: FieldContext) -> Poly:
    """Scale a nonzero polynomial so its leading coefficient is one."""
    if not f:
        return []
    lead_inv = field.inv(f[-1])
    return [field.mul(c, lead_inv) for c in f]


def poly_gcd(f: Poly, g: Poly, field: FieldContext) -> Poly:
    """Monic greatest common divisor (zero polynomial only if both inputs are zero)."""
    a, b = trim(f, field), trim(g, field)
    while b:
        a, b = b, poly_mod(a, b, field)
    return monic(a, field)


def poly_powmod(base: Poly, exponent: int, modulus: Poly, field: FieldContext) -> Poly:
    """Compute base**exponent modulo a nonconstant polynomial by square-and-multiply."""
    result: Poly = [field.one()]
    base = poly_mod(base, modulus, field)
    while exponent:
        if exponent & 1:
            result = poly_mod(poly_mul(result, base, field), modulus, field)
        exponent >>= 1
        if exponent:
            base = poly_mod(poly_mul(base, base, field), modulus, field)
    return poly_mod(result, modulus, field)


def poly_eval(f: Poly, x: Any, field: FieldContext) -> Any:
    """Horner evaluation of f at x."""
    acc = field.zero()
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _split_candidate(g: Poly, field: FieldContext, rng: np.random.Generator) -> Poly:
    """A polynomial whose gcd with g is a random proper factor with probability ~1/2."""
    a = field.random(rng)
    if field.characteristic % 2:
        shifted = poly_powmod([a, field.one()], (field.order - 1) // 2, g, field)
        return poly_sub(shifted, [field.one()], field)

    # Characteristic 2: the absolute trace of a*x, sum of (a*x)^(2^i)
    term = poly_mod([field.zero(), a], g, field)
    trace = term
    for _ in range(field.degree - 1):
        term = poly_mod(poly_mul(term, term, field), g, field)
        trace = poly_add(trace, term, field)
    return trace


def _split_roots(g: Poly, field: FieldContext, rng: np.random.Generator) -> list[Any]:
    """Roots of a monic product of distinct linear factors."""
    if degree(g) <= 0:
        return []
    if degree(g) == 1:
        return [field.neg(g[0])]

    while True:
        candidate = _split_candidate(g, field, rng)
        factor = poly_gcd(g, candidate, field) if candidate else g
        if 1 <= degree(factor) < degree(g):
            cofactor, _ = poly_divmod(g, factor, field)
            return _split_roots(factor, field, rng) + _split_roots(
                monic(cofactor, field), field, rng
            )


def poly_roots(f: Poly, field: FieldContext) -> list[Any]:
    """Distinct roots of f lying in the field, sorted by the field's key.

    Args:
        f: Coefficients, lowest degree first
        field: Field context the coefficients and roots live in

    Returns:
        Sorted list of distinct roots

    Raises:
        InvalidInputError: If f is the zero polynomial
    """
    f = trim(f, field)
    if not f:
        raise InvalidInputError("the zero polynomial has every element as a root")
    if degree(f) == 0:
        return []

    f = monic(f, field)
    if degree(f) == 1:
        return [field.neg(f[0])]

    x = [field.zero(), field.one()]
    frobenius_x = poly_powmod(x, field.order, f, field)
    split_part = poly_gcd(f, poly_sub(frobenius_x, x, field), field)

    rng = np.random.default_rng(_SPLIT_SEED)
    return sorted(_split_roots(split_part, field, rng), key=field.key)
