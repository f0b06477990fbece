"""Exact arithmetic in GF(p)."""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from sympy import isprime

from cubiclab.errors import InvalidInputError, ModulusMismatchError

# Largest admissible modulus (exclusive): residues fit in 62 bits
MAX_MODULUS = 2**62


class ArithOp(Enum):
    """Binary (and unary) operations accepted by fp_arith."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    NEG = "neg"


def inv_mod(a: int, p: int) -> int:
    """Invert a modulo p with the extended Euclidean algorithm.

    Args:
        a: Residue to invert
        p: Modulus

    Returns:
        b in [0, p) with a*b = 1 (mod p)

    Raises:
        ZeroDivisionError: If a is 0 modulo p
    """
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")

    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s

    return old_s % p


@dataclass(frozen=True)
class PrimeModulus:
    """The prime field GF(p), also used as an arithmetic context on raw int residues.

    Attributes:
        p: The prime, 2 <= p < 2**62, primality-checked at construction
    """

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise InvalidInputError(f"modulus must be an int, got {self.p!r}")
        if not 2 <= self.p < MAX_MODULUS:
            raise InvalidInputError(f"modulus {self.p} outside [2, 2^62)")
        if not isprime(self.p):
            raise InvalidInputError(f"modulus {self.p} is not prime")

    # Field context protocol (shared with CubicModulus)

    @property
    def order(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def embed(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        return inv_mod(a, self.p)

    def pow(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return pow(inv_mod(a, self.p), -exponent, self.p)
        return pow(a, exponent, self.p)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def random(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.p))

    def key(self, a: int) -> tuple[int, ...]:
        return (a,)

    def element(self, value: int) -> "FpElement":
        """Wrap a residue as an FpElement over this field."""
        return FpElement(value % self.p, self)


@dataclass(frozen=True, slots=True)
class FpElement:
    """A canonical residue in GF(p).

    Attributes:
        value: Residue in [0, p)
        modulus: The field the residue belongs to
    """

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise InvalidInputError(f"{self.value} is not a canonical residue mod {self.modulus.p}")

    def _coerce(self, other: "FpElement | int") -> int:
        if isinstance(other, FpElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"operands over GF({self.modulus.p}) and GF({other.modulus.p})"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus.p
        raise TypeError(f"cannot combine FpElement with {type(other).__name__}")

    def _wrap(self, value: int) -> "FpElement":
        return FpElement(value, self.modulus)

    def __add__(self, other: "FpElement | int") -> "FpElement":
        return self._wrap(self.modulus.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: "FpElement | int") -> "FpElement":
        return self._wrap(self.modulus.sub(self.value, self._coerce(other)))

    def __rsub__(self, other: "FpElement | int") -> "FpElement":
        return self._wrap(self.modulus.sub(self._coerce(other), self.value))

    def __mul__(self, other: "FpElement | int") -> "FpElement":
        return self._wrap(self.modulus.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self) -> "FpElement":
        return self._wrap(self.modulus.neg(self.value))

    def __truediv__(self, other: "FpElement | int") -> "FpElement":
        return self * self._wrap(self.modulus.inv(self._coerce(other)))

    def __pow__(self, exponent: int) -> "FpElement":
        return self._wrap(self.modulus.pow(self.value, exponent))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "FpElement":
        return self._wrap(self.modulus.inv(self.value))


def fp_arith(a: FpElement, b: FpElement | None, op: ArithOp) -> FpElement:
    """Apply an arithmetic operation to residues of the same field.

    Args:
        a: Left operand
        b: Right operand (ignored for NEG)
        op: Operation to apply

    Returns:
        The exact residue of the operation

    Raises:
        ModulusMismatchError: If a and b live over different moduli
        InvalidInputError: If a binary operation is missing its right operand
    """
    if op is ArithOp.NEG:
        return -a
    if b is None:
        raise InvalidInputError(f"{op.value} needs two operands")
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    return a * b


def fp_inv(a: FpElement) -> FpElement:
    """Invert a nonzero residue (extended Euclid).

    Raises:
        ZeroDivisionError: If a is zero
    """
    return a.inverse()


def fp_pow(a: FpElement, exponent: int) -> FpElement:
    """Raise a residue to an integer power; negative powers invert first."""
    return a**exponent
