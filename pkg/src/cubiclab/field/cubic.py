"""The cubic extension GF(p^3) and its Frobenius automorphism."""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.field.poly import poly_roots
from cubiclab.field.prime import ArithOp, FpElement, PrimeModulus

logger = logging.getLogger(__name__)

# Raw representation of c0 + c1*theta + c2*theta^2
Fp3Raw = tuple[int, int, int]


@dataclass(frozen=True)
class CubicModulus:
    """A monic irreducible cubic x^3 + a2*x^2 + a1*x + a0 over GF(p).

    Also the arithmetic context for GF(p^3) on raw coefficient triples.

    Attributes:
        modulus: The base field
        a2: Coefficient of x^2
        a1: Coefficient of x
        a0: Constant coefficient
    """

    modulus: PrimeModulus
    a2: int
    a1: int
    a0: int

    def __post_init__(self) -> None:
        p = self.modulus.p
        for name in ("a2", "a1", "a0"):
            value = getattr(self, name)
            if not 0 <= value < p:
                raise InvalidInputError(f"{name}={value} is not a canonical residue mod {p}")
        if not _has_no_root(self.modulus, self.a2, self.a1, self.a0):
            raise InvalidInputError(f"{self} has a root in GF({p}), so it is reducible")

    def __str__(self) -> str:
        return f"x^3 + {self.a2}x^2 + {self.a1}x + {self.a0} over GF({self.modulus.p})"

    @cached_property
    def _reduction(self) -> Fp3Raw:
        # theta^3 = r0 + r1*theta + r2*theta^2
        p = self.modulus.p
        return (-self.a0 % p, -self.a1 % p, -self.a2 % p)

    @cached_property
    def _theta_powers(self) -> tuple[Fp3Raw, Fp3Raw]:
        """theta^p and theta^(2p), the images of the basis under Frobenius."""
        theta_p = self.pow((0, 1, 0), self.modulus.p)
        return theta_p, self.mul(theta_p, theta_p)

    # Field context protocol (shared with PrimeModulus)

    @property
    def order(self) -> int:
        return self.modulus.p**3

    @property
    def characteristic(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        return 3

    def zero(self) -> Fp3Raw:
        return (0, 0, 0)

    def one(self) -> Fp3Raw:
        return (1, 0, 0)

    def theta(self) -> Fp3Raw:
        return (0, 1, 0)

    def embed(self, value: int) -> Fp3Raw:
        return (value % self.modulus.p, 0, 0)

    def add(self, a: Fp3Raw, b: Fp3Raw) -> Fp3Raw:
        p = self.modulus.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p)

    def sub(self, a: Fp3Raw, b: Fp3Raw) -> Fp3Raw:
        p = self.modulus.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p, (a[2] - b[2]) % p)

    def neg(self, a: Fp3Raw) -> Fp3Raw:
        p = self.modulus.p
        return (-a[0] % p, -a[1] % p, -a[2] % p)

    def mul(self, a: Fp3Raw, b: Fp3Raw) -> Fp3Raw:
        p = self.modulus.p
        d0 = a[0] * b[0]
        d1 = a[0] * b[1] + a[1] * b[0]
        d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        d3 = a[1] * b[2] + a[2] * b[1]
        d4 = a[2] * b[2] % p

        r0, r1, r2 = self._reduction
        # theta^4 = theta * theta^3
        d3 = (d3 + d4 * r2) % p
        d2 += d4 * r1
        d1 += d4 * r0
        return ((d0 + d3 * r0) % p, (d1 + d3 * r1) % p, (d2 + d3 * r2) % p)

    def pow(self, a: Fp3Raw, exponent: int) -> Fp3Raw:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        result = self.one()
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    def inv(self, a: Fp3Raw) -> Fp3Raw:
        if self.is_zero(a):
            raise ZeroDivisionError("0 has no inverse in GF(p^3)")
        return self.pow(a, self.order - 2)

    def is_zero(self, a: Fp3Raw) -> bool:
        return a == (0, 0, 0)

    def random(self, rng: np.random.Generator) -> Fp3Raw:
        c = rng.integers(0, self.modulus.p, size=3)
        return (int(c[0]), int(c[1]), int(c[2]))

    def key(self, a: Fp3Raw) -> tuple[int, ...]:
        return a

    def frobenius(self, a: Fp3Raw) -> Fp3Raw:
        """a^p as a linear map: c0 + c1*theta^p + c2*theta^(2p)."""
        theta_p, theta_2p = self._theta_powers
        p = self.modulus.p
        return tuple(  # type: ignore[return-value]
            (a[0] * (i == 0) + a[1] * theta_p[i] + a[2] * theta_2p[i]) % p for i in range(3)
        )

    def element(self, c0: int, c1: int = 0, c2: int = 0) -> "Fp3Element":
        """Wrap a coefficient triple as an Fp3Element over this modulus."""
        p = self.modulus.p
        return Fp3Element(c0 % p, c1 % p, c2 % p, self)


def _has_no_root(modulus: PrimeModulus, a2: int, a1: int, a0: int) -> bool:
    if a0 == 0:
        return False
    if modulus.p <= 64:
        p = modulus.p
        return all((x * x * x + a2 * x * x + a1 * x + a0) % p for x in range(p))
    return not poly_roots([a0, a1, a2, 1], modulus)


@lru_cache(maxsize=64)
def find_cubic_modulus(modulus: PrimeModulus) -> CubicModulus:
    """Find the lexicographically smallest monic irreducible cubic over GF(p).

    A cubic is irreducible over GF(p) iff it has no root there, so the scan
    stops at the first (a2, a1, a0) without one.

    Args:
        modulus: The base field

    Returns:
        The canonical CubicModulus for p
    """
    p = modulus.p
    for a2 in range(p):
        for a1 in range(p):
            for a0 in range(1, p):
                if _has_no_root(modulus, a2, a1, a0):
                    logger.debug(f"Canonical cubic modulus for p={p}: ({a2}, {a1}, {a0})")
                    return CubicModulus(modulus, a2, a1, a0)

    # An irreducible cubic exists over every prime field
    raise AssertionError(f"no irreducible cubic found over GF({p})")


@dataclass(frozen=True, slots=True)
class Fp3Element:
    """An element c0 + c1*theta + c2*theta^2 of GF(p^3).

    Attributes:
        c0: Constant coordinate
        c1: Coordinate of theta
        c2: Coordinate of theta^2
        modulus: The cubic modulus theta is a root of
    """

    c0: int
    c1: int
    c2: int
    modulus: CubicModulus

    def __post_init__(self) -> None:
        p = self.modulus.modulus.p
        if not all(0 <= c < p for c in (self.c0, self.c1, self.c2)):
            raise InvalidInputError(f"({self.c0}, {self.c1}, {self.c2}) not canonical mod {p}")

    @property
    def raw(self) -> Fp3Raw:
        return (self.c0, self.c1, self.c2)

    @property
    def coordinates(self) -> tuple[FpElement, FpElement, FpElement]:
        base = self.modulus.modulus
        return (base.element(self.c0), base.element(self.c1), base.element(self.c2))

    def is_prime_field(self) -> bool:
        """Whether the element lies in the embedded GF(p)."""
        return self.c1 == 0 and self.c2 == 0

    def _coerce(self, other: "Fp3Element | FpElement | int") -> Fp3Raw:
        if isinstance(other, Fp3Element):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(f"operands over {self.modulus} and {other.modulus}")
            return other.raw
        if isinstance(other, FpElement):
            if other.modulus != self.modulus.modulus:
                raise ModulusMismatchError(
                    f"GF({other.modulus.p}) element combined with {self.modulus}"
                )
            return self.modulus.embed(other.value)
        if isinstance(other, int):
            return self.modulus.embed(other)
        raise TypeError(f"cannot combine Fp3Element with {type(other).__name__}")

    def _wrap(self, raw: Fp3Raw) -> "Fp3Element":
        return Fp3Element(raw[0], raw[1], raw[2], self.modulus)

    def __add__(self, other: "Fp3Element | FpElement | int") -> "Fp3Element":
        return self._wrap(self.modulus.add(self.raw, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: "Fp3Element | FpElement | int") -> "Fp3Element":
        return self._wrap(self.modulus.sub(self.raw, self._coerce(other)))

    def __rsub__(self, other: "Fp3Element | FpElement | int") -> "Fp3Element":
        return self._wrap(self.modulus.sub(self._coerce(other), self.raw))

    def __mul__(self, other: "Fp3Element | FpElement | int") -> "Fp3Element":
        return self._wrap(self.modulus.mul(self.raw, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self) -> "Fp3Element":
        return self._wrap(self.modulus.neg(self.raw))

    def __truediv__(self, other: "Fp3Element | FpElement | int") -> "Fp3Element":
        return self * self._wrap(self.modulus.inv(self._coerce(other)))

    def __pow__(self, exponent: int) -> "Fp3Element":
        return self._wrap(self.modulus.pow(self.raw, exponent))

    def __bool__(self) -> bool:
        return not self.modulus.is_zero(self.raw)

    def inverse(self) -> "Fp3Element":
        return self._wrap(self.modulus.inv(self.raw))


def fp3_arith(a: Fp3Element, b: Fp3Element | None, op: ArithOp) -> Fp3Element:
    """Apply an arithmetic operation in GF(p^3).

    Raises:
        ModulusMismatchError: If a and b use different cubic moduli
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


def fp3_inv(a: Fp3Element) -> Fp3Element:
    """Invert a nonzero element of GF(p^3).

    Raises:
        ZeroDivisionError: If a is zero
    """
    return a.inverse()


def frobenius(e: Fp3Element) -> Fp3Element:
    """Return e^p, the Frobenius image of e."""
    return e._wrap(e.modulus.frobenius(e.raw))
