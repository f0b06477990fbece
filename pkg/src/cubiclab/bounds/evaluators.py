"""Closed-form incidence bounds evaluated in extended precision.

Every evaluator returns an mpmath value computed at the configured working
precision (113 bits by default). Only admissible() is exact: it compares
integer powers.
"""

import logging
from collections.abc import Callable
from functools import wraps
from typing import ParamSpec

import mpmath as mp

from cubiclab.env import get_settings
from cubiclab.errors import InvalidInputError

logger = logging.getLogger(__name__)

# Smallest richness for which the dual rich-point bound applies
MIN_RICHNESS = 11

Params = ParamSpec("Params")


def _precise(func: Callable[Params, mp.mpf]) -> Callable[Params, mp.mpf]:
    """Run an evaluator under the configured working precision."""

    @wraps(func)
    def wrapper(*args: Params.args, **kwargs: Params.kwargs) -> mp.mpf:
        with mp.workprec(get_settings().bounds.precision_bits):
            return func(*args, **kwargs)

    return wrapper


def _pow(base: float | int | mp.mpf, num: int, den: int = 1) -> mp.mpf:
    """base ** (num / den) with the exponent formed at working precision."""
    return mp.power(mp.mpf(base), mp.mpf(num) / den)


def _check_sizes(**sizes: float | int) -> None:
    for name, value in sizes.items():
        if value < 0:
            raise InvalidInputError(f"{name} must be nonnegative, got {value}")


@_precise
def kst_bound(m: int, n: int) -> mp.mpf:
    """min{ m n^(9/10) + n, m^(1/2) n + m }."""
    _check_sizes(m=m, n=n)
    return min(m * _pow(n, 9, 10) + n, mp.sqrt(m) * n + m)


def kst_branch(m: int, n: int) -> str:
    """Which kst_bound branch is active ("first" on ties)."""
    with mp.workprec(get_settings().bounds.precision_bits):
        first = m * _pow(n, 9, 10) + n
        second = mp.sqrt(m) * n + m
    return "first" if first <= second else "second"


@_precise
def kst_line_bound(m: int, n: int) -> mp.mpf:
    """Point-line analogue: min{ m n^(1/2) + n, m^(1/2) n + m }."""
    _check_sizes(m=m, n=n)
    return min(m * mp.sqrt(n) + n, mp.sqrt(m) * n + m)


def _theorem1_terms(m: int, n: int) -> dict[str, mp.mpf]:
    return {
        "joint": _pow(m * n, 39, 43),
        "point": m * _pow(n, 9, 10),
        "curve": mp.sqrt(m) * n,
    }


@_precise
def theorem1_bound(m: int, n: int) -> mp.mpf:
    """min{ (mn)^(39/43), m n^(9/10), m^(1/2) n } + m + n."""
    _check_sizes(m=m, n=n)
    return min(_theorem1_terms(m, n).values()) + m + n


def theorem1_branch(m: int, n: int) -> str:
    """Name of the smallest min-term ("joint", "point" or "curve"; first wins ties)."""
    with mp.workprec(get_settings().bounds.precision_bits):
        terms = _theorem1_terms(m, n)
    smallest = min(terms.values())
    return next(name for name, value in terms.items() if value == smallest)


@_precise
def theorem2_bound(m: int, n: int) -> mp.mpf:
    """(mn)^(39/43) + m^(71/43) n^(28/43) + n."""
    _check_sizes(m=m, n=n)
    return _pow(m * n, 39, 43) + _pow(m, 71, 43) * _pow(n, 28, 43) + n


@_precise
def sdz_rich_points_bound(lines: int, t: int) -> mp.mpf:
    """Rich points of a line arrangement: L^(11/4) / t^(15/4) + L / t.

    Raises:
        InvalidInputError: If t < 2
    """
    if t < 2:
        raise InvalidInputError(f"t must be at least 2, got {t}")
    _check_sizes(lines=lines)
    return _pow(lines, 11, 4) / _pow(t, 15, 4) + mp.mpf(lines) / t


@_precise
def sdz_line_bound(m: int, n: int) -> mp.mpf:
    """Point-line incidences: (mn)^(11/15) + m + n."""
    _check_sizes(m=m, n=n)
    return _pow(m * n, 11, 15) + m + n


def _check_richness(k: float | int) -> None:
    if k < MIN_RICHNESS:
        raise InvalidInputError(f"k must be at least {MIN_RICHNESS}, got {k}")


@_precise
def cks_bound(m: int, k: int) -> mp.mpf:
    """Curves of C_k through a fixed 7-subset: m^(11/4) / k^(15/4) + m / k.

    Raises:
        InvalidInputError: If k < 11
    """
    _check_richness(k)
    _check_sizes(m=m)
    return _pow(m, 11, 4) / _pow(k, 15, 4) + mp.mpf(m) / k


@_precise
def ck_bound(m: int, k: float | int | mp.mpf) -> mp.mpf:
    """k-rich curves: m^(39/4) / k^(43/4) + m^8 / k^8.

    Raises:
        InvalidInputError: If k < 11
    """
    _check_richness(k)
    _check_sizes(m=m)
    return _pow(m, 39, 4) / _pow(k, 43, 4) + _pow(m, 8) / _pow(k, 8)


@_precise
def delta_opt(m: int, n: int) -> mp.mpf:
    """max{ 11, m^(39/43) / n^(4/43) }.

    Raises:
        InvalidInputError: If n < 1
    """
    if n < 1:
        raise InvalidInputError(f"the number of curves must be at least 1, got {n}")
    _check_sizes(m=m)
    return max(mp.mpf(MIN_RICHNESS), _pow(m, 39, 43) / _pow(n, 4, 43))


def delta_branch(m: int, n: int) -> str:
    """Label the active branch of delta_opt: floor (clamped at 11) or balance."""
    with mp.workprec(get_settings().bounds.precision_bits):
        balance = _pow(m, 39, 43) / _pow(n, 4, 43)
    return "floor" if balance <= MIN_RICHNESS else "balance"


@_precise
def dyadic_bound(m: int, n: int, delta: float | int | mp.mpf) -> mp.mpf:
    """delta n + m^(39/4) / delta^(39/4) + m^8 / delta^7.

    Raises:
        InvalidInputError: If delta < 1
    """
    if delta < 1:
        raise InvalidInputError(f"delta must be at least 1, got {delta}")
    _check_sizes(m=m, n=n)
    return delta * n + _pow(m, 39, 4) / _pow(delta, 39, 4) + _pow(m, 8) / _pow(delta, 7)


@_precise
def dyadic_series_bound(m: int, n: int, delta: float | int | mp.mpf) -> mp.mpf:
    """delta n + sum over i >= 0 with 2^i delta <= m of ck_bound(m, 2^i delta) * 2^i delta.

    Raises:
        InvalidInputError: If delta < 11
    """
    _check_richness(delta)
    _check_sizes(m=m, n=n)
    total = mp.mpf(delta) * n
    k = mp.mpf(delta)
    while k <= m:
        total += ck_bound(m, k) * k
        k *= 2
    return total


def improvement_range(m: int) -> tuple[mp.mpf, mp.mpf]:
    """(m^(35/8), m^(40/3)): the curve counts for which the new bound beats the trivial ones.

    Raises:
        InvalidInputError: If m < 1
    """
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    with mp.workprec(get_settings().bounds.precision_bits):
        return _pow(m, 35, 8), _pow(m, 40, 3)


def admissible(m: int, p: int) -> bool:
    """m <= p^(15/13), decided exactly as m^13 <= p^15."""
    return m**13 <= p**15
