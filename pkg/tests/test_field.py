"""Tests for GF(p), GF(p^3) and univariate root finding."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.field import (
    ArithOp,
    CubicModulus,
    FpElement,
    PrimeModulus,
    find_cubic_modulus,
    fp3_arith,
    fp3_inv,
    fp_arith,
    fp_inv,
    fp_pow,
    frobenius,
    inv_mod,
    poly_roots,
)
from cubiclab.field.poly import poly_eval

MERSENNE_61 = 2**61 - 1


def test_inv_mod_small():
    assert inv_mod(3, 7) == 5


def test_inv_mod_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inv_mod(0, 7)
    with pytest.raises(ZeroDivisionError):
        inv_mod(14, 7)


@pytest.mark.parametrize("p", [0, 1, 4, 91, 2**62 + 1])
def test_prime_modulus_rejects(p):
    with pytest.raises(InvalidInputError):
        PrimeModulus(p)


def test_prime_modulus_rejects_bool():
    with pytest.raises(InvalidInputError):
        PrimeModulus(True)


def test_element_arithmetic(f7):
    a, b = f7.element(5), f7.element(4)
    assert (a + b).value == 2
    assert (a - b).value == 1
    assert (b - a).value == 6
    assert (a * b).value == 6
    assert (-a).value == 2
    assert (a / b) * b == a


def test_element_wraps_ints(f7):
    assert f7.element(-1).value == 6
    assert (f7.element(3) + 5).value == 1


def test_element_rejects_unreduced(f7):
    with pytest.raises(InvalidInputError):
        FpElement(7, f7)


def test_mixed_fields_raise(f5, f7):
    with pytest.raises(ModulusMismatchError):
        f5.element(1) + f7.element(1)


def test_fp_arith_ops(f7):
    a, b = f7.element(3), f7.element(6)
    assert fp_arith(a, b, ArithOp.ADD).value == 2
    assert fp_arith(a, b, ArithOp.SUB).value == 4
    assert fp_arith(a, b, ArithOp.MUL).value == 4
    assert fp_arith(a, None, ArithOp.NEG).value == 4


def test_fp_arith_missing_operand(f7):
    with pytest.raises(InvalidInputError):
        fp_arith(f7.element(1), None, ArithOp.MUL)


def test_fp_inv_zero(f7):
    with pytest.raises(ZeroDivisionError):
        fp_inv(f7.element(0))


def test_fp_pow(f7):
    assert fp_pow(f7.element(2), 10).value == 1024 % 7
    assert fp_pow(f7.element(3), 0).value == 1
    assert fp_pow(f7.element(3), -1) == fp_inv(f7.element(3))


@settings(derandomize=True, max_examples=200)
@given(st.integers(min_value=1, max_value=MERSENNE_61 - 1))
def test_inverse_large_prime(a):
    modulus = PrimeModulus(MERSENNE_61)
    x = modulus.element(a)
    assert (x * fp_inv(x)).value == 1


@settings(derandomize=True, max_examples=100)
@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_distributive_f13(a, b, c):
    f = PrimeModulus(13)
    x, y, z = f.element(a), f.element(b), f.element(c)
    assert x * (y + z) == x * y + x * z


def test_fermat(f13):
    for a in range(1, 13):
        assert fp_pow(f13.element(a), 12).value == 1


def test_find_cubic_modulus_has_no_root(f7):
    cubic = find_cubic_modulus(f7)
    assert all((x**3 + cubic.a2 * x * x + cubic.a1 * x + cubic.a0) % 7 for x in range(7))


def test_cubic_modulus_rejects_reducible(f7):
    with pytest.raises(InvalidInputError):
        CubicModulus(f7, 0, 0, 0)
    with pytest.raises(InvalidInputError):
        CubicModulus(f7, 0, 0, 6)  # x^3 - 1 has the root 1


def test_fp3_inverse_of_every_nonzero_element():
    field = find_cubic_modulus(PrimeModulus(3))
    for c0 in range(3):
        for c1 in range(3):
            for c2 in range(3):
                e = field.element(c0, c1, c2)
                if e:
                    assert e * fp3_inv(e) == field.element(1)


def test_fp3_zero_inverse_raises(f5):
    field = find_cubic_modulus(f5)
    with pytest.raises(ZeroDivisionError):
        fp3_inv(field.element(0))


def test_fp3_arith_and_embedding(f5):
    field = find_cubic_modulus(f5)
    a, b = field.element(1, 2, 3), field.element(4, 0, 1)
    assert fp3_arith(a, b, ArithOp.ADD) == field.element(0, 2, 4)
    assert fp3_arith(a, b, ArithOp.SUB) == field.element(2, 2, 2)
    assert fp3_arith(a, None, ArithOp.NEG) == field.element(4, 3, 2)
    assert (a + f5.element(2)) == field.element(3, 2, 3)
    assert field.element(2) * field.element(3) == field.element(1)


@settings(derandomize=True, max_examples=100)
@given(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)))
def test_frobenius_is_pth_power(coords):
    field = find_cubic_modulus(PrimeModulus(7))
    e = field.element(*coords)
    assert frobenius(e) == e**7
    assert frobenius(frobenius(frobenius(e))) == e


@settings(derandomize=True, max_examples=100)
@given(
    st.tuples(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10)),
    st.tuples(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10)),
)
def test_frobenius_is_a_ring_map(u, v):
    field = find_cubic_modulus(PrimeModulus(11))
    a, b = field.element(*u), field.element(*v)
    assert frobenius(a + b) == frobenius(a) + frobenius(b)
    assert frobenius(a * b) == frobenius(a) * frobenius(b)


def test_frobenius_fixes_prime_field(f7):
    field = find_cubic_modulus(f7)
    for c in range(7):
        assert frobenius(field.element(c)).is_prime_field()


def test_poly_roots_prime_field(f7):
    assert poly_roots([6, 0, 1], f7) == [1, 6]
    assert poly_roots([5, 0, 0, 1], f7) == []  # 2 is not a cube mod 7
    assert poly_roots([3], f7) == []


def test_poly_roots_zero_polynomial(f7):
    with pytest.raises(InvalidInputError):
        poly_roots([0, 0], f7)


def test_poly_roots_characteristic_two():
    assert poly_roots([0, 1, 1], PrimeModulus(2)) == [0, 1]


def test_poly_roots_large_prime():
    p = MERSENNE_61
    assert poly_roots([15, -8 % p, 1], PrimeModulus(p)) == [3, 5]


def test_poly_roots_extension_splits_irreducible_cubic(f7):
    field = find_cubic_modulus(f7)
    coefficients = [field.embed(-2), field.zero(), field.zero(), field.one()]
    roots = poly_roots(coefficients, field)
    assert len(roots) == 3
    for root in roots:
        assert field.pow(root, 3) == field.embed(2)
        assert poly_eval(coefficients, root, field) == field.zero()


@pytest.mark.parametrize(
    ("p", "coefficients"),
    [(2, (0, 1, 1)), (3, (0, 2, 1)), (5, (0, 1, 1)), (7, (0, 0, 2))],
)
def test_find_cubic_modulus_is_smallest(p, coefficients):
    # (a2, a1, a0) of x^3 + a2 x^2 + a1 x + a0
    cubic = find_cubic_modulus(PrimeModulus(p))
    assert (cubic.a2, cubic.a1, cubic.a0) == coefficients


def test_frobenius_of_theta_in_characteristic_two():
    field = find_cubic_modulus(PrimeModulus(2))
    theta = field.element(0, 1, 0)
    assert frobenius(theta) == field.element(0, 0, 1)
    assert frobenius(theta) == theta * theta


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frobenius_fixed_points_are_the_prime_field(p):
    field = find_cubic_modulus(PrimeModulus(p))
    fixed = [
        (c0, c1, c2)
        for c0 in range(p)
        for c1 in range(p)
        for c2 in range(p)
        if frobenius(field.element(c0, c1, c2)) == field.element(c0, c1, c2)
    ]
    assert fixed == [(c0, 0, 0) for c0 in range(p)]
