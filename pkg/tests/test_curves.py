"""Tests for points, curves, evaluation, classification and the CSV formats."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiclab.curves import (
    AffinePoint,
    CurveCoeffs,
    IrreducibilityClass,
    LinearForm,
    RationalClass,
    classify_irreducibility,
    classify_rational,
    conic_discriminant,
    evaluate,
    evaluate_vector,
    find_linear_factor,
    incident,
    is_irreducible_conic,
    line,
    multiply,
    random_irreducible_conic,
    random_irreducible_cubic,
    random_line,
    rational_points,
    read_curves,
    read_points,
    translate,
    write_curves,
    write_points,
)
from cubiclab.errors import GuardExceededError, InvalidInputError, ModulusMismatchError
from cubiclab.field import PrimeModulus, find_cubic_modulus


def test_point_must_be_reduced(f7):
    with pytest.raises(InvalidInputError):
        AffinePoint(7, 0, f7)
    assert AffinePoint.of(-1, 9, f7) == AffinePoint(6, 2, f7)


def test_zero_curve_rejected(f7):
    with pytest.raises(InvalidInputError):
        CurveCoeffs((0,) * 10, f7)


def test_wrong_length_rejected(f7):
    with pytest.raises(InvalidInputError):
        CurveCoeffs((1, 2, 3), f7)


def test_normalization_makes_scalar_multiples_equal(f7):
    curve = CurveCoeffs((0, 3, 6, 0, 0, 0, 1, 0, 0, 0), f7)
    assert curve.values[:3] == (0, 1, 2)
    assert curve == CurveCoeffs((0, 6, 5, 0, 0, 0, 2, 0, 0, 0), f7)


def test_from_monomials_rejects_degree_four(f7):
    with pytest.raises(InvalidInputError):
        CurveCoeffs.from_monomials({(2, 2): 1}, f7)


def test_degree(f7):
    assert line(1, 1, 0, f7).degree == 1
    assert CurveCoeffs.from_monomials({(1, 1): 1, (0, 0): 3}, f7).degree == 2


def test_evaluate_graph(f13, cubic_graph):
    curve = cubic_graph(f13)
    assert incident(curve, AffinePoint(2, 8, f13))
    assert evaluate(curve, AffinePoint(2, 0, f13)).value == (-8) % 13


def test_evaluate_field_mismatch(f5, f7, cubic_graph):
    with pytest.raises(ModulusMismatchError):
        evaluate(cubic_graph(f7), AffinePoint(0, 0, f5))


@settings(derandomize=True, max_examples=100)
@given(
    st.lists(st.integers(0, 12), min_size=10, max_size=10).filter(any),
    st.integers(1, 12),
    st.integers(0, 12),
    st.integers(0, 12),
)
def test_scaling_does_not_change_incidence(values, scale, x, y):
    f = PrimeModulus(13)
    q = AffinePoint(x, y, f)
    raw = evaluate_vector(values, q)
    scaled = evaluate_vector([v * scale for v in values], q)
    assert (raw.value == 0) == (scaled.value == 0)
    assert incident(CurveCoeffs(tuple(values), f), q) == (raw.value == 0)


def test_rational_points_of_graph(f13, cubic_graph, graph_points):
    assert rational_points(cubic_graph(f13)) == sorted(graph_points(f13), key=lambda q: q.key)


def test_rational_points_guard(f13, cubic_graph):
    with pytest.raises(GuardExceededError):
        rational_points(cubic_graph(f13), max_p=11)


def test_translate_shifts_points(f13, cubic_graph):
    shifted = translate(cubic_graph(f13), 3, 5)
    original = rational_points(cubic_graph(f13))
    expected = sorted(
        (AffinePoint((q.x + 3) % 13, (q.y + 5) % 13, f13) for q in original),
        key=lambda q: q.key,
    )
    assert rational_points(shifted) == expected


def test_multiply_line_and_conic(f7):
    axis = line(0, 1, 0, f7)
    conic = CurveCoeffs.from_monomials({(2, 0): 1, (0, 2): 1, (0, 0): 1}, f7)
    product = multiply(axis, conic)
    assert product.degree == 3
    assert product.terms() == {(0, 1): 1, (2, 1): 1, (0, 3): 1}


def test_multiply_degree_overflow(f7, cubic_graph):
    with pytest.raises(InvalidInputError):
        multiply(cubic_graph(f7), line(1, 0, 0, f7))


def test_linear_factor_of_three_lines(f7):
    curve = multiply(multiply(line(1, 0, 0, f7), line(0, 1, 0, f7)), line(1, 1, 1, f7))
    factor = find_linear_factor(curve)
    assert factor == LinearForm(1, 0, 0, f7)
    assert classify_irreducibility(curve) is IrreducibilityClass.REDUCIBLE_RATIONAL
    assert classify_rational(curve) is RationalClass.REDUCIBLE


def test_linear_factor_needs_cubic(f7):
    with pytest.raises(InvalidInputError):
        find_linear_factor(line(1, 1, 0, f7))


def test_linear_factor_characteristic_mismatch(f7, cubic_graph):
    with pytest.raises(ModulusMismatchError):
        find_linear_factor(cubic_graph(f7), find_cubic_modulus(PrimeModulus(5)))


def test_horizontal_factor_found(f7):
    curve = multiply(line(0, 1, 3, f7), CurveCoeffs.from_monomials({(0, 2): 1, (1, 0): 1}, f7))
    factor = find_linear_factor(curve)
    assert factor is not None
    assert factor.a == 0


def test_conjugate_lines(f7):
    # x^3 - 2 splits into three lines over GF(7^3) and has no GF(7)-point
    curve = CurveCoeffs.from_monomials({(3, 0): 1, (0, 0): -2}, f7)
    assert find_linear_factor(curve) is None
    assert find_linear_factor(curve, find_cubic_modulus(f7)) is not None
    assert classify_irreducibility(curve) is IrreducibilityClass.CONJUGATE_LINES
    assert classify_rational(curve) is RationalClass.IRREDUCIBLE
    assert curve.rational_classification is RationalClass.IRREDUCIBLE
    assert not curve.is_irreducible_cubic


def test_graph_is_absolutely_irreducible(f13, cubic_graph):
    curve = cubic_graph(f13)
    assert curve.classification is IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE
    assert curve.is_irreducible_cubic


def test_fermat_cubic_is_absolutely_irreducible(f7):
    curve = CurveCoeffs.from_monomials({(3, 0): 1, (0, 3): 1, (0, 0): 1}, f7)
    assert classify_irreducibility(curve) is IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE
    assert classify_rational(curve) is RationalClass.IRREDUCIBLE


def test_low_degree(f7):
    conic = CurveCoeffs.from_monomials({(2, 0): 1, (0, 1): -1}, f7)
    assert classify_irreducibility(conic) is IrreducibilityClass.LOW_DEGREE
    assert classify_rational(conic) is RationalClass.LOW_DEGREE


def test_conic_discriminant(f7):
    parabola = CurveCoeffs.from_monomials({(2, 0): 1, (0, 1): -1}, f7)
    crossing = CurveCoeffs.from_monomials({(1, 1): 1}, f7)
    assert is_irreducible_conic(parabola)
    assert conic_discriminant(crossing) == 0
    assert not is_irreducible_conic(crossing)
    with pytest.raises(InvalidInputError):
        conic_discriminant(line(1, 0, 0, f7))


def test_random_generators_are_seeded(f13):
    assert random_irreducible_cubic(5, f13) == random_irreducible_cubic(5, f13)
    rng = np.random.default_rng(1)
    for _ in range(10):
        assert random_irreducible_cubic(rng, f13).is_irreducible_cubic
        assert random_line(rng, f13).degree == 1
        assert is_irreducible_conic(random_irreducible_conic(rng, f13))


def test_point_and_curve_files(tmp_path, f13, cubic_graph, graph_points):
    points = graph_points(f13)
    curves = [cubic_graph(f13), line(1, 2, 3, f13)]
    write_points(tmp_path / "points.csv", points)
    write_curves(tmp_path / "curves.csv", curves)

    assert read_points(tmp_path / "points.csv", f13) == points
    assert read_curves(tmp_path / "curves.csv", f13) == curves
    assert (tmp_path / "points.csv").read_text().splitlines()[0] == "x,y"
    header = (tmp_path / "curves.csv").read_text().splitlines()[0]
    assert header == "c00,c10,c01,c20,c11,c02,c30,c21,c12,c03"


def test_point_file_rejects_bad_header(tmp_path, f7):
    path = tmp_path / "points.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(InvalidInputError):
        read_points(path, f7)


def test_point_file_rejects_unreduced(tmp_path, f7):
    path = tmp_path / "points.csv"
    path.write_text("x,y\n1,9\n")
    with pytest.raises(InvalidInputError):
        read_points(path, f7)
