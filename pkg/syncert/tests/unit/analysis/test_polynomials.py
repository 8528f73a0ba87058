import numpy as np
import pytest

from syncert.analysis.errors import DegreeOverflowError
from syncert.analysis.polynomials import (
    Polynomial,
    RationalFunction,
    approximate_gcd,
    divides,
    polynomial_det,
    rational_det,
)


def poly_from_roots(*roots):
    return Polynomial(Polynomial.fromroots(roots).coef)


def test_trimmed_drops_negligible_leading_terms():
    p = Polynomial([1.0, 2.0, 1e-20]).trimmed(1e-12)
    np.testing.assert_array_equal(p.coef, [1.0, 2.0])
    assert Polynomial([0.0, 0.0]).trimmed().is_zero


def test_roots_companion_sorted():
    roots = poly_from_roots(2.0, -1.0, 0.5).roots_companion()
    np.testing.assert_allclose(roots, [-1.0, 0.5, 2.0], atol=1e-12)
    assert Polynomial([3.0]).roots_companion().size == 0


def test_approximate_gcd():
    g = approximate_gcd(poly_from_roots(1.0, 2.0), poly_from_roots(1.0, -3.0))
    np.testing.assert_allclose(g.coef, [-1.0, 1.0], atol=1e-12)

    coprime = approximate_gcd(poly_from_roots(1.0), poly_from_roots(2.0))
    np.testing.assert_array_equal(coprime.coef, [1.0])


def test_divides():
    ok, quotient = divides(poly_from_roots(1.0, 2.0), poly_from_roots(1.0), 1e-10)
    assert ok
    np.testing.assert_allclose(quotient.coef, [-2.0, 1.0], atol=1e-12)

    ok, _ = divides(poly_from_roots(1.0, 2.0), poly_from_roots(3.0), 1e-10)
    assert not ok


def test_from_coefficients_cancels_common_factor():
    f = RationalFunction.from_coefficients([-1.0, 1.0], [-1.0, 0.0, 1.0])
    np.testing.assert_allclose(f.num.coef, [1.0])
    assert len(f.factors) == 1
    np.testing.assert_allclose(f.den.coef, [1.0, 1.0])


def test_from_coefficients_normalizes_leading_coefficient():
    f = RationalFunction.from_coefficients([2.0], [0.0, 4.0])
    np.testing.assert_allclose(f.num.coef, [0.5])
    np.testing.assert_allclose(f.den.coef, [0.0, 1.0])
    assert f(2.0) == pytest.approx(0.25)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction.from_coefficients([1.0], [0.0, 0.0])


def test_sum_shares_poles():
    f = RationalFunction.from_coefficients([1.0], [1.0, 1.0])
    total = f + f
    assert len(total.factors) == 1
    assert total(2j) == pytest.approx(2.0 / (1.0 + 2j))


def test_arithmetic_matches_pointwise():
    f = RationalFunction.from_coefficients([1.0, 2.0], [1.0, 0.0, 1.0])
    g = RationalFunction.from_coefficients([0.0, 1.0], [2.0, 1.0])
    for s in (0.3j, 1.7j, 0.5 + 2j):
        assert (f + g)(s) == pytest.approx(f(s) + g(s))
        assert (f - g)(s) == pytest.approx(f(s) - g(s))
        assert (f * g)(s) == pytest.approx(f(s) * g(s))
        assert (2.0 - f)(s) == pytest.approx(2.0 - f(s))


def test_zero_function_has_no_poles():
    f = RationalFunction.from_coefficients([1.0], [1.0, 1.0])
    zero = f - f
    assert zero.is_zero
    assert zero.poles().size == 0


def test_is_pole():
    f = RationalFunction.from_coefficients([0.0, 1.0], [1.0, 0.0, 1.0])
    assert f.is_pole(1j)
    assert f.is_pole(-1j)
    assert not f.is_pole(2j)
    np.testing.assert_allclose(sorted(np.abs(f.poles().imag)), [1.0, 1.0])


def test_polynomial_det_of_constants():
    matrix = np.array([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]])
    entries = [[Polynomial([v]) for v in row] for row in matrix]
    assert polynomial_det(entries).coef[0] == pytest.approx(np.linalg.det(matrix))


def test_rational_det_matches_pointwise_determinant(ring4):
    matrix = ring4.system_matrix()
    det = rational_det(matrix)
    for s in (0.3j, 2j, 5j, 0.7 + 0.2j):
        values = np.array([[entry(s) for entry in row] for row in matrix])
        assert det(s) == pytest.approx(np.linalg.det(values), rel=1e-8)


def test_rational_det_cancels_row_multipliers():
    pole = RationalFunction.from_coefficients([1.0], [1.0, 1.0])
    matrix = [[pole, pole], [RationalFunction(1.0), RationalFunction(2.0)]]
    det = rational_det(matrix)
    assert det(1j) == pytest.approx(1.0 / (1.0 + 1j))
    assert len(det.factors) == 1


def test_rational_det_degree_cap():
    entry = RationalFunction(Polynomial([1.0, 1.0, 1.0]))
    with pytest.raises(DegreeOverflowError):
        rational_det([[entry, RationalFunction(0.0)], [RationalFunction(0.0), entry]], degree_cap=3)


def test_rational_det_requires_square():
    with pytest.raises(ValueError):
        rational_det([[RationalFunction(1.0), RationalFunction(1.0)]])
