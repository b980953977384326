import pytest

from idealtutte.errors import ConstraintError, InconsistencyError
from idealtutte.exactpoly import (
    BivariatePolynomial,
    UnivariatePolynomial,
    coboundary_to_tutte,
    evaluate,
    lagrange_interpolate,
    latex_is_wellformed,
    parse_polynomial,
    tutte_to_characteristic,
)


def bp(text, variables=("x", "y")):
    return parse_polynomial(text, variables)


def test_basic_arithmetic():
    p = bp("x^2 + x + y")
    q = bp("x - y")
    assert p + q == bp("x^2 + 2x")
    assert p - q == bp("x^2 + 2y")
    assert p * q == bp("x^3 + x^2 - x^2y - y^2")
    assert (p * 0).is_zero()
    assert bp("x") ** 3 == bp("x^3")


def test_no_zero_coefficients_stored():
    p = bp("x + y") - bp("y")
    assert p.coeffs == {(1, 0): 1}


def test_evaluate_examples():
    assert evaluate(bp("x^2 + x + y"), 1, 1) == 3
    assert evaluate(bp("x^2 + y^2 + 2x + 2y"), 1, 1) == 6
    assert evaluate(bp("x^2 + y^2 + 2x + 2y"), 2, 2) == 16  # 2^4 hyperplanes


def test_parse_round_trip():
    p = bp("3x^2y^10 - 7x + 1 - y^3")
    assert parse_polynomial(p.to_text()) == p
    assert parse_polynomial(p.to_latex()) == p


def test_parse_braced_exponents():
    assert bp("y^{15} + xy^{13}") == BivariatePolynomial({(0, 15): 1, (1, 13): 1})


def test_latex_ordering_and_wellformedness():
    p = bp("x^2 + y^3 + xy + 5")
    tex = p.to_latex()
    assert tex == "y^3 + xy + x^2 + 5"
    assert latex_is_wellformed(tex)
    assert latex_is_wellformed(bp("y^{15} + 2xy^{12}").to_latex())
    assert not latex_is_wellformed("x^{2")


def test_json_round_trip():
    p = bp("x^12 - 4xy + 9")
    assert BivariatePolynomial.from_json_dict(p.to_json_dict()) == p


def test_univariate_ops():
    p = UnivariatePolynomial([2, -3, 1])  # (q-1)(q-2)
    assert p.evaluate(1) == 0 and p.evaluate(3) == 2
    q, rem = p.divide_linear(1)
    assert rem == 0 and q == UnivariatePolynomial([-2, 1])
    q, rem = p.divide_linear(5)
    assert rem == p.evaluate(5)
    assert (p * p).degree() == 4
    assert p - p == UnivariatePolynomial.zero()


def test_interpolate_constant():
    pts = [(3, UnivariatePolynomial([1])), (5, UnivariatePolynomial([1]))]
    assert lagrange_interpolate(pts) == BivariatePolynomial({(0, 0): 1}, ("q", "t"))


def test_interpolate_square():
    pts = [(x, UnivariatePolynomial([x * x])) for x in (3, 5, 7)]
    assert lagrange_interpolate(pts) == BivariatePolynomial({(2, 0): 1}, ("q", "t"))


def test_interpolate_duplicate_abscissa():
    pts = [(3, UnivariatePolynomial([1])), (3, UnivariatePolynomial([2]))]
    with pytest.raises(ConstraintError):
        lagrange_interpolate(pts)


def test_interpolate_non_integral():
    # values of q/2 at odd primes interpolate to a fractional polynomial
    pts = [(3, UnivariatePolynomial([1])), (5, UnivariatePolynomial([2]))]
    with pytest.raises(InconsistencyError):
        lagrange_interpolate(pts)


def test_coboundary_to_tutte_examples():
    assert coboundary_to_tutte(bp("t + q - 1", ("q", "t")), 1) == bp("x")
    assert coboundary_to_tutte(BivariatePolynomial.one(("q", "t")), 0) == 1
    cb = bp("t^3 + 3qt - 3t + q^2 - 3q + 2", ("q", "t"))
    assert coboundary_to_tutte(cb, 2) == bp("x^2 + x + y")


def test_coboundary_to_tutte_bad_rank():
    cb = bp("t + q - 1", ("q", "t"))
    with pytest.raises(InconsistencyError):
        coboundary_to_tutte(cb, 2)


def test_tutte_to_characteristic_examples():
    assert tutte_to_characteristic(bp("x"), 1, 1) == UnivariatePolynomial([-1, 1])
    assert tutte_to_characteristic(bp("x^2 + x + y"), 3, 2) == UnivariatePolynomial(
        [0, 2, -3, 1]
    )
    assert tutte_to_characteristic(
        bp("x^2 + y^2 + 2x + 2y"), 2, 2
    ) == UnivariatePolynomial([3, -4, 1])
