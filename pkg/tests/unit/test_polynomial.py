from fractions import Fraction

import numpy as np
import pytest

from um2witt.errors import (
    DimensionMismatchError,
    PolynomialSyntaxError,
    UndeclaredVariableError,
    VariableMismatchError,
)
from um2witt.MonomialOrder import MonomialOrder
from um2witt.Polynomial import Polynomial
from um2witt.PolynomialParser import poly_parse

XY = ["x", "y"]
X4 = ["x1", "x2", "x3", "x4"]


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("(x+1)^2", "x^2 + 2*x + 1"),
        ("0", "0"),
        ("-x + y", "-x + y"),
        ("1/2*x*y - 3/4", "1/2*x*y - 3/4"),
        ("x*(x - y) + x*y", "x^2"),
        ("(x + y)^3 - x^3", "3*x^2*y + 3*x*y^2 + y^3"),
    ],
)
def test_parse_and_print(text, expected):
    assert poly_parse(text, XY).to_string() == expected


def test_parse_two_terms():
    poly = poly_parse("2*x1*x3 - 2*x2*x4", X4)
    assert len(poly) == 2
    assert poly.coefficient((1, 0, 1, 0)) == 2
    assert poly.coefficient((0, 1, 0, 1)) == -2


def test_zero_has_empty_terms():
    assert poly_parse("0", XY).is_zero
    assert poly_parse("x - x", XY).terms() == {}


@pytest.mark.parametrize(
    ("text", "position"),
    [("x +", 3), ("x * * y", 4), ("(x + y", 6), ("x^y", 2), ("", 0), ("x ) ", 2)],
)
def test_syntax_error_position(text, position):
    with pytest.raises(PolynomialSyntaxError) as error:
        poly_parse(text, XY)
    assert error.value.position == position


def test_zero_denominator_is_syntax_error():
    with pytest.raises(PolynomialSyntaxError):
        poly_parse("1/0*x", XY)


def test_undeclared_variable():
    with pytest.raises(UndeclaredVariableError) as error:
        poly_parse("x + z", XY)
    assert error.value.name == "z"
    assert error.value.position == 4


def test_arithmetic_and_equality():
    x, y = Polynomial.generators(XY)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + 1) ** 2 == poly_parse("x^2 + 2*x + 1", XY)
    assert x - x == 0
    assert 2 * x == x + x
    assert x.scale(Fraction(1, 2)) * 2 == x


def random_polynomial(rng, variables, terms=4, max_degree=3):
    exponents = rng.integers(0, max_degree + 1, size=(terms, len(variables))).tolist()
    coefficients = rng.choice([-3, -2, -1, 1, 2, 3], size=terms).tolist()
    return Polynomial(
        variables, {tuple(monomial): c for monomial, c in zip(exponents, coefficients)}
    )


@pytest.mark.parametrize("seed", range(6))
def test_ring_axioms_on_random_polynomials(seed):
    rng = np.random.default_rng(seed)
    f, g, h = (random_polynomial(rng, X4) for _ in range(3))
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert f - f == 0
    assert (f * g).total_degree() == f.total_degree() + g.total_degree()


def test_mismatched_variables():
    with pytest.raises(VariableMismatchError):
        _ = poly_parse("x", XY) + poly_parse("x", ["x"])


def test_leading_terms_depend_on_order():
    poly = poly_parse("x + y^2", XY)
    assert poly.leading_monomial(MonomialOrder.degrevlex()) == (0, 2)
    assert poly.leading_monomial(MonomialOrder.lex()) == (1, 0)


def test_degrevlex_breaks_ties_by_last_variable():
    order = MonomialOrder.degrevlex()
    # x*z < y^2 in degrevlex with x > y > z
    assert order.key((1, 0, 1)) < order.key((0, 2, 0))


def test_substitute_and_evaluate():
    poly = poly_parse("x^2 + x*y", XY)
    t = Polynomial.generators(["t"])[0]
    substituted = poly.substitute({"x": t, "y": t + 1})
    assert substituted == poly_parse("2*t^2 + t", ["t"])
    assert poly.evaluate([Fraction(1, 2), 2]) == Fraction(5, 4)


def test_evaluate_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        poly_parse("x", XY).evaluate([1])


def test_derivative_and_embed():
    poly = poly_parse("x^3*y - 2*y", XY)
    assert poly.derivative("x") == poly_parse("3*x^2*y", XY)
    assert poly.derivative("y") == poly_parse("x^3 - 2", XY)
    embedded = poly.embed(["x", "y", "z"])
    assert embedded == poly_parse("x^3*y - 2*y", ["x", "y", "z"])
    assert poly.total_degree() == 4


def test_text_round_trip_is_stable():
    poly = poly_parse("3*x^2*y - 1/3*y + 7", XY)
    assert poly_parse(poly.to_string(), XY) == poly
