import pytest

from um2witt.errors import BudgetExceededError, TrackingAbsentError
from um2witt.GroebnerBasis import (
    buchberger,
    divide,
    normal_form,
    normal_form_with_cofactors,
    spolynomial,
)
from um2witt.MonomialOrder import MonomialOrder
from um2witt.Polynomial import Polynomial
from um2witt.PolynomialParser import poly_parse

try:
    import sympy
except ImportError:
    sympy = None

SPHERE = ["x", "y", "z", "w"]


def _polys(texts, variables):
    return [poly_parse(text, variables) for text in texts]


def test_spolynomial_lex():
    f, g = _polys(["x^2 + y", "x*y + 1"], ["x", "y"])
    assert spolynomial(f, g, MonomialOrder.lex()) == poly_parse("y^2 - x", ["x", "y"])


@pytest.mark.parametrize(
    ("first", "second"), [("x^2", "x"), ("x*y + 1", "x*y + 1")]
)
def test_spolynomial_cancels(first, second):
    f, g = _polys([first, second], ["x", "y"])
    assert spolynomial(f, g).is_zero


def test_divide_reconstructs_dividend():
    variables = ["x", "y"]
    f = poly_parse("x^3*y + x*y^2 - y + 4", variables)
    divisors = _polys(["x*y - 1", "y^2 - 1"], variables)
    quotients, remainder = divide(f, divisors)
    total = remainder
    for quotient, divisor in zip(quotients, divisors):
        total = total + quotient * divisor
    assert total == f


def test_reduced_basis_example():
    basis = buchberger(_polys(["x^2 + y^2 - 1", "x - y"], ["x", "y"]))
    assert set(basis.generators) == set(_polys(["x - y", "y^2 - 1/2"], ["x", "y"]))


@pytest.mark.parametrize(
    ("texts", "variables"),
    [
        (["x"], ["x"]),
        (["x1*y1 + x2*y2 + x3*y3 - 1"], ["x1", "x2", "x3", "y1", "y2", "y3"]),
    ],
)
def test_principal_ideal_is_its_own_basis(texts, variables):
    generators = _polys(texts, variables)
    assert list(buchberger(generators).generators) == generators


def test_unit_ideal():
    basis = buchberger(_polys(["x", "x - 1"], ["x"]))
    assert basis.is_unit_ideal


def test_normal_form_on_sphere():
    basis = buchberger(_polys(["x^2 + y^2 + z^2 + w^2 - 1"], SPHERE))
    assert normal_form(poly_parse("x^2", SPHERE), basis) == poly_parse(
        "1 - y^2 - z^2 - w^2", SPHERE
    )
    assert normal_form(Polynomial.one(SPHERE), basis) == 1
    assert basis.contains(poly_parse("x*(x^2 + y^2 + z^2 + w^2 - 1)", SPHERE))


@pytest.mark.parametrize(
    ("texts", "variables", "in_ideal"),
    [
        (["x", "1 - x"], ["x"], True),
        (["x^2 + y^2 + z^2 + w^2 - 1"], SPHERE, False),
        (["x", "y", "x + y - 1"], ["x", "y"], True),
    ],
)
def test_cofactors_express_one(texts, variables, in_ideal):
    originals = _polys(texts, variables)
    basis = buchberger(originals, track=True)
    one = Polynomial.one(variables)
    remainder, cofactors = normal_form_with_cofactors(one, basis, originals)
    assert len(cofactors) == len(originals)
    assert remainder.is_zero == in_ideal

    total = remainder
    for cofactor, original in zip(cofactors, originals):
        total = total + cofactor * original
    assert total == one


def test_cofactors_need_tracking():
    originals = _polys(["x", "1 - x"], ["x"])
    with pytest.raises(TrackingAbsentError):
        normal_form_with_cofactors(Polynomial.one(["x"]), buchberger(originals))


def test_budget_exceeded():
    cyclic = _polys(["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"], ["x", "y", "z"])
    with pytest.raises(BudgetExceededError) as error:
        buchberger(cyclic, budget=2)
    assert error.value.exit_status == 3


IDEALS = [
    (["x^2 + y^2 - 1", "x - y"], ["x", "y"]),
    (["x^2 - y", "x*y - 1"], ["x", "y"]),
    (["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"], ["x", "y", "z"]),
    (["x*y - z", "x^2 + z - 1", "y^3 - x"], ["x", "y", "z"]),
]


def _term_set(poly: Polynomial):
    return {(m, (c.numerator, c.denominator)) for m, c in poly.items()}


@pytest.mark.skipif(sympy is None, reason="sympy not installed")
@pytest.mark.parametrize(
    ("order", "sympy_order"), [("degrevlex", "grevlex"), ("lex", "lex")]
)
@pytest.mark.parametrize(("texts", "variables"), IDEALS)
def test_reduced_basis_matches_sympy(texts, variables, order, sympy_order):
    basis = buchberger(_polys(texts, variables), MonomialOrder.from_string(order))

    symbols = sympy.symbols(variables)
    expressions = [sympy.sympify(text.replace("^", "**")) for text in texts]
    oracle = sympy.groebner(expressions, *symbols, order=sympy_order)
    expected = {
        frozenset(
            (m, (int(c.p), int(c.q))) for m, c in sympy.Poly(g, *symbols).terms()
        )
        for g in oracle.exprs
    }
    assert {frozenset(_term_set(g)) for g in basis.generators} == expected


@pytest.mark.parametrize(("texts", "variables"), IDEALS)
def test_tracked_basis_representations(texts, variables):
    originals = _polys(texts, variables)
    basis = buchberger(originals, track=True)
    for generator, representation in zip(basis.generators, basis.representation):
        total = Polynomial.zero(variables)
        for cofactor, original in zip(representation, originals):
            total = total + cofactor * original
        assert total == generator
