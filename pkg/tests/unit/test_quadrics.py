from fractions import Fraction

import pytest

from um2witt.errors import (
    ConfigurationError,
    DimensionMismatchError,
    IdentityFailedError,
    MissingRelationError,
    NotAUnitError,
    SymmetricModeError,
    VerificationError,
)
from um2witt.Polynomial import Polynomial
from um2witt.PolynomialParser import poly_parse
from um2witt.QuotientRing import free_ring, ring_make, sphere_ring
from um2witt.quadrics.PolyMap import PolyMap
from um2witt.quadrics.QuadricSpec import (
    AffineSpace,
    QuadricKind,
    QuadricSpec,
    SphereSpec,
    punctured_affine_space,
    quadric_member,
)
from um2witt.quadrics.sphere_maps import (
    Q4,
    Q7,
    S3,
    H_map,
    alpha_map,
    apply_named_map,
    compose_H,
    composite_map,
    f_map,
    g_map,
    hopf_map,
    map_alpha,
    map_f,
    map_g,
    map_h,
    matrix_encoding,
    minus_one,
)
from um2witt.UnimodularRow import base_row, row_make


@pytest.fixture(scope="module")
def line():
    return free_ring(["t"])


@pytest.fixture(scope="module")
def sphere():
    return sphere_ring(4, ["x", "y", "z", "w"])


def as_ints(elements):
    return tuple(int(element.constant_value()) for element in elements)


@pytest.mark.parametrize(
    ("text", "expected"),
    [("odd", QuadricKind.Odd), ("Q_EVEN", QuadricKind.Even), ("sphere", None)],
)
def test_quadric_kind_from_string(text, expected):
    assert QuadricKind.from_string(text) is expected


def test_quadric_names_and_variables():
    assert Q7.name == "Q_7"
    assert Q7.variables == ("a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4")
    assert Q4.name == "Q_4"
    assert Q4.variables == ("x1", "x2", "y1", "y2", "z")
    assert str(Q4.relation) == "x1*y1 + x2*y2 + z^2 - z"
    assert S3.name == "S^3"
    assert punctured_affine_space(3).name == "A^3\\0"


def test_quadric_needs_a_pair():
    with pytest.raises(DimensionMismatchError):
        QuadricSpec.odd(0)


@pytest.mark.parametrize(
    ("spec", "point", "expected"),
    [
        (QuadricSpec.even(2), (1, 0, 0, 0, 1), True),
        (QuadricSpec.odd(3), (1, 0, 0, 1, 0, 0), True),
        (QuadricSpec.even(2), (1, 1, 1, 1, 0), False),
        (SphereSpec(4), (Fraction(3, 5), Fraction(4, 5), 0, 0), True),
        (SphereSpec(4), (1, 1, 0, 0), False),
        (AffineSpace.of_dimension(3), (5, 0, -2), True),
    ],
)
def test_quadric_member(spec, point, expected):
    assert quadric_member(spec, point) is expected


def test_quadric_member_over_a_ring(sphere):
    spec = SphereSpec(4)
    assert quadric_member(spec, sphere.gens())
    assert not quadric_member(spec, [sphere.elem("x"), sphere.elem("y"), 0, 0])


def test_quadric_member_arity():
    with pytest.raises(DimensionMismatchError):
        quadric_member(Q4, (1, 0, 0, 0))


def test_matrix_encoding(line):
    row = row_make(line, ["1", "0", "1", "0"], ["1", "0", "0", "0"])
    first, second = matrix_encoding(row)
    assert [as_ints(r) for r in first] == [(1, 0), (0, 1)]
    assert [as_ints(r) for r in second] == [(1, 0), (0, 0)]


@pytest.mark.parametrize(
    ("entries", "certificate", "expected"),
    [
        (["1", "0", "1", "0"], ["1", "0", "0", "0"], (1, 0, 0, 0, 1)),
        (["1", "0", "0", "0"], ["1", "0", "0", "0"], (0, 0, 0, 0, 1)),
        (["0", "0", "1", "0"], ["0", "0", "1", "0"], (0, 0, 0, 0, 0)),
    ],
)
def test_map_f_examples(line, entries, certificate, expected):
    assert as_ints(map_f(row_make(line, entries, certificate))) == expected


def test_map_f_needs_length_four(line):
    with pytest.raises(DimensionMismatchError):
        map_f(base_row(line, 3))


@pytest.mark.parametrize(
    ("point", "alpha", "expected"),
    [
        ((1, 0, 0, 0, 1), -1, (2, 0, -1)),
        ((1, 0, 0, 0, 1), 1, (2, 0, 1)),
        ((0, 3, 0, 0, 0), -1, (0, 6, 1)),
    ],
)
def test_map_g_examples(line, point, alpha, expected):
    assert as_ints(map_g(tuple(line.elems(point)), alpha)) == expected


def test_map_g_symbolic_alpha_minus_one(line):
    x1, x2, y1, y2, z = (line.elem(value) for value in ["t", "0", "0", "0", "t^2"])
    assert map_g((x1, x2, y1, y2, z), -1) == (x1 * 2, x2 * 2, 1 - z * 2)


def test_map_g_rejects_zero_alpha(line):
    with pytest.raises(NotAUnitError):
        map_g(tuple(line.elems([1, 0, 0, 0, 1])), 0)


def test_map_g_checks_that_alpha_is_a_unit(line):
    with pytest.raises(NotAUnitError):
        map_g(tuple(line.elems([1, 0, 0, 0, 1])), line.elem("t"))
    laurent = ring_make(["s", "t"], ["s*t - 1"])
    image = map_g(tuple(laurent.elems([1, 0, 0, 0, 1])), laurent.elem("s"))
    assert image == (2, 0, laurent.elem("s"))


def test_map_g_needs_q4_point(line):
    with pytest.raises(DimensionMismatchError):
        map_g(tuple(line.elems([1, 0, 0])), -1)


@pytest.mark.parametrize(
    ("entries", "certificate", "image", "derived"),
    [
        (["1", "0", "0", "0"], ["1", "0", "0", "0"], (0, 0, -1), (0, 0, -1)),
        (["1", "0", "1", "0"], ["1", "0", "0", "0"], (2, 0, -1), (0, 0, -1)),
        (["0", "0", "1", "0"], ["0", "0", "1", "0"], (0, 0, 1), (0, 0, 1)),
    ],
)
def test_compose_H_examples(line, entries, certificate, image, derived):
    result = compose_H(row_make(line, entries, certificate))
    assert as_ints(result.entries) == image
    assert as_ints(result.certificate) == derived


def test_compose_H_of_h_is_the_hopf_map(sphere):
    result = compose_H(map_h(sphere))
    expected = sphere.elems(
        ["2*x*z - 2*y*w", "2*x*w + 2*y*z", "z^2 + w^2 - x^2 - y^2"]
    )
    assert result.entries == tuple(expected)


def test_map_h_requires_the_sphere_relation():
    with pytest.raises(MissingRelationError):
        map_h(free_ring(["x", "y", "z", "w"]))


def test_map_h_requires_four_variables():
    with pytest.raises(DimensionMismatchError):
        map_h(sphere_ring(3))


def test_map_alpha_symmetric_on_the_sphere(sphere):
    row = map_h(sphere)
    symmetric = map_alpha(row, symmetric=True)
    assert symmetric.entries == symmetric.certificate
    assert symmetric.entries == map_alpha(row).entries


@pytest.mark.parametrize(
    ("entries", "expected"),
    [(["1", "0", "0", "0"], (0, 0, -1)), (["0", "0", "1", "0"], (0, 0, 1))],
)
def test_map_alpha_symmetric_examples(line, entries, expected):
    row = row_make(line, entries, entries)
    assert as_ints(map_alpha(row, symmetric=True).entries) == expected


def test_map_alpha_symmetric_refuses_other_certificates(line):
    row = row_make(line, ["1", "0", "1", "0"], ["1", "0", "0", "0"])
    with pytest.raises(SymmetricModeError):
        map_alpha(row, symmetric=True)
    assert as_ints(map_alpha(row).entries) == (2, 0, -1)


def test_apply_named_map(sphere):
    row = map_h(sphere)
    assert apply_named_map("h", ring=sphere) == row
    assert apply_named_map("H", row=row) == compose_H(row)
    assert len(apply_named_map("g", row=row)) == 3
    with pytest.raises(ConfigurationError):
        apply_named_map("beta", row=row)


def test_f_is_well_defined():
    verified = f_map().verify()
    assert verified.verified
    ((cofactor,),) = verified.witness
    assert str(cofactor) == "a1*b1 + a2*b2"


def test_H_verifies_with_certificate():
    verified = H_map().verify()
    assert verified.target.punctured
    assert len(verified.witness) == 1


def test_hopf_map_lands_on_the_sphere():
    assert hopf_map().verify().verified


def test_symmetric_alpha_norm_identity():
    symmetric = alpha_map(symmetric=True)
    variables = symmetric.source.variables
    squares = sum((c * c for c in symmetric.components), Polynomial.zero(variables))
    norm = poly_parse("a1^2 + a2^2 + a3^2 + a4^2", variables)
    assert squares == norm * norm
    assert symmetric.verify().witness == ()


def test_minus_one_equals_g_at_minus_one():
    assert minus_one(g_map()).components == g_map(-1).components


def test_composite_map_reduces_to_hopf():
    ring = S3.ring()
    reduced = [ring.elem(component) for component in composite_map().components]
    assert reduced == [ring.elem(component) for component in hopf_map().components]


def test_verify_detects_wrong_target():
    wrong = PolyMap.from_strings("wrong", Q7, Q4, ["a1", "0", "a1", "0", "0"])
    with pytest.raises(IdentityFailedError):
        wrong.verify()


def test_verify_needs_certificate_for_punctured_target():
    target = punctured_affine_space(3)
    bare = PolyMap.from_strings("bare", S3, target, ["x1", "x2", "x3"])
    with pytest.raises(VerificationError):
        bare.verify()


def test_compose_checks_dimensions():
    with pytest.raises(DimensionMismatchError):
        f_map().compose(hopf_map())


def test_to_dict():
    data = g_map(-1).to_dict()
    assert data["source"] == "Q_4"
    assert data["components"] == ["2*x1", "2*x2", "-2*z + 1"]
