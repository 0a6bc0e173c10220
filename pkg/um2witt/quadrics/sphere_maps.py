"""Explicit morphisms between quadrics and spheres: f, g, [-1], H, h and alpha.

Row level operations take certified rows and return certified rows (or quadric
points); the symbolic maps are PolyMaps over free polynomial rings, verified modulo
the source relation only.
"""

from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import (
    BadCertificateError,
    ConfigurationError,
    DimensionMismatchError,
    IdentityFailedError,
    MissingRelationError,
    NotAUnitError,
    SymmetricModeError,
)
from ..logs import logger
from ..Polynomial import Polynomial
from ..QuotientRing import QuotientRing, RingElement
from ..SkewMatrix import Matrix, determinant, matrix_product
from ..UnimodularRow import UnimodularRow
from .PolyMap import PolyMap
from .QuadricSpec import AffineSpace, QuadricSpec, SphereSpec, quadric_member

Q4 = QuadricSpec.even(2)
Q7 = QuadricSpec.odd(4, "a", "b")
S3 = SphereSpec(4)
S2 = SphereSpec(3, "u")

MAP_NAMES = ["f", "g", "H", "h", "alpha", "alpha-symmetric"]


def _require_length(row: UnimodularRow, length: int, operation: str):
    if len(row) != length:
        raise DimensionMismatchError(
            f"{operation} needs a row of length {length}, got {len(row)}"
        )


def matrix_encoding(row: UnimodularRow) -> Tuple[Matrix, Matrix]:
    """The pair M = [[a1, a2], [-b2, b1]], N = [[a3, a4], [-b4, b3]].

    det M + det N = sum(a_i * b_i) = 1 is asserted.
    """
    _require_length(row, 4, "matrix_encoding")
    a1, a2, a3, a4 = row.entries
    b1, b2, b3, b4 = row.certificate
    first = ((a1, a2), (-b2, b1))
    second = ((a3, a4), (-b4, b3))
    if determinant(first) + determinant(second) != 1:
        raise IdentityFailedError("det M + det N does not reduce to 1")
    return first, second


def map_f(row: UnimodularRow) -> Tuple[RingElement, ...]:
    """f: Q_7 -> Q_4 on a certified row of length 4.

    Returns (a1a3 - a2b4, a1a4 + a2b3, -a4b2 + b1b3, a3b2 + b1b4, a1b1 + a2b2), checked
    for membership in Q_4 and against (MN, det M) from the matrix encoding.
    """
    _require_length(row, 4, "map_f")
    a1, a2, a3, a4 = row.entries
    b1, b2, b3, b4 = row.certificate
    point = (
        a1 * a3 - a2 * b4,
        a1 * a4 + a2 * b3,
        -(a4 * b2) + b1 * b3,
        a3 * b2 + b1 * b4,
        a1 * b1 + a2 * b2,
    )

    if not quadric_member(Q4, point):
        raise IdentityFailedError("f(row) does not satisfy x1y1 + x2y2 = z(1 - z)")

    first, second = matrix_encoding(row)
    product = matrix_product(first, second)
    from_matrices = (
        product[0][0],
        product[0][1],
        product[1][1],
        -product[1][0],
        determinant(first),
    )
    if from_matrices != point:
        raise IdentityFailedError("f formula disagrees with (MN, det M)")
    return point


def map_g(
    point: Tuple[RingElement, ...], alpha: Union[RingElement, int, Fraction] = -1
) -> Tuple[RingElement, ...]:
    """g: Q_4 x G_m -> A^3, (x1, x2, y1, y2, z, alpha) -> (2x1, 2x2, (alpha - 1)z + 1).

    Alpha must be a unit of the point's ring; a non-constant alpha is checked by
    expressing 1 in the ideal it generates.

    Raises:
        DimensionMismatchError: Point is not a Q_4 point
        NotAUnitError:          Alpha is not invertible in the ring
        BudgetExceededError:    Invertibility of a non-constant alpha undecided
    """
    if len(point) != Q4.dimension:
        raise DimensionMismatchError(f"g needs a Q_4 point, got {len(point)} coordinates")
    ring = point[0].ring
    alpha = ring.elem(alpha)
    if not alpha.is_unit():
        raise NotAUnitError(f"g needs a unit alpha, got {alpha}")
    x1, x2, _, _, z = point
    return (x1 * 2, x2 * 2, (alpha - 1) * z + 1)


def compose_H(row: UnimodularRow) -> UnimodularRow:
    """H = g o [-1] o f with the derived certificate (2y1, 2y2, 1 - 2z).

    The certificate identity 4x1y1 + 4x2y2 + (1 - 2z)^2 = 1 follows from the Q_4
    relation and is verified on construction of the returned row.
    """
    x1, x2, y1, y2, z = map_f(row)
    image = map_g((x1, x2, y1, y2, z), -1)
    certificate = (y1 * 2, y2 * 2, 1 - z * 2)
    try:
        return UnimodularRow(row.ring, image, certificate)
    except BadCertificateError as e:
        raise IdentityFailedError(f"H certificate failed: {e}") from e


def map_h(ring: QuotientRing) -> UnimodularRow:
    """h: S^3 -> Q_7, (x1..x4) -> (x1..x4, x1..x4) as a certified row.

    Raises:
        DimensionMismatchError: Ring does not have four variables
        MissingRelationError:   sum(x_i^2) = 1 does not hold in the ring
    """
    gens = ring.gens()
    if len(gens) != 4:
        raise DimensionMismatchError(f"h needs a ring in 4 variables, got {len(gens)}")
    try:
        return UnimodularRow(ring, tuple(gens), tuple(gens))
    except BadCertificateError as e:
        raise MissingRelationError(
            f"{ring.describe()} lacks the sphere relation sum(x_i^2) = 1"
        ) from e


def map_alpha(row: UnimodularRow, symmetric: bool = False) -> UnimodularRow:
    """alpha: Um_4 -> Um_3.

    Args:
        row:       Certified row of length 4
        symmetric: Use (2a1a3 - 2a2a4, 2a1a4 + 2a2a3, a3^2 + a4^2 - a1^2 - a2^2) with
                   itself as certificate; only for rows whose certificate is the row

    Raises:
        SymmetricModeError: Symmetric mode on a row with b != a
    """
    _require_length(row, 4, "map_alpha")
    if not symmetric:
        return compose_H(row)

    if not row.symmetric():
        raise SymmetricModeError(
            "Symmetric alpha applies only to rows certified by themselves (b = a); "
            "the general formula depends on the certificate, use the default mode"
        )
    a1, a2, a3, a4 = row.entries
    image = (
        a1 * a3 * 2 - a2 * a4 * 2,
        a1 * a4 * 2 + a2 * a3 * 2,
        a3 * a3 + a4 * a4 - a1 * a1 - a2 * a2,
    )
    try:
        return UnimodularRow(row.ring, image, image)
    except BadCertificateError as e:
        raise IdentityFailedError(f"Norm identity failed for symmetric alpha: {e}") from e


def apply_named_map(
    name: str,
    row: Optional[UnimodularRow] = None,
    ring: Optional[QuotientRing] = None,
    point: Optional[Tuple[RingElement, ...]] = None,
    alpha=-1,
):
    """Dispatch on the names f, g, H, h, alpha and alpha-symmetric.

    Returns a UnimodularRow for H, h and alpha, and a tuple of ring elements for f
    and g.
    """
    if name == "f":
        return map_f(row)
    if name == "g":
        return map_g(point if point is not None else map_f(row), alpha)
    if name == "H":
        return compose_H(row)
    if name == "h":
        return map_h(ring if ring is not None else row.ring)
    if name == "alpha":
        return map_alpha(row)
    if name == "alpha-symmetric":
        return map_alpha(row, symmetric=True)
    raise ConfigurationError(f"Unknown map '{name}', expected one of {MAP_NAMES}")


def _gens(space):
    return Polynomial.generators(space.variables)


def f_map() -> PolyMap:
    """f: Q_7 -> Q_4 over the free ring on a1..a4, b1..b4."""
    a1, a2, a3, a4, b1, b2, b3, b4 = _gens(Q7)
    components = (
        a1 * a3 - a2 * b4,
        a1 * a4 + a2 * b3,
        -(a4 * b2) + b1 * b3,
        a3 * b2 + b1 * b4,
        a1 * b1 + a2 * b2,
    )
    return PolyMap("f", Q7, Q4, components)


def g_map(alpha: Optional[Union[int, Fraction]] = None) -> PolyMap:
    """g: Q_4 x G_m -> A^3, with alpha symbolic (an extra variable) or a constant."""
    target = AffineSpace.of_dimension(3)
    if alpha is None:
        source = AffineSpace(
            Q4.variables + ("alpha",),
            (Q4.relation.embed(Q4.variables + ("alpha",)),),
            label="Q_4 x G_m",
        )
        x1, x2, _, _, z, unit = _gens(source)
    else:
        source = Q4
        x1, x2, _, _, z = _gens(source)
        unit = Polynomial.constant(source.variables, Fraction(alpha))
    return PolyMap("g", source, target, (x1 * 2, x2 * 2, (unit - 1) * z + 1))


def minus_one(g: PolyMap) -> PolyMap:
    """[-1]: specialize the G_m coordinate of g to -1 and drop it from the source."""
    specialized = g.substitute({"alpha": -1})
    components = tuple(
        component.embed(Q4.variables) for component in specialized.components
    )
    return PolyMap("g o [-1]", Q4, specialized.target, components)


def H_map() -> PolyMap:
    """H: Q_7 -> A^3 \\ 0 with certificate (2y1, 2y2, 1 - 2z) pulled back along f."""
    f = f_map()
    g = minus_one(g_map())
    _, _, y1, y2, z = _gens(Q4)
    punctured = AffineSpace.of_dimension(3, punctured=True)
    g_punctured = PolyMap(
        "g o [-1]", Q4, punctured, g.components, (y1 * 2, y2 * 2, 1 - z * 2)
    )
    return g_punctured.compose(f, name="H")


def h_map() -> PolyMap:
    """h: S^3 -> Q_7, x -> (x, x)."""
    xs = _gens(S3)
    return PolyMap("h", S3, Q7, tuple(xs) + tuple(xs))


def hopf_map() -> PolyMap:
    """The Hopf map S^3 -> S^2."""
    x1, x2, x3, x4 = _gens(S3)
    components = (
        x1 * x3 * 2 - x2 * x4 * 2,
        x1 * x4 * 2 + x2 * x3 * 2,
        x3 * x3 + x4 * x4 - x1 * x1 - x2 * x2,
    )
    return PolyMap("hopf", S3, S2, components)


def alpha_map(symmetric: bool = False) -> PolyMap:
    """alpha as a symbolic map.

    The default is H on Q_7. The symmetric variant is the Hopf formula in a1..a4
    on the free affine space; its norm identity holds without relations.
    """
    if not symmetric:
        return H_map()
    source = AffineSpace(tuple(f"a{i}" for i in range(1, 5)))
    a1, a2, a3, a4 = _gens(source)
    components = (
        a1 * a3 * 2 - a2 * a4 * 2,
        a1 * a4 * 2 + a2 * a3 * 2,
        a3 * a3 + a4 * a4 - a1 * a1 - a2 * a2,
    )
    return PolyMap("alpha-symmetric", source, AffineSpace.of_dimension(3), components)


def composite_map() -> PolyMap:
    """H o h on S^3."""
    composite = H_map().compose(h_map(), name="H o h")
    logger.debug(f"H o h has components {[str(c) for c in composite.components]}")
    return composite
