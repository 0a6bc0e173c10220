"""Module with the spaces polynomial maps go between.

Quadrics Q_{2n-1}: sum(x_i * y_i) = 1 and Q_{2n}: sum(x_i * y_i) = z * (1 - z), the real
algebraic spheres sum(x_i^2) = 1 and (punctured) affine spaces.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..errors import DimensionMismatchError
from ..GroebnerBasis import DEFAULT_BUDGET
from ..Polynomial import Polynomial
from ..QuotientRing import QuotientRing, RingElement, ring_make


class QuadricKind(Enum):
    """Odd quadric Q_{2n-1} or even quadric Q_{2n}."""

    """ Q_{2n-1}: sum(x_i * y_i) = 1 """
    Odd = 0

    """ Q_{2n}: sum(x_i * y_i) = z * (1 - z) """
    Even = 1

    @staticmethod
    def from_string(value: str):
        """Converts a string to a QuadricKind."""
        if value.upper() in ["ODD", "Q_ODD"]:
            return QuadricKind.Odd
        if value.upper() in ["EVEN", "Q_EVEN"]:
            return QuadricKind.Even
        return None


@dataclass(frozen=True)
class QuadricSpec:
    """Smooth affine quadric Q_{2n-1} or Q_{2n}.

    Attributes:
        kind:   Odd or even quadric
        n:      Number of (x_i, y_i) pairs
        x_name: Prefix of the first block of variables
        y_name: Prefix of the second block of variables
        z_name: Name of the extra variable of even quadrics
    """

    kind: QuadricKind
    n: int
    x_name: str = "x"
    y_name: str = "y"
    z_name: str = "z"

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatchError(f"Quadric needs n >= 1, got {self.n}")

    @classmethod
    def odd(cls, n: int, x_name: str = "x", y_name: str = "y") -> "QuadricSpec":
        """Q_{2n-1}."""
        return cls(QuadricKind.Odd, n, x_name, y_name)

    @classmethod
    def even(cls, n: int, x_name: str = "x", y_name: str = "y", z_name: str = "z"):
        """Q_{2n}."""
        return cls(QuadricKind.Even, n, x_name, y_name, z_name)

    @property
    def name(self) -> str:
        """Q_7, Q_4, ..."""
        dimension = 2 * self.n - 1 if self.kind == QuadricKind.Odd else 2 * self.n
        return f"Q_{dimension}"

    @property
    def variables(self) -> Tuple[str, ...]:
        """x1..xn, y1..yn and, for even quadrics, z."""
        names = [f"{self.x_name}{i}" for i in range(1, self.n + 1)]
        names += [f"{self.y_name}{i}" for i in range(1, self.n + 1)]
        if self.kind == QuadricKind.Even:
            names.append(self.z_name)
        return tuple(names)

    @property
    def dimension(self) -> int:
        """Number of coordinates."""
        return len(self.variables)

    @property
    def relation(self) -> Polynomial:
        """The defining polynomial (zero on the quadric)."""
        gens = Polynomial.generators(self.variables)
        xs, ys = gens[: self.n], gens[self.n : 2 * self.n]
        pairing = Polynomial.zero(self.variables)
        for x, y in zip(xs, ys):
            pairing = pairing + x * y
        if self.kind == QuadricKind.Odd:
            return pairing - 1
        z = gens[-1]
        return pairing - z * (1 - z)

    @property
    def relations(self) -> Tuple[Polynomial, ...]:
        """Defining relations."""
        return (self.relation,)

    punctured = False

    def ring(self, budget: int = DEFAULT_BUDGET) -> QuotientRing:
        """Coordinate ring k[Q]."""
        return quadric_ring(self, budget)


@dataclass(frozen=True)
class SphereSpec:
    """Real algebraic sphere sum(x_i^2) = 1 in the given number of coordinates."""

    coordinates: int
    x_name: str = "x"

    @property
    def name(self) -> str:
        """S^{n-1}."""
        return f"S^{self.coordinates - 1}"

    @property
    def variables(self) -> Tuple[str, ...]:
        """x1..xn."""
        return tuple(f"{self.x_name}{i}" for i in range(1, self.coordinates + 1))

    @property
    def dimension(self) -> int:
        """Number of coordinates."""
        return self.coordinates

    @property
    def relation(self) -> Polynomial:
        """sum(x_i^2) - 1."""
        total = Polynomial.zero(self.variables)
        for gen in Polynomial.generators(self.variables):
            total = total + gen * gen
        return total - 1

    @property
    def relations(self) -> Tuple[Polynomial, ...]:
        """Defining relations."""
        return (self.relation,)

    punctured = False

    def ring(self, budget: int = DEFAULT_BUDGET) -> QuotientRing:
        """Coordinate ring of the sphere."""
        return ring_make(self.variables, self.relations, budget=budget, name=self.name)


@dataclass(frozen=True)
class AffineSpace:
    """Affine space, optionally punctured at the origin, optionally cut by relations."""

    variables: Tuple[str, ...]
    relations: Tuple[Polynomial, ...] = field(default=())
    punctured: bool = False
    label: Optional[str] = None

    @classmethod
    def of_dimension(cls, dimension: int, prefix: str = "u", punctured: bool = False):
        """A^n (or A^n minus 0) with variables u1..un."""
        names = tuple(f"{prefix}{i}" for i in range(1, dimension + 1))
        return cls(names, (), punctured)

    @property
    def name(self) -> str:
        """A^n, A^n\\0 or the label."""
        if self.label:
            return self.label
        return f"A^{self.dimension}\\0" if self.punctured else f"A^{self.dimension}"

    @property
    def dimension(self) -> int:
        """Number of coordinates."""
        return len(self.variables)

    def ring(self, budget: int = DEFAULT_BUDGET) -> QuotientRing:
        """Coordinate ring (without the localization of a puncture)."""
        return ring_make(self.variables, self.relations, budget=budget, name=self.name)


def punctured_affine_space(dimension: int, prefix: str = "u") -> AffineSpace:
    """A^n minus the origin."""
    return AffineSpace.of_dimension(dimension, prefix, punctured=True)


def quadric_ring(spec: QuadricSpec, budget: int = DEFAULT_BUDGET) -> QuotientRing:
    """k[x, y]/<sum(x_i y_i) - 1> or k[x, y, z]/<sum(x_i y_i) - z(1 - z)>."""
    return ring_make(spec.variables, spec.relations, budget=budget, name=spec.name)


def quadric_member(spec, point: Sequence) -> bool:
    """True iff the point satisfies the defining relation(s) of the space.

    Args:
        spec:  QuadricSpec, SphereSpec or AffineSpace
        point: Coordinates, all rationals or all elements of one ring

    Raises:
        DimensionMismatchError: Arity does not match the space
    """
    if len(point) != spec.dimension:
        raise DimensionMismatchError(
            f"{spec.name} has {spec.dimension} coordinates, got a point with {len(point)}"
        )

    ring_elements = [value for value in point if isinstance(value, RingElement)]
    if ring_elements:
        ring = ring_elements[0].ring
        return all(
            ring.evaluate_polynomial(relation, point).is_zero
            for relation in spec.relations
        )
    return all(
        relation.evaluate([Fraction(value) for value in point]) == 0
        for relation in spec.relations
    )
