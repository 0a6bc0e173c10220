"""Finitely presented Q-algebras Q[x]/I with canonical element representatives."""

from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .errors import BudgetExceededError, IdentityFailedError, RingMismatchError
from .GroebnerBasis import DEFAULT_BUDGET, GroebnerBasis, buchberger, normal_form
from .logs import logger
from .MonomialOrder import MonomialOrder
from .Polynomial import DEFAULT_ORDER, Polynomial
from .PolynomialParser import poly_parse


class QuotientRing:
    """Presentation Q[variables]/<relations> with a cached reduced Groebner basis."""

    def __init__(
        self,
        variables: Sequence[str],
        relations: Sequence[Union[str, Polynomial]] = (),
        order: MonomialOrder = DEFAULT_ORDER,
        budget: int = DEFAULT_BUDGET,
        name: Optional[str] = None,
    ):
        """Initialize quotient ring.

        Args:
            variables: Ordered variable names
            relations: Relations, as text or Polynomials over the variables
            order:     Monomial order of the cached basis
            budget:    Step budget for Groebner computations in this ring
            name:      (Optional) label used in output
        """
        self.variables = tuple(variables)
        self.order = order
        self.budget = budget
        self.name = name
        self.relations = tuple(
            rel if isinstance(rel, Polynomial) else poly_parse(rel, self.variables)
            for rel in relations
        )
        self.gb: GroebnerBasis = buchberger(
            self.relations, order, budget=budget, variables=self.variables
        )

        if self.is_trivial:
            logger.warning(
                f"Ring {self.describe()} is the zero ring: 1 lies in the relation ideal"
            )
        else:
            logger.debug(
                f"Ring {self.describe()} has a reduced basis of {len(self.gb)} elements"
            )

    @property
    def is_trivial(self) -> bool:
        """True if 1 lies in the relation ideal."""
        return self.gb.is_unit_ideal

    def describe(self) -> str:
        """Short text description."""
        if self.name:
            return self.name
        relations = ", ".join(str(rel) for rel in self.relations)
        return f"Q[{', '.join(self.variables)}]/<{relations}>"

    def reduce(self, poly: Polynomial) -> Polynomial:
        """Canonical representative of poly modulo the relations."""
        return normal_form(poly, self.gb, budget=self.budget)

    def elem(
        self, value: Union[str, int, Fraction, Polynomial, "RingElement"]
    ) -> "RingElement":
        """Ring element from text, a rational or a polynomial."""
        if isinstance(value, RingElement):
            if value.ring is not self:
                raise RingMismatchError("Element belongs to another ring")
            return value
        if isinstance(value, Polynomial):
            poly = value.embed(self.variables)
        elif isinstance(value, (int, Fraction)):
            poly = Polynomial.constant(self.variables, value)
        else:
            poly = poly_parse(str(value), self.variables)
        return RingElement(self, self.reduce(poly))

    def elems(self, values: Sequence) -> List["RingElement"]:
        """Several ring elements."""
        return [self.elem(value) for value in values]

    def zero(self) -> "RingElement":
        """The zero element."""
        return RingElement(self, Polynomial.zero(self.variables))

    def one(self) -> "RingElement":
        """The unit element."""
        return self.elem(1)

    def gens(self) -> List["RingElement"]:
        """The variables as ring elements."""
        return [self.elem(poly) for poly in Polynomial.generators(self.variables)]

    def evaluate_polynomial(
        self, poly: Polynomial, values: Sequence["RingElement"]
    ) -> "RingElement":
        """Evaluate a polynomial (over any variables) at ring elements."""
        values = [self.elem(value) for value in values]
        result = self.zero()
        for monomial, coefficient in poly.items():
            term = self.elem(coefficient)
            for value, exp in zip(values, monomial):
                if exp:
                    term = term * value**exp
            result = result + term
        return result

    def __repr__(self):
        return f"QuotientRing({self.describe()})"


class RingElement:
    """Element of a QuotientRing, stored as its canonical normal form."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: Polynomial):
        """Initialize ring element; rep must already be in normal form."""
        self.ring = ring
        self.rep = rep

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingMismatchError("Elements of different rings cannot be combined")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.elem(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.reduce(self.rep + other.rep))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.reduce(self.rep - other.rep))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.reduce(self.rep * other.rep))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.elem(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    @property
    def is_zero(self) -> bool:
        """True for the zero element."""
        return self.rep.is_zero

    @property
    def is_constant(self) -> bool:
        """True if the representative is a rational constant."""
        return self.rep.is_constant

    def constant_value(self) -> Fraction:
        """Rational value of a constant element."""
        return self.rep.constant_value()

    def is_unit(self) -> bool:
        """True if the element is invertible in the ring."""
        if self.is_constant:
            return not self.is_zero and not self.ring.is_trivial
        return express_one(self.ring, [self]) is not None

    def __str__(self):
        return self.rep.to_string(self.ring.order)

    def __repr__(self):
        return f"RingElement({self}, ring={self.ring.describe()})"


def ring_make(
    variables: Sequence[str],
    relations: Sequence[Union[str, Polynomial]] = (),
    order: Union[str, MonomialOrder] = DEFAULT_ORDER,
    budget: int = DEFAULT_BUDGET,
    name: Optional[str] = None,
) -> QuotientRing:
    """Build the ring Q[variables]/<relations> and cache its reduced basis."""
    if isinstance(order, str):
        order = MonomialOrder.from_string(order)
    return QuotientRing(variables, relations, order=order, budget=budget, name=name)


def elem(ring: QuotientRing, value) -> RingElement:
    """Ring element from text or a polynomial."""
    return ring.elem(value)


def free_ring(variables: Sequence[str], **kwargs) -> QuotientRing:
    """Polynomial ring without relations."""
    return ring_make(variables, (), **kwargs)


def sphere_ring(
    n: int = 4, names: Optional[Sequence[str]] = None, **kwargs
) -> QuotientRing:
    """Coordinate ring of the real algebraic sphere sum(x_i^2) = 1 in n variables."""
    names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(1, n + 1))
    relation = " + ".join(f"{name}^2" for name in names) + " - 1"
    return ring_make(names, [relation], name=kwargs.pop("name", f"S^{n - 1}"), **kwargs)


def express_one(
    ring: QuotientRing, elements: Sequence[RingElement]
) -> Optional[List[RingElement]]:
    """Cofactors c with sum(c_i * elements_i) = 1 in the ring, or None.

    Runs Buchberger with cofactor tracking on relations + elements; the returned
    cofactors are verified by reduction before they are returned.

    Raises:
        BudgetExceededError: If the step budget is exhausted (distinct from None)
    """
    if not elements:
        raise ValueError("express_one needs at least one element")
    elements = [ring.elem(element) for element in elements]
    originals = list(ring.relations) + [element.rep for element in elements]

    try:
        basis = buchberger(
            originals,
            ring.order,
            track=True,
            budget=ring.budget,
            variables=ring.variables,
        )
    except BudgetExceededError:
        logger.warning(f"express_one: budget exhausted in ring {ring.describe()}")
        raise

    if not basis.is_unit_ideal:
        logger.info(f"express_one: 1 is not in the ideal of {len(elements)} elements")
        return None

    representation = basis.representation[0]
    offset = len(ring.relations)
    # The generator is the constant 1, so its representation expresses 1 directly.
    cofactors = [ring.elem(entry) for entry in representation[offset:]]

    check = ring.zero()
    for cofactor, element in zip(cofactors, elements):
        check = check + cofactor * element
    if check != 1:
        raise IdentityFailedError(f"express_one produced cofactors summing to {check}")

    logger.debug(
        f"express_one: certified {len(elements)} elements in {basis.steps} steps"
    )
    return cofactors
