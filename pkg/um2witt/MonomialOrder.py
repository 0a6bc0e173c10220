"""Module for monomial orders used by polynomial division and Groebner bases."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .errors import ConfigurationError

Monomial = Tuple[int, ...]


class OrderKind(Enum):
    """Kind of monomial order."""

    """ Degree reverse lexicographic order. """
    DegRevLex = 0

    """ Pure lexicographic order. """
    Lex = 1

    @staticmethod
    def from_string(value: str):
        """Converts a string to an OrderKind."""
        if value.upper() in ["DEGREVLEX", "GREVLEX", "DRL"]:
            return OrderKind.DegRevLex

        if value.upper() in ["LEX", "PLEX"]:
            return OrderKind.Lex

        return None

    def __str__(self):
        return "degrevlex" if self is OrderKind.DegRevLex else "lex"


@dataclass(frozen=True)
class MonomialOrder:
    """Total, multiplicative monomial order with 1 as minimum.

    Attributes:
        kind (OrderKind):            degrevlex or lex
        permutation (Tuple[int]):    (Optional) position of each variable in the
                                     comparison; None keeps the declared order
    """

    kind: OrderKind = OrderKind.DegRevLex
    permutation: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_string(
        cls, value: str, permutation: Optional[Sequence[int]] = None
    ) -> "MonomialOrder":
        """Create a MonomialOrder from its name.

        Args:
            value (str):          Order name (degrevlex, grevlex, lex)
            permutation:          (Optional) variable reordering

        Returns:
            MonomialOrder: the requested order

        Raises:
            ConfigurationError: If the name is not a known order
        """
        kind = OrderKind.from_string(str(value))
        if kind is None:
            raise ConfigurationError(f"Unknown monomial order '{value}'")

        if permutation is not None:
            permutation = tuple(int(index) for index in permutation)
            if sorted(permutation) != list(range(len(permutation))):
                raise ConfigurationError(
                    f"Variable permutation {permutation} is not a permutation"
                )

        return cls(kind=kind, permutation=permutation)

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        """The default order."""
        return cls(OrderKind.DegRevLex)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        """Lexicographic order in the declared variable order."""
        return cls(OrderKind.Lex)

    def key(self, monomial: Monomial) -> Tuple:
        """Sort key; a larger key means a larger monomial."""
        if self.permutation is not None:
            monomial = tuple(monomial[index] for index in self.permutation)

        if self.kind is OrderKind.Lex:
            return tuple(monomial)

        return (sum(monomial), tuple(-exp for exp in reversed(monomial)))

    def __str__(self):
        return str(self.kind)


def monomial_divides(divisor: Monomial, monomial: Monomial) -> bool:
    """True if divisor divides monomial."""
    return all(d <= m for d, m in zip(divisor, monomial))


def monomial_lcm(first: Monomial, second: Monomial) -> Monomial:
    """Least common multiple of two monomials."""
    return tuple(max(a, b) for a, b in zip(first, second))


def monomial_quotient(monomial: Monomial, divisor: Monomial) -> Monomial:
    """Exact quotient monomial / divisor (divisor must divide monomial)."""
    return tuple(m - d for m, d in zip(monomial, divisor))


def monomial_product(first: Monomial, second: Monomial) -> Monomial:
    """Product of two monomials."""
    return tuple(a + b for a, b in zip(first, second))


def monomials_coprime(first: Monomial, second: Monomial) -> bool:
    """True if the monomials share no variable."""
    return all(a == 0 or b == 0 for a, b in zip(first, second))
