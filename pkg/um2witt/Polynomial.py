"""Exact multivariate polynomials over the rationals."""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatchError, UndeclaredVariableError, VariableMismatchError
from .MonomialOrder import Monomial, MonomialOrder, monomial_product

Coefficient = Union[int, Fraction]

DEFAULT_ORDER = MonomialOrder.degrevlex()


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction or rational string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Cannot use {type(value).__name__} as exact rational coefficient")


class Polynomial:
    """Polynomial with rational coefficients over an ordered list of variables.

    Only nonzero coefficients are stored, so two polynomials over the same variables
    are equal iff their term maps are equal. Instances are immutable.
    """

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Monomial, Coefficient]] = None,
    ):
        """Initialize polynomial.

        Args:
            variables: Ordered variable names of the ambient polynomial ring
            terms:     (Optional) map exponent tuple -> coefficient
        """
        self._variables = tuple(variables)
        self._hash = None
        clean = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(exp) for exp in monomial)
            if len(monomial) != len(self._variables):
                raise DimensionMismatchError(
                    f"Monomial {monomial} does not match {len(self._variables)} variables"
                )
            if any(exp < 0 for exp in monomial):
                raise ValueError(f"Negative exponent in monomial {monomial}")
            coefficient = to_fraction(coefficient)
            if coefficient != 0:
                clean[monomial] = coefficient
        self._terms = clean

    @classmethod
    def _from_clean_terms(cls, variables: Tuple[str, ...], terms: Dict) -> "Polynomial":
        """Wrap a term map that already holds only nonzero Fractions."""
        poly = cls.__new__(cls)
        poly._variables = variables
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        """The zero polynomial."""
        return cls._from_clean_terms(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Coefficient) -> "Polynomial":
        """A constant polynomial."""
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "Polynomial":
        """The constant polynomial 1."""
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        """The polynomial consisting of a single variable."""
        variables = tuple(variables)
        if name not in variables:
            raise UndeclaredVariableError(name)
        monomial = tuple(1 if var == name else 0 for var in variables)
        return cls._from_clean_terms(variables, {monomial: Fraction(1)})

    @classmethod
    def generators(cls, variables: Sequence[str]) -> List["Polynomial"]:
        """All variables of the ring as polynomials."""
        return [cls.variable(variables, name) for name in variables]

    @property
    def variables(self) -> Tuple[str, ...]:
        """Ordered variable names."""
        return self._variables

    @property
    def nvars(self) -> int:
        """Number of ambient variables."""
        return len(self._variables)

    def terms(self) -> Dict[Monomial, Fraction]:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Monomial, Fraction]]:
        """Iterate over (monomial, coefficient) pairs without copying."""
        return self._terms.items()

    def monomials(self) -> List[Monomial]:
        """Monomials with nonzero coefficient."""
        return list(self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        """Coefficient of a monomial (0 if absent)."""
        return self._terms.get(tuple(monomial), Fraction(0))

    def __len__(self):
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    @property
    def is_constant(self) -> bool:
        """True for constants (including zero)."""
        return all(sum(monomial) == 0 for monomial in self._terms)

    def constant_value(self) -> Fraction:
        """Constant term."""
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return max(sum(monomial) for monomial in self._terms)

    def sorted_terms(
        self, order: MonomialOrder = DEFAULT_ORDER
    ) -> List[Tuple[Monomial, Fraction]]:
        """Terms in decreasing monomial order."""
        return sorted(
            self._terms.items(), key=lambda item: order.key(item[0]), reverse=True
        )

    def leading_term(
        self, order: MonomialOrder = DEFAULT_ORDER
    ) -> Tuple[Monomial, Fraction]:
        """Leading (monomial, coefficient) pair."""
        if self.is_zero:
            raise ValueError("The zero polynomial has no leading term")
        monomial = max(self._terms, key=order.key)
        return monomial, self._terms[monomial]

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        """Leading monomial."""
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = DEFAULT_ORDER) -> Fraction:
        """Leading coefficient."""
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> "Polynomial":
        """Scale so the leading coefficient is 1."""
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def _check_compatible(self, other: "Polynomial"):
        if self._variables != other._variables:
            raise VariableMismatchError(
                f"Variables {self._variables} and {other._variables} differ"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = terms.get(monomial, 0) + coefficient
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial._from_clean_terms(self._variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean_terms(
            self._variables, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = monomial_product(m1, m2)
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return Polynomial._from_clean_terms(
            self._variables, {m: c for m, c in terms.items() if c != 0}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent}")
        result = Polynomial.one(self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Coefficient) -> "Polynomial":
        """Multiply by a rational constant."""
        factor = to_fraction(factor)
        if factor == 0:
            return Polynomial.zero(self._variables)
        return Polynomial._from_clean_terms(
            self._variables, {m: c * factor for m, c in self._terms.items()}
        )

    def mul_term(self, monomial: Monomial, coefficient: Coefficient) -> "Polynomial":
        """Multiply by a single term."""
        coefficient = to_fraction(coefficient)
        if coefficient == 0:
            return Polynomial.zero(self._variables)
        return Polynomial._from_clean_terms(
            self._variables,
            {
                monomial_product(m, monomial): c * coefficient
                for m, c in self._terms.items()
            },
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def substitute(self, mapping: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for variables.

        Args:
            mapping: variable name -> polynomial; all images must share one variable
                     list, variables not in mapping must exist in that list too

        Returns:
            The substituted polynomial over the images' variables
        """
        images = list(mapping.values())
        if not images:
            return self
        target = images[0].variables
        for image in images:
            if image.variables != target:
                raise VariableMismatchError("Substitution images use different variables")

        replacements = []
        for name in self._variables:
            if name in mapping:
                replacements.append(mapping[name])
            else:
                replacements.append(Polynomial.variable(target, name))

        return self._evaluate_with(replacements, Polynomial.zero(target))

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for the i-th variable."""
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f"Expected {self.nvars} images, got {len(images)}"
            )
        if not images:
            return self
        return self.substitute(dict(zip(self._variables, images)))

    def _evaluate_with(self, values: Sequence, zero):
        powers = [{0: None} for _ in values]
        result = zero
        for monomial, coefficient in self._terms.items():
            term = None
            for index, exp in enumerate(monomial):
                if exp == 0:
                    continue
                cache = powers[index]
                if exp not in cache:
                    cache[exp] = values[index] ** exp
                term = cache[exp] if term is None else term * cache[exp]
            if term is None:
                result = result + coefficient
            else:
                result = result + term * coefficient
        return result

    def evaluate(self, values: Sequence[Coefficient]) -> Fraction:
        """Exact evaluation at a rational point."""
        if len(values) != self.nvars:
            raise DimensionMismatchError(
                f"Expected {self.nvars} values, got {len(values)}"
            )
        return self._evaluate_with([to_fraction(v) for v in values], Fraction(0))

    def derivative(self, name: str) -> "Polynomial":
        """Partial derivative with respect to a variable."""
        if name not in self._variables:
            raise UndeclaredVariableError(name)
        index = self._variables.index(name)
        terms = {}
        for monomial, coefficient in self._terms.items():
            exp = monomial[index]
            if exp:
                lowered = monomial[:index] + (exp - 1,) + monomial[index + 1 :]
                terms[lowered] = coefficient * exp
        return Polynomial._from_clean_terms(self._variables, terms)

    def embed(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over another variable list containing all used variables."""
        variables = tuple(variables)
        if variables == self._variables:
            return self
        positions = []
        for index, name in enumerate(self._variables):
            used = any(monomial[index] for monomial in self._terms)
            if name in variables:
                positions.append(variables.index(name))
            elif used:
                raise UndeclaredVariableError(name)
            else:
                positions.append(None)
        terms = {}
        for monomial, coefficient in self._terms.items():
            new = [0] * len(variables)
            for index, exp in enumerate(monomial):
                if exp:
                    new[positions[index]] = exp
            terms[tuple(new)] = coefficient
        return Polynomial._from_clean_terms(variables, terms)

    def used_variables(self) -> List[str]:
        """Variables that occur with positive exponent."""
        return [
            name
            for index, name in enumerate(self._variables)
            if any(monomial[index] for monomial in self._terms)
        ]

    def to_string(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        """Deterministic text form, parseable by poly_parse."""
        if self.is_zero:
            return "0"

        pieces = []
        for monomial, coefficient in self.sorted_terms(order):
            factors = []
            for name, exp in zip(self._variables, monomial):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])

            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")

        return " ".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, variables={list(self._variables)})"
