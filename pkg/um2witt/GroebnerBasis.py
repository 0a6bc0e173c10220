"""Groebner bases by Buchberger's algorithm, with optional cofactor tracking.

With tracking enabled every basis element carries its representation as a
combination of the original generators, so ideal membership comes with a
checkable certificate.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    BudgetExceededError,
    IdentityFailedError,
    InputError,
    TrackingAbsentError,
    VariableMismatchError,
)
from .logs import logger
from .MonomialOrder import (
    Monomial,
    MonomialOrder,
    monomial_divides,
    monomial_lcm,
    monomial_product,
    monomial_quotient,
    monomials_coprime,
)
from .Polynomial import DEFAULT_ORDER, Polynomial

DEFAULT_BUDGET = 1_000_000

Representation = List[Polynomial]


class StepCounter:
    """Counts reduction steps and enforces a budget."""

    def __init__(self, budget: int = DEFAULT_BUDGET, context: str = "Groebner basis"):
        """Initialize step counter.

        Args:
            budget (int):  Maximal number of reduction steps
            context (str): Label used in the budget error
        """
        self.budget = budget
        self.context = context
        self.steps = 0

    def tick(self):
        """Count one reduction step."""
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(self.budget, self.context)


@dataclass(frozen=True)
class GroebnerBasis:
    """Groebner basis of a polynomial ideal.

    Attributes:
        generators:     Basis polynomials, sorted by decreasing leading monomial
        order:          Monomial order the basis refers to
        reduced:        True for the reduced basis
        variables:      Ambient variables
        originals:      (Optional) generators the basis was computed from, when tracked
        representation: (Optional) representation[k][j] is the cofactor of originals[j]
                        in generators[k]
        steps:          Reduction steps spent
    """

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool
    variables: Tuple[str, ...]
    originals: Optional[Tuple[Polynomial, ...]] = None
    representation: Optional[Tuple[Tuple[Polynomial, ...], ...]] = None
    steps: int = 0

    @property
    def tracked(self) -> bool:
        """True if cofactors relative to the originals are available."""
        return self.representation is not None

    @property
    def is_unit_ideal(self) -> bool:
        """True if the ideal contains 1."""
        return len(self.generators) == 1 and self.generators[0] == 1

    def contains(self, poly: Polynomial, budget: int = DEFAULT_BUDGET) -> bool:
        """Ideal membership test."""
        return normal_form(poly, self, budget=budget).is_zero

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def divide(
    poly: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder = DEFAULT_ORDER,
    counter: Optional[StepCounter] = None,
) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division with full reduction of every term.

    Args:
        poly:     Dividend
        divisors: Nonzero divisors
        order:    Monomial order
        counter:  (Optional) step counter enforcing a budget

    Returns:
        quotients: one quotient per divisor
        remainder: no term of it is divisible by a divisor's leading monomial
    """
    variables = poly.variables
    for divisor in divisors:
        if divisor.variables != variables:
            raise VariableMismatchError(
                f"Divisor over {divisor.variables} does not match {variables}"
            )

    leads = [divisor.leading_term(order) for divisor in divisors]
    remaining: Dict[Monomial, Fraction] = poly.terms()
    remainder: Dict[Monomial, Fraction] = {}
    quotients: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]

    while remaining:
        monomial = max(remaining, key=order.key)
        coefficient = remaining[monomial]
        for index, (lead_monomial, lead_coefficient) in enumerate(leads):
            if not monomial_divides(lead_monomial, monomial):
                continue
            if counter is not None:
                counter.tick()
            factor_monomial = monomial_quotient(monomial, lead_monomial)
            factor = coefficient / lead_coefficient
            for term_monomial, term_coefficient in divisors[index].items():
                target = monomial_product(term_monomial, factor_monomial)
                value = remaining.get(target, 0) - factor * term_coefficient
                if value:
                    remaining[target] = value
                else:
                    remaining.pop(target, None)
            quotient = quotients[index]
            value = quotient.get(factor_monomial, 0) + factor
            if value:
                quotient[factor_monomial] = value
            else:
                quotient.pop(factor_monomial, None)
            break
        else:
            remainder[monomial] = coefficient
            del remaining[monomial]

    return (
        [Polynomial(variables, quotient) for quotient in quotients],
        Polynomial(variables, remainder),
    )


def spolynomial(
    first: Polynomial, second: Polynomial, order: MonomialOrder = DEFAULT_ORDER
) -> Polynomial:
    """S-polynomial lcm/lt(f) * f - lcm/lt(g) * g over the leading monomials."""
    if first.is_zero or second.is_zero:
        raise InputError("S-polynomial of the zero polynomial is undefined")
    if first.variables != second.variables:
        raise VariableMismatchError(
            "S-polynomial of polynomials over different variables"
        )

    first_monomial, first_coefficient = first.leading_term(order)
    second_monomial, second_coefficient = second.leading_term(order)
    lcm = monomial_lcm(first_monomial, second_monomial)
    return first.mul_term(
        monomial_quotient(lcm, first_monomial), 1 / first_coefficient
    ) - second.mul_term(monomial_quotient(lcm, second_monomial), 1 / second_coefficient)


def _combine(
    representations: Sequence[Representation], factors: Sequence[Polynomial]
) -> Representation:
    """Sum of factors[k] * representations[k], componentwise."""
    total = [Polynomial.zero(representations[0][0].variables)] * len(representations[0])
    for representation, factor in zip(representations, factors):
        if factor.is_zero:
            continue
        total = [acc + factor * entry for acc, entry in zip(total, representation)]
    return total


def _scaled(representation: Optional[Representation], factor) -> Optional[Representation]:
    if representation is None:
        return None
    return [entry.scale(factor) for entry in representation]


class _BuchbergerState:
    """Working basis, pending pairs and tracked representations."""

    def __init__(self, order: MonomialOrder, counter: StepCounter, track: bool):
        self.order = order
        self.counter = counter
        self.track = track
        self.polys: List[Polynomial] = []
        self.leads: List[Monomial] = []
        self.reps: List[Optional[Representation]] = []
        self.pairs = set()

    def add(self, poly: Polynomial, representation: Optional[Representation]):
        coefficient = poly.leading_coefficient(self.order)
        poly = poly.scale(1 / coefficient)
        representation = _scaled(representation, 1 / coefficient)
        index = len(self.polys)
        self.polys.append(poly)
        self.leads.append(poly.leading_monomial(self.order))
        self.reps.append(representation)
        for other in range(index):
            self.pairs.add((other, index))

    def pair_key(self, pair):
        lcm = monomial_lcm(self.leads[pair[0]], self.leads[pair[1]])
        return (sum(lcm), self.order.key(lcm), pair[1], pair[0])

    def chain_criterion(self, first: int, second: int) -> bool:
        """True if the pair is redundant by Buchberger's second criterion."""
        lcm = monomial_lcm(self.leads[first], self.leads[second])
        for other in range(len(self.polys)):
            if other in (first, second):
                continue
            if not monomial_divides(self.leads[other], lcm):
                continue
            if tuple(sorted((first, other))) in self.pairs:
                continue
            if tuple(sorted((second, other))) in self.pairs:
                continue
            return True
        return False

    def reduce(
        self, poly: Polynomial, representation: Optional[Representation]
    ) -> Tuple[Polynomial, Optional[Representation]]:
        quotients, remainder = divide(poly, self.polys, self.order, self.counter)
        if self.track and not remainder.is_zero:
            correction = _combine(self.reps, quotients)
            representation = [
                entry - fix for entry, fix in zip(representation, correction)
            ]
        return remainder, representation


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder = DEFAULT_ORDER,
    track: bool = False,
    budget: int = DEFAULT_BUDGET,
    variables: Optional[Sequence[str]] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by generators.

    Pairs are selected by the normal strategy (smallest lcm first) and pruned by
    Buchberger's coprime and chain criteria.

    Args:
        generators: Generators of the ideal (zeros are dropped)
        order:      Monomial order
        track:      Record cofactors of every basis element w.r.t. the generators
        budget:     Maximal number of reduction steps
        variables:  (Optional) ambient variables, required if generators is empty

    Returns:
        GroebnerBasis: the reduced basis

    Raises:
        BudgetExceededError: If the budget is exhausted
    """
    generators = list(generators)
    if variables is None:
        if not generators:
            raise InputError("Variables are required for an empty generator list")
        variables = generators[0].variables
    variables = tuple(variables)
    for generator in generators:
        if generator.variables != variables:
            raise VariableMismatchError(
                f"Generator over {generator.variables} does not match {variables}"
            )

    counter = StepCounter(budget)
    state = _BuchbergerState(order, counter, track)
    zero = Polynomial.zero(variables)
    originals = tuple(generators)

    for index, generator in enumerate(generators):
        if generator.is_zero:
            continue
        representation = None
        if track:
            representation = [zero] * len(generators)
            representation[index] = Polynomial.one(variables)
        state.add(generator, representation)

    unit = None
    for index, poly in enumerate(state.polys):
        if poly.is_constant:
            unit = (poly, state.reps[index])
            break

    processed = 0
    while state.pairs and unit is None:
        pair = min(state.pairs, key=state.pair_key)
        state.pairs.discard(pair)
        first, second = pair

        if monomials_coprime(state.leads[first], state.leads[second]):
            continue
        if state.chain_criterion(first, second):
            continue

        processed += 1
        lcm = monomial_lcm(state.leads[first], state.leads[second])
        first_factor = monomial_quotient(lcm, state.leads[first])
        second_factor = monomial_quotient(lcm, state.leads[second])
        spoly = state.polys[first].mul_term(first_factor, 1) - state.polys[
            second
        ].mul_term(second_factor, 1)
        representation = None
        if track:
            representation = [
                a.mul_term(first_factor, 1) - b.mul_term(second_factor, 1)
                for a, b in zip(state.reps[first], state.reps[second])
            ]

        remainder, representation = state.reduce(spoly, representation)
        if remainder.is_zero:
            continue

        state.add(remainder, representation)
        logger.debug(
            f"Buchberger: pair {pair} gave new element of degree "
            f"{remainder.total_degree()}; basis size {len(state.polys)}, "
            f"{len(state.pairs)} pairs pending"
        )
        if remainder.is_constant:
            unit = (state.polys[-1], state.reps[-1])

    if unit is not None:
        polys, reps = [unit[0]], [unit[1]]
    else:
        polys, reps = _interreduce(state)

    logger.debug(
        f"Buchberger finished: {len(polys)} generators, {processed} S-polynomials, "
        f"{counter.steps} reduction steps"
    )

    return GroebnerBasis(
        generators=tuple(polys),
        order=order,
        reduced=True,
        variables=variables,
        originals=originals if track else None,
        representation=tuple(tuple(rep) for rep in reps) if track else None,
        steps=counter.steps,
    )


def _interreduce(state: _BuchbergerState):
    """Minimize and tail-reduce the working basis."""
    order = state.order
    keep = []
    for index, lead in enumerate(state.leads):
        redundant = False
        for other, other_lead in enumerate(state.leads):
            if other == index or not monomial_divides(other_lead, lead):
                continue
            if other_lead != lead or other < index:
                redundant = True
                break
        if not redundant:
            keep.append(index)

    polys = [state.polys[index] for index in keep]
    reps = [state.reps[index] for index in keep]

    for position in range(len(polys)):
        others = polys[:position] + polys[position + 1 :]
        if not others:
            continue
        quotients, remainder = divide(polys[position], others, order, state.counter)
        if state.track:
            other_reps = reps[:position] + reps[position + 1 :]
            correction = _combine(other_reps, quotients)
            reps[position] = [
                entry - fix for entry, fix in zip(reps[position], correction)
            ]
        coefficient = remainder.leading_coefficient(order)
        polys[position] = remainder.scale(1 / coefficient)
        reps[position] = _scaled(reps[position], 1 / coefficient)

    ranking = sorted(
        range(len(polys)),
        key=lambda k: order.key(polys[k].leading_monomial(order)),
        reverse=True,
    )
    return [polys[k] for k in ranking], [reps[k] for k in ranking]


def normal_form(
    poly: Polynomial, basis: GroebnerBasis, budget: int = DEFAULT_BUDGET
) -> Polynomial:
    """Unique remainder of poly modulo a reduced Groebner basis."""
    if poly.variables != basis.variables:
        raise VariableMismatchError(
            f"Polynomial over {poly.variables} does not match "
            f"basis over {basis.variables}"
        )
    if not basis.generators:
        return poly
    _, remainder = divide(
        poly, basis.generators, basis.order, StepCounter(budget, "Normal form")
    )
    return remainder


def normal_form_with_cofactors(
    poly: Polynomial,
    basis: GroebnerBasis,
    originals: Optional[Sequence[Polynomial]] = None,
    budget: int = DEFAULT_BUDGET,
) -> Tuple[Polynomial, List[Polynomial]]:
    """Remainder and cofactors with poly = remainder + sum(cofactor_j * original_j).

    Args:
        poly:      Polynomial to reduce
        basis:     Basis computed with track=True
        originals: (Optional) generators the basis was computed from
        budget:    Maximal number of reduction steps

    Returns:
        remainder: the normal form of poly
        cofactors: one cofactor per original generator

    Raises:
        TrackingAbsentError: If the basis carries no representation data
        IdentityFailedError: If the re-expansion check fails
    """
    if not basis.tracked:
        raise TrackingAbsentError("Basis was computed without representation tracking")
    if originals is not None and tuple(originals) != basis.originals:
        raise TrackingAbsentError("Basis was not computed from the given generators")
    if poly.variables != basis.variables:
        raise VariableMismatchError(
            f"Polynomial over {poly.variables} does not match "
            f"basis over {basis.variables}"
        )

    originals = basis.originals
    zero = Polynomial.zero(basis.variables)
    if not basis.generators:
        return poly, [zero] * len(originals)

    quotients, remainder = divide(
        poly, basis.generators, basis.order, StepCounter(budget, "Normal form")
    )
    cofactors = [zero] * len(originals)
    for quotient, representation in zip(quotients, basis.representation):
        if quotient.is_zero:
            continue
        cofactors = [
            acc + quotient * entry for acc, entry in zip(cofactors, representation)
        ]

    expansion = remainder
    for cofactor, original in zip(cofactors, originals):
        expansion = expansion + cofactor * original
    if expansion != poly:
        raise IdentityFailedError(
            "Cofactor representation does not re-expand to the reduced polynomial"
        )

    return remainder, cofactors
