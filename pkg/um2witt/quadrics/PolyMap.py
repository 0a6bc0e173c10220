"""Polynomial maps between spaces, with stored well-definedness witnesses."""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple, Union

from ..errors import DimensionMismatchError, IdentityFailedError, VerificationError
from ..GroebnerBasis import DEFAULT_BUDGET, buchberger, normal_form_with_cofactors
from ..logs import logger
from ..Polynomial import Polynomial
from ..PolynomialParser import poly_parse
from ..realization.NumericMap import NumericMap


@dataclass(frozen=True)
class PolyMap:
    """Polynomial map source -> target given by its components.

    Attributes:
        name:        Label used in output
        source:      Source space (quadric, sphere or affine space)
        target:      Target space
        components:  One polynomial in the source variables per target coordinate
        certificate: (Optional) cofactors with sum(c_i * components_i) = 1 on the
                     source, witnessing that a punctured target is hit
        witness:     Cofactors of the source relations, filled in by verify()
    """

    name: str
    source: object
    target: object
    components: Tuple[Polynomial, ...]
    certificate: Optional[Tuple[Polynomial, ...]] = None
    witness: Optional[Tuple[Tuple[Polynomial, ...], ...]] = None

    def __post_init__(self):
        if len(self.components) != self.target.dimension:
            raise DimensionMismatchError(
                f"Map {self.name} has {len(self.components)} components for "
                f"{self.target.name} of dimension {self.target.dimension}"
            )
        for component in (*self.components, *(self.certificate or ())):
            if component.variables != tuple(self.source.variables):
                raise DimensionMismatchError(
                    f"Component of {self.name} is not over the source variables"
                )

    @classmethod
    def from_strings(
        cls,
        name: str,
        source,
        target,
        components: Sequence[str],
        certificate: Optional[Sequence[str]] = None,
    ) -> "PolyMap":
        """Map from component texts over the source variables."""
        variables = tuple(source.variables)
        cofactors = None
        if certificate is not None:
            cofactors = tuple(poly_parse(text, variables) for text in certificate)
        return cls(
            name,
            source,
            target,
            tuple(poly_parse(text, variables) for text in components),
            cofactors,
        )

    @property
    def verified(self) -> bool:
        """True once verify() has stored a witness."""
        return self.witness is not None

    def verify(self, budget: int = DEFAULT_BUDGET) -> "PolyMap":
        """Check that the map lands in the target; return a copy carrying the witness.

        For every target relation r, r(components) is written as a combination of the
        source relations (exact Groebner reduction with cofactor tracking). A punctured
        target additionally needs sum(certificate_i * component_i) - 1 to vanish on
        the source.

        Raises:
            IdentityFailedError: If a relation does not reduce to zero
            VerificationError:   Punctured target without certificate
        """
        variables = tuple(self.source.variables)
        basis = buchberger(
            list(self.source.relations), track=True, budget=budget, variables=variables
        )

        obligations = [
            (f"{self.target.name} relation", relation.compose(list(self.components)))
            for relation in self.target.relations
        ]
        if self.target.punctured:
            if self.certificate is None:
                raise VerificationError(
                    f"Map {self.name} into {self.target.name} has no certificate"
                )
            pairing = Polynomial.zero(variables)
            for component, cofactor in zip(self.components, self.certificate):
                pairing = pairing + component * cofactor
            obligations.append(("certificate", pairing - 1))

        witness = []
        for label, poly in obligations:
            remainder, cofactors = normal_form_with_cofactors(poly, basis, budget=budget)
            if not remainder.is_zero:
                raise IdentityFailedError(
                    f"Map {self.name}: {label} reduces to {remainder} "
                    f"on {self.source.name}"
                )
            witness.append(tuple(cofactors))

        logger.debug(f"Verified {self.name}: {self.source.name} -> {self.target.name}")
        return replace(self, witness=tuple(witness))

    def compose(self, inner: "PolyMap", name: Optional[str] = None) -> "PolyMap":
        """self o inner (inner applied first)."""
        if inner.target.dimension != self.source.dimension:
            raise DimensionMismatchError(
                f"Cannot compose {self.name} after {inner.name}: "
                f"{inner.target.name} is not {self.source.name}"
            )
        images = list(inner.components)
        components = tuple(component.compose(images) for component in self.components)
        certificate = None
        if self.certificate is not None:
            certificate = tuple(cofactor.compose(images) for cofactor in self.certificate)
        return PolyMap(
            name or f"{self.name} o {inner.name}",
            inner.source,
            self.target,
            components,
            certificate,
        )

    def substitute(
        self, values: Mapping[str, Union[int, Fraction, str]], name: Optional[str] = None
    ) -> "PolyMap":
        """Specialize source variables to constants (e.g. alpha := -1)."""
        variables = tuple(self.source.variables)
        mapping = {
            variable: Polynomial.constant(variables, Fraction(value))
            for variable, value in values.items()
        }

        def specialize(poly: Polynomial) -> Polynomial:
            return poly.substitute(mapping)

        certificate = None
        if self.certificate is not None:
            certificate = tuple(map(specialize, self.certificate))
        return PolyMap(
            name or self.name,
            self.source,
            self.target,
            tuple(specialize(component) for component in self.components),
            certificate,
        )

    def to_numeric(self):
        """Floating point realization of the components."""
        return NumericMap(self.components, name=self.name)

    def to_dict(self) -> dict:
        """Text form as in the map JSON format."""
        data = {
            "name": self.name,
            "source": self.source.name,
            "target": self.target.name,
            "vars": list(self.source.variables),
            "components": [str(component) for component in self.components],
        }
        if self.certificate is not None:
            data["certificate"] = [str(cofactor) for cofactor in self.certificate]
        return data
