"""Floating point realization of polynomial maps with rational coefficients."""

from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from ..errors import DimensionMismatchError
from ..Polynomial import Polynomial
from ..PolynomialParser import poly_parse


class CompiledPolynomial:
    """Exponent matrix and float coefficients of one polynomial."""

    def __init__(self, poly: Polynomial):
        """Initialize compiled polynomial.

        Args:
            poly: Exact polynomial to realize
        """
        items = sorted(poly.items())
        self.nvars = poly.nvars
        self.exponents = np.array([monomial for monomial, _ in items], dtype=int).reshape(
            len(items), poly.nvars
        )
        self.coefficients = np.array([float(coef) for _, coef in items], dtype=float)
        self.max_exponent = int(self.exponents.max()) if len(items) else 0

    def __call__(self, powers: np.ndarray) -> np.ndarray:
        """Evaluate from a power table of shape (max_exponent + 1, points, nvars)."""
        points = powers.shape[1]
        if not len(self.coefficients):
            return np.zeros(points)
        monomials = np.ones((points, len(self.coefficients)))
        for var in range(self.nvars):
            exps = self.exponents[:, var]
            if exps.any():
                monomials *= powers[exps, :, var].T
        return monomials @ self.coefficients


class NumericMap:
    """Polynomial map R^n -> R^m evaluated in double precision.

    The Jacobian is evaluated from the exact partial derivatives.
    """

    def __init__(self, components: Sequence[Polynomial], name: Optional[str] = None):
        """Initialize numeric map.

        Args:
            components: Component polynomials, all over the same variables
            name:       (Optional) label used in output
        """
        if not components:
            raise DimensionMismatchError("A numeric map needs at least one component")
        self.components = tuple(components)
        self.variables = self.components[0].variables
        for component in self.components:
            if component.variables != self.variables:
                raise DimensionMismatchError("Components use different variables")
        self.name = name or "map"
        self._compiled = [CompiledPolynomial(c) for c in self.components]
        self._derivatives: Optional[List[List[CompiledPolynomial]]] = None
        self.max_exponent = max((c.max_exponent for c in self._compiled), default=0)

    @classmethod
    def from_strings(
        cls,
        variables: Sequence[str],
        components: Sequence[str],
        name: Optional[str] = None,
    ) -> "NumericMap":
        """Numeric map from component texts."""
        return cls([poly_parse(text, variables) for text in components], name=name)

    @property
    def source_dim(self) -> int:
        """Number of source coordinates."""
        return len(self.variables)

    @property
    def target_dim(self) -> int:
        """Number of components."""
        return len(self.components)

    def _points(self, points):
        points = np.asarray(points, dtype=float)
        single = points.ndim == 1
        points = np.atleast_2d(points)
        if points.shape[1] != self.source_dim:
            raise DimensionMismatchError(
                f"Map {self.name} takes {self.source_dim} coordinates, "
                f"got {points.shape[1]}"
            )
        return points, single

    def _powers(self, points: np.ndarray, max_exponent: int) -> np.ndarray:
        powers = np.ones((max_exponent + 1, *points.shape))
        for exp in range(1, max_exponent + 1):
            powers[exp] = powers[exp - 1] * points
        return powers

    def evaluate(self, points) -> np.ndarray:
        """Values at one point (shape (n,)) or many points (shape (N, n))."""
        points, single = self._points(points)
        powers = self._powers(points, self.max_exponent)
        values = np.stack([compiled(powers) for compiled in self._compiled], axis=1)
        return values[0] if single else values

    __call__ = evaluate

    def jacobian(self, points) -> np.ndarray:
        """Jacobians, shape (m, n) for one point or (N, m, n) for many."""
        if self._derivatives is None:
            self._derivatives = [
                [CompiledPolynomial(c.derivative(var)) for var in self.variables]
                for c in self.components
            ]
        points, single = self._points(points)
        powers = self._powers(points, self.max_exponent)
        rows = [np.stack([d(powers) for d in row], axis=1) for row in self._derivatives]
        jac = np.stack(rows, axis=1)
        return jac[0] if single else jac

    def exactness_error(self, point: Sequence[Fraction]) -> float:
        """Largest relative deviation from exact rational evaluation at a point."""
        exact = np.array([float(c.evaluate(point)) for c in self.components])
        numeric = self.evaluate([float(value) for value in point])
        scale = np.maximum(np.abs(exact), 1.0)
        return float(np.max(np.abs(numeric - exact) / scale))

    def __repr__(self):
        return f"NumericMap({self.name}: R^{self.source_dim} -> R^{self.target_dim})"
