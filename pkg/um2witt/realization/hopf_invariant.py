"""Hopf invariant of maps S^3 -> S^2 as the linking number of two fibers."""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..errors import ConfigurationError, ResidualTooLargeError
from ..logs import logger
from .fiber_tracing import (
    CHART_BOUND,
    DEFAULT_GRID,
    NEWTON_TOLERANCE,
    chart_curves,
    trace_fiber,
    value_frame,
)
from .linking import gauss_linking_integral, great_circle_fiber, polyline_linking_number
from .NumericMap import NumericMap

RESIDUAL_TOLERANCE = 0.2
MAX_DOUBLINGS = 3


@dataclass
class HopfResult:
    """Outcome of a Hopf invariant computation.

    Attributes:
        linking:     Rounded linking number of the two fibers
        integral:    Gauss linking integral before rounding
        residual:    |integral - linking|
        grid:        Resolution at which the result was accepted
        cross_check: Solid angle linking number of the same polylines
        pole:        Pole of the stereographic chart
    """

    linking: int
    integral: float
    residual: float
    grid: int
    cross_check: float
    pole: np.ndarray = field(repr=False)

    def to_dict(self) -> dict:
        """JSON-ready form."""
        return {
            "linking": self.linking,
            "residual": round(self.residual, 6),
            "integral": round(self.integral, 6),
            "grid": self.grid,
            "cross_check": round(self.cross_check, 6),
        }


def linking_of_fibers(
    first: np.ndarray,
    second: np.ndarray,
    chart_bound: float = CHART_BOUND,
    seed: int = 0,
) -> float:
    """Gauss linking integral of two closed curves on S^3 in a common chart."""
    (p, q), _ = chart_curves([first, second], chart_bound=chart_bound, seed=seed)
    return gauss_linking_integral(p, q)


def analytic_hopf_linking(
    value1: Sequence[float], value2: Sequence[float], samples: int = 256
) -> float:
    """Linking integral of the closed-form Hopf fibers over two values."""
    return linking_of_fibers(
        great_circle_fiber(value1, samples), great_circle_fiber(value2, samples)
    )


def hopf_invariant(
    numeric_map: NumericMap,
    value1: Sequence[float],
    value2: Sequence[float],
    grid: int = DEFAULT_GRID,
    max_doublings: int = MAX_DOUBLINGS,
    residual_tolerance: float = RESIDUAL_TOLERANCE,
    chart_bound: float = CHART_BOUND,
    newton_tolerance: float = NEWTON_TOLERANCE,
    seed: int = 0,
) -> HopfResult:
    """Linking number of the preimages of two regular values.

    The fibers are traced on S^3, projected into one stereographic chart and linked
    by the Gauss integral. If the integral is farther than residual_tolerance from
    an integer the grid is doubled, at most max_doublings times.

    Args:
        numeric_map:        Map R^4 -> R^3 considered on S^3
        value1:             First regular value on S^2
        value2:             Second, distinct, regular value
        grid:               Initial resolution (step 2 pi / grid)
        max_doublings:      How often the grid may be doubled
        residual_tolerance: Accepted distance of the integral from an integer
        chart_bound:        Largest admissible chart coordinate
        newton_tolerance:   Corrector residual bound
        seed:               Seed for start points and pole candidates

    Returns:
        HopfResult: the linking number and diagnostics

    Raises:
        ConfigurationError:    Values coincide
        IrregularValueError:   A value is not regular (or not attained)
        ResidualTooLargeError: No resolution gave an integer within tolerance
    """
    v1, v2 = value_frame(value1)[0], value_frame(value2)[0]
    if np.linalg.norm(v1 - v2) < 1e-9:
        raise ConfigurationError("The two regular values must be distinct")

    residual = np.inf
    current = grid
    for attempt in range(max_doublings + 1):
        current = grid * 2**attempt
        fibers = [
            trace_fiber(numeric_map, v, current, newton_tolerance, seed) for v in (v1, v2)
        ]
        (p, q), pole = chart_curves(fibers, chart_bound=chart_bound, seed=seed)
        integral = gauss_linking_integral(p, q)
        linking = int(round(integral))
        residual = abs(integral - linking)

        if residual <= residual_tolerance:
            cross_check = polyline_linking_number(p, q)
            if int(round(abs(cross_check))) != abs(linking):
                logger.warning(
                    f"Solid angle linking {cross_check:.4f} disagrees with {integral:.4f}"
                )
            logger.info(
                f"Hopf invariant of {numeric_map.name}: {linking} "
                f"(integral {integral:.6f}, grid {current})"
            )
            return HopfResult(linking, integral, residual, current, cross_check, pole)

        if attempt < max_doublings:
            logger.warning(
                f"Linking residual {residual:.3f} at grid {current}; doubling the grid"
            )

    raise ResidualTooLargeError(
        f"Linking integral stays {residual:.3f} from an integer up to grid {current}"
    )


def parse_value(text: Optional[str]) -> np.ndarray:
    """Point of S^2 from '0,0,1'."""
    if text is None:
        raise ConfigurationError("A value such as '0,0,1' is required")
    try:
        value = np.array([float(part) for part in text.split(",")])
    except ValueError as e:
        raise ConfigurationError(f"Cannot read value '{text}'") from e
    return value_frame(value)[0]
