"""Preimage circles of regular values of maps S^3 -> S^2.

A value v on S^2 is completed to a positive orthonormal frame (u1, u2, v). The
preimage of v under F/|F| is the zero set on S^3 of

    G(x) = (u1 . F(x), u2 . F(x), |x|^2 - 1)

restricted to v . F(x) > 0. It is traced by predictor-corrector continuation:
the predictor follows the kernel of DG, the corrector is a least squares Newton
iteration. Tangents are oriented so that det(x, t, grad(u1 . F), grad(u2 . F)) > 0,
which fixes the sign of linking numbers of two such curves.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import KDTree

from ..errors import (
    ChartEscapeError,
    ConfigurationError,
    DimensionMismatchError,
    IrregularValueError,
    OpenCurveError,
)
from ..logs import logger
from .LevelCurve import LevelCurve
from .NumericMap import NumericMap
from .sphere_sampling import sample_sphere

DEFAULT_GRID = 64
NEWTON_TOLERANCE = 1e-12
REGULARITY_TOLERANCE = 1e-8
CHART_BOUND = 1e3
START_SAMPLES = 4096
START_CANDIDATES = 16
POLE_CANDIDATES = 64


def value_frame(value: Sequence[float]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Unit value v with u1, u2 such that (u1, u2, v) is a positive orthonormal frame."""
    v = np.asarray(value, dtype=float)
    if v.shape != (3,):
        raise DimensionMismatchError(
            f"Values of maps to S^2 have 3 coordinates, got {v.shape}"
        )
    length = np.linalg.norm(v)
    if length == 0:
        raise ConfigurationError("The value must be a point of S^2, got the origin")
    v = v / length
    axis = np.eye(3)[np.argmin(np.abs(v))]
    u1 = np.cross(v, axis)
    u1 /= np.linalg.norm(u1)
    u2 = np.cross(v, u1)
    return v, u1, u2


class FiberSystem:
    """The equations G(x) = 0 cutting out the preimage of one value."""

    def __init__(
        self,
        numeric_map: NumericMap,
        value: Sequence[float],
        newton_tolerance: float = NEWTON_TOLERANCE,
    ):
        """Initialize fiber system.

        Args:
            numeric_map:      Map R^4 -> R^3, considered on S^3
            value:            Point of S^2 (normalized if needed)
            newton_tolerance: Residual bound of the corrector
        """
        if numeric_map.source_dim != 4 or numeric_map.target_dim != 3:
            raise DimensionMismatchError(
                f"Fibers need a map R^4 -> R^3, got {numeric_map!r}"
            )
        self.map = numeric_map
        self.value, u1, u2 = value_frame(value)
        self.projector = np.stack([u1, u2])
        self.tolerance = newton_tolerance

    def residual(self, x: np.ndarray) -> np.ndarray:
        """G(x)."""
        return np.append(self.projector @ self.map.evaluate(x), x @ x - 1.0)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        """DG(x), shape (3, 4)."""
        return np.vstack([self.projector @ self.map.jacobian(x), 2.0 * x])

    def alignment(self, x: np.ndarray) -> float:
        """v . F(x); positive on the wanted preimage."""
        return float(self.value @ self.map.evaluate(x))

    def correct(self, x: np.ndarray, max_iterations: int = 30) -> Tuple[np.ndarray, bool]:
        """Newton projection onto G = 0."""
        for _ in range(max_iterations):
            residual = self.residual(x)
            if np.max(np.abs(residual)) < self.tolerance:
                return x, True
            step = np.linalg.lstsq(self.jacobian(x), -residual, rcond=None)[0]
            x = x + step
            if np.linalg.norm(step) < 1e-15:
                break
        return x, bool(np.max(np.abs(self.residual(x))) < self.tolerance)

    def tangent(self, x: np.ndarray) -> np.ndarray:
        """Oriented unit tangent of the preimage at x.

        Raises:
            IrregularValueError: If DG(x) does not have rank 3
        """
        jac = self.jacobian(x)
        _, singular, vt = np.linalg.svd(jac)
        if singular[-1] < REGULARITY_TOLERANCE * max(singular[0], 1.0):
            raise IrregularValueError(
                f"Value {self.value} is not regular: rank drop of the Jacobian at {x}"
            )
        t = vt[-1]
        if np.linalg.det(np.vstack([x, t, jac[0], jac[1]])) < 0:
            t = -t
        return t


def start_point(system: FiberSystem, seed: int = 0) -> np.ndarray:
    """A point of the preimage, found from quasi-random sphere samples.

    Raises:
        IrregularValueError: If no sample converges onto the preimage (value not attained)
    """
    points = sample_sphere(START_SAMPLES, 4, seed)
    values = system.map.evaluate(points)
    norms = np.linalg.norm(values, axis=1)
    safe = np.where(norms > 0, norms, 1.0)
    score = np.where(norms > 0, (values @ system.value) / safe, -np.inf)

    for index in np.argsort(-score)[:START_CANDIDATES]:
        if score[index] <= 0:
            break
        x, converged = system.correct(points[index])
        if converged and system.alignment(x) > 0:
            return x

    raise IrregularValueError(
        f"Value {system.value} is not attained by {system.map.name} on S^3 "
        f"(or is not a regular value)"
    )


def trace_fiber(
    numeric_map: NumericMap,
    value: Sequence[float],
    grid: int = DEFAULT_GRID,
    newton_tolerance: float = NEWTON_TOLERANCE,
    seed: int = 0,
    max_steps: Optional[int] = None,
) -> np.ndarray:
    """Closed oriented polyline on S^3 approximating the preimage of value.

    Args:
        numeric_map:      Map R^4 -> R^3
        value:            Regular value on S^2
        grid:             Resolution; the step is 2 pi / grid
        newton_tolerance: Corrector residual bound
        seed:             Seed of the start point search
        max_steps:        (Optional) step budget, default 50 * grid

    Returns:
        Array of shape (N + 1, 4) whose last row equals the first

    Raises:
        IrregularValueError: Value not attained or Jacobian rank drop on the curve
        OpenCurveError:      Curve did not close within the step budget
    """
    system = FiberSystem(numeric_map, value, newton_tolerance)
    step = 2 * np.pi / grid
    max_steps = max_steps or 50 * grid

    start = start_point(system, seed)
    points = [start]
    x = start
    tangent = system.tangent(x)

    for count in range(max_steps):
        to_start = start - x
        closing = np.linalg.norm(to_start) < 1.5 * step and to_start @ tangent > 0
        if len(points) >= 4 and closing:
            points.append(start)
            logger.debug(f"Fiber over {system.value} closed after {count} steps")
            return np.array(points)

        trial = step
        for _ in range(6):
            candidate, converged = system.correct(x + trial * tangent)
            advance = candidate - x
            forward = np.linalg.norm(advance) < 2 * trial and advance @ tangent > 0
            if converged and forward:
                break
            trial /= 2
        else:
            raise OpenCurveError(
                f"Corrector failed on the fiber over {system.value} after {count} steps"
            )

        x = candidate
        tangent = system.tangent(x)
        points.append(x)

    raise OpenCurveError(
        f"Fiber over {system.value} did not close within {max_steps} steps"
    )


def pole_frame(pole: Sequence[float]) -> np.ndarray:
    """Orthonormal Q with determinant +1 and first column the unit pole."""
    p = np.asarray(pole, dtype=float)
    p = p / np.linalg.norm(p)
    q, r = np.linalg.qr(np.column_stack([p, np.eye(4)]))
    q = q[:, :4] * np.sign(r[0, 0])
    q[:, 0] = p
    if np.linalg.det(q) < 0:
        q[:, 3] = -q[:, 3]
    return q


def stereographic(
    points: np.ndarray, pole: Sequence[float], chart_bound: float = CHART_BOUND
) -> np.ndarray:
    """Chart coordinates (q_i . x) / (1 - p . x) of points on S^3.

    Raises:
        ChartEscapeError: If a point is mapped beyond chart_bound
    """
    frame = pole_frame(pole)
    denominator = 1.0 - points @ frame[:, 0]
    if np.any(denominator <= 0):
        raise ChartEscapeError("Curve passes through the projection pole")
    coordinates = (points @ frame[:, 1:]) / denominator[:, None]
    largest = np.max(np.abs(coordinates))
    if largest > chart_bound:
        raise ChartEscapeError(
            f"Curve reaches {largest:.3e} in the chart, "
            f"beyond the bound {chart_bound:.1e}"
        )
    return coordinates


def choose_pole(curves: Sequence[np.ndarray], seed: int = 0) -> np.ndarray:
    """Candidate pole farthest from all curves (coordinate poles and sphere samples)."""
    samples = sample_sphere(POLE_CANDIDATES, 4, seed)
    candidates = np.vstack([np.eye(4), -np.eye(4), samples])
    distance = np.full(len(candidates), np.inf)
    for curve in curves:
        nearest, _ = KDTree(curve).query(candidates)
        distance = np.minimum(distance, nearest)
    return candidates[int(np.argmax(distance))]


def chart_curves(
    curves: Sequence[np.ndarray],
    pole: Optional[Sequence[float]] = None,
    chart_bound: float = CHART_BOUND,
    seed: int = 0,
) -> Tuple[List[np.ndarray], np.ndarray]:
    """Project closed curves on S^3 into one stereographic chart.

    Retries once from the antipodal pole when a curve escapes the chart.

    Returns:
        chart_points: one (N + 1, 3) array per curve
        pole:         the pole that was used
    """
    pole = choose_pole(curves, seed) if pole is None else np.asarray(pole, dtype=float)
    try:
        return [stereographic(curve, pole, chart_bound) for curve in curves], pole
    except ChartEscapeError as e:
        logger.warning(f"{e}; retrying from the antipodal pole")
        pole = -pole
        return [stereographic(curve, pole, chart_bound) for curve in curves], pole


def preimage_curve(
    numeric_map: NumericMap,
    value: Sequence[float],
    grid: int = DEFAULT_GRID,
    pole: Optional[Sequence[float]] = None,
    chart_bound: float = CHART_BOUND,
    newton_tolerance: float = NEWTON_TOLERANCE,
    seed: int = 0,
) -> LevelCurve:
    """Preimage of a regular value as a closed polyline in a stereographic chart."""
    sphere_points = trace_fiber(numeric_map, value, grid, newton_tolerance, seed)
    (chart_points,), _ = chart_curves([sphere_points], pole, chart_bound, seed)
    logger.info(
        f"Preimage of {np.round(value_frame(value)[0], 6)} under {numeric_map.name}: "
        f"{len(sphere_points) - 1} segments"
    )
    return LevelCurve(
        chart_points,
        sphere_points,
        value_frame(value)[0],
        2 * np.pi / grid,
    )
