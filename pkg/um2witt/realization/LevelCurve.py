"""Closed polylines approximating preimage circles."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import OpenCurveError

CLOSURE_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class LevelCurve:
    """Closed polyline in a stereographic chart of S^3.

    Attributes:
        points:        Chart coordinates, shape (N + 1, 3), last row equal to the first
        sphere_points: (Optional) the same vertices on S^3, shape (N + 1, 4)
        value:         (Optional) regular value whose preimage the curve approximates
        step:          Tracing step bound
    """

    points: np.ndarray
    sphere_points: Optional[np.ndarray] = None
    value: Optional[np.ndarray] = None
    step: float = np.inf

    def __post_init__(self):
        if self.points.ndim != 2 or self.points.shape[1] != 3 or len(self.points) < 4:
            raise OpenCurveError(
                f"Polyline of shape {self.points.shape} is not a curve in R^3"
            )
        if np.linalg.norm(self.points[0] - self.points[-1]) > CLOSURE_TOLERANCE:
            raise OpenCurveError("Polyline does not close: first and last points differ")

    @classmethod
    def from_loop(cls, points: np.ndarray, **kwargs) -> "LevelCurve":
        """Curve from vertices without the repeated first point."""
        points = np.asarray(points, dtype=float)
        return cls(np.vstack([points, points[:1]]), **kwargs)

    def __len__(self):
        return len(self.points) - 1

    @property
    def segments(self) -> np.ndarray:
        """Segment vectors, shape (N, 3)."""
        return np.diff(self.points, axis=0)

    @property
    def midpoints(self) -> np.ndarray:
        """Segment midpoints, shape (N, 3)."""
        return 0.5 * (self.points[1:] + self.points[:-1])

    @property
    def length(self) -> float:
        """Total polyline length in the chart."""
        return float(np.linalg.norm(self.segments, axis=1).sum())

    def max_spacing(self) -> float:
        """Largest distance between consecutive vertices on S^3 (or in the chart)."""
        points = self.sphere_points if self.sphere_points is not None else self.points
        return float(np.linalg.norm(np.diff(points, axis=0), axis=1).max())

    def reversed(self) -> "LevelCurve":
        """The same curve traversed backwards."""
        return LevelCurve(
            self.points[::-1].copy(),
            None if self.sphere_points is None else self.sphere_points[::-1].copy(),
            self.value,
            self.step,
        )

    def refined(self) -> "LevelCurve":
        """Curve with segment midpoints inserted (in the chart)."""
        points = np.empty((2 * len(self) + 1, 3))
        points[0::2] = self.points
        points[1::2] = self.midpoints
        return LevelCurve(points, None, self.value, self.step / 2)
