"""Linking numbers of closed polylines in R^3."""

from typing import Union

import numpy as np

from .LevelCurve import LevelCurve

Curve = Union[LevelCurve, np.ndarray]


def _closed_polyline(curve: Curve) -> np.ndarray:
    if isinstance(curve, LevelCurve):
        return curve.points
    points = np.asarray(curve, dtype=float)
    if np.linalg.norm(points[0] - points[-1]) > 0:
        points = np.vstack([points, points[:1]])
    return points


def gauss_linking_integral(first: Curve, second: Curve) -> float:
    """Gauss double integral (1/4 pi) sum (m1 - m2) . (d1 x d2) / |m1 - m2|^3.

    Midpoint quadrature over all pairs of segments; symmetric in its arguments.

    Args:
        first:  Closed polyline (LevelCurve or array of vertices)
        second: Closed polyline disjoint from the first

    Returns:
        The (non-rounded) linking integral
    """
    p, q = _closed_polyline(first), _closed_polyline(second)
    mid_p, seg_p = 0.5 * (p[1:] + p[:-1]), np.diff(p, axis=0)
    mid_q, seg_q = 0.5 * (q[1:] + q[:-1]), np.diff(q, axis=0)

    total = 0.0
    # Row blocks keep the pair arrays small for fine polylines.
    for start in range(0, len(mid_p), 256):
        block = slice(start, start + 256)
        offsets = mid_p[block, None, :] - mid_q[None, :, :]
        crossed = np.cross(seg_p[block, None, :], seg_q[None, :, :])
        distance = np.linalg.norm(offsets, axis=2)
        total += np.sum(np.einsum("ijk,ijk->ij", offsets, crossed) / distance**3)
    return float(total / (4 * np.pi))


def polyline_linking_number(first: Curve, second: Curve) -> float:
    """Linking number from exact solid angles of segment-pair quadrilaterals.

    Independent of the quadrature in gauss_linking_integral; exact for polylines
    up to rounding, so the result is close to an integer at any resolution.
    """
    ls, ks = _closed_polyline(first), _closed_polyline(second)
    l0, l1 = ls[None, :-1, :], ls[None, 1:, :]
    k0, k1 = ks[:-1, None, :], ks[1:, None, :]

    a = l0 - k0
    b = l0 - k1
    c = l1 - k1
    d = l1 - k0

    def dot(u, v):
        return np.sum(u * v, axis=2)

    p = dot(a, np.cross(b, c))
    an, bn, cn, dn = (np.linalg.norm(vec, axis=2) for vec in (a, b, c, d))
    d1 = an * bn * cn + dot(a, b) * cn + dot(b, c) * an + dot(c, a) * bn
    d2 = an * dn * cn + dot(a, d) * cn + dot(d, c) * an + dot(c, a) * dn
    return float(np.sum(np.arctan2(p, d1) + np.arctan2(p, d2)) / (2 * np.pi))


def great_circle_fiber(value, samples: int = 256) -> np.ndarray:
    """Closed-form fiber of the Hopf map over a point of S^2.

    With z1 = x1 + i x2 and z2 = x3 + i x4 the Hopf map reads (2 z1 z2, |z2|^2 - |z1|^2),
    so the fiber over (w, c) is z1 = r1 e^{it}, z2 = r2 e^{i(phi - t)} with
    r1^2 = (1 - c)/2, r2^2 = (1 + c)/2 and phi = arg w.

    Returns:
        Array of shape (samples + 1, 4), last row equal to the first
    """
    v = np.asarray(value, dtype=float)
    v = v / np.linalg.norm(v)
    r1 = np.sqrt(max(0.0, (1 - v[2]) / 2))
    r2 = np.sqrt(max(0.0, (1 + v[2]) / 2))
    phi = np.arctan2(v[1], v[0])
    t = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    z1 = r1 * np.exp(1j * t)
    z2 = r2 * np.exp(1j * (phi - t))
    points = np.column_stack([z1.real, z1.imag, z2.real, z2.imag])
    return np.vstack([points, points[:1]])
