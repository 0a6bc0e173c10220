"""Quasi-random sampling of unit spheres and non-vanishing checks on them."""

import math
from typing import Tuple

import numpy as np
from scipy.stats import norm, qmc

from ..errors import ConfigurationError, DimensionMismatchError
from ..logs import logger
from .NumericMap import NumericMap

MIN_SAMPLES = 1000


def sample_sphere(samples: int, dim: int = 4, seed: int = 0) -> np.ndarray:
    """Low-discrepancy points on the unit sphere in R^dim.

    Scrambled Sobol points are mapped through the normal quantile function, which
    makes their directions uniformly distributed, and then normalized.

    Args:
        samples (int): Number of points
        dim (int):     Ambient dimension (4 for S^3)
        seed (int):    Scrambling seed

    Returns:
        Array of shape (samples, dim) with unit rows
    """
    sampler = qmc.Sobol(d=dim, scramble=True, seed=seed)
    cube = sampler.random_base2(m=max(1, math.ceil(math.log2(samples))))[:samples]
    cube = np.clip(cube, 1e-12, 1 - 1e-12)
    gaussian = norm.ppf(cube)
    lengths = np.linalg.norm(gaussian, axis=1, keepdims=True)
    return gaussian / lengths


def certify_nonvanishing(
    numeric_map: NumericMap, samples: int = 10_000, seed: int = 0
) -> Tuple[float, np.ndarray]:
    """Minimal norm of the map over a quasi-random sample of the source sphere.

    Args:
        numeric_map: Map defined on R^n, restricted to the unit sphere
        samples:     Number of sample points (at least 1000)
        seed:        Sampling seed

    Returns:
        min_norm: smallest |F(x)| over the sample
        argmin:   the sample point where it is attained

    Raises:
        ConfigurationError: If fewer than 1000 samples are requested
    """
    if samples < MIN_SAMPLES:
        raise ConfigurationError(f"Need at least {MIN_SAMPLES} samples, got {samples}")
    if numeric_map.source_dim < 2:
        raise DimensionMismatchError("Sphere sampling needs a source of dimension >= 2")

    points = sample_sphere(samples, numeric_map.source_dim, seed)
    norms = np.linalg.norm(numeric_map.evaluate(points), axis=1)
    index = int(np.argmin(norms))
    logger.info(
        f"{numeric_map.name}: min |F| = {norms[index]:.3e} over {samples} sphere samples"
    )
    return float(norms[index]), points[index]
