"""Seeded acceptance checks: exact identities, randomized rows and the Hopf invariant."""

import itertools
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..errors import ConfigurationError, IdentityFailedError, NotUnimodularError
from ..io.write_report import write_report
from ..logs import logger
from ..Polynomial import Polynomial
from ..QuotientRing import QuotientRing, free_ring, ring_make
from ..quadrics.sphere_maps import alpha_map, compose_H, composite_map
from ..realization.hopf_invariant import analytic_hopf_linking, hopf_invariant
from ..realization.sphere_sampling import certify_nonvanishing
from ..Settings import Settings
from ..SkewMatrix import vaserstein_symbol
from ..UnimodularRow import (
    apply_elementary,
    pair,
    random_constructed_row,
    random_ring_element,
    random_word,
    row_make,
)
from ..utils import print_processing_status
from .identity_battery import (
    check_basepoint_witness,
    check_composite_formula,
    check_f_matrix_agreement,
    check_f_membership,
    check_hopf_norm,
    results_frame,
    run_identity,
)

RING_VARIABLES: List[Tuple[str, ...]] = [("x", "y"), ("x", "y", "z")]

NORTH = (0.0, 0.0, 1.0)
SOUTH = (0.0, 0.0, -1.0)


def random_relation(
    variables: Sequence[str], point: Sequence[int], rng: np.random.Generator
) -> Polynomial:
    """Random f of degree <= 2 with small coefficients, shifted to vanish at point."""
    terms = {
        monomial: int(rng.integers(-2, 3))
        for monomial in itertools.product(range(3), repeat=len(variables))
        if sum(monomial) <= 2
    }
    poly = Polynomial(variables, terms)
    return poly - Polynomial.constant(variables, poly.evaluate(point))


def random_presentation(
    rng: np.random.Generator,
) -> Tuple[Tuple[str, ...], List[Polynomial]]:
    """Variables and at most one relation, all vanishing at a random integer point.

    The common zero keeps the relation ideal proper, so the ring is never trivial.
    """
    variables = RING_VARIABLES[int(rng.integers(len(RING_VARIABLES)))]
    point = [int(value) for value in rng.integers(-2, 3, size=len(variables))]
    relations = [random_relation(variables, point, rng)]
    relations = [relation for relation in relations if not relation.is_zero]
    if rng.integers(0, 4) == 0:
        relations = []
    return variables, relations


class RandomRings:
    """Pool of random presented rings, built from a generator on first use."""

    def __init__(self, budget: int, pool_size: int = 4):
        self.budget = budget
        self.pool_size = pool_size
        self._rings: List[QuotientRing] = []

    def draw(self, rng: np.random.Generator) -> QuotientRing:
        if not self._rings:
            for _ in range(self.pool_size):
                variables, relations = random_presentation(rng)
                ring = ring_make(variables, relations, budget=self.budget)
                logger.debug(f"Random ring {ring.describe()}")
                self._rings.append(ring)
        return self._rings[int(rng.integers(len(self._rings)))]


def _require(condition: bool, message: str):
    if not condition:
        raise IdentityFailedError(message)


def check_random_pfaffians(settings: Settings, rng: np.random.Generator) -> str:
    """Pf(V(a, b)) = 1 for random certified rows of length 3."""
    rings = RandomRings(settings.groebner.budget)
    total = settings.suite.pfaffian_rows
    for counter in range(1, total + 1):
        row = random_constructed_row(rings.draw(rng), 3, rng)
        symbol = vaserstein_symbol(row)
        _require(symbol.pfaffian == 1, f"Pf(V) = {symbol.pfaffian} for {row}")
        print_processing_status(counter, total, "Vaserstein Pfaffians")
    return f"{total} rows, Pf(V(a, b)) = 1 for all"


def check_random_h_certificates(settings: Settings, rng: np.random.Generator) -> str:
    """The derived certificate of H pairs to 1 on random rows of length 4."""
    rings = RandomRings(settings.groebner.budget)
    total = settings.suite.h_rows
    for counter in range(1, total + 1):
        image = compose_H(random_constructed_row(rings.draw(rng), 4, rng))
        _require(
            pair(image.entries, image.certificate) == 1, f"H certificate fails: {image}"
        )
        print_processing_status(counter, total, "H certificates")
    return f"{total} rows, sum c_i * H_i = 1 for all"


def check_hopf_realization(settings: Settings, rng: np.random.Generator) -> str:
    """Numeric Hopf invariant of H o h, its stability and the analytic oracle."""
    realize = settings.realize
    numeric = composite_map().to_numeric()
    options = dict(
        residual_tolerance=realize.residual_tolerance,
        chart_bound=realize.chart_bound,
        newton_tolerance=realize.newton_tolerance,
        seed=realize.seed,
    )
    result = hopf_invariant(
        numeric, NORTH, SOUTH, grid=realize.grid, max_doublings=0, **options
    )
    _require(abs(result.linking) == 1, f"Hopf invariant {result.linking}, expected +-1")

    refined = hopf_invariant(
        numeric, NORTH, SOUTH, grid=2 * realize.grid, max_doublings=0, **options
    )
    _require(refined.linking == result.linking, "Hopf invariant changes when refined")

    analytic = analytic_hopf_linking(NORTH, SOUTH)
    _require(
        int(round(abs(analytic))) == abs(result.linking),
        f"Analytic fibers link {analytic:.4f} times",
    )

    min_norm, _ = certify_nonvanishing(
        alpha_map(symmetric=True).to_numeric(), realize.samples, realize.seed
    )
    _require(min_norm > 0.5, f"alpha comes close to 0 on S^3 (min norm {min_norm:.3e})")
    return (
        f"linking {result.linking} (residual {result.residual:.4f}, grid {result.grid}), "
        f"analytic {analytic:.4f}, min |alpha| {min_norm:.4f}"
    )


def check_certification(settings: Settings, rng: np.random.Generator) -> str:
    """Constructed unimodular rows are certified, rows in <x, y> are refuted."""
    rings = RandomRings(settings.groebner.budget)
    total = settings.suite.certified_rows
    for counter in range(1, total + 1):
        constructed = random_constructed_row(rings.draw(rng), 3, rng)
        certified = row_make(constructed.ring, constructed.entries)
        _require(
            pair(certified.entries, certified.certificate) == 1,
            f"Returned certificate fails for {certified}",
        )
        print_processing_status(counter, total, "Certified rows")

    ring = free_ring(["x", "y"], budget=settings.groebner.budget)
    x, y = ring.gens()
    refuted = 0
    for _ in range(settings.suite.refuted_rows):
        entries = [
            random_ring_element(ring, rng) * x + random_ring_element(ring, rng) * y
            for _ in range(3)
        ]
        try:
            row = row_make(ring, entries)
        except NotUnimodularError:
            refuted += 1
            continue
        raise IdentityFailedError(f"Row inside <x, y> was certified: {row}")
    return f"{total} rows certified, {refuted} rows refuted"


def check_elementary_action(settings: Settings, rng: np.random.Generator) -> str:
    """Elementary moves keep sum(a_i b_i) = 1 and are undone by their inverse."""
    rings = RandomRings(settings.groebner.budget)
    total = settings.suite.elementary_pairs
    for counter in range(1, total + 1):
        ring = rings.draw(rng)
        n = int(rng.integers(3, 5))
        row = random_constructed_row(ring, n, rng)
        (move,) = random_word(ring, n, 1, rng)
        moved = apply_elementary(row, move)
        _require(pair(moved.entries, moved.certificate) == 1, f"{move} breaks {row}")
        _require(apply_elementary(moved, move.inverse()) == row, f"{move} not undone")
        print_processing_status(counter, total, "Elementary moves")
    return f"{total} (row, move) pairs preserve the pairing"


def _exact(check: Callable[[], str]) -> Callable[[Settings, np.random.Generator], str]:
    return lambda settings, rng: check()


CRITERIA: Dict[str, Callable[[Settings, np.random.Generator], str]] = {
    "vaserstein_pfaffian": check_random_pfaffians,
    "f_membership": _exact(check_f_membership),
    "f_matrix_agreement": _exact(check_f_matrix_agreement),
    "composite_formula": _exact(check_composite_formula),
    "h_certificate": check_random_h_certificates,
    "hopf_norm": _exact(check_hopf_norm),
    "hopf_invariant": check_hopf_realization,
    "certification": check_certification,
    "elementary_action": check_elementary_action,
    "basepoint_witness": _exact(check_basepoint_witness),
}


def run_acceptance_suite(
    settings: Optional[Settings] = None, names: Optional[Sequence[str]] = None
) -> pd.DataFrame:
    """Run the acceptance criteria (all by default).

    Every criterion draws from its own generator seeded with (suite seed, index),
    so running a subset reproduces the same cases.

    Args:
        settings: Run configuration (defaults if omitted)
        names:    Criteria to run, in CRITERIA order

    Returns:
        pandas.DataFrame: columns name, passed, detail and seconds
    """
    settings = settings or Settings()
    selected = list(CRITERIA) if names is None else list(names)
    unknown = [name for name in selected if name not in CRITERIA]
    if unknown:
        raise ConfigurationError(f"Unknown criteria {unknown}; known: {list(CRITERIA)}")
    logger.info(
        f"Running {len(selected)} acceptance criteria (seed {settings.suite.seed})"
    )

    results = []
    for index, name in enumerate(CRITERIA):
        if name not in selected:
            continue
        rng = np.random.default_rng([settings.suite.seed, index])
        check = CRITERIA[name]
        results.append(run_identity(name, lambda: check(settings, rng)))
    return results_frame(results)


def write_acceptance_report(
    results: pd.DataFrame, settings: Settings, output_dir: Optional[str] = None
) -> List[Path]:
    """Write the report files and the processed configuration."""
    directory = Path(output_dir or settings.output.directory)
    passed = int(results["passed"].sum())
    header = f"um2witt acceptance suite: {passed}/{len(results)} passed"
    written = write_report(results, directory, settings.output.report, header)
    written.append(settings.dump(str(directory)))
    for path in written:
        logger.info(f"Wrote {path}")
    return written
