"""Named exact identities behind the constructions, checked by Groebner reduction."""

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from ..errors import (
    BudgetExceededError,
    ConfigurationError,
    IdentityFailedError,
    RealizationError,
    VerificationError,
)
from ..logs import logger
from ..Polynomial import Polynomial
from ..QuotientRing import QuotientRing, free_ring, ring_make
from ..quadrics.sphere_maps import (
    H_map,
    Q7,
    S3,
    alpha_map,
    compose_H,
    composite_map,
    f_map,
    g_map,
    hopf_map,
    map_alpha,
    map_h,
    minus_one,
)
from ..SkewMatrix import (
    certificate_change_witness,
    congruence_check,
    determinant,
    matrix_make,
    matrix_product,
    orthogonal_sum,
    pfaffian,
    psi2,
    vaserstein_matrix,
    vaserstein_symbol,
)
from ..UnimodularRow import base_row, row_make

# E^T V(e1) E = psi2 + psi2 for this signed permutation (swap of the two 2-blocks).
BASEPOINT_WITNESS = [
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
]


@dataclass
class IdentityResult:
    """Outcome of one identity check."""

    name: str
    passed: bool
    detail: str
    seconds: float


def _require(condition: bool, message: str):
    if not condition:
        raise IdentityFailedError(message)


def check_f_membership() -> str:
    """f lands in Q_4 modulo sum(a_i b_i) - 1."""
    verified = f_map().verify()
    (cofactor,) = verified.witness[0]
    return f"x1y1 + x2y2 - z(1 - z) = ({cofactor}) * (sum a_i b_i - 1)"


def check_f_matrix_agreement() -> str:
    """Entries of MN and det M reproduce the five components of f."""
    ring = free_ring(Q7.variables)
    a1, a2, a3, a4, b1, b2, b3, b4 = ring.gens()
    first = ((a1, a2), (-b2, b1))
    second = ((a3, a4), (-b4, b3))
    product = matrix_product(first, second)
    from_matrices = [product[0][0], product[0][1], product[1][1], -product[1][0]]
    from_matrices.append(determinant(first))
    formula = [ring.elem(component) for component in f_map().components]
    _require(from_matrices == formula, "(MN, det M) differs from the f formula")
    return "MN = [[x1, x2], [-y2, y1]], det M = z"


def check_h_certificate() -> str:
    """(2y1, 2y2, 1 - 2z) o f certifies H on Q_7."""
    verified = H_map().verify()
    return f"certificate identity holds with cofactor {verified.witness[-1][0]}"


def check_hopf_norm() -> str:
    """sum(alpha_i^2) = (sum a_i^2)^2 in the free ring."""
    symmetric = alpha_map(symmetric=True)
    variables = symmetric.source.variables
    squares = Polynomial.zero(variables)
    for component in symmetric.components:
        squares = squares + component * component
    norm = Polynomial.zero(variables)
    for gen in Polynomial.generators(variables):
        norm = norm + gen * gen
    _require(squares == norm * norm, "Norm identity of the Hopf formula fails")
    return "sum c_i^2 - (sum a_i^2)^2 expands to 0"


def check_composite_formula() -> str:
    """H o h on the 3-sphere ring is the Hopf map."""
    ring = S3.ring()
    image = compose_H(map_h(ring))
    hopf = tuple(ring.elem(component) for component in hopf_map().components)
    _require(image.entries == hopf, f"H(h(x)) = {image} is not the Hopf map")

    symbolic = composite_map()
    reduced = tuple(ring.elem(component) for component in symbolic.components)
    _require(reduced == hopf, "Symbolic H o h disagrees with the Hopf map")
    hopf_map().verify()
    return ", ".join(str(entry) for entry in image.entries)


def check_vaserstein_pfaffian() -> str:
    """Pf(V(a, b)) = sum(a_i b_i), and V is a symbol on the generic certified row."""
    names = ["a1", "a2", "a3", "b1", "b2", "b3"]
    free = free_ring(names)
    a, b = free.gens()[:3], free.gens()[3:]
    value = pfaffian(vaserstein_matrix(free, a, b))
    _require(value == a[0] * b[0] + a[1] * b[1] + a[2] * b[2], f"Pf(V) = {value}")

    generic = ring_make(names, ["a1*b1 + a2*b2 + a3*b3 - 1"])
    gens = generic.gens()
    symbol = vaserstein_symbol(row_make(generic, gens[:3], gens[3:]))
    return f"Pf(V) = {value}; reduces to {symbol.pfaffian} on the generic row"


def check_g_naturality() -> str:
    """g with symbolic alpha specialized at -1 equals g at alpha = -1."""
    specialized = minus_one(g_map()).components
    direct = g_map(-1).components
    _require(specialized == direct, "[-1] square does not commute")
    return ", ".join(str(component) for component in direct)


def check_alpha_agreement() -> str:
    """Default and symmetric alpha agree on rows certified by themselves."""
    ring = S3.ring()
    row = map_h(ring)
    default = map_alpha(row)
    symmetric = map_alpha(row, symmetric=True)
    _require(default.entries == symmetric.entries, "alpha modes disagree for b = a")
    return "compose_H and the symmetric formula agree on h(S^3)"


def check_basepoint_witness(ring: Optional[QuotientRing] = None) -> str:
    """E^T V(e1) E = psi2 + psi2 for the stored signed permutation."""
    ring = ring or free_ring(["t"])
    symbol = vaserstein_symbol(base_row(ring, 3)).matrix
    target = orthogonal_sum(psi2(ring), psi2(ring))
    witness = matrix_make(ring, BASEPOINT_WITNESS)
    _require(congruence_check(symbol, witness, target), "Basepoint witness fails")
    return "E^T V(e1) E = psi2 + psi2"


def check_certificate_change() -> str:
    """V(a, b) and V(a, b') are elementarily congruent for two certificates."""
    ring = free_ring(["x"])
    row = row_make(ring, ["x", "1 - x", "0"], ["1", "1", "0"])
    other = row_make(ring, ["x", "1 - x", "0"], ["2 - x", "1 - x", "0"])
    witness = certificate_change_witness(row, other)
    return f"E first row ({', '.join(str(entry) for entry in witness[0])})"


IDENTITIES: Dict[str, Callable[[], str]] = {
    "f_membership": check_f_membership,
    "f_matrix_agreement": check_f_matrix_agreement,
    "h_certificate": check_h_certificate,
    "hopf_norm": check_hopf_norm,
    "composite_formula": check_composite_formula,
    "vaserstein_pfaffian": check_vaserstein_pfaffian,
    "g_naturality": check_g_naturality,
    "alpha_agreement": check_alpha_agreement,
    "basepoint_witness": check_basepoint_witness,
    "certificate_change": check_certificate_change,
}


def run_identity(name: str, check: Callable[[], str]) -> IdentityResult:
    """Run one check; failures of the check become failed results.

    Verification errors, realization errors and exhausted budgets are recorded as
    failures so that a batch keeps going. Input errors propagate.
    """
    start = time.perf_counter()
    try:
        detail = check()
        passed = True
    except (VerificationError, RealizationError, BudgetExceededError) as e:
        detail = str(e)
        passed = False
    seconds = time.perf_counter() - start
    log = logger.info if passed else logger.error
    log(f"{'PASS' if passed else 'FAIL'} {name} ({seconds:.2f} s)")
    return IdentityResult(name, passed, detail, seconds)


def run_identity_battery(names: Optional[Sequence[str]] = None) -> List[IdentityResult]:
    """Run the named identities (all by default) in a fixed order."""
    names = list(IDENTITIES) if names is None else list(names)
    unknown = [name for name in names if name not in IDENTITIES]
    if unknown:
        raise ConfigurationError(
            f"Unknown identities {unknown}; known: {list(IDENTITIES)}"
        )
    return [run_identity(name, IDENTITIES[name]) for name in names]


def results_frame(results: Sequence[IdentityResult]) -> pd.DataFrame:
    """Results as a DataFrame with columns name, passed, detail and seconds."""
    columns = ["name", "passed", "detail", "seconds"]
    return pd.DataFrame([vars(result) for result in results], columns=columns)
