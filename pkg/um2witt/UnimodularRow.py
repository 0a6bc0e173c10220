"""Unimodular rows with certificates and the elementary group action on them."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    BadCertificateError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotUnimodularError,
    RingMismatchError,
    TrivialRingError,
)
from .logs import logger
from .QuotientRing import QuotientRing, RingElement, express_one


@dataclass(frozen=True)
class UnimodularRow:
    """Row (a_1..a_n) with certificate (b_1..b_n) such that sum(a_i * b_i) = 1.

    The identity is checked whenever a row is constructed. Rows over the zero ring
    are refused, since there 0 = 1 and every tuple would pass.
    """

    ring: QuotientRing
    entries: Tuple[RingElement, ...]
    certificate: Tuple[RingElement, ...]

    def __post_init__(self):
        if self.ring.is_trivial:
            raise TrivialRingError(
                f"No unimodular rows over the zero ring {self.ring.describe()}"
            )
        if len(self.entries) < 2:
            raise DimensionMismatchError("A unimodular row has at least two entries")
        if len(self.certificate) != len(self.entries):
            raise DimensionMismatchError(
                f"Certificate of length {len(self.certificate)} for a row of length "
                f"{len(self.entries)}"
            )
        for element in (*self.entries, *self.certificate):
            if element.ring is not self.ring:
                raise RingMismatchError("Row entries must belong to the row's ring")

        pairing = pair(self.entries, self.certificate)
        if pairing != 1:
            raise BadCertificateError(
                f"sum(a_i * b_i) reduces to {pairing}, not 1, in {self.ring.describe()}"
            )

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, UnimodularRow):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.entries == other.entries
            and self.certificate == other.certificate
        )

    def __hash__(self):
        return hash((id(self.ring), self.entries, self.certificate))

    def symmetric(self) -> bool:
        """True if the certificate equals the row (b = a)."""
        return self.entries == self.certificate

    def to_dict(self) -> dict:
        """Text form of row and certificate."""
        return {
            "row": [str(entry) for entry in self.entries],
            "certificate": [str(entry) for entry in self.certificate],
        }

    def __str__(self):
        row = ", ".join(str(entry) for entry in self.entries)
        cert = ", ".join(str(entry) for entry in self.certificate)
        return f"({row}) / ({cert})"


@dataclass(frozen=True)
class ElementaryMove:
    """Elementary transvection E_ij(lambda) with 1-based indices i != j."""

    i: int
    j: int
    lam: RingElement

    def __post_init__(self):
        if self.i == self.j:
            raise IndexOutOfRangeError(
                f"Elementary move needs i != j, got i = j = {self.i}"
            )
        if self.i < 1 or self.j < 1:
            raise IndexOutOfRangeError(f"Indices are 1-based, got ({self.i}, {self.j})")

    def inverse(self) -> "ElementaryMove":
        """E_ij(-lambda)."""
        return ElementaryMove(self.i, self.j, -self.lam)

    def to_dict(self) -> dict:
        """Word entry as in the JSON word format."""
        return {"i": self.i, "j": self.j, "lambda": str(self.lam)}

    def __str__(self):
        return f"E_{self.i}{self.j}({self.lam})"


def pair(first: Sequence[RingElement], second: Sequence[RingElement]) -> RingElement:
    """sum(first_i * second_i)."""
    total = first[0].ring.zero()
    for a, b in zip(first, second):
        total = total + a * b
    return total


def row_make(
    ring: QuotientRing,
    entries: Sequence,
    certificate: Optional[Sequence] = None,
) -> UnimodularRow:
    """Certified unimodular row.

    Args:
        ring:        The ring the row lives in
        entries:     Row entries (text, rationals, polynomials or ring elements)
        certificate: (Optional) b with sum(a_i * b_i) = 1; searched if absent

    Returns:
        UnimodularRow: the row with a verified certificate

    Raises:
        TrivialRingError:     The ring is the zero ring
        BadCertificateError:  Supplied certificate fails verification
        NotUnimodularError:   1 is not in the ideal generated by the entries
        BudgetExceededError:  Search budget exhausted (unimodularity unknown)
    """
    entries = tuple(ring.elem(entry) for entry in entries)

    if certificate is not None:
        certificate = tuple(ring.elem(entry) for entry in certificate)
        return UnimodularRow(ring, entries, certificate)

    cofactors = express_one(ring, entries)
    if cofactors is None:
        raise NotUnimodularError(
            f"Row ({', '.join(str(e) for e in entries)}) generates a proper ideal of "
            f"{ring.describe()}"
        )
    logger.info(f"Certified row of length {len(entries)} in {ring.describe()}")
    return UnimodularRow(ring, entries, tuple(cofactors))


def base_row(ring: QuotientRing, n: int) -> UnimodularRow:
    """The basepoint e_1 = (1, 0, ..., 0) with certificate e_1."""
    e1 = [ring.one()] + [ring.zero()] * (n - 1)
    return UnimodularRow(ring, tuple(e1), tuple(e1))


def apply_elementary(row: UnimodularRow, move: ElementaryMove) -> UnimodularRow:
    """Right action of E_ij(lambda): a_j += lambda * a_i, b_i -= lambda * b_j."""
    if move.i > len(row) or move.j > len(row):
        raise IndexOutOfRangeError(
            f"Move {move} does not fit a row of length {len(row)}"
        )
    if move.lam.ring is not row.ring:
        raise RingMismatchError("Move parameter belongs to another ring")

    i, j = move.i - 1, move.j - 1
    entries = list(row.entries)
    certificate = list(row.certificate)
    entries[j] = entries[j] + move.lam * entries[i]
    certificate[i] = certificate[i] - move.lam * certificate[j]
    return UnimodularRow(row.ring, tuple(entries), tuple(certificate))


def apply_word(row: UnimodularRow, moves: Sequence[ElementaryMove]) -> UnimodularRow:
    """Apply a word of elementary moves from left to right."""
    for move in moves:
        row = apply_elementary(row, move)
    return row


def invert_word(moves: Sequence[ElementaryMove]) -> List[ElementaryMove]:
    """Formal inverse: reversed word with negated parameters."""
    return [move.inverse() for move in reversed(moves)]


def random_ring_element(
    ring: QuotientRing,
    rng: np.random.Generator,
    degree: int = 1,
    max_coefficient: int = 3,
) -> RingElement:
    """Random element of small degree with small integer coefficients."""
    gens = ring.gens()
    result = ring.elem(int(rng.integers(-max_coefficient, max_coefficient + 1)))
    for _ in range(degree):
        linear = ring.elem(int(rng.integers(-max_coefficient, max_coefficient + 1)))
        for gen in gens:
            coefficient = int(rng.integers(-max_coefficient, max_coefficient + 1))
            linear = linear + gen * coefficient
        result = result + linear * ring.elem(int(rng.integers(0, 2)))
        if rng.integers(0, 2):
            result = result * linear
    return result


def random_constructed_row(
    ring: QuotientRing, n: int, rng: np.random.Generator, degree: int = 1
) -> UnimodularRow:
    """Random row that is unimodular by construction.

    Picks random a_2..a_n and c_2..c_n and sets a_1 = 1 - sum(c_i * a_i), so that
    (1, c_2, ..., c_n) is a certificate.
    """
    rest = [random_ring_element(ring, rng, degree) for _ in range(n - 1)]
    cofactors = [random_ring_element(ring, rng, degree) for _ in range(n - 1)]
    first = ring.one() - pair(cofactors, rest)
    return UnimodularRow(ring, (first, *rest), (ring.one(), *cofactors))


def random_word(
    ring: QuotientRing, n: int, length: int, rng: np.random.Generator
) -> List[ElementaryMove]:
    """Random word of elementary moves on rows of length n."""
    moves = []
    for _ in range(length):
        i, j = rng.choice(np.arange(1, n + 1), size=2, replace=False)
        moves.append(ElementaryMove(int(i), int(j), random_ring_element(ring, rng, 1)))
    return moves
