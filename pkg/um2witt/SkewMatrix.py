"""Alternating matrices over quotient rings, Pfaffians and the Vaserstein symbol.

Sign convention: Pf([[0, a], [-a, 0]]) = a, so psi2 = [[0, -1], [1, 0]] has Pfaffian -1.
Orthogonal sums are block diagonal in row order, for which Pf(M + N) = Pf(M) * Pf(N)
holds without a sign.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    IdentityFailedError,
    NotAlternatingError,
    OddSizeError,
    RingMismatchError,
    TrivialRingError,
)
from .logs import logger
from .QuotientRing import QuotientRing, RingElement
from .UnimodularRow import UnimodularRow

Matrix = Tuple[Tuple[RingElement, ...], ...]


def matrix_make(ring: QuotientRing, rows: Sequence[Sequence]) -> Matrix:
    """Square or rectangular matrix of ring elements from text or rationals."""
    rows = [list(row) for row in rows]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise DimensionMismatchError("Matrix rows have different lengths")
    return tuple(tuple(ring.elem(entry) for entry in row) for row in rows)


def identity_matrix(ring: QuotientRing, n: int) -> Matrix:
    """The n x n identity."""
    return tuple(
        tuple(ring.one() if i == j else ring.zero() for j in range(n)) for i in range(n)
    )


def transpose(matrix: Matrix) -> Matrix:
    """Transposed matrix."""
    return tuple(zip(*matrix)) if matrix else ()


def matrix_product(first: Matrix, second: Matrix) -> Matrix:
    """Exact matrix product first * second."""
    if first and len(first[0]) != len(second):
        raise DimensionMismatchError(
            f"Cannot multiply {len(first)}x{len(first[0])} by {len(second)}x"
            f"{len(second[0]) if second else 0}"
        )
    columns = transpose(second)
    product = []
    for row in first:
        entries = []
        for column in columns:
            total = None
            for a, b in zip(row, column):
                if a.is_zero or b.is_zero:
                    continue
                total = a * b if total is None else total + a * b
            entries.append(total if total is not None else row[0].ring.zero())
        product.append(tuple(entries))
    return tuple(product)


def determinant(matrix: Matrix) -> RingElement:
    """Division-free determinant by Laplace expansion along rows.

    Minors are memoized on their column sets, so the cost is exponential in the
    size only, which is fine for the sizes used here (at most 8).
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("Determinant of a non-square matrix")
    if n == 0:
        raise DimensionMismatchError("Determinant of an empty matrix needs a ring")
    ring = matrix[0][0].ring
    memo: Dict[Tuple[int, ...], RingElement] = {}

    def minor(columns: Tuple[int, ...]) -> RingElement:
        if not columns:
            return ring.one()
        if columns in memo:
            return memo[columns]
        row = matrix[n - len(columns)]
        total = ring.zero()
        for position, column in enumerate(columns):
            entry = row[column]
            if entry.is_zero:
                continue
            rest = minor(columns[:position] + columns[position + 1 :])
            term = entry * rest
            total = total + term if position % 2 == 0 else total - term
        memo[columns] = total
        return total

    return minor(tuple(range(n)))


@dataclass(frozen=True)
class SkewMatrix:
    """Alternating matrix (M = -M^T, zero diagonal) of even size over a quotient ring."""

    ring: QuotientRing
    entries: Matrix

    def __post_init__(self):
        size = len(self.entries)
        if any(len(row) != size for row in self.entries):
            raise DimensionMismatchError("Alternating matrices are square")
        for i in range(size):
            for j in range(size):
                entry = self.entries[i][j]
                if entry.ring is not self.ring:
                    raise RingMismatchError(
                        "Matrix entries must belong to the matrix ring"
                    )
                if i == j and not entry.is_zero:
                    raise NotAlternatingError(
                        f"Nonzero diagonal entry at ({i + 1}, {i + 1})"
                    )
                if j > i and entry != -self.entries[j][i]:
                    raise NotAlternatingError(
                        f"Entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) "
                        "are not opposite"
                    )
        if size % 2:
            raise OddSizeError(f"Alternating matrix of odd size {size}")

    @classmethod
    def from_rows(cls, ring: QuotientRing, rows: Sequence[Sequence]) -> "SkewMatrix":
        """Alternating matrix from rows of text, rationals or ring elements."""
        return cls(ring, matrix_make(ring, rows))

    @classmethod
    def empty(cls, ring: QuotientRing) -> "SkewMatrix":
        """The 0 x 0 matrix, neutral for orthogonal sums."""
        return cls(ring, ())

    @property
    def size(self) -> int:
        """Number of rows."""
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return self.entries[i][j]

    def to_rows(self):
        """Entries as text."""
        return [[str(entry) for entry in row] for row in self.entries]

    def __str__(self):
        return "\n".join("[" + ", ".join(row) + "]" for row in self.to_rows())


@dataclass(frozen=True)
class WittRep:
    """Representative of a class in the elementary symplectic Witt group."""

    matrix: SkewMatrix
    pfaffian: RingElement

    @classmethod
    def of(cls, matrix: SkewMatrix) -> "WittRep":
        """Representative with its Pfaffian computed."""
        return cls(matrix, pfaffian(matrix))

    def negate(self) -> "WittRep":
        """The opposite representative -M."""
        matrix = negate(self.matrix)
        sign = 1 if (matrix.size // 2) % 2 == 0 else -1
        return WittRep(matrix, self.pfaffian * sign)


def pfaffian(matrix: SkewMatrix) -> RingElement:
    """Pfaffian by recursive expansion along the first row.

    Pf(M) = sum_{j >= 2} (-1)^j m_1j Pf(M without rows/columns 1 and j), memoized on
    the remaining index sets.

    Raises:
        OddSizeError: For odd sizes (already excluded by SkewMatrix)
    """
    ring = matrix.ring
    if matrix.size % 2:
        raise OddSizeError(f"Pfaffian of odd size {matrix.size}")
    entries = matrix.entries
    memo: Dict[Tuple[int, ...], RingElement] = {}

    def expand(indices: Tuple[int, ...]) -> RingElement:
        if not indices:
            return ring.one()
        if indices in memo:
            return memo[indices]
        first = indices[0]
        total = ring.zero()
        for position in range(1, len(indices)):
            entry = entries[first][indices[position]]
            if entry.is_zero:
                continue
            rest = expand(indices[1:position] + indices[position + 1 :])
            term = entry * rest
            total = total + term if position % 2 == 1 else total - term
        memo[indices] = total
        return total

    return expand(tuple(range(matrix.size)))


def psi2(ring: QuotientRing) -> SkewMatrix:
    """The standard symplectic block [[0, -1], [1, 0]]."""
    return SkewMatrix.from_rows(ring, [[0, -1], [1, 0]])


def negate(matrix: SkewMatrix) -> SkewMatrix:
    """-M, the opposite sign convention for symbols."""
    negated = tuple(tuple(-entry for entry in row) for row in matrix.entries)
    return SkewMatrix(matrix.ring, negated)


def orthogonal_sum(
    first: SkewMatrix, second: SkewMatrix, check: bool = True
) -> SkewMatrix:
    """Block diagonal sum first + second.

    Args:
        first:  Upper left block
        second: Lower right block
        check:  Assert Pf(first + second) = Pf(first) * Pf(second)

    Raises:
        RingMismatchError:   Blocks over different rings
        IdentityFailedError: If the Pfaffian identity fails
    """
    if first.ring is not second.ring:
        raise RingMismatchError("Orthogonal sum of matrices over different rings")
    ring = first.ring
    m, n = first.size, second.size
    rows = []
    for i in range(m + n):
        row = []
        for j in range(m + n):
            if i < m and j < m:
                row.append(first.entries[i][j])
            elif i >= m and j >= m:
                row.append(second.entries[i - m][j - m])
            else:
                row.append(ring.zero())
        rows.append(tuple(row))
    total = SkewMatrix(ring, tuple(rows))

    if check and pfaffian(total) != pfaffian(first) * pfaffian(second):
        raise IdentityFailedError("Pfaffian is not multiplicative on the orthogonal sum")
    return total


def stabilize(matrix: SkewMatrix, times: int = 1) -> SkewMatrix:
    """M + psi2 + ... + psi2 with the given number of psi2 blocks."""
    block = psi2(matrix.ring)
    for _ in range(times):
        matrix = orthogonal_sum(matrix, block, check=False)
    return matrix


def vaserstein_matrix(ring: QuotientRing, a: Sequence, b: Sequence) -> SkewMatrix:
    """The 4 x 4 alternating matrix V(a, b) of a length-3 row a with certificate b."""
    if ring.is_trivial:
        raise TrivialRingError(
            f"No Vaserstein symbol over the zero ring {ring.describe()}"
        )
    zero = ring.zero()
    a1, a2, a3 = (ring.elem(entry) for entry in a)
    b1, b2, b3 = (ring.elem(entry) for entry in b)
    rows = (
        (zero, -a1, -a2, -a3),
        (a1, zero, -b3, b2),
        (a2, b3, zero, -b1),
        (a3, -b2, b1, zero),
    )
    return SkewMatrix(ring, rows)


def vaserstein_symbol(row: UnimodularRow) -> WittRep:
    """Vaserstein symbol V(a, b) of a certified row of length 3.

    Raises:
        DimensionMismatchError: Row length is not 3
        IdentityFailedError:    Pf(V) does not reduce to 1
    """
    if len(row) != 3:
        raise DimensionMismatchError(
            f"Vaserstein symbol needs a row of length 3, got {len(row)}"
        )

    matrix = vaserstein_matrix(row.ring, row.entries, row.certificate)
    value = pfaffian(matrix)
    if value != 1:
        raise IdentityFailedError(f"Pfaffian of the Vaserstein symbol reduces to {value}")
    logger.debug(f"Vaserstein symbol of {row}")
    return WittRep(matrix, value)


def congruence_transform(matrix: SkewMatrix, transform: Matrix) -> SkewMatrix:
    """E^T M E."""
    if len(transform) != matrix.size or any(len(row) != matrix.size for row in transform):
        raise DimensionMismatchError(
            f"Transform must be {matrix.size}x{matrix.size} to act on this matrix"
        )
    inner = matrix_product(matrix.entries, transform)
    product = matrix_product(transpose(transform), inner)
    return SkewMatrix(matrix.ring, product)


def congruence_check(matrix: SkewMatrix, transform: Matrix, target: SkewMatrix) -> bool:
    """True iff E^T M E = N as exact ring identities.

    Raises:
        DimensionMismatchError: Sizes are incompatible
    """
    if target.size != matrix.size:
        raise DimensionMismatchError(f"Sizes {matrix.size} and {target.size} differ")
    if target.ring is not matrix.ring:
        raise RingMismatchError("Congruence between matrices over different rings")
    return congruence_transform(matrix, transform).entries == target.entries


def stabilized_congruence_check(
    matrix: SkewMatrix,
    matrix_blocks: int,
    transform: Matrix,
    target: SkewMatrix,
    target_blocks: int,
) -> bool:
    """True iff E^T (M + psi2^a) E = N + psi2^b."""
    return congruence_check(
        stabilize(matrix, matrix_blocks), transform, stabilize(target, target_blocks)
    )


def signed_permutation_matrices(ring: QuotientRing, n: int) -> Iterator[Matrix]:
    """All n x n signed permutation matrices, in a fixed order."""
    for permutation in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            rows = [[0] * n for _ in range(n)]
            for row, (column, sign) in enumerate(zip(permutation, signs)):
                rows[row][column] = sign
            yield matrix_make(ring, rows)


def find_signed_permutation_witness(
    matrix: SkewMatrix, target: SkewMatrix, exclude_identity: bool = False
) -> Optional[Matrix]:
    """First signed permutation E with E^T M E = N, or None."""
    identity = identity_matrix(matrix.ring, matrix.size)
    for candidate in signed_permutation_matrices(matrix.ring, matrix.size):
        if exclude_identity and candidate == identity:
            continue
        if congruence_check(matrix, candidate, target):
            return candidate
    return None


def cross(u: Sequence[RingElement], v: Sequence[RingElement]) -> Tuple[RingElement, ...]:
    """Cross product of two triples."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def certificate_change_witness(row: UnimodularRow, other: UnimodularRow) -> Matrix:
    """Elementary E with E^T V(a, b) E = V(a, b') for two certificates of one row.

    With d = b' - b and u = b x d, the unipotent matrix [[1, u^T], [0, I]] works
    because a . d = 0. The congruence is checked before returning.

    Raises:
        DimensionMismatchError: Rows are not of length 3
        RingMismatchError:      Rows have different entries or rings
        IdentityFailedError:    If the congruence does not hold
    """
    if len(row) != 3 or len(other) != 3:
        raise DimensionMismatchError("Certificate change is defined for rows of length 3")
    if row.ring is not other.ring or row.entries != other.entries:
        raise RingMismatchError(
            "Certificate change needs two certificates of the same row"
        )

    ring = row.ring
    difference = tuple(new - old for new, old in zip(other.certificate, row.certificate))
    u = cross(row.certificate, difference)
    transform = (
        (ring.one(), *u),
        (ring.zero(), ring.one(), ring.zero(), ring.zero()),
        (ring.zero(), ring.zero(), ring.one(), ring.zero()),
        (ring.zero(), ring.zero(), ring.zero(), ring.one()),
    )

    source = vaserstein_matrix(ring, row.entries, row.certificate)
    target = vaserstein_matrix(ring, other.entries, other.certificate)
    if not congruence_check(source, transform, target):
        raise IdentityFailedError("Certificate change congruence failed")
    return transform
