import numpy as np
import pytest

from um2witt.errors import (
    BadCertificateError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotUnimodularError,
    TrivialRingError,
)
from um2witt.QuotientRing import free_ring, ring_make, sphere_ring
from um2witt.UnimodularRow import (
    ElementaryMove,
    apply_elementary,
    apply_word,
    base_row,
    invert_word,
    pair,
    random_constructed_row,
    random_word,
    row_make,
)


@pytest.fixture()
def line():
    return free_ring(["x"])


def test_row_with_certificate_on_sphere():
    ring = sphere_ring(4)
    row = row_make(ring, ring.gens(), ring.gens())
    assert row.symmetric()


def test_certificate_is_searched(line):
    row = row_make(line, ["x", "1 - x"])
    assert row.certificate == tuple(line.elems(["1", "1"]))


def test_bad_certificate(line):
    with pytest.raises(BadCertificateError):
        row_make(line, ["x", "1 - x"], ["1", "2"])


def test_not_unimodular():
    ring = free_ring(["x", "y"])
    with pytest.raises(NotUnimodularError) as error:
        row_make(ring, ["x", "y"])
    assert error.value.exit_status == 1


def test_rows_over_the_zero_ring_are_refused():
    zero = ring_make(["x"], ["x", "x - 1"])
    with pytest.raises(TrivialRingError) as error:
        row_make(zero, ["0", "0", "0"], ["0", "0", "0"])
    assert error.value.exit_status == 2
    with pytest.raises(TrivialRingError):
        row_make(zero, ["x", "0"])
    with pytest.raises(TrivialRingError):
        base_row(zero, 3)


def test_short_row(line):
    with pytest.raises(DimensionMismatchError):
        row_make(line, ["1"], ["1"])


def test_elementary_move(line):
    row = row_make(line, ["x", "1 - x"], ["1", "1"])
    moved = apply_elementary(row, ElementaryMove(1, 2, line.elem(1)))
    assert moved.entries == tuple(line.elems(["x", "1"]))
    assert moved.certificate == tuple(line.elems(["0", "1"]))


def test_zero_move_is_identity(line):
    row = row_make(line, ["x", "1 - x"], ["1", "1"])
    assert apply_elementary(row, ElementaryMove(2, 1, line.zero())) == row


@pytest.mark.parametrize(("i", "j"), [(1, 1), (0, 2)])
def test_invalid_move(line, i, j):
    with pytest.raises(IndexOutOfRangeError):
        ElementaryMove(i, j, line.one())


def test_move_outside_row(line):
    row = row_make(line, ["x", "1 - x"], ["1", "1"])
    with pytest.raises(IndexOutOfRangeError):
        apply_elementary(row, ElementaryMove(1, 3, line.one()))


def test_word_and_inverse(line):
    row = row_make(line, ["x", "1 - x"], ["1", "1"])
    word = [ElementaryMove(2, 1, line.one()), ElementaryMove(1, 2, line.elem("-x"))]
    moved = apply_word(row, word)
    assert moved.entries == tuple(line.elems(["1", "1 - 2*x"]))
    assert pair(moved.entries, moved.certificate) == 1
    assert apply_word(moved, invert_word(word)) == row
    assert apply_word(row, []) == row


def test_base_row(line):
    row = base_row(line, 3)
    assert row.entries == tuple(line.elems(["1", "0", "0"]))
    assert row.symmetric()


def test_random_rows_and_words_preserve_pairing():
    rng = np.random.default_rng(7)
    ring = free_ring(["x", "y"])
    for n in (2, 3, 4):
        row = random_constructed_row(ring, n, rng)
        word = random_word(ring, n, 5, rng)
        moved = apply_word(row, word)
        assert pair(moved.entries, moved.certificate) == 1
        assert apply_word(moved, invert_word(word)) == row


def test_to_dict(line):
    row = row_make(line, ["x", "1 - x"], ["1", "1"])
    assert row.to_dict() == {"row": ["x", "-x + 1"], "certificate": ["1", "1"]}
    move = ElementaryMove(1, 2, line.elem("x"))
    assert move.to_dict() == {"i": 1, "j": 2, "lambda": "x"}
