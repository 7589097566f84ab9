"""Exact determinant, permanent and rank kernels."""

from __future__ import annotations

import math
import random

import pytest
from sympy import Matrix

from lzlef_core.config import settings
from lzlef_core.errors import ParseError, PreconditionError
from lzlef_lozenge.linalg import (
    IntegerMatrix,
    determinant,
    has_maximal_rank,
    permanent,
    rank,
)


def _random_matrix(rng: random.Random, rows: int, cols: int, lo: int, hi: int):
    return IntegerMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
    )


# ---------------------------------------------------------------------------
# Determinant
# ---------------------------------------------------------------------------


def test_small_determinants():
    assert determinant(IntegerMatrix.from_rows([[2, 1], [1, 3]])) == 5
    assert determinant(IntegerMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntegerMatrix.zeros(0, 0)) == 1
    assert determinant(IntegerMatrix.from_rows([[1, 2], [2, 4]])) == 0


def test_determinant_rejects_non_square():
    with pytest.raises(PreconditionError):
        determinant(IntegerMatrix.zeros(2, 3))


def test_determinant_matches_sympy():
    rng = random.Random(3)
    for n in range(1, 9):
        for _ in range(5):
            m = _random_matrix(rng, n, n, -4, 4)
            assert determinant(m) == Matrix([list(row) for row in m.entries]).det()


# ---------------------------------------------------------------------------
# Permanent
# ---------------------------------------------------------------------------


def test_permanent_of_all_ones_is_factorial():
    for n in range(7):
        ones = IntegerMatrix.from_rows([[1] * n for _ in range(n)], cols=n)
        assert permanent(ones) == math.factorial(n)


def test_permanent_kernels_agree(monkeypatch):
    rng = random.Random(8)
    matrices = [_random_matrix(rng, n, n, 0, 1) for n in range(1, 9) for _ in range(4)]
    ryser = [permanent(m) for m in matrices]
    monkeypatch.setattr(settings, "ryser_max_order", 0)
    memo = [permanent(m) for m in matrices]
    monkeypatch.setattr(settings, "memo_max_order", 0)
    backtrack = [permanent(m) for m in matrices]
    assert ryser == memo == backtrack


def test_permanent_rejects_non_square():
    with pytest.raises(PreconditionError):
        permanent(IntegerMatrix.zeros(1, 2))


# ---------------------------------------------------------------------------
# Rank
# ---------------------------------------------------------------------------


def test_rank_of_zero_matrix():
    assert rank(IntegerMatrix.zeros(3, 4)) == 0
    assert rank(IntegerMatrix.zeros(0, 4)) == 0


def test_rank_depends_on_characteristic():
    m = IntegerMatrix.from_rows([[2, 1], [1, 3]])
    assert rank(m, 0) == 2
    assert rank(m, 5) == 1
    assert rank(m, 7) == 2


def test_rank_rejects_composite_characteristic():
    with pytest.raises(PreconditionError, match="prime"):
        rank(IntegerMatrix.zeros(1, 1), 6)
    with pytest.raises(PreconditionError):
        rank(IntegerMatrix.zeros(1, 1), -3)


def test_rank_matches_sympy():
    rng = random.Random(21)
    for _ in range(40):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        m = _random_matrix(rng, rows, cols, -1, 1)
        assert rank(m) == Matrix([list(row) for row in m.entries]).rank()


def test_exact_rank_path_for_deficient_matrices():
    m = IntegerMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1], [0, 2, 2]])
    assert rank(m) == 2
    assert not has_maximal_rank(m)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def test_dump_format():
    m = IntegerMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert m.dumps() == "2 3\n1 0 1\n0 1 1\n"
    assert IntegerMatrix.loads(m.dumps()) == m


def test_load_errors():
    with pytest.raises(ParseError):
        IntegerMatrix.loads("two three\n")
    with pytest.raises(ParseError):
        IntegerMatrix.loads("2 2\n1 0\n")
    with pytest.raises(ParseError) as excinfo:
        IntegerMatrix.loads("2 2\n1 0\n0 x\n")
    assert excinfo.value.position == 8
