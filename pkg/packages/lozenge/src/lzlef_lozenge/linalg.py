"""Exact integer matrices: determinant, permanent and rank over Q or F_p."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from sympy import isprime

from lzlef_core.config import settings
from lzlef_core.errors import ParseError, PreconditionError

if TYPE_CHECKING:
    from collections.abc import Iterable

logger = logging.getLogger(__name__)

# Mersenne prime used as a fast first pass for ranks over Q.
_RANK_PRIME = (1 << 61) - 1


@dataclass(frozen=True, slots=True)
class IntegerMatrix:
    """Dense row-major matrix of Python integers."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            msg = f"Entries do not form a {self.rows}x{self.cols} matrix"
            raise ValueError(msg)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int = 0) -> IntegerMatrix:
        """Build from nested iterables; cols is only read when there are no rows."""
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        width = len(entries[0]) if entries else cols
        return cls(rows=len(entries), cols=width, entries=entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows=rows, cols=cols, entries=((0,) * cols,) * rows)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            rows=self.cols,
            cols=self.rows,
            entries=tuple(zip(*self.entries, strict=True)) if self.rows else (),
        )

    def dumps(self) -> str:
        """First line "rows cols", then one line of integers per row."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> IntegerMatrix:
        lines = text.splitlines()
        offsets = [0]
        for line in lines:
            offsets.append(offsets[-1] + len(line) + 1)
        try:
            rows, cols = (int(tok) for tok in lines[0].split())
        except (IndexError, ValueError) as exc:
            msg = "Expected header 'rows cols'"
            raise ParseError(msg, text, 0) from exc
        body = lines[1 : rows + 1]
        if len(body) != rows:
            msg = f"Expected {rows} rows"
            raise ParseError(msg, text, len(text))
        entries = []
        for i, line in enumerate(body, start=1):
            try:
                row = tuple(int(tok) for tok in line.split())
            except ValueError as exc:
                msg = "Non-integer entry"
                raise ParseError(msg, text, offsets[i]) from exc
            if len(row) != cols:
                msg = f"Expected {cols} entries"
                raise ParseError(msg, text, offsets[i])
            entries.append(row)
        return cls(rows=rows, cols=cols, entries=tuple(entries))


def _require_square(m: IntegerMatrix, what: str) -> None:
    if not m.is_square:
        msg = f"{what} needs a square matrix, got {m.rows}x{m.cols}"
        raise PreconditionError(msg)


def check_characteristic(characteristic: int) -> int:
    if characteristic < 0 or (characteristic != 0 and not isprime(characteristic)):
        msg = f"Characteristic must be 0 or a prime, got {characteristic}"
        raise PreconditionError(msg)
    return characteristic


# ---------------------------------------------------------------------------
# Determinant
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def determinant(m: IntegerMatrix) -> int:
    """Fraction-free (Bareiss) elimination; every division is exact.

    Results are cached per matrix.
    """
    _require_square(m, "Determinant")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Permanent
# ---------------------------------------------------------------------------


def _permanent_ryser(a: tuple[tuple[int, ...], ...]) -> int:
    """Inclusion-exclusion over column subsets, visited in Gray-code order."""
    n = len(a)
    sums = [0] * n
    total = 0
    gray_prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        flipped = gray ^ gray_prev
        j = flipped.bit_length() - 1
        if gray & flipped:
            for i in range(n):
                sums[i] += a[i][j]
        else:
            for i in range(n):
                sums[i] -= a[i][j]
        gray_prev = gray
        prod = 1
        for s in sums:
            prod *= s
            if not prod:
                break
        total += -prod if gray.bit_count() & 1 else prod
    return -total if n & 1 else total


def _permanent_memo(a: tuple[tuple[int, ...], ...]) -> int:
    """Row-by-row expansion memoised on the set of used columns."""
    states: dict[int, int] = {0: 1}
    for row in a:
        support = [(j, x) for j, x in enumerate(row) if x]
        nxt: defaultdict[int, int] = defaultdict(int)
        for mask, count in states.items():
            for j, x in support:
                bit = 1 << j
                if not mask & bit:
                    nxt[mask | bit] += count * x
        if not nxt:
            return 0
        states = nxt
    return sum(states.values())


def _permanent_backtrack(a: tuple[tuple[int, ...], ...]) -> int:
    n = len(a)
    supports = [[(j, x) for j, x in enumerate(row) if x] for row in a]
    used = [False] * n

    def expand(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for j, x in supports[i]:
            if not used[j]:
                used[j] = True
                total += x * expand(i + 1)
                used[j] = False
        return total

    return expand(0)


def permanent(m: IntegerMatrix) -> int:
    """Exact permanent; for a 0/1 bi-adjacency matrix, the number of tilings."""
    _require_square(m, "Permanent")
    n = m.rows
    if n == 0:
        return 1
    if n <= settings.ryser_max_order:
        return _permanent_ryser(m.entries)
    if n <= settings.memo_max_order:
        return _permanent_memo(m.entries)
    logger.warning("Permanent of order %d falls back to plain backtracking", n)
    return _permanent_backtrack(m.entries)


# ---------------------------------------------------------------------------
# Rank
# ---------------------------------------------------------------------------


def _rank_mod(entries: tuple[tuple[int, ...], ...], p: int) -> int:
    rows = [[x % p for x in row] for row in entries]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for c in range(width):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow, strict=True)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_exact(entries: tuple[tuple[int, ...], ...]) -> int:
    """Fraction-free echelon form; pivots skip zero columns."""
    a = [list(row) for row in entries]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][c]
        row_r = a[rank]
        for i in range(rank + 1, n_rows):
            row_i = a[i]
            lead = row_i[c]
            for j in range(c + 1, n_cols):
                row_i[j] = (row_i[j] * pivot - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank(m: IntegerMatrix, characteristic: int = 0) -> int:
    """Rank over Q (characteristic 0) or over the prime field F_p."""
    check_characteristic(characteristic)
    if m.rows == 0 or m.cols == 0:
        return 0
    if characteristic:
        return _rank_mod(m.entries, characteristic)
    # rank over F_p never exceeds rank over Q
    fast = _rank_mod(m.entries, _RANK_PRIME)
    if fast == min(m.rows, m.cols):
        return fast
    return _rank_exact(m.entries)


def has_maximal_rank(m: IntegerMatrix, characteristic: int = 0) -> bool:
    return rank(m, characteristic) == min(m.rows, m.cols)
