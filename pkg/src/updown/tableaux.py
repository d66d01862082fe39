"""Young tableaux: partial, standard, skew semistandard and King (symplectic).

Straight-shape tableaux are tuples of rows, each row a tuple of ints.  A
partial tableau has distinct positive entries increasing along rows and
down columns; a standard tableau is a partial tableau with entry set
``{1, ..., r}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .partitions import Box, Partition, as_partition, contains

Tableau = tuple[tuple[int, ...], ...]


def as_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    return tuple(tuple(r) for r in rows if len(tuple(r)) > 0)


def shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def entries(t: Tableau) -> list[int]:
    return [x for row in t for x in row]


def transpose(t: Tableau) -> Tableau:
    if not t:
        return ()
    return tuple(
        tuple(t[i][j] for i in range(len(t)) if j < len(t[i])) for j in range(len(t[0]))
    )


def position(t: Tableau, x: int) -> Optional[Box]:
    for i, row in enumerate(t, 1):
        for j, y in enumerate(row, 1):
            if y == x:
                return Box(i, j)
    return None


def is_partial_tableau(t: Tableau) -> bool:
    lengths = shape(t)
    if any(a < b for a, b in zip(lengths, lengths[1:])) or any(n == 0 for n in lengths):
        return False
    flat = entries(t)
    if len(set(flat)) != len(flat) or any(x <= 0 for x in flat):
        return False
    for i, row in enumerate(t):
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
        if i and any(t[i - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def is_standard(t: Tableau) -> bool:
    return is_partial_tableau(t) and sorted(entries(t)) == list(range(1, len(entries(t)) + 1))


# -- insertion and deletion -------------------------------------------------

def row_bump(t: Tableau, x: int) -> tuple[Tableau, Box]:
    # bumps the leftmost entry strictly greater than x; works for repeated letters too
    rows = [list(r) for r in t]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return as_tableau(rows), Box(i + 1, 1)
        row = rows[i]
        j = next((j for j, y in enumerate(row) if y > x), None)
        if j is None:
            row.append(x)
            return as_tableau(rows), Box(i + 1, len(row))
        row[j], x = x, row[j]
        i += 1


def row_insert(t: Tableau, x: int) -> tuple[Tableau, Box]:
    """Schensted row insertion of ``x`` into a partial tableau.

    Returns the new tableau and the box that was added.
    """
    if x in entries(t):
        raise ValueError(f"{x} already in tableau")
    return row_bump(t, x)


def row_delete(t: Tableau, box: Box) -> tuple[int, Tableau]:
    """Reverse row bumping starting from the corner ``box``.

    Returns the ejected letter and the smaller tableau; inverse of
    :func:`row_insert`.
    """
    i, j = box
    if not (1 <= i <= len(t) and j == len(t[i - 1]) and (i == len(t) or len(t[i]) < j)):
        raise ValueError(f"{tuple(box)} is not a removable corner")
    rows = [list(r) for r in t]
    y = rows[i - 1].pop()
    for k in range(i - 2, -1, -1):
        row = rows[k]
        m = max(c for c, z in enumerate(row) if z < y)
        row[m], y = y, row[m]
    return y, as_tableau(rows)


def column_insert(t: Tableau, x: int) -> tuple[Tableau, Box]:
    """Column insertion: ``x`` enters column 1 and bumps the smallest entry
    larger than it; the bumped entry moves on to the next column.  When no
    entry is larger, ``x`` goes to the bottom of the column."""
    new, box = row_insert(transpose(t), x)
    return transpose(new), box.transpose()


def column_delete(t: Tableau, box: Box) -> tuple[int, Tableau]:
    """Inverse of :func:`column_insert` at the removable corner ``box``."""
    x, new = row_delete(transpose(t), Box(box.col, box.row))
    return x, transpose(new)


def remove_entry(t: Tableau, x: int) -> Tableau:
    """Remove ``x`` sitting at a corner, without any bumping."""
    b = position(t, x)
    if b is None:
        raise ValueError(f"{x} not in tableau")
    rows = [list(r) for r in t]
    if b.col != len(rows[b.row - 1]) or (b.row < len(rows) and len(rows[b.row]) >= b.col):
        raise ValueError(f"{x} is not in a corner")
    rows[b.row - 1].pop()
    return as_tableau(rows)


def place(t: Tableau, box: Box, x: int) -> Tableau:
    """Put ``x`` into the outer corner ``box``."""
    rows = [list(r) for r in t]
    if box.row == len(rows) + 1:
        rows.append([])
    if box.row > len(rows) or box.col != len(rows[box.row - 1]) + 1:
        raise ValueError(f"{tuple(box)} is not an outer corner")
    if box.row > 1 and len(rows[box.row - 2]) < box.col:
        raise ValueError(f"{tuple(box)} is not an outer corner")
    rows[box.row - 1].append(x)
    return as_tableau(rows)


# -- skew tableaux ----------------------------------------------------------

@dataclass(frozen=True)
class SkewTableau:
    """Skew semistandard tableau of shape ``outer / inner``.

    ``rows`` lists every row of the outer shape, with ``None`` in the cells
    of ``inner``.
    """

    inner: Partition
    rows: tuple[tuple[Optional[int], ...], ...]

    @classmethod
    def from_rows(cls, inner: Sequence[int], rows: Iterable[Iterable[Optional[int]]]) -> "SkewTableau":
        inner = as_partition(inner)
        rows = tuple(tuple(r) for r in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        return cls(inner, rows)

    @classmethod
    def from_filled(cls, inner: Sequence[int], filled: Iterable[Iterable[int]]) -> "SkewTableau":
        """Build from the skew entries of each row only."""
        inner = as_partition(inner)
        filled = [tuple(r) for r in filled]
        n = max(len(inner), len(filled))
        rows = []
        for i in range(n):
            k = inner[i] if i < len(inner) else 0
            rows.append((None,) * k + (filled[i] if i < len(filled) else ()))
        return cls.from_rows(inner, rows)

    @property
    def outer(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def skew_rows(self) -> list[tuple[int, ...]]:
        return [tuple(x for x in r if x is not None) for r in self.rows]

    def weight(self) -> tuple[int, ...]:
        flat = [x for r in self.skew_rows() for x in r]
        m = max(flat, default=0)
        return tuple(flat.count(i) for i in range(1, m + 1))

    def is_valid(self) -> bool:
        outer = self.outer
        if any(a < b for a, b in zip(outer, outer[1:])) or not contains(outer, self.inner):
            return False
        for i, row in enumerate(self.rows):
            k = self.inner[i] if i < len(self.inner) else 0
            if any(x is not None for x in row[:k]) or any(x is None or x <= 0 for x in row[k:]):
                return False
            body = row[k:]
            if any(a > b for a, b in zip(body, body[1:])):
                return False
            if i:
                above = self.rows[i - 1]
                for j in range(k, len(row)):
                    if above[j] is not None and above[j] >= row[j]:
                        return False
        return True

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "SkewTableau":
        return cls.from_rows(data["inner"], data["rows"])


def reading_word(t) -> tuple[int, ...]:
    """Rows concatenated from bottom to top, each read left to right."""
    rows = t.skew_rows() if isinstance(t, SkewTableau) else t
    return tuple(x for row in reversed(rows) for x in row)


def reverse_reading_word(t) -> tuple[int, ...]:
    return reading_word(t)[::-1]


def descents_partial(t: Tableau) -> set[int]:
    """``{k : k, k+1 both entries and k+1 in a lower row than k}``."""
    row_of = {x: i for i, row in enumerate(t) for x in row}
    return {k for k in row_of if k + 1 in row_of and row_of[k + 1] > row_of[k]}


def is_yamanouchi(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def word_weight(word: Sequence[int]) -> tuple[int, ...]:
    m = max(word, default=0)
    return tuple(list(word).count(i) for i in range(1, m + 1))


# -- enumeration ------------------------------------------------------------

def _fill(lam: Partition, candidates, accept) -> Iterator[Tableau]:
    # cells in row-reading order, values increasing, so the output is
    # lexicographic on the concatenated rows
    cell_list = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid: list[list[int]] = [[0] * row for row in lam]

    def rec(pos: int) -> Iterator[Tableau]:
        if pos == len(cell_list):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cell_list[pos]
        for v in candidates(grid, i, j):
            if accept(grid, i, j, v):
                grid[i][j] = v
                yield from rec(pos + 1)
                grid[i][j] = 0

    return rec(0)


def enumerate_syt(lam: Sequence[int]) -> Iterator[Tableau]:
    """Standard Young tableaux of shape ``lam``, lexicographic on rows."""
    lam = as_partition(lam)
    r = sum(lam)

    def candidates(grid, i, j):
        lo = max(grid[i][j - 1] if j else 0, grid[i - 1][j] if i else 0)
        return range(lo + 1, r + 1)

    def accept(grid, i, j, v):
        return v not in {x for row in grid for x in row}

    yield from _fill(lam, candidates, accept)


def enumerate_ssyt(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..n``."""
    lam = as_partition(lam)
    if len(lam) > n:
        return iter(())

    def candidates(grid, i, j):
        lo = max(grid[i][j - 1] if j else 1, grid[i - 1][j] + 1 if i else 1)
        return range(lo, n + 1)

    return _fill(lam, candidates, lambda *a: True)


def king_rank(letter: int) -> int:
    """Position of a letter in the order ``1 < -1 < 2 < -2 < ...``."""
    return 2 * letter - 1 if letter > 0 else -2 * letter


def king_letter(rank: int) -> int:
    return (rank + 1) // 2 if rank % 2 else -(rank // 2)


def enumerate_king(lam: Sequence[int], n: int) -> Iterator[Tableau]:
    """King's symplectic tableaux of shape ``lam`` over ``±1..±n``.

    Rows weakly increase and columns strictly increase in the order
    ``1 < -1 < ... < n < -n``; entries of row ``i`` are at least ``i``.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        return iter(())

    def candidates(grid, i, j):
        lo = max(2 * (i + 1) - 1,
                 king_rank(grid[i][j - 1]) if j else 1,
                 king_rank(grid[i - 1][j]) + 1 if i else 1)
        return [king_letter(q) for q in range(lo, 2 * n + 1)]

    return _fill(lam, candidates, lambda *a: True)
