"""Integer partitions as plain tuples.

A partition is a weakly decreasing tuple of positive integers with no
trailing zeros, so ``()`` is the empty partition.  Rows and columns are
1-based and read in English notation (row 1 on top).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional

Partition = tuple[int, ...]


class Box(NamedTuple):
    row: int
    col: int

    def transpose(self) -> "Box":
        return Box(self.col, self.row)


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it in canonical form (zeros stripped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {list(parts)}")
    return p


def is_partition(parts: Iterable[int]) -> bool:
    p = tuple(parts)
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(big: Partition, small: Partition) -> bool:
    """True iff ``small`` fits inside ``big`` componentwise."""
    return len(small) <= len(big) and all(a >= b for a, b in zip(big, small))


def union(lam: Partition, mu: Partition) -> Partition:
    n = max(len(lam), len(mu))
    return tuple(max(part(lam, i), part(mu, i)) for i in range(1, n + 1))


def intersection(lam: Partition, mu: Partition) -> Partition:
    n = min(len(lam), len(mu))
    return tuple(min(lam[i], mu[i]) for i in range(n))


def covers(lam: Partition, mu: Partition) -> Optional[Box]:
    """Return the box added to ``lam`` to get ``mu``, or None if ``mu`` is not
    ``lam`` plus a single box."""
    if len(mu) < len(lam) or len(mu) > len(lam) + 1 or sum(mu) != sum(lam) + 1:
        return None
    found = None
    for i in range(len(mu)):
        d = mu[i] - part(lam, i + 1)
        if d == 1 and found is None:
            found = Box(i + 1, mu[i])
        elif d != 0:
            return None
    return found


def add_eps(lam: Partition, i: int) -> Partition:
    """``lam`` with one added to its ``i``-th part."""
    if i < 1 or i > len(lam) + 1 or (i > 1 and lam[i - 1 - 1] <= part(lam, i)):
        raise ValueError(f"not a partition: {list(lam)} + e_{i}")
    if i == len(lam) + 1:
        return lam + (1,)
    return lam[: i - 1] + (lam[i - 1] + 1,) + lam[i:]


def sub_eps(lam: Partition, i: int) -> Partition:
    """``lam`` with one removed from its ``i``-th part."""
    if i < 1 or i > len(lam) or lam[i - 1] <= part(lam, i + 1):
        raise ValueError(f"not a partition: {list(lam)} - e_{i}")
    out = lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:]
    return out[:-1] if out[-1] == 0 else out


def addable_rows(lam: Partition) -> list[int]:
    """Rows ``i`` where ``add_eps(lam, i)`` is defined, top to bottom."""
    return [i for i in range(1, len(lam) + 2) if i == 1 or lam[i - 2] > part(lam, i)]


def removable_rows(lam: Partition) -> list[int]:
    return [i for i in range(1, len(lam) + 1) if lam[i - 1] > part(lam, i + 1)]


def has_even_columns(lam: Partition, max_col: Optional[int] = None) -> bool:
    """True iff every column of ``lam`` has even length (and at most
    ``max_col`` when given)."""
    cols = conjugate(lam)
    if any(c % 2 for c in cols):
        return False
    return max_col is None or all(c <= max_col for c in cols)


def cells(lam: Partition) -> Iterator[Box]:
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            yield Box(i, j)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    for lam in _partitions(n, n):
        if max_length is None or len(lam) <= max_length:
            yield lam


def to_string(lam: Partition) -> str:
    """Compact label: ``21`` for (2, 1), ``∅`` for the empty partition."""
    if not lam:
        return "∅"
    if lam[0] < 10:
        return "".join(map(str, lam))
    return ",".join(map(str, lam))
