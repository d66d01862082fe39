"""Oscillating (up-down) tableaux and highest weight words of the
symplectic crystal of the defining representation.

A crystal word is a tuple of nonzero ints: ``+i`` stands for the vertex
``i`` and ``-i`` for ``-i``.  The crystal is the chain
``1 -> 2 -> ... -> n -> -n -> ... -> -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .partitions import (
    Box,
    Partition,
    add_eps,
    addable_rows,
    as_partition,
    conjugate,
    covers,
    intersection,
    removable_rows,
    sub_eps,
    to_string,
)
from .tableaux import Tableau, position


class Step(NamedTuple):
    expansion: bool
    box: Box


@dataclass(frozen=True)
class OscillatingTableau:
    """Sequence of partitions starting at ``()`` where consecutive shapes
    differ by exactly one box."""

    shapes: tuple[Partition, ...]

    def __post_init__(self):
        if not self.shapes or self.shapes[0] != ():
            raise ValueError("an oscillating tableau starts with the empty partition")
        for k, (a, b) in enumerate(zip(self.shapes, self.shapes[1:]), 1):
            if covers(a, b) is None and covers(b, a) is None:
                raise ValueError(
                    f"step {k}: {to_string(a)} -> {to_string(b)} does not change one box"
                )

    @classmethod
    def from_shapes(cls, shapes: Iterable[Iterable[int]]) -> "OscillatingTableau":
        shapes = [as_partition(s) for s in shapes]
        if not shapes or shapes[0] != ():
            shapes = [()] + shapes
        return cls(tuple(shapes))

    @classmethod
    def from_syt(cls, t: Tableau) -> "OscillatingTableau":
        """The all-expansion tableau in which ``k`` is added at step ``k``."""
        r = sum(len(row) for row in t)
        shapes: list[Partition] = [()]
        for k in range(1, r + 1):
            shapes.append(add_eps(shapes[-1], position(t, k).row))
        return cls(tuple(shapes))

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    def steps(self) -> list[Step]:
        out = []
        for a, b in zip(self.shapes, self.shapes[1:]):
            box = covers(a, b)
            out.append(Step(True, box) if box is not None else Step(False, covers(b, a)))
        return out

    def conjugate(self) -> "OscillatingTableau":
        return OscillatingTableau(tuple(conjugate(s) for s in self.shapes))

    def to_json(self) -> list[list[int]]:
        return [list(s) for s in self.shapes]

    def __str__(self) -> str:
        return "(" + ",".join(to_string(s) for s in self.shapes) + ")"


# -- words ------------------------------------------------------------------

def weight(word: Sequence[int], n: Optional[int] = None) -> tuple[int, ...]:
    """Number of letters ``i`` minus number of letters ``-i``, for ``i = 1..n``."""
    if n is None:
        n = max((abs(a) for a in word), default=0)
    wt = [0] * n
    for a in word:
        wt[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(wt)


def is_highest_weight(word: Sequence[int]) -> bool:
    try:
        word_to_tableau(word)
    except ValueError:
        return False
    return True


def word_to_tableau(word: Sequence[int]) -> OscillatingTableau:
    """The sequence of weights of the prefixes of a highest weight word."""
    shapes: list[Partition] = [()]
    for k, a in enumerate(word, 1):
        if a == 0:
            raise ValueError("letters must be nonzero")
        try:
            nxt = add_eps(shapes[-1], a) if a > 0 else sub_eps(shapes[-1], -a)
        except ValueError:
            raise ValueError(
                f"not a highest weight word: prefix {list(word[:k])} has weight "
                f"that is not a partition"
            ) from None
        shapes.append(nxt)
    return OscillatingTableau(tuple(shapes))


def tableau_to_word(t: OscillatingTableau) -> tuple[int, ...]:
    return tuple(s.box.row if s.expansion else -s.box.row for s in t.steps())


def chain_rank(letter: int, n: int) -> int:
    # position in 1 -> 2 -> ... -> n -> -n -> ... -> -1
    return letter if letter > 0 else 2 * n + 1 + letter


def descents_crystal_word(word: Sequence[int], n: Optional[int] = None) -> set[int]:
    """Positions ``k`` with a nontrivial directed path from ``w_k`` to
    ``w_{k+1}`` in the symplectic crystal chain."""
    if n is None:
        n = max((abs(a) for a in word), default=0)
    ranks = [chain_rank(a, n) for a in word]
    return {k for k in range(1, len(word)) if ranks[k - 1] < ranks[k]}


# -- tableau side -----------------------------------------------------------

def is_n_symplectic(t: OscillatingTableau, n: int) -> bool:
    return all(len(s) <= n for s in t.shapes)


def descents_oscillating(t: OscillatingTableau) -> set[int]:
    """Descent set of an oscillating tableau.

    ``k`` is a descent when step ``k`` expands and step ``k+1`` contracts,
    when both expand and ``b_k`` lies strictly above ``b_{k+1}``, or when
    both contract and ``b_k`` lies strictly below ``b_{k+1}``.
    """
    steps = t.steps()
    out = set()
    for k in range(1, len(steps)):
        s, u = steps[k - 1], steps[k]
        if s.expansion and not u.expansion:
            out.add(k)
        elif s.expansion and u.expansion and s.box.row < u.box.row:
            out.add(k)
        elif not s.expansion and not u.expansion and s.box.row > u.box.row:
            out.add(k)
    return out


def _distance(a: Partition, b: Partition) -> int:
    return sum(a) + sum(b) - 2 * sum(intersection(a, b))


def enumerate_oscillating(r: int, n: int, mu: Sequence[int] = ()) -> Iterator[OscillatingTableau]:
    """All ``n``-symplectic oscillating tableaux of length ``r`` and final
    shape ``mu``.

    The order is lexicographic in the words, with letters ordered
    ``1 < 2 < ... < n < -1 < ... < -n``.
    """
    mu = as_partition(mu)
    if len(mu) > n or r < sum(mu) or (r - sum(mu)) % 2:
        return
    shapes: list[Partition] = [()]

    def rec(k: int) -> Iterator[OscillatingTableau]:
        cur = shapes[-1]
        if k == r:
            if cur == mu:
                yield OscillatingTableau(tuple(shapes))
            return
        options = [add_eps(cur, i) for i in addable_rows(cur) if i <= n]
        options += [sub_eps(cur, i) for i in removable_rows(cur)]
        for nxt in options:
            if _distance(nxt, mu) <= r - k - 1:
                shapes.append(nxt)
                yield from rec(k + 1)
                shapes.pop()

    yield from rec(0)
