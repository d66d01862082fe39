"""Fomin growth diagrams and Roby's construction of Sundaram's bijection.

Cells are addressed ``(i, j)`` like matrix entries: row ``i`` counted from
the top, column ``j`` from the left, both 1-based.  Corners are
``corners[a][b]`` with ``a = 0..nrows`` from the top and ``b = 0..ncols``
from the left, so cell ``(i, j)`` has

* ``lam = corners[i][j-1]``   (lower left, nearest the origin)
* ``mu  = corners[i-1][j-1]`` (upper left)
* ``nu  = corners[i][j]``     (lower right)
* ``rho = corners[i-1][j]``   (upper right)

and partitions grow upwards and to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .oscillating import OscillatingTableau
from .partitions import (
    Partition,
    add_eps,
    conjugate,
    covers,
    intersection,
    sub_eps,
    to_string,
    union,
)
from .rs import Involution, rs_insert_word
from .tableaux import Tableau, place, reading_word, transpose

Cell = tuple[int, int]


def _rel(small: Partition, big: Partition) -> Optional[int]:
    """0 if equal, else the row of the box ``big`` adds to ``small``."""
    if small == big:
        return 0
    box = covers(small, big)
    if box is None:
        raise ValueError(f"{to_string(small)} is neither equal to nor covered by {to_string(big)}")
    return box.row


def forward_rule(lam: Partition, mu: Partition, nu: Partition, cross: bool = False) -> Partition:
    """Local rule computing the upper right corner of a cell."""
    i, j = _rel(lam, mu), _rel(lam, nu)
    if cross and (i or j):
        raise ValueError("a cell with a cross needs lam = mu = nu")
    if mu != nu:
        return union(mu, nu)
    if i:
        return add_eps(mu, i + 1)
    return add_eps(lam, 1) if cross else lam


def backward_rule(mu: Partition, nu: Partition, rho: Optional[Partition]) -> tuple[Partition, bool]:
    """Local rule computing the lower left corner and whether the cell holds
    a cross.  ``rho`` may be None when ``mu != nu``."""
    if mu != nu:
        if rho is not None:
            _rel(mu, rho), _rel(nu, rho)
        lam = intersection(mu, nu)
        _rel(lam, mu), _rel(lam, nu)
        return lam, False
    if rho is None:
        raise ValueError("rho is needed when mu = nu")
    i = _rel(mu, rho)
    if i == 0:
        return mu, False
    if i == 1:
        return mu, True
    return sub_eps(mu, i - 1), False


@dataclass
class GrowthDiagram:
    corners: list[list[Partition]]
    crosses: frozenset[Cell]

    @property
    def nrows(self) -> int:
        return len(self.corners) - 1

    @property
    def ncols(self) -> int:
        return len(self.corners[0]) - 1

    def cell(self, i: int, j: int) -> tuple[Partition, Partition, Partition, Partition]:
        """``(lam, mu, nu, rho)`` of cell ``(i, j)``."""
        c = self.corners
        return c[i][j - 1], c[i - 1][j - 1], c[i][j], c[i - 1][j]

    def upper_border(self) -> list[Partition]:
        return list(self.corners[0])

    def lower_border(self) -> list[Partition]:
        return list(self.corners[-1])

    def check(self) -> None:
        """Raise unless every cell obeys the local rules and crosses are
        at most one per row and column."""
        rows = [i for i, _ in self.crosses]
        cols = [j for _, j in self.crosses]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("more than one cross in a row or column")
        for i in range(1, self.nrows + 1):
            for j in range(1, self.ncols + 1):
                lam, mu, nu, rho = self.cell(i, j)
                if forward_rule(lam, mu, nu, (i, j) in self.crosses) != rho:
                    raise ValueError(f"cell {(i, j)} violates the local rules")

    def render(self) -> str:
        """ASCII picture: corner labels on their grid points, ``X`` in the
        middle of each cell holding a cross."""
        labels = [[to_string(p) for p in row] for row in self.corners]
        w = max(4, max(len(s) for row in labels for s in row) + 2)
        lines = []
        for a, row in enumerate(labels):
            lines.append("".join(s.ljust(w) for s in row).rstrip())
            if a < self.nrows:
                marks = [" "] * (w * self.ncols + 1)
                for i, j in self.crosses:
                    if i == a + 1:
                        marks[(j - 1) * w + w // 2] = "X"
                lines.append("".join(marks).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "corners": [[list(p) for p in row] for row in self.corners],
            "crosses": sorted([list(c) for c in self.crosses]),
        }


def chain_to_tableau(chain: Sequence[Partition]) -> Tableau:
    """Partial tableau of a chain where each step adds at most one box:
    ``k`` goes into the box added at step ``k``."""
    t: Tableau = ()
    for k in range(1, len(chain)):
        if chain[k] != chain[k - 1]:
            box = covers(chain[k - 1], chain[k])
            if box is None:
                raise ValueError(f"step {k} of the chain adds more than one box")
            t = place(t, box, k)
    return t


def tableau_to_chain(t: Tableau, m: int) -> list[Partition]:
    row_of = {x: i for i, row in enumerate(t, 1) for x in row}
    chain: list[Partition] = [()]
    for k in range(1, m + 1):
        chain.append(add_eps(chain[-1], row_of[k]) if k in row_of else chain[-1])
    return chain


def grow_forward(lower: Sequence[Partition], left: Sequence[Partition], crosses: set[Cell]) -> GrowthDiagram:
    """Fill a diagram from its lower border (left to right) and left border
    (top to bottom) with the forward rules."""
    ncols, nrows = len(lower) - 1, len(left) - 1
    if lower[0] != left[-1]:
        raise ValueError("borders disagree at the origin")
    c: list[list] = [[None] * (ncols + 1) for _ in range(nrows + 1)]
    c[nrows] = list(lower)
    for a in range(nrows + 1):
        c[a][0] = left[a]
    for i in range(nrows, 0, -1):
        for j in range(1, ncols + 1):
            c[i - 1][j] = forward_rule(c[i][j - 1], c[i - 1][j - 1], c[i][j], (i, j) in crosses)
    return GrowthDiagram(c, frozenset(crosses))


def grow_row(p: Tableau, x: int, m: Optional[int] = None) -> Tableau:
    """Upper border of a one-row diagram whose lower border is ``p`` and
    whose only cross sits in column ``x``."""
    if m is None:
        m = max([x] + [y for row in p for y in row])
    d = grow_forward(tableau_to_chain(p, m), [(), ()], {(1, x)})
    return chain_to_tableau(d.upper_border())


class RobyResult(NamedTuple):
    domain: set[int]
    iota: Involution
    partial: Tableau
    q: Tableau
    involution_tableau: Tableau
    diagram: GrowthDiagram
    second: GrowthDiagram

    @property
    def kappa(self) -> list[Partition]:
        return self.diagram.upper_border()

    @property
    def tau(self) -> list[Partition]:
        return self.diagram.lower_border()

    @property
    def nu(self) -> list[Partition]:
        return self.second.upper_border()


def roby_diagram(t: OscillatingTableau) -> GrowthDiagram:
    r = t.length
    c: list[list] = [[None] * (r + 1) for _ in range(r + 1)]
    for k, s in enumerate(t.shapes):
        c[k][k] = conjugate(s)
    crosses: set[Cell] = set()
    # below the diagonal, by distance from it
    for d in range(1, r + 1):
        for b in range(0, r + 1 - d):
            a = b + d
            if d == 1:
                lam, _ = backward_rule(c[b][b], c[a][a], None)
            else:
                lam, cross = backward_rule(c[a - 1][b], c[a][b + 1], c[a - 1][b + 1])
                if cross:
                    crosses.add((a, b + 1))
            c[a][b] = lam
    crosses |= {(j, i) for i, j in crosses}
    # above the diagonal
    for d in range(1, r + 1):
        for a in range(0, r + 1 - d):
            b = a + d
            c[a][b] = forward_rule(c[a + 1][b - 1], c[a][b - 1], c[a + 1][b], (a + 1, b) in crosses)
    return GrowthDiagram(c, frozenset(crosses))


def roby(t: OscillatingTableau) -> RobyResult:
    """Roby's growth diagram version of Sundaram's correspondence."""
    diagram = roby_diagram(t)
    r = t.length
    iota = dict(sorted((j, i) for i, j in diagram.crosses))
    partial = chain_to_tableau([conjugate(p) for p in diagram.lower_border()])
    q = chain_to_tableau([conjugate(p) for p in diagram.upper_border()])
    second = grow_forward([()] * (r + 1), [()] * (r + 1), set(diagram.crosses))
    inv_tab = chain_to_tableau([conjugate(p) for p in second.upper_border()])
    return RobyResult(set(iota), iota, partial, q, inv_tab, diagram, second)


def lemma_left_cross(d: GrowthDiagram, i: int, j: int) -> bool:
    """Check at cell ``(i, j)`` that ``lam == mu`` exactly when no cell
    strictly to its left in the same row holds a cross."""
    lam, mu, _, _ = d.cell(i, j)
    no_cross = not any((i, k) in d.crosses for k in range(1, j))
    return (lam == mu) == no_cross


def stacked_diagram(t: OscillatingTableau, seed: Optional[Sequence[int]] = None) -> GrowthDiagram:
    """Roby's diagram stacked on top of the growth diagram of ``seed``.

    ``seed`` lists column indices, bottom row first; its insertion tableau
    must be the transpose of the partial tableau of ``t``.  Defaults to the
    reading word of that transpose.
    """
    top = roby_diagram(t)
    r = t.length
    target = transpose(chain_to_tableau([conjugate(p) for p in top.lower_border()]))
    if seed is None:
        seed = reading_word(target)
    seed = list(seed)
    if rs_insert_word(seed)[0] != target or sorted(seed) != sorted(x for row in target for x in row):
        raise ValueError("seed's insertion tableau is not the transposed partial tableau")
    m = len(seed)
    bottom = grow_forward([()] * (r + 1), [()] * (m + 1), {(m - k, x) for k, x in enumerate(seed)})
    if bottom.upper_border() != top.lower_border():
        raise ValueError("seed diagram does not match the oscillating diagram")
    corners = [list(row) for row in top.corners] + [list(row) for row in bottom.corners[1:]]
    crosses = set(top.crosses) | {(i + r, j) for i, j in bottom.crosses}
    return GrowthDiagram(corners, frozenset(crosses))


def descent_visualization(t: OscillatingTableau, seed: Optional[Sequence[int]] = None) -> set[int]:
    """Descents read off the stacked diagram: ``k`` is a descent when the
    cross in column ``k`` lies lower than the cross in column ``k + 1``."""
    d = stacked_diagram(t, seed)
    row_of = {j: i for i, j in d.crosses}
    return {k for k in range(1, t.length) if row_of[k] > row_of[k + 1]}
