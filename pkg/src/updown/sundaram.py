"""Sundaram's bijection between n-symplectic oscillating tableaux and pairs
``(Q, S)`` of a standard tableau and an n-symplectic Littlewood-Richardson
tableau, factored as ``sun2 . RS . sun1``.
"""

from __future__ import annotations

from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

from .oscillating import OscillatingTableau, is_n_symplectic
from .partitions import Box, as_partition, contains, has_even_columns, partitions
from .rs import (
    Involution,
    descents_between,
    descents_involution,
    involution_from_tableau,
    involution_pairs,
    is_fixed_point_free_involution,
    rs_involution,
)
from .tableaux import (
    SkewTableau,
    Tableau,
    column_delete,
    column_insert,
    descents_partial,
    entries,
    is_partial_tableau,
    is_yamanouchi,
    place,
    remove_entry,
    reverse_reading_word,
    shape,
)


class Sun1Step(NamedTuple):
    k: int
    expansion: bool
    box: Box
    pair: Optional[tuple[int, int]]
    tableau: Tableau


def sun1_trace(t: OscillatingTableau) -> list[Sun1Step]:
    """Run the first bijection, recording ``(k, step kind, b_k, new pair,
    T_k)`` at each step."""
    cur: Tableau = ()
    out = []
    for k, step in enumerate(t.steps(), 1):
        if step.expansion:
            cur = place(cur, step.box, k)
            out.append(Sun1Step(k, True, step.box, None, cur))
        else:
            x, cur = column_delete(cur, step.box)
            out.append(Sun1Step(k, False, step.box, (x, k), cur))
    return out


def sun1(t: OscillatingTableau) -> tuple[Involution, Tableau]:
    """Oscillating tableau -> (fixed-point-free involution, partial tableau)."""
    trace = sun1_trace(t)
    pairs = [s.pair for s in trace if s.pair is not None]
    iota: Involution = {}
    for x, k in pairs:
        iota[x], iota[k] = k, x
    return dict(sorted(iota.items())), (trace[-1].tableau if trace else ())


def sun1_inverse(iota: Mapping[int, int], t: Tableau, r: int) -> OscillatingTableau:
    """Undo :func:`sun1`, walking the steps from ``r`` down to 1."""
    if not is_fixed_point_free_involution(iota) or not is_partial_tableau(t):
        raise ValueError("need a fixed-point-free involution and a partial tableau")
    support = sorted(list(iota) + entries(t))
    if support != list(range(1, r + 1)):
        raise ValueError(f"entries of the involution and tableau must partition 1..{r}")
    cur = t
    shapes = [shape(cur)]
    for k in range(r, 0, -1):
        if k in entries(cur):
            cur = remove_entry(cur, k)
        elif iota.get(k, k) < k:
            cur, _ = column_insert(cur, iota[k])
        else:
            raise ValueError(f"{k} is neither in the tableau nor closes a pair")
        shapes.append(shape(cur))
    if cur:
        raise ValueError("inconsistent involution/tableau pair")
    return OscillatingTableau(tuple(reversed(shapes)))


def sun2(inv_tab: Tableau, t: Tableau) -> tuple[Tableau, SkewTableau]:
    """Column-insert the reverse reading word of ``inv_tab`` into ``t``,
    recording in each new box the row of ``inv_tab`` the letter came from."""
    if set(entries(inv_tab)) & set(entries(t)):
        raise ValueError("the two tableaux share entries")
    inner = shape(t)
    row_of = {x: i for i, row in enumerate(inv_tab, 1) for x in row}
    labels: dict[Box, int] = {}
    cur = t
    for x in reverse_reading_word(inv_tab):
        cur, box = column_insert(cur, x)
        labels[box] = row_of[x]
    rows = []
    for i, length in enumerate(shape(cur), 1):
        rows.append(tuple(labels.get(Box(i, j)) for j in range(1, length + 1)))
    return cur, SkewTableau(inner, tuple(rows))


def sun2_inverse(q: Tableau, s: SkewTableau) -> tuple[Tableau, Tableau]:
    """Recover ``(I, T)`` from ``(Q, S)`` by un-inserting the boxes of ``S``
    from the last recorded insertion backwards.

    Letters with a larger label were inserted later, and among equal labels
    the box further right came later.
    """
    if shape(q) != s.outer or not s.is_valid():
        raise ValueError("S must be a skew semistandard tableau of the shape of Q")
    order = sorted(
        ((x, j, i) for i, row in enumerate(s.rows, 1) for j, x in enumerate(row, 1) if x is not None),
        reverse=True,
    )
    cur = q
    rows: dict[int, list[int]] = {}
    for label, col, row in order:
        x, cur = column_delete(cur, Box(row, col))
        rows.setdefault(label, []).append(x)
    inv_tab = tuple(tuple(sorted(rows[i])) for i in sorted(rows))
    if sorted(rows) != list(range(1, len(rows) + 1)) or not is_partial_tableau(inv_tab):
        raise ValueError("S does not come from a partial tableau")
    return inv_tab, cur


class SunResult(NamedTuple):
    iota: Involution
    partial: Tableau
    involution_tableau: Tableau
    q: Tableau
    s: SkewTableau


def sun_details(t: OscillatingTableau) -> SunResult:
    iota, partial = sun1(t)
    inv_tab = rs_involution(iota)
    q, s = sun2(inv_tab, partial)
    return SunResult(iota, partial, inv_tab, q, s)


def sun(t: OscillatingTableau, n: Optional[int] = None) -> tuple[Tableau, SkewTableau]:
    """Sundaram's map ``T -> (Q, S)``.

    When ``n`` is given the input must be ``n``-symplectic.
    """
    if n is not None and not is_n_symplectic(t, n):
        raise ValueError(f"{t} is not {n}-symplectic")
    res = sun_details(t)
    return res.q, res.s


def sun_inverse(q: Tableau, s: SkewTableau, n: int, mu: Optional[Sequence[int]] = None) -> OscillatingTableau:
    if mu is not None and as_partition(mu) != s.inner:
        raise ValueError("inner shape of S differs from mu")
    if not is_n_symplectic_lr(s, n):
        raise ValueError(f"S is not a {n}-symplectic Littlewood-Richardson tableau")
    inv_tab, partial = sun2_inverse(q, s)
    iota = involution_from_tableau(inv_tab)
    t = sun1_inverse(iota, partial, sum(shape(q)))
    if not is_n_symplectic(t, n):
        raise ValueError(f"preimage {t} is not {n}-symplectic")
    return t


# -- symplectic Littlewood-Richardson tableaux ------------------------------

def _row_bound_ok(row: int, entry: int, n: int) -> bool:
    # row n+i+1 needs entries >= 2i+2
    return row <= n or entry >= 2 * (row - n)


def is_n_symplectic_lr(s: SkewTableau, n: int) -> bool:
    if not s.is_valid():
        return False
    word = reverse_reading_word(s)
    if not is_yamanouchi(word):
        return False
    if not has_even_columns(s.weight()):
        return False
    return all(
        _row_bound_ok(i, x, n) for i, row in enumerate(s.skew_rows(), 1) for x in row
    )


def enumerate_lr_tableaux(
    lam: Sequence[int], mu: Sequence[int], beta: Sequence[int], n: Optional[int] = None
) -> Iterator[SkewTableau]:
    """Skew semistandard tableaux of shape ``lam/mu`` and weight ``beta``
    whose reverse reading word is a lattice word.

    With ``n`` given, the symplectic row bound is imposed as well; ``beta``
    is not required to have even columns here.
    """
    lam, mu, beta = as_partition(lam), as_partition(mu), as_partition(beta)
    if not contains(lam, mu) or sum(lam) - sum(mu) != sum(beta):
        return
    # fill in reverse reading order: rows top to bottom, right to left
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i] - 1, (mu[i] if i < len(mu) else 0) - 1, -1)]
    grid: list[list[Optional[int]]] = [[None] * row for row in lam]
    counts = [0] * (len(beta) + 2)

    def rec(pos: int) -> Iterator[SkewTableau]:
        if pos == len(cells):
            yield SkewTableau(mu, tuple(tuple(r) for r in grid))
            return
        i, j = cells[pos]
        hi = len(beta)
        if j + 1 < lam[i]:
            hi = min(hi, grid[i][j + 1])
        lo = 1
        if i and j < lam[i - 1] and grid[i - 1][j] is not None:
            lo = grid[i - 1][j] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1] or (v > 1 and counts[v] >= counts[v - 1]):
                continue
            if n is not None and not _row_bound_ok(i + 1, v, n):
                continue
            grid[i][j] = v
            counts[v] += 1
            yield from rec(pos + 1)
            counts[v] -= 1
            grid[i][j] = None

    yield from rec(0)


def count_c(lam: Sequence[int], mu: Sequence[int], beta: Sequence[int], n: int) -> int:
    """Number of ``n``-symplectic LR tableaux of shape ``lam/mu`` and weight
    ``beta`` (zero unless ``beta`` has even columns)."""
    if not has_even_columns(as_partition(beta)):
        return 0
    return sum(1 for _ in enumerate_lr_tableaux(lam, mu, beta, n))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], beta: Sequence[int]) -> int:
    """Ordinary Littlewood-Richardson coefficient by tableau counting."""
    return sum(1 for _ in enumerate_lr_tableaux(lam, mu, beta))


def coeff_a(lam: Sequence[int], mu: Sequence[int], n: int) -> int:
    """Multiplicity of the Specht module of ``lam`` in the isotypic component
    of weight ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    d = sum(lam) - sum(mu)
    if d < 0:
        return 0
    return sum(count_c(lam, mu, beta, n) for beta in partitions(d) if has_even_columns(beta))


def sun1_descents(iota: Mapping[int, int], t: Tableau) -> set[int]:
    """``Des(iota) | Des(T) | Des(T / iota)`` for a pair from :func:`sun1`."""
    return descents_involution(iota) | descents_partial(t) | descents_between(entries(t), iota)


__all__ = [
    "Sun1Step",
    "SunResult",
    "coeff_a",
    "count_c",
    "enumerate_lr_tableaux",
    "involution_pairs",
    "is_n_symplectic_lr",
    "lr_coefficient",
    "sun",
    "sun1",
    "sun1_descents",
    "sun1_inverse",
    "sun1_trace",
    "sun2",
    "sun2_inverse",
    "sun_details",
    "sun_inverse",
]
