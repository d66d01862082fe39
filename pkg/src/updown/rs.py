"""Robinson-Schensted insertion on words, partial permutations and
fixed-point-free involutions.

Partial permutations and involutions are dicts ``{k: pi(k)}``; the
recording tableau of a partial permutation carries the domain labels
themselves rather than ``1..m``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .tableaux import Tableau, row_bump, place, position, row_delete, shape

Involution = dict[int, int]


def rs_insert_word(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insert ``word`` letter by letter; returns ``(P, Q)`` with ``Q``
    recording positions ``1..len(word)``."""
    return rs_partial(dict(enumerate(word, 1)))


def rs_partial(perm: Mapping[int, int]) -> tuple[Tableau, Tableau]:
    """RS for a partial map: values are inserted in increasing order of the
    domain, and each new box of ``Q`` receives the domain label."""
    p: Tableau = ()
    q: Tableau = ()
    for a in sorted(perm):
        p, box = row_bump(p, perm[a])
        q = place(q, box, a)
    return p, q


def rs_inverse(p: Tableau, q: Tableau) -> dict[int, int]:
    """Recover the partial permutation from a pair of distinct-entry
    tableaux of equal shape."""
    if shape(p) != shape(q):
        raise ValueError("P and Q must have the same shape")
    out = {}
    labels = sorted((x for row in q for x in row), reverse=True)
    for a in labels:
        box = position(q, a)
        x, p = row_delete(p, box)
        q = tuple(tuple(y for y in row if y != a) for row in q)
        q = tuple(row for row in q if row)
        out[a] = x
    return dict(sorted(out.items()))


def involution_from_pairs(pairs: Iterable[Sequence[int]]) -> Involution:
    iota: Involution = {}
    for a, b in pairs:
        if a == b or a in iota or b in iota:
            raise ValueError(f"bad pair ({a}, {b})")
        iota[a], iota[b] = b, a
    return dict(sorted(iota.items()))


def involution_pairs(iota: Mapping[int, int]) -> list[tuple[int, int]]:
    return sorted((a, b) for a, b in iota.items() if a < b)


def is_fixed_point_free_involution(perm: Mapping[int, int]) -> bool:
    return all(b != a and perm.get(b) == a for a, b in perm.items())


def rs_involution(iota: Mapping[int, int]) -> Tableau:
    """The common tableau ``I = P = Q`` of a fixed-point-free involution."""
    if not is_fixed_point_free_involution(iota):
        raise ValueError("not a fixed-point-free involution")
    p, q = rs_partial(iota)
    assert p == q
    return p


def involution_from_tableau(tab: Tableau) -> Involution:
    """Inverse of :func:`rs_involution`."""
    iota = rs_inverse(tab, tab)
    if not is_fixed_point_free_involution(iota):
        raise ValueError("tableau does not come from a fixed-point-free involution")
    return iota


def descents_involution(perm: Mapping[int, int]) -> set[int]:
    return {k for k in perm if k + 1 in perm and perm[k] > perm[k + 1]}


def descents_word(word: Sequence[int]) -> set[int]:
    return {k for k in range(1, len(word)) if word[k - 1] > word[k]}


def descents_between(a: Iterable[int], b: Iterable[int]) -> set[int]:
    """``{k : k in a and k + 1 in b}``."""
    b = set(b)
    return {k for k in a if k + 1 in b}
