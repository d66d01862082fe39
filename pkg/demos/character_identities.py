"""Check, as exact Laurent polynomials, that counting oscillating tableaux
by descent set gives the same symmetric functions as counting symplectic
Littlewood-Richardson tableaux."""

from updown.partitions import partitions
from updown.symfunc import (
    berele_identity,
    format_schur_expansion,
    frobenius_via_descents,
    frobenius_via_lr,
    invariant_character,
    schur_expansion,
)

for n in (1, 2):
    for r in range(1, 7):
        for size in range(r % 2, r + 1, 2):
            for mu in partitions(size, max_length=n):
                lhs = frobenius_via_descents(r, mu, n)
                assert lhs == frobenius_via_lr(r, mu, n)
                print(f"n={n} r={r} mu={list(mu)}: {format_schur_expansion(schur_expansion(lhs, r))}")

# the invariants of the tensor power: Schur functions of even-column shapes
print()
for r in (2, 4, 6):
    f = invariant_character(r, 1)
    assert f == frobenius_via_descents(r, (), 1)
    print(f"invariants, n=1, r={r}: {format_schur_expansion(schur_expansion(f, r))}")

print()
print("tensor power character identity for n<=2, r<=6:",
      all(berele_identity(r, n) for n in (1, 2) for r in range(7)))
