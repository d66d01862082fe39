from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import all_partitions, brute_fundamental, brute_king, brute_schur
from updown.symfunc import (
    LaurentPolynomial as LP,
    berele_identity,
    defining_character,
    eq5_identity,
    format_schur_expansion,
    frobenius_via_descents,
    frobenius_via_lr,
    fundamental_qsym,
    invariant_character,
    qsym_sum,
    reverse_lattice_words,
    schur,
    schur_expansion,
    schur_qsym_identity,
    symplectic_character,
)

x = LP.variable


def as_counter(p):
    return Counter(p.terms)


terms_st = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5), max_size=5
)


@given(terms_st, terms_st, terms_st)
def test_ring_axioms(a, b, c):
    a, b, c = LP(2, a), LP(2, b), LP(2, c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == LP.zero(2)
    assert a ** 2 == a * a
    assert 0 not in (a * b).terms.values()


def test_polynomial_basics():
    p = x(1, 2) * 3 - x(2, 2, -1) + 1
    assert p.coefficient((1, 0)) == 3 and p.coefficient((0, -1)) == -1
    assert LP.from_json(2, p.to_json()) == p
    assert repr(LP.zero(1)) == "0"
    assert repr(x(1, 1) + x(1, 1, -1)) == "x1 + x1^-1"
    assert hash(p) == hash(LP.from_json(2, p.to_json()))
    with pytest.raises(ValueError):
        x(1, 2) + x(1, 3)
    with pytest.raises(ValueError):
        x(1, 2) ** -1


def test_schur_examples():
    assert schur((1,), 2) == x(1, 2) + x(2, 2)
    assert schur((2, 1), 2) == x(1, 2) ** 2 * x(2, 2) + x(1, 2) * x(2, 2) ** 2
    assert schur((1, 1, 1), 2) == LP.zero(2)
    for n in range(5):
        for lam in all_partitions(n):
            assert as_counter(schur(lam, 3)) == brute_schur(lam, 3)


def test_fundamental_examples():
    assert fundamental_qsym(set(), 2, 2) == x(1, 2) ** 2 + x(1, 2) * x(2, 2) + x(2, 2) ** 2
    assert fundamental_qsym({1}, 2, 2) == x(1, 2) * x(2, 2)
    assert fundamental_qsym({2}, 3, 2) == x(1, 2) ** 2 * x(2, 2)
    with pytest.raises(ValueError):
        fundamental_qsym({3}, 3, 2)
    for r in range(1, 5):
        for mask in range(2 ** (r - 1)):
            d = {j + 1 for j in range(r - 1) if mask >> j & 1}
            assert as_counter(fundamental_qsym(d, r, 3)) == brute_fundamental(d, r, 3)
    assert qsym_sum([{1}, {1}], 2, 2) == x(1, 2) * x(2, 2) * 2


def test_symplectic_character_examples():
    assert symplectic_character((1,), 1) == x(1, 1) + x(1, 1, -1)
    assert symplectic_character((3,), 1) == x(1, 1, 3) + x(1, 1) + x(1, 1, -1) + x(1, 1, -3)
    assert symplectic_character((), 2) == LP.one(2)
    with pytest.raises(ValueError):
        symplectic_character((1, 1), 1)
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1)]:
        brute = Counter()
        for t in brute_king(lam, 2):
            e = [0, 0]
            for row in t:
                for a in row:
                    e[abs(a) - 1] += 1 if a > 0 else -1
            brute[tuple(e)] += 1
        assert as_counter(symplectic_character(lam, 2)) == brute


def test_frobenius_examples():
    s21 = schur((2, 1), 3)
    assert frobenius_via_lr(3, (1,), 1, 3) == s21
    assert frobenius_via_descents(3, (1,), 1, 3) == s21
    assert fundamental_qsym({2}, 3, 3) + fundamental_qsym({1}, 3, 3) == s21
    assert frobenius_via_lr(0, (), 1) == LP.one(0)
    assert frobenius_via_lr(2, (), 1, 2) == schur((1, 1), 2)
    assert frobenius_via_descents(1, (1,), 2, 3) == x(1, 3) + x(2, 3) + x(3, 3)


def test_invariant_character():
    assert invariant_character(2, 1, 2) == schur((1, 1), 2)
    assert invariant_character(3, 2, 3) == LP.zero(3)
    assert invariant_character(4, 1, 4) == schur((2, 2), 4)
    assert invariant_character(4, 1, 4) == frobenius_via_descents(4, (), 1, 4)


def test_identity_examples():
    assert schur_qsym_identity((2, 1), 2)
    assert eq5_identity((1,), 1) and eq5_identity((1,), 4)
    assert berele_identity(3, 1)
    lhs = defining_character(1) ** 3
    assert lhs == symplectic_character((3,), 1) + symplectic_character((1,), 1) * 2


def test_reverse_lattice_words():
    assert reverse_lattice_words((2, 1)) == [(1, 2, 1), (2, 1, 1)]
    assert len(reverse_lattice_words((2, 2))) == 2


@pytest.mark.parametrize("size", range(7))
def test_schur_qsym_all_shapes(size):
    for mu in all_partitions(size):
        for k in {2, 3, max(size, 1)}:
            assert schur_qsym_identity(mu, k)
        if size <= 5:
            assert eq5_identity(mu, max(size, 1))


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("r", range(7))
def test_character_identities(n, r):
    from updown.partitions import partitions

    for size in range(r % 2, r + 1, 2):
        for mu in partitions(size, max_length=n):
            assert frobenius_via_lr(r, mu, n) == frobenius_via_descents(r, mu, n)
    assert frobenius_via_descents(r, (), n) == invariant_character(r, n)
    assert berele_identity(r, n)


def test_schur_expansion():
    f = schur((2, 1), 3) * 2 + schur((3,), 3)
    exp = schur_expansion(f, 3)
    assert exp == {(2, 1): 2, (3,): 1}
    assert format_schur_expansion(exp) == "s_3 + 2*s_21"
    assert schur_expansion(fundamental_qsym({1}, 3, 3), 3) is None
    assert format_schur_expansion({}) == "0"
