"""Exact Laurent polynomials over the integers and the character identities
for tensor powers of the defining representations of GL(n) and Sp(2n).

Frobenius characters of symmetric group modules are handled through their
expansion as polynomials in ``k`` variables; nothing here uses floating
point.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Optional, Sequence

from .oscillating import descents_oscillating, enumerate_oscillating
from .partitions import as_partition, has_even_columns, partitions
from .rs import descents_word
from .sundaram import coeff_a
from .tableaux import descents_partial, enumerate_king, enumerate_ssyt, enumerate_syt, is_yamanouchi

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """Integer Laurent polynomial in ``nvars`` variables, stored as a dict
    from exponent tuples to nonzero coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, int]] = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
                if not self.terms[e]:
                    del self.terms[e]

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> "LaurentPolynomial":
        """``x_i ** power`` with ``i`` 1-based."""
        e = [0] * nvars
        e[i - 1] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Exponent]) -> "LaurentPolynomial":
        return cls(nvars, Counter(tuple(m) for m in monomials))

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, int):
            return LaurentPolynomial(self.nvars, {(0,) * self.nvars: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, data: list[dict]) -> "LaurentPolynomial":
        return cls(nvars, {tuple(d["exponents"]): d["coefficient"] for d in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _content(t, nvars: int) -> Exponent:
    e = [0] * nvars
    for row in t:
        for x in row:
            e[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(e)


@lru_cache(maxsize=None)
def _schur(mu: tuple[int, ...], k: int) -> LaurentPolynomial:
    return LaurentPolynomial.from_monomials(k, (_content(t, k) for t in enumerate_ssyt(mu, k)))


def schur(mu: Sequence[int], k: int) -> LaurentPolynomial:
    """Schur polynomial ``s_mu(x_1, ..., x_k)`` as a sum over semistandard
    tableaux."""
    return _schur(as_partition(mu), k)


@lru_cache(maxsize=None)
def _fundamental(d: frozenset, r: int, k: int) -> LaurentPolynomial:
    monos = []
    for idx in combinations_with_replacement(range(k), r):
        if all(idx[j - 1] < idx[j] for j in d):
            e = [0] * k
            for i in idx:
                e[i] += 1
            monos.append(tuple(e))
    return LaurentPolynomial.from_monomials(k, monos)


def fundamental_qsym(d: Iterable[int], r: int, k: int) -> LaurentPolynomial:
    """Fundamental quasisymmetric polynomial ``F_D`` of degree ``r`` in ``k``
    variables."""
    d = frozenset(d)
    if any(not 1 <= j <= r - 1 for j in d):
        raise ValueError(f"descent set {sorted(d)} not inside 1..{r - 1}")
    return _fundamental(d, r, k)


def qsym_sum(descent_sets: Iterable[Iterable[int]], r: int, k: int) -> LaurentPolynomial:
    """``sum F_D`` over a family of descent sets, counted with multiplicity."""
    counts = Counter(frozenset(d) for d in descent_sets)
    out = LaurentPolynomial.zero(k)
    for d, c in sorted(counts.items(), key=lambda kv: sorted(kv[0])):
        out = out + fundamental_qsym(d, r, k) * c
    return out


def symplectic_character(mu: Sequence[int], n: int) -> LaurentPolynomial:
    """Character of the irreducible Sp(2n) module of highest weight ``mu``,
    summed over King tableaux; letter ``-i`` contributes ``1/x_i``."""
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{list(mu)} has more than {n} parts")
    return LaurentPolynomial.from_monomials(n, (_content(t, n) for t in enumerate_king(mu, n)))


def frobenius_via_lr(r: int, mu: Sequence[int], n: int, k: Optional[int] = None) -> LaurentPolynomial:
    k = r if k is None else k
    out = LaurentPolynomial.zero(k)
    for lam in partitions(r):
        a = coeff_a(lam, mu, n)
        if a:
            out = out + schur(lam, k) * a
    return out


def frobenius_via_descents(r: int, mu: Sequence[int], n: int, k: Optional[int] = None) -> LaurentPolynomial:
    k = r if k is None else k
    return qsym_sum((descents_oscillating(t) for t in enumerate_oscillating(r, n, mu)), r, k)


def invariant_character(r: int, n: int, k: Optional[int] = None) -> LaurentPolynomial:
    """Sum of ``s_beta`` over partitions of ``r`` whose columns all have even
    length at most ``2n``."""
    k = r if k is None else k
    out = LaurentPolynomial.zero(k)
    for beta in partitions(r):
        if has_even_columns(beta, 2 * n):
            out = out + schur(beta, k)
    return out


def reverse_lattice_words(mu: Sequence[int]) -> list[tuple[int, ...]]:
    """Words of weight ``mu`` whose reversal is a lattice word."""
    mu = as_partition(mu)
    out = []

    def rec(suffix: list[int], left: list[int]):
        # build from the right end so the reversal is checked prefix by prefix
        if not any(left):
            out.append(tuple(reversed(suffix)))
            return
        for i in range(len(left)):
            if left[i] and (i == 0 or mu[i - 1] - left[i - 1] > mu[i] - left[i]):
                left[i] -= 1
                suffix.append(i + 1)
                rec(suffix, left)
                suffix.pop()
                left[i] += 1

    rec([], list(mu))
    return sorted(out)


def schur_qsym_identity(mu: Sequence[int], k: int) -> bool:
    """``s_mu = sum over SYT Q of F_Des(Q)`` in ``k`` variables."""
    mu = as_partition(mu)
    rhs = qsym_sum((descents_partial(q) for q in enumerate_syt(mu)), sum(mu), k)
    return schur(mu, k) == rhs


def eq5_identity(mu: Sequence[int], k: int) -> bool:
    """Same as :func:`schur_qsym_identity`, summing ``F_Des(w)`` over reverse
    lattice words ``w`` of weight ``mu``."""
    mu = as_partition(mu)
    words = reverse_lattice_words(mu)
    assert all(is_yamanouchi(w[::-1]) for w in words)
    rhs = qsym_sum((descents_word(w) for w in words), sum(mu), k)
    return schur(mu, k) == rhs


def defining_character(n: int) -> LaurentPolynomial:
    """``x_1 + 1/x_1 + ... + x_n + 1/x_n``."""
    out = LaurentPolynomial.zero(n)
    for i in range(1, n + 1):
        out = out + LaurentPolynomial.variable(i, n) + LaurentPolynomial.variable(i, n, -1)
    return out


def berele_identity(r: int, n: int) -> bool:
    """Tensor power character versus ``sum_mu sp_mu * |Osc(r, n, mu)|``."""
    lhs = defining_character(n) ** r
    rhs = LaurentPolynomial.zero(n)
    for size in range(r % 2, r + 1, 2):
        for mu in partitions(size, max_length=n):
            count = sum(1 for _ in enumerate_oscillating(r, n, mu))
            if count:
                rhs = rhs + symplectic_character(mu, n) * count
    return lhs == rhs


def schur_expansion(f: LaurentPolynomial, degree: int) -> Optional[dict[tuple[int, ...], int]]:
    """Expand a homogeneous symmetric polynomial in Schur polynomials by
    peeling off leading terms; None when ``f`` is not such a polynomial."""
    k = f.nvars
    out: dict[tuple[int, ...], int] = {}
    rest = f
    while rest:
        lead, c = max(rest.terms.items())
        if any(a < 0 for a in lead) or sum(lead) != degree or any(
            a < b for a, b in zip(lead, lead[1:])
        ):
            return None
        lam = as_partition(lead)
        out[lam] = c
        rest = rest - schur(lam, k) * c
    return out


def format_schur_expansion(exp: Mapping[tuple[int, ...], int]) -> str:
    if not exp:
        return "0"
    parts = []
    for lam, c in sorted(exp.items(), reverse=True):
        name = "s_" + ("".join(map(str, lam)) if lam else "()")
        parts.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(parts)
