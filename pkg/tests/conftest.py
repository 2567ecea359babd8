"""Shared fixtures and independent oracles.

Everything here recomputes reference values by routes the library does
not take: brute-force enumeration of words, dense elimination over the
raw word basis (adjacent duplicates included), the compatible-sequence
expansion of Schubert polynomials, and direct basis expansion of
products. Tests compare library output against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import pytest

from skewdd import fkcanon, polyring, symgroup


@pytest.fixture(scope="session")
def s3():
    return symgroup.all_permutations(3)


@pytest.fixture(scope="session")
def s4():
    return symgroup.all_permutations(4)


@lru_cache(maxsize=None)
def brute_reduced_words(w, n):
    """Every reduced word of w, by filtering all words of minimal length."""
    lw = symgroup.length(w)
    out = []
    for word in itertools.product(range(1, n), repeat=lw):
        if symgroup.from_word(word, n) == w:
            out.append(word)
    return tuple(sorted(out))


def is_subsequence(short, long):
    it = iter(long)
    return all(x in it for x in short)


def bruhat_oracle(v, w, n):
    """Subword criterion: some reduced word of v sits inside one of w."""
    target = symgroup.canonical_reduced_word(w)
    return any(is_subsequence(rv, target) for rv in brute_reduced_words(v, n))


def _raw_words(n, d):
    return list(itertools.product(fkcanon._letters(n), repeat=d))


def _eliminate(rows):
    """Dense Gaussian elimination over Fraction-valued dict rows."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                pivots[c] = {k: v / row[c] for k, v in row.items()}
                break
            factor = row[c]
            for k, v in pivots[c].items():
                row[k] = row.get(k, 0) - factor * v
            row = {k: v for k, v in row.items() if v}
    return pivots


@lru_cache(maxsize=None)
def raw_ideal_rank(n, d):
    """Rank of the degree-d ideal over ALL words, squares included."""
    if d < 2:
        return 0
    rows = []
    for inst in fkcanon.relation_instances(n):
        for k in range(d - 1):
            for u in _raw_words(n, k):
                for v in _raw_words(n, d - 2 - k):
                    rows.append(
                        {u + m + v: Fraction(c) for c, m in inst}
                    )
    return len(_eliminate(rows))


@lru_cache(maxsize=None)
def raw_dimension(n, d):
    """Graded dimension of the quotient, computed in the raw word basis."""
    return len(_raw_words(n, d)) - raw_ideal_rank(n, d)


def bjs_schubert(w, n):
    """Schubert polynomial by compatible sequences over all reduced words.

    For each reduced word a, sum x_{b_1}..x_{b_l} over weakly increasing
    b with b_k <= a_k, strictly increasing wherever a increases.
    """
    terms = {}
    for a in brute_reduced_words(w, n):
        stack = [((), 0)]
        while stack:
            b, k = stack.pop()
            if k == len(a):
                e = [0] * n
                for i in b:
                    e[i - 1] += 1
                key = tuple(e)
                terms[key] = terms.get(key, 0) + 1
                continue
            lo = 1 if not b else b[-1] + (1 if k and a[k - 1] < a[k] else 0)
            for i in range(lo, a[k] + 1):
                stack.append((b + (i,), k + 1))
    return terms


def _code(w):
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
        for i in range(len(w))
    )


def expand_schubert_product(u, v):
    """Coefficients of S_u * S_v over the Schubert basis, window 5.

    Peels the reverse-lex-largest monomial, which is the code monomial
    of a unique basis permutation; the final reconstruction assert makes
    the expansion self-certifying.
    """
    n = 5
    p = polyring.schubert(symgroup.embed(u, n), n) * polyring.schubert(
        symgroup.embed(v, n), n
    )
    d = symgroup.length(u) + symgroup.length(v)
    by_code = {
        _code(w): w
        for w in symgroup.all_permutations(n)
        if symgroup.length(w) == d
    }
    coeffs = {}
    rem = p
    while rem.terms:
        e = max(rem.terms, key=lambda t: t[::-1])
        w = by_code[e]
        c = rem.terms[e]
        coeffs[w] = c
        rem = rem - polyring.schubert(w, n) * c
    total = polyring.Poly.zero(n)
    for w, c in coeffs.items():
        total = total + polyring.schubert(w, n) * c
    assert total == p, "schubert expansion failed to reconstruct the product"
    return coeffs
