from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from pfafflab.algebra import AlgebraError, so
from pfafflab.pfaffian import (capelli, check_commutator_lemma, pf_F, pf_generic, pf_hat, hat_set, perm_sign,
                               split_sign, star)
from pfafflab.report import VerificationReport
from pfafflab.reps import standard_module
from pfafflab.suites import O5_HAT_EXPANSIONS


def classical_pf(a):
    """Expansion along the first row."""
    k = len(a)
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(1, k):
        rest = [r for r in range(k) if r not in (0, j)]
        sub = [[a[r][c] for c in rest] for r in rest]
        total += (-1) ** (j + 1) * a[0][j] * classical_pf(sub)
    return total


def skew(k, values):
    a = [[Fraction(0)] * k for _ in range(k)]
    it = iter(values)
    for i in range(k):
        for j in range(i + 1, k):
            a[i][j] = Fraction(next(it))
            a[j][i] = -a[i][j]
    return a


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 6]).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(-5, 5), min_size=k * (k - 1) // 2,
                                             max_size=k * (k - 1) // 2))))
def test_pf_generic_matches_row_expansion(data):
    k, vals = data
    a = skew(k, vals)
    assert pf_generic(k, lambda i, j: a[i][j]) == classical_pf(a)


def test_pf_generic_small_cases():
    a = skew(4, [1, 2, 3, 4, 5, 6])
    # a12 a34 - a13 a24 + a14 a23
    assert pf_generic(4, lambda i, j: a[i][j]) == 1 * 6 - 2 * 5 + 3 * 4
    assert pf_generic(2, lambda i, j: a[i][j]) == 1
    with pytest.raises(AlgebraError):
        pf_generic(3, lambda i, j: 0)
    with pytest.raises(ValueError):
        pf_generic(2, lambda i, j: 1, check_skew=True)


def test_pf_small_subsets():
    A = so(5)
    assert pf_F(A, (0, 1)) == A.F(0, 1)
    assert pf_F(A, (-1, 1)) == A.F(1, 1)
    assert str(pf_F(A, (0, 1))) == "-1 * F[-1,0]"
    with pytest.raises(AlgebraError):
        pf_F(A, (0, 1, 2))


def test_pf_hat_o5_as_star_products():
    A = so(5)
    for h, terms in O5_HAT_EXPANSIONS.items():
        x = A.zero()
        for a, b, s in terms:
            x = x + star(A.F(*a), A.F(*b)) * s
        assert pf_hat(A, h) == x


def test_pf_hat_sets():
    assert hat_set(so(5), 2) == (-2, -1, 0, 1)
    assert hat_set(so(5), -2) == (-1, 0, 1, 2)
    with pytest.raises(AlgebraError):
        pf_hat(so(6), 1)


def test_pf_hat_n7_degree():
    A = so(7)
    x = pf_hat(A, 3)
    assert x.degree() == 3
    assert factorial(6) // (2 ** 3 * factorial(3)) == 15


def test_signs():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert split_sign((1, 2, 3, 4), (1, 3), (2, 4)) == -1
    assert split_sign((1, 2, 3, 4), (1, 2), (3, 4)) == 1


def test_capelli_central_and_scalar():
    A = so(5)
    C = capelli(A, 2)
    for x in A.generators():
        assert not C.bracket(x)
    for m in C.terms:
        assert A.ad_weight(m) == (0, 0)
    mat = standard_module(5).matrix(C)
    assert mat.is_diagonal() and len(set(mat.diagonal())) == 1
    with pytest.raises(AlgebraError):
        capelli(A, 3)


def test_commutator_lemma_on_o5_four_sets():
    A = so(5)
    rep = VerificationReport("t")
    for I in combinations(A.indices, 4):
        for j1 in A.indices:
            for j2 in A.indices:
                if j1 != j2:
                    check_commutator_lemma(A, I, j1, j2, rep)
    assert rep.passed and len(rep.records) == 5 * 20


def test_pf_depends_only_on_the_set():
    A = so(5)
    for I in combinations(A.indices, 2):
        i, j = I
        assert pf_F(A, I) == A.F(-i, j)
