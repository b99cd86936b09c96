from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from pfafflab.algebra import (AlgebraError, ad_weight, bracket_generators, canonicalize_generator, coproduct,
                              index_set, multiply, so, TensorUeaElement)


def test_index_sets():
    assert index_set(5) == (-2, -1, 0, 1, 2)
    assert index_set(4) == (-2, -1, 1, 2)
    for N in range(3, 10):
        assert len(index_set(N)) == N
        assert so(N).n == N // 2
    with pytest.raises(AlgebraError):
        index_set(2)


def test_canonicalize_examples():
    assert canonicalize_generator(5, 1, 2) == (-1, (-2, -1))
    assert canonicalize_generator(5, 1, -1) == (0, None)
    assert canonicalize_generator(5, -2, -1) == (1, (-2, -1))
    with pytest.raises(AlgebraError):
        canonicalize_generator(5, 3, 0)


def test_generator_count_and_kinds():
    for N in (5, 6, 7):
        A = so(N)
        assert len(A.gens) == N * (N - 1) // 2
        for (i, j), kind in zip(A.gens, A.kinds):
            assert (i, j) <= (-j, -i)
            if i == j:
                assert kind == "cartan"
            elif i < j:
                assert kind == "positive-root"
            else:
                assert kind == "negative-root"


def test_bracket_examples():
    A = so(5)
    assert bracket_generators(5, (1, 2), (2, 1)) == A.F(1, 1) - A.F(2, 2)
    assert not bracket_generators(9, (1, 2), (3, 4))
    # the structure-constant formula, term by term
    x = bracket_generators(5, (0, -1), (1, 0))
    i, j, k, l = 0, -1, 1, 0
    d = lambda a, b: int(a == b)
    rhs = (A.F(i, l) * d(k, j) - A.F(k, j) * d(i, l) - A.F(-j, l) * d(-k, i) + A.F(k, -i) * d(-l, j))
    assert x == rhs


def test_bracket_formula_exhaustive_n5():
    A = so(5)
    d = lambda a, b: int(a == b)
    for i in A.indices:
        for j in A.indices:
            for k in A.indices:
                for l in A.indices:
                    lhs = A.F(i, j).bracket(A.F(k, l))
                    rhs = (A.F(i, l) * d(k, j) - A.F(k, j) * d(i, l) - A.F(-j, l) * d(-k, i)
                           + A.F(k, -i) * d(-l, j))
                    assert lhs == rhs, (i, j, k, l)


def test_multiply_examples():
    A = so(5)
    x = multiply(A.F(0, -1), A.F(-1, 0))
    assert x == A.F(-1, 0) * A.F(0, -1) + A.F(0, -1).bracket(A.F(-1, 0))
    assert multiply(A.one(), x) == x
    lhs = (A.F(-2, -1) * A.F(-1, 0)) * A.F(0, 1)
    rhs = A.F(-2, -1) * (A.F(-1, 0) * A.F(0, 1))
    assert lhs == rhs


def test_pbw_order_of_terms():
    A = so(5)
    block = {"negative-root": 0, "cartan": 1, "positive-root": 2}
    x = A.F(2, -1) * A.F(-2, 1) * A.F(1, 1) * A.F(-1, 2)
    for m in x.terms:
        assert list(m) == sorted(m)
        blocks = [block[A.kinds[g]] for g in m]
        assert blocks == sorted(blocks)


def test_coproduct_examples():
    A = so(5)
    g = A.F(-2, -1)
    assert coproduct(g) == TensorUeaElement.outer(g, A.one()) + TensorUeaElement.outer(A.one(), g)
    assert coproduct(A.one()) == TensorUeaElement.outer(A.one(), A.one())


def test_ad_weight_examples():
    A = so(5)
    assert ad_weight(5, [(-2, -1)]) == (1, -1)
    assert ad_weight(5, [(1, 1)]) == (0, 0)
    assert A.ad_weight((A.gen_id[-2, -1],)) == (1, -1)


def test_text_serialization():
    A = so(5)
    x = A.F(1, 2) * A.F(2, 1) - A.F(2, 1) * A.F(1, 2)
    assert str(x) == "1 * F[-2,-2] + -1 * F[-1,-1]"
    assert str(A.zero()) == "0"


def test_jacobi_exhaustive_n5():
    A = so(5)
    gens = A.generators()
    for x, y, z in combinations(gens, 3):
        assert not (x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y)))


def _element(A, data):
    gens = A.generators()
    x = A.zero()
    for coef, word in data:
        m = A.scalar(coef)
        for g in word:
            m = m * gens[g % len(gens)]
        x = x + m
    return x


terms = st.lists(st.tuples(st.integers(-3, 3).filter(bool), st.lists(st.integers(0, 40), max_size=2)),
                 min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(terms, terms, terms)
def test_associativity_property(a, b, c):
    A = so(5)
    x, y, z = _element(A, a), _element(A, b), _element(A, c)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=30, deadline=None)
@given(terms, terms)
def test_coproduct_is_multiplicative(a, b):
    A = so(5)
    x, y = _element(A, a), _element(A, b)
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 9), st.integers(0, 9))
def test_straightening_preserves_weight(a, b):
    A = so(5)
    target = tuple(p + q for p, q in zip(A.root(a), A.root(b)))
    for m in A.mono_mul((b,), (a,)):
        assert A.ad_weight(m) == target


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 20), st.integers(0, 20))
def test_antisymmetry_n7(a, b):
    A = so(7)
    x, y = A.generators()[a], A.generators()[b]
    assert x.bracket(y) == -y.bracket(x)
    assert x.bracket(y).degree() <= 1


def test_rank_mismatch():
    with pytest.raises(AlgebraError):
        so(5).F(1, 2) + so(7).F(1, 2)


def test_scalars_and_equality():
    A = so(5)
    assert A.scalar(Fraction(1, 2)) * 2 == 1
    assert A.F(1, 2) == -A.F(-2, -1)
