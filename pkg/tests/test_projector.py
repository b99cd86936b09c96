from fractions import Fraction

from hypothesis import given, settings, strategies as st

from pfafflab.algebra import so
from pfafflab.projector import ExtremalProjector, SingularWeightError, is_normal_ordering, normal_ordering
from pfafflab.reps import tensor_module


def test_normal_ordering_o5_and_o7():
    for N in (5, 7, 9):
        A = so(N)
        roots = [A.root(g) for g in range(len(A.gens)) if A.kinds[g] == "positive-root"]
        order = normal_ordering(roots)
        assert sorted(order) == sorted(roots)
        assert is_normal_ordering(order)


def test_projector_fixes_highest_vectors(o5_modules):
    for M in o5_modules.values():
        P = ExtremalProjector(M)
        for H in M.highest_spaces().values():
            for v in H.basis:
                assert P(v) == v


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(1,), (1, 1), (2,), (2, 1)]), st.data())
def test_projector_image_is_highest(shape, data):
    M = tensor_module(5, shape) if shape != (1,) else tensor_module(5, (1,))
    P = ExtremalProjector(M)
    p = data.draw(st.integers(0, M.dim - 1))
    try:
        w = P({p: Fraction(1)})
    except SingularWeightError:
        return
    assert P.is_highest(w)
    assert P(w) == w
