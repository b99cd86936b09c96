"""
Noncommutative Pfaffians in U(o_N) and exact checks of their identities.

PfF_I is the Pfaffian of the skew array (F[-a,b]) for a, b running over an
even index set I, taken as the full permutation sum

    Pf(Phi) = 1/((k/2)! 2^(k/2)) sum_{s in S_k} sgn(s) Phi[s1,s2] ... Phi[s(k-1),sk]

with the products kept in the written (noncommutative) order.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .algebra import AlgebraError, OrthogonalAlgebra, TensorUeaElement, coproduct, so
from .report import VerificationReport


def _alg(A):
    return A if isinstance(A, OrthogonalAlgebra) else so(A)


def perm_sign(seq):
    """Sign of the permutation sorting a sequence of distinct comparable items."""
    seq = list(seq)
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def split_sign(I, first, second):
    """(-1)^(I'I''): sign of the arrangement (first, second) relative to the order of I."""
    pos = {x: p for p, x in enumerate(I)}
    return perm_sign([pos[x] for x in list(first) + list(second)])


def splits(I, p):
    """All (I', I'', sign) with I' of size p, both parts in the order inherited from I."""
    I = tuple(I)
    for S in combinations(range(len(I)), p):
        first = tuple(I[s] for s in S)
        second = tuple(I[s] for s in range(len(I)) if s not in S)
        yield first, second, split_sign(I, first, second)


def _pf_prefactor(k):
    return Fraction(1, factorial(k // 2) * 2 ** (k // 2))


def pf_generic(k, entry, check_skew=False, one=None):
    """Pfaffian of a k x k skew array given by entry(a, b), 0 <= a, b < k.

    Entries may live in any ring supporting + and *; products are taken in
    the written order.  `one` is returned for k == 0 (defaults to 1).
    """
    if k % 2:
        raise AlgebraError("Pfaffian needs an even size, got %d" % k)
    if k == 0:
        return 1 if one is None else one
    cache = {(a, b): entry(a, b) for a in range(k) for b in range(k) if a != b}
    if check_skew:
        for a in range(k):
            d = entry(a, a)
            if d != 0:
                raise ValueError("entry provider is not skew: diagonal entry %d is %r" % (a, d))
            for b in range(a + 1, k):
                if cache[a, b] + cache[b, a] != 0:
                    raise ValueError("entry provider is not skew at (%d, %d)" % (a, b))
    total = None
    for s in permutations(range(k)):
        term = cache[s[0], s[1]]
        for t in range(2, k, 2):
            term = term * cache[s[t], s[t + 1]]
        if perm_sign(s) < 0:
            term = -term
        total = term if total is None else total + term
    return total * _pf_prefactor(k)


def pf_sequence(A, seq):
    """PfF for an ordered index sequence (not necessarily increasing).

    The permutation sum is accumulated over generator words before
    straightening, so each distinct word is straightened once.
    """
    A = _alg(A)
    seq = tuple(seq)
    k = len(seq)
    for i in seq:
        A.check_index(i)
    if k % 2:
        raise AlgebraError("Pfaffian needs an even number of indices, got %r" % (seq,))
    if k == 0:
        return A.one()
    if len(set(seq)) < k:
        # the permutation sum is alternating in the index positions
        return A.zero()
    key = ("pf", seq)
    cached = _pf_cache(A).get(key)
    if cached is not None:
        return cached
    srt = tuple(sorted(seq))
    if srt != seq:
        res = pf_sequence(A, srt) * perm_sign(seq)
    else:
        words = defaultdict(int)
        entries = {}
        for a in seq:
            for b in seq:
                if a != b:
                    entries[a, b] = A.gen_term(-a, b)
        for s in permutations(seq):
            sign = perm_sign(s)
            word = []
            for t in range(0, k, 2):
                c, g = entries[s[t], s[t + 1]]
                if not c:
                    break
                sign *= c
                word.append(g)
            else:
                words[tuple(word)] += sign
        pref = _pf_prefactor(k)
        res = A.from_words({w: c * pref for w, c in words.items() if c})
    _pf_cache(A)[key] = res
    return res


def _pf_cache(A):
    cache = getattr(A, "_pf_results", None)
    if cache is None:
        cache = A._pf_results = {}
    return cache


def _as_subset(A, I):
    I = tuple(I)
    if len(set(I)) != len(I):
        raise AlgebraError("index subset has repeated entries: %r" % (I,))
    for i in I:
        A.check_index(i)
    return tuple(sorted(I))


def pf_F(A, I, method="permutation"):
    """PfF_I for an index subset I (taken in increasing order)."""
    A = _alg(A)
    I = _as_subset(A, I)
    if len(I) % 2:
        raise AlgebraError("PfF_I needs |I| even, got %r" % (I,))
    if method == "permutation":
        return pf_sequence(A, I)
    if method == "split":
        return _pf_split_recursive(A, I)
    raise ValueError("unknown method %r" % method)


def _pf_split_recursive(A, I):
    # PfF_I = (2/k) sum_{|I'|=2} sign PfF_{I'} PfF_{I''}
    k = len(I)
    if k <= 2:
        return pf_sequence(A, I)
    key = ("split", I)
    cache = _pf_cache(A)
    if key in cache:
        return cache[key]
    total = A.zero()
    for first, second, sign in splits(I, 2):
        total = total + pf_sequence(A, first) * _pf_split_recursive(A, second) * sign
    res = total * Fraction(2, k)
    cache[key] = res
    return res


def hat_set(A, i):
    A = _alg(A)
    if A.N % 2 == 0:
        raise AlgebraError("hat Pfaffians are defined for odd N only")
    A.check_index(i)
    return tuple(x for x in A.indices if x != i)


def pf_hat(A, i):
    """PfF over the complement of {i} (odd N)."""
    A = _alg(A)
    return pf_F(A, hat_set(A, i))


def capelli(A, k):
    """C_k = sum over |I| = k of PfF_I PfF_{-I}, with -I taken as an increasing set."""
    A = _alg(A)
    if k % 2 or not 2 <= k <= A.N:
        raise AlgebraError("Capelli index must be even with 2 <= k <= N, got %d" % k)
    total = A.zero()
    for I in combinations(A.indices, k):
        minus = tuple(sorted(-i for i in I))
        total = total + pf_F(A, I) * pf_F(A, minus)
    return total


def star(x, y):
    """Symmetrized product (xy + yx)/2."""
    return (x * y + y * x) * Fraction(1, 2)


def replace_index(I, old, new):
    return tuple(new if x == old else x for x in I)


# -- identity checks ---------------------------------------------------------

def _witness(lhs, rhs):
    return {"lhs": str(lhs), "rhs": str(rhs), "difference": str(lhs - rhs)}


def commutator_lemma_rhs(A, I, j1, j2):
    """Predicted value of [PfF_I, F[j1,-j2]] from the four membership cases."""
    A = _alg(A)
    I = _as_subset(A, I)
    in1, in2 = j1 in I, j2 in I
    if not in1 and not in2:
        return A.zero(), 1
    if in1 and not in2:
        return pf_sequence(A, replace_index(I, j1, -j2)), 2
    if not in1 and in2:
        return -pf_sequence(A, replace_index(I, j2, -j1)), 3
    return pf_sequence(A, replace_index(I, j1, -j2)) - pf_sequence(A, replace_index(I, j2, -j1)), 4


def check_commutator_lemma(A, I, j1, j2, report=None):
    A = _alg(A)
    if j1 == j2:
        raise AlgebraError("commutator lemma needs j1 != j2")
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-commutator")
    lhs = pf_F(A, I).bracket(A.F(j1, -j2))
    rhs, case = commutator_lemma_rhs(A, I, j1, j2)
    report.add("pf.commutator_lemma.case%d" % case, "pfaffian-F-commutator-rule",
               {"N": A.N, "I": I, "j1": j1, "j2": j2}, lhs == rhs, _witness(lhs, rhs))
    return report


def check_hat_corollary(A, report=None):
    """Commutators of the complement Pfaffians with F[i,-j] (odd N).

    Checks [PfF_hat(-i), F[i,-j]] = (-1)^(i+j) PfF_hat(j),
    [PfF_hat(-j), F[i,-j]] = -(-1)^(i+j) PfF_hat(i), and vanishing for every
    other complement index.
    """
    A = _alg(A)
    report = report or VerificationReport("pfaffian-hat-corollary")
    idx = A.indices
    for i in idx:
        for j in idx:
            if i == j:
                continue
            F = A.F(i, -j)
            for k in idx:
                lhs = pf_hat(A, k).bracket(F)
                rhs = A.zero()
                if k == -i:
                    rhs = rhs + pf_hat(A, j) * (-1) ** ((i + j) % 2)
                if k == -j:
                    rhs = rhs - pf_hat(A, i) * (-1) ** ((i + j) % 2)
                report.add("pf.hat_corollary", "complement-pfaffian-commutators",
                           {"N": A.N, "k": k, "i": i, "j": j}, lhs == rhs, _witness(lhs, rhs))
    return report


def check_subalgebra_commutation(A, report=None):
    """PfF_hat(+-n) commute with every F[i,j], -n < i, j < n."""
    A = _alg(A)
    report = report or VerificationReport("pfaffian-subalgebra")
    n = A.n
    inner = [i for i in A.indices if -n < i < n]
    for h in (n, -n):
        P = pf_hat(A, h)
        for i in inner:
            for j in inner:
                if j == -i:
                    continue
                c = P.bracket(A.F(i, j))
                report.add("pf.hat_commutes_subalgebra", "complement-pfaffians-commute-with-o(N-2)",
                           {"N": A.N, "hat": h, "i": i, "j": j}, not c, {"commutator": str(c)})
    return report


def split_rhs(A, I, p):
    A = _alg(A)
    I = _as_subset(A, I)
    k = len(I)
    q = k - p
    if p % 2 or q % 2 or p < 0 or q < 0:
        raise AlgebraError("split sizes must be even and sum to |I|")
    pref = Fraction(factorial(p // 2) * factorial(q // 2), factorial(k // 2))
    total = A.zero()
    for first, second, sign in splits(I, p):
        total = total + pf_F(A, first) * pf_F(A, second) * sign
    return total * pref


def averaged_split_rhs(A, I):
    A = _alg(A)
    I = _as_subset(A, I)
    k = len(I)
    total = A.zero()
    for p in range(0, k + 1, 2):
        pref = Fraction(factorial(p // 2) * factorial((k - p) // 2), factorial(k // 2))
        for first, second, sign in splits(I, p):
            total = total + pf_F(A, first) * pf_F(A, second) * (sign * pref)
    return total * Fraction(1, k // 2 + 1)


def check_split_identity(A, I, p, report=None):
    A = _alg(A)
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-split")
    lhs = pf_F(A, I)
    rhs = split_rhs(A, I, p)
    report.add("pf.split", "pfaffian-splitting-sum", {"N": A.N, "I": I, "p": p, "q": len(I) - p},
               lhs == rhs, _witness(lhs, rhs))
    return report


def check_averaged_split(A, I, report=None):
    A = _alg(A)
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-split")
    lhs = pf_F(A, I)
    rhs = averaged_split_rhs(A, I)
    report.add("pf.split_averaged", "pfaffian-averaged-splitting-sum", {"N": A.N, "I": I},
               lhs == rhs, _witness(lhs, rhs))
    return report


def minor_expansion_rhs(A, I):
    """Expansion of PfF_I along the index -n (which must lie in I)."""
    A = _alg(A)
    I = _as_subset(A, I)
    n = A.n
    if -n not in I:
        raise AlgebraError("expansion needs -n in I")
    k = len(I)
    total = A.zero()
    for i in I:
        if i == -n:
            continue
        rest = tuple(x for x in I if x not in (-n, i))
        Fni = A.F(n, i)
        for p in range(0, len(rest) + 1, 2):
            pref = Fraction(factorial(p // 2) * factorial((len(rest) - p) // 2), factorial(k // 2))
            for first, second, _ in splits(rest, p):
                sign = split_sign(I, first + (-n, i), second)
                total = total + pf_F(A, first) * Fni * pf_F(A, second) * (sign * pref)
    return total


def check_minor_n_expansion(A, I, report=None):
    A = _alg(A)
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-expansion")
    lhs = pf_F(A, I)
    rhs = minor_expansion_rhs(A, I)
    report.add("pf.minus_n_expansion", "pfaffian-expansion-along-minus-n", {"N": A.N, "I": I},
               lhs == rhs, _witness(lhs, rhs))
    return report


def coproduct_rhs(A, I):
    A = _alg(A)
    I = _as_subset(A, I)
    total = TensorUeaElement(A, {})
    for p in range(0, len(I) + 1, 2):
        for first, second, sign in splits(I, p):
            total = total + TensorUeaElement.outer(pf_F(A, first), pf_F(A, second)) * sign
    return total


def check_coproduct_lemma(A, I, report=None):
    A = _alg(A)
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-coproduct")
    lhs = coproduct(pf_F(A, I))
    rhs = coproduct_rhs(A, I)
    report.add("pf.coproduct", "pfaffian-coproduct-sum", {"N": A.N, "I": I}, lhs == rhs,
               {"lhs": str(lhs), "rhs": str(rhs)})
    return report


def check_weight_homogeneity(A, I, report=None):
    """Every PBW term of PfF_I carries the ad-weight -sum_{i in I} e_i."""
    A = _alg(A)
    I = _as_subset(A, I)
    report = report or VerificationReport("pfaffian-weights")
    target = tuple(-sum(A.unit_weight(i)[p] for i in I) for p in range(A.n))
    weights = pf_F(A, I).ad_weights()
    report.add("pf.ad_weight", "pfaffian-weight-shift", {"N": A.N, "I": I},
               weights <= {target}, {"weights": sorted(weights), "expected": target})
    return report
