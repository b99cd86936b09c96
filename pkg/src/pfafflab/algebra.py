"""
Exact arithmetic in the universal enveloping algebra U(o_N).

The orthogonal algebra is taken in its split realization: generators
F[i,j] = E[i,j] - E[-j,-i] indexed by {-n, ..., n} (0 included iff N is odd),
subject only to the linear relations F[i,j] = -F[-j,-i].  Elements of U(o_N)
are stored in PBW normal form over a fixed total order of the canonical
generators: negative root vectors first, then Cartan elements, then positive
root vectors.

    >>> A = so(5)
    >>> x = A.F(1, 2) * A.F(2, 1) - A.F(2, 1) * A.F(1, 2)
    >>> print(x)
    1 * F[-2,-2] + -1 * F[-1,-1]
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations


NEGATIVE, CARTAN, POSITIVE = "negative-root", "cartan", "positive-root"
_BLOCK = {NEGATIVE: 0, CARTAN: 1, POSITIVE: 2}


class AlgebraError(ValueError):
    """Index out of range, mismatched ranks, or other domain errors."""


def index_set(N):
    if N < 3:
        raise AlgebraError("rank N must be at least 3, got %r" % (N,))
    n = N // 2
    if N % 2:
        return tuple(range(-n, n + 1))
    return tuple(i for i in range(-n, n + 1) if i != 0)


def classify(i, j):
    """Root type of the canonical pair (i, j)."""
    if i == j:
        return CARTAN
    return POSITIVE if i < j else NEGATIVE


class OrthogonalAlgebra:
    """The enveloping algebra U(o_N) with a memoized PBW straightening engine.

    Generators are numbered 0..dim-1 in PBW order; a PBW monomial is a
    nondecreasing tuple of these numbers.
    """

    def __init__(self, N):
        self.N = N
        self.indices = index_set(N)
        self.n = N // 2
        self._index_pos = {i: p for p, i in enumerate(self.indices)}

        pairs = set()
        for i in self.indices:
            for j in self.indices:
                if j != -i:
                    pairs.add(min((i, j), (-j, -i)))
        self.gens = sorted(pairs, key=lambda ij: (_BLOCK[classify(*ij)], ij))
        self.gen_id = {ij: g for g, ij in enumerate(self.gens)}
        self.kinds = [classify(*ij) for ij in self.gens]
        assert len(self.gens) == N * (N - 1) // 2

        self._bracket = [[self._bracket_ids(a, b) for b in range(len(self.gens))]
                         for a in range(len(self.gens))]
        self._lmul_cache = {}
        self._mono_cache = {}

    def __repr__(self):
        return "OrthogonalAlgebra(%d)" % self.N

    # -- generators ---------------------------------------------------------

    def check_index(self, i):
        if i not in self._index_pos:
            raise AlgebraError("index %r not in %r for N=%d" % (i, self.indices, self.N))

    def canonicalize(self, i, j):
        """Return (sign, (i', j')) with F[i,j] = sign * F[i',j'], or (0, None)."""
        self.check_index(i)
        self.check_index(j)
        if j == -i:
            return 0, None
        if (i, j) <= (-j, -i):
            return 1, (i, j)
        return -1, (-j, -i)

    def gen_term(self, i, j):
        """(sign, generator id) for F[i,j]; id is None for the zero pair."""
        s, ij = self.canonicalize(i, j)
        if not s:
            return 0, None
        return s, self.gen_id[ij]

    def F(self, i, j):
        s, g = self.gen_term(i, j)
        if not s:
            return self.zero()
        return UeaElement(self, {(g,): Fraction(s)})

    def one(self):
        return UeaElement(self, {(): Fraction(1)})

    def zero(self):
        return UeaElement(self, {})

    def scalar(self, c):
        c = Fraction(c)
        return UeaElement(self, {(): c} if c else {})

    def generators(self):
        """All canonical generators as UeaElements, in PBW order."""
        return [UeaElement(self, {(g,): Fraction(1)}) for g in range(len(self.gens))]

    # -- structure constants ------------------------------------------------

    def _bracket_ids(self, a, b):
        i, j = self.gens[a]
        k, l = self.gens[b]
        out = defaultdict(int)

        def put(c, p, q):
            s, g = self.gen_term(p, q)
            if s:
                out[g] += c * s

        if k == j:
            put(1, i, l)
        if i == l:
            put(-1, k, j)
        if -k == i:
            put(-1, -j, l)
        if -l == j:
            put(1, k, -i)
        return {g: c for g, c in out.items() if c}

    def bracket_ids(self, a, b):
        """[gen a, gen b] as a dict generator id -> integer coefficient."""
        return self._bracket[a][b]

    # -- straightening ------------------------------------------------------

    def _lmul(self, g, m):
        """Straighten the word g*m where m is a PBW monomial."""
        key = (g, m)
        hit = self._lmul_cache.get(key)
        if hit is not None:
            return hit
        if not m or g <= m[0]:
            res = {(g,) + m: 1}
        else:
            h, rest = m[0], m[1:]
            acc = defaultdict(int)
            # g h rest = h (g rest) + [g, h] rest
            for mono, c in self._lmul(g, rest).items():
                for mono2, c2 in self._lmul(h, mono).items():
                    acc[mono2] += c * c2
            for k, c in self._bracket[g][h].items():
                for mono2, c2 in self._lmul(k, rest).items():
                    acc[mono2] += c * c2
            res = {mono: c for mono, c in acc.items() if c}
        self._lmul_cache[key] = res
        return res

    def mono_mul(self, m1, m2):
        """Product of two PBW monomials, as dict monomial -> integer."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        if not m1:
            res = {m2: 1}
        elif not m2:
            res = {m1: 1}
        else:
            cur = {m2: 1}
            for g in reversed(m1):
                acc = defaultdict(int)
                for mono, c in cur.items():
                    for mono2, c2 in self._lmul(g, mono).items():
                        acc[mono2] += c * c2
                cur = {mono: c for mono, c in acc.items() if c}
            res = cur
        self._mono_cache[key] = res
        return res

    def straighten_word(self, word):
        """Straighten an arbitrary tuple of generator ids."""
        cur = {(): 1}
        for g in reversed(word):
            acc = defaultdict(int)
            for mono, c in cur.items():
                for mono2, c2 in self._lmul(g, mono).items():
                    acc[mono2] += c * c2
            cur = {mono: c for mono, c in acc.items() if c}
        return cur

    def from_words(self, words):
        """Element from a dict word -> coefficient (words need not be sorted)."""
        acc = defaultdict(Fraction)
        for word, c in words.items():
            if not c:
                continue
            if all(word[p] <= word[p + 1] for p in range(len(word) - 1)):
                acc[word] += c
                continue
            for mono, c2 in self.straighten_word(word).items():
                acc[mono] += c * c2
        return UeaElement(self, acc)

    def clear_cache(self):
        self._lmul_cache.clear()
        self._mono_cache.clear()

    # -- weights ------------------------------------------------------------

    def unit_weight(self, i):
        """Coordinates of e_i in the basis e_1..e_n (e_{-r} = -e_r, e_0 = 0)."""
        w = [0] * self.n
        if i > 0:
            w[i - 1] = 1
        elif i < 0:
            w[-i - 1] = -1
        return tuple(w)

    def root(self, g):
        i, j = self.gens[g]
        a, b = self.unit_weight(i), self.unit_weight(j)
        return tuple(x - y for x, y in zip(a, b))

    def ad_weight(self, m):
        w = [0] * self.n
        for g in m:
            for p, x in enumerate(self.root(g)):
                w[p] += x
        return tuple(w)

    def coproduct(self, x):
        return coproduct(x)


@lru_cache(maxsize=None)
def so(N):
    """Shared algebra instance for rank N."""
    return OrthogonalAlgebra(N)


def _clean(terms):
    return {m: Fraction(c) for m, c in terms.items() if c}


class UeaElement:
    """A finite linear combination of PBW monomials with rational coefficients.

    Treat instances as immutable: arithmetic always returns new elements.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = _clean(terms)

    def _coerce(self, other):
        if isinstance(other, UeaElement):
            if other.alg is not self.alg and other.alg.N != self.alg.N:
                raise AlgebraError("rank mismatch: %d vs %d" % (self.alg.N, other.alg.N))
            return other
        if isinstance(other, (int, Fraction)):
            return self.alg.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = defaultdict(Fraction, self.terms)
        for m, c in other.terms.items():
            acc[m] += c
        return UeaElement(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return UeaElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UeaElement(self.alg, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = defaultdict(Fraction)
        mono_mul = self.alg.mono_mul
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, k in mono_mul(m1, m2).items():
                    acc[m] += c * k
        return UeaElement(self.alg, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.alg.scalar(other)
        if not isinstance(other, UeaElement):
            return NotImplemented
        return self.alg.N == other.alg.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg.N, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def bracket(self, other):
        return self * other - other * self

    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def monomials(self):
        return sorted(self.terms)

    def ad_weights(self):
        return {self.alg.ad_weight(m) for m in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            word = "".join("F[%d,%d]" % self.alg.gens[g] for g in m) or "1"
            parts.append("%s * %s" % (self.terms[m], word))
        return " + ".join(parts)

    __repr__ = __str__


class TensorUeaElement:
    """Element of U(o_N) (x) U(o_N) in PBW (x) PBW normal form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = _clean(terms)

    @classmethod
    def outer(cls, x, y):
        terms = {(m1, m2): c1 * c2 for m1, c1 in x.terms.items() for m2, c2 in y.terms.items()}
        return cls(x.alg, terms)

    def __add__(self, other):
        acc = defaultdict(Fraction, self.terms)
        for k, c in other.terms.items():
            acc[k] += c
        return TensorUeaElement(self.alg, acc)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorUeaElement(self.alg, {k: c * other for k, c in self.terms.items()})
        acc = defaultdict(Fraction)
        mm = self.alg.mono_mul
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                left = mm(a1, a2)
                right = mm(b1, b2)
                c = c1 * c2
                for ma, ka in left.items():
                    for mb, kb in right.items():
                        acc[ma, mb] += c * ka * kb
        return TensorUeaElement(self.alg, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorUeaElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        gens = self.alg.gens

        def word(m):
            return "".join("F[%d,%d]" % gens[g] for g in m) or "1"

        return " + ".join("%s * %s (x) %s" % (self.terms[k], word(k[0]), word(k[1]))
                          for k in sorted(self.terms))

    __repr__ = __str__


# -- functional surface ------------------------------------------------------

def canonicalize_generator(N, i, j):
    """(sign, canonical pair) for F[i,j]; sign 0 and pair None when j == -i."""
    return so(N).canonicalize(i, j)


def bracket_generators(N, a, b):
    """[F_a, F_b] for index pairs a=(i,j), b=(k,l), as a degree <= 1 element."""
    A = so(N)
    return A.F(*a).bracket(A.F(*b))


def multiply(x, y):
    return x * y


def coproduct(x):
    """Primitive coproduct extended multiplicatively.

    A PBW monomial g1...gk maps to the sum over subsets S of positions of
    word(S) (x) word(complement); both subwords inherit the sorted order, so
    no straightening is needed.
    """
    acc = defaultdict(Fraction)
    for m, c in x.terms.items():
        k = len(m)
        for r in range(k + 1):
            for S in combinations(range(k), r):
                left = tuple(m[p] for p in S)
                right = tuple(m[p] for p in range(k) if p not in S)
                acc[left, right] += c
    return TensorUeaElement(x.alg, acc)


def ad_weight(N, m):
    """Sum of the roots of the factors of a PBW monomial (tuple of index pairs or ids)."""
    A = so(N)
    ids = []
    for f in m:
        if isinstance(f, tuple):
            s, g = A.gen_term(*f)
            if not s:
                raise AlgebraError("zero generator %r in monomial" % (f,))
            ids.append(g)
        else:
            ids.append(f)
    return A.ad_weight(ids)
