"""
The extremal projector of the embedded o_(N-2) acting on an o_N module.

For a positive root a with root vectors e_a, e_-a normalized so that
h_a = [e_a, e_-a] satisfies a(h_a) = 2,

    p_a = 1 + sum_{k>=1} e_-a^k e_a^k (-1)^k / (k! (h_a + rho(h_a) + 1) ... (h_a + rho(h_a) + k))

and p is the ordered product of the p_a over a normal (convex) ordering of
the positive roots.  On a finite-dimensional module every series terminates.
"""

from fractions import Fraction
from math import factorial

from .algebra import CARTAN, POSITIVE
from .linalg import vaxpy, vscale


class SingularWeightError(ArithmeticError):
    """A denominator of the projector or of a raising operator vanished."""

    def __init__(self, msg, **info):
        super().__init__(msg)
        self.info = info


class RootData:
    """Root vectors, coroot and rho-shift for one positive root of the subalgebra."""

    def __init__(self, alg, g, inner_rank):
        self.alg = alg
        self.g = g
        i, j = alg.gens[g]
        self.pair = (i, j)
        self.root = alg.root(g)
        s, gneg = alg.gen_term(j, i)
        self.neg = gneg
        # [e, F[j,i]] as a Cartan combination; coefficients on F[-r,-r] = -F[r,r]
        h = {}
        for c_g, c in alg.bracket_ids(g, gneg).items():
            assert alg.kinds[c_g] == CARTAN
            r = -alg.gens[c_g][0]
            h[r] = h.get(r, 0) - c * s
        a = sum(self.root[r - 1] * c for r, c in h.items())
        if a == 0:
            raise ValueError("degenerate root %r" % (self.pair,))
        # e_-a = (2/a) s F[gneg];  h_a = (2/a) h
        self.neg_scale = Fraction(2, 1) / a * s
        self.coroot = {r: Fraction(2) * c / a for r, c in h.items()}
        self.inner_rank = inner_rank

    def eval_coroot(self, weight):
        return sum((c * weight[r - 1] for r, c in self.coroot.items()), Fraction(0))

    def __repr__(self):
        return "RootData(F%r, root=%r)" % (self.pair, self.root)


def _simple_coordinates(roots, simple):
    """Coordinates of each root in the basis of simple roots (exact, small systems)."""
    from .linalg import solve, SparseMatrix

    n = len(roots[0])
    M = SparseMatrix.from_entries((n, len(simple)),
                                  {(r, c): simple[c][r] for c in range(len(simple)) for r in range(n)})
    out = []
    for a in roots:
        x = solve(M, {r: Fraction(v) for r, v in enumerate(a) if v})
        out.append(tuple(x.get(c, Fraction(0)) for c in range(len(simple))))
    return out


def normal_ordering(roots):
    """Order positive roots so that any root equal to a sum of two lies between them.

    Uses the ratio of a generic positive functional to the height; a sum of two
    roots has a mediant ratio, hence lies strictly between its summands.
    """
    roots = [tuple(r) for r in roots]
    rootset = set(roots)
    simple = [a for a in roots
              if not any(tuple(x - y for x, y in zip(a, b)) in rootset for b in roots)]
    coords = _simple_coordinates(roots, simple)
    weights = [Fraction(1, 2 ** (t + 1)) + 1 for t in range(len(simple))]

    def key(p):
        c = coords[p]
        height = sum(c)
        phi = sum(w * x for w, x in zip(weights, c))
        return (phi / height, p)

    order = sorted(range(len(roots)), key=key)
    return [roots[p] for p in order]


def is_normal_ordering(ordered):
    pos = {a: p for p, a in enumerate(ordered)}
    for a in ordered:
        for b in ordered:
            s = tuple(x + y for x, y in zip(a, b))
            if s in pos:
                lo, hi = sorted((pos[a], pos[b]))
                if not lo < pos[s] < hi:
                    return False
    return True


class ExtremalProjector:
    """p for the subalgebra o_(N-2) (indices strictly inside (-n, n)) of an o_N module."""

    def __init__(self, module):
        self.module = module
        A = module.alg
        self.alg = A
        n = A.n
        inner = [g for g, (i, j) in enumerate(A.gens)
                 if A.kinds[g] == POSITIVE and abs(i) < n and abs(j) < n]
        self.roots = {A.root(g): RootData(A, g, n - 1) for g in inner}
        self.order = normal_ordering(list(self.roots)) if self.roots else []
        half = [Fraction(0)] * n
        for a in self.roots:
            for r, x in enumerate(a):
                half[r] += Fraction(x, 2)
        self.rho = tuple(half)
        self.rho_shift = {a: rd.eval_coroot(self.rho) for a, rd in self.roots.items()}

    def _by_weight(self, v):
        parts = {}
        W = self.module.weights
        for p, c in v.items():
            parts.setdefault(W[p], {})[p] = c
        return parts

    def apply_root(self, a, v, weight):
        """p_a applied to a vector of the given weight."""
        rd = self.roots[a]
        M = self.module
        E = M.gen_matrix(rd.g)
        Fm = M.gen_matrix(rd.neg)
        base = rd.eval_coroot(weight) + self.rho_shift[a]
        out = dict(v)
        w = v
        k = 0
        denom = Fraction(1)
        while True:
            w = E.apply(w)
            if not w:
                break
            k += 1
            d = base + k
            if d == 0:
                raise SingularWeightError("extremal projector denominator vanishes",
                                          root=rd.pair, k=k, weight=tuple(weight))
            denom *= d
            u = w
            for _ in range(k):
                u = Fm.apply(u)
            if u:
                coeff = Fraction((-1) ** k, factorial(k)) / denom * rd.neg_scale ** k
                vaxpy(out, u, coeff)
        return out

    def apply(self, v):
        """p v for an arbitrary vector (split into weight components)."""
        out = {}
        for weight, part in self._by_weight(v).items():
            u = part
            for a in reversed(self.order):
                if not u:
                    break
                u = self.apply_root(a, u, weight)
            vaxpy(out, u, 1)
        return out

    def is_highest(self, v):
        return all(not self.module.gen_matrix(rd.g).apply(v) for rd in self.roots.values())

    def __call__(self, v):
        return self.apply(v)


def scale(v, c):
    return vscale(v, c)
