"""
Sparse exact linear algebra over the rationals.

Vectors are plain dicts {index: Fraction} with no stored zeros.  Matrices are
column-major: each column is such a vector, which makes applying a matrix to
a sparse vector cheap.
"""

from collections import defaultdict
from fractions import Fraction


def vclean(v):
    return {k: c for k, c in v.items() if c}


def vadd(u, v, scale=1):
    out = dict(u)
    for k, c in v.items():
        x = out.get(k, 0) + scale * c
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def vscale(v, s):
    if not s:
        return {}
    return {k: c * s for k, c in v.items()}


def vaxpy(acc, v, s):
    """acc += s*v in place."""
    for k, c in v.items():
        x = acc.get(k, 0) + s * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


def vdot(u, v):
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v[k] for k, c in u.items() if k in v), Fraction(0))


class SparseMatrix:
    """Exact rational matrix stored by columns."""

    __slots__ = ("shape", "cols")

    def __init__(self, shape, cols=None):
        self.shape = tuple(shape)
        self.cols = {}
        for j, col in (cols or {}).items():
            col = {i: Fraction(c) for i, c in col.items() if c}
            if col:
                self.cols[j] = col

    @classmethod
    def from_columns(cls, vectors, nrows):
        return cls((nrows, len(vectors)), dict(enumerate(vectors)))

    @classmethod
    def from_entries(cls, shape, entries):
        cols = defaultdict(dict)
        for (i, j), c in entries.items():
            cols[j][i] = c
        return cls(shape, cols)

    @classmethod
    def from_dense(cls, rows):
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls.from_entries((m, n), {(i, j): rows[i][j] for i in range(m) for j in range(n)})

    @classmethod
    def identity(cls, d):
        return cls((d, d), {j: {j: Fraction(1)} for j in range(d)})

    @classmethod
    def zeros(cls, shape):
        return cls(shape)

    def entries(self):
        for j, col in self.cols.items():
            for i, c in col.items():
                yield (i, j), c

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def column(self, j):
        return self.cols.get(j, {})

    def rows(self):
        out = defaultdict(dict)
        for (i, j), c in self.entries():
            out[i][j] = c
        return out

    def to_dense(self):
        m, n = self.shape
        out = [[Fraction(0)] * n for _ in range(m)]
        for (i, j), c in self.entries():
            out[i][j] = c
        return out

    def apply(self, v):
        if self.shape[1] and v and max(v) >= self.shape[1]:
            raise ValueError("vector index out of range for shape %r" % (self.shape,))
        acc = {}
        for j, c in v.items():
            col = self.cols.get(j)
            if col:
                vaxpy(acc, col, c)
        return acc

    def __matmul__(self, other):
        if isinstance(other, dict):
            return self.apply(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch %r @ %r" % (self.shape, other.shape))
        cols = {j: self.apply(col) for j, col in other.cols.items()}
        return SparseMatrix((self.shape[0], other.shape[1]), cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            cols[j] = vadd(cols.get(j, {}), col)
        return SparseMatrix(self.shape, cols)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, s):
        return SparseMatrix(self.shape, {j: vscale(col, s) for j, col in self.cols.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __bool__(self):
        return bool(self.cols)

    def transpose(self):
        cols = defaultdict(dict)
        for (i, j), c in self.entries():
            cols[i][j] = c
        return SparseMatrix((self.shape[1], self.shape[0]), cols)

    T = property(transpose)

    def commutator(self, other):
        return self @ other - other @ self

    def is_diagonal(self):
        return all(i == j for (i, j), _ in self.entries())

    def diagonal(self):
        d = min(self.shape)
        return [self.cols.get(j, {}).get(j, Fraction(0)) for j in range(d)]

    def restrict_columns(self, keep):
        return SparseMatrix((self.shape[0], len(keep)),
                            {p: self.cols[j] for p, j in enumerate(keep) if j in self.cols})

    def __repr__(self):
        return "SparseMatrix(shape=%r, nnz=%d)" % (self.shape, self.nnz())


class EchelonBasis:
    """Incrementally built basis of a subspace, kept in row-echelon form.

    Tracks how each echelon row is combined from the accepted input vectors,
    so `coordinates` returns coefficients with respect to those inputs.
    """

    def __init__(self, track=True):
        self.rows = []
        self.pivots = []
        self.track = track
        self.combos = []
        self.originals = []

    def __len__(self):
        return len(self.rows)

    def _reduce(self, v):
        v = dict(v)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = v.get(p)
            if c:
                vaxpy(v, row, -c)
                coeffs.append(c)
            else:
                coeffs.append(0)
        return v, coeffs

    def residual(self, v):
        return self._reduce(v)[0]

    def contains(self, v):
        return not self._reduce(v)[0]

    def add(self, v):
        """Insert v; return True iff it was independent of the current span."""
        r, coeffs = self._reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = vscale(r, inv)
        if self.track:
            # r = (v - sum coeffs_k row_k) / pivot
            k = len(self.originals)
            combo = {k: inv}
            for c, comb in zip(coeffs, self.combos):
                if c:
                    vaxpy(combo, comb, -c * inv)
            self.combos.append(combo)
            self.originals.append(v)
        self.rows.append(r)
        self.pivots.append(p)
        return True

    def coordinates(self, v):
        """Coefficients of v over the accepted vectors, or None if v is outside the span."""
        if not self.track:
            raise ValueError("basis built without coordinate tracking")
        r, coeffs = self._reduce(v)
        if r:
            return None
        out = {}
        for c, comb in zip(coeffs, self.combos):
            if c:
                vaxpy(out, comb, c)
        return out


def rank(vectors):
    B = EchelonBasis(track=False)
    for v in vectors:
        B.add(v)
    return len(B)


def rref(rows, ncols=None):
    """Fully reduced row echelon form of a list of sparse rows.

    Returns (reduced rows, pivot columns) with each pivot entry equal to 1.
    """
    B = EchelonBasis(track=False)
    for r in rows:
        B.add(r)
    red = [dict(r) for r in B.rows]
    piv = list(B.pivots)
    order = sorted(range(len(red)), key=lambda k: piv[k])
    red = [red[k] for k in order]
    piv = [piv[k] for k in order]
    for a in range(len(red) - 1, -1, -1):
        p = piv[a]
        for b in range(a):
            c = red[b].get(p)
            if c:
                vaxpy(red[b], red[a], -c)
    return red, piv


def nullspace(rows, ncols):
    """Basis of {x : r.x = 0 for all rows r} in a space of dimension ncols."""
    red, piv = rref(rows, ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for r, p in zip(red, piv):
            c = r.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def kernel(matrix):
    """Kernel of a SparseMatrix as a list of sparse vectors."""
    return nullspace(list(matrix.rows().values()), matrix.shape[1])


def solve(matrix, b):
    """Some x with matrix @ x == b, or None when inconsistent."""
    m, n = matrix.shape
    rows = matrix.rows()
    aug = []
    for i in range(m):
        r = dict(rows.get(i, {}))
        if b.get(i):
            r[n] = b[i]
        if r:
            aug.append(r)
    red, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = {}
    for r, p in zip(red, piv):
        c = r.get(n)
        if c:
            x[p] = c
    return x


def determinant(dense):
    """Exact determinant by fraction-preserving elimination."""
    a = [[Fraction(x) for x in row] for row in dense]
    d = len(a)
    det = Fraction(1)
    for c in range(d):
        p = next((r for r in range(c, d) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, d):
            f = a[r][c] * inv
            if f:
                for k in range(c, d):
                    a[r][k] -= f * a[c][k]
    return det
