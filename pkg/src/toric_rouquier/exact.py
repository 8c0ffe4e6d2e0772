"""Exact integer and rational linear algebra.

Smith normal form with unimodular transforms, integer kernels, lattice
saturation, and finitely presented abelian groups with canonical normal
forms.  All arithmetic is over Python ints and fractions.Fraction; no
floating point is used anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(A, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in A)


def transpose(A):
    return [list(col) for col in zip(*A)]


def freeze(A):
    return tuple(tuple(row) for row in A)


def rank(A):
    """Rank of a matrix with integer or rational entries."""
    M = [[Fraction(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def solve_linear(A, b):
    """Solve A x = b exactly over the rationals.

    Returns (particular_solution, nullspace_basis) or None if inconsistent.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][col]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if M[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = M[i][n]
    free = [j for j in range(n) if j not in pivots]
    null = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -M[i][f]
        null.append(tuple(v))
    return tuple(x), null


def invert(A):
    """Exact inverse of a square rational matrix, or None if singular."""
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return [row[n:] for row in M]


def det(A):
    """Exact determinant of a square integer/rational matrix."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    d = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            d = -d
        d *= M[col][col]
        inv = 1 / M[col][col]
        for i in range(col + 1, n):
            if M[i][col] != 0:
                f = M[i][col] * inv
                M[i] = [a - f * c for a, c in zip(M[i], M[col])]
    return d


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...

    U_inv is carried along because lattice saturation and quotient-group
    lifts need it.
    """

    U: tuple
    D: tuple
    V: tuple
    U_inv: tuple

    @property
    def diagonal(self):
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]))))

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A):
    """Smith normal form of a nonempty integer matrix.

    Deterministic pivoting: the entry of smallest absolute value in the
    remaining submatrix, ties broken row-major.
    """
    m = len(A)
    n = len(A[0])
    if m == 0 or n == 0:
        raise ValueError("smith_normal_form requires a nonempty matrix")
    D = [[int(x) for x in row] for row in A]
    U = identity(m)
    Ui = identity(m)
    V = identity(n)

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def row_add(i, j, c):
        # row i += c * row j
        D[i] = [a + c * b for a, b in zip(D[i], D[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for r in Ui:
            r[j] -= c * r[i]

    def col_swap(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def col_add(j, k, c):
        # col j += c * col k
        for M in (D, V):
            for r in M:
                r[j] += c * r[k]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v != 0 and (piv is None or abs(v) < abs(piv[2])):
                    piv = (i, j, v)
        if piv is None:
            break
        if piv[0] != t:
            row_swap(t, piv[0])
        if piv[1] != t:
            col_swap(t, piv[1])
        while True:
            restart = False
            for i in range(m):
                if i != t and D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    row_add(i, t, -q)
                    if D[i][t] != 0:
                        row_swap(t, i)
                        restart = True
            if restart:
                continue
            for j in range(n):
                if j != t and D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    col_add(j, t, -q)
                    if D[t][j] != 0:
                        col_swap(t, j)
                        restart = True
            if restart:
                continue
            p = D[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            row_neg(t)
        t += 1
    return SmithDecomposition(freeze(U), freeze(D), freeze(V), freeze(Ui))


def elementary_divisors(A):
    return [d for d in smith_normal_form(A).diagonal if d != 0]


def kernel_basis(A):
    """Basis of the integer kernel lattice {v : A v = 0}.

    Returns a (possibly empty) list of integer vectors.
    """
    m = len(A)
    n = len(A[0])
    snf = smith_normal_form(A)
    r = snf.rank
    return [tuple(snf.V[i][j] for i in range(n)) for j in range(r, n)]


def saturation(vectors, ambient_dim):
    """Basis of span_R(vectors) intersected with Z^ambient_dim."""
    vectors = list(vectors)
    if not vectors:
        return []
    A = [[v[i] for v in vectors] for i in range(ambient_dim)]
    snf = smith_normal_form(A)
    r = snf.rank
    return [tuple(snf.U_inv[i][j] for i in range(ambient_dim)) for j in range(r)]


def lattice_contains(basis, v):
    """Whether v lies in the Z-span of the given integer vectors."""
    basis = list(basis)
    n = len(v)
    if not basis:
        return all(x == 0 for x in v)
    B = [[b[i] for b in basis] for i in range(n)]
    snf = smith_normal_form(B)
    w = mat_vec(snf.U, v)
    diag = snf.diagonal
    r = snf.rank
    for i in range(n):
        if i < r:
            if w[i] % diag[i] != 0:
                return False
        elif w[i] != 0:
            return False
    return True


@dataclass(frozen=True, order=True)
class GClass:
    """Canonical normal form of an element of a finitely presented
    abelian group: torsion coordinates reduced mod their orders, then
    free coordinates."""

    torsion: tuple
    free: tuple
    orders: tuple

    def to_json(self):
        return {"torsion": list(self.torsion), "free": list(self.free)}

    def __str__(self):
        return "(%s | %s)" % (",".join(map(str, self.torsion)),
                              ",".join(map(str, self.free)))


class QuotientGroup:
    """Z^ambient modulo the subgroup generated by the given relation
    vectors, with SNF-derived canonical normal forms."""

    def __init__(self, ambient, relations):
        self.ambient = ambient
        self.relations = [tuple(r) for r in relations]
        for r in self.relations:
            if len(r) != ambient:
                raise ValueError("relation length does not match ambient rank")
        if self.relations:
            R = [[r[i] for r in self.relations] for i in range(ambient)]
            self._snf = smith_normal_form(R)
            self._U = self._snf.U
            self._Ui = self._snf.U_inv
            diag = self._snf.diagonal
            self._r = self._snf.rank
        else:
            self._snf = None
            self._U = freeze(identity(ambient))
            self._Ui = self._U
            diag = ()
            self._r = 0
        self._torsion_idx = [i for i in range(self._r) if diag[i] > 1]
        self.torsion_orders = tuple(diag[i] for i in self._torsion_idx)
        self._free_idx = list(range(self._r, ambient))
        self.free_rank = ambient - self._r

    def normal_form(self, v):
        """Canonical GClass of an integer vector; two vectors get the
        same class iff their difference lies in the relation span."""
        if len(v) != self.ambient:
            raise ValueError("vector length %d does not match ambient rank %d"
                             % (len(v), self.ambient))
        w = mat_vec(self._U, v)
        torsion = tuple(w[i] % self.torsion_orders[k]
                        for k, i in enumerate(self._torsion_idx))
        free = tuple(w[i] for i in self._free_idx)
        return GClass(torsion, free, self.torsion_orders)

    def lift(self, cls):
        """An integer representative of a class; normal_form(lift(c)) == c."""
        w = [0] * self.ambient
        for k, i in enumerate(self._torsion_idx):
            w[i] = cls.torsion[k]
        for k, i in enumerate(self._free_idx):
            w[i] = cls.free[k]
        return mat_vec(self._Ui, w)

    @property
    def zero(self):
        return self.normal_form((0,) * self.ambient)

    def describe(self):
        return {"torsion_orders": list(self.torsion_orders),
                "free_rank": self.free_rank}


def vector_content(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def is_primitive(v):
    return vector_content(v) == 1
