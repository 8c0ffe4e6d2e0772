"""Incidence algebras of regular CW face posets, their quadratic duals,
and exact Loewy-length computations.

The incidence algebra A is the quiver algebra on the Hasse diagram with
all parallel 2-paths identified; the quadratic dual lives on the
opposite quiver with the orthogonally complementary degree-2 relations.
Loewy lengths of both realize the generation-time values for the
corresponding constructible-sheaf generators.
"""

from __future__ import annotations


from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import rank, solve_linear


class CWFormatError(ValueError):
    pass


class LoewyCapError(RuntimeError):
    """Graded dimensions failed to vanish below the requested cap."""


@dataclass
class CWPoset:
    """Graded face poset of a finite regular CW complex: cells with
    dimensions, and codimension-1 cover relations (upper, lower)."""

    cell_dims: dict
    covers: tuple

    def __post_init__(self):
        self.cells = sorted(self.cell_dims, key=lambda c: (self.cell_dims[c], str(c)))
        self.top_dim = max(self.cell_dims.values()) if self.cell_dims else 0
        self._below = {c: set() for c in self.cells}     # covers: upper -> lowers
        for up, lo in self.covers:
            if up not in self.cell_dims or lo not in self.cell_dims:
                raise CWFormatError("cover (%r, %r) references unknown cell" % (up, lo))
            self._below[up].add(lo)
        self._less = {}                                   # strict order closure
        for c in self.cells:
            self._strict_below(c)

    def _strict_below(self, c):
        if c in self._less:
            return self._less[c]
        out = set()
        for lo in self._below[c]:
            out.add(lo)
            out |= self._strict_below(lo)
        self._less[c] = out
        return out

    def less(self, a, b):
        """a < b in the face order."""
        return a in self._less[b]

    def covers_of(self, up):
        return sorted(self._below[up], key=lambda c: str(c))

    def open_interval(self, lower, upper):
        if not self.less(lower, upper):
            raise ValueError("%r is not below %r" % (lower, upper))
        return [c for c in self.cells
                if self.less(lower, c) and self.less(c, upper)]

    @staticmethod
    def from_json(data):
        if not isinstance(data, dict) or "cells" not in data or "covers" not in data:
            raise CWFormatError("CW JSON must contain 'cells' and 'covers'")
        dims = {}
        for cell in data["cells"]:
            cid, cdim = cell["id"], cell["dim"]
            if cid in dims:
                raise CWFormatError("duplicate cell id %r" % cid)
            dims[cid] = int(cdim)
        covers = tuple((up, lo) for up, lo in data["covers"])
        return CWPoset(dims, covers)

    def to_json(self):
        return {"cells": [{"id": c, "dim": self.cell_dims[c]} for c in self.cells],
                "covers": [[up, lo] for up, lo in self.covers]}


# -- standard test complexes ------------------------------------------

def circle_cw():
    """S^1 as a regular CW complex: two vertices, two edges."""
    dims = {"v0": 0, "v1": 0, "e0": 1, "e1": 1}
    covers = (("e0", "v0"), ("e0", "v1"), ("e1", "v0"), ("e1", "v1"))
    return CWPoset(dims, covers)


def cw_product(p, q):
    dims = {}
    covers = []
    for a in p.cells:
        for b in q.cells:
            dims[(a, b)] = p.cell_dims[a] + q.cell_dims[b]
    for up, lo in p.covers:
        for b in q.cells:
            covers.append(((up, b), (lo, b)))
    for up, lo in q.covers:
        for a in p.cells:
            covers.append(((a, up), (a, lo)))
    flat_dims = {_flat(c): d for c, d in dims.items()}
    flat_covers = tuple((_flat(u), _flat(l)) for u, l in covers)
    return CWPoset(flat_dims, flat_covers)


def _flat(c):
    if isinstance(c, tuple):
        return ".".join(_flat(x) for x in c)
    return str(c)


def torus_cw(n):
    """Product CW structure on the n-torus; 4^n cells."""
    if n == 0:
        return CWPoset({"pt": 0}, ())
    poset = circle_cw()
    for _ in range(n - 1):
        poset = cw_product(poset, circle_cw())
    return poset


def chain_cw(n):
    """Chain poset c_0 < ... < c_n with dim(c_k) = k."""
    dims = {"c%d" % k: k for k in range(n + 1)}
    covers = tuple(("c%d" % (k + 1), "c%d" % k) for k in range(n))
    return CWPoset(dims, covers)


def diamond_cw():
    """One top cell over two middle cells over one bottom cell."""
    dims = {"b": 0, "m0": 1, "m1": 1, "t": 2}
    covers = (("t", "m0"), ("t", "m1"), ("m0", "b"), ("m1", "b"))
    return CWPoset(dims, covers)


# -- validation -------------------------------------------------------

@dataclass
class CWDiagnostics:
    graded: bool
    diamond: bool
    violations: list


def validate_cw(poset):
    """Necessary conditions for a regular CW face poset: grading by
    covers, and the diamond property (exactly two cells strictly inside
    every gap-2 interval)."""
    violations = []
    graded = True
    for up, lo in poset.covers:
        if poset.cell_dims[up] - poset.cell_dims[lo] != 1:
            graded = False
            violations.append("cover (%r, %r) does not drop dimension by 1"
                              % (up, lo))
    for c in poset.cells:
        if poset.cell_dims[c] > 0 and not poset.covers_of(c):
            violations.append("cell %r of positive dimension covers nothing" % (c,))
    diamond = True
    for up in poset.cells:
        for lo in poset.cells:
            if poset.cell_dims[up] - poset.cell_dims[lo] != 2:
                continue
            if not poset.less(lo, up):
                continue
            mids = [m for m in poset._below[up] if lo in poset._below[m]]
            if len(mids) != 2:
                diamond = False
                violations.append("interval [%r, %r] has %d intermediate cells"
                                  % (lo, up, len(mids)))
    return CWDiagnostics(graded, diamond and graded, violations)


# -- order-complex homology ------------------------------------------

def interval_homology(poset, lower, upper):
    """Reduced rational Betti numbers of the order complex of the open
    interval (lower, upper), as a dict {degree: betti}, degrees >= -1."""
    elems = poset.open_interval(lower, upper)
    elems.sort(key=lambda c: (poset.cell_dims[c], str(c)))
    chains = {0: [(e,) for e in elems]}
    k = 0
    while chains[k]:
        nxt = []
        for ch in chains[k]:
            for e in elems:
                if poset.less(ch[-1], e):
                    nxt.append(ch + (e,))
        k += 1
        chains[k] = nxt
    dims = {-1: 1}
    for i in range(k):
        dims[i] = len(chains[i])
    index = {i: {s: j for j, s in enumerate(chains.get(i, []))} for i in range(k)}
    boundary_rank = {}
    # reduced: every 0-simplex maps to the empty simplex
    boundary_rank[0] = 1 if elems else 0
    for i in range(1, k):
        rows = []
        for s in chains[i]:
            v = [0] * len(chains[i - 1])
            for drop in range(len(s)):
                face = s[:drop] + s[drop + 1:]
                v[index[i - 1][face]] += (-1) ** drop
            rows.append(v)
        boundary_rank[i] = rank(rows) if rows else 0
    betti = {}
    top = k - 1
    for i in range(-1, max(top, -1) + 1):
        b = dims.get(i, 0) - boundary_rank.get(i, 0) - boundary_rank.get(i + 1, 0)
        if b:
            betti[i] = b
    return betti


def is_spherical_interval(poset, lower, upper):
    """Whether the open interval's order complex has the reduced
    homology of a sphere of dimension gap-2."""
    gap = poset.cell_dims[upper] - poset.cell_dims[lower]
    return interval_homology(poset, lower, upper) == {gap - 2: 1}


# -- quadratic algebras ----------------------------------------------

@dataclass
class QuadraticAlgebra:
    """Quiver with quadratic relations; for pair (s, t) with parallel
    2-paths s -> m -> t, relation vectors are indexed by the sorted
    middle vertices."""

    vertices: list
    vertex_dims: dict
    arrows: dict                # src -> tuple of targets
    relations: dict             # (src, tgt) -> list of rational vectors

    def two_path_middles(self, s, t):
        return sorted((m for m in self.arrows.get(s, ())
                       if t in self.arrows.get(m, ())), key=str)

    def two_path_pairs(self):
        pairs = set()
        for s, mids in self.arrows.items():
            for m in mids:
                for t in self.arrows.get(m, ()):
                    pairs.add((s, t))
        return sorted(pairs, key=lambda p: (str(p[0]), str(p[1])))


def incidence_algebra(poset, check=True):
    """A = kQ/I: arrows are cover relations oriented downward, relations
    are all pairwise differences of parallel 2-paths."""
    diag = validate_cw(poset)
    if not diag.graded:
        raise CWFormatError("poset is not graded: %s" % diag.violations[:3])
    if check and not diag.diamond:
        raise CWFormatError("diamond property fails: %s" % diag.violations[:3])
    arrows = {c: tuple(poset.covers_of(c)) for c in poset.cells}
    alg = QuadraticAlgebra(list(poset.cells), dict(poset.cell_dims), arrows, {})
    relations = {}
    for s, t in alg.two_path_pairs():
        mids = alg.two_path_middles(s, t)
        vecs = []
        for j in range(1, len(mids)):
            v = [Fraction(0)] * len(mids)
            v[0] = Fraction(1)
            v[j] = Fraction(-1)
            vecs.append(tuple(v))
        if vecs:
            relations[(s, t)] = vecs
    alg.relations = relations
    return alg


def _orthogonal_complement(vectors, length):
    if not vectors:
        return [tuple(Fraction(int(i == j)) for j in range(length))
                for i in range(length)]
    res = solve_linear([list(v) for v in vectors], [0] * len(vectors))
    assert res is not None
    _, null = res
    return [tuple(v) for v in null]


def rref_basis(vectors):
    """Canonical reduced-row-echelon basis of a span, for subspace
    equality tests."""
    M = [[Fraction(x) for x in v] for v in vectors]
    if not M:
        return ()
    m, n = len(M), len(M[0])
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
    return tuple(tuple(row) for row in M[:r] if any(x != 0 for x in row))


def quadratic_dual(alg):
    """kQ^op modulo the orthogonal complement of the input relations,
    paired through the shared middle-vertex basis of parallel 2-paths."""
    arrows_op = {v: [] for v in alg.vertices}
    for s, ts in alg.arrows.items():
        for t in ts:
            arrows_op[t].append(s)
    arrows_op = {v: tuple(sorted(ts, key=str)) for v, ts in arrows_op.items()}
    dual = QuadraticAlgebra(list(alg.vertices), dict(alg.vertex_dims),
                            arrows_op, {})
    relations = {}
    for s, t in alg.two_path_pairs():
        mids = alg.two_path_middles(s, t)
        vecs = alg.relations.get((s, t), [])
        comp = _orthogonal_complement(vecs, len(mids))
        if comp:
            relations[(t, s)] = comp
    dual.relations = relations
    return dual


# -- graded dimensions and Loewy length -------------------------------

@dataclass
class LoewyProfile:
    dims: list            # per degree: dict (s, t) -> graded dimension
    totals: list
    loewy_length: int

    def dim(self, k, s, t):
        if k >= len(self.dims):
            return 0
        return self.dims[k].get((s, t), 0)


def loewy_profile(alg, k_cap):
    """Graded dimensions of the quotient algebra by exact linear
    algebra: degree-k paths modulo the degree-k layer of the two-sided
    ideal generated by the quadratic relations."""
    paths = {0: {(v, v): [(v,)] for v in alg.vertices}}
    dims = [{(v, v): 1 for v in alg.vertices}]
    totals = [len(alg.vertices)]
    k = 0
    while totals[-1] > 0:
        k += 1
        if k > k_cap:
            raise LoewyCapError(
                "graded dimensions still nonzero at degree cap %d" % k_cap)
        layer = {}
        for (s, t), ps in paths[k - 1].items():
            for p in ps:
                for nxt in alg.arrows.get(t, ()):
                    layer.setdefault((s, nxt), []).append(p + (nxt,))
        paths[k] = layer
        deg = {}
        for (s, t), ps in layer.items():
            idx = {p: i for i, p in enumerate(ps)}
            gens = []
            for (a, b), vecs in alg.relations.items():
                mids = alg.two_path_middles(a, b)
                for i in range(k - 1):
                    prefixes = [p for p in paths[i].get((s, a), [])]
                    suffixes = [p for p in paths[k - 2 - i].get((b, t), [])]
                    for pre in prefixes:
                        for suf in suffixes:
                            for vec in vecs:
                                g = [Fraction(0)] * len(ps)
                                for m, c in zip(mids, vec):
                                    full = pre + (m,) + suf
                                    g[idx[full]] += c
                                if any(x != 0 for x in g):
                                    gens.append(g)
            quotient = len(ps) - (rank(gens) if gens else 0)
            if quotient:
                deg[(s, t)] = quotient
        dims.append(deg)
        totals.append(sum(deg.values()))
    ll = max(i for i, t in enumerate(totals) if t > 0) + 1
    return LoewyProfile(dims, totals, ll)


def koszul_hilbert_check(alg, dual, k_cap=None):
    """Numerical Koszulity test: H_A(-t) * H_{A^!}(t)^T must be the
    identity as a matrix of polynomials.  Returns (ok, residual)."""
    if k_cap is None:
        k_cap = max(alg.vertex_dims.values()) + 2
    pa = loewy_profile(alg, k_cap)
    pd = loewy_profile(dual, k_cap)
    verts = alg.vertices
    n = len(verts)
    residual = {}
    for i, vi in enumerate(verts):
        for j, vj in enumerate(verts):
            poly = {}
            for l, vl in enumerate(verts):
                for ka in range(len(pa.dims)):
                    a = pa.dim(ka, vi, vl) * ((-1) ** ka)
                    if not a:
                        continue
                    for kb in range(len(pd.dims)):
                        b = pd.dim(kb, vj, vl)   # transpose of H_{A^!}
                        if not b:
                            continue
                        poly[ka + kb] = poly.get(ka + kb, 0) + a * b
            if i == j:
                poly[0] = poly.get(0, 0) - 1
            poly = {k: v for k, v in poly.items() if v}
            if poly:
                residual[(vi, vj)] = poly
    return not residual, residual


@dataclass
class GenerationTime:
    t_GA: int
    t_GA_dual: int
    dim_X: int

    @property
    def matches_dimension(self):
        return self.t_GA == self.t_GA_dual == self.dim_X


def generation_time_bounds(poset, check=True):
    """Generation times of the exit-sheaf generator and its dual from
    Loewy lengths: t(G_A) = LL(A^!) - 1 and t(G_A^!) = LL(A) - 1."""
    alg = incidence_algebra(poset, check=check)
    dual = quadratic_dual(alg)
    cap = poset.top_dim + 2
    t_ga = loewy_profile(dual, cap).loewy_length - 1
    t_dual = loewy_profile(alg, cap).loewy_length - 1
    return GenerationTime(t_ga, t_dual, poset.top_dim)


def torus_cohomology_loewy(n):
    """Loewy length of H^*(T^n) = exterior algebra on n generators,
    computed from its graded dimensions, plus the induced generation
    lower bound LL - 1."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    graded = [comb(n, k) for k in range(n + 2)]
    ll = max(k for k, d in enumerate(graded) if d != 0) + 1
    return ll, ll - 1
