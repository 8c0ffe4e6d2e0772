"""Exact face enumeration for the periodic hyperplane arrangement
{x : <x, v> in Z} on the torus R^d / Z^d, d <= 3.

Faces are enumerated inside the closed fundamental cube [0,1]^d as sign
vectors of the affine hyperplanes meeting the cube (plus the cube walls),
then glued across the walls to obtain the torus faces.  All coordinates
are exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import rank, solve_linear
from .polyhedra import EQ, LE, LT, fm_feasible


class ExactModeUnavailable(ValueError):
    """The exact chamber engine only runs in dimension <= 3."""


def canonical_normal(v):
    """Primitive representative of +-v with lex-positive leading entry."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero normal")
    w = tuple(x // g for x in v)
    lead = next(x for x in w if x != 0)
    return w if lead > 0 else tuple(-x for x in w)


@dataclass(frozen=True)
class Hyperplane:
    family: int          # index into the normal list; -1 for wall-only planes
    normal: tuple
    level: int
    wall_only: bool


@dataclass
class CubePiece:
    idx: int
    signs: tuple
    dim: int
    equalities: tuple    # ((family, level), ...) over arrangement families
    pattern: frozenset   # families at an integer level
    vertices: tuple
    barycenter: tuple


@dataclass
class ArrangementFace:
    """A face of the periodic arrangement, represented once inside the
    fundamental cell.  The barycenter is an interior sample point that
    satisfies exactly the stated equalities."""

    idx: int
    dim: int
    equalities: tuple    # ((family, level), ...)
    strict: tuple        # ((family, k), ...) meaning k < <x, v_family> < k+1
    barycenter: tuple
    piece_ids: tuple


class TorusArrangement:
    def __init__(self, dim, normals, normal_rays):
        if dim > 3:
            raise ExactModeUnavailable(
                "exact chamber mode is unavailable for dim %d > 3; "
                "use the grid method instead" % dim)
        self.dim = dim
        self.normals = list(normals)
        self.normal_rays = list(normal_rays)
        self.hyperplanes = self._build_hyperplanes()
        self.pieces = []
        self._piece_by_signs = {}
        self._enumerate_pieces()
        self.faces = []
        self.piece_face = {}
        self._glue()
        self.closure = self._face_closure()

    # -- construction -------------------------------------------------

    def _build_hyperplanes(self):
        planes = []
        covered = set()
        for f, v in enumerate(self.normals):
            lo = sum(min(0, x) for x in v)
            hi = sum(max(0, x) for x in v)
            for k in range(lo, hi + 1):
                planes.append(Hyperplane(f, v, k, False))
            for j in range(self.dim):
                if v == tuple(int(i == j) for i in range(self.dim)):
                    covered.add(j)
        for j in range(self.dim):
            if j not in covered:
                e = tuple(int(i == j) for i in range(self.dim))
                planes.append(Hyperplane(-1, e, 0, True))
                planes.append(Hyperplane(-1, e, 1, True))
        return planes

    def _box_constraints(self):
        cons = []
        for j in range(self.dim):
            lo = [0] * self.dim
            lo[j] = -1
            cons.append((tuple(lo), LE, 0))
            hi = [0] * self.dim
            hi[j] = 1
            cons.append((tuple(hi), LE, 1))
        return cons

    def _sign_constraint(self, hp, sign):
        if sign == 0:
            return (hp.normal, EQ, hp.level)
        if sign > 0:
            return (tuple(-x for x in hp.normal), LT, -hp.level)
        return (hp.normal, LT, hp.level)

    def _enumerate_pieces(self):
        H = self.hyperplanes
        box = self._box_constraints()
        candidates = self._vertex_candidates()
        signs = []

        def feasible():
            cons = box + [self._sign_constraint(H[i], s)
                          for i, s in enumerate(signs)]
            return fm_feasible(cons, self.dim)

        def recurse():
            if len(signs) == len(H):
                self._record_piece(tuple(signs), candidates)
                return
            for s in (0, 1, -1):
                signs.append(s)
                if feasible():
                    recurse()
                signs.pop()

        recurse()

    def _vertex_candidates(self):
        d = self.dim
        pts = set()
        for combo in itertools.combinations(self.hyperplanes, d):
            A = [list(hp.normal) for hp in combo]
            b = [hp.level for hp in combo]
            res = solve_linear(A, b)
            if res is None:
                continue
            x, null = res
            if null:
                continue
            if all(0 <= c <= 1 for c in x):
                pts.add(tuple(x))
        return sorted(pts)

    def _record_piece(self, signs, candidates):
        H = self.hyperplanes
        eq_normals = [H[i].normal for i, s in enumerate(signs) if s == 0]
        dim = self.dim - (rank(eq_normals) if eq_normals else 0)
        verts = []
        for p in candidates:
            ok = True
            for i, s in enumerate(signs):
                val = sum(Fraction(a) * c for a, c in zip(H[i].normal, p)) - H[i].level
                if s == 0 and val != 0:
                    ok = False
                elif s > 0 and val < 0:
                    ok = False
                elif s < 0 and val > 0:
                    ok = False
                if not ok:
                    break
            if ok:
                verts.append(p)
        if not verts:
            raise RuntimeError("feasible piece without vertices: %r" % (signs,))
        bary = tuple(sum(v[i] for v in verts) / Fraction(len(verts))
                     for i in range(self.dim))
        equalities = tuple(sorted((H[i].family, H[i].level)
                                  for i, s in enumerate(signs)
                                  if s == 0 and not H[i].wall_only))
        pattern = frozenset(f for f, _ in equalities)
        piece = CubePiece(len(self.pieces), signs, dim, equalities, pattern,
                          tuple(verts), bary)
        self.pieces.append(piece)
        self._piece_by_signs[signs] = piece

    # -- gluing -------------------------------------------------------

    def _point_signs(self, x):
        out = []
        for hp in self.hyperplanes:
            val = sum(Fraction(a) * c for a, c in zip(hp.normal, x)) - hp.level
            out.append(0 if val == 0 else (1 if val > 0 else -1))
        return tuple(out)

    def piece_at(self, x):
        """The cube piece whose relative interior contains x in [0,1]^d."""
        return self._piece_by_signs[self._point_signs(x)]

    def _glue(self):
        parent = list(range(len(self.pieces)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        # merge wall artifacts into the cells they bound
        for p in self.pieces:
            for q in self.pieces:
                if p.idx == q.idx or p.dim >= q.dim:
                    continue
                if p.pattern != q.pattern:
                    continue
                if all(sp == sq or sp == 0 for sp, sq in zip(p.signs, q.signs)):
                    union(p.idx, q.idx)
        # identify translated pieces across the walls
        shifts = [s for s in itertools.product((-1, 0, 1), repeat=self.dim)
                  if any(s)]
        for p in self.pieces:
            for m in shifts:
                y = tuple(c + s for c, s in zip(p.barycenter, m))
                if all(0 <= c <= 1 for c in y):
                    q = self.piece_at(y)
                    union(p.idx, q.idx)

        groups = {}
        for p in self.pieces:
            groups.setdefault(find(p.idx), []).append(p)
        for root in sorted(groups):
            members = groups[root]
            top = max(m.dim for m in members)
            rep = min((m for m in members if m.dim == top),
                      key=lambda m: m.barycenter)
            strict = []
            for f, v in enumerate(self.normals):
                if f in rep.pattern:
                    continue
                val = sum(Fraction(a) * c for a, c in zip(v, rep.barycenter))
                strict.append((f, val.numerator // val.denominator))
            face = ArrangementFace(len(self.faces), top, rep.equalities,
                                   tuple(strict), rep.barycenter,
                                   tuple(m.idx for m in members))
            self.faces.append(face)
            for m in members:
                self.piece_face[m.idx] = face.idx

    def _face_closure(self):
        le = set()
        for p in self.pieces:
            for q in self.pieces:
                if all(sp == sq or sp == 0 for sp, sq in zip(p.signs, q.signs)):
                    a, b = self.piece_face[p.idx], self.piece_face[q.idx]
                    if a != b:
                        le.add((a, b))
        return frozenset(le)

    # -- queries ------------------------------------------------------

    def face_of_point(self, x):
        """The torus face containing x (coordinates reduced mod 1)."""
        red = tuple(Fraction(c) % 1 for c in x)
        return self.faces[self.piece_face[self.piece_at(red).idx]]

    def face_interior_points(self, face, count, rng):
        """Random rational points in the relative interior of a face."""
        rep = min((self.pieces[i] for i in face.piece_ids
                   if self.pieces[i].dim == face.dim),
                  key=lambda m: m.barycenter)
        pts = []
        for _ in range(count):
            weights = [Fraction(rng.randint(1, 13)) for _ in rep.vertices]
            total = sum(weights)
            pts.append(tuple(
                sum(w * v[i] for w, v in zip(weights, rep.vertices)) / total
                for i in range(self.dim)))
        return pts

    def barycenter_denominator_lcm(self):
        l = 1
        for f in self.faces:
            for c in f.barycenter:
                d = Fraction(c).denominator
                l = l * d // gcd(l, d)
        return l

    def euler_characteristic(self):
        chi = 0
        for f in self.faces:
            chi += (-1) ** f.dim
        return chi


def arrangement_from_rays(rays, dim):
    """Build the torus arrangement generated by the congruences
    <x, v> in Z over the given ray directions (deduplicated up to sign)."""
    seen = {}
    for i, r in enumerate(rays):
        c = canonical_normal(r)
        seen.setdefault(c, []).append(i)
    normals = sorted(seen)
    return TorusArrangement(dim, normals, [tuple(seen[n]) for n in normals])
