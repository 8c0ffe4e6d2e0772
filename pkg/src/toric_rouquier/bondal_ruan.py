"""The Bondal-Ruan map on the torus, its image, and the level-set
stratification.

phi(x) pairs a rational point of R^d / Z^d with every ray, takes floors,
and pushes the resulting integer vector into the class group Ghat.  The
image is enumerated either exactly from the chamber decomposition
(d <= 3) or by stabilized refinement of (1/l)-grids.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arrangement import ExactModeUnavailable, arrangement_from_rays


def _floor(x):
    x = Fraction(x)
    return x.numerator // x.denominator


def phi_eval(cox, x):
    """Value of the Bondal-Ruan map at a rational point x of M_R / M.

    Computes a_i = <x, v_i> exactly and returns the class of
    -(floor(a_1), ..., floor(a_n)) in Ghat; invariant under integer
    translation of x.
    """
    if len(x) != cox.dim:
        raise ValueError("point length %d does not match fan dimension %d"
                         % (len(x), cox.dim))
    x = tuple(Fraction(c) for c in x)
    vec = tuple(-_floor(sum(c * r for c, r in zip(x, ray)))
                for ray in cox.fan.rays)
    return cox.ghat.normal_form(vec)


def frobenius_level_set(cox, level, workers=1):
    """Classes of phi on the (1/level)-grid, deduplicated and sorted.

    These are the summand classes of the level-th toric Frobenius
    pushforward of the structure sheaf.
    """
    if level < 1:
        raise ValueError("level must be positive")
    d = cox.dim
    grid = [tuple(Fraction(u, level) for u in pt)
            for pt in itertools.product(range(level), repeat=d)]
    if workers > 1 and len(grid) > 1:
        chunks = [grid[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda ch: {phi_eval(cox, x) for x in ch}, chunks)
        classes = set().union(*parts)
    else:
        classes = {phi_eval(cox, x) for x in grid}
    return sorted(classes)


def arrangement_faces(cox):
    """Exact face list of the periodic arrangement cut out by the rays
    (d <= 3 only)."""
    return arrangement_from_rays(cox.fan.rays, cox.dim)


def grid_bound_heuristic(cox):
    """Fallback grid resolution when no chamber decomposition is
    available: lcm of |det| over all d-subsets of the rays.  Heuristic;
    results obtained with it are labeled as such."""
    from .exact import det

    d = cox.dim
    bound = 1
    for combo in itertools.combinations(cox.fan.rays, d):
        m = abs(det([list(r) for r in combo]))
        m = int(m)
        if m:
            bound = bound * m // gcd(bound, m)
    return bound


@dataclass
class ImagePhi:
    classes: list
    method: str
    exact: bool
    detail: dict

    @property
    def count(self):
        return len(self.classes)

    def to_json(self):
        out = {"classes": [c.to_json() for c in self.classes],
               "count": self.count,
               "method": self.method,
               "exact": self.exact}
        out.update(self.detail)
        return out


def image_phi(cox, method="chambers", lmax=None, workers=1):
    """The image of the Bondal-Ruan map as a sorted list of classes.

    chambers: evaluate phi at every face barycenter of the exact
    arrangement (phi is constant on faces, so this is exact).
    grid: union of frobenius level sets for l = 1..lmax with doubling
    stabilization; heuristic unless lmax covers every chamber
    denominator.
    """
    if method == "chambers":
        arr = arrangement_faces(cox)
        classes = sorted({phi_eval(cox, f.barycenter) for f in arr.faces})
        return ImagePhi(classes, "chambers", True,
                        {"num_faces": len(arr.faces)})
    if method != "grid":
        raise ValueError("unknown method %r" % method)
    if lmax is None:
        lmax = grid_bound_heuristic(cox)
    exact = False
    sufficient = None
    if cox.dim <= 3:
        sufficient = arrangement_faces(cox).barycenter_denominator_lcm()
        exact = lmax >= sufficient
    union_at = {}
    running = set()
    for level in range(1, lmax + 1):
        running.update(frobenius_level_set(cox, level, workers=workers))
        union_at[level] = len(running)
    # doubling stabilization: the union stopped growing from l to 2l
    stabilized = any(union_at[l] == union_at[2 * l]
                     for l in union_at if 2 * l in union_at)
    return ImagePhi(sorted(running), "grid", exact,
                    {"lmax": lmax, "stabilized": stabilized,
                     "sufficient_lmax": sufficient})


@dataclass
class BRStratification:
    """Faces grouped by their phi value, with the induced closure poset
    on strata (S <= S' iff some face of S lies in the closure of a face
    of S')."""

    arrangement: object
    classes: list
    class_faces: dict
    order: frozenset

    @property
    def num_strata(self):
        return len(self.classes)

    def to_json(self):
        return {
            "num_strata": self.num_strata,
            "strata": [
                {"class": c.to_json(),
                 "faces": [
                     {"dim": self.arrangement.faces[i].dim,
                      "barycenter": [str(x) for x in
                                     self.arrangement.faces[i].barycenter]}
                     for i in self.class_faces[c]]}
                for c in self.classes],
            "order_pairs": sorted([list(p) for p in
                                   ((self.classes.index(a), self.classes.index(b))
                                    for a, b in self.order)]),
        }


def br_stratification(cox):
    """Level-set stratification of the torus by phi (d <= 3)."""
    arr = arrangement_faces(cox)
    by_class = {}
    face_class = {}
    for f in arr.faces:
        c = phi_eval(cox, f.barycenter)
        by_class.setdefault(c, []).append(f.idx)
        face_class[f.idx] = c
    classes = sorted(by_class)
    order = set()
    for lo, hi in arr.closure:
        a, b = face_class[lo], face_class[hi]
        if a != b:
            order.add((a, b))
    return BRStratification(arr, classes, by_class, frozenset(order))
