"""FLTZ skeleton strata on the torus: exact membership, inclusion
checking between skeleta of a fan and its refinement, and the coarsening
relation against the Bondal-Ruan arrangement.

Every stratum pairs a congruence condition on the base torus with the
negated cone in the covector directions.  Two congruence conventions are
supported: stack mode uses the ray generators of the cone, variety mode
the saturation of their span.  They differ exactly on singular cones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import lattice_contains, saturation, solve_linear
from .polyhedra import in_cone, in_relint

MODES = ("variety", "stack")


@dataclass
class SkeletonStratum:
    cone: tuple
    generators: tuple        # negated rays spanning the covector cone
    congruences: tuple       # integer vectors b with <x, b> in Z
    mode: str


@dataclass(frozen=True)
class CotangentPoint:
    base: tuple              # rational lift of a point of M_R / M
    covector: tuple


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError("mode must be one of %r" % (MODES,))


def skeleton_strata(fan, mode):
    """One stratum per cone of the fan; the zero cone carries the zero
    section (no congruences, zero covector)."""
    _check_mode(mode)
    strata = []
    for cone in fan.cones():
        rays = fan.cone_rays(cone)
        if mode == "stack" or not rays:
            lattice = [tuple(r) for r in rays]
        else:
            lattice = [tuple(b) for b in saturation(rays, fan.dim)]
        gens = tuple(tuple(-x for x in r) for r in rays)
        strata.append(SkeletonStratum(cone, gens, tuple(lattice), mode))
    return strata


def _congruences_hold(x, lattice):
    for b in lattice:
        val = sum(Fraction(c) * e for c, e in zip(x, b))
        if val.denominator != 1:
            return False
    return True


def skeleton_member(fan, mode, point, strata=None):
    """Exact membership of a cotangent point in the skeleton: some cone
    must contain the covector in its negated span with the base point
    satisfying that stratum's congruences."""
    x, xi = point.base, point.covector
    if len(x) != fan.dim or len(xi) != fan.dim:
        raise ValueError("point dimensions do not match the fan")
    if strata is None:
        strata = skeleton_strata(fan, mode)
    for st in strata:
        if not st.generators:
            if all(Fraction(c) == 0 for c in xi):
                return True
            continue
        if not in_cone(st.generators, xi):
            continue
        if _congruences_hold(x, st.congruences):
            return True
    return False


@dataclass
class SubsetVerdict:
    status: str              # "proved", "refuted", "unknown"
    witness: CotangentPoint | None
    reason: str
    pair_results: list
    falsifier_samples: int
    falsifier_witness: CotangentPoint | None

    def to_json(self):
        def pt(p):
            if p is None:
                return None
            return {"x": [str(c) for c in p.base],
                    "xi": [str(c) for c in p.covector]}
        return {"status": self.status, "witness": pt(self.witness),
                "reason": self.reason,
                "falsifier_samples": self.falsifier_samples,
                "falsifier_witness": pt(self.falsifier_witness)}


def _cone_contains_cone(fan, inner_rays, outer_rays):
    return all(in_cone(outer_rays, r) for r in inner_rays)


def _barycenter(rays, dim):
    if not rays:
        return (Fraction(0),) * dim
    return tuple(sum(Fraction(r[i]) for r in rays) for i in range(dim))


def _refines(coarse, fine, rng, samples=50):
    """Check that every fine cone sits inside a coarse cone and that the
    coarse support is covered (the latter by seeded sampling)."""
    coarse_cones = coarse.cones()
    for fc in fine.cones():
        fr = fine.cone_rays(fc)
        if not any(_cone_contains_cone(fine, fr, coarse.cone_rays(cc))
                   for cc in coarse_cones):
            return False, "fine cone %r is not contained in any coarse cone" % (list(fc),)
    fine_cones = fine.cones()
    for cc in coarse_cones:
        cr = coarse.cone_rays(cc)
        if not cr:
            continue
        for _ in range(samples):
            coeffs = [Fraction(rng.randint(1, 11), rng.randint(1, 5)) for _ in cr]
            p = tuple(sum(c * Fraction(r[i]) for c, r in zip(coeffs, cr))
                      for i in range(coarse.dim))
            if not any(in_cone(fine.cone_rays(fc), p) for fc in fine_cones):
                return False, ("coarse cone %r is not covered by the fine fan "
                               "near a sampled point" % (list(cc),))
    return True, ""


def _lattice_witness_base(coarse_lattice, b, dim):
    """A rational x with <x, v> in Z for all v in the coarse lattice but
    <x, b> not an integer; exists exactly when b is outside the span or
    outside the generated lattice."""
    basis = list(coarse_lattice)
    if not basis:
        x = [Fraction(0)] * dim
        j = next(i for i, c in enumerate(b) if c != 0)
        x[j] = Fraction(1, 2 * abs(b[j]))
        return tuple(Fraction(c) % 1 for c in x)
    res = solve_linear([[v[i] for v in basis] for i in range(dim)], b)
    if res is None:
        # b outside the span: pick x orthogonal to the lattice with <x,b> = 1/2
        A = [list(v) for v in basis] + [list(b)]
        rhs = [0] * len(basis) + [Fraction(1, 2)]
        sol = solve_linear(A, rhs)
        assert sol is not None
        return tuple(Fraction(c) % 1 for c in sol[0])
    coords, _ = res
    for k, c in enumerate(coords):
        if Fraction(c).denominator != 1:
            break
    else:
        return None   # b lies in the lattice, no witness from this vector
    # solve <x, basis_i> = e_k; then <x, b> = coords_k which is fractional
    A = [list(v) for v in basis]
    rhs = [Fraction(int(i == k)) for i in range(len(basis))]
    sol = solve_linear(A, rhs)
    assert sol is not None
    return tuple(Fraction(c) % 1 for c in sol[0])


def skeleton_subset(coarse, fine, coarse_mode, fine_mode, seed=0,
                    falsifier_samples=1000):
    """Decide whether the coarse fan's skeleton is contained in the fine
    fan's skeleton.

    Exact criterion: for every coarse cone and every fine cone whose
    relative interior lies inside the coarse cone's relative interior,
    the fine congruence lattice must be contained in the coarse one.  A
    seeded randomized falsifier additionally samples skeleton points of
    the coarse side and tests fine membership.
    """
    _check_mode(coarse_mode)
    _check_mode(fine_mode)
    if coarse.dim != fine.dim:
        return SubsetVerdict("unknown", None, "fans live in different ranks",
                             [], 0, None)
    rng = random.Random(seed)
    ok, reason = _refines(coarse, fine, rng)
    if not ok:
        return SubsetVerdict("unknown", None, reason, [], 0, None)

    coarse_strata = {s.cone: s for s in skeleton_strata(coarse, coarse_mode)}
    fine_strata = {s.cone: s for s in skeleton_strata(fine, fine_mode)}
    dim = coarse.dim

    pair_results = []
    witness = None
    for cc in coarse.cones():
        c_lattice = coarse_strata[cc].congruences
        cr = coarse.cone_rays(cc)
        for fc in fine.cones():
            fr = fine.cone_rays(fc)
            if not _cone_contains_cone(fine, fr, cr):
                continue
            bary = _barycenter(fr, dim)
            if not in_relint(cr, bary):
                continue
            missing = [b for b in fine_strata[fc].congruences
                       if not lattice_contains(c_lattice, b)]
            pair_results.append({"coarse_cone": list(cc), "fine_cone": list(fc),
                                 "contained": not missing})
            if missing and witness is None:
                b = missing[0]
                x = _lattice_witness_base(c_lattice, b, dim)
                if x is not None:
                    xi = tuple(-c for c in _barycenter(fr, dim))
                    cand = CotangentPoint(x, xi)
                    if (skeleton_member(coarse, coarse_mode, cand)
                            and not skeleton_member(fine, fine_mode, cand)):
                        witness = cand
    if witness is not None:
        return SubsetVerdict("refuted", witness, "fine congruences not implied",
                             pair_results, 0, None)

    fw = run_falsifier(coarse, fine, coarse_mode, fine_mode,
                       samples=falsifier_samples, seed=seed)
    if fw is not None:
        return SubsetVerdict("refuted", fw, "randomized falsifier found a witness",
                             pair_results, falsifier_samples, fw)
    if all(p["contained"] for p in pair_results):
        return SubsetVerdict("proved", None, "all congruence lattices contained",
                             pair_results, falsifier_samples, None)
    return SubsetVerdict("unknown", None,
                         "lattice containment failed but no witness verified",
                         pair_results, falsifier_samples, None)


def random_skeleton_point(fan, mode, rng, strata=None):
    """A random rational point of the skeleton: pick a stratum, a base
    point satisfying its congruences, and a covector in its cone."""
    if strata is None:
        strata = skeleton_strata(fan, mode)
    st = rng.choice(strata)
    dim = fan.dim
    basis = list(st.congruences)
    if basis:
        A = [[v[i] for v in basis] for i in range(dim)]
        A_t = [list(v) for v in basis]
        rhs = [rng.randint(-3, 3) for _ in basis]
        sol, null = solve_linear(A_t, rhs)
        x = list(sol)
        for nv in null:
            c = Fraction(rng.randint(-12, 12), rng.randint(1, 7))
            x = [a + c * b for a, b in zip(x, nv)]
    else:
        x = [Fraction(rng.randint(-12, 12), rng.randint(1, 7)) for _ in range(dim)]
    lam = [Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in st.generators]
    xi = tuple(sum(l * Fraction(g[i]) for l, g in zip(lam, st.generators))
               for i in range(dim))
    return CotangentPoint(tuple(Fraction(c) % 1 for c in x), xi)


def run_falsifier(coarse, fine, coarse_mode, fine_mode, samples, seed=0):
    """Sample points of the coarse skeleton; return the first that fails
    fine membership, or None."""
    rng = random.Random(seed + 1)
    coarse_strata = skeleton_strata(coarse, coarse_mode)
    fine_strata = skeleton_strata(fine, fine_mode)
    for _ in range(samples):
        p = random_skeleton_point(coarse, coarse_mode, rng, strata=coarse_strata)
        assert skeleton_member(coarse, coarse_mode, p, strata=coarse_strata)
        if not skeleton_member(fine, fine_mode, p, strata=fine_strata):
            return p
    return None


@dataclass
class CoarseningReport:
    ok: bool
    face_results: list
    stratum_results: list

    def to_json(self):
        return {"ok": self.ok,
                "faces_checked": len(self.face_results),
                "strata": self.stratum_results}


def coarsening_check(cox, seed=0, points_per_face=3):
    """Verify the two computable halves of the coarsening relation: phi
    is constant on every arrangement face, and every skeleton congruence
    is generated by arrangement normals already integral on the
    stratum's base locus."""
    from .arrangement import canonical_normal
    from .bondal_ruan import arrangement_faces, phi_eval

    rng = random.Random(seed)
    arr = arrangement_faces(cox)
    face_results = []
    ok = True
    for f in arr.faces:
        ref = phi_eval(cox, f.barycenter)
        same = all(phi_eval(cox, p) == ref
                   for p in arr.face_interior_points(f, points_per_face, rng))
        face_results.append({"face": f.idx, "constant": same})
        ok = ok and same

    stratum_results = []
    normals = [canonical_normal(r) for r in cox.fan.rays] if cox.fan.rays else []
    for st in skeleton_strata(cox.fan, "stack"):
        lattice = list(st.congruences)
        active = [n for n in sorted(set(normals)) if lattice_contains(lattice, n)]
        implied = all(lattice_contains(active, b) for b in lattice)
        stratum_results.append({"cone": list(st.cone), "implied": implied})
        ok = ok and implied
    return CoarseningReport(ok, face_results, stratum_results)
