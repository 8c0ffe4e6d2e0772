"""Rational simplicial fans and their Cox exact-sequence data.

A fan is given by primitive ray generators and index sets of maximal
cones.  Rays are canonically sorted on ingestion so that derived group
presentations and reports are deterministic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .exact import QuotientGroup, elementary_divisors, rank, saturation
from .polyhedra import cones_relint_intersect, in_relint


class FanFormatError(ValueError):
    """Raised for syntactically malformed fan data."""


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple

    @staticmethod
    def from_data(dim, rays, max_cones):
        if not isinstance(dim, int) or dim < 0:
            raise FanFormatError("dim must be a nonnegative integer")
        clean = []
        for r in rays:
            r = tuple(r)
            if len(r) != dim or not all(isinstance(x, int) for x in r):
                raise FanFormatError("ray %r does not fit dimension %d" % (r, dim))
            clean.append(r)
        order = sorted(range(len(clean)), key=lambda i: clean[i])
        remap = {old: new for new, old in enumerate(order)}
        sorted_rays = tuple(clean[i] for i in order)
        cones = []
        for c in max_cones:
            if any(not (isinstance(i, int) and 0 <= i < len(clean)) for i in c):
                raise FanFormatError("cone %r references missing ray" % (list(c),))
            idx = tuple(sorted(remap[i] for i in c))
            if len(set(idx)) != len(idx):
                raise FanFormatError("cone %r repeats a ray" % (list(c),))
            cones.append(idx)
        return Fan(dim, sorted_rays, tuple(sorted(set(cones))))

    @staticmethod
    def from_json(data):
        if not isinstance(data, dict):
            raise FanFormatError("fan JSON must be an object")
        for key in ("dim", "rays", "max_cones"):
            if key not in data:
                raise FanFormatError("fan JSON missing field %r" % key)
        return Fan.from_data(data["dim"], data["rays"], data["max_cones"])

    def to_json(self):
        return {"dim": self.dim,
                "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    def cones(self):
        """All cones of the fan as sorted index tuples, including the
        zero cone, ordered by (dimension, indices)."""
        faces = {()}
        for c in self.max_cones:
            for k in range(1, len(c) + 1):
                faces.update(itertools.combinations(c, k))
        return sorted(faces, key=lambda f: (len(f), f))

    def cone_rays(self, cone):
        return [self.rays[i] for i in cone]


@dataclass
class ConeLattices:
    cone: tuple
    ray_lattice: list
    saturated_lattice: list
    multiplicity: int


def cone_lattices(fan, cone):
    cone = tuple(sorted(cone))
    if cone not in set(fan.cones()):
        raise ValueError("unknown cone %r" % (list(cone),))
    rays = fan.cone_rays(cone)
    if not rays:
        return ConeLattices(cone, [], [], 1)
    A = [[r[i] for r in rays] for i in range(fan.dim)]
    divs = elementary_divisors(A)
    mult = 1
    for d in divs:
        mult *= d
    sat = saturation(rays, fan.dim)
    return ConeLattices(cone, [tuple(r) for r in rays], sat, mult)


@dataclass
class FanDiagnostics:
    is_valid: bool
    is_simplicial: bool
    is_smooth: bool
    is_complete: bool
    krull_dim: int
    multiplicities: dict
    violations: list
    check_mode: str   # "exact" for d <= 3, else "probabilistic"

    def to_json(self):
        return {
            "is_valid": self.is_valid,
            "is_simplicial": self.is_simplicial,
            "is_smooth": self.is_smooth,
            "is_complete": self.is_complete,
            "krull_dim": self.krull_dim,
            "multiplicities": {",".join(map(str, k)): v
                               for k, v in self.multiplicities.items()},
            "violations": list(self.violations),
            "check_mode": self.check_mode,
        }


def _relint_sample(rays, rng):
    d = len(rays[0])
    coeffs = [Fraction(rng.randint(1, 17), rng.randint(1, 7)) for _ in rays]
    return tuple(sum(c * Fraction(r[i]) for c, r in zip(coeffs, rays))
                 for i in range(d))


def validate_fan(fan, seed=0, samples=20):
    """Structural diagnostics for a fan.

    Pairwise disjointness of relative interiors is decided exactly for
    d <= 3 (Fourier-Motzkin); in higher dimension it degrades to seeded
    random relint sampling and the verdict is labeled probabilistic.
    """
    violations = []
    for i, r in enumerate(fan.rays):
        if all(x == 0 for x in r):
            violations.append("ray %d is zero" % i)
        elif not exact.is_primitive(r):
            violations.append("ray %d = %r is not primitive" % (i, list(r)))
    if len(set(fan.rays)) != len(fan.rays):
        violations.append("duplicate rays")

    is_simplicial = True
    for c in fan.max_cones:
        rays = fan.cone_rays(c)
        if rays and rank(rays) != len(rays):
            is_simplicial = False
            violations.append("cone %r has dependent rays" % (list(c),))

    mults = {}
    is_smooth = is_simplicial
    if is_simplicial:
        for c in fan.cones():
            mults[c] = cone_lattices(fan, c).multiplicity
            if mults[c] != 1:
                is_smooth = False

    check_mode = "exact" if fan.dim <= 3 else "probabilistic"
    if is_simplicial and not violations:
        cones = [c for c in fan.cones() if c]
        if check_mode == "exact":
            for a, b in itertools.combinations(cones, 2):
                if cones_relint_intersect(fan.cone_rays(a), fan.cone_rays(b), fan.dim):
                    violations.append(
                        "cones %r and %r have overlapping relative interiors"
                        % (list(a), list(b)))
        else:
            rng = random.Random(seed)
            for a in cones:
                for _ in range(samples):
                    p = _relint_sample(fan.cone_rays(a), rng)
                    for b in cones:
                        if b != a and in_relint(fan.cone_rays(b), p):
                            violations.append(
                                "cones %r and %r have overlapping relative "
                                "interiors (sampled)" % (list(a), list(b)))

    is_complete = _is_complete(fan) if (is_simplicial and not violations) else False
    is_valid = not violations
    return FanDiagnostics(is_valid, is_simplicial, is_smooth and is_valid,
                          is_complete, fan.dim, mults, violations, check_mode)


def _is_complete(fan):
    d = fan.dim
    if d == 0:
        return True
    if not fan.max_cones or any(len(c) != d for c in fan.max_cones):
        return False
    # every facet of a maximal cone must be shared by exactly two of them
    facet_count = {}
    for c in fan.max_cones:
        for f in itertools.combinations(c, d - 1):
            facet_count[f] = facet_count.get(f, 0) + 1
    return all(v == 2 for v in facet_count.values())


@dataclass
class CoxData:
    """The lattice maps of the Cox presentation: beta (rays as columns),
    beta_dual (rays as rows, the map M -> Mtilde), and the class group
    Ghat = Z^n / im(beta_dual) with quotient map mu = normal_form."""

    fan: Fan
    beta: tuple
    beta_dual: tuple
    ghat: QuotientGroup
    spans: bool

    @property
    def dim(self):
        return self.fan.dim

    @property
    def n_rays(self):
        return len(self.fan.rays)

    def mu(self, v):
        return self.ghat.normal_form(v)


def cox_data(fan):
    d = fan.dim
    n = len(fan.rays)
    beta = tuple(tuple(fan.rays[j][i] for j in range(n)) for i in range(d))
    beta_dual = tuple(tuple(r) for r in fan.rays)
    relations = [tuple(fan.rays[i][j] for i in range(n)) for j in range(d)]
    ghat = QuotientGroup(n, relations)
    spans = bool(fan.rays) and rank(fan.rays) == d
    if d == 0:
        spans = True
    return CoxData(fan, beta, beta_dual, ghat, spans)
