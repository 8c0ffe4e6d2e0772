"""Exact rational polyhedral primitives.

Fourier-Motzkin feasibility for small systems of linear constraints
(with strict inequalities) and membership tests for simplicial cones.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import solve_linear

EQ = "eq"
LE = "le"   # a.x <= b
LT = "lt"   # a.x <  b


def _normalize(coeffs, rel, rhs):
    """Scale a constraint to primitive integer form (positive scale only)."""
    denoms = [Fraction(c).denominator for c in coeffs] + [Fraction(rhs).denominator]
    scale = 1
    for d in denoms:
        scale = scale * d // gcd(scale, d)
    ints = [int(Fraction(c) * scale) for c in coeffs]
    r = int(Fraction(rhs) * scale)
    g = 0
    for x in ints + [r]:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
        r //= g
    return tuple(ints), rel, r


def fm_feasible(constraints, nvars):
    """Exact feasibility of a system of linear constraints over Q^nvars.

    Each constraint is (coeffs, rel, rhs) with rel in {"eq", "le", "lt"}
    meaning coeffs . x rel rhs.  Equalities are removed by substitution,
    the rest by Fourier-Motzkin elimination.
    """
    eqs = []
    ineqs = []
    for coeffs, rel, rhs in constraints:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rel == EQ:
            eqs.append((coeffs, rhs))
        else:
            ineqs.append((coeffs, rel, rhs))

    # Gaussian substitution of equalities.
    while eqs:
        coeffs, rhs = eqs.pop()
        j = next((k for k, c in enumerate(coeffs) if c != 0), None)
        if j is None:
            if rhs != 0:
                return False
            continue
        inv = 1 / coeffs[j]
        sol = [-c * inv for c in coeffs]   # x_j = rhs*inv + sum sol_k x_k (k != j)
        sol_rhs = rhs * inv
        def subst(cs, b):
            f = cs[j]
            if f == 0:
                return cs, b
            out = [c + f * s for c, s in zip(cs, sol)]
            out[j] = Fraction(0)
            return out, b - f * sol_rhs
        eqs = [subst(cs, b) for cs, b in eqs]
        ineqs = [(subst(cs, b)[0], rel, subst(cs, b)[1]) for cs, rel, b in ineqs]

    cons = {}

    def add(coeffs, rel, rhs):
        key, rel, rhs = _normalize(coeffs, rel, rhs)
        old = cons.get(key)
        if old is None or (rhs, rel == LE) < (old[1], old[0] == LE):
            cons[key] = (rel, rhs)

    for cs, rel, b in ineqs:
        add(cs, rel, b)

    for j in range(nvars):
        if not any(key[j] != 0 for key in cons):
            continue
        lowers, uppers, rest = [], [], []
        for key, (rel, rhs) in cons.items():
            if key[j] > 0:
                uppers.append((key, rel, rhs))
            elif key[j] < 0:
                lowers.append((key, rel, rhs))
            else:
                rest.append((key, rel, rhs))
        cons = {}
        for key, rel, rhs in rest:
            add(key, rel, rhs)
        for lk, lrel, lb in lowers:
            for uk, urel, ub in uppers:
                a = -lk[j]      # > 0
                c = uk[j]       # > 0
                coeffs = [c * x + a * y for x, y in zip(lk, uk)]
                rhs = c * lb + a * ub
                rel = LT if (lrel == LT or urel == LT) else LE
                add(coeffs, rel, rhs)

    # After eliminating every variable only constant constraints remain.
    for key, (rel, rhs) in cons.items():
        if rel == LE and rhs < 0:
            return False
        if rel == LT and rhs <= 0:
            return False
    return True


def cone_coords(rays, x):
    """Coordinates of x in the (independent) ray basis of a simplicial
    cone, or None if x is outside the linear span."""
    if not rays:
        return () if all(Fraction(c) == 0 for c in x) else None
    d = len(rays[0])
    A = [[rays[k][i] for k in range(len(rays))] for i in range(d)]
    res = solve_linear(A, x)
    if res is None:
        return None
    lam, null = res
    # rays independent => unique solution
    return tuple(lam)


def in_cone(rays, x):
    lam = cone_coords(rays, x)
    return lam is not None and all(c >= 0 for c in lam)


def in_relint(rays, x):
    lam = cone_coords(rays, x)
    if lam is None:
        return False
    if not rays:
        return True   # zero cone: relint is {0}, and cone_coords checked x == 0
    return all(c > 0 for c in lam)


def cones_relint_intersect(rays_a, rays_b, dim):
    """Whether the relative interiors of two simplicial cones meet.

    Decided exactly: feasibility of sum(l_i a_i) = sum(m_j b_j) with all
    l_i, m_j >= 1 (strictness rescaled away by homogeneity).
    """
    if not rays_a or not rays_b:
        # relint of the zero cone is {0}, which lies in another relint
        # only if that cone is the zero cone too
        return not rays_a and not rays_b
    na, nb = len(rays_a), len(rays_b)
    nv = na + nb
    constraints = []
    for i in range(dim):
        coeffs = [rays_a[k][i] for k in range(na)] + [-rays_b[k][i] for k in range(nb)]
        constraints.append((coeffs, EQ, 0))
    for k in range(nv):
        coeffs = [0] * nv
        coeffs[k] = -1
        constraints.append((coeffs, LE, -1))
    return fm_feasible(constraints, nv)
