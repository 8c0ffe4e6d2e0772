import random
from fractions import Fraction


from toric_rouquier.fan import cox_data
from toric_rouquier.skeleton import (CotangentPoint, coarsening_check,
                                     random_skeleton_point, run_falsifier,
                                     skeleton_member, skeleton_strata,
                                     skeleton_subset)
from conftest import make_singular_cone, make_stellar_refinement


def F(a, b=1):
    return Fraction(a, b)


def pt(x, xi):
    return CotangentPoint(tuple(F(c) if not isinstance(c, Fraction) else c
                                for c in x),
                          tuple(F(c) if not isinstance(c, Fraction) else c
                                for c in xi))


def test_strata_counts(p2):
    strata = skeleton_strata(p2, "stack")
    # one stratum per cone: zero cone + 3 rays + 3 two-cones
    assert len(strata) == 7
    zero = [s for s in strata if not s.cone][0]
    assert zero.generators == () and zero.congruences == ()


def test_modes_agree_on_smooth(p2):
    for st_s, st_v in zip(skeleton_strata(p2, "stack"),
                          skeleton_strata(p2, "variety")):
        assert st_s.cone == st_v.cone
        # congruence lattices generate the same subgroup on a smooth fan
        from toric_rouquier.exact import lattice_contains
        for b in st_s.congruences:
            assert lattice_contains(list(st_v.congruences), b)
        for b in st_v.congruences:
            assert lattice_contains(list(st_s.congruences), b)


def test_membership_zero_section(p2):
    assert skeleton_member(p2, "stack", pt((F(1, 7), F(2, 7)), (0, 0)))


def test_membership_p2(p2):
    # covector in -cone((1,0),(0,1)) over an integral base point
    assert skeleton_member(p2, "stack", pt((0, 0), (-1, -1)))
    # same covector over a base violating the congruences
    assert not skeleton_member(p2, "stack", pt((F(1, 2), F(1, 3)), (-1, -1)))
    # covector in -cone((1,0)) needs only the first congruence
    assert skeleton_member(p2, "stack", pt((0, F(1, 3)), (-2, 0)))
    assert not skeleton_member(p2, "stack", pt((F(1, 3), 0), (-2, 0)))
    # (1,1) lies in the negated cone of the ray (-1,-1); its congruence
    # x1 + x2 in Z decides membership
    assert skeleton_member(p2, "stack", pt((0, 0), (1, 1)))
    assert skeleton_member(p2, "stack", pt((F(1, 2), F(1, 2)), (1, 1)))
    assert not skeleton_member(p2, "stack", pt((F(1, 3), F(1, 2)), (1, 1)))


def test_membership_conical(p2):
    rng = random.Random(5)
    for _ in range(50):
        p = random_skeleton_point(p2, "stack", rng)
        for c in (F(2), F(1, 3), F(7, 2)):
            scaled = CotangentPoint(p.base, tuple(c * x for x in p.covector))
            assert skeleton_member(p2, "stack", scaled)


def test_membership_translation(p2):
    rng = random.Random(6)
    for _ in range(50):
        p = random_skeleton_point(p2, "stack", rng)
        shift = tuple(x + rng.randint(-3, 3) for x in p.base)
        assert skeleton_member(p2, "stack", CotangentPoint(shift, p.covector))


def test_subset_variety_mode_proved():
    coarse = make_singular_cone()
    fine = make_stellar_refinement()
    v = skeleton_subset(coarse, fine, "variety", "variety",
                        falsifier_samples=500)
    assert v.status == "proved"
    assert v.falsifier_witness is None


def test_subset_stack_mode_refuted():
    coarse = make_singular_cone()
    fine = make_stellar_refinement()
    v = skeleton_subset(coarse, fine, "stack", "stack")
    assert v.status == "refuted"
    w = v.witness
    assert w.base == (F(1, 2), F(0))
    assert w.covector == (F(-1), F(0))
    # the witness really separates the two skeleta
    assert skeleton_member(coarse, "stack", w)
    assert not skeleton_member(fine, "stack", w)


def test_subset_not_refinement_is_unknown(p2, p1xp1):
    v = skeleton_subset(p2, p1xp1, "stack", "stack", falsifier_samples=10)
    assert v.status == "unknown"


def test_subset_self(p2):
    v = skeleton_subset(p2, p2, "stack", "stack", falsifier_samples=200)
    assert v.status == "proved"


def test_falsifier_finds_stack_witness():
    coarse = make_singular_cone()
    fine = make_stellar_refinement()
    w = run_falsifier(coarse, fine, "stack", "stack", samples=2000)
    assert w is not None
    assert skeleton_member(coarse, "stack", w)
    assert not skeleton_member(fine, "stack", w)


def test_coarsening_check(p2, p112):
    for fan in (p2, p112):
        rep = coarsening_check(cox_data(fan))
        assert rep.ok
        assert all(r["constant"] for r in rep.face_results)
        assert all(r["implied"] for r in rep.stratum_results)
