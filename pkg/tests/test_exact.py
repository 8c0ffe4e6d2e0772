import random

import pytest

from toric_rouquier.exact import (QuotientGroup, det,
                                  invert, is_primitive, kernel_basis,
                                  lattice_contains, mat_mul, rank, saturation,
                                  smith_normal_form, solve_linear,
                                  vector_content)


def is_unimodular(M):
    return abs(det([list(r) for r in M])) == 1


def check_snf(A):
    s = smith_normal_form(A)
    assert mat_mul(mat_mul(s.U, A), s.V) == [list(r) for r in s.D]
    assert is_unimodular(s.U)
    assert is_unimodular(s.V)
    assert mat_mul(s.U, s.U_inv) == [[int(i == j) for j in range(len(s.U))]
                                     for i in range(len(s.U))]
    d = list(s.diagonal)
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        if b:
            assert a and b % a == 0
        # once a zero appears, the rest are zero
        if a == 0:
            assert b == 0
    return s


def test_snf_row_vector():
    s = check_snf([[1, -1]])
    assert list(s.diagonal) == [1]


def test_snf_coprime_diagonal():
    s = check_snf([[2, 0], [0, 3]])
    assert list(s.diagonal) == [1, 6]


def test_snf_zero_and_identity():
    assert list(check_snf([[0, 0], [0, 0]]).diagonal) == [0, 0]
    assert list(check_snf([[1, 0], [0, 1]]).diagonal) == [1, 1]


def test_snf_random_matches_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as snf_oracle
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        s = check_snf(A)
        oracle = snf_oracle(sympy.Matrix(A))
        diag = [abs(oracle[i, i]) for i in range(min(m, n))]
        assert list(s.diagonal) == diag


def test_kernel_basis():
    K = kernel_basis([[1, 1, 1]])
    assert len(K) == 2
    for v in K:
        assert sum(v) == 0
    assert kernel_basis([[1, 0], [0, 1]]) == []


def test_saturation_doubled_ray():
    # span of (2, 0) saturates to the full axis
    sat = saturation([(2, 0)], 2)
    assert lattice_contains(sat, (1, 0))
    assert not lattice_contains(sat, (0, 1))


def test_saturation_rank_two():
    sat = saturation([(2, 0), (0, 3)], 2)
    assert lattice_contains(sat, (1, 0))
    assert lattice_contains(sat, (0, 1))


def test_lattice_contains():
    basis = [(2, 0), (0, 2)]
    assert lattice_contains(basis, (4, -2))
    assert not lattice_contains(basis, (1, 0))
    assert lattice_contains([], (0, 0))
    assert not lattice_contains([], (1, 0))


def test_solve_linear():
    sol = solve_linear([[1, 1], [1, -1]], [2, 0])
    assert sol is not None
    x, null = sol
    assert list(x) == [1, 1]
    assert null == []
    assert solve_linear([[1, 0], [1, 0]], [0, 1]) is None


def test_invert_and_rank():
    inv = invert([[2, 1], [1, 1]])
    assert mat_mul([[2, 1], [1, 1]], inv) == [[1, 0], [0, 1]]
    assert rank([[1, 2], [2, 4]]) == 1


def test_quotient_group_torsion():
    # Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6
    g = QuotientGroup(2, [(2, 0), (0, 3)])
    desc = g.describe()
    assert desc["torsion_orders"] == [6]
    assert desc["free_rank"] == 0
    assert g.normal_form((2, 3)) == g.zero
    assert g.normal_form((1, 0)) != g.zero


def test_quotient_group_free():
    # Z^3 / <(1,1,1)> = Z^2
    g = QuotientGroup(3, [(1, 1, 1)])
    desc = g.describe()
    assert desc["torsion_orders"] == []
    assert desc["free_rank"] == 2
    assert g.normal_form((1, 1, 1)) == g.zero
    assert g.normal_form((2, 1, 1)) == g.normal_form((1, 0, 0))


def test_quotient_normal_form_is_canonical():
    rng = random.Random(3)
    g = QuotientGroup(2, [(4, 2), (0, 6)])
    for _ in range(100):
        v = [rng.randint(-20, 20) for _ in range(2)]
        shift = [rng.choice([(4, 2), (0, 6), (-4, -2)])]
        w = [a + b for a, b in zip(v, shift[0])]
        assert g.normal_form(v) == g.normal_form(w)
        assert g.lift(g.normal_form(v)) is not None


def test_gclass_ordering_and_json():
    g = QuotientGroup(2, [(2, 0)])
    c = g.normal_form((1, 5))
    assert c.to_json() == {"torsion": [1], "free": [5]}
    assert sorted([g.normal_form((1, 1)), g.normal_form((0, 0))]) == \
        [g.normal_form((0, 0)), g.normal_form((1, 1))]


def test_content_primitive():
    assert vector_content((4, 6)) == 2
    assert is_primitive((3, 5))
    assert not is_primitive((2, 4))
