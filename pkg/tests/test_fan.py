import pytest

from toric_rouquier.fan import Fan, FanFormatError, cone_lattices, cox_data, validate_fan


def test_rays_sorted_and_remapped():
    fan = Fan.from_data(2, [(0, 1), (1, 0)], [(0, 1)])
    # lex sort puts (0,1) before (1,0); cone indices follow the new order
    assert fan.rays == ((0, 1), (1, 0))
    fan2 = Fan.from_data(2, [(1, 0), (0, 1)], [(0, 1)])
    assert fan.rays == fan2.rays
    assert fan.max_cones == fan2.max_cones


def test_json_round_trip(p2):
    again = Fan.from_json(p2.to_json())
    assert again == p2


def test_from_json_rejects_garbage():
    with pytest.raises(FanFormatError):
        Fan.from_json({"rays": []})
    with pytest.raises(FanFormatError):
        Fan.from_json({"dim": 2, "rays": [[1]], "max_cones": [[0]]})
    with pytest.raises(FanFormatError):
        Fan.from_json({"dim": 2, "rays": [[1, 0]], "max_cones": [[3]]})


def test_cones_include_faces(p2):
    cones = p2.cones()
    assert () in cones
    assert (0,) in cones and (1,) in cones and (2,) in cones
    assert len([c for c in cones if len(c) == 2]) == 3


def test_validate_smooth_complete(p2, p1xp1, hirzebruch1):
    for fan in (p2, p1xp1, hirzebruch1):
        d = validate_fan(fan)
        assert d.is_valid and d.is_smooth and d.is_complete and d.is_simplicial


def test_validate_singular(p112):
    d = validate_fan(p112)
    assert d.is_valid and d.is_complete
    assert not d.is_smooth
    mults = d.multiplicities
    assert max(mults.values()) == 2


def test_validate_affine(a1):
    d = validate_fan(a1)
    assert d.is_valid
    assert not d.is_complete


def test_validate_overlap_rejected():
    # two 2-cones whose relative interiors overlap
    fan = Fan.from_data(2, [(1, 0), (0, 1), (1, 1)], [(0, 1), (0, 2)])
    d = validate_fan(fan)
    assert not d.is_valid
    assert d.violations


def test_validate_nonprimitive_ray():
    fan = Fan.from_data(1, [(2,)], [(0,)])
    d = validate_fan(fan)
    assert not d.is_valid


def test_cone_lattices(p112):
    from toric_rouquier.exact import lattice_contains
    mults = {c: cone_lattices(p112, c).multiplicity for c in p112.cones()}
    assert max(mults.values()) == 2
    sing = [c for c, m in mults.items() if m == 2][0]
    lat = cone_lattices(p112, sing)
    # the saturated lattice strictly contains the ray lattice
    assert all(lattice_contains(lat.saturated_lattice, r) for r in lat.ray_lattice)
    assert any(not lattice_contains(lat.ray_lattice, b)
               for b in lat.saturated_lattice)


def test_cox_data_p2(p2):
    cox = cox_data(p2)
    assert cox.ghat.describe() == {"torsion_orders": [], "free_rank": 1}
    assert cox.spans
    # beta sends e_i to the i-th ray
    assert [tuple(r) for r in cox.beta] == list(zip(*[list(r) for r in p2.rays]))


def test_cox_data_p112(p112):
    cox = cox_data(p112)
    # class group of P(1,1,2) is Z (weights 1,1,2)
    assert cox.ghat.describe() == {"torsion_orders": [], "free_rank": 1}


def test_cox_data_nonspanning():
    fan = Fan.from_data(2, [(1, 0)], [(0,)])
    cox = cox_data(fan)
    assert not cox.spans
    # Z^1 -> Z^2 has cokernel Z on the class-group side computation
    assert cox.ghat.describe()["free_rank"] == 0
