import json

import pytest

from toric_rouquier import cli


def write_fan(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


@pytest.fixture
def p2_file(tmp_path):
    return write_fan(tmp_path, "p2.json",
                     {"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
                      "max_cones": [[0, 1], [0, 2], [1, 2]]})


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_validate_ok(capsys, p2_file):
    code, data = run_cli(capsys, "validate", p2_file)
    assert code == 0
    assert data["is_valid"] and data["is_smooth"]


def test_validate_invalid_fan(capsys, tmp_path):
    bad = write_fan(tmp_path, "bad.json",
                    {"dim": 2, "rays": [[1, 0], [0, 1], [1, 1]],
                     "max_cones": [[0, 1], [0, 2]]})
    code, data = run_cli(capsys, "validate", bad)
    assert code == 3
    assert not data["is_valid"]


def test_parse_errors(capsys, tmp_path):
    code, _ = run_cli(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{nope")
    code, _ = run_cli(capsys, "validate", str(garbled))
    assert code == 2
    not_a_fan = write_fan(tmp_path, "notafan.json", {"rays": []})
    code, _ = run_cli(capsys, "validate", not_a_fan)
    assert code == 2


def test_phi_and_image(capsys, p2_file):
    code, data = run_cli(capsys, "phi", p2_file, "--point", "1/3,1/3")
    assert code == 0
    assert data == {"torsion": [], "free": [1]}
    code, data = run_cli(capsys, "image-phi", p2_file)
    assert code == 0
    assert data["count"] == 3 and data["exact"]


def test_phi_bad_point(capsys, p2_file):
    code, _ = run_cli(capsys, "phi", p2_file, "--point", "x,y")
    assert code == 2
    code, _ = run_cli(capsys, "phi", p2_file, "--point", "1/2")
    assert code == 2


def test_frobenius(capsys, p2_file):
    code, data = run_cli(capsys, "frobenius", p2_file, "--level", "3")
    assert code == 0
    assert data["count"] == 3


def test_strata(capsys, p2_file):
    code, data = run_cli(capsys, "strata", p2_file)
    assert code == 0
    assert data["num_strata"] == 3


def test_skeleton_member(capsys, p2_file):
    code, data = run_cli(capsys, "skeleton", "member", p2_file,
                         "--x", "0,0", "--xi=-1,-1", "--mode", "stack")
    assert code == 0
    assert data["member"]


def test_skeleton_subset(capsys, tmp_path):
    coarse = write_fan(tmp_path, "coarse.json",
                       {"dim": 2, "rays": [[0, 1], [2, -1]],
                        "max_cones": [[0, 1]]})
    fine = write_fan(tmp_path, "fine.json",
                     {"dim": 2, "rays": [[0, 1], [2, -1], [1, 0]],
                      "max_cones": [[0, 2], [1, 2]]})
    code, data = run_cli(capsys, "skeleton", "subset", coarse, fine,
                         "--coarse-mode", "stack", "--fine-mode", "stack")
    assert code == 0
    assert data["status"] == "refuted"
    assert data["witness"] == {"x": ["1/2", "0"], "xi": ["-1", "0"]}


def test_report_and_svg(capsys, tmp_path, p2_file):
    out = tmp_path / "report.json"
    svg = tmp_path / "strat.svg"
    code = cli.main(["report", p2_file, "-o", str(out), "--svg", str(svg)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["schema"] == "toric-rouquier/1"
    assert data["rouquier"]["agree"]
    text = svg.read_text()
    assert text.startswith("<svg") and "polygon" in text


def test_report_determinism_across_parallelism(tmp_path, p2_file):
    outs = []
    for workers in ("1", "8"):
        out = tmp_path / ("r%s.json" % workers)
        assert cli.main(["report", p2_file, "-o", str(out),
                         "--parallel", workers]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_cw_subcommand(capsys, tmp_path):
    from toric_rouquier.incidence import torus_cw
    p = tmp_path / "t2.json"
    p.write_text(json.dumps(torus_cw(2).to_json()))
    code, data = run_cli(capsys, "cw", str(p))
    assert code == 0
    assert data["loewy_length_A"] == data["loewy_length_A_dual"] == 3
    assert data["hilbert_identity"]
    assert data["generation_time"]["matches_dimension"]
