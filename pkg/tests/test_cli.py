import json

from toricpoints.cli import main, parse_divisor, parse_surface
from toricpoints.fan import p2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lambda_p2(capsys):
    code, out, _ = run(capsys, "lambda", "--surface", "P2")
    assert code == 0
    assert "lambda = -1/4" in out
    assert "-9" in out


def test_lambda_json(capsys):
    code, out, _ = run(capsys, "lambda", "--surface", "F2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == "-1/2"


def test_cohomology_command(capsys):
    code, out, _ = run(
        capsys, "cohomology", "--surface", "P2", "--divisor", "2H", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {"h0": 6, "h1": 0, "h2": 0, "chi": 6}


def test_intersect_shorthand(capsys):
    code, out, _ = run(
        capsys, "intersect", "--surface", "F1", "--divisor", "C0", "--curve", "C0"
    )
    assert code == 0
    assert "D.E = -1" in out


def test_intersect_coeff_vector(capsys):
    code, out, _ = run(
        capsys,
        "intersect",
        "--surface",
        "F1",
        "--divisor",
        "[3,1,0,0]",
        "--curve",
        "27,26,0,0",
    )
    assert code == 0
    assert "D.E = 79" in out


def test_check_toric(capsys):
    code, out, _ = run(
        capsys, "check-toric", "--surface", "P2", "--curve", "4H", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["degree_bound"] == "16/9"
    assert data["e_max"] == 1
    assert data["lambda_value"] == "-1/4"


def test_check_toric_strict_failure(capsys):
    # cubic: C + K is principal, hypothesis fails
    code, _, _ = run(
        capsys, "check-toric", "--surface", "P2", "--curve", "3H", "--strict"
    )
    assert code == 1


def test_plane_command(capsys):
    code, out, _ = run(
        capsys, "plane", "--d", "8", "--delta", "0", "--e", "7", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 1 and data["degB"] == 1
    assert data["e_bound"] == "15/2"


def test_hirzebruch_example_command(capsys):
    code, out, _ = run(capsys, "hirzebruch-example", "--n", "26", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["C2"] == 728
    assert data["h1_D_minus_C"] == 1
    assert data["surjectivity_fails"] is True


def test_json_output_deterministic(capsys):
    _, out1, _ = run(capsys, "check-toric", "--surface", "P2", "--curve", "9H", "--json")
    _, out2, _ = run(capsys, "check-toric", "--surface", "P2", "--curve", "9H", "--json")
    assert out1 == out2


def test_bad_surface_exits_2(capsys):
    code, _, err = run(capsys, "lambda", "--surface", "P5")
    assert code == 2
    assert "error" in err


def test_bad_divisor_length_exits_2(capsys):
    code, _, _ = run(
        capsys, "cohomology", "--surface", "P2", "--divisor", "1,2,3,4"
    )
    assert code == 2


def test_surface_from_json_file(tmp_path, capsys):
    path = tmp_path / "fan.json"
    path.write_text(json.dumps({"rays": [[1, 0], [0, 1], [-1, 1], [0, -1]]}))
    code, out, _ = run(capsys, "lambda", "--surface", str(path))
    assert code == 0
    assert "lambda = -1/4" in out


def test_builtin_descriptor_file(tmp_path, capsys):
    path = tmp_path / "fan.json"
    path.write_text(json.dumps({"builtin": "hirzebruch", "m": 3}))
    code, out, _ = run(capsys, "lambda", "--surface", str(path))
    assert code == 0
    assert "lambda = -3/4" in out


def test_malformed_json_file_exits_2(tmp_path, capsys):
    path = tmp_path / "fan.json"
    path.write_text("{not json")
    code, _, _ = run(capsys, "lambda", "--surface", str(path))
    assert code == 2


def test_parse_divisor_shorthands():
    fan = p2()
    assert parse_divisor(fan, "4H").coeffs == (4, 0, 0)
    assert parse_divisor(fan, "H").coeffs == (1, 0, 0)
    f1 = parse_surface("F1")
    assert parse_divisor(f1, "26C0+27F").coeffs == (27, 26, 0, 0)
    assert parse_divisor(f1, "C0+3F").coeffs == (3, 1, 0, 0)
    assert parse_divisor(f1, "-F").coeffs == (-1, 0, 0, 0)


def test_selftest_command(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out
    for name in [
        "hrr-vs-count",
        "serre-duality",
        "pairing",
        "lambda-hirzebruch",
        "remark-inequality",
        "positive-representation",
    ]:
        assert f"PASS {name}" in out
