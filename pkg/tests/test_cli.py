"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from asmlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_triangles(capsys):
    code, out, _ = run(capsys, "count", "triangles", "--bottom", "1,2,3")
    assert code == 0 and out.strip() == "7"


def test_count_triangles_weak(capsys):
    code, out, _ = run(capsys, "count", "triangles", "--bottom", "1,1,2", "--weak")
    assert code == 0 and out.strip().isdigit()


def test_count_trapezoids(capsys):
    code, out, _ = run(capsys, "count", "trapezoids", "--n", "4", "--removed", "", "--top", "")
    assert code == 0 and out.strip() == "42"


def test_count_bad_bottom_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "triangles", "--bottom", "3,1")
    assert code == 2 and "error" in err


def test_count_bad_integers_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "triangles", "--bottom", "1,x")
    assert code == 2


def test_coeff_methods_agree(capsys):
    code_e, out_e, _ = run(capsys, "coeff", "--n", "4", "--s", "2", "--i", "3", "--method", "extract")
    code_b, out_b, _ = run(capsys, "coeff", "--n", "4", "--s", "2", "--i", "3", "--method", "brute")
    assert code_e == code_b == 0
    assert out_e == out_b
    code, out, _ = run(capsys, "coeff", "--n", "4", "--s", "2", "--i", "3", "--method", "both")
    assert code == 0 and "match" in out


def test_table_csv_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--which", "b_nij", "--n", "4")
    _, second, _ = run(capsys, "table", "--which", "b_nij", "--n", "4")
    assert first == second
    assert first.splitlines()[0] == "1,1,0"


def test_table_counts_are_strings_in_json(capsys):
    code, out, _ = run(capsys, "table", "--which", "asm_total", "--n", "25", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(isinstance(v, str) for row in rows for v in row)
    assert int(rows[-1][1]) > 10**50  # huge counts survive exactly


def test_table_jobs_matches_serial(capsys):
    _, serial, _ = run(capsys, "table", "--which", "a_nij", "--n", "4")
    _, parallel, _ = run(capsys, "--jobs", "2", "table", "--which", "a_nij", "--n", "4")
    assert serial == parallel


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n-max", "3")
    assert code == 0
    assert "fail" not in out


def test_verify_theorem7_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem7", "--n-max", "3")
    assert code == 0
    assert all(line.endswith("pass") for line in out.strip().splitlines())


def test_transform_roundtrip(tmp_path, capsys):
    tri = {"kind": "monotone_triangle", "n": 3, "rows_bottom_up": [[1, 2, 3], [1, 3], [2]]}
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(tri))
    code, out, _ = run(capsys, "transform", "--op", "ad", "--in", str(path))
    assert code == 0
    once = json.loads(out)
    path.write_text(out)
    code, out, _ = run(capsys, "transform", "--op", "ad", "--in", str(path))
    assert code == 0
    assert json.loads(out)["rows_bottom_up"] == tri["rows_bottom_up"]


def test_transform_rejects_incomplete(tmp_path, capsys):
    tri = {"kind": "monotone_triangle", "rows_bottom_up": [[2, 3, 5], [3, 4], [3]]}
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(tri))
    code, _, err = run(capsys, "transform", "--op", "rot90", "--in", str(path))
    assert code == 2 and "error" in err


def test_convert_triangle_asm_roundtrip(tmp_path, capsys):
    tri = {"kind": "monotone_triangle", "rows_bottom_up": [[1, 2, 3], [1, 3], [2]]}
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(tri))
    code, out, _ = run(capsys, "convert", "--in", str(path), "--to", "asm")
    assert code == 0
    assert json.loads(out)["rows"] == [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
    back = tmp_path / "asm.json"
    back.write_text(out)
    code, out, _ = run(capsys, "convert", "--in", str(back), "--to", "triangle")
    assert code == 0
    assert json.loads(out)["rows_bottom_up"] == tri["rows_bottom_up"]


def test_convert_trapezoid_roundtrip(tmp_path, capsys):
    trap = {
        "kind": "monotone_trapezoid",
        "d": 2,
        "m": 4,
        "rows_bottom_up": [[1, 3, 4, 6], [2, 4, 5], [3, 4]],
        "ambient_n": 6,
    }
    path = tmp_path / "trap.json"
    path.write_text(json.dumps(trap))
    code, out, _ = run(capsys, "convert", "--in", str(path), "--to", "partial_asm")
    assert code == 0
    back = tmp_path / "pasm.json"
    back.write_text(out)
    code, out, _ = run(
        capsys, "convert", "--in", str(back), "--to", "trapezoid", "--bottom", "1,3,4,6"
    )
    assert code == 0
    assert json.loads(out)["rows_bottom_up"] == trap["rows_bottom_up"]


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "transform", "--op", "ad", "--in", "/nonexistent.json")
    assert code == 2 and "error" in err


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
