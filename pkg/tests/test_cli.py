import json

import pytest

from idealtutte.cli import main, parse_ideal_spec
from idealtutte.exactpoly import BivariatePolynomial, latex_is_wellformed, parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tutte_g2_example(capsys, tmp_path):
    code, out, _ = run(
        capsys, "tutte", "--type", "G2", "--roots", "[[3,1],[3,2]]",
        "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert parse_polynomial(out.strip()) == parse_polynomial("x^2 + y^2 + 2x + 2y")


def test_minors_b3(capsys, tmp_path):
    code, out, _ = run(capsys, "minors", "--type", "B", "--rank", "3")
    assert code == 0
    assert out.strip() == "{0, ±1, ±2}"


def test_verify_sweep_exit_zero(capsys, tmp_path):
    code, out, _ = run(
        capsys, "verify", "--type", "A", "--rank", "4", "--all-ideals",
        "--engines", "crapo,oracle", "--no-cache",
    )
    assert code == 0
    assert "verified 42 ideal(s)" in out


def test_roots_listing(capsys):
    code, out, _ = run(capsys, "roots", "--type", "A", "--rank", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 3
    assert rows[0]["height"] == 1


def test_ideals_count(capsys):
    code, out, _ = run(capsys, "ideals", "--type", "G2", "--count-only")
    assert code == 0
    assert out.strip() == "8"


def test_json_round_trip_and_provenance(capsys, tmp_path):
    code, out, _ = run(
        capsys, "tutte", "--type", "B", "--rank", "2", "--full",
        "--format", "json", "--cache-dir", str(tmp_path),
    )
    assert code == 0
    data = json.loads(out)
    poly = BivariatePolynomial.from_json_dict(data)
    assert poly.evaluate(2, 2) == 2 ** 4
    assert data["provenance"]["engine"] == "ffmethod"
    assert data["provenance"]["primes"] == [3, 5, 7]


def test_latex_output_wellformed(capsys, tmp_path):
    code, out, _ = run(
        capsys, "tutte", "--type", "C", "--rank", "6",
        "--boxes", "[[1,4],[2,-6],[4,0]]", "--format", "latex",
        "--cache-dir", str(tmp_path),
    )
    assert code == 0
    assert latex_is_wellformed(out.strip())


def test_cache_determinism(capsys, tmp_path):
    args = (
        "tutte", "--type", "D", "--rank", "6", "--boxes", "[[1,3],[2,6],[4,-5]]",
        "--format", "json", "--cache-dir", str(tmp_path),
    )
    code1, out1, _ = run(capsys, *args)
    cached = list(tmp_path.glob("*.json"))
    assert code1 == 0 and len(cached) == 1
    code2, out2, _ = run(capsys, *args)
    assert code2 == 0
    assert json.loads(out1)["terms"] == json.loads(out2)["terms"]


def test_validation_error_exit_1(capsys):
    code, _, err = run(capsys, "tutte", "--type", "B", "--rank", "6")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "tutte", "--type", "E8", "--rank", "8", "--full")
    assert code == 1
    # bad ideal: names the violating pair
    code, _, err = run(capsys, "tutte", "--type", "G2", "--roots", "[[1,0]]")
    assert code == 1 and "lacks" in err


def test_guard_refusal_exit_2(capsys):
    code, _, err = run(
        capsys, "tutte", "--type", "E6", "--roots", "[[1,2,2,3,2,1]]",
        "--engine", "oracle", "--max-subsets", "1024", "--no-cache",
    )
    assert code == 2 and "guard" in err


def test_ffmethod_rejects_exceptional(capsys):
    code, _, err = run(
        capsys, "tutte", "--type", "G2", "--roots", "[[3,1],[3,2]]",
        "--engine", "ffmethod", "--no-cache",
    )
    assert code == 1 and "exceptional" in err


def test_ideal_file_and_out_file(capsys, tmp_path):
    spec = {"type": "B", "rank": 6, "generating_boxes": [[1, 4], [2, 0], [4, -5]]}
    spec_path = tmp_path / "ideal.json"
    spec_path.write_text(json.dumps(spec))
    out_path = tmp_path / "result.txt"
    code, _, _ = run(
        capsys, "coboundary", "--type", "B", "--ideal-file", str(spec_path),
        "--out", str(out_path), "--no-cache",
    )
    assert code == 0
    got = parse_polynomial(out_path.read_text(), ("q", "t"))
    assert got.evaluate(3, 1) == 3 ** 6


def test_parse_ideal_spec_schema_rejects_junk():
    with pytest.raises(Exception):
        parse_ideal_spec({"type": "B", "rank": 6, "extra": 1})
    with pytest.raises(Exception):
        parse_ideal_spec({"type": "Z"})


def test_charpoly_command(capsys, tmp_path):
    code, out, _ = run(
        capsys, "charpoly", "--type", "G2", "--roots", "[[3,1],[3,2]]",
        "--no-cache",
    )
    assert code == 0
    assert out.strip() == "q^3 - 4q^2 + 3q"
