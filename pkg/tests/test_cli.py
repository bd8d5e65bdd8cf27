"""End-to-end tests for the command line interface."""

import json

import pytest

from eulermagic import cli
from eulermagic.matrices import parse_matrix_text
from eulermagic.poly import parse_poly

from conftest import FIXTURES


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_proper_fixture(capsys):
    code, out, _ = run_cli(capsys, "verify", str(FIXTURES / "euler4.txt"))
    assert code == 0
    assert "gamma: 8515" in out
    assert "proper: true" in out


def test_verify_improper_fixture_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", str(FIXTURES / "five5_1.txt"))
    assert code == 0
    assert "proper: false" in out
    assert "distinct_squares: 24" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", str(FIXTURES / "euler4.txt"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma"] == "8515"
    assert payload["euler_magic"] is True


def test_verify_non_magic_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n0 1\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", str(bad))
    assert code == 1
    assert "euler_magic: false" in out


def test_verify_malformed_exits_two(tmp_path, capsys):
    bad = tmp_path / "ragged.txt"
    bad.write_text("1 2\n3\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "verify", str(bad))
    assert code == 2
    assert "error" in err


def test_verify_missing_file_exits_two(capsys):
    code, _, err = run_cli(capsys, "verify", "no-such-file.txt")
    assert code == 2
    assert "error" in err


def test_family_showcase_point(capsys):
    code, out, _ = run_cli(capsys, "family", "-55", "-11", "-27", "-148")
    assert code == 0
    assert "X: 23088" in out
    assert "proper: true" in out
    matrix_lines = [
        line for line in out.splitlines()
        if len(line.split()) == 8 and not line.startswith("right:")
    ]
    printed = parse_matrix_text("\n".join(matrix_lines[:8]))
    fixture = parse_matrix_text((FIXTURES / "family8.txt").read_text(encoding="utf-8"))
    neg = tuple(tuple(-x for x in row) for row in fixture.entries)
    assert printed.entries in (fixture.entries, neg)


def test_family_json(capsys):
    code, out, _ = run_cli(capsys, "family", "0", "0", "0", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["X"] == "31"
    assert payload["report"]["euler_magic"] is True


def test_family_degenerate_exits_two(capsys):
    code, _, err = run_cli(capsys, "family", "0", "0", "0", "0")
    assert code == 2
    assert "error" in err


def test_family_accepts_negative_rationals(capsys):
    code, out, _ = run_cli(capsys, "family", "1/2", "3", "-2", "7")
    assert code == 0
    assert "euler_magic: true" in out


def test_prove3_text(capsys):
    code, out, _ = run_cli(capsys, "prove3")
    assert code == 0
    assert out.count("PASS") == 4
    assert "AXIOM" in out


def test_prove3_json(capsys):
    code, out, _ = run_cli(capsys, "prove3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [entry["status"] for entry in payload] == [
        "PASS", "PASS", "PASS", "PASS", "AXIOM",
    ]


def test_prove3_negative_control(capsys, monkeypatch):
    # sanity check that a failing identity would be visible in the exit code
    from eulermagic.cayley import CertificateLine

    def broken():
        return [CertificateLine("main-identity", "FAIL", "1")]

    monkeypatch.setattr(cli, "nonexistence_certificate", broken)
    code, out, _ = run_cli(capsys, "prove3")
    assert code == 1


def test_perm_five(capsys):
    code, out, _ = run_cli(capsys, "perm", "5")
    assert code == 0
    assert "images: 2 1 3 5 4" in out
    assert "gamma: 1" in out
    assert "euler_magic: true" in out


def test_perm_three_exits_two(capsys):
    code, _, err = run_cli(capsys, "perm", "3")
    assert code == 2
    assert "error" in err


def test_search5_stream_shape(capsys):
    code, out, _ = run_cli(
        capsys, "search5", "--seed", "3", "--iterations", "40",
        "--numerator-bound", "6", "--denominator-bound", "3",
    )
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["summary"] is True
    assert summary["iterations"] == 40
    for line in lines[:-1]:
        candidate = json.loads(line)
        assert "matrix" in candidate and "score" in candidate


def test_search5_requires_seed(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["search5", "--iterations", "5"])
    assert info.value.code == 2


def test_search8_supplied_solution(capsys):
    code, out, _ = run_cli(
        capsys, "search8", "--left", "0", "1", "1", "1", "1", "1", "-1", "5",
        "--partial", "3", "-2", "-4", "5", "6",
        "--solution", "13/15", "-14/15", "-23/5",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[-1])["hits"] == 1
    candidate = json.loads(lines[0])
    assert candidate["score"] == 64
    assert candidate["gamma"] == "786656"


def test_search8_improper_left_exits_two(capsys):
    code, _, err = run_cli(
        capsys, "search8", "--left", "1", "1", "1", "1", "1", "1", "1", "1",
        "--partial", "1", "2", "3", "4", "5",
    )
    assert code == 2
    assert "error" in err


def test_forms_all_ones_factorization(capsys):
    code, out, _ = run_cli(capsys, "forms", "1", "1", "1", "1", "1", "1", "1", "1")
    assert code == 0
    a_line = next(line for line in out.splitlines() if line.startswith("A: "))
    variables = ("p", "q", "r", "s", "t", "u", "v", "w")
    a_poly = parse_poly(a_line[3:], variables)
    p, q, r, s, t, u, v, w = (
        parse_poly(name, variables) for name in variables
    )
    assert a_poly == 16 * (p + q + t + u) * (r + s + v + w)


def test_forms_restricted_left_prints_elimination(capsys):
    code, out, _ = run_cli(
        capsys, "forms", "2", "1", "1", "4", "2", "1", "1", "-2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["degree_one_restriction"] is True
    assert "F" in payload and "x" in payload and "y" in payload


def test_cli_determinism_across_workers(capsys):
    args = [
        "search5", "--seed", "2024", "--iterations", "50",
        "--numerator-bound", "9", "--denominator-bound", "4",
    ]
    code1 = cli.main(args + ["--workers", "1"])
    out1 = capsys.readouterr().out
    code2 = cli.main(args + ["--workers", "3"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
