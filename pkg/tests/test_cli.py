import json

import pytest

from netalg.cli import load_fixtures, main, parse_generators, reproduce_table
from netalg.field import GF, QQ


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_command(capsys):
    code, out, _ = run(capsys, "hilbert", "x^2; x*y; x*z", "--bound", "6")
    assert code == 0
    assert out.startswith("1,3,3,4,5,6") and "growing" in out


def test_classify_net_command(capsys):
    code, out, _ = run(capsys, "classify-net", "x^2+y*z; x*y; x*z")
    assert (code, out.strip()) == (0, "7a")
    code, out, _ = run(capsys, "--field", "q", "classify-net", "x*y; x*z; y*z")
    assert (code, out.strip()) == (0, "6a")


def test_classify_algebra_command(capsys):
    code, out, _ = run(capsys, "classify-algebra",
                       "x^2+y*z; x*y; x*z; y^3+z^3; m^4")
    assert (code, out.strip()) == (0, "7a.i")


def test_reproduce_all(capsys):
    code, out, _ = run(capsys, "reproduce", "--all")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 11 and all(l.endswith("PASS") for l in lines)


def test_reproduce_single_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "--json", "reproduce", "--table", "G")
    code2, out2, _ = run(capsys, "--json", "reproduce", "--table", "G")
    assert code1 == code2 == 0 and out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == 1 and payload["tables"]["G"]["match"]


def test_ann_and_lex_commands(capsys):
    code, out, _ = run(capsys, "ann", "X*Y*Z")
    assert code == 0 and "x^2; y^2; z^2" in out and "1,3,3,1,0" in out
    code, out, _ = run(capsys, "lex", "1,3,3,1")
    assert code == 0 and "z^4" in out


def test_domain_errors_exit_one(capsys):
    code, _, err = run(capsys, "classify-net", "x^2; x*y")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "hilbert", "x + y^2")
    assert code == 1
    code, _, err = run(capsys, "lex", "1,3,7")
    assert code == 1


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2


def test_parse_generators_with_truncation():
    gens, trunc = parse_generators("x^2; y^2 ; m^4", GF(101))
    assert len(gens) == 2 and trunc == 4


def test_verify_deformations_command(capsys):
    code, out, _ = run(capsys, "verify-deformations", "--trials", "2",
                       "--family", "6c", "--seed", "3")
    assert code == 0 and "6c: pass" in out


def test_separation_command_json(capsys):
    code, out, _ = run(capsys, "--json", "separation", "--target",
                       "1,3,6,3,1", "--samples", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] and payload["bookkeeping"]["dim_UT"] == 16


def test_fixture_listing():
    fx = load_fixtures()
    assert set(fx) == {"CI", "SL1", "A", "B", "C", "D", "E", "G", "H", "J4", "K4"}
    ok, _, _ = reproduce_table("K4", GF(101))
    assert ok
