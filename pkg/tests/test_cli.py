import json

import pytest

from detmult.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--cols", "1,1,2", "--rows", "0,0")
    assert code == 0
    assert json.loads(out) == {
        "e": "5", "lower": "4", "upper": "6", "lowerHolds": True, "upperHolds": True,
        "m": [2, 4], "M": [3, 4], "slackLower": "1", "slackUpper": "1",
    }
    assert out.startswith('{"e":"5","lower":"4","upper":"6","lowerHolds":true,'
                          '"upperHolds":true,"m":[2,4],"M":[3,4]')


def test_pure(capsys):
    code, out, _ = run(capsys, "pure", "--t", "2", "--c", "3", "--d", "1")
    assert code == 0
    assert out.strip() == '{"e":"4","m":[2,3,4],"M":[2,3,4]}'


def test_shifts(capsys):
    code, out, _ = run(capsys, "shifts", "--cols", "2,1,1", "--rows", "0,0")
    assert code == 0
    assert json.loads(out) == {"t": 2, "c": 2, "m": [2, 4], "M": [3, 4]}


def test_shifts_from_pure_triple(capsys):
    code, out, _ = run(capsys, "shifts", "--t", "3", "--c", "4", "--d", "2")
    assert json.loads(out)["m"] == [6, 8, 10, 12]


@pytest.mark.parametrize("extra", [[], ["--enumerate"]])
def test_betti(capsys, extra):
    code, out, _ = run(capsys, "betti", "--cols", "1,1,2", "--rows", "0,0", *extra)
    assert code == 0
    data = json.loads(out)
    assert data["betti"] == [
        {"step": 0, "shift": 0, "count": "1"},
        {"step": 1, "shift": 2, "count": "1"},
        {"step": 1, "shift": 3, "count": "2"},
        {"step": 2, "shift": 4, "count": "2"},
    ]
    assert data["kPolynomial"] == ["1", "0", "-1", "-2", "2"]


def test_betti_pretty(capsys):
    code, out, _ = run(capsys, "betti", "--pretty", "--cols", "1,1,2", "--rows", "0,0")
    assert code == 0
    assert "total:" in out and not out.startswith("{")


def test_betti_enumerate_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "betti", "--enumerate", "--enum-cap", "3",
                       "--cols", "1,1,2", "--rows", "0,0")
    assert code == 1 and "cap" in err
    monkeypatch.setenv("DETMULT_ENUM_CAP", "3")
    code, _, _ = run(capsys, "betti", "--enumerate", "--cols", "1,1,2", "--rows", "0,0")
    assert code == 1


@pytest.mark.parametrize("method", ["auto", "en", "linkage"])
def test_mult(capsys, method):
    code, out, _ = run(capsys, "mult", "--method", method, "--cols", "1,1,2", "--rows", "0,0")
    assert code == 0
    assert json.loads(out) == {"e": "5", "method": method}


def test_input_file(capsys, tmp_path):
    grid = tmp_path / "m.json"
    grid.write_text(json.dumps({"u": [[1, 1, 2], [1, 1, 2]]}))
    vec = tmp_path / "v.json"
    vec.write_text(json.dumps({"cols": [1, 1, 2], "rows": [0, 0]}))
    outs = [run(capsys, "check", "--input", str(p))[1] for p in (grid, vec)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["e"] == "5"


@pytest.mark.parametrize("payload", [
    {"u": [[1, 2], [2, 1]]},
    {"cols": [1, 1]},
    {"cols": [1, "x"], "rows": [0]},
    [1, 2],
    {"u": [[1, 1]], "cols": [1]},
])
def test_bad_input_file(capsys, tmp_path, payload):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(payload))
    code, _, err = run(capsys, "check", "--input", str(p))
    assert code == 1 and err


def test_unreadable_input(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert run(capsys, "check", "--input", str(p))[0] == 1
    assert run(capsys, "check", "--input", str(tmp_path / "missing.json"))[0] == 1


def test_validation_error(capsys):
    code, _, err = run(capsys, "shifts", "--cols", "1", "--rows", "1")
    assert code == 1
    assert "band positivity" in err


@pytest.mark.parametrize("argv", [
    ["shifts"],
    ["shifts", "--cols", "1,2"],
    ["shifts", "--cols", "1, 2", "--rows", "0"],
    ["shifts", "--cols", "1,2", "--rows", "0", "--t", "1", "--c", "2", "--d", "1"],
    ["shifts", "--t", "1", "--c", "2"],
    ["pure", "--cols", "1,2", "--rows", "0"],
    ["mult", "--method", "magic", "--cols", "1", "--rows", "0"],
    ["fuzz", "--trials", "3"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_pure_nonpositive(capsys):
    assert run(capsys, "pure", "--t", "0", "--c", "1", "--d", "1")[0] == 1


FUZZ = ["fuzz", "--trials", "50", "--seed", "7", "--max-t", "5", "--max-c", "5",
        "--max-b", "4", "--max-gap", "3"]


def test_fuzz(capsys):
    code, out, _ = run(capsys, *FUZZ)
    assert code == 0
    data = json.loads(out)
    assert data["trials"] == data["passed"] == 50
    assert data["violations"] == []
    assert list(data)[:5] == ["trials", "passed", "checks", "violations", "minSlack"]
    assert run(capsys, *FUZZ)[1] == out


def test_fuzz_bad_config(capsys):
    argv = ["fuzz", "--trials", "0", "--seed", "1", "--max-t", "1", "--max-c", "1",
            "--max-b", "0", "--max-gap", "0"]
    assert run(capsys, *argv)[0] == 1


def test_fuzz_violation_exit_code(capsys, monkeypatch):
    import detmult.conjecture as mod

    real = mod.run_checks

    def broken(dm, enum_cap=None, shift=0):
        out, report = real(dm, enum_cap, shift)
        out["powerSums"] = False
        return out, report

    monkeypatch.setattr(mod, "run_checks", broken)
    code, out, _ = run(capsys, *FUZZ[:2], "2", *FUZZ[3:])
    assert code == 3
    assert len(json.loads(out)["violations"]) == 2


def test_internal_violation_exit_code(capsys, monkeypatch):
    import detmult.multiplicity as mod

    monkeypatch.setattr(mod, "multiplicity_linkage", lambda dm: 0)
    assert run(capsys, "mult", "--cols", "1,1,2", "--rows", "0,0")[0] == 3


def test_negative_degrees_with_equals_syntax(capsys):
    code, out, _ = run(capsys, "check", "--cols=0,0,1", "--rows=-1,-1")
    assert code == 0
    assert json.loads(out)["e"] == "5"
