import io
import json

import pytest

from pairloc.cli import main, parse_session
from pairloc.errors import ParseError

SESSION = """\
ring QQ[x,y,z] order grevlex
ideal I = x^2*y, y^3 - z   # two generators
ideal J = y
ideal K = x^2*y
ideal M = x, y, z
"""


@pytest.fixture()
def session_file(tmp_path):
    path = tmp_path / "session.txt"
    path.write_text(SESSION)
    return str(path)


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_session_fields():
    s = parse_session(SESSION)
    assert s.ring.variables == ("x", "y", "z")
    assert set(s.bindings) == {"I", "J", "K", "M"}


def test_parse_session_errors():
    with pytest.raises(ParseError) as exc:
        parse_session("ideal I = x\n")
    assert "ring not declared" in str(exc.value)
    with pytest.raises(ParseError):
        parse_session("ring QQ[x,x]\n")
    with pytest.raises(ParseError):
        parse_session("ring QQ[x]\nmodule M = x\n")
    with pytest.raises(ParseError) as exc:
        parse_session("ring QQ[x]\nideal I = x + $\n")
    assert exc.value.line == 2


def test_gb_command(session_file):
    code, out, err = run(["gb", "--session", session_file, "--ideal", "I",
                          "--no-timings"])
    assert code == 0
    report = json.loads(out)
    assert report["schemaVersion"] == 1
    assert report["command"] == "gb"
    assert "x^2*y" in report["result"]["generators"]
    assert "timings" not in report


def test_timings_present_by_default(session_file):
    code, out, _ = run(["dim", "--session", session_file, "--ideal", "K"])
    report = json.loads(out)
    assert "timings" in report and report["timings"]["seconds"] >= 0


def test_member_and_radical_member(session_file):
    _, out, _ = run(["member", "--session", session_file, "--ideal", "I",
                     "-f", "x^2*y^4", "--no-timings"])
    assert json.loads(out)["result"]["member"] is True
    _, out, _ = run(["radical-member", "--session", session_file,
                     "--ideal", "K", "-f", "x*y", "--no-timings"])
    assert json.loads(out)["result"]["member"] is True


def test_gamma_command(session_file):
    code, out, _ = run(["gamma", "--session", session_file, "--I", "J",
                        "--J", "K", "--K", "K", "--no-timings"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["generators"]
    assert report["citations"] == ["pair-torsion-submodule"]


def test_precondition_exit_code(session_file):
    code, out, err = run(["top-degree", "--session", session_file,
                          "--I", "J", "--J", "J", "--no-timings"])
    assert code == 2
    assert out == ""
    assert "primary" in json.loads(err)["error"]


def test_undefined_ideal_exit_code(session_file):
    code, _, err = run(["gb", "--session", session_file, "--ideal", "Q",
                        "--no-timings"])
    assert code == 2
    assert "undefined ideal" in json.loads(err)["error"]


def test_missing_session_exit_code():
    code, _, err = run(["gb", "--ideal", "I", "--no-timings"])
    assert code == 2


def test_check_command_seeded():
    code, out, _ = run(["check", "--suite", "groebner", "--samples", "10",
                        "--seed", "5", "--no-timings"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["passed"] == 10
    assert report["inputs"]["seed"] == 5


def test_check_env_seed(monkeypatch):
    monkeypatch.setenv("PAIRLOC_SEED", "99")
    _, out, _ = run(["check", "--suite", "torsion-free", "--samples", "5",
                     "--no-timings"])
    assert json.loads(out)["inputs"]["seed"] == 99


def test_pretty_flag(session_file):
    _, out, _ = run(["dim", "--session", session_file, "--ideal", "K",
                     "--no-timings", "--pretty"])
    assert out.startswith("{\n")


def test_cech_command(session_file):
    code, out, _ = run(["cech", "--session", session_file,
                        "--elements", "x;y", "--J", "J", "--K", "K",
                        "--no-timings"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["length"] == 2
    assert "positionZeroKernel" in report["result"]


def test_pair_depth_command(session_file):
    code, out, _ = run(["pair-depth", "--session", session_file, "--I", "M",
                        "--J", "J", "--K", "K", "--no-timings"])
    assert code == 0
    report = json.loads(out)
    assert isinstance(report["result"]["value"], int)
