import io
import json
import subprocess
import sys

import pytest

from treebij.cli import main
from treebij.enumerate import gen_labeled
from treebij.core import pv
from treebij.serialize import loads

from conftest import golden


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda *argv, stdin=None: run(capsys, monkeypatch, list(argv), stdin)


# -- count / poly ---------------------------------------------------------------

def test_count(cli):
    assert cli("count", "--family", "forests", "--n", "3")[:2] == (0, "16\n")
    assert cli("count", "--family", "plane_forests", "--n", "1")[1] == "1\n"
    assert cli("count", "--family", "kary", "--n", "5", "--k", "3")[1] == "32760\n"


def test_poly(cli):
    code, out, _ = cli("poly", "--family", "forest", "--n", "2", "--method", "closed")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "1", "2"]
    _, out, _ = cli("poly", "--family", "kary", "--n", "1", "--k", "2")
    assert json.loads(out)["coeffs"] == ["0", "1"]


@pytest.mark.parametrize("n", range(7))
def test_poly_closed_and_brute_byte_identical(cli, n):
    closed = cli("poly", "--family", "forests", "--n", str(n), "--method", "closed")[1]
    brute = cli("poly", "--family", "forests", "--n", str(n), "--method", "brute")[1]
    assert closed.replace("closed", "brute") == brute


def test_poly_recurrence(cli):
    closed = json.loads(cli("poly", "--family", "kary", "--n", "5", "--k", "3")[1])
    rec = json.loads(cli("poly", "--family", "kary", "--n", "5", "--k", "3", "--method", "recurrence")[1])
    assert closed["coeffs"] == rec["coeffs"]


def test_poly_recurrence_wrong_family(cli):
    assert cli("poly", "--family", "forests", "--n", "3", "--method", "recurrence")[0] == 2


# -- verify ---------------------------------------------------------------------

def test_verify_hook_sum(cli):
    code, out, _ = cli("verify", "--check", "postnikov", "--n", "3")
    assert code == 0
    assert out.startswith("PASS") and "16 = 16" in out
    assert cli("verify", "--check", "postnikov", "--n", "1")[0] == 0


def test_verify_bijection_json(cli):
    code, out, _ = cli("verify", "--check", "bijection", "--n", "4", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert any(r["got"] == "2000" for r in report["results"])


@pytest.mark.parametrize("argv", [
    ("verify", "--check", "expanded", "--n", "5"),
    ("verify", "--check", "ode", "--family", "forests"),
    ("verify", "--check", "ode", "--family", "kary", "--k", "3"),
    ("verify", "--check", "functional", "--family", "plane_forests"),
    ("verify", "--check", "functional", "--family", "kary", "--k", "2", "--t0", "3"),
    ("verify", "--check", "special", "--n", "6"),
])
def test_verify_checks_pass(cli, argv):
    code, out, _ = cli(*argv)
    assert code == 0
    assert out and "FAIL" not in out


def test_verify_parallel_matches_serial(cli):
    serial = cli("verify", "--check", "postnikov", "--n", "7")[1]
    parallel = cli("verify", "--check", "postnikov", "--n", "7", "--parallel", "2")[1]
    assert serial == parallel


def test_verify_missing_n(cli):
    assert cli("verify", "--check", "postnikov")[0] == 2


def test_verify_degenerate_t0(cli):
    code, _, err = cli("verify", "--check", "functional", "--family", "forests", "--t0", "1")
    assert code == 2 and "error" in err


def test_verify_failure_exit_code(cli, monkeypatch):
    import treebij.identity as identity
    monkeypatch.setattr(identity, "rhs_postnikov", lambda n, workers=1: 0)
    code, out, _ = cli("verify", "--check", "postnikov", "--n", "3")
    assert code == 1 and out.startswith("FAIL")


# -- enum -----------------------------------------------------------------------

def test_enum_forests(cli):
    code, out, _ = cli("enum", "--family", "forests", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 3


def test_enum_empty(cli):
    assert cli("enum", "--family", "binary", "--n", "0")[1] == ""
    out = cli("enum", "--family", "binary", "--n", "0", "--include-empty")[1]
    assert out.splitlines() == ['{"family":"binary","k":2,"n":0,"parent":[],"slot":[]}']


def test_enum_Dn_matches_weighted_count(cli):
    out = cli("enum", "--family", "binary", "--n", "3", "--constraint", "Dn")[1]
    assert len(out.splitlines()) == sum(2 ** pv(b) for b in gen_labeled("binary", 3))


def test_enum_records_decode(cli):
    out = cli("enum", "--family", "plane_forests", "--n", "3")[1]
    assert [loads(line) for line in out.splitlines()] == list(gen_labeled("plane_forests", 3))


def test_enum_is_deterministic(cli):
    first = cli("enum", "--family", "trees", "--n", "4")[1]
    assert cli("enum", "--family", "trees", "--n", "4")[1] == first


@pytest.mark.parametrize("argv", [
    ("--family", "binary", "--n", "4"),
    ("--family", "kary", "--k", "3", "--n", "3"),
])
def test_enum_parallel_is_byte_identical(cli, argv):
    serial = cli("enum", *argv)[1]
    assert cli("enum", *argv, "--parallel", "3")[1] == serial


def test_enum_ceiling(cli):
    code, _, err = cli("enum", "--family", "forests", "--n", "6", "--ceiling", "10")
    assert code == 2 and "ceiling" in err.lower()
    assert cli("enum", "--family", "binary", "--n", "6", "--ceiling", "10", "--parallel", "2")[0] == 2


def test_enum_requires_family(cli):
    assert cli("enum", "--n", "2")[0] == 2
    assert cli("enum", "--family", "kary", "--n", "2")[0] == 2


# -- map ------------------------------------------------------------------------

def test_map_big_flip_example(cli):
    code, out, _ = cli("map", "--name", "big_flip", stdin=golden("flip_input.json"))
    assert code == 0
    assert out == golden("flip_output.json") + "\n"


def test_map_phi_example(cli):
    code, out, _ = cli("map", "--name", "phi", stdin=golden("flip_output.json"))
    assert code == 0
    assert out == golden("phi_output.json") + "\n"


def test_map_inverse_directions(cli):
    assert cli("map", "--name", "phi", "--direction", "inverse", stdin=golden("phi_output.json"))[1] == \
        golden("flip_output.json") + "\n"
    assert cli("map", "--name", "big_flip", "--direction", "inverse", stdin=golden("flip_output.json"))[1] == \
        golden("flip_input.json") + "\n"


def test_map_full_roundtrip(cli):
    forward = cli("map", "--name", "full", stdin=golden("flip_input.json"))[1]
    back = cli("map", "--name", "full", "--direction", "inverse", stdin=forward)[1]
    assert back == golden("flip_input.json") + "\n"


def test_map_flip_at(cli):
    code, out, _ = cli("map", "--name", "flip_at", "--vertex", "7", stdin=golden("flip_input.json"))
    assert code == 0
    assert loads(out).color(7).value == "w"
    assert cli("map", "--name", "flip_at", stdin=golden("flip_input.json"))[0] == 2


def test_map_domain_violation(cli):
    code, out, err = cli("map", "--name", "big_flip", stdin=golden("flip_output.json"))
    assert code == 1 and out == ""
    assert "is_in_Dn" in err


def test_map_malformed_input(cli):
    assert cli("map", "--name", "phi", stdin="{oops")[0] == 2
    assert cli("map", "--name", "phi", stdin='{"family": "forests", "n": 1, "parent": [1]}')[0] == 2


def test_unknown_family_is_usage_error(cli):
    with pytest.raises(SystemExit) as info:
        cli("count", "--family", "heaps", "--n", "2")
    assert info.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "treebij.cli", "count", "--family", "forests", "--n", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "125\n"
