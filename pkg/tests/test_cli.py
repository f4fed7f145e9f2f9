import json
import subprocess
import sys

import pytest

from hyperbound.cli import main, run


def call(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def envelope(capsys, *argv):
    code, out = call(capsys, *argv)
    return code, json.loads(out)


def test_bound_main(capsys):
    code, res = envelope(capsys, "bound", "main", "--ex", "-1", "--ey", "-1", "--belyi", "1")
    assert code == 0 and res["status"] == "ok"
    assert res["payload"]["bound"] == f"{10**338 * 2**28}/1"
    assert res["payload"]["approx"] == "2.68435456e+346"


def test_bound_subcommands(capsys):
    code, res = envelope(capsys, "bound", "affine-arithmetic", "--ex", "-1")
    assert res["payload"]["bound"] == f"{10**300 * 2**14}/1"
    code, res = envelope(capsys, "bound", "isogeny", "--case", "non-arithmetic", "--ex", "-3", "--ey", "-1")
    assert res["payload"]["deg_pi_X"]["value"] == "42/1" and res["payload"]["deg_pi_Y"]["value"] == "126/1"
    code, res = envelope(capsys, "bound", "isogeny", "--case", "arithmetic-projective", "--gx", "2", "--gy", "2")
    assert res["payload"]["deg_pi_X"]["value"] == f"{512 * 10**48}/1"
    code, res = envelope(capsys, "bound", "isogeny", "--case", "arithmetic-affine", "--gx", "0", "--ex", "-1")
    assert res["payload"]["cover_degree"]["value"] == "4/1"
    code, res = envelope(capsys, "bound", "dfs", "--h", "0", "--g", "0", "--deg", "17")
    assert res["payload"]["height_bound"]["lo"] == "0/1" == res["payload"]["height_bound"]["hi"]
    code, res = envelope(capsys, "bound", "dfs", "--h", "0", "--g", "2", "--deg", "1", "--sharp", "--gy", "2")
    assert code == 0
    code, res = envelope(capsys, "bound", "belyi-height", "--deg", "2")
    assert res["payload"]["bound"] == f"{64 * 10**9}/1"
    code, res = envelope(capsys, "bound", "pullback", "--belyi", "3", "--deg-pi", "42")
    assert res["payload"]["bound"] == "126/1"


def test_certificate_replay_and_check(capsys, tmp_path):
    code, res = envelope(capsys, "certificate", "replay", "--case", "non-arithmetic",
                         "--gx", "0", "--gy", "0", "--ex", "-1", "--ey", "-1", "--belyi", "1", "--precision", "256")
    assert code == 0 and res["payload"]["verified"] is True
    assert res["payload"]["final"] == f"{10**338 * 2**28}/1"
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(res["payload"]))
    code, res = envelope(capsys, "certificate", "check", "--file", str(path))
    assert code == 0 and res["payload"]["reverified"] is True


def test_verify_commands(capsys):
    code, res = envelope(capsys, "verify", "hurwitz42")
    assert res["payload"]["minimum"] == "1/42"
    assert res["payload"]["witnesses"] == [{"g": 0, "r": 0, "cones": [2, 3, 7]}]
    assert any(r["t"] == -2 and r["cones"] == 4 and r["minimum"] == "1/6" for r in res["payload"]["trace"])
    code, res = envelope(capsys, "verify", "proof-steps", "--gmax", "5", "--summary")
    assert code == 0 and res["payload"]["unknown"] == 0 and res["payload"]["passed"]
    code, res = envelope(capsys, "verify", "odlyzko", "--nmax", "10")
    assert code == 0 and len(res["payload"]["items"]) == 11


def test_dessins_enumerate(capsys, tmp_path):
    code, out = call(capsys, "dessins", "enumerate", "--degree", "2")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert all(json.loads(ln)["d"] == 2 for ln in lines)
    path = tmp_path / "d3.jsonl"
    code, res = envelope(capsys, "dessins", "enumerate", "--degree", "3", "--out", str(path), "--jobs", "2")
    assert res["payload"]["count"] == 7
    assert len(path.read_text().splitlines()) == 8
    code, res = envelope(capsys, "dessins", "enumerate", "--degree", "9")
    assert code == 1 and res["status"] == "error" and res["payload"] is None


def test_shimizu_commands(capsys):
    code, res = envelope(capsys, "shimizu", "consistency", "--field", "Q", "--d1", "1", "--d2", "1", "--e", "1/6")
    assert res["payload"]["verdict"] == "consistent"
    code, res = envelope(capsys, "shimizu", "consistency", "--field", "Q", "--d1", "1", "--d2", "1", "--e", "1/5")
    assert res["payload"]["verdict"] == "inconsistent"
    code, res = envelope(capsys, "shimizu", "covolume", "--field", "qsqrt5")
    assert code == 0 and "covolume" in res["payload"]


def test_unknown_status_exit_code(capsys, tmp_path):
    path = tmp_path / "wide.json"
    path.write_text(json.dumps({"n": 1, "dF": 1, "zeta2": {"lo": "4/3", "hi": "3/1"},
                                "prime_norms": [], "B": None, "ramified": []}))
    code, res = envelope(capsys, "shimizu", "consistency", "--field", str(path), "--d1", "1", "--d2", "1",
                         "--e", "1/6")
    assert code == 2 and res["status"] == "unknown"


@pytest.mark.parametrize("argv", [
    ["bound", "main", "--ex", "0", "--ey", "-1", "--belyi", "1"],
    ["bound", "main", "--ex", "x", "--ey", "-1", "--belyi", "1"],
    ["bound", "main", "--ex", "-1"],
    ["bound", "frobnicate"],
    ["verify", "hurwitz42", "--bogus"],
    ["shimizu", "covolume", "--field", "/nonexistent.json"],
    ["certificate", "replay", "--case", "arithmetic-projective", "--gx", "1", "--gy", "2", "--ex", "0",
     "--ey", "-2", "--belyi", "1"],
])
def test_error_paths(capsys, argv):
    code, res = envelope(capsys, *argv)
    assert code == 1 and res["status"] == "error" and res["payload"] is None and res["diagnostics"]


def test_output_is_deterministic(capsys):
    argv = ["certificate", "replay", "--case", "arithmetic-projective", "--gx", "3", "--gy", "2",
            "--ex", "-4", "--ey", "-2", "--belyi", "5"]
    assert call(capsys, *argv) == call(capsys, *argv)
    a = call(capsys, "dessins", "enumerate", "--degree", "5", "--jobs", "1")
    b = call(capsys, "dessins", "enumerate", "--degree", "5", "--jobs", "2")
    assert a == b


def test_precision_env_var(monkeypatch):
    monkeypatch.setenv("HYPERBOUND_PRECISION", "64")
    res = run(["bound", "dfs", "--h", "0", "--g", "1", "--deg", "1"])
    assert res.status == "ok"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperbound", "verify", "hurwitz42", "--brief"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["minimum"] == "1/42"
