import json
import os

import pytest

from ncsurf.cli import main
from ncsurf.presets import cubic_sklyanin_presentation, sklyanin_tensor


@pytest.fixture
def tensor_file(tmp_path):
    path = tmp_path / "tensor.json"
    path.write_text(json.dumps(sklyanin_tensor(1, 2, 3).to_json()))
    return str(path)


@pytest.fixture
def presentation_file(tmp_path):
    path = tmp_path / "pres.json"
    path.write_text(json.dumps(cubic_sklyanin_presentation(1, 2, 3).to_json()))
    return str(path)


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_check_command(capsys, tensor_file):
    rc, out = run_cli(capsys, "check", tensor_file)
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True and data["elliptic"] is True


def test_check_degenerate_exit_code(capsys, tmp_path):
    w = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    w[0][0][0] = 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "quadratic", "w": w}))
    rc, out = run_cli(capsys, "check", str(path))
    assert rc == 2
    assert json.loads(out)["passed"] is False


def test_relations_command(capsys, tensor_file):
    rc, out = run_cli(capsys, "relations", tensor_file)
    assert rc == 0
    data = json.loads(out)
    assert data["dim"] == 3 and len(data["basis"]) == 3


def test_algebra_command(capsys, presentation_file):
    rc, out = run_cli(capsys, "algebra", presentation_file)
    assert rc == 0
    data = json.loads(out)
    assert data["dims"]["0,3"] == 6


def test_hh_command(capsys, tensor_file):
    rc, out = run_cli(capsys, "hh", tensor_file)
    assert rc == 0
    assert json.loads(out)["h"] == [1, 0, 2, 0]


def test_classify_command(capsys, presentation_file):
    rc, out = run_cli(capsys, "classify", presentation_file)
    assert rc == 0
    data = json.loads(out)
    assert data["verdict"] == "Q1" and data["segre"] == "[1,1,1,1]"


def test_segre_command(capsys, tmp_path):
    pencil = {
        "M": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
        "N": [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "3", "0"], ["0", "0", "0", "4"]],
    }
    path = tmp_path / "pencil.json"
    path.write_text(json.dumps(pencil))
    rc, out = run_cli(capsys, "segre", str(path))
    assert rc == 0
    assert json.loads(out)["symbol"] == "[1,1,1,1]"


def test_run_preset(capsys):
    rc, out = run_cli(capsys, "run", "preset:skew-plane:q=2")
    assert rc == 0
    data = json.loads(out)
    assert data["point_scheme"]["verdict"] == "P4"
    assert data["hochschild"]["h"] == [1, 2, 4, 0]
    assert data["table_check"]["match"] is True


def test_run_report_byte_stable(capsys, tensor_file):
    rc1, out1 = run_cli(capsys, "run", tensor_file)
    rc2, out2 = run_cli(capsys, "run", tensor_file)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_discover_deterministic(capsys, tmp_path):
    out_path = tmp_path / "cat.json"
    rc, out1 = run_cli(capsys, "discover", "--kind", "plane", "--trials", "12", "--seed", "5", "--out", str(out_path))
    assert rc == 0
    rc, out2 = run_cli(capsys, "discover", "--kind", "plane", "--trials", "12", "--seed", "5")
    assert out1 == out2
    saved = json.loads(out_path.read_text())
    assert saved["seed"] == 5 and saved["trials"] == 12


def test_discover_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("NCSURF_SEED", "5")
    rc, out1 = run_cli(capsys, "discover", "--kind", "plane", "--trials", "12")
    assert json.loads(out1)["seed"] == 5


def test_presets_listing(capsys):
    rc, out = run_cli(capsys, "presets")
    names = json.loads(out)["presets"]
    assert "commutative-plane" in names and "commutative-quadric" in names


def test_pretty_output(capsys):
    rc, out = run_cli(capsys, "--pretty", "run", "preset:commutative-plane")
    assert rc == 0
    assert "hochschild" in out and "{" not in out.splitlines()[0]


def test_error_reporting(capsys, tmp_path):
    missing = str(tmp_path / "nope.json")
    rc = main(["check", missing])
    err = capsys.readouterr().err
    assert rc == 1
    assert "check" in err


def test_run_presentation_file(capsys, presentation_file):
    rc, out = run_cli(capsys, "run", presentation_file)
    assert rc == 0
    data = json.loads(out)
    assert data["input"]["type"] == "presentation"
    assert "recovered_tensor" in data
    assert data["point_scheme"]["verdict"] == "Q1"
    # the quadric-side elliptic flag is decided by the point scheme
    assert data["nondegeneracy"]["elliptic"] is True


def test_run_linear_quadric_not_elliptic(capsys):
    rc, out = run_cli(capsys, "run", "preset:commutative-quadric")
    data = json.loads(out)
    assert data["point_scheme"]["verdict"] == "Linear"
    assert data["nondegeneracy"]["elliptic"] is False


def test_discover_identical_across_kernel_modes(tmp_path):
    import subprocess
    import sys

    code = (
        "import json; from ncsurf.pipeline import discover; "
        "print(json.dumps(discover('quadratic', trials=20, seed=3), sort_keys=True))"
    )
    env = dict(os.environ)
    env.pop("NCSURF_PURE", None)
    fast = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    env["NCSURF_PURE"] = "1"
    pure = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert fast.returncode == 0 and pure.returncode == 0, (fast.stderr, pure.stderr)
    assert fast.stdout == pure.stdout
