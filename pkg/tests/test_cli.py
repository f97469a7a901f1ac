import io
import json
import subprocess
import sys

import pytest

from tlzero.cli import main, parse_range


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_dims_row():
    code, text = run(["dims", "4..6"])
    assert code == 0
    row = next(line for line in text.splitlines() if line.startswith("n=4:"))
    assert "W (2,3,1)" in row


def test_exact_six_passes():
    code, text = run(["exact", "6"])
    assert code == 0
    assert "failed: 0" in text


def test_jones_trefoil_string():
    code, text = run(["jones", "1,1,1", "--strands", "2"])
    assert code == 0
    assert "V(t) = t + t^3 - t^4" in text


def test_jones_negative_letters():
    code, text = run(["jones", "--strands", "2", "--word=-1,-1,-1"])
    assert code == 0
    assert "V(t) = -t^-4 + t^-3 + t^-1" in text


def test_failing_campaign_exits_one():
    code, text = run(["hw", "4", "--quiet"])
    assert code == 1
    assert "hw_kernel_is_standard" in text


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["dims", "6..4"])
    assert e.value.code == 2
    assert main(["exact", "5"], io.StringIO()) == 2
    assert "error" in capsys.readouterr().err


def test_range_parser():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("8") == [8]


def test_json_report(tmp_path):
    path = tmp_path / "r.json"
    code, _ = run(["gram", "6", "--json", str(path)])
    assert code == 0
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["tool"] == "tlzero" and data["all_pass"] is True
    keys = [(c["claim_id"], c["parameters"].get("ell", 0), c["parameters"].get("m", 0)) for c in data["claims"]]
    assert keys == sorted(keys)
    for c in data["claims"]:
        assert set(c) >= {"claim_id", "anchor", "parameters", "expected", "computed", "pass", "runtime_ms"}
        assert c["pass"] == (c["expected"] == c["computed"])
        assert c["runtime_ms"] is None


def test_timing_fills_runtime(tmp_path):
    path = tmp_path / "t.json"
    run(["gram", "4", "--json", str(path), "--timing"])
    data = json.loads(path.read_text())
    assert all(isinstance(c["runtime_ms"], float) for c in data["claims"])


def test_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    _, text_a = run(["specht", "6", "--seed", "5", "--json", str(a)])
    _, text_b = run(["specht", "6", "--seed", "5", "--json", str(b)])
    assert text_a == text_b
    assert a.read_bytes() == b.read_bytes()


def test_basis_draw():
    code, text = run(["basis", "4", "2", "--draw"])
    assert code == 0
    assert "dim W_2^4 = 3" in text
    assert "\\__/" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tlzero", "dims", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "n=2:" in proc.stdout
