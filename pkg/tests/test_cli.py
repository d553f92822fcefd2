import json
import subprocess
import sys

from dissipent.cli import main


def run_cli(args):
    return main(list(args))


def test_sweep_to_file(tmp_path):
    out = tmp_path / "osc.csv"
    rc = run_cli(
        [
            "sweep", "--model", "oscillator", "--alpha-min", "0.01",
            "--alpha-max", "0.3", "--alpha-points", "30",
            "--omega0", "1.0", "--omega-c", "100.0", "--output", str(out),
        ]
    )
    assert rc == 0
    text = out.read_text()
    assert text.startswith("# dissipent sweep\n")
    assert "\r" not in text  # LF endings
    body = [l for l in text.splitlines() if not l.startswith("#")]
    assert body[0].split(",")[0] == "alpha"
    assert len(body) == 31


def test_sweep_json_format(tmp_path):
    out = tmp_path / "osc.json"
    rc = run_cli(
        [
            "sweep", "--model", "oscillator", "--alpha-min", "0.01",
            "--alpha-max", "0.3", "--alpha-points", "30",
            "--format", "json", "--output", str(out),
        ]
    )
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["model"] == "oscillator"
    assert len(doc["rows"]) == 30


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "model": "spin-boson",
                "alpha_min": 0.01,
                "alpha_max": 0.4,
                "n_points": 40,
                "fixed": {"delta0": 1.0, "lambda0": 100.0},
            }
        )
    )
    out = tmp_path / "sb.csv"
    rc = run_cli(
        ["sweep", "--config", str(cfg), "--lambda0", "50.0", "--output", str(out)]
    )
    assert rc == 0
    assert "# lambda0 = 50" in out.read_text()


def test_exit_code_config_error(capsys):
    rc = run_cli(["sweep", "--model", "oscillator", "--alpha-min", "1.0", "--alpha-max", "0.1"])
    assert rc == 2
    assert "config error" in capsys.readouterr().err


def test_exit_code_regime_error(capsys):
    rc = run_cli(["regime-map", "--s", "1.5"])
    assert rc == 4
    assert "regime error" in capsys.readouterr().err


def test_kink_subcommand(tmp_path):
    out = tmp_path / "kink.json"
    rc = run_cli(
        [
            "kink", "--model", "spin-boson", "--alpha-min", "0.0005",
            "--alpha-max", "1.1995", "--alpha-points", "1200",
            "--delta0", "1.0", "--lambda0", "100.0",
            "--column", "sigma_x", "--output", str(out),
        ]
    )
    assert rc == 0
    doc = json.loads(out.read_text())
    assert abs(float(doc["location"]) - 0.5) <= 2e-3


def test_kink_none_is_null(tmp_path):
    out = tmp_path / "kink.json"
    rc = run_cli(
        [
            "kink", "--model", "free-particle", "--alpha-min", "0.1",
            "--alpha-max", "2.0", "--alpha-points", "100",
            "--output", str(out),
        ]
    )
    assert rc == 0
    assert out.read_text().strip() == "null"


def test_oracle_subcommand(tmp_path):
    out = tmp_path / "oracle.csv"
    rc = run_cli(
        ["oracle", "--model", "spin-boson", "--sigma-x", "0.5", "--output", str(out)]
    )
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("observable,")
    assert lines[1].split(",")[0] == "S"


def test_preset_list(capsys):
    rc = run_cli(["preset", "--list"])
    assert rc == 0
    names = capsys.readouterr().out.split()
    assert "fig1-oscillator" in names and "subohmic-map" in names


def test_preset_regime_map(tmp_path):
    out = tmp_path / "map.csv"
    rc = run_cli(["preset", "subohmic-map", "--output", str(out)])
    assert rc == 0
    assert "Localized" in out.read_text()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dissipent.cli", "preset", "--list"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "fig1-spinboson" in proc.stdout


def test_preset_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run_cli(["preset", "fig1-oscillator", "--output", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
