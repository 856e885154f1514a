import json

import pandas as pd
import pytest

from app.cli.config import load_config, parse_config
from app.cli.main import main
from app.core.errors import ConfigError

MORSE_JOB = {"family": "M", "params": {"h": "10/3", "mu": "1"}}


def write_job(tmp_path, job, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(job), encoding="utf-8")
    return str(path)


def run_cli(tmp_path, command, job, out="out", *extra):
    out_dir = tmp_path / out
    code = main([command, "--config", write_job(tmp_path, job), "--out", str(out_dir), *extra])
    return code, out_dir


# --- config parsing -------------------------------------------------------------------

def test_parse_config_defaults():
    config = parse_config(MORSE_JOB)
    assert config.family == "M"
    assert config.seeds == []
    assert config.checks == []
    assert not config.half_integer_mode


def test_top_level_params_are_hoisted():
    config = parse_config({"family": "M", "h": "10/3", "mu": 1})
    assert config.params == {"h": "10/3", "mu": 1}


def test_seed_shorthand():
    config = parse_config({**MORSE_JOB, "seeds": [{"overshoot": 7}, {"kind": "overshoot", "v": 8}]})
    assert [str(r) for r in config.refs] == ["overshoot(7)", "overshoot(8)"]


@pytest.mark.parametrize(
    "job, location",
    [
        ({**MORSE_JOB, "bogus": 1}, "bogus"),
        ({"family": "M", "params": {"h": 3.3, "mu": "1"}}, "params"),
        ({**MORSE_JOB, "seeds": [{"kind": "sideways", "v": 1}]}, "seeds[0].kind"),
        ({**MORSE_JOB, "checks": ["nodeless", "vibes"]}, "checks"),
        ({**MORSE_JOB, "numeric": {"grid": -1}}, "numeric.grid"),
    ],
)
def test_invalid_config_reports_location(job, location):
    with pytest.raises(ConfigError) as info:
        parse_config(job)
    assert info.value.location == location


def test_unknown_family_is_a_config_error():
    with pytest.raises(ConfigError) as info:
        parse_config({"family": "Q", "params": {}})
    assert info.value.location == "family"


def test_load_config_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError) as info:
        load_config(path)
    assert info.value.location.startswith("line 1")


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")


# --- commands ---------------------------------------------------------------------------

def test_extend_prints_only_the_report_path(tmp_path, capsys):
    job = {**MORSE_JOB, "seeds": [{"overshoot": 7}, {"overshoot": 8}]}
    code, out_dir = run_cli(tmp_path, "extend", job)
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == str(out_dir / "report.json")

    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["command"] == "extend"
    assert report["params"] == {"h": "10/3", "mu": "1"}
    assert report["system"]["ell"] == 14
    assert report["system"]["nodeless"] is True
    assert [c["name"] for c in report["checks"]] == ["nodeless"]
    assert (out_dir / "potential.csv").exists()


def test_potential_csv_has_extended_column(tmp_path):
    job = {**MORSE_JOB, "seeds": [{"overshoot": 7}]}
    code, out_dir = run_cli(tmp_path, "extend", job)
    assert code == 0
    frame = pd.read_csv(out_dir / "potential.csv")
    assert list(frame.columns) == ["x", "U", "U_ext"]
    assert len(frame) == 1001


def test_seed_outside_its_range_exits_two(tmp_path, capsys):
    job = {**MORSE_JOB, "seeds": [{"overshoot": 5}]}
    code, out_dir = run_cli(tmp_path, "extend", job)
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "seeds[0]" in captured.err
    assert not (out_dir / "report.json").exists()


def test_invalid_config_exits_two(tmp_path, capsys):
    code, _ = run_cli(tmp_path, "verify", {**MORSE_JOB, "bogus": 1})
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("invalid config: bogus:")


def test_classify_command(tmp_path):
    job = {**MORSE_JOB, "seeds": [{"overshoot": 7}]}
    code, out_dir = run_cli(tmp_path, "classify", job)
    assert code == 0
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    (check,) = report["checks"]
    assert check["name"] == "classify"
    assert check["data"]["types"] == {"overshoot(7)": "II"}


def test_unavailable_equivalence_is_a_failed_check(tmp_path, capsys):
    job = {
        "family": "hst",
        "params": {"h": "7/2", "mu": "1"},
        "half_integer_mode": True,
        "seeds": [{"overshoot": 8}],
    }
    code, out_dir = run_cli(tmp_path, "equivalence", job)
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out.strip() == str(out_dir / "report.json")
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["passed"] is False
    assert "equivalence unavailable" in report["checks"][0]["detail"]


def test_equivalence_command_passes_for_rosen_morse(tmp_path):
    job = {
        "family": "RM",
        "params": {"h": "7/2", "mu": "1"},
        "half_integer_mode": True,
        "seeds": [{"overshoot": 8}],
    }
    code, out_dir = run_cli(tmp_path, "equivalence", job)
    assert code == 0
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["checks"][0]["data"]["dual_degree"] == 0


def test_curve_regions(tmp_path):
    job = {**MORSE_JOB, "curve": {"lo": -2, "hi": 10, "count": 13}}
    code, out_dir = run_cli(tmp_path, "curve", job)
    assert code == 0
    frame = pd.read_csv(out_dir / "curve.csv")
    assert list(frame.columns) == ["n", "E", "region", "discrete"]
    regions = dict(zip(frame["n"], frame["region"]))
    assert regions[0.0] == "a"
    assert regions[3.0] == "a"
    assert regions[5.0] == "-"
    assert regions[7.0] == "b"
    assert regions[-1.0] == "c"
    assert frame["discrete"].sum() == 4


def test_curve_csv_is_deterministic(tmp_path):
    job = {**MORSE_JOB, "curve": {"lo": -2, "hi": 10, "count": 25}}
    run_cli(tmp_path, "curve", job, "first")
    run_cli(tmp_path, "curve", job, "second")
    first = (tmp_path / "first" / "curve.csv").read_bytes()
    second = (tmp_path / "second" / "curve.csv").read_bytes()
    assert first == second


@pytest.mark.slow
def test_spectrum_command(tmp_path):
    code, out_dir = run_cli(tmp_path, "spectrum", MORSE_JOB)
    assert code == 0
    frame = pd.read_csv(out_dir / "spectrum.csv")
    assert list(frame["n"]) == [0, 1, 2, 3]
    assert (frame["abs_err"] < 1e-2).all()


@pytest.mark.slow
def test_verify_command_on_morse(tmp_path, capsys):
    checks = ["nodeless", "isospectral", "shape-invariance"]
    job = {**MORSE_JOB, "seeds": [{"overshoot": 7}, {"overshoot": 8}], "checks": checks}
    code, out_dir = run_cli(tmp_path, "verify", job)
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.strip() == str(out_dir / "report.json")

    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert [c["name"] for c in report["checks"]] == checks
    assert all(c["passed"] for c in report["checks"])
    assert (out_dir / "spectrum.csv").exists()


def test_verify_unavailable_equivalence_exits_one(tmp_path, capsys):
    job = {
        "family": "hst",
        "params": {"h": "7/2", "mu": "1"},
        "half_integer_mode": True,
        "seeds": [{"overshoot": 8}],
        "checks": ["halfint-equivalence"],
    }
    code, out_dir = run_cli(tmp_path, "verify", job)
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out.strip() == str(out_dir / "report.json")
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["passed"] is False
    assert report["checks"][0]["name"] == "halfint-equivalence"
