import logging
from fractions import Fraction

import pytest
import sympy as sp

from app.core.config import Settings
from app.core.logger import logger
from app.core.errors import (
    ConfigError,
    EquivalenceUnavailableError,
    InvalidSeedError,
    NonGenericError,
    SingularExtensionError,
    error_payload,
    exit_code_for,
)
from app.core.schemas import CheckResult, ExtendedSystemOut, IdentityReportOut, RunReport


def test_settings_defaults():
    s = Settings()
    assert s.FD_GRID == pytest.approx(1 / 200)
    assert s.FD_TRUNCATION == 20.0
    assert s.THRESHOLD_MARGIN == 1e-3
    assert s.IDENTITY_MIN_SAMPLES == 64
    assert s.CSV_FLOAT_FORMAT == "%.17g"


def test_settings_read_environment(monkeypatch):
    monkeypatch.setenv("FD_GRID", "0.01")
    monkeypatch.setenv("ENVIRONMENT", "production")
    monkeypatch.setenv("DEBUG", "false")
    s = Settings()
    assert s.FD_GRID == 0.01
    assert s.effective_log_level == "INFO"


def test_exit_codes():
    assert exit_code_for(InvalidSeedError("v=5 outside (20/3, inf)")) == 2
    assert exit_code_for(NonGenericError("h=3")) == 2
    assert exit_code_for(ConfigError("bad", location="seeds[0]")) == 2
    assert exit_code_for(SingularExtensionError("nodes")) == 1
    assert exit_code_for(EquivalenceUnavailableError("hst")) == 1
    assert exit_code_for(RuntimeError("boom")) == 1


def test_error_payload_labels():
    payload = error_payload(InvalidSeedError("overshoot(5) below 2h", seed="overshoot(5)"))
    assert payload["error"] == "invalid seed range"
    assert payload["context"] == {"seed": "overshoot(5)"}

    payload = error_payload(ConfigError("unknown key", location="numeric.grd"))
    assert payload["location"] == "numeric.grd"
    assert payload["detail"] == "numeric.grd: unknown key"

    assert error_payload(ValueError("x"))["error"] == "internal error"


def test_rationals_serialise_as_strings():
    out = IdentityReportOut(identity="x", samples=64, degree_bound=40, max_residual=sp.Rational(0), verdict=True)
    assert out.max_residual == "0"

    system = ExtendedSystemOut(
        family="M",
        params={"h": sp.Rational(10, 3), "mu": Fraction(1, 1)},
        xi_coefficients=[sp.Rational(-7, 3), 2, "1/5"],
        ell=15,
        degree=15,
        nodeless=True,
        root_count=0,
        added_level=None,
    )
    assert system.params == {"h": "10/3", "mu": "1"}
    assert system.xi_coefficients == ["-7/3", "2", "1/5"]


def test_exact_fields_refuse_floats():
    with pytest.raises(ValueError):
        IdentityReportOut(identity="x", samples=1, degree_bound=0, max_residual=0.5, verdict=False)


def test_run_report_verdict_is_conjunction():
    report = RunReport(
        command="verify",
        family="M",
        params={"h": sp.Rational(10, 3)},
        checks=[CheckResult(name="nodeless", passed=True), CheckResult(name="isospectral", passed=False)],
    )
    assert report.passed is False
    assert RunReport(command="curve", family="M").passed is True


def test_run_report_round_trip():
    report = RunReport(
        command="verify",
        family="M",
        params={"h": "10/3", "mu": "1"},
        checks=[CheckResult(name="nodeless", passed=True, detail="0 zero(s)", duration_s=0.25, data={"root_count": 0})],
        artifacts={"spectrum": "out/spectrum.csv"},
    )
    assert RunReport.model_validate_json(report.model_dump_json()) == report


def test_logging_quiets_only_mpmath():
    assert logger.name == "overshoot"
    assert logging.getLogger("mpmath").level == logging.WARNING
    assert logging.getLogger("numexpr").level == logging.NOTSET
