"""
Job orchestration: build the extension a config names, run the requested
checks and write the report plus CSV artefacts.
"""
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from app.cli import emit
from app.cli.config import JobConfig, config_params, config_spec
from app.core.config import settings
from app.core.errors import ExtensionError
from app.core.logger import logger
from app.core.schemas import CheckResult, RunReport
from app.extension.spec import ExtensionSpec
from app.extension.system import ExtendedSystem, build_system, extended_potential
from app.families.curves import default_samples, energy_curve
from app.families.registry import family_of
from app.seeds.builder import make_seed
from app.seeds.classify import classify_seed
from app.verify.eigensolver import compare_levels, family_spectrum
from app.verify.equivalence import verify_halfint_equivalence
from app.verify.identities import verify_ddx_wronskian, verify_shape_invariance
from app.verify.isospectral import verify_isospectral
from app.verify.quadrature import check_norms

COMMANDS = ("extend", "classify", "spectrum", "verify", "curve", "equivalence")
CheckOutcome = Tuple[bool, str, Dict]


class Job:
    """One invocation: a config, the command it runs under, and the artefacts it produced."""

    def __init__(self, config: JobConfig, command: str, out_dir: Optional[Path] = None):
        self.config = config
        self.command = command
        self.out_dir = Path(out_dir or config.output_dir or settings.OUTPUT_DIR)
        self.artifacts: Dict[str, str] = {}
        self._spec: Optional[ExtensionSpec] = None
        self._system: Optional[ExtendedSystem] = None

    # --- lazily built objects -----------------------------------------------------

    @property
    def spec(self) -> ExtensionSpec:
        if self._spec is None:
            self._spec = config_spec(self.config)
        return self._spec

    @property
    def system(self) -> ExtendedSystem:
        if self._system is None:
            self._system = build_system(self.spec)
        return self._system

    @property
    def numeric(self):
        return self.config.numeric

    # --- checks -------------------------------------------------------------------

    def check_nodeless(self) -> CheckOutcome:
        s = self.system
        data = {
            "root_count": s.root_count,
            "degree": s.xi.degree,
            "ell": s.ell,
            "degenerate": s.degenerate,
            "endpoint_root": s.endpoint_root,
            "sign_chain": s.sign_chain,
            "derivative_condition": s.derivative_condition,
        }
        return s.nodeless, f"{s.root_count} zero(s) of Xi_D inside the domain", data

    def check_isospectral(self) -> CheckOutcome:
        result = verify_isospectral(
            self.spec, grid=self.numeric.grid, truncation=self.numeric.truncation,
            rtol=self.numeric.rtol, enlarge=self.numeric.enlarge,
        )
        indices = list(self.system.spectrum)
        if self.spec.pseudo_virtual:
            indices = [emit.ADDED_LEVEL_INDEX] + indices
        out = emit.spectrum_out(result.spectrum, result.expected, indices)
        self._write_spectrum(out)
        return result.passed, result.detail, {"spectrum": out.model_dump()}

    def check_norms(self) -> CheckOutcome:
        norms = check_norms(self.spec)
        data = {
            "indices": norms.indices,
            "max_offdiagonal": norms.max_offdiagonal,
            "max_diagonal_error": norms.max_diagonal_error,
            "expected": [float(v) for v in norms.expected],
        }
        detail = f"off-diagonal {norms.max_offdiagonal:.2e}, diagonal error {norms.max_diagonal_error:.2e}"
        return norms.passed(), detail, data

    def check_shape_invariance(self) -> CheckOutcome:
        report = verify_shape_invariance(self.spec, min_samples=self.numeric.min_samples)
        out = emit.identity_out(report)
        return report.passed, f"{report.samples} samples, max residual {out.max_residual}", out.model_dump()

    def check_ddxw(self) -> CheckOutcome:
        report = verify_ddx_wronskian(self.spec, min_samples=self.numeric.min_samples)
        parts = [emit.identity_out(p).model_dump() for p in report.parts]
        return report.passed, f"{len(parts)} step(s), max residual {report.max_residual}", {"parts": parts}

    def check_halfint_equivalence(self) -> CheckOutcome:
        result = verify_halfint_equivalence(self.spec, n_total=self.numeric.n_total)
        data = {
            "dual_indices": list(result.dual.indices) if result.dual else [],
            "dual_params": {k: str(v) for k, v in result.dual.params.values} if result.dual else {},
            "proportional": result.proportional,
            "constant": str(result.constant) if result.constant is not None else None,
            "dual_degree": result.dual_degree,
            "expected_dual_degree": result.expected_dual_degree,
        }
        return result.passed, result.detail, data

    def check_classify(self) -> CheckOutcome:
        p = config_params(self.config)
        types = {}
        for ref in self.config.refs:
            seed = make_seed(p, ref)
            types[str(ref)] = classify_seed(seed).value
        return True, ", ".join(f"{k}: {v}" for k, v in types.items()), {"types": types}

    def check_spectrum(self) -> CheckOutcome:
        """FD spectrum of the original potential, or of the extension when seeds are given."""
        if self.config.refs:
            return self.check_isospectral()
        p = config_params(self.config)
        family = family_of(p)
        report = family_spectrum(
            family, p, grid=self.numeric.grid, truncation=self.numeric.truncation, enlarge=self.numeric.enlarge
        )
        exact = [family.energy(p, n) for n in range(family.nmax(p) + 1)]
        comparison = compare_levels(report.values, exact, self.numeric.rtol)
        out = emit.spectrum_out(report, exact, list(range(len(exact))))
        self._write_spectrum(out)
        return comparison["passed"], comparison["detail"], {"spectrum": out.model_dump()}

    CHECKS: Dict[str, Callable] = {
        "nodeless": check_nodeless,
        "isospectral": check_isospectral,
        "norms": check_norms,
        "shape-invariance": check_shape_invariance,
        "ddxW": check_ddxw,
        "halfint-equivalence": check_halfint_equivalence,
        "classify": check_classify,
        "spectrum": check_spectrum,
    }

    def run_check(self, name: str) -> CheckResult:
        logger.info(f"Check {name}: start")
        start = time.perf_counter()
        try:
            passed, detail, data = self.CHECKS[name](self)
        except ExtensionError as exc:
            if exc.exit_code != 1:
                raise
            logger.warning(f"Check {name}: {exc.label}: {exc}")
            passed, detail, data = False, f"{exc.label}: {exc}", {}
        duration = time.perf_counter() - start
        logger.info(f"Check {name}: passed={passed} in {duration:.2f}s")
        return CheckResult(name=name, passed=passed, detail=detail, duration_s=duration, data=data)

    # --- artefacts ----------------------------------------------------------------

    def _write_spectrum(self, out) -> None:
        path = emit.write_csv(emit.spectrum_frame(out), self.out_dir / "spectrum.csv")
        self.artifacts["spectrum"] = str(path)

    def write_potential(self) -> None:
        p = config_params(self.config)
        extended = extended_potential(self.spec) if self.config.refs else None
        frame = emit.potential_frame(family_of(p), p, extended, truncation=self.numeric.truncation)
        self.artifacts["potential"] = str(emit.write_csv(frame, self.out_dir / "potential.csv"))

    def write_curve(self) -> None:
        p = config_params(self.config)
        options = self.config.curve
        samples = None
        if options.lo is not None or options.hi is not None:
            samples = default_samples(p, options.lo, options.hi, options.count)
        curve = energy_curve(p, samples)
        frame = emit.curve_frame(curve, family_of(p))
        self.artifacts["curve"] = str(emit.write_csv(frame, self.out_dir / "curve.csv"))


def requested_checks(config: JobConfig, command: str) -> List[str]:
    if command == "classify":
        return ["classify"]
    if command == "equivalence":
        return ["halfint-equivalence"]
    if command == "spectrum":
        return ["spectrum"]
    if command == "curve":
        return list(config.checks)
    return list(config.checks) or ["nodeless"]


def run(config: JobConfig, command: str = "verify", out_dir: Optional[Path] = None) -> Tuple[RunReport, Path]:
    """Run a job and write its report; returns the report and the report path."""
    if command not in COMMANDS:
        raise ValueError(f"Unknown command {command!r}")
    job = Job(config, command, out_dir)
    p = config_params(config)
    logger.info(f"Job {command} for {p} with seeds {[str(r) for r in config.refs]}")

    system_view = None
    if command in ("extend", "verify") and config.refs:
        system_view = emit.system_out(job.system)

    checks = [job.run_check(name) for name in requested_checks(config, command)]

    if command == "curve":
        job.write_curve()
    if command in ("extend", "verify", "spectrum"):
        if not config.refs or job.system.nodeless:
            job.write_potential()

    report = RunReport(
        command=command,
        family=p.family.value,
        params=p.as_dict(),
        checks=checks,
        artifacts=job.artifacts,
        system=system_view,
    )
    path = emit.write_report(report, job.out_dir)
    return report, path

