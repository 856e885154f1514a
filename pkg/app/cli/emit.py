"""Report and plot-data writers. CSV files use a fixed float format so reruns are byte-identical."""
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np
import pandas as pd
import sympy as sp

from app.core.config import settings
from app.core.logger import logger
from app.core.schemas import (
    ExtendedSystemOut,
    IdentityReportOut,
    RunReport,
    SeedOut,
    SpectrumEntry,
    SpectrumLevelOut,
    SpectrumReportOut,
)
from app.extension.potential import PotentialEvaluator
from app.extension.system import ExtendedSystem
from app.families.base import Family, Params
from app.families.curves import EnergyCurve
from app.seeds.models import Seed
from app.verify.eigensolver import SpectrumReport, default_domain
from app.verify.identities import IdentityReport

PathLike = Union[str, Path]
ADDED_LEVEL_INDEX = -1


def write_csv(frame: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def write_report(report: RunReport, out_dir: PathLike) -> Path:
    path = Path(out_dir) / "report.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Report written to {path} (passed={report.passed})")
    return path


# --- serialisable views ----------------------------------------------------------------

def seed_out(seed: Seed) -> SeedOut:
    boundary = seed.boundary_type.value if seed.boundary_type is not None else "eigen"
    return SeedOut(kind=seed.kind.value, v=seed.v, energy=seed.energy, boundary_type=boundary)


def system_out(system: ExtendedSystem) -> ExtendedSystemOut:
    spec = system.spec
    return ExtendedSystemOut(
        family=spec.params.family.value,
        params=spec.params.as_dict(),
        seeds=[seed_out(s) for s in spec.seeds],
        xi_coefficients=system.xi.coeffs,
        ell=system.ell,
        degree=system.xi.degree,
        degenerate=system.degenerate,
        nodeless=system.nodeless,
        root_count=system.root_count,
        spectrum=[SpectrumEntry(n=n, energy=e) for n, e in system.spectrum.items()],
        added_level=system.added_level,
    )


def identity_out(report: IdentityReport) -> IdentityReportOut:
    return IdentityReportOut(
        identity=report.identity,
        samples=report.samples,
        degree_bound=report.degree_bound,
        max_residual=report.max_residual,
        skipped_poles=report.skipped_poles,
        verdict=report.passed,
    )


def spectrum_out(report: SpectrumReport, exact: Optional[Sequence[sp.Rational]] = None,
                 indices: Optional[Sequence[int]] = None) -> SpectrumReportOut:
    levels = []
    for i, level in enumerate(report.levels):
        e = float(exact[i]) if exact is not None and i < len(exact) else None
        levels.append(SpectrumLevelOut(
            n=indices[i] if indices is not None and i < len(indices) else level.n,
            exact=e,
            numeric=level.numeric,
            error_estimate=level.error_estimate,
            abs_err=abs(level.numeric - e) if e is not None else None,
        ))
    return SpectrumReportOut(
        grids=report.grids,
        x_lo=report.x_lo,
        x_hi=report.x_hi,
        threshold=report.threshold,
        endpoint_limits=list(report.endpoint_limits),
        levels=levels,
        observed_order=report.observed_order,
        boundary_sensitive=report.boundary_sensitive,
        endpoint_exponent=report.endpoint_exponent,
    )


# --- CSV frames ------------------------------------------------------------------------

def spectrum_frame(out: SpectrumReportOut) -> pd.DataFrame:
    """Columns n, E_exact, E_numeric, abs_err; an added level below E_0 has n = -1."""
    return pd.DataFrame(
        {
            "n": [level.n for level in out.levels],
            "E_exact": [level.exact for level in out.levels],
            "E_numeric": [level.numeric for level in out.levels],
            "abs_err": [level.abs_err for level in out.levels],
        },
        columns=["n", "E_exact", "E_numeric", "abs_err"],
    )


def curve_frame(curve: EnergyCurve, family: Family) -> pd.DataFrame:
    """n, E(n) and region label per sample; discrete marks the integer levels 0..nmax."""
    nmax = family.nmax(curve.params)
    rows = [
        {
            "n": float(point.n),
            "E": float(point.energy),
            "region": point.region,
            "discrete": bool(point.n.is_integer and 0 <= point.n <= nmax),
        }
        for point in curve.points
    ]
    return pd.DataFrame(rows, columns=["n", "E", "region", "discrete"])


def potential_grid(family: Family, points: int = 1001, truncation: Optional[float] = None) -> np.ndarray:
    x_lo, x_hi = default_domain(family, truncation)
    grid = np.linspace(x_lo, x_hi, points)
    return grid[1:] if np.isfinite(family.chart.x_lo) else grid


def potential_frame(family: Family, p: Params, extended: Optional[PotentialEvaluator] = None,
                    points: int = 1001, truncation: Optional[float] = None) -> pd.DataFrame:
    """x, U(x) and, for a nonsingular extension, U^[M](x)."""
    x = potential_grid(family, points, truncation)
    data = {"x": x, "U": family.potential_float(p, x)}
    columns: List[str] = ["x", "U"]
    if extended is not None and not extended.singular:
        with np.errstate(all="ignore"):
            data["U_ext"] = extended(x)
        columns.append("U_ext")
    return pd.DataFrame(data, columns=columns)
