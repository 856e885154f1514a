"""Numerical iso-spectrality of an extension against the exact original spectrum."""
import math
from dataclasses import dataclass
from typing import List, Optional

import sympy as sp

from app.core.errors import SingularExtensionError
from app.core.logger import logger
from app.extension.nodeless import check_nodeless
from app.extension.spec import ExtensionSpec
from app.extension.system import eigenfunction_evaluator, extended_potential, original_spectrum
from app.verify.eigensolver import SpectrumReport, compare_levels, family_spectrum


@dataclass
class IsospectralReport:
    spec: str
    expected: List[sp.Rational]
    spectrum: SpectrumReport
    passed: bool
    errors: List[float]
    detail: str


def expected_levels(spec: ExtensionSpec) -> List[sp.Rational]:
    """Original levels, plus E~_v when a single type III seed adds one."""
    levels = list(original_spectrum(spec).values())
    if spec.pseudo_virtual:
        levels.append(spec.seeds[0].energy)
    return sorted(levels)


def verify_isospectral(spec: ExtensionSpec, grid: Optional[float] = None, truncation: Optional[float] = None,
                       rtol: Optional[float] = None, enlarge: bool = True) -> IsospectralReport:
    nodeless, count = check_nodeless(spec)
    if not nodeless:
        raise SingularExtensionError(
            f"Xi_D of {spec} has {count} zero(s) in the domain; the extended potential is singular", spec=str(spec)
        )
    logger.info(f"Iso-spectrality check for {spec}")
    potential = extended_potential(spec)
    # the extended ground state fixes the behaviour at a finite wall
    ground = eigenfunction_evaluator(spec, 0) if math.isfinite(spec.family.chart.x_lo) else None
    report = family_spectrum(
        spec.family, spec.params, potential, grid=grid, truncation=truncation, enlarge=enlarge, eigenfunction=ground
    )
    expected = expected_levels(spec)
    comparison = compare_levels(report.values, expected, rtol)
    result = IsospectralReport(
        spec=str(spec),
        expected=expected,
        spectrum=report,
        passed=comparison["passed"],
        errors=comparison["errors"],
        detail=comparison["detail"],
    )
    if not result.passed:
        logger.warning(f"Iso-spectrality failed for {spec}: {result.detail}")
    return result
