"""
Inner products (f, g) = int f g dx over the x-domain with mpmath's
tanh-sinh rule, after trimming tails where the integrand is negligible.
"""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from app.core.config import settings
from app.core.logger import logger
from app.extension.spec import ExtensionSpec
from app.extension.system import eigenfunction_evaluator, extended_norm
from app.families.base import Chart

SCAN_SPAN = 80.0
PANELS = 24


@dataclass
class QuadratureResult:
    value: float
    x_lo: float
    x_hi: float
    error_estimate: float
    decaying: bool = True


def _scan_grid(chart: Chart, span: float, points: int) -> np.ndarray:
    lo = chart.x_lo if np.isfinite(chart.x_lo) else -span
    hi = chart.x_hi if np.isfinite(chart.x_hi) else span
    grid = np.linspace(lo, hi, points)
    if np.isfinite(chart.x_lo):
        grid = grid[1:]
    return grid


def support(integrand: Callable, chart: Chart, cutoff: Optional[float] = None,
            points: Optional[int] = None) -> Tuple[float, float, bool]:
    """Interval outside which |integrand| < cutoff * peak, and whether it decays at both scan ends."""
    cutoff = settings.QUAD_TAIL_CUTOFF if cutoff is None else cutoff
    points = points or settings.QUAD_SCAN_POINTS
    grid = _scan_grid(chart, SCAN_SPAN, points)
    with np.errstate(all="ignore"):
        values = np.abs(np.nan_to_num(integrand(grid), nan=0.0, posinf=0.0))
    peak = float(values.max())
    if peak == 0.0:
        return float(grid[0]), float(grid[-1]), True
    significant = np.nonzero(values >= cutoff * peak)[0]
    first, last = int(significant[0]), int(significant[-1])
    decaying = (first > 0 or np.isfinite(chart.x_lo)) and last < grid.size - 1
    x_lo = chart.x_lo if np.isfinite(chart.x_lo) and first == 0 else float(grid[max(first - 1, 0)])
    x_hi = float(grid[min(last + 1, grid.size - 1)])
    return float(x_lo), x_hi, decaying


def integrate(integrand: Callable, chart: Chart, rtol: Optional[float] = None) -> QuadratureResult:
    rtol = settings.QUAD_RTOL if rtol is None else rtol
    x_lo, x_hi, decaying = support(integrand, chart)
    if not decaying:
        logger.warning(f"Integrand does not decay inside the scan range [{x_lo}, {x_hi}]; the integral may diverge")

    def f(x):
        value = integrand(np.array([float(x)]))[0]
        return mpmath.mpf(0) if not np.isfinite(value) else mpmath.mpf(float(value))

    nodes = list(np.linspace(x_lo, x_hi, PANELS + 1))
    with mpmath.workdps(20):
        value, error = mpmath.quad(f, nodes, method="tanh-sinh", error=True)
    value, error = float(value), float(error)
    if value != 0.0 and abs(error) > rtol * abs(value):
        logger.warning(f"Quadrature error estimate {error:.3e} exceeds rtol {rtol} of {value:.6e}")
    return QuadratureResult(value, float(x_lo), float(x_hi), error, decaying)


def quadrature_inner_product(f: Callable, g: Callable, chart: Chart, rtol: Optional[float] = None) -> float:
    """(f, g) over the chart's x-domain."""
    return integrate(lambda x: f(x) * g(x), chart, rtol).value


def gram_matrix(spec: ExtensionSpec, indices: Optional[Sequence[int]] = None) -> np.ndarray:
    """Gram matrix of the extended eigenfunctions phi_n^[M], n in indices."""
    family = spec.family
    if indices is None:
        indices = range(family.nmax(spec.params) + 1)
    evaluators = [eigenfunction_evaluator(spec, n) for n in indices]
    size = len(evaluators)
    out = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            out[i, j] = out[j, i] = quadrature_inner_product(evaluators[i], evaluators[j], family.chart)
    logger.info(f"Gram matrix of {spec}: {size}x{size}")
    return out


@dataclass
class NormCheck:
    indices: List[int]
    gram: np.ndarray
    expected: np.ndarray
    max_offdiagonal: float
    max_diagonal_error: float

    def passed(self, offdiagonal_tol: float = 1e-8, diagonal_tol: float = 1e-6) -> bool:
        return self.max_offdiagonal <= offdiagonal_tol and self.max_diagonal_error <= diagonal_tol


def check_norms(spec: ExtensionSpec, indices: Optional[Sequence[int]] = None) -> NormCheck:
    """Compare the Gram matrix with prod_j (E_n - E~_{d_j}) h_n on the diagonal."""
    family = spec.family
    indices = list(range(family.nmax(spec.params) + 1)) if indices is None else list(indices)
    gram = gram_matrix(spec, indices)
    expected = np.array([extended_norm(spec, n) for n in indices])
    diag = np.diag(gram)
    scale = np.sqrt(np.outer(np.abs(diag), np.abs(diag)))
    off = np.abs(gram - np.diag(diag)) / np.where(scale > 0, scale, 1.0)
    return NormCheck(
        indices=indices,
        gram=gram,
        expected=expected,
        max_offdiagonal=float(off.max()) if off.size else 0.0,
        max_diagonal_error=float(np.max(np.abs(diag - expected) / np.abs(expected))) if indices else 0.0,
    )
