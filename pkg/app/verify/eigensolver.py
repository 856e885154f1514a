"""
Finite-difference Schroedinger eigensolver.

-psi'' + U psi = E psi on a truncated uniform grid with Dirichlet ends is a
symmetric tridiagonal problem. Levels below the continuum threshold are
found by Sturm-count bisection (LAPACK stebz), then Richardson-extrapolated
over two grid spacings.

A finite lower end carrying an inverse-square wall U ~ c/s^2 (s = x - x_lo)
is not resolved by a Dirichlet node: for -1/4 < c < 3/4 both solutions
vanish there and the three-point scheme converges slowly. Such ends are
handled by writing psi = s^a u with a(a-1) = c, which leaves the symmetric
problem -(s^2a u')' + s^2a (U - c/s^2) u = E s^2a u with zero flux at s = 0.
"""
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from app.core.config import settings
from app.core.errors import PreconditionError
from app.core.logger import logger
from app.families.base import Family, Params

POTENTIAL_CAP = 1e6


@dataclass
class SpectrumLevel:
    n: int
    numeric: float
    error_estimate: float
    raw: Tuple[float, ...] = ()


@dataclass
class SpectrumReport:
    grids: List[float]
    x_lo: float
    x_hi: float
    threshold: float
    endpoint_limits: Tuple[float, ...] = ()
    levels: List[SpectrumLevel] = field(default_factory=list)
    observed_order: Optional[float] = None
    boundary_sensitive: bool = False
    endpoint_exponent: Optional[float] = None

    @property
    def values(self) -> np.ndarray:
        return np.array([level.numeric for level in self.levels])


def grid_points(x_lo: float, x_hi: float, step: float) -> np.ndarray:
    """Interior nodes x_lo + i*step; the ends carry the Dirichlet condition."""
    count = int(round((x_hi - x_lo) / step))
    if count < 3:
        raise PreconditionError(f"Grid step {step} is too coarse for [{x_lo}, {x_hi}]")
    return x_lo + step * np.arange(1, count)


def _sampled(potential: Callable, x: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        u = np.asarray(potential(x), dtype=float)
    bad = int(np.count_nonzero(~np.isfinite(u)))
    if bad:
        logger.debug(f"{bad} non-finite potential value(s) treated as a wall")
    u = np.nan_to_num(u, nan=POTENTIAL_CAP, posinf=POTENTIAL_CAP, neginf=-POTENTIAL_CAP)
    return np.clip(u, -POTENTIAL_CAP, POTENTIAL_CAP)


def _levels_below(diagonal: np.ndarray, off: np.ndarray, floor: float, upper: float) -> np.ndarray:
    if floor >= upper:
        return np.array([])
    values = eigvalsh_tridiagonal(
        diagonal, off, select="v", select_range=(floor - 1.0, upper),
        lapack_driver="stebz", tol=1e-12,
    )
    return np.sort(values)


def fd_eigenvalues(potential: Callable, x_lo: float, x_hi: float, step: float, upper: float) -> np.ndarray:
    """All eigenvalues of the three-point discretisation below upper, ascending."""
    x = grid_points(x_lo, x_hi, step)
    u = _sampled(potential, x)
    inv = 1.0 / step ** 2
    return _levels_below(2.0 * inv + u, np.full(x.size - 1, -inv), float(u.min()), upper)


@dataclass(frozen=True)
class EndpointWall:
    """U ~ inverse_square/s^2 + coulomb/s at a finite lower end, with psi ~ s^exponent."""
    exponent: float
    inverse_square: float
    coulomb: float = 0.0


def frobenius_eigenvalues(potential: Callable, x_lo: float, x_hi: float, step: float, upper: float,
                          wall: EndpointWall) -> np.ndarray:
    """
    Eigenvalues below upper with psi = s^a u factored out at the lower end.

    Finite volumes on cells [i, i+1] * step: exact weighted cell masses,
    face fluxes from the exact integral of s^-2a between centres, and the
    wall's coulomb/s term averaged exactly over each cell. s = 0 is a face
    with zero flux; u vanishes one half-cell past x_hi. Everything is
    formed in logarithms of t = s/step so large exponents do not overflow.
    """
    count = int(round((x_hi - x_lo) / step))
    if count < 3:
        raise PreconditionError(f"Grid step {step} is too coarse for [{x_lo}, {x_hi}]")
    a = float(wall.exponent)
    if a <= 0:
        raise PreconditionError(f"Wall exponent must be positive, got {a}")
    i = np.arange(count, dtype=float)
    centre = i + 0.5
    with np.errstate(divide="ignore"):
        below = np.log1p(-1.0 / (i + 1.0))
        log_mass = (2 * a + 1) * np.log(i + 1.0) + np.log(-np.expm1((2 * a + 1) * below)) - math.log(2 * a + 1)
        log_inverse = 2 * a * np.log(i + 1.0) + np.log(-np.expm1(2 * a * below)) - math.log(2 * a)
    e = 1.0 - 2.0 * a
    gap = np.log1p(1.0 / centre)
    if abs(e) < 1e-12:
        log_span = np.log(gap)
    else:
        log_span = e * np.log(centre) + np.log(np.expm1(e * gap) / e)
    log_flux = -log_span

    s = step * centre
    q = _sampled(potential, x_lo + s) - a * (a - 1.0) / s ** 2
    q = q + wall.coulomb * (np.exp(log_inverse - log_mass) / step - 1.0 / s)

    inv = 1.0 / step ** 2
    outer = np.exp(log_flux - log_mass)
    inner = np.concatenate(([0.0], np.exp(log_flux[:-1] - log_mass[1:])))
    diagonal = (inner + outer) * inv + q
    off = -np.exp(log_flux[:-1] - 0.5 * (log_mass[:-1] + log_mass[1:])) * inv
    # the flux part is positive semidefinite, so min q bounds the spectrum below
    return _levels_below(diagonal, off, float(q.min()), upper)



# --- singular lower end ---------------------------------------------------------------

def endpoint_laurent(potential: Callable, x_lo: float, offset: Optional[float] = None) -> Tuple[float, float]:
    """(c, r) in U ~ c/s^2 + r/s + O(1), s = x - x_lo, from a quadratic through s^2 U at s, 2s and 4s."""
    offset = offset or settings.FD_ENDPOINT_OFFSET
    s = offset * np.array([1.0, 2.0, 4.0])
    with np.errstate(all="ignore"):
        f = s ** 2 * np.asarray(potential(x_lo + s), dtype=float)
    if not np.all(np.isfinite(f)):
        raise PreconditionError(f"Potential is not finite next to x = {x_lo}")
    _, r, c = np.polyfit(s, f, 2)
    return float(c), float(r)


def log_slope(function: Callable, x_lo: float, offset: Optional[float] = None) -> float:
    """d log|f| / d log(x - x_lo) at the lower end, from offsets s, 2s and 4s."""
    offset = offset or settings.FD_ENDPOINT_OFFSET
    s = offset * np.array([1.0, 2.0, 4.0])
    with np.errstate(all="ignore"):
        logs = np.log(np.abs(np.asarray(function(x_lo + s), dtype=float)))
    if not np.all(np.isfinite(logs)):
        raise PreconditionError(f"Function vanishes or diverges next to x = {x_lo}")
    slopes = np.diff(logs) / math.log(2.0)
    return float(2.0 * slopes[0] - slopes[1])


def endpoint_wall(potential: Callable, x_lo: float, slope: Optional[float] = None) -> Optional[EndpointWall]:
    """
    The wall at a finite lower end, with a a root of a(a-1) = c.

    The larger root is taken unless the measured slope of a known
    eigenfunction is given, which selects the root nearest to it. None when
    the end cannot be factored (c < -1/4 or a <= 0); the caller then keeps
    the Dirichlet scheme.
    """
    c, r = endpoint_laurent(potential, x_lo)
    if c < -0.25:
        logger.warning(f"U ~ {c:.6g}/s^2 at x = {x_lo} is below -1/(4s^2); keeping the Dirichlet scheme")
        return None
    root = math.sqrt(c + 0.25)
    a = 0.5 + root
    if slope is not None:
        a = min((0.5 + root, 0.5 - root), key=lambda v: abs(v - slope))
        if abs(a - slope) > settings.FD_ENDPOINT_SLOPE_TOL:
            logger.warning(f"Measured slope {slope:.6g} is {abs(a - slope):.3e} from the nearest exponent {a:.6g}")
    if a <= 0:
        logger.warning(f"Exponent {a:.6g} at x = {x_lo} has no zero-flux form; keeping the Dirichlet scheme")
        return None
    logger.info(f"Lower end x = {x_lo}: U ~ {c:.8g}/s^2 + {r:.8g}/s, psi ~ s^{a:.8g}")
    return EndpointWall(a, c, r)


# --- spectra --------------------------------------------------------------------------

def richardson(coarse: float, fine: float, order: int = 2) -> Tuple[float, float]:
    """Extrapolated value and |extrapolated - fine| for a halved grid."""
    factor = 2 ** order
    value = (factor * fine - coarse) / (factor - 1)
    return value, abs(value - fine)


def observed_order(e_h: float, e_h2: float, e_h4: float) -> Optional[float]:
    num, den = e_h - e_h2, e_h2 - e_h4
    if den == 0 or num / den <= 0:
        return None
    return math.log2(num / den)


def _solver(potential: Callable, wall: Optional[EndpointWall]) -> Callable:
    if wall is None:
        return partial(fd_eigenvalues, potential)
    return partial(frobenius_eigenvalues, potential, wall=wall)


def schrodinger_spectrum(potential: Callable, x_lo: float, x_hi: float, threshold: float,
                         grid: Optional[float] = None, margin: Optional[float] = None,
                         enlarge: bool = True, order_study: bool = False,
                         endpoint_limits: Sequence[float] = (),
                         wall: Optional[EndpointWall] = None) -> SpectrumReport:
    """
    Bound-state energies of -d^2/dx^2 + potential below threshold - margin.

    Solves on spacings grid and grid/2 (and grid/4 when order_study is set,
    to report the observed convergence order). With enlarge, the domain is
    scaled by ENLARGEMENT_FACTOR and a level moving by more than
    ENLARGEMENT_TOL flags the report as boundary sensitive. A wall switches
    the lower end to the factored s^a scheme.
    """
    grid = grid or settings.FD_GRID
    margin = settings.THRESHOLD_MARGIN if margin is None else margin
    upper = threshold - margin
    steps = [grid, grid / 2] + ([grid / 4] if order_study else [])
    solve = _solver(potential, wall)
    logger.info(f"FD spectrum on [{x_lo}, {x_hi}] with steps {steps}, threshold {threshold}")

    runs = [solve(x_lo, x_hi, s, upper) for s in steps]
    count = min(len(r) for r in runs)
    if len({len(r) for r in runs}) > 1:
        logger.warning(f"Level count changes with the grid: {[len(r) for r in runs]}; keeping {count}")

    levels = []
    for n in range(count):
        value, error = richardson(runs[0][n], runs[1][n])
        levels.append(SpectrumLevel(n, value, error, tuple(float(r[n]) for r in runs)))

    order = None
    if order_study and count:
        order = observed_order(runs[0][0], runs[1][0], runs[2][0])
        logger.info(f"Observed FD convergence order {order}")

    report = SpectrumReport(steps, x_lo, x_hi, threshold, tuple(endpoint_limits), levels, order,
                            endpoint_exponent=wall.exponent if wall else None)
    if enlarge and count:
        report.boundary_sensitive = _boundary_sensitive(solve, x_lo, x_hi, grid, upper, runs[0][:count])
    logger.info(f"FD spectrum: {[round(level.numeric, 8) for level in levels]}")
    return report


def _boundary_sensitive(solve: Callable, x_lo: float, x_hi: float, step: float,
                        upper: float, reference: np.ndarray) -> bool:
    factor = settings.ENLARGEMENT_FACTOR
    lo = x_lo * factor if x_lo < 0 else x_lo
    hi = x_hi * factor
    enlarged = solve(lo, hi, step, upper)
    if enlarged.size < reference.size:
        logger.warning("Domain enlargement lost levels; the truncation is too small")
        return True
    shift = float(np.max(np.abs(enlarged[: reference.size] - reference)))
    if shift > settings.ENLARGEMENT_TOL:
        logger.warning(f"Levels move by {shift:.3e} under domain enlargement x{factor}; truncation may be too small")
        return True
    return False


def default_domain(family: Family, truncation: Optional[float] = None) -> Tuple[float, float]:
    """|x| <= FD_TRUNCATION on the line, (0, FD_HALF_LINE_TRUNCATION] on the half line."""
    chart = family.chart
    if np.isfinite(chart.x_lo):
        return float(chart.x_lo), float(truncation or settings.FD_HALF_LINE_TRUNCATION)
    t = float(truncation or settings.FD_TRUNCATION)
    return -t, t


def family_spectrum(family: Family, p: Params, potential: Optional[Callable] = None,
                    grid: Optional[float] = None, truncation: Optional[float] = None,
                    eigenfunction: Optional[Callable] = None, **options) -> SpectrumReport:
    """
    FD spectrum of a family member, or of another potential on the same domain and threshold.

    On the half line the wall at x_lo is factored out; eigenfunction, when
    given, is a known bound state whose behaviour there fixes the exponent.
    """
    x_lo, x_hi = default_domain(family, truncation)
    if potential is None:
        def potential(x):
            return family.potential_float(p, x)

    if np.isfinite(family.chart.x_lo) and "wall" not in options:
        slope = log_slope(eigenfunction, x_lo) if eigenfunction is not None else None
        options["wall"] = endpoint_wall(potential, x_lo, slope)

    limits = tuple(float(v) for v in family.endpoint_potential_limits(p))
    return schrodinger_spectrum(
        potential, x_lo, x_hi, family.threshold(p), grid=grid, endpoint_limits=limits, **options
    )


def compare_levels(numeric: Sequence[float], exact: Sequence[float], rtol: Optional[float] = None) -> Dict[str, object]:
    """Match sorted numeric levels to exact ones; zero levels use an absolute rtol."""
    rtol = settings.ISOSPECTRAL_RTOL if rtol is None else rtol
    numeric, exact = sorted(float(v) for v in numeric), sorted(float(v) for v in exact)
    if len(numeric) != len(exact):
        return {"passed": False, "errors": [], "detail": f"{len(numeric)} numeric levels vs {len(exact)} exact"}
    errors = [abs(a - b) for a, b in zip(numeric, exact)]
    passed = all(err <= rtol * max(abs(b), 1.0) for err, b in zip(errors, exact))
    worst = max(errors) if errors else 0.0
    return {"passed": passed, "errors": errors, "detail": f"max abs error {worst:.3e} over {len(exact)} levels"}
