"""
Half-integer coupling: a pseudo virtual deletion D at 2h in Z is equivalent
to deleting the eigenstates barD = {0..N} minus {N - d'_j} at
barlambda = lambda - (N+1) delta, with d'_j = d_j - 2h - 1.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import sympy as sp

from app.core.errors import EquivalenceUnavailableError, PreconditionError
from app.core.logger import logger
from app.exactcore.numbers import HALF, is_integer
from app.exactcore.poly import PolyQ, poly_proportional
from app.extension.denominator import closed_form_factored, factored_for
from app.extension.spec import ExtensionSpec
from app.families.base import FamilyTag, Params
from app.families.registry import family_of
from app.seeds.models import SeedKind, SeedRef

ETA = PolyQ.eta()


@dataclass(frozen=True)
class DualIndexSet:
    params: Params
    indices: Tuple[int, ...]
    reduced_degrees: Tuple[int, ...]
    n_total: int

    @property
    def generic_degree(self) -> int:
        m = len(self.indices)
        return sum(self.indices) - m * (m - 1) // 2


@dataclass(frozen=True)
class EquivalenceResult:
    params: Params
    degrees: Tuple[int, ...]
    dual: Optional[DualIndexSet]
    available: bool
    proportional: bool
    constant: Optional[sp.Expr] = None
    dual_degree: Optional[int] = None
    expected_dual_degree: Optional[int] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.available and self.proportional and self.dual_degree == self.expected_dual_degree


def check_available(p: Params) -> None:
    h = p["h"] if "h" in p.names else None
    if p.family is FamilyTag.RM and is_integer(2 * h):
        return
    if p.family is FamilyTag.S and is_integer(2 * h) and not is_integer(h):
        return
    if p.family is FamilyTag.S:
        raise EquivalenceUnavailableError(f"equivalence unavailable for the soliton with integer h={h}")
    raise EquivalenceUnavailableError(f"equivalence unavailable for {p.family.value}")


def dual_index_set(p: Params, degrees: Sequence[int], n_total: Optional[int] = None,
                   check: bool = True) -> DualIndexSet:
    """barD and barlambda for overshoot degrees d_j > 2h; N defaults to max d'_j."""
    if check:
        check_available(p)
        if not p.half_integer_mode:
            raise PreconditionError("The dual construction needs half-integer mode")
    h = p["h"]
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise PreconditionError("The dual of an empty deletion is not defined")
    if any(not d > 2 * h for d in degrees):
        raise PreconditionError(f"Every degree must exceed 2h={2 * h}, got {list(degrees)}")
    reduced = tuple(int(d - 2 * h - 1) for d in degrees)
    n = max(reduced) if n_total is None else int(n_total)
    if n < max(reduced):
        raise PreconditionError(f"N={n} is below max d'={max(reduced)}")
    removed = {n - r for r in reduced}
    indices = tuple(k for k in range(n + 1) if k not in removed)
    bar_params = p.shifted(-(n + 1))
    logger.debug(f"Dual of {p} D={list(degrees)}: d'={list(reduced)}, N={n}, barD={list(indices)} at {bar_params}")
    return DualIndexSet(bar_params, indices, reduced, n)


def krein_adler_dual(spec: ExtensionSpec, n_total: Optional[int] = None) -> DualIndexSet:
    if any(r.kind is not SeedKind.OVERSHOOT for r in spec.refs):
        raise PreconditionError(f"{spec} is not an overshoot deletion")
    return dual_index_set(spec.params, spec.degrees, n_total)


def _soliton_reduced(xi: PolyQ, p: Params, m: int) -> PolyQ:
    power = (p["h"] + HALF) * m
    return xi.exquo((ETA ** 2 + 1) ** int(power))


def halfint_equivalence(p: Params, degrees: Sequence[int], n_total: Optional[int] = None) -> EquivalenceResult:
    """Xi_D(eta; lambda) proportional to Xi_barD(eta; barlambda), after the soliton factorisation."""
    degrees = tuple(int(d) for d in degrees)
    family = family_of(p)
    try:
        check_available(p)
        available, reason = True, ""
    except EquivalenceUnavailableError as exc:
        available, reason = False, exc.message
    if "h" not in p.names or not is_integer(2 * p["h"]):
        return EquivalenceResult(p, degrees, None, False, False, detail=reason)
    dual = dual_index_set(p, degrees, n_total, check=False)
    xi = factored_for(p, [SeedRef(SeedKind.OVERSHOOT, d) for d in degrees]).poly
    if p.family is FamilyTag.S and available:
        xi = _soliton_reduced(xi, p, len(degrees))
    bar_xi = closed_form_factored(family, dual.params, dual.indices).poly
    constant = poly_proportional(xi, bar_xi)
    m = len(degrees)
    expected = sum(dual.reduced_degrees) - m * (m - 1) // 2
    result = EquivalenceResult(
        params=p,
        degrees=degrees,
        dual=dual,
        available=available,
        proportional=constant is not None,
        constant=constant,
        dual_degree=bar_xi.degree,
        expected_dual_degree=expected,
        detail=reason or ("proportional" if constant is not None else "Xi_D and Xi_barD are not proportional"),
    )
    logger.info(f"Half-integer equivalence {p} D={list(degrees)}: available={available}, proportional={result.proportional}")
    return result
