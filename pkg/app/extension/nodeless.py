"""
Nodelessness of Xi_D on the eta-image of the x-domain.

Sturm counting is the decision procedure. Two sufficient conditions are
reported alongside it: the endpoint-sign chain on nested Wronskian ratios
and the order to which each virtual seed vanishes at its decaying end.
"""
from typing import Dict, List, Optional, Tuple

import sympy as sp

from app.core.logger import logger
from app.exactcore.numbers import mpq_to_rational
from app.exactcore.poly import PolyQ
from app.exactcore.sturm import OpenInterval, root_at_endpoint, sturm_count_roots
from app.extension.denominator import _ordered, factored_for, xi_polynomial
from app.extension.spec import ExtensionSpec
from app.seeds.classify import decaying_end
from app.seeds.models import BoundaryType, Seed


def check_nodeless(spec: ExtensionSpec) -> Tuple[bool, int]:
    """(no zero of Xi_D inside the domain, number of distinct interior zeros)."""
    xi = xi_polynomial(spec)
    interval = spec.family.chart.interval
    count = sturm_count_roots(xi, interval)
    if root_at_endpoint(xi, interval):
        logger.warning(f"Xi_D of {spec} vanishes at an endpoint of {interval}")
    return count == 0, count


def endpoint_root(spec: ExtensionSpec) -> bool:
    return root_at_endpoint(xi_polynomial(spec), spec.family.chart.interval)


# --- endpoint-sign chain -------------------------------------------------------

def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def sign_near(poly: PolyQ, interval: OpenInterval, end: str) -> int:
    """Sign of poly just inside one end of the interval."""
    if end == "lower":
        point, side = interval.lo, 1
    else:
        point, side = interval.hi, -1
    lc = _sign(sp.re(poly.leading_coefficient))
    if point is None:
        return lc if side == -1 else lc * (-1) ** poly.degree
    q = poly
    for k in range(poly.degree + 1):
        value = mpq_to_rational(q.eval_exact(sp.Rational(point)))
        if value != 0:
            return _sign(value) * side ** k
        q = q.diff()
    return 0


def sign_chain(spec: ExtensionSpec) -> bool:
    """
    W[d_1..d_{s+1}] / W[d_1..d_{s-1}] keeps one sign at both ends for every
    1 <= s < M. Prefactor signs are constant on the domain, so only the
    polynomial parts enter.
    """
    refs = list(spec.refs)
    if spec.mixed_twist:
        refs = _ordered(refs)
    if len(refs) < 2:
        return True
    interval = spec.family.chart.interval
    polys = [factored_for(spec.params, refs[:s]).poly for s in range(len(refs) + 1)]
    for s in range(1, len(refs)):
        ends = [sign_near(polys[s + 1], interval, end) * sign_near(polys[s - 1], interval, end)
                for end in ("lower", "upper")]
        if 0 in ends or ends[0] != ends[1]:
            logger.debug(f"Sign chain of {spec} breaks at s={s}: end signs {ends}")
            return False
    return True


# --- boundary-derivative vanishing -------------------------------------------

def vanishing_order(seed: Seed) -> Optional[sp.Expr]:
    """
    Number of x-derivatives (starting with the function) that vanish at the
    decaying end of a type I/II seed; oo for exponential decay.
    """
    end = decaying_end(seed)
    if end is None:
        return None
    _, descriptor = end
    if descriptor.kind != "power":
        return sp.oo
    beta = descriptor.value
    return sp.ceiling(beta) if beta > 0 else sp.Integer(0)


def vanishing_orders(spec: ExtensionSpec) -> Dict[str, Optional[sp.Expr]]:
    return {str(s.ref): vanishing_order(s) for s in spec.seeds}


def derivative_condition(spec: ExtensionSpec) -> bool:
    """Every virtual seed vanishes with its first M-1 derivatives at its decaying end."""
    virtual = [s for s in spec.seeds if s.boundary_type in (BoundaryType.TYPE_I, BoundaryType.TYPE_II)]
    if not virtual:
        return True
    orders: List = [vanishing_order(s) for s in virtual]
    return all(o is not None and o >= spec.size for o in orders)
