"""
Exact real-root counting on open intervals with Sturm sequences.
"""
from dataclasses import dataclass
from typing import List, Optional, Union
import sympy as sp
from sympy.polys.domains import QQ, ZZ

from app.core.errors import DomainError
from app.exactcore.poly import ETA, PolyQ

Endpoint = Union[sp.Rational, None]


@dataclass(frozen=True)
class OpenInterval:
    """(lo, hi) with None standing for -inf / +inf."""

    lo: Optional[sp.Rational] = None
    hi: Optional[sp.Rational] = None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise DomainError(f"Empty interval ({self.lo}, {self.hi})")

    def contains(self, x: sp.Rational) -> bool:
        above = self.lo is None or x > self.lo
        below = self.hi is None or x < self.hi
        return above and below

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"({lo}, {hi})"


REAL_LINE = OpenInterval()


def integer_square_free(p: PolyQ) -> sp.Poly:
    """Primitive square-free integer polynomial with the same real roots as p."""
    if p.is_zero:
        raise DomainError("Root counting of the zero polynomial")
    real = p.real_poly()
    _, integral = real.clear_denoms(convert=True)
    sqf = integral.sqf_part()
    _, prim = sqf.primitive()
    return prim.set_domain(ZZ)


def sturm_chain(q: sp.Poly) -> List[sp.Poly]:
    """Sturm chain built from sign-corrected pseudo-remainders."""
    chain = [q]
    if q.degree() <= 0:
        return chain
    chain.append(q.diff(ETA))
    while True:
        a, b = chain[-2], chain[-1]
        if b.degree() <= 0:
            break
        r = a.prem(b)
        if r.is_zero:
            break
        # prem multiplies by lc(b)^(deg a - deg b + 1); undo its sign
        power = a.degree() - b.degree() + 1
        if b.LC() < 0 and power % 2 == 1:
            r = -r
        content, r = (-r).primitive()
        if content < 0:
            r = -r
        chain.append(r)
    return chain


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _sign_at(p: sp.Poly, point: Endpoint, at_minus_infinity: bool) -> int:
    if point is not None:
        return _sign(p.eval(point))
    lc_sign = _sign(p.LC())
    if at_minus_infinity and p.degree() % 2 == 1:
        return -lc_sign
    return lc_sign


def _variations(chain: List[sp.Poly], point: Endpoint, at_minus_infinity: bool) -> int:
    signs = [s for s in (_sign_at(p, point, at_minus_infinity) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count_roots(p: PolyQ, interval: OpenInterval = REAL_LINE) -> int:
    """Number of distinct real roots of p strictly inside the interval."""
    q = integer_square_free(p)
    if q.degree() <= 0:
        return 0
    chain = sturm_chain(q)
    v_lo = _variations(chain, interval.lo, at_minus_infinity=True)
    v_hi = _variations(chain, interval.hi, at_minus_infinity=False)
    # V(lo) - V(hi) counts (lo, hi]; drop a root sitting on hi
    on_hi = interval.hi is not None and q.eval(interval.hi) == 0
    return v_lo - v_hi - (1 if on_hi else 0)


def root_at_endpoint(p: PolyQ, interval: OpenInterval) -> bool:
    q = integer_square_free(p)
    return any(e is not None and q.eval(e) == 0 for e in (interval.lo, interval.hi))


def sign_scan_count(p: PolyQ, interval: OpenInterval, points: int = 10000) -> int:
    """Sign changes of p over a dense rational grid; a cross-check, not a proof."""
    lo = interval.lo if interval.lo is not None else sp.Integer(-1000)
    hi = interval.hi if interval.hi is not None else sp.Integer(1000)
    step = (hi - lo) / (points + 1)
    changes = 0
    previous = 0
    for k in range(1, points + 1):
        s = _sign(QQ.to_sympy(p.eval_exact(QQ.convert(lo + k * step))))
        if s == 0:
            continue
        if previous and s != previous:
            changes += 1
        previous = s
    return changes
