"""
The five sinusoidal coordinates used by the families, as rational functions
of t = e^x, with the gauge sigma(x) that turns successive derivatives of
prefactor x polynomial into polynomials in eta.
"""
from typing import Tuple
import numpy as np
import sympy as sp

from app.exactcore.poly import PolyQ
from app.exactcore.sturm import OpenInterval
from app.exactcore.texpr import TExpr
from app.families.base import Chart, EndpointLimit
from app.families.prefactor import (
    ONE,
    PrefactorExponents,
    coth_t,
    csch_t,
    sech_t,
    sinh_t,
    cosh_t,
    tanh_t,
)

HALF = sp.Rational(1, 2)
ETA = PolyQ.eta()


def _double_exp_or_rate(prefactor: PrefactorExponents, rate, end: str, eta_value=None) -> EndpointLimit:
    if prefactor.exp_exp < 0:
        return EndpointLimit(end, "double_exp_decay")
    if prefactor.exp_exp > 0:
        return EndpointLimit(end, "double_exp_growth")
    return EndpointLimit(end, "exp_rate", sp.Rational(rate), eta_value)


class ExponentialChart(Chart):
    """eta = e^{-x} on the whole line (Morse)."""

    interval = OpenInterval(sp.Integer(0), None)
    x_lo, x_hi = -np.inf, np.inf
    t_min = sp.Integer(0)
    sigma = PrefactorExponents(exp_rate=-1)
    deta_prefactor = PrefactorExponents(exp_rate=-1, scale=-1)

    def eta(self, t: TExpr) -> TExpr:
        return 1 / t

    def deta(self, t: TExpr) -> TExpr:
        return -(1 / t)

    def d2eta(self, t: TExpr) -> TExpr:
        return 1 / t

    def eta_float(self, x):
        return np.exp(-np.asarray(x, dtype=float))

    def deta_float(self, x):
        return -np.exp(-np.asarray(x, dtype=float))

    def d2eta_float(self, x):
        return np.exp(-np.asarray(x, dtype=float))

    def gauge_dlog(self, prefactor: PrefactorExponents) -> PolyQ:
        self._reject(prefactor, "sinh", "cosh", "arctan_sinh")
        # e^{-x} (a + k e^x) = a*eta + k
        return ETA.scale(prefactor.exp_rate) + prefactor.exp_exp

    def sigma_deta(self) -> PolyQ:
        return -(ETA ** 2)

    def endpoint_limits(self, prefactor, degree) -> Tuple[EndpointLimit, EndpointLimit]:
        lower = EndpointLimit("lower", "exp_rate", prefactor.exp_rate - degree)
        upper = _double_exp_or_rate(prefactor, prefactor.exp_rate, "upper", sp.Integer(0))
        return lower, upper


class SinhChart(Chart):
    """eta = sinh x on the whole line (soliton, hyperbolic symmetric top)."""

    interval = OpenInterval(None, None)
    x_lo, x_hi = -np.inf, np.inf
    t_min = sp.Integer(0)
    sigma = PrefactorExponents(cosh=1)
    deta_prefactor = PrefactorExponents(cosh=1)

    def eta(self, t):
        return sinh_t(t)

    def deta(self, t):
        return cosh_t(t)

    def d2eta(self, t):
        return sinh_t(t)

    def eta_float(self, x):
        return np.sinh(np.asarray(x, dtype=float))

    def deta_float(self, x):
        return np.cosh(np.asarray(x, dtype=float))

    def d2eta_float(self, x):
        return np.sinh(np.asarray(x, dtype=float))

    def gauge_dlog(self, prefactor):
        self._reject(prefactor, "exp_rate", "sinh", "exp_exp")
        # cosh * (c tanh + k sech) = c*eta + k
        return ETA.scale(prefactor.cosh) + prefactor.arctan_sinh

    def sigma_deta(self):
        return ETA ** 2 + 1

    def endpoint_limits(self, prefactor, degree):
        lower = EndpointLimit("lower", "exp_rate", prefactor.exp_rate - prefactor.cosh - degree)
        upper = EndpointLimit("upper", "exp_rate", prefactor.exp_rate + prefactor.cosh + degree)
        return lower, upper


class TanhChart(Chart):
    """eta = tanh x on the whole line (Rosen-Morse)."""

    interval = OpenInterval(sp.Integer(-1), sp.Integer(1))
    x_lo, x_hi = -np.inf, np.inf
    t_min = sp.Integer(0)
    sigma = ONE
    deta_prefactor = PrefactorExponents(cosh=-2)

    def eta(self, t):
        return tanh_t(t)

    def deta(self, t):
        return sech_t(t).square()

    def d2eta(self, t):
        return tanh_t(t) * sech_t(t).square() * (-2)

    def eta_float(self, x):
        return np.tanh(np.asarray(x, dtype=float))

    def deta_float(self, x):
        return 1.0 / np.cosh(np.asarray(x, dtype=float)) ** 2

    def d2eta_float(self, x):
        x = np.asarray(x, dtype=float)
        return -2.0 * np.tanh(x) / np.cosh(x) ** 2

    def gauge_dlog(self, prefactor):
        self._reject(prefactor, "sinh", "exp_exp", "arctan_sinh")
        return ETA.scale(prefactor.cosh) + prefactor.exp_rate

    def sigma_deta(self):
        return 1 - ETA ** 2

    def endpoint_limits(self, prefactor, degree):
        lower = EndpointLimit("lower", "exp_rate", prefactor.exp_rate - prefactor.cosh, sp.Integer(-1))
        upper = EndpointLimit("upper", "exp_rate", prefactor.exp_rate + prefactor.cosh, sp.Integer(1))
        return lower, upper


class CothChart(Chart):
    """eta = coth x on the half line (Eckart / Kepler in hyperbolic space)."""

    interval = OpenInterval(sp.Integer(1), None)
    x_lo, x_hi = 0.0, np.inf
    t_min = sp.Integer(1)
    sigma = ONE
    deta_prefactor = PrefactorExponents(sinh=-2, scale=-1)

    def eta(self, t):
        return coth_t(t)

    def deta(self, t):
        return -csch_t(t).square()

    def d2eta(self, t):
        return coth_t(t) * csch_t(t).square() * 2

    def eta_float(self, x):
        return 1.0 / np.tanh(np.asarray(x, dtype=float))

    def deta_float(self, x):
        return -1.0 / np.sinh(np.asarray(x, dtype=float)) ** 2

    def d2eta_float(self, x):
        x = np.asarray(x, dtype=float)
        return 2.0 / (np.tanh(x) * np.sinh(x) ** 2)

    def gauge_dlog(self, prefactor):
        self._reject(prefactor, "cosh", "exp_exp", "arctan_sinh")
        return ETA.scale(prefactor.sinh) + prefactor.exp_rate

    def sigma_deta(self):
        return 1 - ETA ** 2

    def endpoint_limits(self, prefactor, degree):
        # coth^d ~ x^{-d} at the wall
        lower = EndpointLimit("lower", "power", prefactor.sinh - degree)
        upper = EndpointLimit(
            "upper", "exp_rate", prefactor.exp_rate + prefactor.sinh + prefactor.cosh, sp.Integer(1)
        )
        return lower, upper


class Cosh2Chart(Chart):
    """eta = cosh 2x on the half line (hyperbolic Darboux-Poeschl-Teller)."""

    interval = OpenInterval(sp.Integer(1), None)
    x_lo, x_hi = 0.0, np.inf
    t_min = sp.Integer(1)
    sigma = PrefactorExponents(sinh=1, cosh=1)
    deta_prefactor = PrefactorExponents(sinh=1, cosh=1, scale=4)

    def eta(self, t):
        t2 = t * t
        return (t2 + 1 / t2) * HALF

    def deta(self, t):
        t2 = t * t
        return t2 - 1 / t2

    def d2eta(self, t):
        t2 = t * t
        return (t2 + 1 / t2) * 2

    def eta_float(self, x):
        return np.cosh(2.0 * np.asarray(x, dtype=float))

    def deta_float(self, x):
        return 2.0 * np.sinh(2.0 * np.asarray(x, dtype=float))

    def d2eta_float(self, x):
        return 4.0 * np.cosh(2.0 * np.asarray(x, dtype=float))

    def gauge_dlog(self, prefactor):
        self._reject(prefactor, "exp_rate", "exp_exp", "arctan_sinh")
        # sinh cosh (b coth + c tanh) = b cosh^2 + c sinh^2
        return (ETA + 1).scale(prefactor.sinh * HALF) + (ETA - 1).scale(prefactor.cosh * HALF)

    def sigma_deta(self):
        return ETA ** 2 - 1

    def endpoint_limits(self, prefactor, degree):
        lower = EndpointLimit("lower", "power", prefactor.sinh, sp.Integer(1))
        upper = EndpointLimit(
            "upper", "exp_rate", prefactor.exp_rate + prefactor.sinh + prefactor.cosh + 2 * degree
        )
        return lower, upper
