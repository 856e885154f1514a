"""Soliton potential (s): lambda = h, delta = -1, eta = sinh x."""
import numpy as np
import sympy as sp
from scipy.special import gammaln

from app.core.errors import InvalidParamsError
from app.core.logger import logger
from app.exactcore.numbers import HALF, strict_floor
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import SinhChart
from app.families.jacobi import jacobi_at_i_eta, pochhammer
from app.families.prefactor import PrefactorExponents, sech_t


class Soliton(Family):
    tag = FamilyTag.S
    group = Group.A
    cF = sp.Integer(1)
    param_names = ("h",)
    delta = (-1,)
    generic_names = ("h",)
    chart = SinhChart()

    def _validate_domain(self, p: Params) -> None:
        if not p["h"] > 0:
            raise InvalidParamsError(f"Soliton needs h > 0, got {p}")

    def nmax(self, p: Params) -> int:
        return strict_floor(p["h"])

    def energy(self, p, n):
        h = p["h"]
        return h ** 2 - (h - sp.Rational(n)) ** 2

    def normalization(self, p: Params, n: int) -> sp.Rational:
        """Ratio of Pochhammer symbols folding i^n P_n^{(a,a)}(i eta) onto cosh^n P_n^{(h-n,h-n)}(tanh)."""
        h = p["h"]
        k = (n + 1) // 2
        num = pochhammer(h - (n - 1) // 2, k)
        den = pochhammer(h - n + HALF, k)
        if den == 0:
            logger.warning(f"Soliton normalization has a vanishing denominator at h={h}, n={n}; using 1")
            return sp.Integer(1)
        return num / den

    def eigen_polynomial(self, p, n):
        h = p["h"]
        a = -h - HALF
        poly = jacobi_at_i_eta(n, a, a).scale(self.normalization(p, n) * sp.I ** n)
        return poly.assert_real(f"soliton P_{n}")

    def phi0(self, p):
        return PrefactorExponents(cosh=-p["h"])

    def f(self, p, n):
        return p["h"]

    def b(self, p, n):
        h = p["h"]
        n = sp.Rational(n)
        return n * (2 * h - n) / h

    def log_norm_constant(self, p, n):
        h = float(p["h"])
        return float(
            (2 * h - 2 * n) * np.log(2.0)
            + 2 * gammaln(h + 1)
            - gammaln(n + 1)
            - np.log(h - n)
            - gammaln(2 * h - n + 1)
        )

    def potential_t(self, p, t):
        h = p["h"]
        return sech_t(t).square() * (-h * (h + 1)) + h ** 2

    def potential_float(self, p, x):
        h = float(p["h"])
        return -h * (h + 1) / np.cosh(np.asarray(x, dtype=float)) ** 2 + h ** 2

    def endpoint_potential_limits(self, p):
        return float(p["h"] ** 2), float(p["h"] ** 2)

    def overshoot_regions(self, p):
        return [Region("b", 2 * p["h"], None, note="III")]

    def curve_regions(self, p):
        return [
            Region("a", sp.Integer(0), sp.Integer(self.nmax(p)), True, True),
            Region("b", 2 * p["h"], None),
            Region("c", None, sp.Integer(0)),
        ]
