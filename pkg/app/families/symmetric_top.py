"""Hyperbolic symmetric top II (hst): lambda = (h, mu), delta = (-1, 0), eta = sinh x."""
import numpy as np
import sympy as sp
from scipy.special import gammaln, loggamma

from app.core.errors import InvalidParamsError
from app.exactcore.numbers import HALF, strict_floor
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import SinhChart
from app.families.jacobi import jacobi_at_i_eta
from app.families.prefactor import PrefactorExponents, sech_t, sinh_t


class SymmetricTop(Family):
    tag = FamilyTag.HST
    group = Group.A
    cF = sp.Integer(1)
    param_names = ("h", "mu")
    delta = (-1, 0)
    generic_names = ("h",)
    chart = SinhChart()

    def _validate_domain(self, p: Params) -> None:
        if not (p["h"] > 0 and p["mu"] > 0):
            raise InvalidParamsError(f"Symmetric top needs h, mu > 0, got {p}")

    def nmax(self, p):
        return strict_floor(p["h"])

    def energy(self, p, n):
        h = p["h"]
        return h ** 2 - (h - sp.Rational(n)) ** 2

    def eigen_polynomial(self, p, n):
        h, mu = p["h"], p["mu"]
        alpha = -h - HALF - sp.I * mu
        beta = -h - HALF + sp.I * mu
        poly = jacobi_at_i_eta(n, alpha, beta).scale(sp.I ** (-n))
        return poly.assert_real(f"symmetric top P_{n}")

    def phi0(self, p):
        return PrefactorExponents(arctan_sinh=-p["mu"], cosh=-p["h"])

    def f(self, p, n):
        return (sp.Rational(n) - 2 * p["h"]) / 2

    def b(self, p, n):
        return -2 * sp.Rational(n)

    def log_norm_constant(self, p, n):
        h, mu = float(p["h"]), float(p["mu"])
        # Gamma(z) Gamma(conj z) = |Gamma(z)|^2
        pair = 2.0 * loggamma(complex(h - n + 0.5, mu)).real
        return float(
            np.log(np.pi)
            + gammaln(2 * h - n + 1)
            - 2 * h * np.log(2.0)
            - gammaln(n + 1)
            - np.log(h - n)
            - pair
        )

    def potential_t(self, p, t):
        h, mu = p["h"], p["mu"]
        numerator = sinh_t(t) * (mu * (2 * h + 1)) + (-h * (h + 1) + mu ** 2)
        return numerator * sech_t(t).square() + h ** 2

    def potential_float(self, p, x):
        h, mu = float(p["h"]), float(p["mu"])
        x = np.asarray(x, dtype=float)
        return (-h * (h + 1) + mu ** 2 + mu * (2 * h + 1) * np.sinh(x)) / np.cosh(x) ** 2 + h ** 2

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
