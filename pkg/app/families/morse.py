"""Morse potential (M): lambda = (h, mu), delta = (-1, 0), eta = e^{-x}."""
import numpy as np
import sympy as sp
from scipy.special import gammaln
from sympy.polys.domains import QQ_I

from app.core.errors import InvalidParamsError
from app.exactcore.numbers import strict_floor
from app.exactcore.poly import PolyQ
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import ExponentialChart
from app.families.jacobi import laguerre_coefficients
from app.families.prefactor import PrefactorExponents


class Morse(Family):
    tag = FamilyTag.M
    group = Group.A
    cF = sp.Integer(-1)
    param_names = ("h", "mu")
    delta = (-1, 0)
    generic_names = ("h",)
    chart = ExponentialChart()

    def _validate_domain(self, p: Params) -> None:
        if not (p["h"] > 0 and p["mu"] > 0):
            raise InvalidParamsError(f"Morse needs h, mu > 0, got {p}")

    def nmax(self, p: Params) -> int:
        return strict_floor(p["h"])

    def energy(self, p: Params, n) -> sp.Rational:
        h = p["h"]
        return h ** 2 - (h - sp.Rational(n)) ** 2

    def eigen_polynomial(self, p: Params, n: int) -> PolyQ:
        # (2mu/eta)^{-n} L_n^{(2h-2n)}(2mu/eta) = sum_k c_k (2mu)^{k-n} eta^{n-k}
        h, mu = p["h"], p["mu"]
        lag = laguerre_coefficients(n, 2 * h - 2 * n)
        coeffs = [sp.Integer(0)] * (n + 1)
        for k, c in enumerate(lag):
            coeffs[n - k] = QQ_I.to_sympy(c) * (2 * mu) ** (k - n)
        return PolyQ.from_coeffs(coeffs)

    def phi0(self, p: Params) -> PrefactorExponents:
        return PrefactorExponents(exp_rate=p["h"], exp_exp=-p["mu"])

    def f(self, p: Params, n) -> sp.Rational:
        return (sp.Rational(n) - 2 * p["h"]) / (2 * p["mu"])

    def b(self, p: Params, n) -> sp.Rational:
        return -2 * sp.Rational(n) * p["mu"]

    def log_norm_constant(self, p: Params, n: int) -> float:
        h, mu = float(p["h"]), float(p["mu"])
        return float(
            gammaln(2 * h - n + 1) - 2 * h * np.log(2 * mu) - gammaln(n + 1) - np.log(2 * (h - n))
        )

    def potential_t(self, p, t):
        h, mu = p["h"], p["mu"]
        return t * t * mu ** 2 - t * (mu * (2 * h + 1)) + h ** 2

    def potential_float(self, p, x):
        h, mu = float(p["h"]), float(p["mu"])
        e = np.exp(np.asarray(x, dtype=float))
        return mu ** 2 * e ** 2 - mu * (2 * h + 1) * e + h ** 2

    def endpoint_potential_limits(self, p):
        return float(p["h"] ** 2), np.inf

    def overshoot_regions(self, p):
        return [Region("b", 2 * p["h"], None, note="II")]

    def curve_regions(self, p):
        h = p["h"]
        return [
            Region("a", sp.Integer(0), sp.Integer(self.nmax(p)), True, True),
            Region("b", 2 * h, None),
            Region("c", None, sp.Integer(0)),
        ]
