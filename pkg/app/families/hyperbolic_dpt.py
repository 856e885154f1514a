"""Hyperbolic Darboux-Poeschl-Teller (hDPT): lambda = (g, h), delta = (1, -1), eta = cosh 2x."""
import numpy as np
import sympy as sp
from scipy.special import gammaln

from app.core.errors import InvalidParamsError
from app.exactcore.numbers import HALF, strict_floor
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import Cosh2Chart
from app.families.jacobi import jacobi_at_eta
from app.families.prefactor import PrefactorExponents, csch_t, sech_t

# kind -> (g, h) image of the discrete symmetry
_TWISTS = {
    "twisted-I": lambda g, h: (g, -1 - h),
    "twisted-II": lambda g, h: (1 - g, h),
    "twisted": lambda g, h: (1 - g, -1 - h),
}


class HyperbolicDPT(Family):
    tag = FamilyTag.HDPT
    group = Group.A
    cF = sp.Integer(4)
    param_names = ("g", "h")
    delta = (1, -1)
    generic_names = ("g",)
    chart = Cosh2Chart()
    twist_kinds = tuple(_TWISTS)

    def _validate_domain(self, p: Params) -> None:
        g, h = p["g"], p["h"]
        if not (h > g > HALF):
            raise InvalidParamsError(f"hDPT needs h > g > 1/2, got {p}")

    def nmax(self, p):
        return strict_floor((p["h"] - p["g"]) / 2)

    def energy(self, p, n):
        n = sp.Rational(n)
        return 4 * n * (p["h"] - p["g"] - n)

    def potential_constant(self, p):
        return (p["h"] - p["g"]) ** 2

    def eigen_polynomial(self, p, n):
        return jacobi_at_eta(n, p["g"] - HALF, -p["h"] - HALF).assert_real(f"hDPT P_{n}")

    def phi0(self, p):
        return PrefactorExponents(sinh=p["g"], cosh=-p["h"])

    def f(self, p, n):
        return 2 * (sp.Rational(n) + p["g"] - p["h"])

    def b(self, p, n):
        return -2 * sp.Rational(n)

    def log_norm_constant(self, p, n):
        g, h = float(p["g"]), float(p["h"])
        return float(
            gammaln(n + g + 0.5)
            + gammaln(h - g - n + 1)
            - np.log(2.0)
            - gammaln(n + 1)
            - np.log(h - g - 2 * n)
            - gammaln(h - n + 0.5)
        )

    def potential_t(self, p, t):
        g, h = p["g"], p["h"]
        return (
            csch_t(t).square() * (g * (g - 1))
            - sech_t(t).square() * (h * (h + 1))
            + self.potential_constant(p)
        )

    def potential_float(self, p, x):
        g, h = float(p["g"]), float(p["h"])
        x = np.asarray(x, dtype=float)
        return g * (g - 1) / np.sinh(x) ** 2 - h * (h + 1) / np.cosh(x) ** 2 + (h - g) ** 2

    def endpoint_potential_limits(self, p):
        return np.inf, float((p["h"] - p["g"]) ** 2)

    def overshoot_regions(self, p):
        return [Region("b", p["h"] - p["g"], None, note="I")]

    def twist(self, p, kind):
        if kind not in _TWISTS:
            return super().twist(p, kind)
        g, h = _TWISTS[kind](p["g"], p["h"])
        return Params(p.family, (("g", g), ("h", h)), p.delta, p.half_integer_mode)

    def twist_regions(self, p, kind):
        if kind == "twisted-I":
            return [Region("twisted-I", sp.Integer(0), None, lo_closed=True, note="I")]
        if kind == "twisted-II":
            return [Region("twisted-II", sp.Integer(0), p["g"] - HALF, lo_closed=True, note="II")]
        if kind == "twisted":
            return [Region("twisted", sp.Integer(0), None, lo_closed=True, note="III")]
        return super().twist_regions(p, kind)

    def curve_regions(self, p):
        return [
            Region("a", sp.Integer(0), sp.Integer(self.nmax(p)), True, True),
            Region("b", p["h"] - p["g"], None),
            Region("c", None, sp.Integer(0)),
        ]
