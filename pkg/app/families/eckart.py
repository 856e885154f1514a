"""Kepler problem in hyperbolic space / Eckart (Kh): lambda = (g, mu), delta = (1, 0), eta = coth x."""
import numpy as np
import sympy as sp
from scipy.special import gammaln

from app.core.errors import DomainError, InvalidParamsError
from app.exactcore.numbers import HALF, less_than_sqrt, strict_floor_below_sqrt_gap
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import CothChart
from app.families.jacobi import jacobi_at_eta
from app.families.prefactor import PrefactorExponents, coth_t, csch_t


class Eckart(Family):
    tag = FamilyTag.KH
    group = Group.B
    cF = None
    param_names = ("g", "mu")
    delta = (1, 0)
    generic_names = ("g",)
    chart = CothChart()
    twist_kinds = ("twisted",)

    def _validate_domain(self, p: Params) -> None:
        g, mu = p["g"], p["mu"]
        if not (g > HALF and less_than_sqrt(g, mu)):
            raise InvalidParamsError(f"Kh needs sqrt(mu) > g > 1/2, got {p}")

    def nmax(self, p):
        return strict_floor_below_sqrt_gap(-p["g"], p["mu"], 1)

    def energy_pole(self, p, n) -> bool:
        return p["g"] + sp.Rational(n) == 0

    def _gap(self, p, n) -> sp.Rational:
        if self.energy_pole(p, n):
            raise DomainError(f"Kh energy has a pole at n = -g = {-p['g']}")
        return p["g"] + sp.Rational(n)

    def energy(self, p, n):
        g, mu = p["g"], p["mu"]
        u = self._gap(p, n)
        return g ** 2 - u ** 2 + mu ** 2 / g ** 2 - mu ** 2 / u ** 2

    def potential_constant(self, p):
        return p["g"] ** 2 + p["mu"] ** 2 / p["g"] ** 2

    def jacobi_parameters(self, p, n):
        u = self._gap(p, n)
        return -u + p["mu"] / u, -u - p["mu"] / u

    def eigen_polynomial(self, p, n):
        alpha, beta = self.jacobi_parameters(p, n)
        return jacobi_at_eta(n, alpha, beta).assert_real(f"Kh P_{n}")

    def phi0(self, p):
        return PrefactorExponents(exp_rate=-p["mu"] / p["g"], sinh=p["g"])

    def f(self, p, n):
        g, mu = p["g"], p["mu"]
        u = self._gap(p, n)
        return (mu ** 2 - g ** 2 * u ** 2) / (g * u ** 2)

    def b(self, p, n):
        g = p["g"]
        n = sp.Rational(n)
        return n * (2 * g + n) / g

    def log_norm_constant(self, p, n):
        g, mu = float(p["g"]), float(p["mu"])
        u = g + n
        r = mu / u
        return float(
            np.log(u)
            + gammaln(1 - g + r)
            + gammaln(2 * g + n)
            - (2 * g + 2 * n) * np.log(2.0)
            - gammaln(n + 1)
            - np.log(r ** 2 - u ** 2)
            - gammaln(g + r)
        )

    def potential_t(self, p, t):
        g, mu = p["g"], p["mu"]
        return csch_t(t).square() * (g * (g - 1)) - coth_t(t) * (2 * mu) + self.potential_constant(p)

    def potential_float(self, p, x):
        g, mu = float(p["g"]), float(p["mu"])
        x = np.asarray(x, dtype=float)
        return g * (g - 1) / np.sinh(x) ** 2 - 2 * mu / np.tanh(x) + g ** 2 + mu ** 2 / g ** 2

    def endpoint_potential_limits(self, p):
        g, mu = p["g"], p["mu"]
        return np.inf, float((g - mu / g) ** 2)

    def overshoot_regions(self, p):
        return [Region("b", p["mu"] / p["g"] - p["g"], None, note="I")]

    def twist(self, p, kind):
        if kind != "twisted":
            return super().twist(p, kind)
        return Params(p.family, (("g", 1 - p["g"]), ("mu", p["mu"])), p.delta, p.half_integer_mode)

    def twist_regions(self, p, kind):
        if kind != "twisted":
            return super().twist_regions(p, kind)
        g, mu = p["g"], p["mu"]
        return [
            Region("twisted-low", sp.Integer(0), g - 1, lo_closed=True, note="III"),
            Region("twisted-mid", g - 1, 2 * g - 1, note="II"),
            Region("twisted-high", mu / g + g - 1, None, note="III"),
        ]

    def curve_regions(self, p):
        g, mu = p["g"], p["mu"]
        return [
            Region("a", sp.Integer(0), sp.Integer(self.nmax(p)), True, True),
            Region("b", mu / g - g, None),
            Region("c1", -g, sp.Integer(0)),
            Region("c", None, -g),
        ]
