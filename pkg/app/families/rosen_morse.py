"""Rosen-Morse II potential (RM): lambda = (h, mu), delta = (-1, 0), eta = tanh x."""
import numpy as np
import sympy as sp
from scipy.special import gammaln

from app.core.errors import DomainError, InvalidParamsError
from app.exactcore.numbers import is_integer, strict_floor_below_sqrt_gap
from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.charts import TanhChart
from app.families.jacobi import jacobi_at_eta
from app.families.prefactor import PrefactorExponents, sech_t, tanh_t


class RosenMorse(Family):
    tag = FamilyTag.RM
    group = Group.B
    cF = None
    param_names = ("h", "mu")
    delta = (-1, 0)
    generic_names = ("h",)
    chart = TanhChart()

    def _validate_domain(self, p: Params) -> None:
        h, mu = p["h"], p["mu"]
        if not (mu > 0 and h > 0 and h ** 2 > mu):
            raise InvalidParamsError(f"Rosen-Morse needs h > sqrt(mu) > 0, got {p}")

    def nmax(self, p):
        return strict_floor_below_sqrt_gap(p["h"], p["mu"], -1)

    def energy_pole(self, p, n) -> bool:
        return sp.Rational(n) == p["h"]

    def _gap(self, p, n) -> sp.Rational:
        if self.energy_pole(p, n):
            raise DomainError(f"Rosen-Morse energy has a pole at n = h = {p['h']}")
        return p["h"] - sp.Rational(n)

    def energy(self, p, n):
        h, mu = p["h"], p["mu"]
        u = self._gap(p, n)
        return h ** 2 - u ** 2 + mu ** 2 / h ** 2 - mu ** 2 / u ** 2

    def jacobi_parameters(self, p, n):
        u = self._gap(p, n)
        return u + p["mu"] / u, u - p["mu"] / u

    def eigen_polynomial(self, p, n):
        alpha, beta = self.jacobi_parameters(p, n)
        return jacobi_at_eta(n, alpha, beta).assert_real(f"Rosen-Morse P_{n}")

    def phi0(self, p):
        return PrefactorExponents(exp_rate=-p["mu"] / p["h"], cosh=-p["h"])

    def f(self, p, n):
        h, mu = p["h"], p["mu"]
        u = self._gap(p, n)
        return (h ** 2 * u ** 2 - mu ** 2) / (h * u ** 2)

    def b(self, p, n):
        h = p["h"]
        n = sp.Rational(n)
        return n * (2 * h - n) / h

    def log_norm_constant(self, p, n):
        h, mu = float(p["h"]), float(p["mu"])
        u = h - n
        r = mu / u
        return float(
            (2 * h - 2 * n) * np.log(2.0)
            + np.log(u)
            + gammaln(h + r + 1)
            + gammaln(h - r + 1)
            - gammaln(n + 1)
            - np.log(u ** 2 - r ** 2)
            - gammaln(2 * h - n + 1)
        )

    def potential_t(self, p, t):
        h, mu = p["h"], p["mu"]
        return sech_t(t).square() * (-h * (h + 1)) + tanh_t(t) * (2 * mu) + h ** 2 + mu ** 2 / h ** 2

    def potential_float(self, p, x):
        h, mu = float(p["h"]), float(p["mu"])
        x = np.asarray(x, dtype=float)
        return -h * (h + 1) / np.cosh(x) ** 2 + 2 * mu * np.tanh(x) + h ** 2 + mu ** 2 / h ** 2

    def endpoint_potential_limits(self, p):
        h, mu = p["h"], p["mu"]
        return float((h - mu / h) ** 2), float((h + mu / h) ** 2)

    def overshoot_regions(self, p):
        h, mu = p["h"], p["mu"]
        return [
            Region("b1", h - mu / h, h, note="II"),
            Region("b2", h, h + mu / h, note="I"),
            Region("b3", 2 * h, None, note="III"),
        ]

    def curve_regions(self, p):
        return [Region("a", sp.Integer(0), sp.Integer(self.nmax(p)), True, True)] + self.overshoot_regions(p) + [
            Region("c", None, sp.Integer(0))
        ]

    def reflected_energy(self, p, n) -> sp.Rational:
        """E_{2h-n}; equal to E_n for every real n."""
        return self.energy(p, 2 * p["h"] - sp.Rational(n))

    def reduced_degree(self, p, v: int) -> int:
        """Actual degree of P_v: v - 2h - 1 in half-integer mode when 2h is an integer and v > 2h."""
        h = p["h"]
        if p.half_integer_mode and is_integer(2 * h) and v > 2 * h:
            return int(v - 2 * h - 1)
        return int(v)
