"""
Wronskians of functions of the form prefactor x polynomial(eta), in factored form.

For a chart gauge sigma(x) with sigma*d/dx log(prefactor) and sigma*eta'
polynomial in eta, the scaled derivatives sigma^i d^i/dx^i (A P) equal
A * R_i(eta) with

    R_0 = P,  R_{i+1} = (g_A - i g_sigma) R_i + (sigma eta') R_i'

where g_A = sigma (log A)' and g_sigma = sigma'. Hence

    W[A_1 P_1, ..., A_M P_M] = prod A_j * sigma^{-M(M-1)/2} * det(R_i^{(j)}).
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from app.core.errors import DomainError
from app.exactcore.poly import PolyQ, poly_determinant
from app.exactcore.texpr import TExpr, horner
from app.families.base import Chart
from app.families.prefactor import ONE, PrefactorExponents

Function = Tuple[PrefactorExponents, PolyQ]


@dataclass(frozen=True)
class FactoredWronskian:
    """W(x) = prefactor(x) * poly(eta(x))."""

    prefactor: PrefactorExponents
    poly: PolyQ

    # --- exact log-derivatives at t = e^x --------------------------------

    def _poly_ratios(self, chart: Chart, t: TExpr):
        eta = chart.eta(t)
        coeffs = self.poly.qq_coeffs()
        p = horner(coeffs, eta)
        p1 = horner(self.poly.diff(1).qq_coeffs(), eta)
        p2 = horner(self.poly.diff(2).qq_coeffs(), eta)
        return p1 / p, p2 / p

    def dlog(self, chart: Chart, t: TExpr) -> TExpr:
        r1, _ = self._poly_ratios(chart, t)
        return self.prefactor.dlog(t) + chart.deta(t) * r1

    def d2log(self, chart: Chart, t: TExpr) -> TExpr:
        r1, r2 = self._poly_ratios(chart, t)
        deta = chart.deta(t)
        return self.prefactor.d2log(t) + chart.d2eta(t) * r1 + deta.square() * (r2 - r1.square())

    def value(self, chart: Chart, t: TExpr) -> TExpr:
        return self.prefactor.value_t(t) * horner(self.poly.qq_coeffs(), chart.eta(t))

    # --- float evaluation --------------------------------------------------

    def log_abs_float(self, chart: Chart, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """(log|W|, sign W) on an array of x."""
        log_p, sign_p = log_abs_poly(self.poly, chart.eta_float(x))
        return self.prefactor.log_abs(x) + log_p, self.prefactor.sign(x) * sign_p

    def dlog_float(self, chart: Chart, x: np.ndarray) -> np.ndarray:
        r1, _ = poly_log_ratios(self.poly, chart.eta_float(x))
        return self.prefactor.dlog_float(x) + chart.deta_float(x) * r1

    def d2log_float(self, chart: Chart, x: np.ndarray) -> np.ndarray:
        r1, r2 = poly_log_ratios(self.poly, chart.eta_float(x))
        deta = chart.deta_float(x)
        return self.prefactor.d2log_float(x) + chart.d2eta_float(x) * r1 + deta ** 2 * (r2 - r1 ** 2)


def log_abs_poly(poly: PolyQ, eta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    log|P(eta)| and sign P(eta), evaluated in the reversed variable u = 1/eta
    where |eta| > 1 so that high degrees do not overflow.
    """
    eta = np.asarray(eta, dtype=float)
    c = poly.float_coeffs()
    if c.size == 0:
        raise DomainError("log|P| of the zero polynomial")
    deg = c.size - 1
    out_log = np.empty_like(eta)
    out_sign = np.empty_like(eta)
    small = np.abs(eta) <= 1.0
    if np.any(small):
        v = np.polynomial.polynomial.polyval(eta[small], c)
        with np.errstate(divide="ignore"):
            out_log[small] = np.log(np.abs(v))
        out_sign[small] = np.sign(v)
    big = ~small
    if np.any(big):
        e = eta[big]
        u = 1.0 / e
        v = np.polynomial.polynomial.polyval(u, c[::-1])
        with np.errstate(divide="ignore"):
            out_log[big] = deg * np.log(np.abs(e)) + np.log(np.abs(v))
        out_sign[big] = np.sign(v) * np.sign(e) ** deg
    return out_log, out_sign


def poly_log_ratios(poly: PolyQ, eta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """P'/P and P''/P in float, stable for large |eta|."""
    eta = np.asarray(eta, dtype=float)
    c = poly.float_coeffs()
    deg = c.size - 1
    if deg <= 0:
        zeros = np.zeros_like(eta)
        return zeros, zeros
    c1 = np.polynomial.polynomial.polyder(c, 1)
    c2 = np.polynomial.polynomial.polyder(c, 2) if deg >= 2 else np.zeros(1)
    small = np.abs(eta) <= 1.0
    r1 = np.empty_like(eta)
    r2 = np.empty_like(eta)
    if np.any(small):
        e = eta[small]
        p = np.polynomial.polynomial.polyval(e, c)
        r1[small] = np.polynomial.polynomial.polyval(e, c1) / p
        r2[small] = np.polynomial.polynomial.polyval(e, c2) / p
    big = ~small
    if np.any(big):
        e = eta[big]
        u = 1.0 / e
        # P(e) = e^d p(u), P'(e) = e^{d-1} p1(u), P''(e) = e^{d-2} p2(u)
        p = np.polynomial.polynomial.polyval(u, c[::-1])
        p1 = np.polynomial.polynomial.polyval(u, _padded_reverse(c1, deg - 1))
        p2 = np.polynomial.polynomial.polyval(u, _padded_reverse(c2, deg - 2)) if deg >= 2 else 0.0 * u
        r1[big] = u * p1 / p
        r2[big] = u * u * p2 / p
    return r1, r2


def _padded_reverse(c: np.ndarray, deg: int) -> np.ndarray:
    out = np.zeros(max(deg, 0) + 1)
    out[: c.size] = c[: out.size]
    return out[::-1]


def scaled_derivative_rows(chart: Chart, prefactor: PrefactorExponents, poly: PolyQ, size: int) -> List[PolyQ]:
    g_a = chart.gauge_dlog(prefactor)
    g_sigma = chart.gauge_dlog(chart.sigma)
    s_eta = chart.sigma_deta()
    rows = [poly]
    for i in range(1, size):
        prev = rows[-1]
        rows.append((g_a - g_sigma.scale(i - 1)) * prev + s_eta * prev.diff())
    return rows


def wronskian(chart: Chart, functions: Sequence[Function]) -> FactoredWronskian:
    """Factored Wronskian of prefactor x polynomial functions; the empty list gives 1."""
    functions = list(functions)
    m = len(functions)
    if m == 0:
        return FactoredWronskian(ONE, PolyQ.one())
    columns = [scaled_derivative_rows(chart, a, p, m) for a, p in functions]
    matrix = [[columns[j][i] for j in range(m)] for i in range(m)]
    det = poly_determinant(matrix)
    prefactor = ONE
    for a, _ in functions:
        prefactor = prefactor * a
    prefactor = prefactor * chart.sigma ** (-(m * (m - 1) // 2))
    return FactoredWronskian(prefactor, det)
