"""Extended potentials U^[M] = U - 2 d^2/dx^2 log|A_D Xi_D(eta)| and extended wavefunctions."""
from dataclasses import dataclass
from typing import Callable

import numpy as np
import sympy as sp

from app.exactcore.numbers import mpq_to_rational
from app.exactcore.texpr import TExpr
from app.extension.wronskian import FactoredWronskian
from app.families.base import Family, Params


@dataclass(frozen=True)
class PotentialEvaluator:
    family: Family
    params: Params
    wronskian: FactoredWronskian
    singular: bool = False

    def value_texpr(self, t: TExpr) -> TExpr:
        base = self.family.potential_t(self.params, t)
        return base - self.wronskian.d2log(self.family.chart, t) * 2

    def value(self, t) -> sp.Rational:
        """Exact U^[M] at a rational t = e^x inside the domain."""
        t = self.family.chart.check_t(t)
        return mpq_to_rational(self.value_texpr(TExpr.t(t)).value)

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        base = self.family.potential_float(self.params, x)
        return base - 2.0 * self.wronskian.d2log_float(self.family.chart, x)


def ratio_evaluator(family: Family, numerator: FactoredWronskian, denominator: FactoredWronskian) -> Callable:
    """x -> W_num(x) / W_den(x) on float arrays, through logarithms."""
    chart = family.chart

    def evaluate(x):
        x = np.asarray(x, dtype=float)
        log_n, sign_n = numerator.log_abs_float(chart, x)
        log_d, sign_d = denominator.log_abs_float(chart, x)
        return sign_n * sign_d * np.exp(log_n - log_d)

    return evaluate


def reciprocal_evaluator(family: Family, w: FactoredWronskian) -> Callable:
    chart = family.chart

    def evaluate(x):
        x = np.asarray(x, dtype=float)
        log_w, sign_w = w.log_abs_float(chart, x)
        return sign_w * np.exp(-log_w)

    return evaluate
