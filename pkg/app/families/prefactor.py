"""
Closed-form prefactors of seed functions and Wronskians.

A prefactor is a product of the building blocks

    scale * e^{a x} * |sinh x|^b * (cosh x)^c * e^{k1 e^x} * e^{k2 arctan(sinh x)}

Its logarithmic derivatives are rational in t = e^x, which is what the
exact identity checks evaluate.
"""
from dataclasses import dataclass, fields
import numpy as np
import sympy as sp

from app.core.errors import DomainError
from app.exactcore.texpr import TExpr

_LOG2 = float(np.log(2.0))


# --- hyperbolic functions as rational functions of t -----------------------

def sinh_t(t: TExpr) -> TExpr:
    return (t - 1 / t) * sp.Rational(1, 2)


def cosh_t(t: TExpr) -> TExpr:
    return (t + 1 / t) * sp.Rational(1, 2)


def tanh_t(t: TExpr) -> TExpr:
    t2 = t * t
    return (t2 - 1) / (t2 + 1)


def coth_t(t: TExpr) -> TExpr:
    t2 = t * t
    return (t2 + 1) / (t2 - 1)


def sech_t(t: TExpr) -> TExpr:
    return (t * 2) / (t * t + 1)


def csch_t(t: TExpr) -> TExpr:
    return (t * 2) / (t * t - 1)


def _ipow(x: TExpr, k: int) -> TExpr:
    out = TExpr.const(1)
    for _ in range(abs(k)):
        out = out * x
    return out if k >= 0 else 1 / out


# --- stable float logs -----------------------------------------------------

def log_cosh(x: np.ndarray) -> np.ndarray:
    return np.logaddexp(x, -x) - _LOG2


def log_abs_sinh(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    with np.errstate(divide="ignore"):
        return ax + np.log1p(-np.exp(-2.0 * ax)) - _LOG2


@dataclass(frozen=True)
class PrefactorExponents:
    exp_rate: sp.Rational = sp.Integer(0)
    sinh: sp.Rational = sp.Integer(0)
    cosh: sp.Rational = sp.Integer(0)
    exp_exp: sp.Rational = sp.Integer(0)
    arctan_sinh: sp.Rational = sp.Integer(0)
    scale: sp.Rational = sp.Integer(1)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, sp.Rational(getattr(self, f.name)))

    def __mul__(self, other: "PrefactorExponents") -> "PrefactorExponents":
        return PrefactorExponents(
            exp_rate=self.exp_rate + other.exp_rate,
            sinh=self.sinh + other.sinh,
            cosh=self.cosh + other.cosh,
            exp_exp=self.exp_exp + other.exp_exp,
            arctan_sinh=self.arctan_sinh + other.arctan_sinh,
            scale=self.scale * other.scale,
        )

    def __pow__(self, k) -> "PrefactorExponents":
        k = sp.Rational(k)
        return PrefactorExponents(
            exp_rate=self.exp_rate * k,
            sinh=self.sinh * k,
            cosh=self.cosh * k,
            exp_exp=self.exp_exp * k,
            arctan_sinh=self.arctan_sinh * k,
            scale=self.scale ** k,
        )

    def reciprocal(self) -> "PrefactorExponents":
        return self ** -1

    def with_scale(self, scale) -> "PrefactorExponents":
        return PrefactorExponents(self.exp_rate, self.sinh, self.cosh, self.exp_exp,
                                  self.arctan_sinh, sp.Rational(scale))

    @property
    def blocks(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "scale"}

    # --- exact log-derivatives at t ----------------------------------

    def dlog(self, t: TExpr) -> TExpr:
        out = TExpr.const(self.exp_rate)
        if self.sinh != 0:
            out = out + coth_t(t) * self.sinh
        if self.cosh != 0:
            out = out + tanh_t(t) * self.cosh
        if self.exp_exp != 0:
            out = out + t * self.exp_exp
        if self.arctan_sinh != 0:
            out = out + sech_t(t) * self.arctan_sinh
        return out

    def d2log(self, t: TExpr) -> TExpr:
        out = TExpr.const(0)
        if self.sinh != 0:
            out = out - csch_t(t).square() * self.sinh
        if self.cosh != 0:
            out = out + sech_t(t).square() * self.cosh
        if self.exp_exp != 0:
            out = out + t * self.exp_exp
        if self.arctan_sinh != 0:
            out = out - sech_t(t) * tanh_t(t) * self.arctan_sinh
        return out

    def value_t(self, t: TExpr) -> TExpr:
        """Exact value; only integer powers of e^x, sinh and cosh are rational in t."""
        if self.exp_exp != 0 or self.arctan_sinh != 0:
            raise DomainError("Prefactor with exp(e^x) or arctan blocks has no rational value")
        out = TExpr.const(self.scale)
        for base, k in ((t, self.exp_rate), (sinh_t(t), self.sinh), (cosh_t(t), self.cosh)):
            if k.q != 1:
                raise DomainError(f"Non-integer exponent {k} has no rational value")
            out = out * _ipow(base, int(k))
        return out

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.blocks.values())

    # --- float evaluation ---------------------------------------------

    def log_abs(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = float(self.exp_rate) * x + np.log(abs(float(self.scale)))
        if self.sinh != 0:
            out = out + float(self.sinh) * log_abs_sinh(x)
        if self.cosh != 0:
            out = out + float(self.cosh) * log_cosh(x)
        if self.exp_exp != 0:
            out = out + float(self.exp_exp) * np.exp(x)
        if self.arctan_sinh != 0:
            out = out + float(self.arctan_sinh) * np.arctan(np.sinh(x))
        return out

    def sign(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        s = np.full_like(x, 1.0 if self.scale > 0 else -1.0)
        if self.sinh != 0 and self.sinh.q == 1 and self.sinh.p % 2 == 1:
            s = s * np.sign(x)
        return s

    def dlog_float(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.full_like(x, float(self.exp_rate))
        if self.sinh != 0:
            out = out + float(self.sinh) / np.tanh(x)
        if self.cosh != 0:
            out = out + float(self.cosh) * np.tanh(x)
        if self.exp_exp != 0:
            out = out + float(self.exp_exp) * np.exp(x)
        if self.arctan_sinh != 0:
            out = out + float(self.arctan_sinh) / np.cosh(x)
        return out

    def d2log_float(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        if self.sinh != 0:
            out = out - float(self.sinh) / np.sinh(x) ** 2
        if self.cosh != 0:
            out = out + float(self.cosh) / np.cosh(x) ** 2
        if self.exp_exp != 0:
            out = out + float(self.exp_exp) * np.exp(x)
        if self.arctan_sinh != 0:
            out = out - float(self.arctan_sinh) * np.tanh(x) / np.cosh(x)
        return out


ONE = PrefactorExponents()
