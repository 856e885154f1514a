"""
Exact values of rational functions of t = e^x, carried together with bounds
on the numerator and denominator degrees of the function they came from.

Evaluating an expression at one sample gives its value; the degree bounds
tell how many distinct samples turn a vanishing check into a proof.
"""
from dataclasses import dataclass
from sympy.polys.domains import QQ

from app.core.errors import SamplingError


@dataclass(frozen=True)
class TExpr:
    value: object
    num: int = 0
    den: int = 0

    @staticmethod
    def const(value) -> "TExpr":
        v = value if isinstance(value, QQ.dtype) else QQ.convert(value)
        return TExpr(v, 0, 0)

    @staticmethod
    def t(value) -> "TExpr":
        v = value if isinstance(value, QQ.dtype) else QQ.convert(value)
        return TExpr(v, 1, 0)

    def _lift(self, other) -> "TExpr":
        return other if isinstance(other, TExpr) else TExpr.const(other)

    def __add__(self, other) -> "TExpr":
        o = self._lift(other)
        return TExpr(self.value + o.value, max(self.num + o.den, o.num + self.den), self.den + o.den)

    __radd__ = __add__

    def __neg__(self) -> "TExpr":
        return TExpr(-self.value, self.num, self.den)

    def __sub__(self, other) -> "TExpr":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "TExpr":
        return self._lift(other) - self

    def __mul__(self, other) -> "TExpr":
        o = self._lift(other)
        return TExpr(self.value * o.value, self.num + o.num, self.den + o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TExpr":
        o = self._lift(other)
        if o.value == 0:
            raise SamplingError("Sample point hits a pole")
        return TExpr(self.value / o.value, self.num + o.den, self.den + o.num)

    def __rtruediv__(self, other) -> "TExpr":
        return self._lift(other) / self

    def square(self) -> "TExpr":
        return self * self

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def degree_bound(self) -> int:
        """Distinct zeros allowed before the function must vanish identically."""
        return self.num


def horner(coeffs, x: TExpr) -> TExpr:
    """Evaluate a polynomial with ascending QQ coefficients at a TExpr."""
    acc = TExpr.const(QQ.zero)
    for c in reversed(coeffs):
        acc = acc * x + TExpr.const(c)
    return acc
