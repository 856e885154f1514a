"""
Exact scalars: sympy Rationals for parameters, fast QQ conversions, and the
strict floor used by n_max.
"""
from fractions import Fraction
from typing import Optional, Union
import sympy as sp
from sympy.polys.domains import QQ

from app.core.errors import DomainError

RationalLike = Union[int, str, Fraction, sp.Rational]

HALF = sp.Rational(1, 2)


def to_rational(value: RationalLike) -> sp.Rational:
    """Parse "10/3", 7, Fraction or Rational into a sympy Rational. Floats are refused."""
    if isinstance(value, bool):
        raise DomainError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, float):
        raise DomainError(f"Floats are not accepted as exact parameters: {value!r}")
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                if int(den) == 0:
                    raise DomainError(f"Zero denominator in {value!r}")
                return sp.Rational(int(num), int(den))
            return sp.Integer(int(text))
        except ValueError as exc:
            raise DomainError(f"Not an exact rational string: {value!r}") from exc
    raise DomainError(f"Unsupported rational value: {value!r}")


def format_rational(value) -> str:
    r = sp.Rational(value)
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"


def is_integer(value: sp.Rational) -> bool:
    return sp.Rational(value).q == 1


def is_half_odd(value: sp.Rational) -> bool:
    return sp.Rational(value).q == 2


def strict_floor(value: sp.Rational) -> int:
    """[a]': the greatest integer strictly below a."""
    r = sp.Rational(value)
    f = int(sp.floor(r))
    return f - 1 if f == r else f


def exact_sqrt(value: sp.Rational) -> Optional[sp.Rational]:
    """Square root when the rational is a perfect square, else None."""
    r = sp.Rational(value)
    if r < 0:
        return None
    root = sp.sqrt(r)
    return root if root.is_Rational else None


def less_than_sqrt(x: sp.Rational, mu: sp.Rational) -> bool:
    """x < sqrt(mu) decided without floats."""
    return x < 0 or x * x < mu


def greater_than_sqrt(x: sp.Rational, mu: sp.Rational) -> bool:
    """x > sqrt(mu) decided without floats."""
    return x > 0 and x * x > mu


def strict_floor_below_sqrt_gap(a: sp.Rational, mu: sp.Rational, sign: int) -> int:
    """
    Greatest integer n with n < a + sign*sqrt(mu).

    sign=-1 gives [a - sqrt(mu)]', sign=+1 gives [sqrt(mu) + a]'.
    """
    root = exact_sqrt(mu)
    if root is not None:
        return strict_floor(a + sign * root)
    n = int(sp.floor(a + sign * sp.sqrt(mu)))
    # Irrational bound: the float guess is only a starting point, settle it exactly
    while _below(n + 1, a, mu, sign):
        n += 1
    while not _below(n, a, mu, sign):
        n -= 1
    return n


def _below(n: int, a: sp.Rational, mu: sp.Rational, sign: int) -> bool:
    # n < a + sign*sqrt(mu)
    gap = a - n
    if sign < 0:
        return greater_than_sqrt(gap, mu)
    return gap > 0 or gap * gap < mu


def mpq(value) -> object:
    """Fast exact rational (QQ domain element) from a sympy Rational or int."""
    return QQ.convert(sp.Rational(value))


def mpq_to_rational(value) -> sp.Rational:
    return QQ.to_sympy(value)
