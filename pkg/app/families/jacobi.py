"""
Classical orthogonal polynomials by explicit hypergeometric sums.

Coefficients live in QQ_I so that complex parameters and imaginary arguments
stay exact. The sums are used instead of three-term recurrences because the
recurrences divide by quantities that vanish at the half-integer couplings
where degree reduction happens.
"""
from functools import lru_cache
import sympy as sp
from sympy.polys.domains import QQ_I

from app.exactcore.poly import ETA, PolyQ


def _gauss(value):
    if isinstance(value, QQ_I.dtype):
        return value
    return QQ_I.from_sympy(sp.sympify(value))


def generalized_binomial(a, k: int):
    """binom(a, k) = a(a-1)...(a-k+1)/k! for any Gaussian-rational a, as a QQ_I element."""
    if k < 0:
        return QQ_I.zero
    a = _gauss(a)
    acc = QQ_I.one
    for j in range(k):
        acc = acc * (a - QQ_I.convert(j))
    return acc / QQ_I.convert(sp.factorial(k))


def pochhammer(a, k: int) -> sp.Expr:
    """(a)_k as a sympy number."""
    acc = sp.Integer(1)
    for j in range(k):
        acc = acc * (sp.sympify(a) + j)
    return sp.expand(acc)


def jacobi(n: int, alpha, beta, argument: PolyQ) -> PolyQ:
    """P_n^{(alpha,beta)}(argument) for a polynomial argument."""
    if n < 0:
        raise ValueError(f"Negative Jacobi degree {n}")
    half = sp.Rational(1, 2)
    minus = (argument - 1).scale(half)
    plus = (argument + 1).scale(half)
    total = PolyQ.zero()
    for s in range(n + 1):
        c = generalized_binomial(_gauss(alpha) + QQ_I.convert(n), n - s) * generalized_binomial(
            _gauss(beta) + QQ_I.convert(n), s
        )
        if c == QQ_I.zero:
            continue
        total = total + (minus ** s * plus ** (n - s)).scale(QQ_I.to_sympy(c))
    return total


@lru_cache(maxsize=4096)
def jacobi_at_eta(n: int, alpha, beta) -> PolyQ:
    return jacobi(n, alpha, beta, PolyQ.eta())


@lru_cache(maxsize=4096)
def jacobi_at_i_eta(n: int, alpha, beta) -> PolyQ:
    return jacobi(n, alpha, beta, PolyQ.from_expr(sp.I * ETA))


def laguerre_coefficients(n: int, alpha):
    """Coefficients c_k of L_n^{(alpha)}(z) = sum_k c_k z^k, as QQ_I elements."""
    out = []
    for k in range(n + 1):
        c = generalized_binomial(_gauss(alpha) + QQ_I.convert(n), n - k)
        sign = QQ_I.one if k % 2 == 0 else -QQ_I.one
        out.append(c * sign / QQ_I.convert(sp.factorial(k)))
    return out
