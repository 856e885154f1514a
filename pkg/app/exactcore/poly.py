"""
PolyQ: univariate polynomials in the sinusoidal coordinate eta with exact
Gaussian-rational coefficients.

The coefficient field is QQ_I throughout so that the imaginary-argument
Jacobi constructions fold back exactly; `is_real` tells whether every
imaginary part vanished.
"""
from typing import List, Optional, Sequence
import numpy as np
import sympy as sp
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from app.core.errors import DomainError, InternalConsistencyError

ETA = sp.Symbol("eta")


class PolyQ:
    __slots__ = ("_poly", "_real_cache")

    def __init__(self, poly: sp.Poly):
        if poly.gens != (ETA,):
            raise DomainError(f"PolyQ must be univariate in {ETA}, got {poly.gens}")
        self._poly = poly if poly.domain == QQ_I else poly.set_domain(QQ_I)
        self._real_cache = None

    # --- construction -------------------------------------------------

    @classmethod
    def from_expr(cls, expr) -> "PolyQ":
        return cls(sp.Poly(sp.sympify(expr), ETA, domain=QQ_I))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "PolyQ":
        """Coefficients indexed by power of eta (ascending)."""
        if not coeffs:
            return cls.zero()
        return cls(sp.Poly(list(reversed([sp.sympify(c) for c in coeffs])), ETA, domain=QQ_I))

    @classmethod
    def constant(cls, value) -> "PolyQ":
        return cls(sp.Poly(sp.sympify(value), ETA, domain=QQ_I))

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls.constant(0)

    @classmethod
    def one(cls) -> "PolyQ":
        return cls.constant(1)

    @classmethod
    def eta(cls) -> "PolyQ":
        return cls(sp.Poly(ETA, ETA, domain=QQ_I))

    # --- inspection ---------------------------------------------------

    @property
    def sympy_poly(self) -> sp.Poly:
        return self._poly

    @property
    def degree(self) -> int:
        """Degree in eta; -1 for the zero polynomial."""
        if self._poly.is_zero:
            return -1
        return int(self._poly.degree())

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    @property
    def coeffs(self) -> List[sp.Expr]:
        """Ascending coefficient list as sympy numbers."""
        if self.is_zero:
            return []
        return list(reversed(self._poly.all_coeffs()))

    @property
    def is_real(self) -> bool:
        return all(sp.im(c) == 0 for c in self.coeffs)

    @property
    def leading_coefficient(self) -> sp.Expr:
        return self._poly.LC()

    def coefficient(self, power: int) -> sp.Expr:
        if power < 0 or power > self.degree:
            return sp.Integer(0)
        return self._poly.coeff_monomial(ETA ** power)

    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr()

    # --- real views ---------------------------------------------------

    def assert_real(self, context: str = "") -> "PolyQ":
        if not self.is_real:
            raise InternalConsistencyError(
                f"Imaginary residue left in polynomial {context}".strip(),
                poly=self.as_expr(),
            )
        return self

    def real_poly(self) -> sp.Poly:
        """The same polynomial over QQ; fails when an imaginary part survives."""
        self.assert_real()
        if self.is_zero:
            return sp.Poly(0, ETA, domain=QQ)
        return sp.Poly([sp.re(c) for c in self._poly.all_coeffs()], ETA, domain=QQ)

    def qq_coeffs(self) -> List:
        if self._real_cache is None:
            self.assert_real()
            self._real_cache = [QQ.convert(sp.re(c)) for c in self.coeffs]
        return self._real_cache

    def eval_exact(self, x):
        """Horner evaluation at a QQ element (or a value QQ can convert)."""
        x = x if isinstance(x, QQ.dtype) else QQ.convert(x)
        acc = QQ.zero
        for c in reversed(self.qq_coeffs()):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> np.ndarray:
        """Ascending float64 coefficients of a real polynomial."""
        return np.array([float(QQ.to_sympy(c)) for c in self.qq_coeffs()], dtype=float)

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "PolyQ":
        return PolyQ(self._poly + _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other) -> "PolyQ":
        return PolyQ(self._poly - _as_poly(other))

    def __rsub__(self, other) -> "PolyQ":
        return PolyQ(_as_poly(other) - self._poly)

    def __mul__(self, other) -> "PolyQ":
        return PolyQ(self._poly * _as_poly(other))

    __rmul__ = __mul__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-self._poly)

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise DomainError("Negative powers are not polynomials")
        return PolyQ(self._poly ** k)

    def diff(self, order: int = 1) -> "PolyQ":
        p = self._poly
        for _ in range(order):
            p = p.diff(ETA)
        return PolyQ(p)

    def scale(self, value) -> "PolyQ":
        return PolyQ(self._poly * _as_poly(value))

    def exquo(self, other: "PolyQ") -> "PolyQ":
        """Exact division; raises when a remainder is left."""
        q, r = self._poly.div(_as_poly(other))
        if not r.is_zero:
            raise InternalConsistencyError("Polynomial division left a remainder")
        return PolyQ(q)

    def divmod(self, other: "PolyQ"):
        q, r = self._poly.div(_as_poly(other))
        return PolyQ(q), PolyQ(r)

    def divisible_by(self, other: "PolyQ") -> bool:
        return self.divmod(other)[1].is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self) -> int:
        return hash(tuple(str(c) for c in self.coeffs))

    def __repr__(self) -> str:
        return f"PolyQ({self.as_expr()})"


def _as_poly(value) -> sp.Poly:
    if isinstance(value, PolyQ):
        return value.sympy_poly
    return sp.Poly(sp.sympify(value), ETA, domain=QQ_I)


def poly_determinant(rows: List[List[PolyQ]]) -> PolyQ:
    """Fraction-free determinant of a square matrix of PolyQ entries."""
    n = len(rows)
    if n == 0:
        return PolyQ.one()
    ring = QQ_I.poly_ring(ETA)
    entries = [[ring.from_sympy(e.as_expr()) for e in row] for row in rows]
    det = DomainMatrix(entries, (n, n), ring).det()
    return PolyQ.from_expr(ring.to_sympy(det))


def poly_wronskian(fs: Sequence[PolyQ]) -> PolyQ:
    """W[f_1,...,f_n] in eta: the determinant of successive derivatives."""
    fs = list(fs)
    if not fs:
        raise DomainError("Wronskian of an empty list")
    reals = {f.is_real for f in fs}
    if len(reals) > 1:
        raise DomainError("Wronskian entries must be all real or all Gaussian")
    n = len(fs)
    if n == 1:
        return fs[0]
    # rows are derivative orders, columns the functions
    rows = [[f.diff(i) for f in fs] for i in range(n)]
    return poly_determinant(rows)


def poly_proportional(p: PolyQ, q: PolyQ) -> Optional[sp.Expr]:
    """c with p = c*q when such a constant exists, else None."""
    if p.is_zero or q.is_zero:
        raise DomainError("Proportionality test needs nonzero polynomials")
    if p.degree != q.degree:
        return None
    ratio = QQ_I.from_sympy(p.leading_coefficient) / QQ_I.from_sympy(q.leading_coefficient)
    c = QQ_I.to_sympy(ratio)
    if p == q.scale(c):
        return c
    return None
