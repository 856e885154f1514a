"""
Shared data model of the six shape-invariant families: tags, parameters,
sinusoidal-coordinate charts and the abstract Family contract.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple
import numpy as np
import sympy as sp

from app.core.errors import DomainError, InvalidParamsError, NonGenericError
from app.exactcore.numbers import is_half_odd, is_integer, mpq_to_rational, to_rational
from app.exactcore.poly import PolyQ
from app.exactcore.sturm import OpenInterval
from app.exactcore.texpr import TExpr
from app.families.prefactor import PrefactorExponents


class FamilyTag(str, Enum):
    M = "M"
    S = "s"
    RM = "RM"
    HST = "hst"
    KH = "Kh"
    HDPT = "hDPT"

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        for tag in cls:
            if tag.value.lower() == str(text).strip().lower() or tag.name.lower() == str(text).strip().lower():
                return tag
        raise DomainError(f"Unknown family tag: {text!r}")


class Group(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Params:
    family: FamilyTag
    values: Tuple[Tuple[str, sp.Rational], ...]
    delta: Tuple[int, ...]
    half_integer_mode: bool = False

    def __getitem__(self, name: str) -> sp.Rational:
        for key, value in self.values:
            if key == name:
                return value
        raise KeyError(name)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(k for k, _ in self.values)

    def as_dict(self) -> Dict[str, sp.Rational]:
        return dict(self.values)

    def shifted(self, k) -> "Params":
        """lambda + k*delta, kept as formal rationals without validation."""
        k = sp.Rational(k)
        values = tuple((name, value + k * d) for (name, value), d in zip(self.values, self.delta))
        return Params(self.family, values, self.delta, self.half_integer_mode)

    def replace(self, **changes) -> "Params":
        values = tuple((name, sp.Rational(changes.get(name, value))) for name, value in self.values)
        return Params(self.family, values, self.delta, self.half_integer_mode)

    def __str__(self) -> str:
        body = ", ".join(f"{k}={v}" for k, v in self.values)
        return f"{self.family.value}({body})"


@dataclass(frozen=True)
class Region:
    """An interval of the (real) degree variable with a curve label."""

    label: str
    lo: Optional[sp.Rational]
    hi: Optional[sp.Rational]
    lo_closed: bool = False
    hi_closed: bool = False
    note: str = ""

    def contains(self, v) -> bool:
        v = sp.Rational(v)
        above = self.lo is None or v > self.lo or (self.lo_closed and v == self.lo)
        below = self.hi is None or v < self.hi or (self.hi_closed and v == self.hi)
        return above and below

    def on_boundary(self, v) -> bool:
        v = sp.Rational(v)
        return (self.lo is not None and v == self.lo and not self.lo_closed) or (
            self.hi is not None and v == self.hi and not self.hi_closed
        )


@dataclass(frozen=True)
class EndpointLimit:
    """Leading behaviour of prefactor x polynomial at one end of the x-domain."""

    end: str
    kind: str
    value: Optional[sp.Rational] = None
    eta_value: Optional[sp.Rational] = None


class Chart(ABC):
    """Sinusoidal coordinate eta(x), its derivatives, and the Wronskian gauge."""

    interval: OpenInterval
    x_lo: float
    x_hi: float
    t_min: sp.Rational
    sigma: PrefactorExponents
    deta_prefactor: PrefactorExponents

    @abstractmethod
    def eta(self, t: TExpr) -> TExpr: ...

    @abstractmethod
    def deta(self, t: TExpr) -> TExpr: ...

    @abstractmethod
    def d2eta(self, t: TExpr) -> TExpr: ...

    @abstractmethod
    def eta_float(self, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def deta_float(self, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def d2eta_float(self, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def gauge_dlog(self, prefactor: PrefactorExponents) -> PolyQ:
        """sigma * d/dx log(prefactor) as a polynomial in eta."""

    @abstractmethod
    def sigma_deta(self) -> PolyQ:
        """sigma * d eta/dx as a polynomial in eta."""

    @abstractmethod
    def endpoint_limits(self, prefactor: PrefactorExponents, degree: int) -> Tuple[EndpointLimit, EndpointLimit]: ...

    def check_t(self, t) -> sp.Rational:
        t = sp.Rational(t)
        if not t > self.t_min:
            raise DomainError(f"t={t} lies outside the x-domain image (t > {self.t_min})")
        return t

    def _reject(self, prefactor: PrefactorExponents, *names: str):
        for name in names:
            if getattr(prefactor, name) != 0:
                raise DomainError(f"Block {name} is not polynomial in this chart's gauge")


def _generic_value(name: str, value: sp.Rational, half_integer_mode: bool) -> None:
    if half_integer_mode:
        return
    if is_integer(value) or is_half_odd(value):
        raise NonGenericError(
            f"{name}={value} is an integer or half-odd-integer; enable half-integer mode to allow it",
            parameter=name,
        )


class Family(ABC):
    tag: FamilyTag
    group: Group
    cF: sp.Rational
    param_names: Tuple[str, ...]
    delta: Tuple[int, ...]
    generic_names: Tuple[str, ...]
    chart: Chart
    twist_kinds: Tuple[str, ...] = ()

    # --- parameters -------------------------------------------------------

    def params(self, half_integer_mode: bool = False, **values) -> Params:
        missing = [n for n in self.param_names if n not in values]
        extra = [n for n in values if n not in self.param_names]
        if missing or extra:
            raise InvalidParamsError(
                f"{self.tag.value} expects parameters {self.param_names}; missing {missing}, unexpected {extra}"
            )
        p = Params(
            self.tag,
            tuple((n, to_rational(values[n])) for n in self.param_names),
            self.delta,
            half_integer_mode,
        )
        self.validate(p)
        return p

    def validate(self, p: Params, type_one_deletions: int = 0) -> None:
        """Domain constraints plus genericity; type-I deletions tighten g."""
        self._validate_domain(p)
        for name in self.generic_names:
            _generic_value(name, p[name], p.half_integer_mode)
        if type_one_deletions and "g" in p.names:
            g = p["g"]
            if not g > sp.Rational(3, 2):
                raise InvalidParamsError(f"Type I deletions need g > 3/2, got g={g}")
            if not g > type_one_deletions - 1:
                raise InvalidParamsError(
                    f"{type_one_deletions} type I deletions need g > {type_one_deletions - 1}, got g={g}"
                )

    @abstractmethod
    def _validate_domain(self, p: Params) -> None: ...

    # --- spectrum ---------------------------------------------------------

    @abstractmethod
    def nmax(self, p: Params) -> int: ...

    @abstractmethod
    def energy(self, p: Params, n) -> sp.Rational: ...

    @abstractmethod
    def eigen_polynomial(self, p: Params, n: int) -> PolyQ: ...

    @abstractmethod
    def phi0(self, p: Params) -> PrefactorExponents: ...

    def phi_prefactor(self, p: Params, n: int) -> PrefactorExponents:
        if self.group == Group.A:
            return self.phi0(p)
        return self.phi0(p.shifted(n))

    @abstractmethod
    def f(self, p: Params, n) -> sp.Rational:
        """Forward shift coefficient f_n."""

    @abstractmethod
    def b(self, p: Params, n) -> sp.Rational:
        """Backward shift coefficient b_{n-1}."""

    @abstractmethod
    def log_norm_constant(self, p: Params, n: int) -> float: ...

    def norm_constant(self, p: Params, n: int) -> float:
        if not 0 <= n <= self.nmax(p):
            raise DomainError(f"Norm constant needs 0 <= n <= nmax={self.nmax(p)}, got n={n}")
        return float(np.exp(self.log_norm_constant(p, n)))

    # --- potential --------------------------------------------------------

    @abstractmethod
    def potential_t(self, p: Params, t: TExpr) -> TExpr: ...

    @abstractmethod
    def potential_float(self, p: Params, x: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def endpoint_potential_limits(self, p: Params) -> Tuple[float, float]: ...

    def potential_value(self, p: Params, t) -> sp.Rational:
        t = self.chart.check_t(t)
        return mpq_to_rational(self.potential_t(p, TExpr.t(t)).value)

    def threshold(self, p: Params) -> float:
        return float(min(self.endpoint_potential_limits(p)))

    def phi0_logderiv(self, p: Params, shift: int, t) -> sp.Rational:
        t = self.chart.check_t(t)
        return mpq_to_rational(self.phi0(p.shifted(shift)).dlog(TExpr.t(t)).value)

    # --- seeds ------------------------------------------------------------

    @abstractmethod
    def overshoot_regions(self, p: Params) -> List[Region]:
        """Degree ranges where overshoot eigenfunctions have negative energy."""

    def twist(self, p: Params, kind: str) -> Params:
        raise DomainError(f"{self.tag.value} has no discrete-symmetry seeds of kind {kind}")

    def twist_regions(self, p: Params, kind: str) -> List[Region]:
        raise DomainError(f"{self.tag.value} has no discrete-symmetry seeds of kind {kind}")

    def potential_constant(self, p: Params) -> sp.Rational:
        """Additive constant of U; twisted Hamiltonians differ from the original by its change."""
        raise DomainError(f"{self.tag.value} does not expose its potential constant")

    def twisted_energy(self, p: Params, kind: str, v: int) -> sp.Rational:
        twisted = self.twist(p, kind)
        return self.energy(twisted, v) + self.potential_constant(p) - self.potential_constant(twisted)

    @abstractmethod
    def curve_regions(self, p: Params) -> List[Region]:
        """Labelled regions of the real-n energy curve."""

    def energy_pole(self, p: Params, n) -> bool:
        return False

    def __repr__(self) -> str:
        return f"<Family {self.tag.value}>"
