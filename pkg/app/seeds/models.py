from dataclasses import dataclass
from enum import Enum
from typing import Optional

import sympy as sp

from app.core.errors import InvalidSeedError
from app.exactcore.poly import PolyQ
from app.families.base import Params
from app.families.prefactor import PrefactorExponents


class SeedKind(str, Enum):
    EIGEN = "eigen"
    OVERSHOOT = "overshoot"
    TWISTED_I = "twisted-I"
    TWISTED_II = "twisted-II"
    TWISTED_III = "twisted"

    @classmethod
    def parse(cls, text) -> "SeedKind":
        if isinstance(text, SeedKind):
            return text
        key = str(text).strip()
        if key.lower() in ("twisted-iii", "twisted3"):
            return cls.TWISTED_III
        for kind in cls:
            if kind.value.lower() == key.lower():
                return kind
        raise InvalidSeedError(f"Unknown seed kind: {text!r}")

    @property
    def is_twisted(self) -> bool:
        return self in (SeedKind.TWISTED_I, SeedKind.TWISTED_II, SeedKind.TWISTED_III)

    @property
    def is_virtual(self) -> bool:
        return self is not SeedKind.EIGEN


class BoundaryType(str, Enum):
    EIGEN = "eigen"
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


@dataclass(frozen=True)
class SeedRef:
    """A seed as named in an extension spec: kind plus degree index."""

    kind: SeedKind
    v: int

    def __str__(self) -> str:
        return f"{self.kind.value}({self.v})"


@dataclass(frozen=True)
class Seed:
    kind: SeedKind
    v: int
    params: Params
    energy: sp.Rational
    prefactor: PrefactorExponents
    poly: PolyQ
    function_params: Params
    boundary_type: Optional[BoundaryType] = None

    @property
    def ref(self) -> SeedRef:
        return SeedRef(self.kind, self.v)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return f"{self.kind.value}({self.v}) of {self.params}"


@dataclass(frozen=True)
class Descriptor:
    """Asymptotic form of a function at one end of the x-domain."""

    kind: str
    value: Optional[sp.Rational] = None

    def reciprocal(self) -> "Descriptor":
        if self.kind == "double_exp_decay":
            return Descriptor("double_exp_growth")
        if self.kind == "double_exp_growth":
            return Descriptor("double_exp_decay")
        return Descriptor(self.kind, -self.value)

    def __str__(self) -> str:
        return self.kind if self.value is None else f"{self.kind}({self.value})"


@dataclass(frozen=True)
class BoundaryBehavior:
    lower: Descriptor
    upper: Descriptor

    @property
    def lower_reciprocal(self) -> Descriptor:
        return self.lower.reciprocal()

    @property
    def upper_reciprocal(self) -> Descriptor:
        return self.upper.reciprocal()
