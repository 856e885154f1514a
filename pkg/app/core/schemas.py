from fractions import Fraction
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field, field_validator, model_validator


def _rational_string(v):
    """Exact numbers travel as "p/q" strings; floats are refused."""
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, bool) or isinstance(v, float):
        raise ValueError(f"Exact field received a non-exact value: {v!r}")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    # sympy Rational / Integer
    p, q = getattr(v, "p", None), getattr(v, "q", None)
    if p is not None and q is not None:
        return str(p) if q == 1 else f"{p}/{q}"
    return str(v)


class SeedOut(BaseModel):
    kind: str = Field(..., description="eigen, overshoot, twisted-I, twisted-II or twisted")
    v: int = Field(..., description="Degree index of the seed")
    energy: str = Field(..., description="Exact seed energy as p/q")
    boundary_type: str = Field(..., description="I, II, III or eigen")

    @field_validator("energy", mode="before")
    @classmethod
    def convert_energy(cls, v):
        return _rational_string(v)


class SpectrumEntry(BaseModel):
    n: int
    energy: str

    @field_validator("energy", mode="before")
    @classmethod
    def convert_energy(cls, v):
        return _rational_string(v)


class ExtendedSystemOut(BaseModel):
    family: str
    params: Dict[str, str] = Field(..., description="Parameters as exact p/q strings")
    seeds: List[SeedOut] = Field(default_factory=list)
    xi_coefficients: List[str] = Field(..., description="Xi_D coefficients, ascending powers of eta")
    ell: int = Field(..., description="Generic degree of Xi_D")
    degree: int = Field(..., description="Actual degree of Xi_D")
    degenerate: bool = False
    nodeless: bool
    root_count: int
    spectrum: List[SpectrumEntry] = Field(default_factory=list)
    added_level: Optional[str] = Field(None, description="Extra level below E_0 for a pseudo virtual seed")

    @field_validator("params", mode="before")
    @classmethod
    def convert_params(cls, v):
        return {k: _rational_string(x) for k, x in dict(v).items()}

    @field_validator("xi_coefficients", mode="before")
    @classmethod
    def convert_coefficients(cls, v):
        return [_rational_string(c) for c in v]

    @field_validator("added_level", mode="before")
    @classmethod
    def convert_added_level(cls, v):
        return _rational_string(v)


class IdentityReportOut(BaseModel):
    identity: str
    samples: int
    degree_bound: int
    max_residual: str = Field(..., description="Largest |LHS - RHS| over the samples, exact")
    skipped_poles: int = 0
    verdict: bool

    @field_validator("max_residual", mode="before")
    @classmethod
    def convert_residual(cls, v):
        return _rational_string(v)


class SpectrumLevelOut(BaseModel):
    n: int
    exact: Optional[float] = None
    numeric: float
    error_estimate: float
    abs_err: Optional[float] = None


class SpectrumReportOut(BaseModel):
    grids: List[float]
    x_lo: float
    x_hi: float
    threshold: float
    endpoint_limits: List[float]
    levels: List[SpectrumLevelOut] = Field(default_factory=list)
    observed_order: Optional[float] = None
    boundary_sensitive: bool = False
    endpoint_exponent: Optional[float] = None


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    duration_s: float = 0.0
    data: Dict[str, Any] = Field(default_factory=dict)


class RunReport(BaseModel):
    command: str
    family: str
    params: Dict[str, str] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    artifacts: Dict[str, str] = Field(default_factory=dict)
    system: Optional[ExtendedSystemOut] = None
    passed: bool = True

    @field_validator("params", mode="before")
    @classmethod
    def convert_params(cls, v):
        return {k: _rational_string(x) for k, x in dict(v).items()}

    @model_validator(mode="after")
    def conjunction_of_checks(self):
        self.passed = all(c.passed for c in self.checks)
        return self
