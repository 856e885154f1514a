"""
Job configuration files.

A job is a UTF-8 JSON object:

    {
      "family": "M",
      "params": {"h": "10/3", "mu": "1"},
      "half_integer_mode": false,
      "seeds": [{"overshoot": 7}, {"kind": "overshoot", "v": 8}],
      "checks": ["nodeless", "isospectral", "shape-invariance"],
      "numeric": {"grid": 0.005, "truncation": 20.0, "rtol": 0.001},
      "output_dir": "./out"
    }

Family parameters may also sit at the top level ({"family": "M", "h": "10/3", ...}).
Exact values are strings or integers, never JSON floats. Unknown keys are rejected.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from app.core.errors import ConfigError, ExtensionError
from app.core.logger import logger
from app.extension.spec import ExtensionSpec, build_spec
from app.families.base import FamilyTag, Params
from app.families.registry import get_family, make_params
from app.seeds.builder import make_seed
from app.seeds.models import SeedKind, SeedRef

CHECKS = ("nodeless", "isospectral", "norms", "shape-invariance", "ddxW", "halfint-equivalence", "classify")
ExactValue = Union[str, int]


class NumericOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    grid: Optional[float] = Field(None, gt=0, description="Finite-difference spacing (coarse grid)")
    truncation: Optional[float] = Field(None, gt=0, description="Domain half-width, or right end on the half line")
    rtol: Optional[float] = Field(None, gt=0, description="Relative tolerance of spectrum comparisons")
    enlarge: bool = True
    min_samples: Optional[int] = Field(None, ge=1, description="Minimum exact identity samples")
    n_total: Optional[int] = Field(None, ge=0, description="N of the dual eigenstate deletion")


class CurveOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lo: Optional[ExactValue] = None
    hi: Optional[ExactValue] = None
    count: int = Field(241, ge=2)


class SeedEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: str
    v: int

    @model_validator(mode="before")
    @classmethod
    def shorthand(cls, data: Any):
        """{"overshoot": 7} is short for {"kind": "overshoot", "v": 7}."""
        if isinstance(data, dict) and len(data) == 1 and "kind" not in data:
            (kind, v), = data.items()
            return {"kind": kind, "v": v}
        return data

    @field_validator("kind")
    @classmethod
    def known_kind(cls, v: str) -> str:
        try:
            return SeedKind.parse(v).value
        except ExtensionError as exc:
            raise ValueError(exc.message)

    def ref(self) -> SeedRef:
        return SeedRef(SeedKind.parse(self.kind), self.v)


class JobConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: str
    params: Dict[str, ExactValue] = Field(default_factory=dict)
    half_integer_mode: bool = False
    seeds: List[SeedEntry] = Field(default_factory=list)
    checks: List[str] = Field(default_factory=list)
    numeric: NumericOptions = Field(default_factory=NumericOptions)
    curve: CurveOptions = Field(default_factory=CurveOptions)
    output_dir: Optional[str] = None

    @model_validator(mode="before")
    @classmethod
    def hoist_params(cls, data: Any):
        if not isinstance(data, dict) or "family" not in data:
            return data
        try:
            names = get_family(data["family"]).param_names
        except ExtensionError:
            return data
        data = dict(data)
        params = dict(data.get("params") or {})
        for name in names:
            if name in data:
                params[name] = data.pop(name)
        data["params"] = params
        return data

    @field_validator("family")
    @classmethod
    def known_family(cls, v: str) -> str:
        try:
            return FamilyTag.parse(v).value
        except ExtensionError as exc:
            raise ValueError(exc.message)

    @field_validator("params", mode="before")
    @classmethod
    def no_floats(cls, v):
        for name, value in dict(v).items():
            if isinstance(value, float):
                raise ValueError(f"{name}={value!r} is a float; write exact values as strings such as \"10/3\"")
        return v

    @field_validator("checks")
    @classmethod
    def known_checks(cls, v: List[str]) -> List[str]:
        unknown = [c for c in v if c not in CHECKS]
        if unknown:
            raise ValueError(f"Unknown checks {unknown}; expected a subset of {list(CHECKS)}")
        return v

    @property
    def tag(self) -> FamilyTag:
        return FamilyTag.parse(self.family)

    @property
    def refs(self) -> List[SeedRef]:
        return [s.ref() for s in self.seeds]


def _location(loc) -> str:
    out = ""
    for part in loc:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out or "$"


def parse_config(data: Dict[str, Any]) -> JobConfig:
    try:
        return JobConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ConfigError(first["msg"], location=_location(first["loc"]), errors=len(exc.errors()))


def load_config(path: Union[str, Path]) -> JobConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"Invalid JSON: {exc.msg}", location=f"line {exc.lineno}, column {exc.colno}")
    if not isinstance(data, dict):
        raise ConfigError("A job config must be a JSON object", location="$")
    logger.debug(f"Loaded job config from {path}")
    return parse_config(data)


def config_params(config: JobConfig) -> Params:
    """The parameter point; domain and genericity errors keep their own exit codes."""
    try:
        return make_params(config.tag, config.params, config.half_integer_mode)
    except ExtensionError as exc:
        exc.context.setdefault("location", "params")
        raise


def config_spec(config: JobConfig) -> ExtensionSpec:
    p = config_params(config)
    for i, ref in enumerate(config.refs):
        try:
            make_seed(p, ref)
        except ExtensionError as exc:
            exc.context.setdefault("location", f"seeds[{i}]")
            raise
    return build_spec(p, config.refs)
