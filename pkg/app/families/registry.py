"""Tag -> Family lookup and parameter construction from config values."""
from functools import lru_cache
from typing import Dict, Mapping, Union

from app.core.errors import InvalidParamsError
from app.families.base import Family, FamilyTag, Params
from app.families.eckart import Eckart
from app.families.hyperbolic_dpt import HyperbolicDPT
from app.families.morse import Morse
from app.families.rosen_morse import RosenMorse
from app.families.soliton import Soliton
from app.families.symmetric_top import SymmetricTop

_FAMILIES: Dict[FamilyTag, type] = {
    FamilyTag.M: Morse,
    FamilyTag.S: Soliton,
    FamilyTag.RM: RosenMorse,
    FamilyTag.HST: SymmetricTop,
    FamilyTag.KH: Eckart,
    FamilyTag.HDPT: HyperbolicDPT,
}


@lru_cache(maxsize=None)
def get_family(tag: Union[str, FamilyTag]) -> Family:
    if not isinstance(tag, FamilyTag):
        tag = FamilyTag.parse(tag)
    return _FAMILIES[tag]()


def family_of(p: Params) -> Family:
    return get_family(p.family)


def make_params(tag: Union[str, FamilyTag], values: Mapping, half_integer_mode: bool = False) -> Params:
    """Build validated Params from a mapping of names to rationals or "p/q" strings."""
    family = get_family(tag)
    if not isinstance(values, Mapping):
        raise InvalidParamsError(f"Parameters must be a mapping, got {type(values).__name__}")
    return family.params(half_integer_mode=half_integer_mode, **dict(values))


def all_families():
    return [get_family(tag) for tag in FamilyTag]
