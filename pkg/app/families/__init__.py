from app.families.base import Family, FamilyTag, Group, Params, Region
from app.families.registry import all_families, family_of, get_family, make_params

__all__ = [
    "Family",
    "FamilyTag",
    "Group",
    "Params",
    "Region",
    "all_families",
    "family_of",
    "get_family",
    "make_params",
]
