"""
Extension specs: a parameter point plus the set D of seeds to delete, with
the admissibility rules for multi-seed Darboux-Crum transformations.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Tuple

from app.core.errors import DuplicateIndexError, SpecError
from app.core.logger import logger
from app.families.base import Family, FamilyTag, Params
from app.families.registry import family_of
from app.seeds.builder import SeedLike, as_ref, make_seed
from app.seeds.models import BoundaryType, Seed, SeedKind, SeedRef

MIXABLE_KINDS = frozenset({SeedKind.TWISTED_I, SeedKind.TWISTED_II})


@dataclass(frozen=True)
class ExtensionSpec:
    params: Params
    seeds: Tuple[Seed, ...]

    @property
    def family(self) -> Family:
        return family_of(self.params)

    @property
    def refs(self) -> Tuple[SeedRef, ...]:
        return tuple(s.ref for s in self.seeds)

    @property
    def size(self) -> int:
        return len(self.seeds)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(s.v for s in self.seeds)

    @property
    def kinds(self) -> frozenset:
        return frozenset(s.kind for s in self.seeds)

    def count(self, boundary_type: BoundaryType) -> int:
        return sum(1 for s in self.seeds if s.boundary_type is boundary_type)

    @property
    def pseudo_virtual(self) -> bool:
        return self.count(BoundaryType.TYPE_III) == 1

    @property
    def mixed_twist(self) -> bool:
        """hDPT deletion built from twisted-I and/or twisted-II seeds."""
        return self.params.family is FamilyTag.HDPT and bool(self.seeds) and self.kinds <= MIXABLE_KINDS

    def __str__(self) -> str:
        body = ", ".join(str(r) for r in self.refs)
        return f"{self.params} D={{{body}}}"


def build_spec(p: Params, seeds: Iterable[SeedLike]) -> ExtensionSpec:
    refs = [as_ref(k) for k in seeds]
    duplicates = [str(r) for r, c in Counter(refs).items() if c > 1]
    if duplicates:
        raise DuplicateIndexError(f"Repeated seeds in D: {duplicates}", seeds=duplicates)
    built = tuple(make_seed(p, r) for r in refs)
    spec = ExtensionSpec(p, built)
    validate_spec(spec)
    logger.debug(f"Extension spec accepted: {spec}")
    return spec


def validate_spec(spec: ExtensionSpec) -> None:
    seeds = spec.seeds
    if not seeds:
        return
    if any(s.kind is SeedKind.EIGEN for s in seeds):
        raise SpecError("Eigenstate deletions are not extension seeds; use virtual or pseudo virtual seeds")

    n_three = spec.count(BoundaryType.TYPE_III)
    if n_three > 1:
        raise SpecError("At most one pseudo virtual (type III) seed may be deleted")
    if n_three == 1 and spec.size > 1:
        raise SpecError("A pseudo virtual seed cannot be combined with other seeds")

    if len(spec.kinds) > 1 and not spec.mixed_twist:
        raise SpecError(
            f"Seeds of different kinds {sorted(k.value for k in spec.kinds)} cannot be combined "
            f"for {spec.params.family.value}"
        )

    n_one = spec.count(BoundaryType.TYPE_I)
    n_two = spec.count(BoundaryType.TYPE_II)
    if n_one and n_two and spec.params.family is not FamilyTag.HDPT:
        raise SpecError(
            f"Mixed type I/II deletions are only available for hDPT, got {n_one} type I and {n_two} type II"
        )
    if n_one:
        spec.family.validate(spec.params, type_one_deletions=n_one)
