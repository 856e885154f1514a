"""Seed construction: eigenstates, overshoot eigenfunctions and twisted states."""
from dataclasses import replace
from typing import List, Tuple, Union

import sympy as sp

from app.core.errors import InternalConsistencyError, InvalidSeedError, NonGenericError
from app.core.logger import logger
from app.families.base import Params, Region
from app.families.registry import family_of
from app.seeds.classify import classify_seed
from app.seeds.models import Seed, SeedKind, SeedRef

SeedLike = Union[SeedRef, Tuple[Union[str, SeedKind], int]]


def as_ref(k: SeedLike) -> SeedRef:
    if isinstance(k, SeedRef):
        return k
    kind, v = k
    return SeedRef(SeedKind.parse(kind), _check_index(v))


def _check_index(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, sp.Integer)):
        raise InvalidSeedError(f"Seed index must be a non-negative integer, got {v!r}")
    v = int(v)
    if v < 0:
        raise InvalidSeedError(f"Seed index must be non-negative, got {v}")
    return v


def seed_regions(p: Params, kind: SeedKind) -> List[Region]:
    family = family_of(p)
    if kind is SeedKind.EIGEN:
        return [Region("eigen", sp.Integer(0), sp.Integer(family.nmax(p)), True, True)]
    if kind is SeedKind.OVERSHOOT:
        return family.overshoot_regions(p)
    if kind.value not in family.twist_kinds:
        raise InvalidSeedError(f"{family.tag.value} has no {kind.value} seeds")
    return family.twist_regions(p, kind.value)


def locate(p: Params, ref: SeedRef) -> Region:
    """The validity region containing v; boundary values are non-generic."""
    regions = seed_regions(p, ref.kind)
    for region in regions:
        if region.on_boundary(ref.v):
            raise NonGenericError(
                f"{ref} sits on the boundary of range {region.label} of {p}", seed=str(ref)
            )
    for region in regions:
        if region.contains(ref.v):
            return region
    ranges = ", ".join(_describe(r) for r in regions)
    raise InvalidSeedError(f"{ref} lies outside every valid range of {p}: {ranges}", seed=str(ref))


def _describe(region: Region) -> str:
    lo = "-inf" if region.lo is None else str(region.lo)
    hi = "inf" if region.hi is None else str(region.hi)
    return f"{'[' if region.lo_closed else '('}{lo}, {hi}{']' if region.hi_closed else ')'}"


def seed_energy(p: Params, k: SeedLike) -> sp.Rational:
    ref = as_ref(k)
    locate(p, ref)
    return _energy(p, ref)


def _energy(p: Params, ref: SeedRef) -> sp.Rational:
    family = family_of(p)
    if ref.kind.is_twisted:
        return family.twisted_energy(p, ref.kind.value, ref.v)
    return family.energy(p, ref.v)


def make_seed(p: Params, k: SeedLike, classify: bool = True) -> Seed:
    ref = as_ref(k)
    family = family_of(p)
    locate(p, ref)
    energy = _energy(p, ref)
    if ref.kind.is_virtual and not energy < 0:
        raise InvalidSeedError(f"{ref} of {p} has non-negative energy {energy}", seed=str(ref))

    function_params = family.twist(p, ref.kind.value) if ref.kind.is_twisted else p
    poly = family.eigen_polynomial(function_params, ref.v)
    if poly.degree != ref.v:
        logger.debug(f"{ref} of {p}: polynomial degree reduced to {poly.degree}")
    if poly.is_zero:
        raise InternalConsistencyError(f"{ref} of {p} has a vanishing polynomial part")

    seed = Seed(
        kind=ref.kind,
        v=ref.v,
        params=p,
        energy=energy,
        prefactor=family.phi_prefactor(function_params, ref.v),
        poly=poly,
        function_params=function_params,
    )
    if not classify:
        return seed
    return replace(seed, boundary_type=classify_seed(seed))
