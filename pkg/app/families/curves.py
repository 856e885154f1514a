"""
Energy curves E(n) over real n, labelled by the seed regions they pass
through. Used for the curve.csv artefact and for region lookups of seeds.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import sympy as sp

from app.core.logger import logger
from app.families.base import Params, Region
from app.families.registry import family_of


@dataclass(frozen=True)
class CurvePoint:
    n: sp.Rational
    energy: sp.Rational
    region: str


@dataclass
class EnergyCurve:
    params: Params
    points: List[CurvePoint]
    regions: List[Region]
    negative_regions: List[Region]
    skipped: List[sp.Rational] = field(default_factory=list)


def region_label(p: Params, n) -> str:
    """Label of the curve region containing n, '-' outside every region."""
    for region in family_of(p).curve_regions(p):
        if region.contains(n):
            return region.label
    return "-"


def negative_energy_regions(p: Params) -> List[Region]:
    """Overshoot degree ranges on which E < 0."""
    return family_of(p).overshoot_regions(p)


def default_samples(p: Params, lo=None, hi=None, count: int = 241) -> List[sp.Rational]:
    """Evenly spaced rational samples covering the discrete spectrum and the overshoot ranges."""
    family = family_of(p)
    if lo is None:
        lo = -2 * family.nmax(p) - 4
    if hi is None:
        finite = [r.lo for r in family.overshoot_regions(p) if r.lo is not None]
        hi = max([sp.Integer(family.nmax(p))] + finite) * 2 + 4
    lo, hi = sp.Rational(lo), sp.Rational(hi)
    step = (hi - lo) / (count - 1)
    return [lo + k * step for k in range(count)]


def energy_curve(p: Params, samples: Optional[Sequence] = None) -> EnergyCurve:
    family = family_of(p)
    samples = default_samples(p) if samples is None else [sp.Rational(n) for n in samples]
    points: List[CurvePoint] = []
    skipped: List[sp.Rational] = []
    for n in samples:
        if family.energy_pole(p, n):
            skipped.append(n)
            continue
        points.append(CurvePoint(n, family.energy(p, n), region_label(p, n)))
    if skipped:
        logger.warning(f"Energy curve of {p}: skipped {len(skipped)} pole sample(s) at n={[str(s) for s in skipped]}")
    logger.info(f"Energy curve of {p}: {len(points)} points")
    return EnergyCurve(p, points, family.curve_regions(p), negative_energy_regions(p), skipped)
