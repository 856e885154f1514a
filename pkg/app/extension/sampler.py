"""Random generic extension specs for property checks (degree law, nodeless scans)."""
from typing import Dict, List, Optional, Sequence

import numpy as np
import sympy as sp

from app.core.config import settings
from app.core.errors import ExtensionError, SamplingError
from app.core.logger import logger
from app.exactcore.numbers import is_half_odd, is_integer
from app.extension.spec import ExtensionSpec, build_spec
from app.families.base import FamilyTag, Params, Region
from app.families.registry import get_family, make_params
from app.seeds.builder import seed_regions
from app.seeds.models import SeedKind, SeedRef

WINDOW = 6


def random_rational(rng: np.random.Generator, lo: float, hi: float,
                    max_den: Optional[int] = None, generic: bool = True) -> sp.Rational:
    """Uniform-ish rational in (lo, hi) with denominator <= max_den; generic avoids Z and Z+1/2."""
    max_den = max_den or settings.MAX_RANDOM_DENOMINATOR
    for _ in range(1000):
        den = int(rng.integers(3, max_den + 1))
        num = int(rng.integers(int(np.ceil(lo * den)), int(np.floor(hi * den)) + 1))
        r = sp.Rational(num, den)
        if not lo < r < hi:
            continue
        if generic and (is_integer(r) or is_half_odd(r)):
            continue
        return r
    raise SamplingError(f"No rational found in ({lo}, {hi})")


def random_params(rng: np.random.Generator, tag: FamilyTag) -> Params:
    def r(lo, hi, generic=True):
        return random_rational(rng, float(lo), float(hi), generic=generic)

    if tag is FamilyTag.M:
        values = {"h": r(1, 5), "mu": r(0.5, 3, False)}
    elif tag is FamilyTag.S:
        values = {"h": r(0.6, 4)}
    elif tag is FamilyTag.RM:
        h = r(1.2, 5)
        values = {"h": h, "mu": r(0.2, 0.9 * h ** 2, False)}
    elif tag is FamilyTag.HST:
        values = {"h": r(0.6, 4), "mu": r(0.2, 3, False)}
    elif tag is FamilyTag.KH:
        g = r(1.6, 4)
        values = {"g": g, "mu": r(g ** 2 + 0.3, g ** 2 + 12, False)}
    else:
        g = r(1.6, 4)
        values = {"g": g, "h": r(g + 0.3, g + 6, False)}
    return make_params(tag, values)


def candidates(region: Region) -> List[int]:
    start = 0 if region.lo is None else max(0, int(sp.floor(region.lo)))
    return [v for v in range(start, start + WINDOW + 1) if region.contains(v) and not region.on_boundary(v)]


def _kind_options(p: Params) -> List[str]:
    family = get_family(p.family)
    options = ["overshoot"] + list(family.twist_kinds)
    if p.family is FamilyTag.HDPT:
        options.append("mixed")
    return options


def _pool(p: Params, kind: SeedKind) -> Dict[str, List[int]]:
    try:
        regions = seed_regions(p, kind)
    except ExtensionError:
        return {}
    return {region.label: candidates(region) for region in regions if candidates(region)}


def random_refs(rng: np.random.Generator, p: Params, max_size: int = 3) -> List[SeedRef]:
    option = str(rng.choice(_kind_options(p)))
    size = int(rng.integers(1, max_size + 1))
    if option == "mixed":
        refs = []
        for kind in (SeedKind.TWISTED_I, SeedKind.TWISTED_II):
            values = sorted({v for vs in _pool(p, kind).values() for v in vs})
            if values:
                take = min(len(values), int(rng.integers(1, max(2, size))))
                refs += [SeedRef(kind, int(v)) for v in rng.choice(values, size=take, replace=False)]
        return refs
    kind = SeedKind.parse(option)
    pool = _pool(p, kind)
    if not pool:
        return []
    label = str(rng.choice(sorted(pool)))
    values = pool[label]
    take = min(len(values), size)
    return [SeedRef(kind, int(v)) for v in rng.choice(values, size=take, replace=False)]


def random_specs(count: int, seed: int = 0, families: Optional[Sequence[FamilyTag]] = None,
                 max_size: int = 3, max_attempts: int = 50) -> List[ExtensionSpec]:
    """count valid specs at generic rational parameters, cycling through the families."""
    rng = np.random.default_rng(seed)
    families = list(families or FamilyTag)
    specs: List[ExtensionSpec] = []
    rejected = 0
    for i in range(count):
        tag = families[i % len(families)]
        for _ in range(max_attempts):
            try:
                p = random_params(rng, tag)
                refs = random_refs(rng, p, max_size)
                if not refs:
                    continue
                specs.append(build_spec(p, refs))
                break
            except ExtensionError as exc:
                rejected += 1
                logger.debug(f"Random spec rejected: {exc}")
        else:
            raise SamplingError(f"No valid random spec for {tag.value} after {max_attempts} attempts")
    logger.info(f"Sampled {len(specs)} random specs ({rejected} candidates rejected)")
    return specs
