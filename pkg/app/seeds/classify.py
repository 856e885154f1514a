"""
Boundary classification of seeds from their exact asymptotics.

A seed is prefactor x polynomial; at each end of the x-domain the chart turns
the prefactor exponents and the polynomial's degree (or its value at a finite
eta end) into an exponential rate, a power of x, or a double exponential.
Square integrability of the seed and of its reciprocal then decides the type.
"""
from typing import Optional, Tuple

import sympy as sp

from app.core.errors import DegenerateClassificationError, InvalidSeedError
from app.exactcore.numbers import HALF
from app.families.base import EndpointLimit
from app.families.registry import family_of
from app.seeds.models import BoundaryBehavior, BoundaryType, Descriptor, Seed


def _descriptor(limit: EndpointLimit, seed: Seed) -> Descriptor:
    if limit.kind in ("double_exp_decay", "double_exp_growth"):
        return Descriptor(limit.kind)
    if limit.eta_value is not None and seed.poly.eval_exact(limit.eta_value) == 0:
        raise DegenerateClassificationError(
            f"{seed.ref} vanishes at eta={limit.eta_value}; its {limit.end} asymptotics are non-generic",
            seed=str(seed.ref),
        )
    return Descriptor(limit.kind, sp.Rational(limit.value))


def boundary_exponents(s: Seed) -> BoundaryBehavior:
    chart = family_of(s.params).chart
    lower, upper = chart.endpoint_limits(s.prefactor, s.poly.degree)
    return BoundaryBehavior(_descriptor(lower, s), _descriptor(upper, s))


def square_integrable(d: Descriptor, end: str) -> bool:
    if d.kind == "double_exp_decay":
        return True
    if d.kind == "double_exp_growth":
        return False
    if d.kind == "power":
        return d.value > -HALF
    if end == "lower":
        return d.value > 0
    return d.value < 0


def _integrability(s: Seed) -> Tuple[bool, bool, bool, bool]:
    b = boundary_exponents(s)
    return (
        square_integrable(b.lower, "lower"),
        square_integrable(b.upper, "upper"),
        square_integrable(b.lower_reciprocal, "lower"),
        square_integrable(b.upper_reciprocal, "upper"),
    )


def classify_seed(s: Seed) -> BoundaryType:
    lower, upper, inv_lower, inv_upper = _integrability(s)
    if inv_lower and inv_upper:
        return BoundaryType.TYPE_III
    if inv_lower and upper:
        return BoundaryType.TYPE_II
    if lower and inv_upper:
        return BoundaryType.TYPE_I
    if lower and upper:
        return BoundaryType.EIGEN
    raise InvalidSeedError(
        f"{s.ref} of {s.params} is neither square integrable nor a virtual seed at either end",
        seed=str(s.ref),
    )


def decaying_end(s: Seed) -> Optional[Tuple[str, Descriptor]]:
    """
    The end at which a type I/II seed decays, with the exponent that sets the
    order of vanishing there. None for type III seeds and eigenstates.
    """
    kind = s.boundary_type or classify_seed(s)
    b = boundary_exponents(s)
    if kind is BoundaryType.TYPE_I:
        return "lower", b.lower
    if kind is BoundaryType.TYPE_II:
        return "upper", b.upper
    return None
