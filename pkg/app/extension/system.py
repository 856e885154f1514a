"""
Extended systems: the Darboux-Crum image of a family under the deletion of
a seed set D, with its spectrum, norms and wavefunctions.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import sympy as sp

from app.core.errors import PreconditionError, SingularExtensionError
from app.core.logger import logger
from app.exactcore.poly import PolyQ
from app.extension.denominator import extended_factored, extension_degree, xi_factored
from app.extension.nodeless import (
    check_nodeless,
    derivative_condition,
    endpoint_root,
    sign_chain,
    vanishing_orders,
)
from app.extension.potential import PotentialEvaluator, ratio_evaluator, reciprocal_evaluator
from app.extension.spec import ExtensionSpec, build_spec
from app.extension.wronskian import FactoredWronskian
from app.families.prefactor import PrefactorExponents
from app.seeds.models import BoundaryType, SeedRef


@dataclass(frozen=True)
class ExtendedSystem:
    spec: ExtensionSpec
    wronskian: FactoredWronskian
    ell: int
    nodeless: bool
    root_count: int
    endpoint_root: bool
    spectrum: Dict[int, sp.Rational]
    added_level: Optional[sp.Rational] = None
    sign_chain: bool = True
    derivative_condition: bool = True
    vanishing_orders: Dict[str, Optional[sp.Expr]] = field(default_factory=dict)

    @property
    def xi(self) -> PolyQ:
        return self.wronskian.poly

    @property
    def prefactor(self) -> PrefactorExponents:
        return self.wronskian.prefactor

    @property
    def degenerate(self) -> bool:
        return self.xi.degree != self.ell

    @property
    def levels(self) -> Dict[str, sp.Rational]:
        """All bound-state energies, the added level keyed "added"."""
        out = {str(n): e for n, e in self.spectrum.items()}
        if self.added_level is not None:
            out["added"] = self.added_level
        return out


def original_spectrum(spec: ExtensionSpec) -> Dict[int, sp.Rational]:
    family = spec.family
    return {n: family.energy(spec.params, n) for n in range(family.nmax(spec.params) + 1)}


def build_system(spec: ExtensionSpec) -> ExtendedSystem:
    logger.info(f"Building extended system for {spec}")
    w = xi_factored(spec)
    w = FactoredWronskian(w.prefactor, w.poly.assert_real("Xi_D"))
    ell = extension_degree(spec)
    nodeless, count = check_nodeless(spec)
    added = spec.seeds[0].energy if spec.pseudo_virtual else None
    system = ExtendedSystem(
        spec=spec,
        wronskian=w,
        ell=ell,
        nodeless=nodeless,
        root_count=count,
        endpoint_root=endpoint_root(spec),
        spectrum=original_spectrum(spec),
        added_level=added,
        sign_chain=sign_chain(spec),
        derivative_condition=derivative_condition(spec),
        vanishing_orders=vanishing_orders(spec),
    )
    if system.degenerate:
        logger.warning(f"Xi_D of {spec} has degree {system.xi.degree}, generic degree is {ell}")
    if not nodeless:
        logger.warning(f"Xi_D of {spec} has {count} zero(s) inside the domain; the extension is singular")
    logger.info(f"Extended system ready: deg Xi={system.xi.degree}, nodeless={nodeless}")
    return system


# --- norms and shifted sets --------------------------------------------------------

def extended_norm(spec: ExtensionSpec, n: int) -> float:
    """(phi_n^[M], phi_n^[M]) = prod_j (E_n - E~_{d_j}) h_n."""
    family = spec.family
    energy = family.energy(spec.params, n)
    factor = sp.Integer(1)
    for seed in spec.seeds:
        factor *= energy - seed.energy
    return float(factor) * family.norm_constant(spec.params, n)


def shifted_set(spec: ExtensionSpec, direction: int) -> ExtensionSpec:
    """D shifted by direction in every index, at lambda + delta."""
    if direction not in (-1, 0, 1):
        raise PreconditionError(f"Shift direction must be -1, 0 or +1, got {direction}")
    shifted = spec.params.shifted(1)
    spec.family.validate(shifted)
    refs = [SeedRef(r.kind, r.v + direction) for r in spec.refs]
    return build_spec(shifted, refs)


# --- wavefunctions ------------------------------------------------------------------

def eigenfunction_evaluator(spec: ExtensionSpec, n: int) -> Callable:
    """phi_n^[M](x) = W[phi~_D, phi_n](x) / W[phi~_D](x) on float arrays."""
    return ratio_evaluator(spec.family, extended_factored(spec, n), xi_factored(spec))


def added_bound_state(spec: ExtensionSpec) -> Tuple[sp.Rational, Callable]:
    """Energy and (unnormalised) wavefunction 1/phi~_v of the level a type III seed adds."""
    if spec.size != 1 or spec.seeds[0].boundary_type is not BoundaryType.TYPE_III:
        raise PreconditionError(f"{spec} is not a single pseudo virtual (type III) deletion")
    nodeless, count = check_nodeless(spec)
    if not nodeless:
        raise SingularExtensionError(
            f"{spec.seeds[0].ref} has {count} node(s); its reciprocal is not a bound state", spec=str(spec)
        )
    seed = spec.seeds[0]
    return seed.energy, reciprocal_evaluator(spec.family, FactoredWronskian(seed.prefactor, seed.poly))


def extended_potential(spec: ExtensionSpec) -> PotentialEvaluator:
    """U^[M] as a closed-form evaluator; flagged singular when Xi_D has interior zeros."""
    nodeless, _ = check_nodeless(spec)
    if not nodeless:
        logger.warning(f"Extended potential of {spec} is singular")
    return PotentialEvaluator(spec.family, spec.params, xi_factored(spec), singular=not nodeless)

