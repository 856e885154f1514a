"""
Denominator polynomials Xi_D and the Wronskian factorisations behind them.

Three routes produce W[phi_D] = A_D * Xi_D:

* Group A closed form at a common parameter point:
  A = phi_0^M (c_F^{-1} eta')^{M(M-1)/2},  Xi = c_F^{M(M-1)/2} W_eta[P_d1, ..., P_dM]
* Group B closed form: A = prod_k phi_0(lambda + d_k delta),  Xi = det(X_{j,k}) with
  X_{j,k} = prod_{i=0}^{j-2} f_{d_k-i}(lambda + i delta) * P_{d_k-j+1}(eta; lambda + (j-1) delta)
* hDPT twisted-I/II deletions: the general engine, with the sinh/cosh powers
  it leaves inside the determinant moved back into A_D.

Anything else (seed sets mixing parameter points, e.g. twisted seeds plus an
eigenstate) goes through the engine unchanged.
"""
from typing import List, Sequence

import sympy as sp

from app.core.errors import DomainError, DuplicateIndexError
from app.exactcore.poly import PolyQ, poly_determinant, poly_wronskian
from app.extension.spec import MIXABLE_KINDS, ExtensionSpec
from app.extension.wronskian import FactoredWronskian, Function, wronskian
from app.families.base import Family, FamilyTag, Group, Params
from app.families.prefactor import ONE, PrefactorExponents
from app.families.registry import family_of
from app.seeds.models import SeedKind, SeedRef

ETA = PolyQ.eta()


def _pairs(m: int) -> int:
    return m * (m - 1) // 2


def function_params(p: Params, ref: SeedRef) -> Params:
    if ref.kind.is_twisted:
        return family_of(p).twist(p, ref.kind.value)
    return p


def seed_function(p: Params, ref: SeedRef) -> Function:
    """(prefactor, polynomial) of a seed without range validation."""
    family = family_of(p)
    fp = function_params(p, ref)
    return family.phi_prefactor(fp, ref.v), family.eigen_polynomial(fp, ref.v)


# --- closed forms ---------------------------------------------------------------

def group_a_factored(family: Family, fp: Params, degrees: Sequence[int]) -> FactoredWronskian:
    m = len(degrees)
    if m == 0:
        return FactoredWronskian(ONE, PolyQ.one())
    k = _pairs(m)
    cf = family.cF
    polys = [family.eigen_polynomial(fp, d) for d in degrees]
    xi = poly_wronskian(polys).scale(cf ** k) if m > 1 else polys[0]
    deta = family.chart.deta_prefactor
    prefactor = family.phi0(fp) ** m * deta.with_scale(deta.scale / cf) ** k
    return FactoredWronskian(prefactor, xi)


def group_b_matrix(family: Family, fp: Params, degrees: Sequence[int]) -> List[List[PolyQ]]:
    m = len(degrees)
    rows = []
    for j in range(1, m + 1):
        row = []
        for d in degrees:
            index = d - j + 1
            if index < 0:
                row.append(PolyQ.zero())
                continue
            coefficient = sp.Integer(1)
            for i in range(j - 1):
                coefficient = coefficient * family.f(fp.shifted(i), d - i)
            row.append(family.eigen_polynomial(fp.shifted(j - 1), index).scale(coefficient))
        rows.append(row)
    return rows


def group_b_factored(family: Family, fp: Params, degrees: Sequence[int]) -> FactoredWronskian:
    if not degrees:
        return FactoredWronskian(ONE, PolyQ.one())
    xi = poly_determinant(group_b_matrix(family, fp, degrees))
    prefactor = ONE
    for d in degrees:
        prefactor = prefactor * family.phi0(fp.shifted(d))
    return FactoredWronskian(prefactor, xi)


def closed_form_factored(family: Family, fp: Params, degrees: Sequence[int]) -> FactoredWronskian:
    if family.group is Group.A:
        return group_a_factored(family, fp, degrees)
    return group_b_factored(family, fp, degrees)


# --- hDPT twisted-I / twisted-II deletions -----------------------------------------

def _twist_counts(refs: Sequence[SeedRef]):
    m1 = sum(1 for r in refs if r.kind is SeedKind.TWISTED_I)
    m2 = sum(1 for r in refs if r.kind is SeedKind.TWISTED_II)
    return m1, m2


def _ordered(refs: Sequence[SeedRef]) -> List[SeedRef]:
    """Type I seeds first, then type II, each in the given order."""
    return [r for r in refs if r.kind is SeedKind.TWISTED_I] + [r for r in refs if r.kind is SeedKind.TWISTED_II]


def _strip_cosh2(w: FactoredWronskian, lower: int, upper: int, cf_power: int, cf) -> FactoredWronskian:
    """
    Move (eta-1)^lower (eta+1)^upper out of the polynomial part as
    2^{lower+upper} sinh^{2 lower} cosh^{2 upper}, and rescale by c_F^{cf_power}.
    """
    divisor = (ETA - 1) ** lower * (ETA + 1) ** upper
    poly = w.poly.exquo(divisor).scale(cf ** cf_power * sp.Integer(2) ** (lower + upper))
    prefactor = w.prefactor * PrefactorExponents(sinh=2 * lower, cosh=2 * upper, scale=cf ** (-cf_power))
    return FactoredWronskian(prefactor, poly)


def hdpt_twisted_factored(p: Params, refs: Sequence[SeedRef]) -> FactoredWronskian:
    family = family_of(p)
    refs = _ordered(refs)
    m1, m2 = _twist_counts(refs)
    m = m1 + m2
    w = wronskian(family.chart, [seed_function(p, r) for r in refs])
    k1 = (m1 * (m1 - 1) + m2 * (m2 - 1)) // 2
    return _strip_cosh2(w, k1, k1, _pairs(m), family.cF)


def hdpt_twisted_eigen_factored(p: Params, refs: Sequence[SeedRef], n: int) -> FactoredWronskian:
    family = family_of(p)
    refs = _ordered(refs)
    m1, m2 = _twist_counts(refs)
    m = m1 + m2
    functions = [seed_function(p, r) for r in refs] + [seed_function(p, SeedRef(SeedKind.EIGEN, n))]
    w = wronskian(family.chart, functions)
    s1 = (m1 * (m1 + 1) + m2 * (m2 - 1)) // 2
    c1 = (m1 * (m1 - 1) + m2 * (m2 + 1)) // 2
    return _strip_cosh2(w, s1, c1, _pairs(m + 1), family.cF)


# --- dispatch -----------------------------------------------------------------------

def factored_for(p: Params, refs: Sequence[SeedRef]) -> FactoredWronskian:
    """W[phi_D] in A_D * Xi_D form for any list of seed references."""
    refs = list(refs)
    family = family_of(p)
    if not refs:
        return FactoredWronskian(ONE, PolyQ.one())
    kinds = {r.kind for r in refs}
    if p.family is FamilyTag.HDPT and kinds <= MIXABLE_KINDS:
        return hdpt_twisted_factored(p, refs)
    points = {function_params(p, r) for r in refs}
    if len(points) == 1:
        return closed_form_factored(family, points.pop(), [r.v for r in refs])
    return wronskian(family.chart, [seed_function(p, r) for r in refs])


def xi_factored(spec: ExtensionSpec) -> FactoredWronskian:
    return factored_for(spec.params, spec.refs)


def xi_polynomial(spec: ExtensionSpec) -> PolyQ:
    return xi_factored(spec).poly.assert_real("Xi_D")


def extended_factored(spec: ExtensionSpec, n: int) -> FactoredWronskian:
    """W[phi_D, phi_n] in factored form."""
    ref = SeedRef(SeedKind.EIGEN, n)
    if ref in spec.refs:
        raise DuplicateIndexError(f"n={n} already belongs to D")
    if spec.mixed_twist:
        return hdpt_twisted_eigen_factored(spec.params, spec.refs, n)
    return factored_for(spec.params, list(spec.refs) + [ref])


def extended_eigen_polynomial(spec: ExtensionSpec, n: int) -> PolyQ:
    if not 0 <= n <= spec.family.nmax(spec.params):
        raise DomainError(f"n={n} is outside 0..nmax={spec.family.nmax(spec.params)}")
    return extended_factored(spec, n).poly.assert_real(f"P_D,{n}")


# --- degrees --------------------------------------------------------------------------

def reduced_degree(p: Params, ref: SeedRef) -> int:
    """Actual polynomial degree of a seed, lowered for Rosen-Morse at half-integer h."""
    if p.family is FamilyTag.RM and ref.kind is SeedKind.OVERSHOOT:
        return family_of(p).reduced_degree(p, ref.v)
    return ref.v


def extension_degree(spec: ExtensionSpec) -> int:
    return degree_for(spec.params, spec.refs)


def degree_for(p: Params, refs: Sequence[SeedRef]) -> int:
    refs = list(refs)
    m = len(refs)
    if m == 0:
        return 0
    total = sum(reduced_degree(p, r) for r in refs)
    kinds = {r.kind for r in refs}
    if p.family is FamilyTag.HDPT and kinds <= MIXABLE_KINDS:
        m1, m2 = _twist_counts(refs)
        return total - _pairs(m1) - _pairs(m2) + m1 * m2
    return total - _pairs(m)
