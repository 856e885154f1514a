"""
Exact identity checks by rational sampling in t = e^x.

Both sides of an identity are rational functions of t. Every evaluation
carries a bound on the numerator degree of the residual, so vanishing at
more distinct samples than that bound proves the identity.
"""
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence

import sympy as sp

from app.core.config import settings
from app.core.errors import PreconditionError, SamplingError
from app.core.logger import logger
from app.exactcore.numbers import mpq_to_rational
from app.exactcore.poly import PolyQ
from app.exactcore.texpr import TExpr, horner
from app.extension.denominator import extended_factored, xi_factored
from app.extension.spec import ExtensionSpec
from app.extension.system import shifted_set
from app.extension.wronskian import FactoredWronskian, wronskian
from app.families.base import Chart, FamilyTag
from app.seeds.models import SeedKind


@dataclass
class IdentityReport:
    identity: str
    samples: int = 0
    degree_bound: int = 0
    max_residual: sp.Rational = sp.Integer(0)
    skipped_poles: int = 0
    failures: List[sp.Rational] = field(default_factory=list)
    parts: List["IdentityReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.parts:
            return all(p.passed for p in self.parts)
        return self.samples > self.degree_bound and self.max_residual == 0


def sample_points(start: int = 0) -> Iterator[sp.Rational]:
    """t_k = (2k+3)/(k+2): distinct rationals in [3/2, 2), inside every chart's t-range."""
    k = start
    while True:
        yield sp.Rational(2 * k + 3, k + 2)
        k += 1


def check_identity(name: str, residual: Callable[[TExpr], TExpr], chart: Chart,
                   min_samples: Optional[int] = None, max_samples: int = 20000) -> IdentityReport:
    """Evaluate residual(t) exactly until the sample count exceeds its degree bound."""
    min_samples = min_samples or settings.IDENTITY_MIN_SAMPLES
    report = IdentityReport(name)
    for t in sample_points():
        if report.samples >= max(min_samples, report.degree_bound + 1):
            break
        if report.samples + report.skipped_poles >= max_samples:
            raise SamplingError(f"{name}: degree bound {report.degree_bound} exceeds the sampling budget")
        chart.check_t(t)
        try:
            value = residual(TExpr.t(t))
        except SamplingError:
            report.skipped_poles += 1
            continue
        report.degree_bound = max(report.degree_bound, value.degree_bound)
        report.samples += 1
        r = abs(mpq_to_rational(value.value))
        if r != 0:
            report.failures.append(t)
            report.max_residual = max(report.max_residual, r)
    if report.skipped_poles:
        logger.warning(f"{name}: skipped {report.skipped_poles} sample(s) at poles")
    logger.info(
        f"{name}: {report.samples} samples, degree bound {report.degree_bound}, "
        f"max residual {report.max_residual}, passed={report.passed}"
    )
    return report


# --- shape invariance --------------------------------------------------------------

VARIANTS = {"minus": -1, "plus": 1, "fixed": 0}


def expected_variant(spec: ExtensionSpec) -> str:
    family = spec.params.family
    kinds = spec.kinds
    if spec.mixed_twist:
        return "fixed"
    if kinds == {SeedKind.OVERSHOOT} and family in (FamilyTag.M, FamilyTag.RM, FamilyTag.KH, FamilyTag.HDPT):
        return "minus"
    if kinds == {SeedKind.TWISTED_III} and family is FamilyTag.KH:
        return "plus"
    raise PreconditionError(f"No shape-invariance relation is available for {spec}")


def shape_invariance_residual(chart: Chart, w_den: FactoredWronskian, w_num: FactoredWronskian,
                              ws_den: FactoredWronskian, ws_num: FactoredWronskian,
                              energy) -> Callable[[TExpr], TExpr]:
    """
    With w = log|W[D, phi_0] / W[D]| at lambda and w_s the same at the shifted
    point: (w')^2 - w'' - (w_s')^2 - w_s'' - E_1.
    """
    energy = sp.Rational(energy)

    def residual(t: TExpr) -> TExpr:
        w1 = w_num.dlog(chart, t) - w_den.dlog(chart, t)
        w2 = w_num.d2log(chart, t) - w_den.d2log(chart, t)
        s1 = ws_num.dlog(chart, t) - ws_den.dlog(chart, t)
        s2 = ws_num.d2log(chart, t) - ws_den.d2log(chart, t)
        return w1.square() - w2 - s1.square() - s2 - energy

    return residual


def verify_shape_invariance(spec: ExtensionSpec, variant: Optional[str] = None,
                            min_samples: Optional[int] = None) -> IdentityReport:
    expected = expected_variant(spec)
    variant = variant or expected
    if variant not in VARIANTS:
        raise PreconditionError(f"Unknown shape-invariance variant {variant!r}")
    if variant != expected:
        raise PreconditionError(f"{spec} takes the {expected} variant, not {variant}")
    if spec.params.family is FamilyTag.M and min(spec.degrees) < 2:
        raise PreconditionError(f"Morse shape invariance needs min d_j >= 2, got {list(spec.degrees)}")

    shifted = shifted_set(spec, VARIANTS[variant])
    family = spec.family
    residual = shape_invariance_residual(
        family.chart,
        xi_factored(spec),
        extended_factored(spec, 0),
        xi_factored(shifted),
        extended_factored(shifted, 0),
        family.energy(spec.params, 1),
    )
    return check_identity(f"shape-invariance[{variant}] {spec}", residual, family.chart, min_samples)


# --- derivative of a Wronskian ratio ------------------------------------------------

def _value(chart: Chart, w: FactoredWronskian, t: TExpr) -> TExpr:
    return horner(w.poly.qq_coeffs(), chart.eta(t))


def verify_ddx_wronskian(spec: ExtensionSpec, s: Optional[int] = None,
                         energies: Optional[Sequence] = None,
                         min_samples: Optional[int] = None) -> IdentityReport:
    """
    d/dx (W_{s+1}/W_{s-1}) = (E~_s - E~_{s+1}) (W_s/W_{s-1}) (W'_s/W_{s-1}),
    W_k = W[d_1..d_k], W'_s = W[d_1..d_{s-1}, d_{s+1}]. Every s in 1..M-1
    is checked unless s is given; energies overrides the seed energies.
    """
    seeds = list(spec.seeds)
    if len(seeds) < 2:
        raise PreconditionError("The Wronskian derivative identity needs at least two seeds")
    if len({s_.boundary_type for s_ in seeds}) != 1:
        raise PreconditionError(f"{spec} mixes boundary types")
    energies = [sp.Rational(e) for e in energies] if energies is not None else [x.energy for x in seeds]
    chart = spec.family.chart
    functions = [(x.prefactor, x.poly) for x in seeds]
    steps = [s] if s is not None else list(range(1, len(seeds)))

    reports = []
    for step in steps:
        if not 1 <= step < len(seeds):
            raise PreconditionError(f"s={step} outside 1..{len(seeds) - 1}")
        w_prev = wronskian(chart, functions[: step - 1])
        w_s = wronskian(chart, functions[:step])
        w_next = wronskian(chart, functions[: step + 1])
        w_alt = wronskian(chart, functions[: step - 1] + [functions[step]])
        # prefactors of W_s W'_s / (W_{s-1} W_{s+1}) reduce to integer powers
        ratio_prefactor = w_s.prefactor * w_alt.prefactor * (w_prev.prefactor * w_next.prefactor).reciprocal()
        gap = energies[step - 1] - energies[step]

        def residual(t: TExpr, w_prev=w_prev, w_s=w_s, w_next=w_next, w_alt=w_alt,
                     ratio_prefactor=ratio_prefactor, gap=gap) -> TExpr:
            lhs = w_next.dlog(chart, t) - w_prev.dlog(chart, t)
            poly_ratio = _value(chart, w_s, t) * _value(chart, w_alt, t) / (
                _value(chart, w_prev, t) * _value(chart, w_next, t)
            )
            return lhs - ratio_prefactor.value_t(t) * poly_ratio * gap

        reports.append(check_identity(f"ddxW[s={step}] {spec}", residual, chart, min_samples))

    return IdentityReport(
        f"ddxW {spec}",
        samples=min(r.samples for r in reports),
        degree_bound=max(r.degree_bound for r in reports),
        max_residual=max(r.max_residual for r in reports),
        skipped_poles=sum(r.skipped_poles for r in reports),
        failures=[t for r in reports for t in r.failures],
        parts=reports,
    )


def perturbed(w: FactoredWronskian, power: int, amount=sp.Rational(1, 1000)) -> FactoredWronskian:
    """w with one coefficient of its polynomial part moved by amount."""
    bump = PolyQ.from_coeffs([0] * power + [amount])
    return FactoredWronskian(w.prefactor, w.poly + bump)
