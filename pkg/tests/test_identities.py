import pytest
import sympy as sp

from app.core.errors import PreconditionError
from app.exactcore.texpr import TExpr
from app.extension import build_spec, shifted_set
from app.extension.denominator import extended_factored, xi_factored
from app.families import get_family, make_params
from app.verify.identities import (
    check_identity,
    expected_variant,
    perturbed,
    sample_points,
    shape_invariance_residual,
    verify_ddx_wronskian,
    verify_shape_invariance,
)

MORSE = {"h": "10/3", "mu": "1"}
HDPT = {"g": "5/3", "h": "10"}


def test_sample_points_are_distinct_and_bounded():
    points = [t for _, t in zip(range(50), sample_points())]
    assert len(set(points)) == 50
    assert all(sp.Rational(3, 2) <= t < 2 for t in points)


@pytest.mark.parametrize(
    "tag, values, seeds, variant",
    [
        ("M", MORSE, [("overshoot", 7), ("overshoot", 8)], "minus"),
        ("hDPT", HDPT, [("overshoot", 9), ("overshoot", 10)], "minus"),
        ("Kh", {"g": "5/3", "mu": "9"}, [("twisted", 1), ("twisted", 2)], "plus"),
        ("hDPT", HDPT, [("twisted-I", 0), ("twisted-II", 0)], "fixed"),
    ],
)
def test_shape_invariance(tag, values, seeds, variant):
    spec = build_spec(make_params(tag, values), seeds)
    assert expected_variant(spec) == variant
    report = verify_shape_invariance(spec, min_samples=64)
    assert report.passed
    assert report.samples >= 64
    assert report.samples > report.degree_bound
    assert report.max_residual == 0


def test_shape_invariance_rejects_wrong_variant():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
    with pytest.raises(PreconditionError):
        verify_shape_invariance(spec, variant="plus")
    with pytest.raises(PreconditionError):
        verify_shape_invariance(spec, variant="sideways")


def test_morse_shape_invariance_needs_degree_two():
    p = make_params("M", {"h": "1/3", "mu": "1"})
    spec = build_spec(p, [("overshoot", 1)])
    with pytest.raises(PreconditionError):
        verify_shape_invariance(spec)


def test_shape_invariance_detects_perturbed_wronskian():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
    shifted = shifted_set(spec, -1)
    family = spec.family
    residual = shape_invariance_residual(
        family.chart,
        xi_factored(spec),
        perturbed(extended_factored(spec, 0), 3),
        xi_factored(shifted),
        extended_factored(shifted, 0),
        family.energy(spec.params, 1),
    )
    report = check_identity("perturbed", residual, family.chart, min_samples=16)
    assert not report.passed
    assert report.failures


@pytest.mark.parametrize("s", [1, 2])
def test_ddx_wronskian_single_step(s):
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8), ("overshoot", 9)])
    report = verify_ddx_wronskian(spec, s=s, min_samples=32)
    assert report.passed
    assert len(report.parts) == 1


def test_ddx_wronskian_all_steps():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8), ("overshoot", 9)])
    report = verify_ddx_wronskian(spec, min_samples=32)
    assert report.passed
    assert len(report.parts) == 2
    assert report.max_residual == 0


def test_ddx_wronskian_detects_wrong_energies():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
    report = verify_ddx_wronskian(spec, energies=["-7/3", "-5"], min_samples=16)
    assert not report.passed
    assert report.max_residual > 0


def test_ddx_wronskian_needs_two_seeds():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7)])
    with pytest.raises(PreconditionError):
        verify_ddx_wronskian(spec)
    pair = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
    with pytest.raises(PreconditionError):
        verify_ddx_wronskian(pair, s=2)


def test_check_identity_on_a_true_identity():
    chart = get_family("M").chart

    def residual(t: TExpr) -> TExpr:
        return (t + 1) * (t - 1) - (t * t - 1)

    report = check_identity("difference of squares", residual, chart, min_samples=8)
    assert report.passed
    assert report.degree_bound == 2
