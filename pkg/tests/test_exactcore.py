from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from sympy.polys.domains import QQ

from app.core.errors import DomainError, SamplingError
from app.exactcore.numbers import format_rational, is_half_odd, is_integer, strict_floor, to_rational
from app.exactcore.poly import ETA, PolyQ, poly_proportional, poly_wronskian
from app.exactcore.sturm import OpenInterval, sign_scan_count, sturm_count_roots
from app.exactcore.texpr import TExpr, horner


@pytest.mark.parametrize(
    "value, expected",
    [("10/3", sp.Rational(10, 3)), (" 7 ", sp.Integer(7)), (Fraction(-1, 2), sp.Rational(-1, 2)), (4, sp.Integer(4))],
)
def test_to_rational(value, expected):
    assert to_rational(value) == expected


@pytest.mark.parametrize("value", [0.5, True, "1/0", "abc"])
def test_to_rational_rejects(value):
    with pytest.raises(DomainError):
        to_rational(value)


def test_rational_predicates():
    assert format_rational(sp.Rational(10, 3)) == "10/3"
    assert format_rational(6) == "6"
    assert is_integer(sp.Integer(3)) and not is_integer(sp.Rational(7, 2))
    assert is_half_odd(sp.Rational(7, 2)) and not is_half_odd(sp.Rational(7, 3))


@pytest.mark.parametrize("value, expected", [(sp.Rational(10, 3), 3), (sp.Integer(3), 2), (sp.Rational(1, 2), 0)])
def test_strict_floor(value, expected):
    assert strict_floor(value) == expected


def test_poly_arithmetic_and_division():
    p = PolyQ.from_coeffs([1, 0, 1])  # 1 + eta^2
    q = p ** 3
    assert q.degree == 6
    assert q.exquo(p) == p ** 2
    assert q.divisible_by(p)
    assert not (q + PolyQ.one()).divisible_by(p)


def test_poly_wronskian_of_monomials():
    # W[1, eta, eta^2] = 2
    w = poly_wronskian([PolyQ.one(), PolyQ.eta(), PolyQ.eta() ** 2])
    assert w == PolyQ.constant(2)


def test_poly_proportional():
    p = PolyQ.from_coeffs([2, 4, 6])
    q = PolyQ.from_coeffs([1, 2, 3])
    assert poly_proportional(p, q) == 2
    assert poly_proportional(p, PolyQ.from_coeffs([1, 2, 4])) is None
    assert poly_proportional(p, PolyQ.from_coeffs([1, 2])) is None


@pytest.mark.parametrize(
    "roots, interval, expected",
    [
        ([-2, 1, 3], OpenInterval(), 3),
        ([-2, 1, 3], OpenInterval(sp.Integer(0), None), 2),
        ([-2, 1, 3], OpenInterval(sp.Integer(1), sp.Integer(3)), 0),
        ([1, 1, 2], OpenInterval(sp.Integer(0), sp.Integer(5)), 2),
    ],
)
def test_sturm_count_matches_known_roots(roots, interval, expected):
    p = PolyQ.from_expr(sp.prod([ETA - r for r in roots]))
    assert sturm_count_roots(p, interval) == expected


def test_sturm_agrees_with_sign_scan():
    p = PolyQ.from_expr((ETA - sp.Rational(1, 3)) * (ETA - sp.Rational(5, 2)) * (ETA ** 2 + 1))
    interval = OpenInterval(sp.Integer(0), sp.Integer(4))
    assert sturm_count_roots(p, interval) == sign_scan_count(p, interval, points=2000) == 2


def test_empty_interval_rejected():
    with pytest.raises(DomainError):
        OpenInterval(sp.Integer(2), sp.Integer(1))


def test_texpr_values_and_degree_bounds():
    t = TExpr.t(sp.Rational(3, 2))
    expr = (t * t - 1) / (t + 1)
    assert expr.value == QQ(1, 2)
    assert expr.degree_bound == 2


def test_texpr_pole_raises_sampling_error():
    t = TExpr.t(1)
    with pytest.raises(SamplingError):
        TExpr.const(1) / (t - 1)


def test_horner_evaluates_polynomial():
    value = horner([QQ(1), QQ(0), QQ(2)], TExpr.t(3))
    assert value.value == QQ(19)
    assert value.degree_bound == 3


# --- Wronskian and root-count properties on random polynomials ----------------------

def random_poly(rng, degree, bound=5):
    coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = int(rng.choice([-1, 1])) * int(rng.integers(1, bound + 1))
    return PolyQ.from_coeffs(coeffs)


def test_wronskian_is_alternating():
    rng = np.random.default_rng(11)
    for _ in range(10):
        a, b, c = (random_poly(rng, int(rng.integers(1, 5))) for _ in range(3))
        w = poly_wronskian([a, b, c])
        assert poly_wronskian([b, a, c]) == -w
        assert poly_wronskian([a, c, b]) == -w


@pytest.mark.parametrize("n", [1, 2, 3])
def test_nested_wronskian_identity(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(4):
        fs = [random_poly(rng, int(rng.integers(0, 5))) for _ in range(n)]
        g, h = random_poly(rng, int(rng.integers(0, 5))), random_poly(rng, int(rng.integers(0, 5)))
        left = poly_wronskian([poly_wronskian(fs + [g]), poly_wronskian(fs + [h])])
        right = poly_wronskian(fs) * poly_wronskian(fs + [g, h])
        assert left == right


@pytest.mark.slow
def test_sturm_agrees_with_sign_scan_on_random_polynomials():
    rng = np.random.default_rng(2024)
    interval = OpenInterval(sp.Integer(-10), sp.Integer(10))
    points = 4000
    spacing = 20 / (points + 1)
    compared = 0
    for _ in range(1000):
        p = random_poly(rng, int(rng.integers(3, 5)))
        if sp.discriminant(p.as_expr(), ETA) == 0:
            continue
        roots = np.roots(p.float_coeffs()[::-1])
        real = np.sort(roots.real[np.abs(roots.imag) < 1e-6])
        if real.size > 1 and np.min(np.diff(real)) < 4 * spacing:
            continue
        assert sturm_count_roots(p, interval) == sign_scan_count(p, interval, points=points), p
        compared += 1
    assert compared >= 900
