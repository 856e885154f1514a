import numpy as np
import pytest

from app.core.errors import EquivalenceUnavailableError, PreconditionError, SingularExtensionError
from app.extension import build_spec, check_nodeless
from app.extension.system import eigenfunction_evaluator, extended_potential
from app.families import get_family, make_params
from app.verify import (
    check_norms,
    family_spectrum,
    gram_matrix,
    schrodinger_spectrum,
    verify_halfint_equivalence,
    verify_isospectral,
)
from app.verify.eigensolver import (
    EndpointWall,
    compare_levels,
    endpoint_laurent,
    endpoint_wall,
    frobenius_eigenvalues,
    log_slope,
    observed_order,
    richardson,
)
from app.verify.isospectral import expected_levels

MORSE = {"h": "10/3", "mu": "1"}
KEPLER = {"g": "5/3", "mu": "9"}


def test_richardson_removes_second_order_error():
    exact = 2.0
    coarse, fine = exact + 0.4, exact + 0.1
    value, error = richardson(coarse, fine)
    assert value == pytest.approx(exact)
    assert error == pytest.approx(0.1)


def test_observed_order():
    assert observed_order(1.16, 1.04, 1.01) == pytest.approx(2.0)
    assert observed_order(1.0, 1.0, 1.0) is None


def test_compare_levels():
    assert compare_levels([0.0, 3.0005], [0, 3], rtol=1e-3)["passed"]
    assert not compare_levels([0.0, 3.1], [0, 3], rtol=1e-3)["passed"]
    result = compare_levels([0.0], [0, 3])
    assert not result["passed"]
    assert "1 numeric levels vs 2 exact" in result["detail"]


@pytest.mark.slow
def test_particle_in_a_box():
    report = schrodinger_spectrum(lambda x: np.zeros_like(x), -1.0, 1.0, 60.0, enlarge=False, order_study=True)
    exact = [(k * np.pi / 2) ** 2 for k in range(1, 5)]
    assert len(report.levels) == 4
    for level, e in zip(report.levels, exact):
        assert level.numeric == pytest.approx(e, rel=1e-6)
    assert 1.8 <= report.observed_order <= 2.2


@pytest.mark.slow
def test_soliton_levels():
    p = make_params("s", {"h": "2"}, True)
    report = family_spectrum(get_family("s"), p)
    assert len(report.levels) == 2
    assert report.values[0] == pytest.approx(0.0, abs=1e-4)
    assert report.values[1] == pytest.approx(3.0, abs=1e-4)


@pytest.mark.slow
def test_morse_levels():
    family = get_family("M")
    p = make_params("M", MORSE)
    report = family_spectrum(family, p)
    exact = [family.energy(p, n) for n in range(4)]
    assert compare_levels(report.values, exact)["passed"]


@pytest.mark.slow
def test_morse_overshoot_extension_is_isospectral():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7), ("overshoot", 8)])
    result = verify_isospectral(spec)
    assert result.passed, result.detail
    assert len(result.spectrum.levels) == 4


@pytest.mark.slow
def test_kepler_twisted_extension_is_isospectral():
    spec = build_spec(make_params("Kh", KEPLER), [("twisted", 1)])
    result = verify_isospectral(spec)
    assert result.passed, result.detail
    assert result.spectrum.endpoint_exponent == pytest.approx(2 / 3, abs=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("seeds", [[("twisted-II", 0)], [("twisted-I", 0)], [("overshoot", 9)]])
def test_hdpt_extensions_are_isospectral(seeds):
    spec = build_spec(make_params("hDPT", {"g": "5/3", "h": "10"}), seeds)
    result = verify_isospectral(spec)
    assert result.passed, result.detail


@pytest.mark.slow
def test_pseudo_virtual_seed_adds_a_level():
    p = make_params("s", {"h": "7/3"})
    specs = [build_spec(p, [("overshoot", v)]) for v in range(5, 10)]
    nodeless = [s for s in specs if check_nodeless(s)[0]]
    if not nodeless:
        for spec in specs:
            with pytest.raises(SingularExtensionError):
                verify_isospectral(spec)
        return
    spec = nodeless[0]
    result = verify_isospectral(spec)
    assert len(result.expected) == 4
    assert min(result.expected) == spec.seeds[0].energy
    assert result.passed, result.detail


def test_expected_levels_include_added_level():
    p = make_params("s", {"h": "7/3"})
    spec = build_spec(p, [("overshoot", 5)])
    levels = expected_levels(spec)
    assert levels[0] == spec.seeds[0].energy
    assert len(levels) == 4


def test_singular_extension_is_refused():
    p = make_params("s", {"h": "7/3"})
    for v in range(5, 10):
        spec = build_spec(p, [("overshoot", v)])
        if not check_nodeless(spec)[0]:
            with pytest.raises(SingularExtensionError):
                verify_isospectral(spec)


@pytest.mark.slow
def test_ground_state_norm():
    p = make_params("M", MORSE)
    spec = build_spec(p, [])
    gram = gram_matrix(spec, [0, 1])
    h0 = get_family("M").norm_constant(p, 0)
    assert gram[0, 0] == pytest.approx(h0, rel=1e-8)
    assert abs(gram[0, 1]) <= 1e-8 * np.sqrt(gram[0, 0] * gram[1, 1])


@pytest.mark.slow
def test_extended_norms():
    spec = build_spec(make_params("M", MORSE), [("overshoot", 7)])
    norms = check_norms(spec)
    assert norms.indices == [0, 1, 2, 3]
    assert norms.passed(), (norms.max_offdiagonal, norms.max_diagonal_error)


def test_equivalence_rosen_morse_and_soliton():
    rm = build_spec(make_params("RM", {"h": "7/2", "mu": "1"}, True), [("overshoot", 8)])
    assert verify_halfint_equivalence(rm).passed
    s = build_spec(make_params("s", {"h": "5/2"}, True), [("overshoot", 6)])
    assert verify_halfint_equivalence(s).passed


def test_equivalence_unavailable_for_symmetric_top():
    spec = build_spec(make_params("hst", {"h": "7/2", "mu": "1"}, True), [("overshoot", 8)])
    with pytest.raises(EquivalenceUnavailableError):
        verify_halfint_equivalence(spec)
    result = verify_halfint_equivalence(spec, strict=False)
    assert not result.passed


# --- inverse-square wall at a finite end ---------------------------------------------

def test_endpoint_laurent_coefficients():
    c, r = endpoint_laurent(lambda x: -2 / 9 / x ** 2 - 18 / x + 3.0, 0.0)
    assert c == pytest.approx(-2 / 9, abs=1e-9)
    assert r == pytest.approx(-18.0, rel=1e-6)


def test_log_slope():
    assert log_slope(lambda x: x ** (2 / 3) * (1 + 5 * x), 0.0) == pytest.approx(2 / 3, abs=1e-6)


def test_endpoint_wall_root_choice():
    def potential(x):
        return -2 / 9 / x ** 2 + x ** 2

    assert endpoint_wall(potential, 0.0).exponent == pytest.approx(2 / 3)
    assert endpoint_wall(potential, 0.0, slope=0.34).exponent == pytest.approx(1 / 3)
    assert endpoint_wall(lambda x: -0.3 / x ** 2, 0.0) is None


def test_wall_exponent_must_be_positive():
    with pytest.raises(PreconditionError):
        frobenius_eigenvalues(lambda x: x ** 2, 0.0, 1.0, 0.1, 1.0, EndpointWall(0.0, 0.0))


def test_kepler_wall_exponents():
    p = make_params("Kh", KEPLER)
    family = get_family("Kh")
    original = endpoint_wall(lambda x: family.potential_float(p, x), 0.0)
    assert original.exponent == pytest.approx(5 / 3, abs=1e-6)

    spec = build_spec(p, [("twisted", 1)])
    ground = eigenfunction_evaluator(spec, 0)
    wall = endpoint_wall(extended_potential(spec), 0.0, slope=log_slope(ground, 0.0))
    assert wall.inverse_square == pytest.approx(-2 / 9, abs=1e-6)
    assert wall.exponent == pytest.approx(2 / 3, abs=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("exponent, ground", [(2 / 3, 7 / 3), (1 / 3, 5 / 3)])
def test_weak_inverse_square_oscillator(exponent, ground):
    # -psi'' + (l(l+1)/x^2 + x^2) psi with l(l+1) = -2/9: E = 4n + 2l + 3, l = exponent - 1
    report = schrodinger_spectrum(
        lambda x: -2 / 9 / x ** 2 + x ** 2, 0.0, 10.0, 15.0, enlarge=False,
        wall=EndpointWall(exponent, -2 / 9),
    )
    assert len(report.levels) == 4
    for n, level in enumerate(report.levels):
        assert level.numeric == pytest.approx(ground + 4 * n, rel=1e-4)


@pytest.mark.slow
def test_coulomb_wall():
    # hydrogen-like radial problem with l = -1/3: E = -1/(n + 2/3)^2
    report = schrodinger_spectrum(
        lambda x: -2 / 9 / x ** 2 - 2 / x, 0.0, 40.0, 0.0, enlarge=False,
        wall=EndpointWall(2 / 3, -2 / 9, -2.0),
    )
    assert report.values[0] == pytest.approx(-2.25, rel=5e-4)
    assert report.values[1] == pytest.approx(-0.36, rel=5e-4)
