import numpy as np
import pytest
import sympy as sp

from app.core.errors import DomainError, InvalidParamsError, NonGenericError
from app.exactcore.poly import PolyQ
from app.families import FamilyTag, all_families, get_family, make_params
from app.families.curves import energy_curve, region_label

R = sp.Rational
ETA = PolyQ.eta()


def test_morse_fixture_spectrum():
    p = make_params("M", {"h": "10/3", "mu": "1"})
    family = get_family("M")
    assert family.nmax(p) == 3
    assert [family.energy(p, n) for n in range(4)] == [0, R(17, 3), R(28, 3), 11]
    assert family.energy(p, 7) == R(-7, 3)


@pytest.mark.parametrize(
    "tag, values, nmax",
    [
        ("M", {"h": "10/3", "mu": "1"}, 3),
        ("s", {"h": "7/3"}, 2),
        ("RM", {"h": "10/3", "mu": "4"}, 1),
        ("hst", {"h": "7/3", "mu": "1"}, 2),
        ("Kh", {"g": "5/3", "mu": "9"}, 1),
        ("hDPT", {"g": "5/3", "h": "10"}, 4),
    ],
)
def test_ground_state_and_nmax(tag, values, nmax):
    family = get_family(tag)
    p = make_params(tag, values)
    assert family.nmax(p) == nmax
    assert family.energy(p, 0) == 0
    energies = [family.energy(p, n) for n in range(nmax + 1)]
    assert energies == sorted(energies)
    assert float(energies[-1]) < family.threshold(p)


@pytest.mark.parametrize("family", all_families(), ids=lambda f: f.tag.value)
def test_eigen_polynomials_have_degree_n(family):
    values = {
        FamilyTag.M: {"h": "10/3", "mu": "1"},
        FamilyTag.S: {"h": "7/3"},
        FamilyTag.RM: {"h": "10/3", "mu": "4"},
        FamilyTag.HST: {"h": "7/3", "mu": "1"},
        FamilyTag.KH: {"g": "5/3", "mu": "9"},
        FamilyTag.HDPT: {"g": "5/3", "h": "10"},
    }[family.tag]
    p = make_params(family.tag, values)
    for n in range(family.nmax(p) + 1):
        poly = family.eigen_polynomial(p, n)
        assert poly.degree == n
        assert poly.is_real


@pytest.mark.parametrize("family", all_families(), ids=lambda f: f.tag.value)
def test_exact_and_float_potentials_agree(family):
    values = {
        FamilyTag.M: {"h": "10/3", "mu": "1"},
        FamilyTag.S: {"h": "7/3"},
        FamilyTag.RM: {"h": "10/3", "mu": "4"},
        FamilyTag.HST: {"h": "7/3", "mu": "1"},
        FamilyTag.KH: {"g": "5/3", "mu": "9"},
        FamilyTag.HDPT: {"g": "5/3", "h": "10"},
    }[family.tag]
    p = make_params(family.tag, values)
    for t in (R(3, 2), R(5, 3), R(7, 4)):
        x = np.array([np.log(float(t))])
        assert float(family.potential_value(p, t)) == pytest.approx(family.potential_float(p, x)[0], rel=1e-12)


def test_genericity_and_half_integer_mode():
    with pytest.raises(NonGenericError):
        make_params("M", {"h": "3", "mu": "1"})
    with pytest.raises(NonGenericError):
        make_params("s", {"h": "5/2"})
    assert make_params("s", {"h": "5/2"}, half_integer_mode=True)["h"] == R(5, 2)
    # only g is constrained for hDPT
    assert make_params("hDPT", {"g": "5/3", "h": "10"})["h"] == 10
    with pytest.raises(NonGenericError):
        make_params("hDPT", {"g": "2", "h": "10/3"})


@pytest.mark.parametrize(
    "tag, values",
    [
        ("M", {"h": "-1/3", "mu": "1"}),
        ("RM", {"h": "4/3", "mu": "2"}),
        ("Kh", {"g": "5/3", "mu": "2"}),
        ("hDPT", {"g": "10/3", "h": "7/3"}),
        ("M", {"h": "10/3"}),
    ],
)
def test_invalid_params(tag, values):
    with pytest.raises(InvalidParamsError):
        make_params(tag, values)


def test_unknown_family_tag():
    with pytest.raises(DomainError):
        get_family("Xyz")


def test_rosen_morse_reflection_at_half_integer_coupling():
    p = make_params("RM", {"h": "7/2", "mu": "1"}, half_integer_mode=True)
    family = get_family("RM")
    for n in (R(1, 3), 2, 5, 8, R(29, 5)):
        assert family.reflected_energy(p, n) == family.energy(p, n)
        assert family.reflected_energy(p, n) == family.energy(p, 7 - sp.Rational(n))
    with pytest.raises(DomainError):
        family.energy(p, R(7, 2))


def test_rosen_morse_reduced_degree():
    family = get_family("RM")
    half = make_params("RM", {"h": "7/2", "mu": "1"}, half_integer_mode=True)
    assert family.reduced_degree(half, 8) == 0
    assert family.reduced_degree(half, 10) == 2
    assert family.reduced_degree(half, 7) == 7
    generic = make_params("RM", {"h": "10/3", "mu": "1"})
    assert family.reduced_degree(generic, 10) == 10


def test_discrete_symmetry_energies():
    hdpt = make_params("hDPT", {"g": "5/3", "h": "10"})
    family = get_family("hDPT")
    g, h = R(5, 3), 10
    for v in (0, 1, 3):
        assert family.twisted_energy(hdpt, "twisted-I", v) == -(2 * v + 1 + 2 * g) * (2 * v + 1 + 2 * h)
        assert family.twisted_energy(hdpt, "twisted-II", v) == -(2 * v + 1 - 2 * g) * (2 * v + 1 - 2 * h)
    assert family.twisted_energy(hdpt, "twisted-I", 0) == -91

    kh = make_params("Kh", {"g": "5/3", "mu": "9"})
    eckart = get_family("Kh")
    for v in (1, 2, 7):
        assert eckart.twisted_energy(kh, "twisted", v) == eckart.energy(kh, -v - 1)
    assert eckart.twisted_energy(kh, "twisted", 1) == R(-52288, 75)


def test_soliton_factorisation_for_odd_2h():
    p = make_params("s", {"h": "5/2"}, half_integer_mode=True)
    family = get_family("s")
    factor = (ETA ** 2 + PolyQ.one()) ** 3
    for v in (6, 7, 8):
        poly = family.eigen_polynomial(p, v)
        assert poly.divisible_by(factor)
        assert poly.exquo(factor).degree == v - 6


def test_morse_curve_regions():
    p = make_params("M", {"h": "10/3", "mu": "1"})
    assert [region_label(p, n) for n in (0, 3)] == ["a", "a"]
    assert region_label(p, 7) == "b"
    assert region_label(p, 6) == "-"
    assert region_label(p, -1) == "c"


def test_rosen_morse_has_three_overshoot_subregions():
    p = make_params("RM", {"h": "10/3", "mu": "4"})
    assert [region_label(p, v) for v in (3, 4, 7)] == ["b1", "b2", "b3"]
    assert get_family("RM").energy(p, 3) == R(-3289, 25)


def test_kh_c1_region_holds_only_the_first_reflected_level():
    p = make_params("Kh", {"g": "5/3", "mu": "9"})
    reflected = [region_label(p, -v - 1) for v in range(4)]
    assert reflected == ["c1", "c", "c", "c"]


def test_energy_curve_skips_poles():
    p = make_params("RM", {"h": "10/3", "mu": "4"})
    curve = energy_curve(p, [0, 1, R(10, 3), 4])
    assert [pt.n for pt in curve.points] == [0, 1, 4]
    assert curve.skipped == [R(10, 3)]
    assert curve.points[2].region == "b2"
