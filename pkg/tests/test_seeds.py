import pytest
import sympy as sp

from app.core.errors import InvalidSeedError, NonGenericError
from app.extension.sampler import candidates
from app.families import all_families, make_params
from app.seeds import BoundaryType, SeedKind, boundary_exponents, classify_seed, make_seed, seed_energy
from app.seeds.builder import seed_regions
from app.seeds.models import SeedRef

R = sp.Rational

FIXTURES = {
    "M": {"h": "10/3", "mu": "1"},
    "s": {"h": "7/3"},
    "RM": {"h": "10/3", "mu": "4"},
    "hst": {"h": "7/3", "mu": "1"},
    "Kh": {"g": "5/3", "mu": "9"},
    "hDPT": {"g": "5/3", "h": "10"},
}


def params(tag):
    return make_params(tag, FIXTURES[tag])


@pytest.mark.parametrize(
    "tag, ref, energy",
    [
        ("M", ("overshoot", 7), R(-7, 3)),
        ("s", ("overshoot", 5), R(-5, 3)),
        ("RM", ("overshoot", 3), R(-3289, 25)),
        ("hDPT", ("twisted-I", 0), -91),
        ("hDPT", ("overshoot", 9), -24),
        ("Kh", ("twisted", 1), R(-52288, 75)),
    ],
)
def test_seed_energies(tag, ref, energy):
    assert seed_energy(params(tag), ref) == energy


@pytest.mark.parametrize(
    "tag, ref, expected",
    [
        ("M", ("overshoot", 7), BoundaryType.TYPE_II),
        ("s", ("overshoot", 5), BoundaryType.TYPE_III),
        ("RM", ("overshoot", 3), BoundaryType.TYPE_II),
        ("RM", ("overshoot", 4), BoundaryType.TYPE_I),
        ("RM", ("overshoot", 7), BoundaryType.TYPE_III),
        ("hst", ("overshoot", 5), BoundaryType.TYPE_III),
        ("Kh", ("overshoot", 4), BoundaryType.TYPE_I),
        ("Kh", ("twisted", 1), BoundaryType.TYPE_II),
        ("hDPT", ("overshoot", 9), BoundaryType.TYPE_I),
        ("hDPT", ("twisted-I", 0), BoundaryType.TYPE_I),
        ("hDPT", ("twisted-II", 1), BoundaryType.TYPE_II),
    ],
)
def test_classification_table(tag, ref, expected):
    seed = make_seed(params(tag), ref)
    assert seed.boundary_type is expected
    assert classify_seed(seed) is expected


@pytest.mark.parametrize("family", all_families(), ids=lambda f: f.tag.value)
def test_every_region_classifies_as_labelled(family):
    p = params(family.tag.value)
    kinds = [SeedKind.OVERSHOOT] + [SeedKind.parse(k) for k in family.twist_kinds]
    checked = 0
    for kind in kinds:
        for region in seed_regions(p, kind):
            for v in candidates(region)[:3]:
                seed = make_seed(p, SeedRef(kind, v))
                assert seed.boundary_type.value == region.note, f"{kind.value}({v}) in {region.label}"
                assert seed.energy < 0
                checked += 1
    assert checked >= 3


def test_eigenstates_are_square_integrable():
    p = params("M")
    for n in range(4):
        seed = make_seed(p, ("eigen", n))
        assert seed.boundary_type is BoundaryType.EIGEN
        assert seed.energy == [0, R(17, 3), R(28, 3), 11][n]


def test_virtual_seed_reciprocal_behaviour():
    b = boundary_exponents(make_seed(params("M"), ("overshoot", 7)))
    # type II: grows at x -> -inf, decays (double exponentially) at x -> +inf
    assert b.upper.kind == "double_exp_decay"
    assert b.upper_reciprocal.kind == "double_exp_growth"


@pytest.mark.parametrize(
    "tag, ref, error",
    [
        ("M", ("overshoot", 5), InvalidSeedError),
        ("M", ("overshoot", -1), InvalidSeedError),
        ("M", ("twisted", 1), InvalidSeedError),
        ("M", ("eigen", 4), InvalidSeedError),
        ("s", ("bogus", 1), InvalidSeedError),
    ],
)
def test_invalid_seeds(tag, ref, error):
    with pytest.raises(error):
        make_seed(params(tag), ref)


def test_seed_on_region_boundary_is_non_generic():
    # h - g = 8 puts overshoot(8) on the open end of the overshoot range
    p = make_params("hDPT", {"g": "5/3", "h": "29/3"})
    with pytest.raises(NonGenericError):
        make_seed(p, ("overshoot", 8))
