from itertools import combinations

import numpy as np
import pytest
import sympy as sp

from app.core.errors import DomainError, DuplicateIndexError, PreconditionError, SamplingError, SpecError
from app.extension import (
    added_bound_state,
    build_spec,
    build_system,
    check_nodeless,
    extended_eigen_polynomial,
    extended_norm,
    extension_degree,
    halfint_equivalence,
    krein_adler_dual,
    shifted_set,
    xi_polynomial,
)
from app.extension.duality import dual_index_set
from app.extension.sampler import random_rational, random_specs
from app.families import get_family, make_params

R = sp.Rational


@pytest.fixture
def morse():
    return make_params("M", {"h": "10/3", "mu": "1"})


def test_degree_law_on_random_specs():
    specs = random_specs(24, seed=2024)
    assert len(specs) == 24
    for spec in specs:
        assert xi_polynomial(spec).degree == extension_degree(spec), str(spec)


def test_random_rational_reports_an_empty_window():
    with pytest.raises(SamplingError) as info:
        random_rational(np.random.default_rng(0), 1.0, 1.0001, max_den=3)
    assert info.value.exit_code == 1


def test_overshoot_degree_law(morse):
    spec = build_spec(morse, [("overshoot", 7), ("overshoot", 8)])
    assert extension_degree(spec) == 14
    assert xi_polynomial(spec).degree == 14


@pytest.mark.parametrize("size", [1, 2, 3])
def test_morse_overshoot_subsets_are_nodeless(morse, size):
    for subset in combinations((7, 8, 9), size):
        spec = build_spec(morse, [("overshoot", v) for v in subset])
        nodeless, count = check_nodeless(spec)
        assert nodeless, subset
        assert count == 0


def test_build_system_keeps_the_spectrum(morse):
    system = build_system(build_spec(morse, [("overshoot", 7), ("overshoot", 8)]))
    assert system.ell == 14
    assert not system.degenerate
    assert system.nodeless
    assert system.spectrum == {0: 0, 1: R(17, 3), 2: R(28, 3), 3: 11}
    assert system.added_level is None
    assert "added" not in system.levels


def test_pseudo_virtual_system_reports_added_level():
    p = make_params("s", {"h": "7/3"})
    system = build_system(build_spec(p, [("overshoot", 5)]))
    assert system.spec.pseudo_virtual
    assert system.added_level == R(-5, 3)
    assert system.levels["added"] == R(-5, 3)


def test_extended_norm_scales_original_norm(morse):
    spec = build_spec(morse, [("overshoot", 7)])
    family = get_family("M")
    for n in range(4):
        factor = float(family.energy(morse, n) - R(-7, 3))
        assert extended_norm(spec, n) == pytest.approx(factor * family.norm_constant(morse, n))


def test_extended_eigen_polynomial_degree(morse):
    spec = build_spec(morse, [("overshoot", 7)])
    assert extended_eigen_polynomial(spec, 0).degree == 6


def test_extended_eigen_polynomial_rejects_unbound_index(morse):
    spec = build_spec(morse, [("overshoot", 7)])
    with pytest.raises(DomainError):
        extended_eigen_polynomial(spec, 4)


def test_shifted_set(morse):
    spec = build_spec(morse, [("overshoot", 7), ("overshoot", 8)])
    down = shifted_set(spec, -1)
    assert down.params["h"] == R(7, 3)
    assert down.params["mu"] == 1
    assert down.degrees == (6, 7)
    assert shifted_set(spec, 0).degrees == (7, 8)


def test_shifted_set_rejects_bad_direction(morse):
    spec = build_spec(morse, [("overshoot", 7)])
    with pytest.raises(PreconditionError):
        shifted_set(spec, 2)


def test_added_bound_state_needs_type_three(morse):
    with pytest.raises(PreconditionError):
        added_bound_state(build_spec(morse, [("overshoot", 7)]))


def test_duplicate_seed_rejected(morse):
    with pytest.raises(DuplicateIndexError):
        build_spec(morse, [("overshoot", 7), ("overshoot", 7)])


def test_eigen_seed_rejected(morse):
    with pytest.raises(SpecError):
        build_spec(morse, [("eigen", 0)])


def test_two_pseudo_virtual_seeds_rejected():
    p = make_params("s", {"h": "7/3"})
    with pytest.raises(SpecError):
        build_spec(p, [("overshoot", 5), ("overshoot", 6)])


def test_mixed_kinds_rejected_outside_hdpt():
    p = make_params("Kh", {"g": "5/3", "mu": "9"})
    with pytest.raises(SpecError):
        build_spec(p, [("overshoot", 4), ("twisted", 1)])


def test_empty_spec_is_the_original(morse):
    system = build_system(build_spec(morse, []))
    assert system.ell == 0
    assert system.xi.degree == 0
    assert system.nodeless


def test_dual_index_set():
    p = make_params("s", {"h": "5/2"}, True)
    dual = dual_index_set(p, [6, 8])
    assert dual.reduced_degrees == (0, 2)
    assert dual.n_total == 2
    assert dual.indices == (1,)

    wider = dual_index_set(p, [6, 8], n_total=3)
    assert wider.indices == (0, 2)


def test_dual_index_set_preconditions():
    p = make_params("s", {"h": "5/2"}, True)
    with pytest.raises(PreconditionError):
        dual_index_set(p, [5])
    with pytest.raises(PreconditionError):
        dual_index_set(p, [6, 8], n_total=1)


def test_krein_adler_dual_rosen_morse():
    p = make_params("RM", {"h": "7/2", "mu": "1"}, True)
    dual = krein_adler_dual(build_spec(p, [("overshoot", 8)]), n_total=7)
    assert dual.reduced_degrees == (0,)
    assert dual.indices == tuple(range(7))
    assert dual.params["h"] == R(23, 2)
    assert dual.params["mu"] == 1
    assert halfint_equivalence(p, [8], n_total=7).passed


def test_rosen_morse_dual_reduced_degrees():
    p = make_params("RM", {"h": "5/2", "mu": "1"}, True)
    dual = dual_index_set(p, [6, 7])
    assert dual.reduced_degrees == (0, 1)
    assert dual.n_total == 1
    assert dual.indices == ()


def test_krein_adler_dual_needs_overshoot_seeds():
    spec = build_spec(make_params("Kh", {"g": "5/3", "mu": "9"}), [("twisted", 1)])
    with pytest.raises(PreconditionError):
        krein_adler_dual(spec)


def test_halfint_equivalence_rosen_morse():
    result = halfint_equivalence(make_params("RM", {"h": "7/2", "mu": "1"}, True), [8])
    assert result.available
    assert result.proportional
    assert result.dual_degree == 0
    assert result.passed


def test_halfint_equivalence_soliton():
    result = halfint_equivalence(make_params("s", {"h": "5/2"}, True), [6])
    assert result.passed


def test_halfint_equivalence_unavailable_for_symmetric_top():
    result = halfint_equivalence(make_params("hst", {"h": "7/2", "mu": "1"}, True), [8])
    assert not result.available
    assert not result.passed
    assert "unavailable" in result.detail
