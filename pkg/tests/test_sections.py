from __future__ import annotations

import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify.errors import DegenerateInput, GenerationError
from e6verify.lattice import dynkin_root
from e6verify.presets import preset_points, preset_roots
from e6verify.sections import (
    FewNodesWarning,
    build_curve,
    h0_2omega_minus_5L,
    h0_L,
    h0_omega,
    h0_omega_residues,
    h0_omega_sq,
    minus5_subspace_matches_kernel,
    node_equation_sum,
    petri_check,
    scaled,
)
from e6verify.verification import random_generating_roots, section_dims


@pytest.fixture(scope="module")
def curve_2k5():
    return build_curve(preset_roots("thm-2k5"), preset_points("thm-2k5"))


@pytest.fixture(scope="module")
def curve_petri():
    return build_curve(preset_roots("thm-petri"), preset_points("thm-petri"))


def test_canonical_sections(curve_2k5):
    sp = h0_omega(curve_2k5)
    assert (sp.ambient_dim, sp.constraint_rank, sp.dim) == (117, 71, 46)
    assert all(sp.satisfies(v) for v in sp.basis[:5])


def test_quadratic_differentials(curve_2k5):
    sp = h0_omega_sq(curve_2k5)
    assert (sp.ambient_dim, sp.constraint_rank, sp.dim) == (207, 72, 135)


def test_twisted_quadratic_differentials(curve_2k5):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        sp = h0_2omega_minus_5L(curve_2k5)
    assert (sp.ambient_dim, sp.constraint_rank, sp.dim) == (72, 72, 0)


def test_petri_preset(curve_petri):
    assert h0_L(curve_petri).dim == 2
    res = petri_check(curve_petri)
    assert res.dims == (20, 20, 6)
    assert res.span_dim == 46
    assert res.ok
    assert res.to_json()["direct_sum"]


def test_petri_preset_has_components_with_three_nodes(curve_petri):
    assert sorted(n for n in curve_petri.n)[:3] == [3, 3, 3]
    with pytest.warns(FewNodesWarning):
        h0_2omega_minus_5L(curve_petri)


def test_genus_and_connectivity(curve_2k5):
    assert curve_2k5.genus == 46
    assert curve_2k5.is_connected()
    assert sum(curve_2k5.n) == 144


def test_node_equations_sum_to_zero(curve_2k5):
    assert all(x == 0 for x in node_equation_sum(curve_2k5))


def test_residue_formulation_agrees(curve_2k5):
    sp = h0_omega_residues(curve_2k5)
    assert sp.constraint_rank == 26
    assert sp.dim == h0_omega(curve_2k5).dim == 46


def test_minus5_part_is_the_kernel(curve_2k5, curve_petri):
    assert minus5_subspace_matches_kernel(curve_2k5)
    assert minus5_subspace_matches_kernel(curve_petri)


@given(st.integers(0, 10**6))
def test_scaling_keeps_dimensions(seed):
    rng = random.Random(seed)
    c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 9))
    curve = build_curve(preset_roots("thm-2k5"), preset_points("thm-2k5"))
    assert h0_omega(scaled(curve, c)).dim == 46


@given(st.integers(0, 10**6))
def test_random_curves_have_genus_46(seed):
    rng = random.Random(seed)
    roots = random_generating_roots(rng)
    pts = rng.sample(range(1, 1000), 12)
    curve = build_curve(roots, pts)
    assert curve.genus == 46
    assert curve.is_connected()


def test_input_validation():
    roots = preset_roots("thm-2k5")
    pts = preset_points("thm-2k5")
    with pytest.raises(ValueError):
        build_curve(roots[:11], pts)
    with pytest.raises(DegenerateInput):
        build_curve(roots, pts[:11])
    with pytest.raises(DegenerateInput):
        build_curve(roots, [0] + pts[1:])
    with pytest.raises(DegenerateInput):
        build_curve(roots, [1] + pts[1:-1] + [1])
    with pytest.raises(GenerationError):
        build_curve([dynkin_root(1 + k % 5) for k in range(12)], pts)
    curve = build_curve(roots, pts)
    with pytest.raises(DegenerateInput):
        scaled(curve, 0)


def test_section_dims_helper(curve_2k5):
    assert section_dims(curve_2k5) == {"omega": 46, "omega2": 135, "2k5l": 0, "L": 2}


def test_json_view(curve_2k5):
    j = h0_omega(curve_2k5).to_json(with_basis=True)
    assert j["dim"] == len(j["basis"]) == 46
    assert curve_2k5.to_json()["genus"] == 46
