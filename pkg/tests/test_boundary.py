from __future__ import annotations

import sympy
import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify.boundary import (
    BipartiteCoverGraph,
    OrbitPartition,
    boundary_configuration,
    compare_table3,
    complementary_roots,
    d5_configuration,
    e_l_configurations,
    e_l_toric_ranks,
    generates_weyl_group,
    orbits,
    root_closure,
    sublattice_type,
    table2_comparison,
    table3_roots,
    toric_rank,
    trivial_toric_rank,
)
from e6verify.errors import PartitionError
from e6verify.incidence import build_incidence
from e6verify.lattice import dynkin_root, e6_coordinates, enumerate_roots, parse_roots
from e6verify.linalg import rank
from e6verify.tables import E_L_LATTICES, TABLE3
from e6verify.weyl import WeylElement, full_group, reflection

elements = st.integers(0, 51839).map(lambda i: full_group()[i])
roots_st = st.sampled_from(enumerate_roots())


def sympy_toric_rank(u: WeylElement, A: OrbitPartition, B: OrbitPartition) -> int:
    """Independent oracle: one sympy nullspace in Q^27 with all conditions stacked."""
    D = sympy.Matrix(build_incidence().rows)
    rows = [list(r) for r in (D + 5 * sympy.eye(27)).tolist()]
    for cyc in u.cycles:
        for s in cyc[1:]:
            row = [0] * 27
            row[cyc[0]], row[s] = 1, -1
            rows.append(row)
    for P in (A, B):
        for block in P.blocks:
            rows.append([int(s in block) for s in range(27)])
    return len(sympy.Matrix(rows).nullspace())


@given(elements)
def test_trivial_partitions_give_the_invariant_dimension(u):
    assert trivial_toric_rank(u) == u.inv_dim


@given(elements, st.lists(roots_st, max_size=3))
def test_toric_rank_matches_sympy_oracle(u, gens):
    # the cycles of u form a u-invariant partition; reflection orbits only sometimes are
    A = OrbitPartition(tuple(tuple(c) for c in u.cycles))
    B = orbits(gens)
    if not B.is_invariant_under(u):
        B = OrbitPartition.single_block()
    assert toric_rank(u, A, B) == sympy_toric_rank(u, A, B)


@pytest.mark.parametrize("name", [n for n in E_L_LATTICES if n != "A3A1^2"])
def test_e_l_configuration_matches_sympy_oracle(name):
    cfg = e_l_configurations()[name]
    assert cfg.toric_rank() == sympy_toric_rank(cfg.u, cfg.A, cfg.B)


def test_toric_rank_is_bounded_by_the_betti_number():
    for cfg in e_l_configurations().values():
        if cfg is None:
            continue
        assert cfg.toric_rank() <= BipartiteCoverGraph(cfg.u, cfg.A, cfg.B).betti_number()


def test_d5_configuration_has_rank_zero():
    cfg = d5_configuration()
    assert cfg.lattice == "D5"
    assert cfg.toric_rank() == 0
    assert cfg.A.degrees == (16, 10, 1)


def test_e_l_ranks_observed():
    ranks = e_l_toric_ranks()
    assert ranks["E6"] == {1}
    for name in ("A5", "D5", "A4A1", "A2^2A1"):
        assert ranks[name] == {0}
    # both lattices have rank 6, so every complementary root lies in L ⊗ Q
    assert ranks["A5A1"] == {1}
    assert ranks["A2^3"] == {1}
    assert ranks["A3A1^2"] is None


def _in_rational_span(r, L) -> bool:
    vs = [list(e6_coordinates(x)) for x in L]
    return rank(vs + [list(e6_coordinates(r))]) == rank(vs)


@pytest.mark.parametrize("name", ["A5", "D5", "A5A1", "A2^3", "A4A1"])
def test_rank_one_exactly_when_the_extra_root_is_in_the_span(name):
    row = next(r for r in TABLE3 if r.lattice == name)
    L = table3_roots(row)
    for r in complementary_roots(L)[:8]:
        expected = 1 if _in_rational_span(r, L) else 0
        assert boundary_configuration(L, r).toric_rank() == expected


def test_a3a1sq_is_never_completed_by_one_reflection():
    row = next(r for r in TABLE3 if r.lattice == "A3A1^2")
    assert complementary_roots(table3_roots(row)) == []


@pytest.mark.parametrize("text,expected", [
    ("a:1,2", "A1"),
    ("a:1,2 a:3,4", "A1^2"),
    ("a:1,2 a:2,3", "A2"),
    ("a:1,2 a:2,3 a:3,4 a:4,5 b:1,2,3", "D5"),
    ("b:1,2,3 a:1,2 a:2,3 a:3,4 a:4,5 a:5,6", "E6"),
])
def test_sublattice_types(text, expected):
    assert sublattice_type(parse_roots(text)).dynkin == expected


def test_root_closure_sizes():
    assert len(root_closure([dynkin_root(i) for i in range(1, 7)])) == 72
    assert len(root_closure([dynkin_root(i) for i in range(1, 6)])) == 40
    assert generates_weyl_group([dynkin_root(i) for i in range(1, 7)])


def test_table3_degrees_except_a1_cubed():
    comps = {c.row.lattice: c for c in compare_table3()}
    for name, c in comps.items():
        assert c.degrees_match == (name != "A1^3"), name
    assert comps["A1^3"].computed_type == "A2A1"


@pytest.mark.parametrize("name,roots", [
    ("A4A1", [1, 2, 3, 4, 6]),
    ("A4", [1, 2, 3, 4]),
    ("A1^3", [2, 4, 6]),
])
def test_alternative_root_choices_reproduce_printed_orbits(name, roots):
    row = next(r for r in TABLE3 if r.lattice == name)
    P = orbits([dynkin_root(i) for i in roots])
    assert set(P.label_sets) == set(row.orbits)


def test_alternative_a1_fourth_power():
    row = next(r for r in TABLE3 if r.lattice == "A1^4")
    P = orbits(parse_roots("a:2,3 a:4,5 b:1,2,3 b:1,4,5"))
    assert sublattice_type(parse_roots("a:2,3 a:4,5 b:1,2,3 b:1,4,5")).dynkin == "A1^4"
    assert set(P.label_sets) == set(row.orbits)


def test_table2_comparison_fast():
    for row in table2_comparison(fast=True):
        assert row["printed"] == row["inv_dim"] == row["toric_rank_trivial"]


def test_partitions_must_be_invariant():
    u = reflection(dynkin_root(1))
    with pytest.raises(PartitionError):
        BipartiteCoverGraph(u, OrbitPartition.discrete(), OrbitPartition.discrete())
    with pytest.raises(PartitionError):
        OrbitPartition(((0, 1),))


def test_partition_helpers():
    P = orbits([dynkin_root(2)])
    assert P.refines(OrbitPartition.single_block())
    assert OrbitPartition.discrete().refines(P)
    assert len(OrbitPartition.single_block()) == 1
