from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify.degeneration import (
    SHAPES,
    block_relation_holds,
    build_tree,
    dual_graph,
    edge_functionals,
    generates_e6,
    kernel_basis,
    load_tree,
    monodromy,
    phi_matrix,
    root_block,
    sym2_coordinates,
)
from e6verify.errors import GenerationError, ShapeError
from e6verify.lattice import dynkin_root, enumerate_roots, parse_roots
from e6verify.linalg import determinant, matmul, rank, transpose
from e6verify.presets import preset_roots
from e6verify.verification import random_generating_roots, random_unimodular

DOMINANCE = preset_roots("thm-dominance")
INNER = [f"i{j}" for j in range(10)]


def test_dominance_preset_determinant():
    res = monodromy(DOMINANCE)
    assert res.divisible_by_6
    assert res.determinant == -4096
    assert res.dominant
    assert json.loads(json.dumps(res.to_json()))["certificate"] == "PASS"


def test_caterpillar_tree_gives_dependent_forms():
    res = monodromy(DOMINANCE, build_tree("caterpillar"))
    assert res.determinant == 0
    M = [sym2_coordinates(m) for m in res.normalized]
    assert rank(M) == 19


def test_all_shapes_are_valid_trees():
    for name in SHAPES:
        t = build_tree(name)
        assert len(t.edges) == 21
        assert all(t.degree(v) == (1 if v.startswith("o") else 3) for v in t.vertices)


def test_kernel_basis():
    kb = kernel_basis(DOMINANCE)
    assert len(kb.basis) == 6
    assert matmul(phi_matrix(DOMINANCE), transpose([list(r) for r in kb.basis])) == [[0] * 6] * 6
    assert kb.elementary_divisors == (1,) * 6


def test_roots_spanning_d5_are_rejected():
    roots = [dynkin_root(1 + k % 5) for k in range(12)]
    assert not generates_e6(roots)
    with pytest.raises(GenerationError):
        monodromy(roots)


def test_wrong_root_count():
    with pytest.raises(ValueError):
        kernel_basis(DOMINANCE[:11])


@given(st.sampled_from(INNER), st.sampled_from(INNER))
def test_edge_functionals_do_not_depend_on_the_base(a, b):
    tree = build_tree()
    kb = kernel_basis(DOMINANCE)
    assert edge_functionals(tree, kb, a) == edge_functionals(tree, kb, b)


@given(st.integers(0, 10**6))
def test_abs_determinant_is_basis_independent(seed):
    kb = kernel_basis(DOMINANCE)
    g = random_unimodular(random.Random(seed))
    assert abs(determinant(g)) == 1
    assert abs(monodromy(DOMINANCE, kernel=kb.transformed(g)).determinant) == 4096


@given(st.integers(0, 10**6))
def test_dual_graph_genus_is_46(seed):
    roots = random_generating_roots(random.Random(seed))
    g = dual_graph(roots)
    assert g.n_edges == 72
    assert g.is_connected()
    assert g.genus() == 46


@given(st.sampled_from(enumerate_roots()))
def test_root_block_satisfies_the_quadratic_relation(r):
    N = root_block(r)
    assert block_relation_holds(N)


def test_tree_validation():
    edges = [list(e) for e in build_tree().edges]
    with pytest.raises(ShapeError):
        build_tree({"edges": edges[:-1]})
    bad = edges[:-1] + [["i0", "i0"]]
    with pytest.raises(ShapeError):
        build_tree({"edges": bad})
    with pytest.raises(ShapeError):
        build_tree("no-such-shape")
    with pytest.raises(ShapeError):
        build_tree().with_base("x")


def test_load_tree(tmp_path):
    p = tmp_path / "tree.json"
    p.write_text(json.dumps(build_tree().to_json()))
    assert load_tree(p).edges == build_tree().edges
    p.write_text("{")
    with pytest.raises(ShapeError):
        load_tree(p)


def test_sym2_convention():
    M = [[1, 2], [2, 3]]
    assert sym2_coordinates(M) == [1, 3, 2]


def test_reordering_cherries_keeps_dominance():
    # swapping the two roots of a cherry changes nothing in the tree
    roots = list(DOMINANCE)
    roots[0], roots[1] = roots[1], roots[0]
    assert abs(monodromy(roots).determinant) == 4096


def test_parse_and_run_from_tokens():
    roots = parse_roots(" ".join(r.token for r in DOMINANCE))
    assert monodromy(roots).determinant == -4096
