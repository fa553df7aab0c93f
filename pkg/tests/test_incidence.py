from __future__ import annotations

import sympy
from hypothesis import given
from hypothesis import strategies as st

from e6verify.incidence import (
    build_incidence,
    eigenspace,
    eigenspaces_on_ker_deg,
    full_spectrum,
    minimal_polynomial_on_ker_deg_is_quadratic,
    minus5_vector,
)
from e6verify.lattice import enumerate_roots, line_labels
from e6verify.weyl import all_reflections, full_group

elements = st.integers(0, 51839).map(lambda i: full_group()[i])


def test_basic_shape():
    D = build_incidence()
    assert D.is_symmetric()
    assert D.diagonal_is_zero()
    assert set(D.row_sums()) == {10}
    assert D.quadratic_relation_holds()


def test_neighbours_of_a1():
    # a_i meets b_j (j != i) and c_ij
    assert sorted(build_incidence().neighbours("a1")) == sorted(
        ["b2", "b3", "b4", "b5", "b6", "c12", "c13", "c14", "c15", "c16"])


def test_characteristic_polynomial_matches_sympy():
    x = sympy.symbols("x")
    M = sympy.Matrix(build_incidence().rows)
    assert sympy.factor(M.charpoly(x).as_expr()) == (x - 10) * (x - 1) ** 20 * (x + 5) ** 6
    assert full_spectrum() == {10: 1, 1: 20, -5: 6}


def test_eigenspaces_on_degree_zero_part():
    e = eigenspaces_on_ker_deg()
    assert (e.dim_plus, e.dim_minus) == (20, 6)
    assert minimal_polynomial_on_ker_deg_is_quadratic()
    D = build_incidence()
    for v in e.basis_plus:
        assert D.apply(v) == list(v) and sum(v) == 0
    for v in e.basis_minus:
        assert D.apply(v) == [-5 * x for x in v] and sum(v) == 0


def test_reflections_commute_with_the_incidence_matrix():
    D = build_incidence()
    assert all(D.commutes_with(r.perm) for r in all_reflections())


@given(elements)
def test_every_group_element_commutes(w):
    assert build_incidence().commutes_with(w.perm)


@given(st.sampled_from(enumerate_roots()))
def test_roots_give_minus5_eigenvectors(r):
    v = minus5_vector(r.vec)
    assert build_incidence().apply(v) == [-5 * x for x in v]


def test_minus5_vectors_span_the_eigenspace():
    from e6verify.linalg import rank

    vs = [minus5_vector(r.vec) for r in enumerate_roots()]
    assert rank(vs) == 6 == len(eigenspace(-5))


def test_csv_dump_has_a_header_and_27_rows():
    text = build_incidence().to_csv().splitlines()
    assert len(text) == 28
    assert text[0].split(",")[1:] == list(line_labels())
