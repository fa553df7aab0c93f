from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify.errors import NotARootError, ParseError
from e6verify.lattice import (
    ALPHA_MAX,
    EXTENDED_ROOT,
    K,
    SIMPLE_ROOTS,
    LatticeVector,
    double_six,
    dynkin_root,
    e6_coordinates,
    enumerate_lines,
    enumerate_roots,
    format_roots,
    from_e6_coordinates,
    line_index,
    line_labels,
    pairing,
    parse_root,
    parse_roots,
    positive_roots,
)

roots_st = st.sampled_from(enumerate_roots())


def brute_force(square: int, with_k: int) -> set[tuple[int, ...]]:
    found = set()
    for v in itertools.product(range(-2, 3), repeat=7):
        x = LatticeVector(v)
        if pairing(x, x) == square and pairing(x, K) == with_k:
            found.add(v)
    return found


def test_roots_agree_with_a_brute_force_search():
    assert {r.vec.coords for r in enumerate_roots()} == brute_force(-2, 0)


def test_lines_agree_with_a_brute_force_search():
    assert {l.vec.coords for l in enumerate_lines()} == brute_force(-1, -1)


def test_counts():
    assert len(enumerate_roots()) == 72
    assert len(positive_roots()) == 36
    assert len(enumerate_lines()) == 27
    assert line_labels()[:3] == ("a1", "a2", "a3")
    assert line_labels()[-1] == "c56"


def test_line_labels_round_trip():
    for i, lab in enumerate(line_labels()):
        assert line_index(lab) == i
        assert line_index(enumerate_lines()[i].vec) == i


def test_cartan_matrix_of_the_simple_roots_is_e6():
    G = [[-pairing(a.vec, b.vec) for b in SIMPLE_ROOTS] for a in SIMPLE_ROOTS]
    edges = {(i + 1, j + 1) for i in range(6) for j in range(i + 1, 6) if G[i][j]}
    # r4 is the branch node; r1, r3, r5 are its neighbours
    assert edges == {(1, 4), (3, 4), (4, 5), (2, 3), (5, 6)}
    assert all(G[i][i] == 2 for i in range(6))


def test_extended_root_attaches_to_r1():
    r0 = dynkin_root(0)
    assert r0 == EXTENDED_ROOT
    assert [pairing(r0.vec, r.vec) for r in SIMPLE_ROOTS] == [1, 0, 0, 0, 0, 0]
    assert pairing(ALPHA_MAX, ALPHA_MAX) == -2


@given(roots_st)
def test_double_six_structure(r):
    pairs = double_six(r)
    assert len(pairs) == 6
    flat = [x for p in pairs for x in p]
    assert len(set(flat)) == 12
    lines = enumerate_lines()
    for a, b in pairs:
        assert pairing(r.vec, lines[a].vec) == 1
        assert pairing(r.vec, lines[b].vec) == -1
        assert lines[b].vec == lines[a].vec + r.vec


@given(roots_st)
def test_e6_coordinates_round_trip(r):
    c = e6_coordinates(r)
    assert from_e6_coordinates(c) == r.vec
    assert all(isinstance(x, int) for x in c)


@given(roots_st)
def test_token_round_trip(r):
    assert parse_root(r.token) == r
    assert parse_root(str(r.vec.coords).replace(" ", "")) == r


def test_notation():
    assert parse_root("a:1,2").vec == LatticeVector((0, 1, -1, 0, 0, 0, 0))
    assert parse_root("max").vec == LatticeVector((2, -1, -1, -1, -1, -1, -1))
    assert parse_root("b:1,2,3").vec == LatticeVector((1, -1, -1, -1, 0, 0, 0))
    assert parse_root("a:2,1") == -parse_root("a:1,2")


@pytest.mark.parametrize("token", ["a:1,1", "a:1,7", "b:1,2", "c:1,2", "a:1,2,3", "(1,0,0,0,0,0,0)"])
def test_malformed_tokens(token):
    with pytest.raises(ParseError):
        parse_root(token)


def test_parse_errors_carry_a_location():
    with pytest.raises(ParseError) as info:
        parse_roots("a:1,2 a:2,3\n  a:1,1")
    assert info.value.line == 2
    assert info.value.column == 3


def test_parse_roots_handles_comments_and_separators():
    roots = parse_roots("a:1,2; b:1,2,3  # comment\n(2,-1,-1,-1,-1,-1,-1)")
    assert format_roots(roots) == "a:1,2 b:1,2,3 max"


def test_double_six_rejects_a_non_root():
    with pytest.raises(NotARootError):
        double_six(LatticeVector((1, 0, 0, 0, 0, 0, 0)))
