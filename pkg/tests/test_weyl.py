from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from e6verify.lattice import enumerate_roots, pairing, positive_roots
from e6verify.tables import CLASS_ORDER, TABLE2
from e6verify.weyl import (
    WeylElement,
    all_reflections,
    classify,
    conjugacy_classes,
    full_group,
    gram_preserved,
    incidence_preserved,
    reflection,
    relation,
    word,
)

roots_st = st.sampled_from(enumerate_roots())
elements = st.integers(0, 51839).map(lambda i: full_group()[i])


def test_group_order_and_class_count():
    assert len(full_group()) == 51840
    table = conjugacy_classes()
    assert len(table) == 25
    assert sum(c.size for c in table) == 51840


def test_fast_mode_agrees_with_full_enumeration():
    full = {c.name: (c.size, c.cycle_type, c.inv_dim) for c in conjugacy_classes()}
    fast = {c.name: (c.size, c.cycle_type, c.inv_dim) for c in conjugacy_classes(fast=True)}
    assert full == fast


def test_class_names_and_order():
    assert [c.name for c in conjugacy_classes()] == list(CLASS_ORDER)
    assert {c.name: c.inv_dim for c in conjugacy_classes()} == TABLE2


def test_class_sizes_follow_from_root_counts():
    table = conjugacy_classes()
    assert all(51840 % c.size == 0 for c in table)
    # 36 positive roots; each is orthogonal to 15 and non-orthogonal to 20 positive roots
    assert table.by_name("2c").size == 36
    assert table.by_name("2b").size == 36 * 15 // 2
    assert table.by_name("3b").size == 2 * (36 * 20 // 2 // 3)
    assert Counter(c.order for c in table)[2] == 4


@given(roots_st)
def test_reflections_are_six_transpositions(r):
    w = reflection(r)
    assert w * w == WeylElement.identity()
    assert w.cycle_type == (2,) * 6 + (1,) * 15
    assert w.det == -1
    assert reflection(-r) == w


def test_there_are_36_reflections():
    assert len(set(all_reflections())) == 36
    assert len(positive_roots()) == 36


@given(roots_st, roots_st)
def test_products_of_two_reflections(r, s):
    rel = relation(r, s)
    p = pairing(r.vec, s.vec)
    w = word([r, s])
    if rel == "equal":
        assert w == WeylElement.identity()
    elif rel == "syzygetic":
        assert p == 0 and classify(w).name == "2b"
    else:
        assert abs(p) == 1 and classify(w).name == "3b"


@given(elements)
def test_elements_preserve_the_intersection_form(w):
    assert incidence_preserved(w)
    assert gram_preserved(w)


@given(elements, elements)
def test_class_invariants_are_conjugation_invariant(w, g):
    c = classify(w)
    assert classify(g * w * g.inverse()) == c
    assert c.cycle_type == w.cycle_type
    assert c.inv_dim == w.inv_dim


@given(elements)
def test_inverse_and_power(w):
    assert w * w.inverse() == WeylElement.identity()
    assert w ** w.order == WeylElement.identity()
    assert w ** -1 == w.inverse()


def test_inv_mu_of_a_reflection():
    c = conjugacy_classes().by_name("2c")
    assert c.inv_mu == Fraction(6, 2) + 15
    assert c.lcm == 2


def test_unknown_class_name():
    with pytest.raises(KeyError):
        conjugacy_classes().by_name("7a")


def test_weyl_element_needs_27_points():
    with pytest.raises(ValueError):
        WeylElement(bytes(range(5)))
