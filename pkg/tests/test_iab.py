# test_iab.py
import pytest

from affine import flip
from errors import NotApplicable, NotInvolution
from iab import (
    InversionSet,
    abar,
    c1_sigma,
    components,
    enumerate_biconvex,
    enumerate_iab,
    is_maximal,
    special_node,
    special_wp,
    theta,
    upsilon,
    upsilon_inverse,
)


def test_a1_has_three_sigma_minuscule_elements(grading):
    poset = enumerate_iab(grading("A1", (1, 1)))
    assert len(poset) == 3
    assert [e.sorted() for e in poset.elements] == [[], [(0, 1)], [(1, 0)]]
    assert sorted(poset.graph.edges()) == [(0, 1), (0, 2)]
    assert len(poset.maximal()) == 2


def test_weak_order_walk_matches_biconvex_search(grading):
    g = grading("A2", (1, 1, 0))
    poset = enumerate_iab(g, cross_check=True)
    assert {e.roots for e in enumerate_biconvex(g)} == {e.roots for e in poset.elements}


@pytest.mark.parametrize("finite_type, expected", [("A1", 2), ("A2", 4), ("B2", 4)])
def test_flip_counts(finite_type, expected):
    assert len(enumerate_iab(flip(finite_type), cross_check=True)) == expected


def test_order_three_is_rejected(grading):
    with pytest.raises(NotInvolution):
        enumerate_iab(grading("A2", (1, 1, 1)))


def test_theta_negates_and_reduces(grading):
    g = grading("A1", (1, 1))
    a = theta(g, InversionSet(frozenset({(1, 0)})))
    assert a.weights == {(0, 1)}
    assert a.dim == 1


def test_special_node_d4(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    assert special_node(g) == 2
    comps = components(g, 2)
    assert [c.nodes for c in comps] == [(0,), (1,), (3,), (4,)]
    assert all(c.attach == c.nodes[0] for c in comps)


def test_special_node_rejections(grading):
    with pytest.raises(NotApplicable):
        special_node(grading("A3", (1, 0, 1, 0)))
    with pytest.raises(NotApplicable):
        special_node(grading("C2", (0, 1, 0)))


def test_special_wp_d4(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    wp = special_wp(g)
    assert len(wp) == 5
    assert (0, 0, 1, 0, 0) in wp
    assert (1, 0, 1, 0, 0) in wp
    assert wp == c1_sigma(g)
    assert is_maximal(g, wp)
    assert wp in enumerate_iab(g).elements


def test_abar_d4_is_the_whole_special_element(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    assert abar(g) == special_wp(g)


def test_upsilon_round_trip(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    eta = (0, 1, 1, 0, 0)
    assert upsilon(g, 2, eta) == (0, 1, 0, 0, 0)
    assert upsilon_inverse(g, 2, upsilon(g, 2, eta)) == eta
