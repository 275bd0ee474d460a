# test_hermitian.py
import pytest

from errors import NotApplicable, NoShortRoots, NotTubeType
from hermitian import (
    antichain_below,
    down_closure,
    entails,
    expected_antichain_type,
    expected_rank,
    harish_chandra_cascade,
    hermitian_pair,
    hermitian_pairs,
    is_antichain,
    is_tube_type,
    longest_element_image,
    ort_max,
    ort_subsets,
    short_root_decomposition,
    unique_max_antichain,
    up_closure,
)
from rootsys import finite_system


@pytest.mark.parametrize("label, node, rank", [
    ("A3", 1, 1), ("A3", 2, 2), ("A5", 3, 3), ("B3", 1, 2), ("C3", 3, 3), ("D4", 1, 2), ("D5", 5, 2),
])
def test_cascade_rank(label, node, rank):
    p = hermitian_pair(label, node)
    assert len(harish_chandra_cascade(p)) == rank
    assert p.rank_r == rank


def test_cascade_of_c3():
    cascade = harish_chandra_cascade(hermitian_pair("C3", 3))
    assert cascade.roots == ((0, 0, 1), (0, 2, 1), (2, 2, 1))
    assert cascade.type == (0, 3)


def test_expected_rank_table():
    assert expected_rank("A", 3, 2) == 2
    assert expected_rank("D", 6, 5) == 3
    assert expected_rank("E", 7, 7) == 3
    assert expected_rank("B", 3, 2) is None


def test_pair_requires_coefficient_one():
    with pytest.raises(NotApplicable):
        hermitian_pair("B3", 2)
    with pytest.raises(NotApplicable):
        hermitian_pair("A3", 4)


def test_hermitian_pair_listing():
    pairs = hermitian_pairs(4)
    assert ("C3", 3) in pairs
    assert ("D4", 4) in pairs
    assert ("B2", 1) in pairs
    assert all(label[0] != "E" for label, _ in pairs)


@pytest.mark.parametrize("label, node, tube", [
    ("A3", 2, True), ("A2", 1, False), ("B3", 1, True), ("C3", 3, True), ("D4", 4, True), ("D5", 5, False), ("E6", 1, False), ("E7", 7, True),
])
def test_tube_type(label, node, tube):
    assert is_tube_type(hermitian_pair(label, node)) is tube


def test_longest_element_image():
    a2 = finite_system("A2")
    assert longest_element_image(a2, (1, 0)) == (0, -1)
    c3 = finite_system("C3")
    assert longest_element_image(c3, (0, 0, 1)) == (0, 0, -1)


def test_unique_max_antichain(a3_alpha2):
    assert unique_max_antichain(a3_alpha2).roots == ((0, 1, 1), (1, 1, 0))
    with pytest.raises(NotTubeType):
        unique_max_antichain(hermitian_pair("A2", 1))


def test_ort_max_and_closures(a3_alpha2):
    p = a3_alpha2
    assert len(ort_max(p)) == 2
    assert len(ort_subsets(p)) == 7
    assert up_closure(p, [(0, 1, 0)]) == frozenset(p.phi1plus)
    assert down_closure(p, [(0, 1, 0)]) == {(0, 1, 0)}
    assert entails(p, [(1, 1, 1)], [(0, 1, 0)])
    assert not entails(p, [(0, 1, 0)], [(1, 1, 1)])
    assert is_antichain(p, [(1, 1, 0), (0, 1, 1)])
    assert not is_antichain(p, [(0, 1, 0), (1, 1, 1)])


def test_antichain_below_simply_laced(a3_alpha2):
    A = antichain_below(a3_alpha2, [(0, 1, 0), (1, 1, 1)])
    assert A.roots == ((0, 1, 1), (1, 1, 0))
    assert entails(a3_alpha2, A.roots, [(0, 1, 0), (1, 1, 1)])


def test_antichain_below_c3_cascade():
    p = hermitian_pair("C3", 3)
    B = harish_chandra_cascade(p)
    A = antichain_below(p, B)
    assert is_antichain(p, A.roots)
    assert A.type == (1, 1)
    assert A.type == expected_antichain_type(p, B)


def test_short_root_decomposition():
    p = hermitian_pair("C3", 3)
    cascade = harish_chandra_cascade(p)
    assert short_root_decomposition(p, (0, 1, 1), cascade) == ((0, 2, 1), (0, 0, 1))
    with pytest.raises(NotApplicable):
        short_root_decomposition(p, (0, 0, 1), cascade)


def test_short_root_decomposition_needs_short_roots(a3_alpha2):
    with pytest.raises(NoShortRoots):
        short_root_decomposition(a3_alpha2, (0, 1, 0), [])
