# test_affine.py
import pytest

from affine import (
    AffineRootSystem,
    build_affine,
    flip,
    involution_marks,
    involutions,
    is_biconvex,
    real_roots_up_to_level,
    validate_type_filter,
)
from errors import IllegalTwist, LevelBoundTooSmall, NotApplicable, NotCoprime, UnknownType
from iab import special_wp


@pytest.mark.parametrize("finite_type, twist, labels", [
    ("A1", 1, (1, 1)),
    ("A3", 1, (1, 1, 1, 1)),
    ("B3", 1, (1, 1, 2, 2)),
    ("C2", 1, (1, 2, 1)),
    ("D4", 1, (1, 1, 2, 1, 1)),
    ("G2", 1, (1, 3, 2)),
    ("A2", 2, (2, 1)),
])
def test_null_root_labels(finite_type, twist, labels):
    assert build_affine(finite_type, twist).delta == labels


def test_illegal_twists():
    with pytest.raises(IllegalTwist):
        AffineRootSystem("B3", 2)
    with pytest.raises(IllegalTwist):
        AffineRootSystem("A1", 2)
    with pytest.raises(IllegalTwist):
        AffineRootSystem("D5", 3)


def test_marks_must_be_coprime(grading):
    with pytest.raises(NotCoprime):
        grading("A1", (2, 2))
    with pytest.raises(NotCoprime):
        grading("A1", (1, 1, 0))
    with pytest.raises(NotCoprime):
        grading("A1", (-1, 1))


def test_sigma_heights(grading):
    g = grading("A2", (1, 1, 0))
    assert g.order == 2
    assert g.sigma_height(g.system.delta) == 2
    assert g.sigma_height((1, 0, 1)) == 1
    assert g.grade((1, 1, 1)) == 0
    assert g.pi0 == (2,)
    assert g.pi1 == (0, 1)


def test_reduce_and_bar(grading):
    g = grading("A1", (1, 1))
    assert g.reduce((2, 1)) == (1, 0)
    assert g.reduce((-1, 0)) == (0, 1)
    bar = g.bar((2, 1))
    assert bar.representative == (1, 0)
    assert bar.class_index == 1
    assert g.weights(1) == ((0, 1), (1, 0))


def test_imaginary_roots(grading):
    g = grading("A1", (1, 1))
    assert g.is_root((1, 1))
    assert not g.is_real_root((1, 1))
    assert g.is_real_root((1, 2))


def test_window_guard(grading):
    g = grading("A1", (1, 1))
    with pytest.raises(LevelBoundTooSmall):
        g.is_real_root((5, 4))


def test_real_roots_by_translation():
    system = build_affine("A1")
    roots = real_roots_up_to_level(system, 1)
    assert roots == {(0, 1), (0, -1), (1, 2), (1, 0), (-1, 0), (-1, -2)}


def test_real_roots_of_d4_at_level_one():
    system = build_affine("D4")
    roots = real_roots_up_to_level(system, 1)
    assert len(roots) == 24 + 48
    assert set(system.finite_roots) <= roots


def test_twisted_real_roots_skip_long_odd_levels():
    system = build_affine("A3", 2)
    long_root = next(r for r in system.finite_roots if system.is_long_finite(r))
    shifted = tuple(a + d for a, d in zip(long_root, system.delta))
    assert shifted not in system.real_roots(1)


def test_biconvexity(grading):
    g = grading("A1", (1, 1))
    assert is_biconvex(g, [])
    assert is_biconvex(g, [(1, 0)])
    assert not is_biconvex(g, [(1, 0), (0, 1)])
    h = grading("A2", (1, 1, 0))
    assert not is_biconvex(h, [(1, 0, 1)])
    assert is_biconvex(h, [(1, 0, 0)])


def test_special_inversion_set_of_d4_is_biconvex(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    wp = [(0, 0, 1, 0, 0), (1, 0, 1, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 1, 0, 1)]
    assert special_wp(g).roots == frozenset(wp)
    assert is_biconvex(g, wp)
    assert not is_biconvex(g, [(1, 0, 1, 0, 0)])


def test_delta_prime(grading):
    assert grading("A1", (1, 1)).delta_prime is None
    assert grading("A1", (1, 0)).delta_prime == (1, 1)


def test_flip_has_order_two():
    g = flip("A2")
    assert g.flip
    assert g.order == 2
    assert g.label.startswith("flip:")


def test_involution_marks_up_to_automorphism():
    assert involution_marks(build_affine("A3")) == [(1, 1, 0, 0), (1, 0, 1, 0)]
    assert involution_marks(build_affine("G2")) == [(0, 0, 1)]
    assert involution_marks(build_affine("A2", 2)) == [(0, 1)]


def test_involution_sweep():
    assert [g.label for g in involutions(1)] == ["A1^(1)[1, 1]"]
    assert len(involutions(3, types=["A3"])) == 2
    assert all(g.order == 2 for g in involutions(3))


def test_type_filter_validation():
    assert validate_type_filter(["D", "D4", "D4^(1)"]) == ["D", "D4", "D4^(1)"]
    assert validate_type_filter(None) is None
    with pytest.raises(UnknownType):
        validate_type_filter(["X9"])


def test_finite_coords(grading):
    g = grading("A2", (1, 1, 0))
    assert g.finite_coords((1, 0, 0)) == (-1, -1)
    assert g.finite_coords((1, 1, 1)) == (0, 0)
    with pytest.raises(NotApplicable):
        grading("A4", (0, 0, 1), twist=2).finite_coords((0, 0, 1))
