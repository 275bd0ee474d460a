# test_oracle.py
import pytest

from errors import DictionaryMismatch, NotApplicable
from iab import enumerate_iab
from oracle import (
    ad_power_height,
    bracket_dim,
    so8_special_pair,
    so_pair,
    sl_pair,
    sp_pair,
)
from orbits import orbit_dimension, orthogonal_subsets
from sphericity import ad_heights

ALPHA2 = (0, 0, 1, 0)
THETA = (0, 1, 1, 1)


@pytest.fixture(scope="module")
def sl22():
    return sl_pair(2, 2)


def test_sl22_is_the_a3_pair(sl22):
    assert sl22.grading.s == (1, 0, 1, 0)
    assert len(sl22.basis1) == 8
    assert len(sl22.basis0) == 4
    assert sl22.check_closure()


def test_empty_set_has_zero_heights(sl22):
    assert ad_power_height(sl22, []) == (0, 0, 0)
    assert bracket_dim(sl22, []) == 0


def test_bracket_dimensions(sl22):
    assert bracket_dim(sl22, [ALPHA2]) == 3
    assert bracket_dim(sl22, [ALPHA2, THETA]) == 4


def test_ad_power_matches_grading(sl22):
    assert ad_power_height(sl22, [ALPHA2, THETA]) == (2, 1, 2)
    assert ad_heights(sl22.grading, [ALPHA2, THETA]) == (2, 1, 2)


def test_tangent_dimension_matches_orbit_formula(sl22):
    for a in enumerate_iab(sl22.grading).subalgebras():
        for S in orthogonal_subsets(a):
            assert bracket_dim(sl22, S) == orbit_dimension(a, S)


def test_g0_weight_has_no_g1_vector(sl22):
    with pytest.raises(DictionaryMismatch):
        sl22.x_of([(0, 1, 0, 0)])


def test_parity(sl22):
    x = sl22.x_of([ALPHA2])
    assert sl22.parity(x) == 1
    assert sl22.parity(sl22.cartan[0]) == 0


def test_symplectic_and_orthogonal_realizations():
    assert len(sp_pair(3).basis1) == 12
    assert len(so_pair(8).basis1) == 12
    assert len(so8_special_pair().basis1) == 16
    assert so8_special_pair().grading.s == (0, 0, 1, 0, 0)


def test_rejected_sizes():
    with pytest.raises(NotApplicable):
        sl_pair(0, 2)
    with pytest.raises(NotApplicable):
        sp_pair(1)
    with pytest.raises(NotApplicable):
        so_pair(6)
