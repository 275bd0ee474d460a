# test_sphericity.py
import pytest

from errors import NotApplicable, NotMaximal
from iab import abar, enumerate_iab, special_wp, theta
from rootsys import cartan_matrix, classify_gcm
from sphericity import (
    ad_heights,
    grade_heights,
    is_spherical_subalgebra,
    label_sum_identity,
    mt_criterion,
    nonspherical_exists,
    pi_S_matrix,
    projection_identity,
    span_projection,
    special_grading_check,
    special_subsets,
    special_weights,
    sum_eta_identity,
    triple_grading,
    weighted_dynkin,
)

D4_MARKS = (0, 0, 1, 0, 0)
D4_TOP = (1, 1, 1, 1, 1)


@pytest.fixture
def d4(grading):
    return grading("D4", D4_MARKS)


def test_nonspherical_exists(grading, d4):
    assert nonspherical_exists(d4)
    assert not nonspherical_exists(grading("A3", (1, 0, 1, 0)))
    assert not nonspherical_exists(grading("A1", (1, 1)))
    assert not nonspherical_exists(grading("C2", (0, 1, 0)))


def test_every_subalgebra_of_a3_pair_is_spherical(grading):
    g = grading("A3", (1, 0, 1, 0))
    for idx, a in enumerate(enumerate_iab(g).subalgebras()):
        verdict = is_spherical_subalgebra(a, str(idx))
        assert verdict.spherical
        assert verdict.witness is None
        assert not verdict.abar_contained


def test_special_subalgebra_of_d4_is_not_spherical(d4):
    a = theta(d4, abar(d4))
    verdict = is_spherical_subalgebra(a)
    assert not verdict.spherical
    assert verdict.max_h1 == 4
    assert verdict.witness == D4_TOP
    assert verdict.abar_contained
    assert mt_criterion(d4, a)


def test_sphericity_matches_abar_containment(d4):
    for a in enumerate_iab(d4).subalgebras():
        verdict = is_spherical_subalgebra(a)
        assert verdict.spherical != mt_criterion(d4, a)


def test_verdict_to_dict(d4):
    row = is_spherical_subalgebra(theta(d4, special_wp(d4)), "7").to_dict({"s": list(D4_MARKS)})
    assert row["subalgebra"] == "7"
    assert row["witness"] == list(D4_TOP)
    assert row["grading"] == {"s": list(D4_MARKS)}


def test_heights_of_empty_set(d4):
    a = theta(d4, abar(d4))
    assert grade_heights(a, []) == (0, 0)
    assert ad_heights(a, []) == (0, 0, 0)


def test_triple_grading_on_special_set(d4):
    S = special_subsets(d4)[0]
    assert len(S) == 4
    tg = triple_grading(d4, S)
    assert tg.grade(D4_TOP) == 4
    assert set(tg.positive_support(D4_TOP)) == set(S)


def test_pi_s_is_d4_affine(d4):
    S = special_subsets(d4)[0]
    cartan, verdict = pi_S_matrix(d4, S, D4_TOP)
    assert verdict.label == "D4^(1)"
    assert label_sum_identity(cartan, verdict)


def test_label_sum_needs_affine():
    cartan = cartan_matrix("A2")
    assert not label_sum_identity(cartan, classify_gcm(cartan))


def test_weighted_dynkin_d4(d4):
    for S in special_subsets(d4, maximum=False):
        assert weighted_dynkin(d4, S) == {0: 2, 1: 2, 3: 2, 4: 2}
        assert sum_eta_identity(d4, S)
        assert projection_identity(d4, S)


def test_weighted_dynkin_needs_maximal_set(d4):
    S = special_subsets(d4)[0]
    with pytest.raises(NotMaximal):
        weighted_dynkin(d4, S[:1])


def test_special_weights_map_back(d4):
    pool = special_weights(d4)
    assert len(pool) == 4
    assert all(eta[2] == 1 for eta in pool.values())


def test_special_grading_check(d4):
    reports = special_grading_check(d4)
    assert len(reports) == 1
    assert reports[0].ok
    assert reports[0].grade4_phi1 == [D4_TOP]
    assert reports[0].to_dict()["ok"]


def test_every_special_subset_is_scanned(grading):
    g = grading("D5", (0, 0, 1, 0, 0, 0))
    subsets = special_subsets(g)
    assert len(subsets) == 2
    reports = special_grading_check(g)
    assert [r.S for r in reports] == subsets
    assert all(r.ok for r in reports)
    for S in subsets:
        assert weighted_dynkin(g, S) == {0: 2, 1: 2, 3: 2, 4: 0, 5: 0}
        assert projection_identity(g, S)


def test_projection_identity_weights_short_images(grading):
    g = grading("B4", (0, 0, 1, 0, 0))
    assert nonspherical_exists(g)
    assert len(special_subsets(g)) == 1
    subsets = special_subsets(g, maximum=False)
    assert sorted(len(S) for S in subsets) == [3, 4]
    for S in subsets:
        assert sum_eta_identity(g, S)
        assert projection_identity(g, S)
    target = (1, 1, 0, 2, 2)
    assert span_projection(g, target, (3, 4)) == {3: 2, 4: 2}
    assert span_projection(g, target, (0,)) == {0: 1}


def test_projection_identity_hypotheses(grading, d4):
    with pytest.raises(NotApplicable):
        projection_identity(grading("A3", (1, 0, 1, 0)), [])
    with pytest.raises(NotMaximal):
        projection_identity(d4, special_subsets(d4)[0][:1])
