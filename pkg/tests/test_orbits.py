# test_orbits.py
import pytest

from errors import NotDistinct, NotInPsi, PropertiesViolated
from hermitian import hermitian_pair
from iab import AbelianSubalgebra, enumerate_iab
from orbits import (
    OrthogonalSubset,
    adding_roots_holds,
    check_A1A2A3,
    enumerate_orbits,
    generic_normal_form,
    is_orthogonal_pair,
    maximal_orthogonal_subsets,
    open_orbit_rep,
    orbit_dimension,
    orthogonal_subsets,
    psi_s,
)

ALPHA2 = (0, 1, 0)
THETA = (1, 1, 1)


def test_orbits_of_a3_alpha2(a3_alpha2):
    records = enumerate_orbits(a3_alpha2.nilradical)
    assert len(records) == 7
    open_records = [r for r in records if r.is_open]
    assert len(open_records) == 1
    assert open_records[0].rep == OrthogonalSubset.of([ALPHA2, THETA])
    assert open_records[0].dim == 4
    assert records[0].rep == OrthogonalSubset(())
    assert records[0].dim == 0


def test_orbit_record_to_dict(a3_alpha2):
    record = enumerate_orbits(a3_alpha2.nilradical)[-1]
    assert set(record.to_dict()) == {"rep", "dim", "open"}


def test_open_orbit_rep(a3_alpha2):
    assert open_orbit_rep(a3_alpha2.nilradical).weights == (ALPHA2, THETA)


def test_psi_s_and_dimension(a3_alpha2):
    a = a3_alpha2.nilradical
    assert psi_s(a, [ALPHA2]) == {(1, 1, 0), (0, 1, 1)}
    assert psi_s(a, [(1, 1, 0)]) == {THETA}
    assert orbit_dimension(a, [(1, 1, 0)]) == 2
    assert orbit_dimension(a, [(1, 1, 0), (0, 1, 1)]) == 3


def test_orthogonality(a3_alpha2):
    a = a3_alpha2.nilradical
    assert is_orthogonal_pair(a, ALPHA2, THETA)
    assert is_orthogonal_pair(a, (1, 1, 0), (0, 1, 1))
    assert not is_orthogonal_pair(a, ALPHA2, (1, 1, 0))


def test_orthogonality_rejects_bad_input(a3_alpha2):
    a = a3_alpha2.nilradical
    with pytest.raises(NotDistinct):
        is_orthogonal_pair(a, ALPHA2, ALPHA2)
    with pytest.raises(NotInPsi):
        is_orthogonal_pair(a, ALPHA2, (1, 0, 0))


def test_orthogonal_subsets(a3_alpha2):
    a = a3_alpha2.nilradical
    assert len(orthogonal_subsets(a)) == 7
    maxima = maximal_orthogonal_subsets(a)
    assert [m.weights for m in maxima] == [((0, 1, 0), (1, 1, 1)), ((0, 1, 1), (1, 1, 0))]


def test_generic_normal_form(a3_alpha2):
    a = a3_alpha2.nilradical
    assert generic_normal_form(a, a.weights).weights == (ALPHA2, THETA)
    assert generic_normal_form(a, [(1, 1, 0), (0, 1, 1)]).weights == ((0, 1, 1), (1, 1, 0))
    with pytest.raises(NotInPsi):
        generic_normal_form(a, [(1, 0, 0)])


def test_property_a1_violation(a3_alpha2):
    bad = AbelianSubalgebra(weights=frozenset({ALPHA2, (0, -1, 0)}), grading=a3_alpha2.grading)
    report = check_A1A2A3(bad)
    assert not report
    assert report.prop == "A1"
    with pytest.raises(PropertiesViolated):
        enumerate_orbits(bad)


def test_property_a3_violation(a3_alpha2):
    bad = AbelianSubalgebra(weights=frozenset({ALPHA2}), grading=a3_alpha2.grading)
    assert check_A1A2A3(bad).prop == "A3"


def test_adding_roots(a3_alpha2):
    assert adding_roots_holds(a3_alpha2.nilradical)


def test_affine_subalgebras_pass_the_property_scan(grading):
    for a in enumerate_iab(grading("A3", (1, 0, 1, 0))).subalgebras():
        assert check_A1A2A3(a)
        assert orbit_dimension(a, open_orbit_rep(a)) == a.dim


def test_generic_normal_form_prunes_psi_s():
    a = hermitian_pair("C3", 3).nilradical
    # eps2+eps3 sits below 2eps2 and eps1+eps3, both in its Psi_S
    assert generic_normal_form(a, [(0, 1, 1), (0, 2, 1), (1, 1, 1)]).weights == ((0, 1, 1),)
    # 2eps1 lies in Psi_S of {2eps2, eps1+eps3}
    assert generic_normal_form(a, [(0, 2, 1), (1, 1, 1), (2, 2, 1)]).weights == ((0, 2, 1), (1, 1, 1))
