# test_suites.py
import pytest

from affine import flip
from errors import NotApplicable
from suites import (
    SUITES,
    SuiteReport,
    grading_from_key,
    grading_key,
    map_gradings,
    run_suite,
)


def test_unknown_suite():
    with pytest.raises(NotApplicable):
        run_suite("nope")


def test_report_merge():
    report = SuiteReport("demo")
    report.merge(3, [])
    assert report.ok
    report.merge(1, [{"where": "x"}])
    assert not report.ok
    assert report.to_dict()["checked"] == 4


def test_grading_keys_round_trip(grading):
    g = grading("D4", (0, 0, 1, 0, 0))
    assert grading_from_key(grading_key(g)).label == g.label
    f = flip("A2")
    assert grading_from_key(grading_key(f)).label == f.label


def test_map_gradings_keeps_order(grading):
    gradings = [grading("A1", (1, 1)), grading("A3", (1, 0, 1, 0))]
    assert map_gradings(lambda g: g.label, gradings, jobs=1) == [g.label for g in gradings]


def test_hermitian_ranks():
    report = run_suite("hermitian-ranks", max_rank=4)
    assert report.ok
    assert report.checked > 0


def test_antichain_small_ranks():
    assert run_suite("antichain", max_rank=3).ok


def test_flip_count_small_ranks():
    report = run_suite("flip-count", max_rank=2)
    assert report.ok
    assert report.checked == 4


@pytest.mark.slow
@pytest.mark.parametrize("name", ["cor73", "mt", "p63", "weighted-dynkin", "panyushev", "orbit-dim"])
def test_involution_suites(name):
    report = run_suite(name, max_rank=4)
    assert report.ok, report.failures


@pytest.mark.slow
@pytest.mark.parametrize(
    "name, max_rank",
    [
        ("cor73", 7),
        ("mt", 7),
        ("weighted-dynkin", 7),
        ("panyushev", 7),
        ("p63", 8),
        ("orbit-dim", 6),
    ],
)
def test_involution_suites_at_full_rank(name, max_rank):
    report = run_suite(name, max_rank=max_rank, jobs=4)
    assert report.ok, report.failures[:5]
    assert report.checked > 0


def test_weighted_dynkin_on_short_and_twisted_gradings():
    report = run_suite("weighted-dynkin", max_rank=5, types=["B", "A4^(2)"])
    assert report.ok, report.failures
    assert report.checked > 0


@pytest.mark.slow
def test_oracle_suite():
    report = run_suite("oracle")
    assert report.ok, report.failures


def test_suite_registry():
    assert {"cor73", "mt", "p63", "antichain", "hermitian-ranks", "panyushev", "orbit-dim"} <= set(SUITES)
