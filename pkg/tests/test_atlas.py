# test_atlas.py
import json

import pytest

from atlas import (
    atlas_dot,
    build_atlas,
    classify_rows,
    dumps,
    grading_dot,
    grading_record,
    hermitian_record,
    orbit_listing,
)


def test_a1_record(grading):
    record = grading_record(grading("A1", (1, 1)))
    assert record["iab_size"] == 3
    assert record["abar"] is None
    assert not record["nonspherical_exists"]
    assert record["covers"] == [["0", "1"], ["0", "2"]]
    assert [s["dim"] for s in record["subalgebras"]] == [0, 1, 1]
    assert all(s["spherical"] for s in record["subalgebras"])


def test_d4_record_names_abar(grading):
    record = grading_record(grading("D4", (0, 0, 1, 0, 0)))
    assert record["nonspherical_exists"]
    special = record["subalgebras"][int(record["abar"])]
    assert special["dim"] == 5
    assert not special["spherical"]
    assert special["abar_contained"]


def test_atlas_is_deterministic():
    first = dumps(build_atlas(1))
    assert first == dumps(build_atlas(1))
    records = json.loads(first)
    assert len(records) == 1
    assert records[0]["grading"]["name"] == "A1^(1)"


def test_classify_rows():
    rows = classify_rows(1)
    assert len(rows) == 3
    assert {"grading", "subalgebra", "dim", "heights", "spherical", "abar_contained", "witness"} <= set(rows[0])


def test_dot_output(grading):
    dot = grading_dot(grading("A3", (1, 0, 1, 0)))
    assert "xlabel" in dot
    assert atlas_dot(1).count("graph") >= 1


def test_hermitian_record():
    row = hermitian_record("C3", 3, antichains=True)
    assert row["rank"] == 3
    assert row["expected_rank"] == 3
    assert row["tube_type"]
    assert len(row["ort"]) > 0
    assert all("antichain" in entry for entry in row["ort"])
    assert hermitian_record("A2", 1)["unique_antichain"] is None


def test_orbit_listing(grading):
    g = grading("A3", (1, 0, 1, 0))
    full = orbit_listing(g)
    assert full["grading"] == g.label
    single = orbit_listing(g, 0)
    assert [s["id"] for s in single["subalgebras"]] == ["0"]
    assert single["subalgebras"][0]["orbits"] == [{"rep": [], "dim": 0, "open": True}]
    with pytest.raises(ValueError):
        orbit_listing(g, 999)
