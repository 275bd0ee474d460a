# test_api.py
import config
import middlewares
from errors import NotApplicable
from middlewares import hit


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_info_reports_limits(client):
    limits = client.get("/info").json()["limits"]
    assert limits["rate_limit"] == config.RATE_LIMIT


def test_classify_affine(client):
    star = [[2 if i == j else -1 if 2 in (i, j) else 0 for j in range(5)] for i in range(5)]
    response = client.post("/diagrams/classify", json={"entries": star})
    assert response.status_code == 200
    body = response.json()
    assert body["verdict"] == "Affine"
    assert body["label"] == "D4^(1)"
    assert body["labels"] == [1, 1, 2, 1, 1]


def test_classify_rejects_bad_matrices(client):
    assert client.post("/diagrams/classify", json={"entries": [[2, -1]]}).status_code == 422
    response = client.post("/diagrams/classify", json={"entries": [[2, 1], [1, 2]]})
    assert response.status_code == 400
    assert "detail" in response.json()


def test_unknown_type_is_404(client):
    assert client.get("/diagrams/Z9").status_code == 404


def test_diagram_dot(client):
    response = client.get("/diagrams/D4", params={"twist": 1})
    assert response.status_code == 200
    assert "xlabel" in response.text


def test_hermitian_route(client):
    body = client.get("/hermitian/A3/2").json()
    assert body["rank"] == 2
    assert body["tube_type"]
    assert client.get("/hermitian/B3/2").status_code == 422


def test_grading_subalgebras(client):
    response = client.post("/gradings/subalgebras", json={"type": "A1", "marks": [1, 1]})
    assert response.status_code == 200
    assert [row["dim"] for row in response.json()] == [0, 1, 1]


def test_grading_validation(client):
    assert client.post("/gradings/orbits", json={"type": "A1", "marks": [1, 1], "twist": 5}).status_code == 422
    assert client.post("/gradings/orbits", json={"type": "A1", "marks": [2, 2]}).status_code == 400


def test_unknown_suite_is_404(client):
    assert client.post("/sweeps/verify/nope", json={"max_rank": 1}).status_code == 404


def test_sweeps_are_rate_limited(client):
    for _ in range(config.RATE_LIMIT):
        assert client.post("/sweeps/verify/nope", json={"max_rank": 1}).status_code == 404
    response = client.post("/sweeps/verify/nope", json={"max_rank": 1})
    assert response.status_code == 429
    assert response.json()["retry_after"] == config.WINDOW


def test_rate_counter_lives_in_redis(redis_store):
    for _ in range(config.RATE_LIMIT):
        assert hit(redis_store, "rate:test")
    assert not hit(redis_store, "rate:test")
    assert int(redis_store.get("rate:test")) == config.RATE_LIMIT
    assert 0 < redis_store.ttl("rate:test") <= config.WINDOW


def test_rate_counter_recovers_from_bad_value(redis_store):
    redis_store.set("rate:test", "garbage")
    assert hit(redis_store, "rate:test")
    assert redis_store.get("rate:test") == "1"


def test_sweeps_run_unlimited_without_redis(client, monkeypatch):
    monkeypatch.setattr(middlewares, "r", None)
    for _ in range(config.RATE_LIMIT + 1):
        assert client.post("/sweeps/verify/nope", json={"max_rank": 1}).status_code == 404


def test_error_payload():
    payload = NotApplicable("no such node", witness=(1, 2)).to_dict()
    assert payload == {"error": "NotApplicable", "detail": "no such node", "witness": "(1, 2)"}
    assert NotApplicable.status_code == 422
