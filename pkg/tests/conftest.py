# conftest.py
import fakeredis
import pytest
from fastapi.testclient import TestClient

import middlewares
from affine import GradingDatum, build_affine
from hermitian import hermitian_pair
from main import app


@pytest.fixture
def redis_store():
    return fakeredis.FakeRedis(decode_responses=True)


@pytest.fixture
def client(monkeypatch, redis_store):
    """TestClient whose rate limiter counts in a fresh in-process Redis"""
    monkeypatch.setattr(middlewares, "r", redis_store)
    with TestClient(app) as c:
        yield c


@pytest.fixture
def grading():
    """Grading from a finite type and its Kac marks"""
    def build(finite_type, marks, twist=1):
        return GradingDatum(build_affine(finite_type, twist), marks)
    return build


@pytest.fixture
def a3_alpha2():
    return hermitian_pair("A3", 2)
