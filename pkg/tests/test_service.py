import json

import pytest
from fastapi.testclient import TestClient

from braidring.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestEval:
    def test_relation_evaluates_to_zero(self, client):
        resp = client.post("/eval", json={
            "expr": "y[1,0]*y[1,1] - t^2*y[1,1]*y[1,0] - (1 - t^2)",
            "type": "A2",
        })
        assert resp.status_code == 200
        body = resp.json()
        assert body["zero"] is True
        assert body["text"] == "0"
        assert body["canonical"] == []

    def test_generator(self, client):
        resp = client.post("/eval", json={"expr": "y[1,0]", "type": "A2"})
        body = resp.json()
        assert body["text"] == "{(0,(1)): 1}"
        assert body["canonical"] == [
            {"tuple": [[0, [1]]], "coeff": {"num": [[0, [1, 1]]], "den": [[0, [1, 1]]]}}
        ]

    def test_sigma_eval(self, client):
        resp = client.post("/eval", json={"expr": "sigma[1](y[2,0])", "type": "A2"})
        assert resp.json()["text"] == "t^(1/2)·{(0,(1,2)): 1}"

    def test_braid_word_field(self, client):
        direct = client.post("/eval", json={"expr": "sigma[1](y[2,0])", "type": "A2"})
        via_braid = client.post("/eval", json={"expr": "y[2,0]", "type": "A2",
                                               "braid": "s1"})
        assert direct.json() == via_braid.json()

    def test_n_mode(self, client):
        resp = client.post("/eval", json={"expr": "y[2,0]", "n": 3})
        assert resp.status_code == 200

    def test_parse_error_reports_position(self, client):
        resp = client.post("/eval", json={"expr": "y[1,0] + $", "type": "A2"})
        assert resp.status_code == 400
        assert resp.json()["detail"]["position"] == 9

    def test_bad_type_rejected(self, client):
        resp = client.post("/eval", json={"expr": "y[1,0]", "type": "Q9"})
        assert resp.status_code == 400

    def test_type_and_n_conflict(self, client):
        resp = client.post("/eval", json={"expr": "y[1,0]", "type": "A2", "n": 3})
        assert resp.status_code == 400


class TestCheck:
    def test_small_run_passes(self, client):
        resp = client.post("/check", json={
            "suites": ["braid", "inverse"], "type": "A2", "window": [0, 1],
        })
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is True
        assert body["document"]["passed"] is True
        suites = {r["suite"] for r in body["document"]["reports"]}
        assert suites == {"braid-relations", "inverse"}

    def test_corrupt_run_fails_with_witness(self, client):
        resp = client.post("/check", json={
            "suites": ["inverse"], "type": "A2", "window": [0, 0], "corrupt": True,
        })
        body = resp.json()
        assert body["passed"] is False
        failures = body["document"]["reports"][0]["failures"]
        assert failures and failures[0]["witness"] not in ("", "0")

    def test_unknown_suite_rejected(self, client):
        resp = client.post("/check", json={"suites": ["bogus"], "type": "A2"})
        assert resp.status_code == 400

    def test_proposition_needs_n(self, client):
        resp = client.post("/check", json={"suites": ["proposition"], "type": "A2"})
        assert resp.status_code == 400

    def test_thm32_alias(self, client):
        resp = client.post("/check", json={
            "suites": ["thm32"], "n": 3, "window": [0, 0],
        })
        assert resp.status_code == 200
        assert resp.json()["document"]["reports"][0]["suite"] == "reflection"

    def test_seeded_reports_are_byte_identical(self, client):
        payload = {"suites": ["property", "shuffle"], "type": "A2",
                   "window": [0, 1], "seed": 42}
        doc1 = client.post("/check", json=payload).json()["document"]
        doc2 = client.post("/check", json=payload).json()["document"]
        assert json.dumps(doc1, sort_keys=True) == json.dumps(doc2, sort_keys=True)
