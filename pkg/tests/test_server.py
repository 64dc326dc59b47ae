import random

import pytest
from fastapi.testclient import TestClient

from qmut.server import SessionStore, create_app


@pytest.fixture
def client():
    app = create_app(store=SessionStore(), static_dir=False)
    with TestClient(app) as c:
        yield c


def single_vertex_doc():
    return {"mutable": ["1"], "frozen": [], "arrows": []}


def status_of(state, token):
    return next(v["status"] for v in state["vertices"] if v["id"] == token)


class TestSessions:
    def test_single_vertex_flow(self, client):
        r = client.post("/sessions", json=single_vertex_doc())
        assert r.status_code == 201
        sid = r.json()["id"]

        state = client.get(f"/sessions/{sid}").json()
        assert status_of(state, "1") == "green"
        assert not state["all_red"]

        state = client.post(f"/sessions/{sid}/mutate", json={"vertex": "1"}).json()
        assert status_of(state, "1") == "red"
        assert state["all_red"]
        assert state["history"] == ["1"]

    def test_from_family_figure7_level2(self, client):
        r = client.post(
            "/sessions/from-family",
            json={"name": "path_bi_center_out", "level": 2},
        )
        assert r.status_code == 201
        sid = r.json()["id"]
        for v in ["0", "-1", "1"]:
            r = client.post(f"/sessions/{sid}/mutate", json={"vertex": v})
            assert r.status_code == 200
        state = client.get(f"/sessions/{sid}").json()
        assert state["all_red"]
        assert state["history"] == ["0", "-1", "1"]

    def test_mutate_frozen_is_409(self, client):
        sid = client.post("/sessions", json=single_vertex_doc()).json()["id"]
        r = client.post(f"/sessions/{sid}/mutate", json={"vertex": "1'"})
        assert r.status_code == 409
        r = client.post(f"/sessions/{sid}/mutate", json={"vertex": "zzz"})
        assert r.status_code == 409

    def test_undo_recomputes_from_base(self, client):
        sid = client.post("/sessions", json=single_vertex_doc()).json()["id"]
        client.post(f"/sessions/{sid}/mutate", json={"vertex": "1"})
        state = client.post(f"/sessions/{sid}/undo").json()
        assert state["history"] == []
        assert status_of(state, "1") == "green"

    def test_delete(self, client):
        sid = client.post("/sessions", json=single_vertex_doc()).json()["id"]
        assert client.delete(f"/sessions/{sid}").status_code == 204
        assert client.get(f"/sessions/{sid}").status_code == 404

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/nope").status_code == 404
        assert client.post("/sessions/nope/mutate", json={"vertex": "1"}).status_code == 404

    def test_malformed_body_400(self, client):
        r = client.post(
            "/sessions", content=b"not json", headers={"content-type": "application/json"}
        )
        assert r.status_code == 400

    def test_invalid_quiver_doc_422(self, client):
        bad = {"mutable": ["1"], "arrows": [{"from": "1", "to": "1"}]}
        assert client.post("/sessions", json=bad).status_code == 422
        assert (
            client.post("/sessions/from-family", json={"name": "moebius"}).status_code
            == 422
        )

    def test_families_listing(self, client):
        names = {f["name"] for f in client.get("/families").json()["families"]}
        assert "star" in names and "nested_triangles" in names


class TestReplayInvariant:
    def test_random_mutate_undo_interleavings(self, client):
        from qmut import apply_sequence, frame
        from qmut.io import quiver_from_doc

        rng = random.Random(7)
        doc = {
            "mutable": ["1", "2", "3"],
            "frozen": [],
            "arrows": [{"from": "1", "to": "2"}, {"from": "2", "to": "3"}],
        }
        sid = client.post("/sessions", json=doc).json()["id"]
        base = quiver_from_doc(doc)
        for _ in range(40):
            if rng.random() < 0.3:
                state = client.post(f"/sessions/{sid}/undo").json()
            else:
                v = rng.choice(["1", "2", "3"])
                state = client.post(f"/sessions/{sid}/mutate", json={"vertex": v}).json()
            replayed = apply_sequence(frame(base), state["history"])
            expected = {
                v: replayed.status(v).label for v in replayed.quiver.mutable
            }
            got = {
                v["id"]: v["status"] for v in state["vertices"] if not v["frozen"]
            }
            assert got == expected
