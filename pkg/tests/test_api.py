"""HTTP API tests over the in-process test client."""

import json
import time

import pytest
from fastapi.testclient import TestClient

from gadgetscope.api import create_app
from gadgetscope.cli import main as cli_main

from conftest import FIG3_BYTES, FIG4_BYTES, build_elf


@pytest.fixture
def env(tmp_path):
    orig = tmp_path / "orig.bin"
    orig.write_bytes(build_elf(code=FIG3_BYTES))
    variant_src = tmp_path / "variant-src.bin"
    variant_src.write_bytes(build_elf(code=FIG4_BYTES))
    app = create_app(tmp_path / "sessions", workers=2)
    client = TestClient(app)
    return {"client": client, "orig": orig, "variant_src": variant_src,
            "out": tmp_path / "variant.bin", "tmp": tmp_path}


def create_session(env):
    r = env["client"].post("/api/sessions", json={
        "package": "demo", "binary": str(env["orig"])})
    assert r.status_code == 201, r.text
    return r.json()["id"]


def run_iteration(env, sid, remove=("NET",)):
    r = env["client"].post(f"/api/sessions/{sid}/iterations", json={
        "config": {"scenario": "s", "remove": list(remove)},
        "hooks": {"build": f"cp {env['variant_src']} {env['out']}"},
        "output_binary": str(env["out"])})
    assert r.status_code == 202, r.text
    n = r.json()["iteration"]
    deadline = time.time() + 30
    while time.time() < deadline:
        g = env["client"].get(f"/api/sessions/{sid}/iterations/{n}")
        assert g.status_code == 200
        body = g.json()
        if body["status"] != "running":
            return n, body
        time.sleep(0.05)
    raise AssertionError("iteration did not finish")


class TestSessions:
    def test_empty_store_lists_nothing(self, env):
        r = env["client"].get("/api/sessions")
        assert r.status_code == 200
        assert r.json() == []

    def test_create_and_get(self, env):
        sid = create_session(env)
        r = env["client"].get(f"/api/sessions/{sid}")
        assert r.status_code == 200
        assert r.json()["package"] == "demo"

    def test_unknown_session_404_with_error_body(self, env):
        r = env["client"].get("/api/sessions/missing")
        assert r.status_code == 404
        body = r.json()
        assert body["status"] == 404
        assert body["code"] == "unknown-session"
        assert body["message"]

    def test_malformed_body_422(self, env):
        r = env["client"].post("/api/sessions", json={"package": "x"})
        assert r.status_code == 422


class TestIterations:
    def test_async_run_completes(self, env):
        sid = create_session(env)
        n, body = run_iteration(env, sid)
        assert n == 1
        assert body["status"] == "done"
        assert body["delta"]["introduced_counts"]["total"] > 0

    def test_api_delta_matches_cli_diff(self, env, capsys):
        sid = create_session(env)
        _, body = run_iteration(env, sid)
        assert cli_main(["diff", str(env["orig"]), str(env["out"]),
                         "--format", "json"]) == 0
        cli_doc = json.loads(capsys.readouterr().out)
        api_delta = body["delta"]
        for key in ("counts_before", "counts_after", "introduced_counts",
                    "introduction_rates", "reduction_rate"):
            assert api_delta[key] == cli_doc[key], key

    def test_unknown_iteration_404(self, env):
        sid = create_session(env)
        r = env["client"].get(f"/api/sessions/{sid}/iterations/4")
        assert r.status_code == 404


class TestDecisions:
    def test_double_decision_409(self, env):
        sid = create_session(env)
        n, _ = run_iteration(env, sid)
        url = f"/api/sessions/{sid}/iterations/{n}/decision"
        r1 = env["client"].post(url, json={"decision": "reject"})
        assert r1.status_code == 200
        r2 = env["client"].post(url, json={"decision": "accept"})
        assert r2.status_code == 409
        assert r2.json()["code"] == "decision-already-recorded"

    def test_bad_decision_422(self, env):
        sid = create_session(env)
        n, _ = run_iteration(env, sid)
        r = env["client"].post(
            f"/api/sessions/{sid}/iterations/{n}/decision",
            json={"decision": "maybe"})
        assert r.status_code == 422


class TestCompare:
    def test_compare_endpoint(self, env):
        sid = create_session(env)
        run_iteration(env, sid)
        run_iteration(env, sid, remove=("NET", "TLS"))
        r = env["client"].get(f"/api/sessions/{sid}/compare?a=1&b=2")
        assert r.status_code == 200
        rows = r.json()["rows"]
        assert [row["iteration"] for row in rows] == [1, 2]
        for row in rows:
            assert set(row) >= {"reduction_rate", "introduction_rate",
                                "verdict"}
