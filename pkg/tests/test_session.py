"""Session store tests: persistence, locking, decisions, hook runs."""

import json
import os
import random

import pytest

from gadgetscope.debloat import DebloatConfig
from gadgetscope.errors import SessionError
from gadgetscope.gadgets import ScanParams
from gadgetscope.session import (IterationRecord, SessionRecord,
                                 SessionStore, SCHEMA_VERSION)

from conftest import FIG3_BYTES, FIG4_BYTES, build_elf


@pytest.fixture
def store(tmp_path):
    return SessionStore(tmp_path / "sessions")


@pytest.fixture
def orig_bin(tmp_path):
    p = tmp_path / "orig.bin"
    p.write_bytes(build_elf(code=FIG3_BYTES))
    return p


@pytest.fixture
def variant_bin(tmp_path):
    p = tmp_path / "variant-src.bin"
    p.write_bytes(build_elf(code=FIG4_BYTES))
    return p


class TestCreate:
    def test_create_persists_original_analyses(self, store, orig_bin):
        record = store.create_session("demo", orig_bin)
        assert record.status == "open"
        assert record.iterations == []
        assert record.original_analyses["type_counts"]["total"] == 6
        reloaded = store.load(record.id)
        assert reloaded.to_dict() == record.to_dict()

    def test_unreadable_binary_creates_nothing(self, store, tmp_path):
        with pytest.raises(Exception):
            store.create_session("demo", tmp_path / "nope.bin")
        assert store.list_ids() == []

    def test_ids_unique(self, store, orig_bin):
        a = store.create_session("demo", orig_bin)
        b = store.create_session("demo", orig_bin)
        assert a.id != b.id

    def test_unknown_session(self, store):
        with pytest.raises(SessionError) as ei:
            store.load("nope")
        assert ei.value.code == "unknown-session"


class TestIterations:
    def hooks(self, variant_bin, out):
        return {"debloat": "true", "build": f"cp {variant_bin} {out}"}

    def test_successful_iteration(self, store, orig_bin, variant_bin,
                                  tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "variant.bin"
        it = store.run_iteration(record.id, DebloatConfig(frozenset({"X"}),
                                                          "conservative"),
                                 self.hooks(variant_bin, out), out)
        assert it.status == "done"
        assert it.number == 1
        assert it.analyses["type_counts"]["total"] > 0
        assert it.delta["introduced_counts"]["total"] > 0
        assert it.assessment["verdict"] in ("Positive", "Negative",
                                            "Neutral", "Mixed")

    def test_failed_build_recorded(self, store, orig_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        it = store.run_iteration(
            record.id, DebloatConfig(frozenset()),
            {"build": "echo broken >&2; exit 3"}, tmp_path / "never.bin")
        assert it.status == "failed"
        assert it.analyses is None
        assert any(t["exit_code"] == 3 for t in it.transcript)
        assert any("broken" in t["stderr"] for t in it.transcript)

    def test_missing_output_binary(self, store, orig_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        it = store.run_iteration(record.id, DebloatConfig(frozenset()),
                                 {"build": "true"}, tmp_path / "ghost.bin")
        assert it.status == "failed"

    def test_config_exported_via_env(self, store, orig_bin, variant_bin,
                                     tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        capture = tmp_path / "cfg-copy.json"
        hooks = {"debloat": f'cp "$DEBLOAT_CONFIG_PATH" {capture}',
                 "build": f"cp {variant_bin} {out}"}
        store.run_iteration(record.id,
                            DebloatConfig(frozenset({"RTSP", "TFTP"}),
                                          "conservative"),
                            hooks, out)
        cfg = json.loads(capture.read_text())
        assert sorted(cfg["remove"]) == ["RTSP", "TFTP"]
        assert cfg["scenario"] == "conservative"

    def test_numbers_consecutive(self, store, orig_bin, variant_bin,
                                 tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        for expect in (1, 2, 3):
            it = store.run_iteration(record.id, DebloatConfig(frozenset()),
                                     self.hooks(variant_bin, out), out)
            assert it.number == expect

    def test_short_circuit_on_syscall(self, store, orig_bin, tmp_path):
        # variant whose gadgets include a syscall absent from the original
        variant = tmp_path / "sys.bin"
        variant.write_bytes(build_elf(code=FIG3_BYTES + b"\x0f\x05"))
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        it = store.run_iteration(record.id, DebloatConfig(frozenset()),
                                 {"build": f"cp {variant} {out}"}, out,
                                 short_circuit=("syscall-introduced",))
        assert it.status == "done"
        assert it.short_circuited == "syscall-introduced"
        assert it.delta is None
        assert "syscall" in it.analyses["introduced_syscall"][0]


class TestDecisions:
    def _one_iteration(self, store, orig_bin, variant_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        store.run_iteration(record.id, DebloatConfig(frozenset()),
                            {"build": f"cp {variant_bin} {out}"}, out)
        return record

    def test_accept_closes_session(self, store, orig_bin, variant_bin,
                                   tmp_path):
        record = self._one_iteration(store, orig_bin, variant_bin, tmp_path)
        updated = store.record_decision(record.id, 1, "accept", "ship it")
        assert updated.status == "accepted"
        assert updated.iterations[0].decision == "accept"
        assert updated.iterations[0].rationale == "ship it"

    def test_double_decision_rejected(self, store, orig_bin, variant_bin,
                                      tmp_path):
        record = self._one_iteration(store, orig_bin, variant_bin, tmp_path)
        store.record_decision(record.id, 1, "reject")
        with pytest.raises(SessionError) as ei:
            store.record_decision(record.id, 1, "accept")
        assert ei.value.code == "decision-already-recorded"

    def test_reject_leaves_open(self, store, orig_bin, variant_bin,
                                tmp_path):
        record = self._one_iteration(store, orig_bin, variant_bin, tmp_path)
        updated = store.record_decision(record.id, 1, "reject")
        assert updated.status == "open"

    def test_revert_sets_reverted(self, store, orig_bin, variant_bin,
                                  tmp_path):
        record = self._one_iteration(store, orig_bin, variant_bin, tmp_path)
        updated = store.record_decision(record.id, 1, "revert")
        assert updated.status == "reverted"

    def test_unknown_iteration(self, store, orig_bin):
        record = store.create_session("demo", orig_bin)
        with pytest.raises(SessionError) as ei:
            store.record_decision(record.id, 7, "accept")
        assert ei.value.code == "unknown-iteration"

    def test_closed_session_rejects_new_iterations(self, store, orig_bin,
                                                   variant_bin, tmp_path):
        record = self._one_iteration(store, orig_bin, variant_bin, tmp_path)
        store.record_decision(record.id, 1, "accept")
        with pytest.raises(SessionError) as ei:
            store.run_iteration(record.id, DebloatConfig(frozenset()),
                                {}, tmp_path / "x.bin")
        assert ei.value.code == "session-closed"


class TestCompare:
    def test_two_rows(self, store, orig_bin, variant_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        for _ in range(2):
            store.run_iteration(record.id, DebloatConfig(frozenset()),
                                {"build": f"cp {variant_bin} {out}"}, out)
        table = store.compare_iterations(record.id, 1, 2)
        assert len(table["rows"]) == 2
        assert table["rows"][0]["iteration"] == 1
        assert table["rows"][1]["iteration"] == 2

    def test_same_iteration_twice_identical(self, store, orig_bin,
                                            variant_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        out = tmp_path / "v.bin"
        store.run_iteration(record.id, DebloatConfig(frozenset()),
                            {"build": f"cp {variant_bin} {out}"}, out)
        table = store.compare_iterations(record.id, 1, 1)
        a, b = table["rows"]
        assert {k: v for k, v in a.items()} == {k: v for k, v in b.items()}

    def test_missing_analyses(self, store, orig_bin, tmp_path):
        record = store.create_session("demo", orig_bin)
        store.run_iteration(record.id, DebloatConfig(frozenset()),
                            {"build": "false"}, tmp_path / "x.bin")
        with pytest.raises(SessionError) as ei:
            store.compare_iterations(record.id, 1, 1)
        assert ei.value.code == "missing-analyses"


def random_session(rng):
    iters = []
    for n in range(1, rng.randint(1, 5)):
        iters.append(IterationRecord(
            number=n,
            config={"scenario": "s", "remove": [f"F{rng.randint(0, 9)}"]},
            hooks={"build": "true"},
            status=rng.choice(["done", "failed", "running"]),
            transcript=[{"command": "x", "exit_code": 0,
                         "stdout": "", "stderr": ""}],
            variant_binary=None,
            analyses={"n": rng.randint(0, 100)},
            delta=None,
            assessment={"verdict": rng.choice(["Positive", "Mixed"])},
            decision=rng.choice(["pending", "accept", "reject"]),
            rationale=f"r{rng.random()}",
            short_circuited=None))
    return SessionRecord(
        id=f"{rng.getrandbits(48):012x}", package="pkg",
        original_binary="/x/orig", original_sha256="0" * 64,
        params=ScanParams().to_dict(),
        catalogs=["practical", "turing", "aslr_proof"],
        original_analyses={"type_counts": {"total": rng.randint(0, 500)}},
        iterations=iters,
        status=rng.choice(["open", "accepted", "reverted"]))


class TestPersistence:
    def test_round_trip_randomized(self, store):
        rng = random.Random(42)
        for _ in range(100):
            record = random_session(rng)
            again = SessionRecord.from_dict(record.to_dict())
            assert again.to_dict() == record.to_dict()

    def test_schema_version_written(self, store, orig_bin):
        record = store.create_session("demo", orig_bin)
        raw = json.loads((store.dir / f"{record.id}.json").read_text())
        assert raw["schema_version"] == SCHEMA_VERSION

    def test_crash_during_save_preserves_old_file(self, store, orig_bin,
                                                  monkeypatch):
        record = store.create_session("demo", orig_bin)
        before = (store.dir / f"{record.id}.json").read_text()

        real_replace = os.replace

        def boom(src, dst):
            raise RuntimeError("killed mid-save")

        monkeypatch.setattr(os, "replace", boom)
        record.status = "accepted"
        with pytest.raises(RuntimeError):
            store.save(record)
        monkeypatch.setattr(os, "replace", real_replace)
        after = (store.dir / f"{record.id}.json").read_text()
        assert after == before
        json.loads(after)  # still parseable
        assert not list(store.dir.glob(".tmp-*"))  # temp cleaned up

    def test_lock_excludes_second_writer(self, store, orig_bin):
        record = store.create_session("demo", orig_bin)
        with store.lock(record.id):
            with pytest.raises(SessionError) as ei:
                with store.lock(record.id):
                    pass
        assert ei.value.code == "locked"
