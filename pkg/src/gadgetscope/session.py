"""Iterative review sessions: debloat, build, analyze, decide.

A session captures one package's original binary and any number of
debloat-build-analyze iterations against it.  External debloat/build
steps run as configured shell commands with the iteration's feature
config exported via DEBLOAT_CONFIG_PATH; the tool never embeds
package-specific build logic.  Every mutation is persisted atomically
(write-temp-then-rename) under an exclusive per-session file lock, so a
killed process never leaves a torn session file and concurrent readers
always see a complete document.

The rule-based verdict stored with each iteration is advisory; the
recorded human decision is authoritative.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
import subprocess
import tempfile
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from .debloat import DebloatConfig
from .delta import AnalysisBundle, ImpactAssessment, assess_impact, \
    compute_delta
from .elfimage import load_image
from .errors import SessionError
from .expressivity import BUILTIN_CATALOGS, load_catalog
from .gadgets import ScanParams, harvest_gadgets
from .classify import identities_by_type, SYSCALL_TERMINATED

SCHEMA_VERSION = 1

DECISIONS = ("accept", "reject", "iterate", "revert")

# conditions the analysis stage may short-circuit on
SHORT_CIRCUIT_CONDITIONS = ("syscall-introduced",)


@dataclass
class IterationRecord:
    number: int
    config: dict
    hooks: dict
    status: str = "running"            # running | done | failed
    transcript: list = field(default_factory=list)
    variant_binary: str | None = None
    analyses: dict | None = None       # AnalysisBundle.to_dict()
    delta: dict | None = None          # VariantDelta.to_dict()
    assessment: dict | None = None     # ImpactAssessment.to_dict()
    decision: str = "pending"
    rationale: str = ""
    short_circuited: str | None = None

    def to_dict(self):
        return {
            "number": self.number, "config": self.config,
            "hooks": self.hooks, "status": self.status,
            "transcript": self.transcript,
            "variant_binary": self.variant_binary,
            "analyses": self.analyses, "delta": self.delta,
            "assessment": self.assessment, "decision": self.decision,
            "rationale": self.rationale,
            "short_circuited": self.short_circuited,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class SessionRecord:
    id: str
    package: str
    original_binary: str
    original_sha256: str
    params: dict
    catalogs: list
    original_analyses: dict
    iterations: list = field(default_factory=list)   # [IterationRecord]
    status: str = "open"               # open | accepted | reverted

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "id": self.id, "package": self.package,
            "original_binary": self.original_binary,
            "original_sha256": self.original_sha256,
            "params": self.params, "catalogs": self.catalogs,
            "original_analyses": self.original_analyses,
            "iterations": [i.to_dict() for i in self.iterations],
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, d):
        if d.get("schema_version") != SCHEMA_VERSION:
            raise SessionError(
                f"unsupported session schema {d.get('schema_version')}",
                "unknown-session")
        return cls(
            id=d["id"], package=d["package"],
            original_binary=d["original_binary"],
            original_sha256=d["original_sha256"],
            params=d["params"], catalogs=d["catalogs"],
            original_analyses=d["original_analyses"],
            iterations=[IterationRecord.from_dict(i)
                        for i in d["iterations"]],
            status=d["status"])

    def iteration(self, number: int) -> IterationRecord:
        for it in self.iterations:
            if it.number == number:
                return it
        raise SessionError(f"iteration {number} does not exist",
                           "unknown-iteration")


def _sha256(path) -> str:
    h = hashlib.sha256()
    h.update(Path(path).read_bytes())
    return h.hexdigest()


def _tail(text: str, n=4000) -> str:
    return text[-n:]


class SessionStore:
    """Directory of session JSON files with atomic, locked mutation."""

    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, session_id) -> Path:
        return self.dir / f"{session_id}.json"

    def _lock_path(self, session_id) -> Path:
        return self.dir / f"{session_id}.lock"

    def list_ids(self):
        return sorted(p.stem for p in self.dir.glob("*.json"))

    def load(self, session_id) -> SessionRecord:
        p = self._path(session_id)
        if not p.is_file():
            raise SessionError(f"no session {session_id!r}",
                               "unknown-session")
        return SessionRecord.from_dict(json.loads(p.read_text()))

    def save(self, record: SessionRecord):
        p = self._path(record.id)
        fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-",
                                   suffix=".json")
        try:
            with os.fdopen(fd, "w") as f:
                json.dump(record.to_dict(), f, indent=2)
                f.write("\n")
                f.flush()
                os.fsync(f.fileno())
            os.replace(tmp, p)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    class _Lock:
        def __init__(self, path):
            self.path = path
            self.fd = None

        def __enter__(self):
            self.fd = os.open(self.path, os.O_CREAT | os.O_RDWR)
            try:
                fcntl.flock(self.fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
            except BlockingIOError:
                os.close(self.fd)
                raise SessionError("session is locked by another writer",
                                   "locked") from None
            return self

        def __exit__(self, *exc):
            fcntl.flock(self.fd, fcntl.LOCK_UN)
            os.close(self.fd)

    def lock(self, session_id):
        return self._Lock(self._lock_path(session_id))

    # --- operations -----------------------------------------------------

    def create_session(self, package: str, original_binary,
                       params: ScanParams = None,
                       catalog_names=("practical", "turing", "aslr_proof"),
                       strict=True) -> SessionRecord:
        params = params or ScanParams()
        catalogs = [load_catalog(n) for n in catalog_names]
        image = load_image(original_binary)
        gadgets = harvest_gadgets(image, params)
        bundle = AnalysisBundle.analyze("original", gadgets, catalogs,
                                        strict=strict)
        record = SessionRecord(
            id=uuid.uuid4().hex[:12],
            package=package,
            original_binary=str(original_binary),
            original_sha256=_sha256(original_binary),
            params=params.to_dict(),
            catalogs=list(catalog_names),
            original_analyses=bundle.to_dict(),
        )
        with self.lock(record.id):
            self.save(record)
        return record

    def _original_bundle(self, record: SessionRecord) -> AnalysisBundle:
        if _sha256(record.original_binary) != record.original_sha256:
            raise SessionError(
                f"original binary {record.original_binary} changed on disk",
                "unknown-session")
        params = ScanParams.from_dict(record.params)
        catalogs = [load_catalog(n) for n in record.catalogs]
        image = load_image(record.original_binary)
        gadgets = harvest_gadgets(image, params)
        return AnalysisBundle.analyze("original", gadgets, catalogs)

    def begin_iteration(self, session_id, config: DebloatConfig,
                        hooks: dict) -> IterationRecord:
        """Append a new running iteration and persist it."""
        with self.lock(session_id):
            record = self.load(session_id)
            if record.status != "open":
                raise SessionError(f"session is {record.status}",
                                   "session-closed")
            number = len(record.iterations) + 1
            it = IterationRecord(number=number,
                                 config=config.to_dict(),
                                 hooks=dict(hooks))
            record.iterations.append(it)
            self.save(record)
        return it

    def execute_iteration(self, session_id, it: IterationRecord,
                          config: DebloatConfig, hooks: dict, output_binary,
                          workdir=None, short_circuit=()) -> IterationRecord:
        """Run the hooks and analyses for a begun iteration; persist."""
        record = self.load(session_id)
        try:
            self._execute_iteration(record, it, config, hooks,
                                    output_binary, workdir, short_circuit)
        except Exception as e:
            it.status = "failed"
            it.transcript.append({"command": "<analysis>", "exit_code": -1,
                                  "stdout": "", "stderr": str(e)})
        with self.lock(session_id):
            latest = self.load(session_id)
            latest.iterations[it.number - 1] = it
            self.save(latest)
        return it

    def run_iteration(self, session_id, config: DebloatConfig, hooks: dict,
                      output_binary, workdir=None,
                      short_circuit=()) -> IterationRecord:
        """Execute debloat+build hooks, then analyze the produced binary."""
        it = self.begin_iteration(session_id, config, hooks)
        return self.execute_iteration(session_id, it, config, hooks,
                                      output_binary, workdir, short_circuit)

    def _execute_iteration(self, record, it, config, hooks, output_binary,
                           workdir, short_circuit):
        for cond in short_circuit:
            if cond not in SHORT_CIRCUIT_CONDITIONS:
                raise SessionError(f"unknown short-circuit condition {cond!r}",
                                   "unknown-iteration")
        cfg_file = Path(tempfile.mkstemp(suffix=".json",
                                         prefix="debloat-cfg-")[1])
        cfg_file.write_text(json.dumps(config.to_dict(), indent=2) + "\n")
        env = dict(os.environ, DEBLOAT_CONFIG_PATH=str(cfg_file))
        try:
            for step in ("debloat", "build"):
                cmd = hooks.get(step)
                if not cmd:
                    continue
                proc = subprocess.run(cmd, shell=True, cwd=workdir, env=env,
                                      capture_output=True, text=True)
                it.transcript.append({
                    "command": cmd, "exit_code": proc.returncode,
                    "stdout": _tail(proc.stdout), "stderr": _tail(proc.stderr),
                })
                if proc.returncode != 0:
                    it.status = "failed"
                    return
        finally:
            try:
                cfg_file.unlink()
            except OSError:
                pass

        out = Path(output_binary)
        if not out.is_file():
            it.status = "failed"
            it.transcript.append({"command": "<check output>",
                                  "exit_code": -1, "stdout": "",
                                  "stderr": f"missing output binary {out}"})
            return
        it.variant_binary = str(out)

        params = ScanParams.from_dict(record.params)
        catalogs = [load_catalog(n) for n in record.catalogs]
        image = load_image(out)
        gadgets = harvest_gadgets(image, params)

        original = self._original_bundle(record)
        if "syscall-introduced" in short_circuit:
            orig_ids = original.gadgets.identities
            new_sys = [i for i in identities_by_type(gadgets)
                       [SYSCALL_TERMINATED] if i not in orig_ids]
            if new_sys:
                it.short_circuited = "syscall-introduced"
                it.status = "done"
                it.analyses = {"label": f"iteration-{it.number}",
                               "source": gadgets.source,
                               "introduced_syscall": sorted(new_sys)}
                return

        bundle = AnalysisBundle.analyze(f"iteration-{it.number}", gadgets,
                                        catalogs)
        delta = compute_delta(original, bundle)
        it.analyses = bundle.to_dict()
        it.delta = delta.to_dict()
        it.assessment = assess_impact(delta).to_dict()
        it.status = "done"

    def record_decision(self, session_id, number: int, decision: str,
                        rationale: str = "") -> SessionRecord:
        if decision not in DECISIONS:
            raise SessionError(f"unknown decision {decision!r}",
                               "unknown-iteration")
        with self.lock(session_id):
            record = self.load(session_id)
            it = record.iteration(number)
            if it.decision != "pending":
                raise SessionError(
                    f"iteration {number} already decided ({it.decision})",
                    "decision-already-recorded")
            it.decision = decision
            it.rationale = rationale
            if decision == "accept":
                record.status = "accepted"
            elif decision == "revert":
                record.status = "reverted"
            self.save(record)
        return record

    def compare_iterations(self, session_id, a: int, b: int) -> dict:
        record = self.load(session_id)
        rows = []
        for n in (a, b):
            it = record.iteration(n)
            if it.delta is None:
                raise SessionError(
                    f"iteration {n} has no analyses "
                    f"(status {it.status})", "missing-analyses")
            row = dict(it.delta["table5_row"])
            row["iteration"] = n
            row["verdict"] = it.assessment["verdict"]
            rows.append(row)
        return {"session": session_id, "rows": rows}
