"""Published schemas validate real tool output."""

import json
from pathlib import Path

import jsonschema
import pytest

from gadgetscope.delta import AnalysisBundle, assess_impact, compute_delta
from gadgetscope.expressivity import BUILTIN_CATALOGS, load_catalog
from gadgetscope.gadgets import ScanParams, harvest_gadgets
from gadgetscope.elfimage import load_image
from gadgetscope.session import SessionStore
from gadgetscope.debloat import DebloatConfig

from conftest import FIG3_BYTES, FIG4_BYTES, build_elf

SCHEMAS = Path(__file__).resolve().parents[1] / "src/gadgetscope/schemas"


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


@pytest.fixture
def bundles(tmp_path):
    orig = tmp_path / "o.bin"
    orig.write_bytes(build_elf(code=FIG3_BYTES))
    var = tmp_path / "v.bin"
    var.write_bytes(build_elf(code=FIG4_BYTES))
    catalogs = list(BUILTIN_CATALOGS.values())
    a = AnalysisBundle.analyze("O", harvest_gadgets(load_image(orig)),
                               catalogs)
    b = AnalysisBundle.analyze("V", harvest_gadgets(load_image(var)),
                               catalogs)
    return a, b


def test_gadget_set_schema(bundles):
    a, _ = bundles
    jsonschema.validate(a.gadgets.to_dict(), schema("gadget_set.schema.json"))


def test_analysis_schema(bundles):
    a, _ = bundles
    jsonschema.validate(a.to_dict(), schema("analysis.schema.json"))


def test_delta_schema(bundles):
    a, b = bundles
    d = compute_delta(a, b).to_dict()
    d["assessment"] = assess_impact(compute_delta(a, b)).to_dict()
    jsonschema.validate(d, schema("delta.schema.json"))


def test_catalog_schema():
    for cat in BUILTIN_CATALOGS.values():
        jsonschema.validate(cat.to_dict(), schema("catalog.schema.json"))


def test_session_schema(tmp_path):
    orig = tmp_path / "o.bin"
    orig.write_bytes(build_elf(code=FIG3_BYTES))
    var = tmp_path / "vs.bin"
    var.write_bytes(build_elf(code=FIG4_BYTES))
    store = SessionStore(tmp_path / "sessions")
    record = store.create_session("demo", orig)
    out = tmp_path / "v.bin"
    store.run_iteration(record.id, DebloatConfig(frozenset({"X"})),
                        {"build": f"cp {var} {out}"}, out)
    store.record_decision(record.id, 1, "accept")
    doc = store.load(record.id).to_dict()
    jsonschema.validate(doc, schema("session.schema.json"))


def test_builtin_catalog_files_round_trip(tmp_path):
    # a dumped builtin must reload identically through the custom path
    cat = load_catalog("turing")
    p = tmp_path / "turing.json"
    p.write_text(json.dumps(cat.to_dict()))
    again = load_catalog(p)
    assert again.size == cat.size
    assert [c.id for c in again.classes] == [c.id for c in cat.classes]
