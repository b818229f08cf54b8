"""CLI behavior through the real entry point."""

import json

import pytest

from gadgetscope.cli import main

from conftest import FIG3_BYTES, FIG4_BYTES, build_elf


@pytest.fixture
def fig3_elf(tmp_path):
    p = tmp_path / "orig.bin"
    p.write_bytes(build_elf(code=FIG3_BYTES))
    return p


@pytest.fixture
def fig4_elf(tmp_path):
    p = tmp_path / "variant.bin"
    p.write_bytes(build_elf(code=FIG4_BYTES))
    return p


class TestScan:
    def test_scan_text(self, fig3_elf, capsys):
        assert main(["scan", str(fig3_elf)]) == 0
        out = capsys.readouterr().out
        assert "ROP" in out
        assert "6" in out

    def test_scan_reports_six_unique_rop(self, fig3_elf, capsys):
        assert main(["scan", str(fig3_elf), "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["type_counts"]["rop"] == 6
        assert doc["type_counts"]["total"] == 6

    def test_scan_gadget_dump(self, fig3_elf, tmp_path, capsys):
        dump = tmp_path / "gadgets.json"
        assert main(["scan", str(fig3_elf), "--gadgets", str(dump)]) == 0
        doc = json.loads(dump.read_text())
        assert len(doc["gadgets"]) == 6

    def test_scan_csv_needs_out(self, fig3_elf, capsys):
        with pytest.raises(SystemExit):
            main(["scan", str(fig3_elf), "--format", "csv"])

    def test_scan_csv_one_table_per_file(self, fig3_elf, tmp_path, capsys):
        out = tmp_path / "csv"
        assert main(["scan", str(fig3_elf), "--format", "csv",
                     "--out", str(out)]) == 0
        assert (out / "type_counts.csv").is_file()
        assert (out / "special_purpose.csv").is_file()
        assert (out / "expressivity.csv").is_file()

    def test_analysis_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.bin"
        bad.write_bytes(b"\x00\x01\x02\x03" + b"z" * 80)
        assert main(["scan", str(bad)]) == 1
        assert "error" in capsys.readouterr().err

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as ei:
            main(["mystery-subcommand"])
        assert ei.value.code == 2


class TestDiff:
    def test_subset_variant_zero_introduction(self, fig3_elf, tmp_path,
                                              capsys):
        sub = tmp_path / "subset.bin"
        sub.write_bytes(build_elf(code=FIG3_BYTES[4:]))  # pop;pop;ret suffix
        assert main(["diff", str(fig3_elf), str(sub),
                     "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["introduced_counts"]["total"] == 0
        assert doc["introduction_rates"]["total"] == 0.0

    def test_diff_text_renders_row(self, fig3_elf, fig4_elf, capsys):
        assert main(["diff", str(fig3_elf), str(fig4_elf), "--ascii"]) == 0
        out = capsys.readouterr().out
        assert "Overall Impact Assessment" in out

    def test_diff_json_cross_format_consistency(self, fig3_elf, fig4_elf,
                                                capsys):
        assert main(["diff", str(fig3_elf), str(fig4_elf),
                     "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["counts_before"]["total"] == 6
        assert set(doc["table5_row"]) >= {"reduction_rate", "verdict"}


class TestDebloatCli:
    def test_end_to_end(self, tmp_path, capsys):
        src = tmp_path / "src"
        src.mkdir()
        (src / "m.c").write_text(
            "int keep;\n/*~feature:begin NET*/\nint net;\n"
            "/*~feature:end NET*/\n")
        out = tmp_path / "out"
        assert main(["debloat", "--features", "NET", "--in", str(src),
                     "--out", str(out)]) == 0
        assert (out / "m.c").read_text() == "int keep;\n"

    def test_markers_listing(self, tmp_path, capsys):
        src = tmp_path / "src"
        src.mkdir()
        (src / "m.c").write_text(
            "/*~feature:begin A*/\nx\n/*~feature:end A*/\n")
        assert main(["markers", "--in", str(src)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["m.c"][0]["feature"] == "A"


class TestDeps:
    def test_merged_analysis(self, tmp_path, capsys):
        dep_dir = tmp_path / "libs"
        dep_dir.mkdir()
        (dep_dir / "libdep.so").write_bytes(build_elf(code=FIG4_BYTES))
        prog = tmp_path / "prog.bin"
        prog.write_bytes(build_elf(code=FIG3_BYTES, needed=("libdep.so",)))
        assert main(["deps", str(prog), "--resolve", str(dep_dir),
                     "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["scope"] == "merged-with-dependencies"
        assert doc["type_counts"]["total"] > 6
        assert doc["missing"] == []

    def test_missing_dep_warns(self, tmp_path, capsys):
        dep_dir = tmp_path / "libs"
        dep_dir.mkdir()
        prog = tmp_path / "prog.bin"
        prog.write_bytes(build_elf(code=FIG3_BYTES, needed=("ghost.so",)))
        assert main(["deps", str(prog), "--resolve", str(dep_dir),
                     "--format", "json"]) == 0
        err = capsys.readouterr().err
        assert "ghost.so" in err


class TestSessionCli:
    def test_create_run_decide_compare(self, tmp_path, capsys):
        orig = tmp_path / "orig.bin"
        orig.write_bytes(build_elf(code=FIG3_BYTES))
        variant_src = tmp_path / "variant-src.bin"
        variant_src.write_bytes(build_elf(code=FIG4_BYTES))
        sessions = tmp_path / "sessions"
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"scenario": "conservative",
                                   "remove": ["NET"]}))
        out_bin = tmp_path / "variant.bin"

        assert main(["session", "--sessions-dir", str(sessions), "create",
                     "--package", "demo", "--binary", str(orig)]) == 0
        sid = capsys.readouterr().out.strip()

        for _ in range(2):
            assert main(["session", "--sessions-dir", str(sessions), "run",
                         sid, "--config", str(cfg),
                         "--build-cmd", f"cp {variant_src} {out_bin}",
                         "--output", str(out_bin)]) == 0
        capsys.readouterr()

        assert main(["session", "--sessions-dir", str(sessions), "compare",
                     sid, "1", "2", "--ascii"]) == 0
        out = capsys.readouterr().out
        assert "Iteration" in out

        assert main(["session", "--sessions-dir", str(sessions), "decide",
                     sid, "2", "accept", "--rationale", "better"]) == 0
        assert main(["session", "--sessions-dir", str(sessions),
                     "list"]) == 0
        out = capsys.readouterr().out
        assert "accepted" in out
