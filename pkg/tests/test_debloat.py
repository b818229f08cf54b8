"""Marker scanning and excision tests, including the randomized-corpus
properties: idempotence, commutativity, byte preservation outside removed
regions, and marker absence after excision."""

import random

import pytest

from gadgetscope.debloat import (DebloatConfig, FeatureMap, excise_features,
                                 excise_text, scan_file, scan_markers)
from gadgetscope.errors import MarkerError, UnknownFeatureError


def write_tree(root, files):
    for rel, text in files.items():
        p = root / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)
    return root


SINGLE = "int a;\n/*~feature:begin NET*/\nint net;\n/*~feature:end NET*/\nint b;\n"


class TestScan:
    def test_single_region(self, tmp_path):
        write_tree(tmp_path, {"a.c": SINGLE})
        fmap = scan_markers(tmp_path)
        assert fmap.features == {"NET"}
        (region,) = fmap.regions["a.c"]
        assert region.feature == "NET"
        assert region.depth == 1
        assert region.begin_line == 2
        assert region.end_line == 4

    def test_unbalanced_begin(self, tmp_path):
        write_tree(tmp_path, {"bad.c": "x\n/*~feature:begin A*/\ny\n"})
        with pytest.raises(MarkerError) as ei:
            scan_markers(tmp_path)
        assert ei.value.code == "unbalanced-marker"
        assert ei.value.path == "bad.c"
        assert ei.value.line == 2

    def test_unbalanced_end(self, tmp_path):
        write_tree(tmp_path, {"bad.c": "/*~feature:end A*/\n"})
        with pytest.raises(MarkerError) as ei:
            scan_markers(tmp_path)
        assert ei.value.code == "unbalanced-marker"
        assert ei.value.line == 1

    def test_duplicate_end(self, tmp_path):
        write_tree(tmp_path, {"bad.c":
                              "/*~feature:begin A*/x/*~feature:end A*/"
                              "/*~feature:end A*/\n"})
        with pytest.raises(MarkerError) as ei:
            scan_markers(tmp_path)
        assert ei.value.code == "duplicate-end"

    def test_crossing_regions(self, tmp_path):
        write_tree(tmp_path, {"bad.c":
                              "/*~feature:begin A*/\n/*~feature:begin B*/\n"
                              "/*~feature:end A*/\n/*~feature:end B*/\n"})
        with pytest.raises(MarkerError) as ei:
            scan_markers(tmp_path)
        assert ei.value.code == "crossing-regions"

    def test_nested_depth(self, tmp_path):
        text = ("/*~feature:begin A*/\n/*~feature:begin B*/\nx\n"
                "/*~feature:end B*/\n/*~feature:end A*/\n")
        write_tree(tmp_path, {"n.c": text})
        fmap = scan_markers(tmp_path)
        by_feature = {r.feature: r for r in fmap.regions["n.c"]}
        assert by_feature["B"].depth == 2
        assert by_feature["A"].depth == 1

    def test_line_comment_form_spans_whole_lines(self):
        text = "a\n  //~feature:begin L\ncode\n  //~feature:end L\nb\n"
        (region,) = scan_file(text, "x.c")
        start, end = region.span
        assert text[:start] == "a\n"
        assert text[end:] == "b\n"

    def test_same_feature_multiple_regions(self):
        text = ("/*~feature:begin A*/1/*~feature:end A*/ mid "
                "/*~feature:begin A*/2/*~feature:end A*/")
        regions = scan_file(text, "x.c")
        assert len(regions) == 2


class TestExcision:
    def test_remove_single_region(self, tmp_path):
        src = write_tree(tmp_path / "in", {"a.c": SINGLE})
        out = tmp_path / "out"
        fmap = scan_markers(src)
        excise_features(src, fmap, DebloatConfig(frozenset({"NET"})), out)
        assert (out / "a.c").read_text() == "int a;\nint b;\n"

    def test_empty_config_identity(self, tmp_path):
        src = write_tree(tmp_path / "in", {"a.c": SINGLE, "b.c": "plain\n"})
        out = tmp_path / "out"
        excise_features(src, scan_markers(src), DebloatConfig(frozenset()),
                        out)
        assert (out / "a.c").read_bytes() == (src / "a.c").read_bytes()
        assert (out / "b.c").read_bytes() == (src / "b.c").read_bytes()

    def test_outer_removal_takes_nested_inner(self, tmp_path):
        text = ("keep\n/*~feature:begin A*/\na-code\n/*~feature:begin B*/\n"
                "b-code\n/*~feature:end B*/\n/*~feature:end A*/\nkeep2\n")
        src = write_tree(tmp_path / "in", {"n.c": text})
        out = tmp_path / "out"
        excise_features(src, scan_markers(src),
                        DebloatConfig(frozenset({"A"})), out)
        result = (out / "n.c").read_text()
        assert "b-code" not in result
        assert "a-code" not in result
        assert "keep" in result and "keep2" in result

    def test_inner_removal_keeps_outer(self, tmp_path):
        text = ("/*~feature:begin A*/\na-code\n/*~feature:begin B*/\n"
                "b-code\n/*~feature:end B*/\na-tail\n/*~feature:end A*/\n")
        src = write_tree(tmp_path / "in", {"n.c": text})
        out = tmp_path / "out"
        excise_features(src, scan_markers(src),
                        DebloatConfig(frozenset({"B"})), out)
        result = (out / "n.c").read_text()
        assert "a-code" in result and "a-tail" in result
        assert "b-code" not in result
        assert "/*~feature:begin A*/" in result
        assert "/*~feature:end A*/" in result

    def test_kept_markers_preserved(self, tmp_path):
        src = write_tree(tmp_path / "in", {"a.c": SINGLE + (
            "/*~feature:begin KEEP*/\nkept\n/*~feature:end KEEP*/\n")})
        out = tmp_path / "out"
        excise_features(src, scan_markers(src),
                        DebloatConfig(frozenset({"NET"})), out)
        result = (out / "a.c").read_text()
        assert "/*~feature:begin KEEP*/" in result

    def test_unknown_feature_strict(self, tmp_path):
        src = write_tree(tmp_path / "in", {"a.c": SINGLE})
        with pytest.raises(UnknownFeatureError):
            excise_features(src, scan_markers(src),
                            DebloatConfig(frozenset({"GHOST"})),
                            tmp_path / "out")

    def test_unknown_feature_lenient(self, tmp_path):
        src = write_tree(tmp_path / "in", {"a.c": SINGLE})
        out = tmp_path / "out"
        excise_features(src, scan_markers(src),
                        DebloatConfig(frozenset({"GHOST"})), out,
                        lenient=True)
        assert (out / "a.c").read_text() == SINGLE

    def test_blank_run_collapse_at_seam(self):
        text = ("code\n\n/*~feature:begin X*/\nstuff\n/*~feature:end X*/\n\n"
                "tail\n")
        regions = scan_file(text, "x.c")
        out = excise_text(text, regions, frozenset({"X"}))
        assert out == "code\n\ntail\n"

    def test_inline_removal_preserves_line(self):
        text = "a /*~feature:begin X*/mid/*~feature:end X*/ b\n"
        regions = scan_file(text, "x.c")
        out = excise_text(text, regions, frozenset({"X"}))
        assert out == "a  b\n"


FEATURES = ["ALPHA", "BETA", "GAMMA", "DELTA"]


def random_marked_file(rng):
    """Generate a file of nested/disjoint marker regions plus filler."""
    lines = []
    stack = []
    closed_at_top = 0
    for _ in range(rng.randint(4, 40)):
        roll = rng.random()
        if roll < 0.25 and len(stack) < 3:
            f = rng.choice(FEATURES)
            lines.append(f"/*~feature:begin {f}*/")
            stack.append(f)
        elif roll < 0.45 and stack:
            f = stack.pop()
            lines.append(f"/*~feature:end {f}*/")
            if not stack:
                closed_at_top += 1
        elif roll < 0.55:
            lines.append("")
        else:
            lines.append(f"line_{rng.randint(0, 999)}();")
    while stack:
        f = stack.pop()
        lines.append(f"/*~feature:end {f}*/")
    return "\n".join(lines) + "\n"


def random_corpus(tmp_path, rng, n_files):
    src = tmp_path / "in"
    files = {f"f{i:03d}.c": random_marked_file(rng) for i in range(n_files)}
    write_tree(src, files)
    return src


class TestCorpusProperties:
    N_FILES = 60

    def run_excise(self, src, out, remove, lenient=False):
        fmap = scan_markers(src)
        excise_features(src, fmap, DebloatConfig(frozenset(remove)), out,
                        lenient=lenient)
        return out

    def test_idempotence(self, tmp_path):
        rng = random.Random(101)
        src = random_corpus(tmp_path, rng, self.N_FILES)
        once = self.run_excise(src, tmp_path / "o1", {"ALPHA", "GAMMA"},
                               lenient=True)
        twice = self.run_excise(once, tmp_path / "o2", {"ALPHA", "GAMMA"},
                                lenient=True)
        for p in sorted(once.rglob("*.c")):
            rel = p.relative_to(once)
            assert (twice / rel).read_bytes() == p.read_bytes(), rel

    def test_commutativity(self, tmp_path):
        rng = random.Random(202)
        src = random_corpus(tmp_path, rng, self.N_FILES)
        a_then_b = self.run_excise(
            self.run_excise(src, tmp_path / "a", {"ALPHA"}, lenient=True),
            tmp_path / "ab", {"BETA"}, lenient=True)
        both = self.run_excise(src, tmp_path / "both", {"ALPHA", "BETA"},
                               lenient=True)
        for p in sorted(both.rglob("*.c")):
            rel = p.relative_to(both)
            assert (a_then_b / rel).read_bytes() == p.read_bytes(), rel

    def test_round_trip_marker_absence(self, tmp_path):
        rng = random.Random(303)
        src = random_corpus(tmp_path, rng, self.N_FILES)
        out = self.run_excise(src, tmp_path / "out", {"BETA"}, lenient=True)
        assert "BETA" not in scan_markers(out).features

    def test_byte_preservation_outside_regions(self, tmp_path):
        rng = random.Random(404)
        src = random_corpus(tmp_path, rng, self.N_FILES)
        remove = frozenset({"DELTA"})
        fmap = scan_markers(src)
        out = tmp_path / "out"
        excise_features(src, fmap, DebloatConfig(remove), out, lenient=True)
        for rel, regions in fmap.regions.items():
            original = (src / rel).read_text()
            result = (out / rel).read_text()
            spans = sorted(r.span for r in regions if r.feature in remove)
            # expected output: original minus spans; the only further
            # difference allowed is blank-line collapse at the seams
            expected = excise_text(original, regions, remove)
            assert result == expected
            # every non-blank line outside removed spans must survive
            kept = []
            pos = 0
            for s, e in spans:
                kept.append(original[pos:s])
                pos = max(pos, e)
            kept.append(original[pos:])
            for chunk in kept:
                for line in chunk.splitlines():
                    if line.strip():
                        assert line in result.splitlines(), line

    def test_unbalanced_inputs_always_error_with_location(self, tmp_path):
        rng = random.Random(505)
        for i in range(40):
            text = random_marked_file(rng)
            # break it: drop the final end marker or inject a stray end
            if "end" in text and rng.random() < 0.5:
                broken = text.replace("/*~feature:end", "/*~x:end", 1)
                if broken == text:
                    continue
            else:
                broken = "/*~feature:end ALPHA*/\n" + text
            src = tmp_path / f"case{i}"
            write_tree(src, {"f.c": broken})
            try:
                scan_markers(src)
            except MarkerError as e:
                assert e.path == "f.c"
                assert isinstance(e.line, int) and e.line >= 1
