"""Marker-driven source debloater.

Feature regions are delimited with comment-embedded directives:

    /*~feature:begin NAME*/ ... /*~feature:end NAME*/
    //~feature:begin NAME   ...   //~feature:end NAME

Block-comment markers bound the region at the marker text itself; the
line-comment form widens the boundary to the whole line.  Names match
[A-Za-z0-9_.-]+ and regions of different features must nest cleanly or
stay disjoint.  Excision deletes selected regions inclusive of their
markers (anything nested inside goes too, whatever feature it belongs
to), leaves every other byte alone, and collapses a run of two or more
blank lines created at a removal seam into one.  Markers of kept
features stay in the output so later passes can still find them.

The tool never parses the host language; whether the excised tree still
compiles is the build step's concern.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MarkerError, UnknownFeatureError

_MARKER = re.compile(
    r"/\*~feature:(?P<kind_b>begin|end)\s+(?P<name_b>[A-Za-z0-9_.-]+)\s*\*/"
    r"|//~feature:(?P<kind_l>begin|end)\s+(?P<name_l>[A-Za-z0-9_.-]+)")


@dataclass(frozen=True)
class MarkerRegion:
    feature: str
    begin_line: int
    begin_col: int
    end_line: int
    end_col: int
    depth: int
    span: tuple[int, int]       # byte offsets in the file, end exclusive

    def to_dict(self):
        return {"feature": self.feature, "depth": self.depth,
                "begin": [self.begin_line, self.begin_col],
                "end": [self.end_line, self.end_col]}


@dataclass
class FeatureMap:
    regions: dict = field(default_factory=dict)  # relpath -> [MarkerRegion]

    @property
    def features(self) -> set[str]:
        return {r.feature for regs in self.regions.values() for r in regs}

    def to_dict(self):
        return {p: [r.to_dict() for r in regs]
                for p, regs in sorted(self.regions.items())}


@dataclass(frozen=True)
class DebloatConfig:
    features_to_remove: frozenset[str]
    scenario: str = ""

    def __post_init__(self):
        if any(not f for f in self.features_to_remove):
            raise ValueError("empty feature name")

    @classmethod
    def from_file(cls, path) -> "DebloatConfig":
        d = json.loads(Path(path).read_text())
        return cls(features_to_remove=frozenset(d["remove"]),
                   scenario=d.get("scenario", ""))

    def to_dict(self):
        return {"scenario": self.scenario,
                "remove": sorted(self.features_to_remove)}


def _line_col(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    last_nl = text.rfind("\n", 0, offset)
    return line, offset - last_nl


def _line_start(text: str, offset: int) -> int:
    return text.rfind("\n", 0, offset) + 1


def _line_end(text: str, offset: int) -> int:
    nl = text.find("\n", offset)
    return len(text) if nl < 0 else nl + 1


def scan_file(text: str, relpath: str) -> list[MarkerRegion]:
    """All marker regions of one file, validated for balance and nesting."""
    regions = []
    stack = []   # (feature, match, line)
    closed = set()
    for m in _MARKER.finditer(text):
        kind = m.group("kind_b") or m.group("kind_l")
        name = m.group("name_b") or m.group("name_l")
        is_line_form = m.group("kind_l") is not None
        line, col = _line_col(text, m.start())
        if kind == "begin":
            stack.append((name, m, line, col, is_line_form))
            continue
        if not stack or stack[-1][0] != name:
            open_names = [s[0] for s in stack]
            if name in open_names:
                raise MarkerError(
                    f"{relpath}:{line}: end of {name!r} crosses the open "
                    f"region of {open_names[-1]!r}", "crossing-regions",
                    path=relpath, line=line)
            if name in closed:
                raise MarkerError(
                    f"{relpath}:{line}: duplicate end marker for {name!r}",
                    "duplicate-end", path=relpath, line=line)
            raise MarkerError(
                f"{relpath}:{line}: end marker for {name!r} without a "
                "matching begin", "unbalanced-marker",
                path=relpath, line=line)
        bname, bm, bline, bcol, bline_form = stack.pop()
        closed.add(name)
        # a block marker alone on its line claims the whole line, like the
        # line-comment form always does
        bls = _line_start(text, bm.start())
        start = bm.start()
        if bline_form or not text[bls:bm.start()].strip():
            start = bls
        ele = _line_end(text, m.end())
        end = m.end()
        if is_line_form or not text[m.end():ele].strip():
            end = ele
        eline, ecol = _line_col(text, m.end() - 1)
        regions.append(MarkerRegion(
            feature=name, begin_line=bline, begin_col=bcol,
            end_line=eline, end_col=ecol, depth=len(stack) + 1,
            span=(start, end)))
    if stack:
        name, bm, line, col, _ = stack[0]
        raise MarkerError(
            f"{relpath}:{line}: begin marker for {name!r} without a "
            "matching end", "unbalanced-marker", path=relpath, line=line)
    regions.sort(key=lambda r: r.span)
    return regions


def _tree_files(root: Path):
    for p in sorted(root.rglob("*")):
        if p.is_file():
            yield p


def scan_markers(tree) -> FeatureMap:
    """Scan a source tree for feature markers."""
    root = Path(tree)
    fmap = FeatureMap()
    for p in _tree_files(root):
        text = p.read_bytes().decode("latin-1")
        regs = scan_file(text, str(p.relative_to(root)))
        if regs:
            fmap.regions[str(p.relative_to(root))] = regs
    return fmap


def _collapse_blank_runs(text: str, seams: list[int]) -> str:
    """Collapse >=2 consecutive blank lines around each seam into one."""
    if not seams:
        return text
    lines = text.splitlines(keepends=True)
    starts = []
    pos = 0
    for ln in lines:
        starts.append(pos)
        pos += len(ln)
    starts.append(pos)

    def line_of(offset):
        lo, hi = 0, len(lines) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def blank(i):
        return 0 <= i < len(lines) and lines[i].strip() == ""

    drop = set()
    for seam in sorted(seams, reverse=True):
        if not lines:
            continue
        i = line_of(min(seam, max(0, pos - 1)))
        lo = i if blank(i) else i + 1
        while blank(lo - 1):
            lo -= 1
        hi = lo
        while blank(hi):
            hi += 1
        if hi - lo >= 2:
            for k in range(lo, hi - 1):
                drop.add(k)
            # normalize the survivor to a bare newline
            if lines[hi - 1].strip() == "" and lines[hi - 1] != "\n":
                lines[hi - 1] = "\n" if lines[hi - 1].endswith("\n") else ""
    if not drop:
        return text
    return "".join(ln for k, ln in enumerate(lines) if k not in drop)


def excise_text(text: str, regions: list[MarkerRegion],
                remove: frozenset[str]) -> str:
    """Remove all regions of the selected features from one file's text."""
    spans = [r.span for r in regions if r.feature in remove]
    if not spans:
        return text
    spans.sort()
    merged = []
    for s, e in spans:
        if merged and s < merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    out = []
    pos = 0
    seams = []
    removed = 0
    for s, e in merged:
        out.append(text[pos:s])
        seams.append(s - removed)
        removed += e - s
        pos = e
    out.append(text[pos:])
    return _collapse_blank_runs("".join(out), seams)


def excise_features(tree, fmap: FeatureMap, config: DebloatConfig,
                    out_dir, lenient: bool = False) -> Path:
    """Excise the configured features from a tree into out_dir."""
    root = Path(tree)
    out_root = Path(out_dir)
    unknown = config.features_to_remove - fmap.features
    if unknown and not lenient:
        raise UnknownFeatureError(unknown)
    remove = config.features_to_remove
    out_root.mkdir(parents=True, exist_ok=True)
    for p in _tree_files(root):
        rel = str(p.relative_to(root))
        dest = out_root / rel
        dest.parent.mkdir(parents=True, exist_ok=True)
        raw = p.read_bytes()
        regs = fmap.regions.get(rel)
        if regs:
            text = excise_text(raw.decode("latin-1"), regs, remove)
            dest.write_bytes(text.encode("latin-1"))
        else:
            dest.write_bytes(raw)
    return out_root
