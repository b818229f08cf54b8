"""Render analyses and deltas as text tables, JSON documents, or CSV.

Output is byte-stable: fixed column widths computed from content, no
locale-dependent formatting, half-up rounding to one decimal for
displayed percentages (JSON keeps full precision).  Arrows render as
UTF-8 by default with an ASCII fallback.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP

TARGETS = ("type_counts", "introduction", "special_purpose", "expressivity",
           "delta_summary", "iteration_comparison")
FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RenderedReport:
    format: str
    body: bytes

    @property
    def text(self) -> str:
        return self.body.decode("utf-8")


def pct(fraction: float) -> str:
    """Percentage with one decimal, half-up."""
    q = (Decimal(str(fraction)) * 100).quantize(Decimal("0.1"),
                                                rounding=ROUND_HALF_UP)
    return f"{q}%"


def of(count: int, size: int) -> str:
    return f"{count} of {size}"


def _table(headers, rows) -> str:
    cols = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cols) for i in range(len(headers))]
    out = []

    def fmt(row):
        return "  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip()

    out.append(fmt(headers))
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append(fmt(r))
    return "\n".join(out) + "\n"


def _csv(headers, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _json_doc(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _rows_type_counts(data):
    headers = ["Set", "ROP", "JOP", "COP", "Syscall", "Total"]
    rows = []
    for label, tc in data:
        rows.append([label, tc["rop"], tc["jop"], tc["cop"],
                     tc["syscall"], tc["total"]])
    return headers, rows


def _rows_introduction(delta):
    headers = ["Type", "Introduced", "Intro Rate"]
    rows = []
    order = ["total", "ROP", "JOP", "COP", "SYSCALL"]
    for t in order:
        if t not in delta["introduction_rates"]:
            continue
        rows.append([t.title() if t == "total" else t,
                     delta["introduced_counts"][t],
                     pct(delta["introduction_rates"][t])])
    return headers, rows


def _rows_special(report):
    headers = ["Category", "Count"]
    rows = [[cat, sub["count"]]
            for cat, sub in report["categories"].items()]
    return headers, rows


def _rows_expressivity(entries):
    headers = ["Catalog", "Satisfied", "Classes"]
    rows = []
    for e in entries:
        rows.append([e["catalog"], of(e["count"], e["size"]),
                     " ".join(e["satisfied"])])
    return headers, rows


_T5_HEADERS = ["Variant", "Gadget Count Reduction Rate", "Gadget Intro Rate",
               "Gadget Type Availability Impact",
               "Special Purpose Gadget Availability Impact",
               "Partial Expressivity Impact", "Overall Impact Assessment"]


def _rows_delta_summary(row):
    return _T5_HEADERS, [[row["variant"], row["reduction_rate"],
                          row["introduction_rate"], row["type_availability"],
                          row["special_purpose"], row["expressivity"],
                          row["verdict"]]]


def _rows_comparison(cmp_table):
    headers = ["Iteration"] + _T5_HEADERS[1:]
    rows = []
    for r in cmp_table["rows"]:
        rows.append([r["iteration"], r["reduction_rate"],
                     r["introduction_rate"], r["type_availability"],
                     r["special_purpose"], r["expressivity"], r["verdict"]])
    return headers, rows


def _ascii_swap(headers, rows):
    def swap(v):
        return (str(v).replace("↓", "-").replace("↑", "+"))
    return ([swap(h) for h in headers],
            [[swap(c) for c in r] for r in rows])


def render(target: str, data, format: str = "text",
           ascii_arrows: bool = False) -> RenderedReport:
    """Deterministic rendering of one analysis object."""
    if target not in TARGETS:
        raise ValueError(f"unknown report target {target!r}")
    if format not in FORMATS:
        raise ValueError(f"format {format!r} unsupported for {target!r}")
    if format == "json":
        return RenderedReport("json", _json_doc(data).encode("utf-8"))
    headers, rows = {
        "type_counts": _rows_type_counts,
        "introduction": _rows_introduction,
        "special_purpose": _rows_special,
        "expressivity": _rows_expressivity,
        "delta_summary": _rows_delta_summary,
        "iteration_comparison": _rows_comparison,
    }[target](data)
    if ascii_arrows:
        headers, rows = _ascii_swap(headers, rows)
    body = _table(headers, rows) if format == "text" else _csv(headers, rows)
    return RenderedReport(format, body.encode("utf-8"))
