"""Renderer tests: stability, rounding, formats."""

import csv
import io
import json

import pytest

from gadgetscope.report import of, pct, render


DELTA_ROW = {
    "variant": "M",
    "reduction_rate": "13.6%",
    "introduction_rate": "39.2%",
    "type_availability": "ROP, COP ↓ JOP ↑",
    "special_purpose": "JOP Load Data Increased",
    "expressivity": "ASLR, Turing ↓",
    "verdict": "Mixed",
}


class TestRounding:
    @pytest.mark.parametrize("fraction,expect", [
        (0.16488, "16.5%"),       # rounds up
        (0.13587, "13.6%"),
        (0.0245, "2.5%"),         # exact half rounds away from zero
        (0.404, "40.4%"),
        (0.0, "0.0%"),
        (-0.0061, "-0.6%"),
        (1.0, "100.0%"),
    ])
    def test_pct_half_up(self, fraction, expect):
        assert pct(fraction) == expect

    def test_of_format(self):
        assert of(9, 11) == "9 of 11"
        assert of(25, 35) == "25 of 35"
        assert of(10, 17) == "10 of 17"


class TestFormats:
    def test_text_table_stable(self):
        a = render("delta_summary", DELTA_ROW, "text").text
        b = render("delta_summary", DELTA_ROW, "text").text
        assert a == b
        assert "Mixed" in a
        lines = a.splitlines()
        assert len(lines) == 3  # header, rule, one row

    def test_ascii_fallback(self):
        out = render("delta_summary", DELTA_ROW, "text",
                     ascii_arrows=True).text
        assert "↓" not in out and "↑" not in out
        assert "ROP, COP -" in out

    def test_json_round_trip(self):
        body = render("delta_summary", DELTA_ROW, "json").text
        assert json.loads(body) == DELTA_ROW

    def test_csv_quoting(self):
        row = dict(DELTA_ROW, special_purpose='has,comma "and quotes"')
        out = render("delta_summary", row, "csv").text
        parsed = list(csv.reader(io.StringIO(out)))
        assert parsed[1][4] == 'has,comma "and quotes"'

    def test_unknown_target(self):
        with pytest.raises(ValueError):
            render("nope", {}, "text")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render("delta_summary", DELTA_ROW, "yaml")

    def test_expressivity_cells(self):
        entries = [{"catalog": "practical", "size": 11, "count": 9,
                    "satisfied": ["a"], "strict": True},
                   {"catalog": "aslr_proof", "size": 35, "count": 25,
                    "satisfied": [], "strict": True},
                   {"catalog": "turing", "size": 17, "count": 10,
                    "satisfied": [], "strict": True}]
        out = render("expressivity", entries, "text").text
        assert "9 of 11" in out
        assert "25 of 35" in out
        assert "10 of 17" in out

    def test_comparison_two_rows(self):
        table = {"session": "s", "rows": [
            dict(DELTA_ROW, iteration=1, verdict="Negative"),
            dict(DELTA_ROW, iteration=2, verdict="Positive"),
        ]}
        out = render("iteration_comparison", table, "text").text
        assert "Negative" in out and "Positive" in out
