"""Comparison arithmetic and verdict-rule tests."""

import pytest

from gadgetscope.classify import SP_CATEGORIES
from gadgetscope.delta import (AnalysisBundle, assess_from_changes,
                               assess_impact, compute_delta, merge_sets)
from gadgetscope.errors import ParamsMismatchError
from gadgetscope.expressivity import BUILTIN_CATALOGS, load_catalog
from gadgetscope.gadgets import Gadget, GadgetSet, ScanParams

CATALOGS = list(BUILTIN_CATALOGS.values())


def synthetic_set(n, start=0, source="t", params=None):
    """n unique ROP gadgets with distinct identities."""
    gs = GadgetSet(source=source, params=params or ScanParams())
    for i in range(start, start + n):
        gs.add(Gadget(address=0x1000 + i,
                      instructions=(f"mov rax, {hex(i)}", "ret"),
                      terminator="ret"))
    return gs


def bundle(gs, label="x"):
    return AnalysisBundle.analyze(label, gs, CATALOGS)


def counts_delta(total_before, total_after, introduced):
    """Delta between synthetic sets with the given totals and overlap."""
    kept = total_after - introduced
    original = synthetic_set(total_before, start=0, source="orig")
    variant = GadgetSet(source="var", params=ScanParams())
    for i in range(kept):
        variant.add(Gadget(address=0x1000 + i,
                           instructions=(f"mov rax, {hex(i)}", "ret"),
                           terminator="ret"))
    for i in range(introduced):
        j = total_before + i
        variant.add(Gadget(address=0x1000 + j,
                           instructions=(f"mov rax, {hex(j)}", "ret"),
                           terminator="ret"))
    return compute_delta(bundle(original, "O"), bundle(variant, "V"))


class TestRates:
    def test_identical_sets(self):
        gs = synthetic_set(25)
        d = compute_delta(bundle(gs, "O"), bundle(gs, "V"))
        assert d.reduction_rate == 0.0
        assert d.introduced["total"] == []
        assert all(v == 0.0 for v in d.introduction_rates.values())

    def test_disjoint_sets(self):
        d = counts_delta(10, 8, 8)
        assert d.reduction_rate == pytest.approx(0.20)
        assert d.introduction_rates["total"] == pytest.approx(1.0)

    def test_rate_can_be_negative(self):
        d = counts_delta(100, 120, 40)
        assert d.reduction_rate == pytest.approx(-0.20)

    def test_introduced_disjoint_from_original(self):
        d = counts_delta(30, 25, 10)
        original_idents = {f"mov rax, {hex(i)} ; ret" for i in range(30)}
        assert not (set(d.introduced["total"]) & original_idents)

    def test_per_type_sums_to_total(self):
        d = counts_delta(40, 35, 12)
        per_type = sum(len(d.introduced[t])
                       for t in ("ROP", "JOP", "COP", "SYSCALL"))
        assert per_type == len(d.introduced["total"])

    def test_antisymmetry(self):
        a = synthetic_set(12, start=0, source="a")
        b = synthetic_set(12, start=6, source="b")
        ab = compute_delta(bundle(a, "A"), bundle(b, "B"))
        ba = compute_delta(bundle(b, "B"), bundle(a, "A"))
        assert not (set(ab.introduced["total"]) & set(ba.introduced["total"]))

    def test_params_mismatch(self):
        a = synthetic_set(3, params=ScanParams(max_gadget_len=10))
        b = synthetic_set(3, params=ScanParams(max_gadget_len=5))
        with pytest.raises(ParamsMismatchError):
            compute_delta(bundle(a), bundle(b))


# (label, total_O, total_V, introduced, reduction %, introduction %)
# The last row's introduction rate prints as 58.0% in one table of the
# source data and 58.1% in another; 3350/5768 rounds to 58.1.
PACKAGE_ROWS = [
    ("libmodbus-C", 655, 547, 221, 16.5, 40.4),
    ("libmodbus-M", 655, 566, 222, 13.6, 39.2),
    ("libmodbus-A", 655, 511, 250, 22.0, 48.9),
    ("bftpd-C", 755, 717, 250, 5.0, 34.9),
    ("bftpd-M", 755, 631, 259, 16.4, 41.0),
    ("bftpd-A", 755, 535, 195, 29.1, 36.4),
    ("libcurl-C", 9536, 9304, 4735, 2.4, 50.9),
    ("libcurl-M", 9536, 8057, 4190, 15.5, 52.0),
    ("libcurl-A", 9536, 5768, 3350, 39.5, 58.1),
]


class TestPublishedRates:
    @pytest.mark.parametrize("row", PACKAGE_ROWS, ids=[r[0] for r in
                                                       PACKAGE_ROWS])
    def test_reduction_and_introduction(self, row):
        _, tb, ta, intro, red_pct, intro_pct = row
        d = counts_delta(tb, ta, intro)
        assert abs(d.reduction_rate * 100 - red_pct) <= 0.05
        assert abs(d.introduction_rates["total"] * 100 - intro_pct) <= 0.05


# indicator columns -> expected verdicts
VERDICT_ROWS = [
    ("libmodbus-C", {}, {}, "Neutral"),
    ("libmodbus-M", {"jop_load_data": "increased"},
     {"aslr_proof": "decreased", "turing": "decreased"}, "Mixed"),
    ("libmodbus-A", {}, {}, "Neutral"),
    ("bftpd-C", {}, {"aslr_proof": "decreased", "turing": "decreased",
                     "practical": "increased"}, "Mixed"),
    ("bftpd-M", {}, {"turing": "decreased", "aslr_proof": "increased",
                     "practical": "increased"}, "Mixed"),
    ("bftpd-A", {}, {"aslr_proof": "decreased", "turing": "decreased"},
     "Positive"),
    ("libcurl-C", {"syscall": "increased"},
     {"aslr_proof": "increased", "turing": "increased"}, "Negative"),
    ("libcurl-M", {"cop_trampoline": "introduced", "syscall": "eliminated"},
     {"aslr_proof": "decreased"}, "Mixed"),
    ("libcurl-A", {}, {"aslr_proof": "decreased",
                       "practical": "increased"}, "Mixed"),
    ("review-iteration-1", {"syscall": "increased"},
     {"aslr_proof": "increased", "turing": "increased"}, "Negative"),
    ("review-iteration-2", {"syscall": "decreased"},
     {"turing": "decreased"}, "Positive"),
]


class TestVerdictRule:
    @pytest.mark.parametrize("row", VERDICT_ROWS,
                             ids=[r[0] for r in VERDICT_ROWS])
    def test_published_verdicts(self, row):
        _, sp, expr, expected = row
        assert assess_from_changes(sp, expr).verdict == expected

    def test_decrease_without_elimination_is_not_positive(self):
        # a special-purpose count falling 8 -> 7 contributes no signal
        v = assess_from_changes({"jop_dispatcher": "decreased"}, {})
        assert v.verdict == "Neutral"

    def test_raw_type_counts_do_not_contribute(self):
        # totals moving up/down never produce signals by themselves
        d = counts_delta(655, 547, 221)
        assert assess_impact(d).verdict == "Neutral"

    def test_total_and_deterministic(self):
        for sp_change in ("introduced", "eliminated", "increased",
                          "decreased", "unchanged"):
            for expr_change in ("increased", "decreased", "unchanged"):
                v1 = assess_from_changes({"syscall": sp_change},
                                         {"turing": expr_change})
                v2 = assess_from_changes({"syscall": sp_change},
                                         {"turing": expr_change})
                assert v1 == v2
                assert v1.verdict in ("Positive", "Negative", "Neutral",
                                      "Mixed")


class TestMergeSets:
    def test_union(self):
        a = synthetic_set(4, start=0, source="a")
        b = synthetic_set(4, start=2, source="b")
        merged = merge_sets(a, [b])
        assert merged.identities == a.identities | b.identities

    def test_identity_element(self):
        a = synthetic_set(5, source="a")
        empty = GadgetSet(source="e", params=ScanParams())
        assert merge_sets(a, [empty]).identities == a.identities

    def test_representative_address_prefers_primary(self):
        params = ScanParams()
        a = GadgetSet(source="a", params=params)
        a.add(Gadget(address=0x5000, instructions=("pop rbp", "ret"),
                     terminator="ret"))
        b = GadgetSet(source="b", params=params)
        b.add(Gadget(address=0x1000, instructions=("pop rbp", "ret"),
                     terminator="ret"))
        merged = merge_sets(a, [b])
        assert merged.get("pop rbp ; ret").address == 0x5000

    def test_params_mismatch(self):
        a = synthetic_set(2, params=ScanParams(max_gadget_len=10))
        b = synthetic_set(2, params=ScanParams(max_gadget_len=3))
        with pytest.raises(ParamsMismatchError):
            merge_sets(a, [b])


class TestRendering:
    def test_table_row_strings(self):
        d = counts_delta(655, 547, 221)
        row = d.table5_row()
        assert row["reduction_rate"] == "16.5%"
        assert row["introduction_rate"] == "40.4%"
        assert row["verdict"] == "Neutral"

    def test_sp_delta_change_vocabulary(self):
        d = counts_delta(10, 8, 2)
        assert set(d.sp_delta) == set(SP_CATEGORIES)
        for v in d.sp_delta.values():
            assert v["change"] in ("introduced", "eliminated", "increased",
                                   "decreased", "unchanged")
