"""Original-vs-variant comparison: count deltas, introduced gadgets,
introduction rates, special-purpose and expressivity movement, and the
rule-based overall impact verdict.

The verdict rule: negative signals are any special-purpose category
that grew or newly appeared and any expressivity catalog whose coverage
grew; positive signals are any special-purpose category driven to zero
and any catalog whose coverage shrank.  Both kinds present -> Mixed,
only one -> that sign, neither -> Neutral.  Raw ROP/JOP/COP count
movement deliberately contributes nothing: shrinking a gadget
population is not by itself a security improvement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import (ROP, JOP, COP, SYSCALL_TERMINATED, TypeCounts,
                       SpecialPurposeReport, SP_CATEGORIES, count_types,
                       detect_special_purpose, identities_by_type)
from .expressivity import ExpressivityEntry, coverage
from .errors import ParamsMismatchError
from .gadgets import GadgetSet

TYPE_KEYS = (ROP, JOP, COP, SYSCALL_TERMINATED)

SP_DISPLAY = {
    "jop_dispatcher": "JOP Dispatcher",
    "jop_load_data": "JOP Load Data",
    "cop_dispatcher": "COP Dispatcher",
    "cop_trampoline": "COP Trampoline",
    "cop_stack_pivot": "COP Intra Stack Pivot",
    "syscall": "Syscall",
}

CATALOG_DISPLAY = {
    "practical": "Non-ASLR",
    "aslr_proof": "ASLR",
    "turing": "Turing",
}


@dataclass
class AnalysisBundle:
    """Everything measured about one binary's gadget population."""
    label: str
    gadgets: GadgetSet
    type_counts: TypeCounts
    special: SpecialPurposeReport
    expressivity: list[ExpressivityEntry]

    @classmethod
    def analyze(cls, label: str, gadgets: GadgetSet, catalogs,
                strict: bool = True) -> "AnalysisBundle":
        return cls(
            label=label,
            gadgets=gadgets,
            type_counts=count_types(gadgets),
            special=detect_special_purpose(gadgets),
            expressivity=[coverage(gadgets, c, strict=strict)
                          for c in catalogs],
        )

    def to_dict(self):
        return {"label": self.label,
                "source": self.gadgets.source,
                "type_counts": self.type_counts.to_dict(),
                "special_purpose": self.special.to_dict(),
                "expressivity": [e.to_dict() for e in self.expressivity]}


@dataclass
class VariantDelta:
    original_label: str
    variant_label: str
    counts_before: TypeCounts
    counts_after: TypeCounts
    reduction_rate: float            # fraction of original total removed
    introduced: dict                 # type/"total" -> sorted identity list
    introduction_rates: dict         # type/"total" -> fraction in [0, 1]
    sp_delta: dict                   # category -> {before, after, change}
    expr_delta: dict                 # catalog -> {before, after, change}

    def to_dict(self):
        return {
            "original": self.original_label,
            "variant": self.variant_label,
            "counts_before": self.counts_before.to_dict(),
            "counts_after": self.counts_after.to_dict(),
            "reduction_rate": self.reduction_rate,
            "introduced_counts": {k: len(v)
                                  for k, v in self.introduced.items()},
            "introduced": {k: list(v) for k, v in self.introduced.items()},
            "introduction_rates": dict(self.introduction_rates),
            "sp_delta": {k: dict(v) for k, v in self.sp_delta.items()},
            "expr_delta": {k: dict(v) for k, v in self.expr_delta.items()},
            "table5_row": self.table5_row(),
        }

    # --- rendered convenience strings (Table 5 style) -------------------

    def type_availability_text(self, ascii_arrows=False) -> str:
        down, up = [], []
        pairs = {ROP: (self.counts_before.rop, self.counts_after.rop),
                 JOP: (self.counts_before.jop, self.counts_after.jop),
                 COP: (self.counts_before.cop, self.counts_after.cop)}
        for t, (b, a) in pairs.items():
            if a < b:
                down.append(t)
            elif a > b:
                up.append(t)
        d_arrow = "-" if ascii_arrows else "↓"
        u_arrow = "+" if ascii_arrows else "↑"
        parts = []
        if down:
            parts.append(f"{', '.join(down)} {d_arrow}")
        if up:
            parts.append(f"{', '.join(up)} {u_arrow}")
        return " ".join(parts) if parts else "None"

    def sp_impact_text(self) -> str:
        phrases = []
        for cat in SP_CATEGORIES:
            d = self.sp_delta[cat]
            if d["change"] == "introduced":
                phrases.append(f"{SP_DISPLAY[cat]} Introduced")
            elif d["change"] == "eliminated":
                phrases.append(f"{SP_DISPLAY[cat]} Eliminated")
            elif d["change"] == "increased":
                phrases.append(f"{SP_DISPLAY[cat]} Increased")
        return "; ".join(phrases) if phrases else "None Eliminated"

    def expr_impact_text(self, ascii_arrows=False) -> str:
        down, up = [], []
        for cat, d in self.expr_delta.items():
            name = CATALOG_DISPLAY.get(cat, cat)
            if d["change"] == "decreased":
                down.append(name)
            elif d["change"] == "increased":
                up.append(name)
        d_arrow = "-" if ascii_arrows else "↓"
        u_arrow = "+" if ascii_arrows else "↑"
        parts = []
        if down:
            parts.append(f"{', '.join(sorted(down))} {d_arrow}")
        if up:
            parts.append(f"{', '.join(sorted(up))} {u_arrow}")
        return " ".join(parts) if parts else "None"

    def table5_row(self, ascii_arrows=False) -> dict:
        verdict = assess_impact(self)
        return {
            "variant": self.variant_label,
            "reduction_rate": _pct(self.reduction_rate),
            "introduction_rate": _pct(self.introduction_rates["total"]),
            "type_availability": self.type_availability_text(ascii_arrows),
            "special_purpose": self.sp_impact_text(),
            "expressivity": self.expr_impact_text(ascii_arrows),
            "verdict": verdict.verdict,
        }


def _pct(fraction: float) -> str:
    from decimal import Decimal, ROUND_HALF_UP
    q = (Decimal(str(fraction)) * 100).quantize(Decimal("0.1"),
                                                rounding=ROUND_HALF_UP)
    return f"{q}%"


def _sp_change(before: int, after: int) -> str:
    if before == 0 and after > 0:
        return "introduced"
    if before > 0 and after == 0:
        return "eliminated"
    if after > before:
        return "increased"
    if after < before:
        return "decreased"
    return "unchanged"


def _expr_change(before: int, after: int) -> str:
    if after > before:
        return "increased"
    if after < before:
        return "decreased"
    return "unchanged"


def compute_delta(original: AnalysisBundle,
                  variant: AnalysisBundle) -> VariantDelta:
    """Full comparison of a variant against its original."""
    if original.gadgets.params != variant.gadgets.params:
        raise ParamsMismatchError(
            "original and variant were scanned with different parameters")

    orig_ids = original.gadgets.identities
    by_type_after = identities_by_type(variant.gadgets)

    introduced = {}
    introduction_rates = {}
    total_introduced = set()
    for t in TYPE_KEYS:
        intro = {i for i in by_type_after[t] if i not in orig_ids}
        introduced[t] = sorted(intro)
        total_introduced |= intro
        after_count = len(by_type_after[t])
        introduction_rates[t] = (len(intro) / after_count
                                 if after_count else 0.0)
    introduced["total"] = sorted(total_introduced)
    total_after = len(variant.gadgets)
    introduction_rates["total"] = (len(total_introduced) / total_after
                                   if total_after else 0.0)

    total_before = len(original.gadgets)
    reduction = ((total_before - total_after) / total_before
                 if total_before else 0.0)

    sp_delta = {}
    for cat in SP_CATEGORIES:
        b = original.special.count(cat)
        a = variant.special.count(cat)
        sp_delta[cat] = {"before": b, "after": a, "change": _sp_change(b, a)}

    expr_delta = {}
    after_by_name = {e.catalog: e for e in variant.expressivity}
    for e in original.expressivity:
        a = after_by_name.get(e.catalog)
        if a is None:
            continue
        expr_delta[e.catalog] = {"before": e.count, "after": a.count,
                                 "size": e.size,
                                 "change": _expr_change(e.count, a.count)}

    return VariantDelta(
        original_label=original.label,
        variant_label=variant.label,
        counts_before=original.type_counts,
        counts_after=variant.type_counts,
        reduction_rate=reduction,
        introduced=introduced,
        introduction_rates=introduction_rates,
        sp_delta=sp_delta,
        expr_delta=expr_delta,
    )


@dataclass(frozen=True)
class ImpactAssessment:
    verdict: str                     # Positive | Negative | Neutral | Mixed
    positive_signals: tuple[str, ...]
    negative_signals: tuple[str, ...]

    def to_dict(self):
        return {"verdict": self.verdict,
                "positive_signals": list(self.positive_signals),
                "negative_signals": list(self.negative_signals)}


def assess_from_changes(sp_changes: dict, expr_changes: dict
                        ) -> ImpactAssessment:
    """Verdict from per-category change labels (the Table 5 indicators)."""
    positive = []
    negative = []
    for cat, change in sp_changes.items():
        name = SP_DISPLAY.get(cat, cat)
        if change in ("increased", "introduced"):
            negative.append(f"special-purpose {name} {change}")
        elif change == "eliminated":
            positive.append(f"special-purpose {name} eliminated")
    for cat, change in expr_changes.items():
        name = CATALOG_DISPLAY.get(cat, cat)
        if change == "increased":
            negative.append(f"expressivity {name} coverage increased")
        elif change == "decreased":
            positive.append(f"expressivity {name} coverage decreased")
    if positive and negative:
        verdict = "Mixed"
    elif positive:
        verdict = "Positive"
    elif negative:
        verdict = "Negative"
    else:
        verdict = "Neutral"
    return ImpactAssessment(verdict, tuple(positive), tuple(negative))


def assess_impact(delta: VariantDelta) -> ImpactAssessment:
    """Rule-based overall verdict for one variant delta."""
    return assess_from_changes(
        {cat: d["change"] for cat, d in delta.sp_delta.items()},
        {cat: d["change"] for cat, d in delta.expr_delta.items()},
    )


def merge_sets(primary: GadgetSet, deps) -> GadgetSet:
    """Identity-union of a package's set with its dependencies' sets."""
    for d in deps:
        if d.params != primary.params:
            raise ParamsMismatchError(
                f"dependency set {d.source!r} scanned with different "
                "parameters")
    sources = [primary.source] + [d.source for d in deps]
    merged = GadgetSet(source=" + ".join(sources), params=primary.params)
    for g in primary:
        merged.add(g)
    for d in deps:
        for g in d:
            if g.identity not in merged:
                merged.add(g)
    return merged
