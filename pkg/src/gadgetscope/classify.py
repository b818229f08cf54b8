"""Attack-type memberships and special-purpose gadget detection.

Types partition by terminator: ROP (ret / ret imm16), JOP (indirect
jump), COP (indirect call), syscall-terminated (syscall / int 0x80).
Special-purpose predicates are pure functions of the canonical
instruction texts; the predicate catalog is versioned so reports remain
comparable across tool versions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gadgets import Gadget, GadgetSet
from .insntext import parse_insn, ParsedInsn

PREDICATE_CATALOG_VERSION = 1

ROP = "ROP"
JOP = "JOP"
COP = "COP"
SYSCALL_TERMINATED = "SYSCALL"

_TYPE_BY_TERMINATOR = {
    "ret": ROP, "ret-imm": ROP,
    "jmp-indirect": JOP,
    "call-indirect": COP,
    "syscall": SYSCALL_TERMINATED, "int80": SYSCALL_TERMINATED,
}

SP_CATEGORIES = ("jop_dispatcher", "jop_load_data", "cop_dispatcher",
                 "cop_trampoline", "cop_stack_pivot", "syscall")


def classify_gadget(g: Gadget):
    """(type membership, syscall flag) for one gadget."""
    gtype = _TYPE_BY_TERMINATOR[g.terminator]
    return gtype, gtype == SYSCALL_TERMINATED


@dataclass(frozen=True)
class TypeCounts:
    rop: int
    jop: int
    cop: int
    syscall: int
    total: int

    def to_dict(self):
        return {"rop": self.rop, "jop": self.jop, "cop": self.cop,
                "syscall": self.syscall, "total": self.total}

    @classmethod
    def from_dict(cls, d):
        return cls(rop=d["rop"], jop=d["jop"], cop=d["cop"],
                   syscall=d["syscall"], total=d["total"])


def count_types(gs: GadgetSet) -> TypeCounts:
    counts = {ROP: 0, JOP: 0, COP: 0, SYSCALL_TERMINATED: 0}
    for g in gs:
        gtype, _ = classify_gadget(g)
        counts[gtype] += 1
    return TypeCounts(rop=counts[ROP], jop=counts[JOP], cop=counts[COP],
                      syscall=counts[SYSCALL_TERMINATED],
                      total=len(gs))


def identities_by_type(gs: GadgetSet) -> dict[str, set[str]]:
    out = {ROP: set(), JOP: set(), COP: set(), SYSCALL_TERMINATED: set()}
    for g in gs:
        gtype, _ = classify_gadget(g)
        out[gtype].add(g.identity)
    return out


# --- special-purpose predicates -------------------------------------------

def _self_update_targets(body: list[ParsedInsn]) -> set[str]:
    """Register families arithmetically stepped by a body instruction."""
    regs = set()
    for p in body:
        d = p.op(0)
        if d is None or not d.is_reg:
            continue
        if p.mnemonic in ("inc", "dec") and len(p.operands) == 1:
            regs.add(d.reg)
        elif p.mnemonic in ("add", "sub") and len(p.operands) == 2:
            s = p.op(1)
            if s.is_imm or s.is_reg:
                regs.add(d.reg)
        elif p.mnemonic == "lea" and len(p.operands) == 2:
            m = p.op(1)
            if m.is_mem and m.base == d.reg:
                regs.add(d.reg)
    return regs


def _loaded_registers(body: list[ParsedInsn]) -> set[str]:
    """Families loaded from memory or popped from the stack."""
    regs = set()
    for p in body:
        d = p.op(0)
        if d is None or not d.is_reg:
            continue
        if p.mnemonic == "pop" and len(p.operands) == 1:
            regs.add(d.reg)
        elif p.mnemonic == "mov" and len(p.operands) == 2 and p.op(1).is_mem:
            regs.add(d.reg)
    return regs


def _stack_loaded_registers(body: list[ParsedInsn]) -> set[str]:
    """Families loaded from the stack specifically."""
    regs = set()
    for p in body:
        d = p.op(0)
        if d is None or not d.is_reg:
            continue
        if p.mnemonic == "pop" and len(p.operands) == 1:
            regs.add(d.reg)
        elif (p.mnemonic == "mov" and len(p.operands) == 2
              and p.op(1).is_mem and p.op(1).base == "rsp"):
            regs.add(d.reg)
    return regs


def _writes_stack_pointer(body: list[ParsedInsn]) -> bool:
    for p in body:
        d = p.op(0)
        if d is None:
            continue
        if p.mnemonic in ("add", "sub", "lea", "mov", "xchg"):
            if d.is_reg and d.reg == "rsp":
                return True
            if (p.mnemonic == "xchg" and len(p.operands) == 2
                    and p.op(1).is_reg and p.op(1).reg == "rsp"):
                return True
    return False


def _indirect_target(term: ParsedInsn):
    """(register family, via_memory) the terminator transfers through."""
    t = term.op(0)
    if t is None:
        return None, False
    if t.is_reg:
        return t.reg, False
    if t.is_mem:
        return t.base, True
    return None, False


@dataclass
class SpecialPurposeReport:
    counts: dict = field(default_factory=dict)
    identities: dict = field(default_factory=dict)
    catalog_version: int = PREDICATE_CATALOG_VERSION

    def count(self, category):
        return self.counts.get(category, 0)

    def to_dict(self):
        return {"catalog_version": self.catalog_version,
                "categories": {c: {"count": self.counts.get(c, 0),
                                   "identities": sorted(
                                       self.identities.get(c, []))}
                               for c in SP_CATEGORIES}}

    @classmethod
    def from_dict(cls, d):
        rep = cls(catalog_version=d.get("catalog_version",
                                        PREDICATE_CATALOG_VERSION))
        for c, sub in d["categories"].items():
            rep.counts[c] = sub["count"]
            rep.identities[c] = list(sub["identities"])
        return rep


def detect_special_purpose(gs: GadgetSet) -> SpecialPurposeReport:
    """Apply the predicate catalog to every gadget in the set."""
    rep = SpecialPurposeReport()
    for c in SP_CATEGORIES:
        rep.counts[c] = 0
        rep.identities[c] = []

    def tally(category, g):
        rep.counts[category] += 1
        rep.identities[category].append(g.identity)

    for g in gs:
        gtype, sysflag = classify_gadget(g)
        if sysflag:
            tally("syscall", g)
            continue
        if gtype not in (JOP, COP):
            continue
        parsed = [parse_insn(t) for t in g.instructions]
        body, term = parsed[:-1], parsed[-1]
        target, via_mem = _indirect_target(term)
        if target is None:
            continue
        stepped = _self_update_targets(body)
        if gtype == JOP:
            if target in stepped:
                tally("jop_dispatcher", g)
            else:
                loaded = _loaded_registers(body)
                if loaded and not via_mem and target not in loaded:
                    tally("jop_load_data", g)
        else:
            if target in stepped:
                tally("cop_dispatcher", g)
            elif not via_mem and target in _stack_loaded_registers(body):
                tally("cop_trampoline", g)
            elif _writes_stack_pointer(body):
                tally("cop_stack_pivot", g)
    return rep
