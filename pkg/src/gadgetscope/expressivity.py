"""Expressivity-class coverage of ROP gadget sets.

A catalog is a named list of computation classes, each a pattern over a
single canonical body instruction.  Coverage counts the classes for
which the set holds at least one matching gadget: the microgadget
discipline (strict mode) admits only single-body-instruction gadgets
ending in ret, while extended mode also accepts longer bodies whose
later instructions leave the class's output register intact.

The built-in catalogs fix the class counts at 11 (practical exploit
set), 17 (simple Turing-complete set) and 35 (practical set hardened
against address randomization).  System-call and indirect-branch
classes necessarily match on the terminator instruction; a catalog
without them could never be fully satisfied by any real set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .classify import ROP, classify_gadget
from .errors import CatalogError
from .gadgets import Gadget, GadgetSet
from .insntext import parse_insn, ParsedInsn

CATALOG_FORMAT_VERSION = 1

_CC_NAMES = ["o", "no", "b", "ae", "e", "ne", "be", "a",
             "s", "ns", "p", "np", "l", "ge", "le", "g"]
_CMOV = [f"cmov{cc}" for cc in _CC_NAMES]
_SETCC = [f"set{cc}" for cc in _CC_NAMES]


@dataclass(frozen=True)
class ClassPattern:
    mnemonics: tuple[str, ...]
    operand_shape: str
    fixed_register: str | None = None

    def to_dict(self):
        return {"mnemonics": list(self.mnemonics),
                "operand_shape": self.operand_shape,
                "fixed_register": self.fixed_register}


@dataclass(frozen=True)
class ExpressivityClass:
    id: str
    label: str
    pattern: ClassPattern


@dataclass(frozen=True)
class ClassCatalog:
    name: str
    classes: tuple[ExpressivityClass, ...]

    @property
    def size(self):
        return len(self.classes)

    def to_dict(self):
        return {"name": self.name, "size": self.size,
                "classes": [{"id": c.id, "label": c.label,
                             "pattern": c.pattern.to_dict()}
                            for c in self.classes]}


def _cls(cid, label, mnemonics, shape, fixed=None):
    return ExpressivityClass(cid, label,
                             ClassPattern(tuple(mnemonics), shape, fixed))


_TURING_CLASSES = [
    _cls("load-const", "load immediate into register via pop",
         ["pop"], "reg"),
    _cls("move-reg-reg", "register-to-register move", ["mov"], "reg,reg"),
    _cls("load-mem", "load register from memory", ["mov"], "reg,mem"),
    _cls("store-mem", "store register to memory", ["mov"], "mem,reg"),
    _cls("add", "register addition", ["add", "adc"], "reg,reg"),
    _cls("sub", "register subtraction", ["sub", "sbb"], "reg,reg"),
    _cls("neg", "two's complement negate", ["neg"], "reg"),
    _cls("and", "bitwise and", ["and"], "reg,reg"),
    _cls("or", "bitwise or", ["or"], "reg,reg"),
    _cls("xor", "bitwise xor", ["xor"], "reg,reg"),
    _cls("not", "bitwise not", ["not"], "reg"),
    _cls("shift-left", "left shift", ["shl", "sal"], "reg,any"),
    _cls("shift-right", "right shift", ["shr", "sar"], "reg,any"),
    _cls("compare", "compare and set flags", ["cmp", "test"], "reg,reg"),
    _cls("cond-move", "conditional move", _CMOV, "reg,reg"),
    _cls("sp-arith", "stack pointer arithmetic",
         ["add", "sub", "lea"], "reg,any", "rsp"),
    _cls("system-call", "system call", ["syscall", "int"], "terminator"),
]

_PRACTICAL_CLASSES = [
    _cls("load-rdi", "pop first syscall argument", ["pop"], "reg", "rdi"),
    _cls("load-rsi", "pop second syscall argument", ["pop"], "reg", "rsi"),
    _cls("load-rdx", "pop third syscall argument", ["pop"], "reg", "rdx"),
    _cls("load-rax", "pop syscall number register", ["pop"], "reg", "rax"),
    _cls("move-reg-reg", "register-to-register move", ["mov"], "reg,reg"),
    _cls("load-mem", "load register from memory", ["mov"], "reg,mem"),
    _cls("store-mem", "store register to memory", ["mov"], "mem,reg"),
    _cls("add", "register addition", ["add", "adc"], "reg,reg"),
    _cls("sp-arith", "stack pointer arithmetic",
         ["add", "sub", "lea"], "reg,any", "rsp"),
    _cls("system-call", "system call", ["syscall", "int"], "terminator"),
    _cls("jump-reg", "jump to register", ["jmp"], "terminator:reg"),
]

_ASLR_EXTRA = [
    _cls("add-mem-reg", "add memory into register", ["add", "adc"],
         "reg,mem"),
    _cls("add-reg-mem", "add register into memory", ["add", "adc"],
         "mem,reg"),
    _cls("sub-mem-reg", "subtract memory from register", ["sub", "sbb"],
         "reg,mem"),
    _cls("sub-reg-mem", "subtract register from memory", ["sub", "sbb"],
         "mem,reg"),
    _cls("and-mem-reg", "and memory into register", ["and"], "reg,mem"),
    _cls("and-reg-mem", "and register into memory", ["and"], "mem,reg"),
    _cls("or-mem-reg", "or memory into register", ["or"], "reg,mem"),
    _cls("or-reg-mem", "or register into memory", ["or"], "mem,reg"),
    _cls("xor-mem-reg", "xor memory into register", ["xor"], "reg,mem"),
    _cls("xor-reg-mem", "xor register into memory", ["xor"], "mem,reg"),
    _cls("push-reg", "push register", ["push"], "reg"),
    _cls("load-sp-rel", "load stack-relative value",
         ["mov", "lea"], "reg,mem(rsp)"),
    _cls("xchg-reg-reg", "exchange registers", ["xchg"], "reg,reg"),
    _cls("cond-set", "set byte on condition", _SETCC, "reg"),
    _cls("call-indirect", "indirect call", ["call"], "terminator"),
    _cls("jump-indirect", "indirect jump", ["jmp"], "terminator"),
    _cls("pivot-xchg-sp", "stack pivot via exchange",
         ["xchg"], "reg,reg", "rsp@any"),
    _cls("pivot-mov-sp", "stack pivot via move", ["mov"], "reg,reg", "rsp"),
]

BUILTIN_CATALOGS = {
    "practical": ClassCatalog("practical", tuple(_PRACTICAL_CLASSES)),
    "turing": ClassCatalog("turing", tuple(_TURING_CLASSES)),
    "aslr_proof": ClassCatalog("aslr_proof",
                               tuple(_TURING_CLASSES + _ASLR_EXTRA)),
}

_EXPECTED_SIZES = {"practical": 11, "turing": 17, "aslr_proof": 35}
for _n, _c in BUILTIN_CATALOGS.items():
    assert _c.size == _EXPECTED_SIZES[_n], (_n, _c.size)


def load_catalog(name_or_path) -> ClassCatalog:
    """Built-in catalog by name, or a custom catalog from a JSON file."""
    s = str(name_or_path)
    if s in BUILTIN_CATALOGS:
        return BUILTIN_CATALOGS[s]
    p = Path(s)
    if not p.is_file():
        raise CatalogError(f"unknown catalog {s!r} (not a builtin, "
                           "not a file)", "unknown-builtin")
    try:
        d = json.loads(p.read_text())
        classes = tuple(
            ExpressivityClass(
                c["id"], c.get("label", c["id"]),
                ClassPattern(tuple(c["pattern"]["mnemonics"]),
                             c["pattern"]["operand_shape"],
                             c["pattern"].get("fixed_register")))
            for c in d["classes"])
        declared = d["size"]
        name = d["name"]
    except (KeyError, TypeError, ValueError) as e:
        raise CatalogError(f"{s}: malformed catalog file ({e})",
                           "malformed-catalog-file") from e
    if len(classes) != declared:
        raise CatalogError(
            f"{s}: declares size {declared} but lists {len(classes)}",
            "size-mismatch")
    ids = [c.id for c in classes]
    if len(set(ids)) != len(ids):
        raise CatalogError(f"{s}: duplicate class ids",
                           "malformed-catalog-file")
    return ClassCatalog(name, classes)


# --- matching ---------------------------------------------------------------

def _shape_ok(shape: str, p: ParsedInsn) -> bool:
    if shape == "none":
        return len(p.operands) == 0
    if shape == "any":
        return True
    want = shape.split(",")
    if len(p.operands) != len(want):
        return False
    for w, op in zip(want, p.operands):
        base_req = None
        if w.endswith(")") and "(" in w:
            w, base_req = w[:-1].split("(")
        if w == "any":
            pass
        elif w == "reg":
            if not op.is_reg:
                return False
        elif w == "mem":
            if not op.is_mem:
                return False
        elif w == "imm":
            if not op.is_imm:
                return False
        else:
            return False
        if base_req is not None and (not op.is_mem or op.base != base_req):
            return False
    return True


def _fixed_ok(fixed: str | None, p: ParsedInsn) -> bool:
    if fixed is None:
        return True
    if fixed.endswith("@any"):
        fam = fixed[:-4]
        return any(op.is_reg and op.reg == fam for op in p.operands)
    return bool(p.operands) and p.operands[0].is_reg \
        and p.operands[0].reg == fixed


def _writes_register(p: ParsedInsn, fam: str) -> bool:
    d = p.op(0)
    if d is not None and d.is_reg and d.reg == fam:
        return p.mnemonic not in ("cmp", "test", "push")
    if p.mnemonic == "xchg" and len(p.operands) == 2:
        s = p.op(1)
        if s is not None and s.is_reg and s.reg == fam:
            return True
    if p.mnemonic == "pop" and d is not None and d.is_reg and d.reg == fam:
        return True
    return False


def _matches_body_class(cls: ExpressivityClass, g: Gadget, parsed,
                        strict: bool) -> bool:
    body = parsed[:-1]
    if strict and len(body) != 1:
        return False
    for i, p in enumerate(body):
        if p.mnemonic not in cls.pattern.mnemonics:
            continue
        if not _shape_ok(cls.pattern.operand_shape, p):
            continue
        if not _fixed_ok(cls.pattern.fixed_register, p):
            continue
        if strict:
            return True
        out = p.op(0)
        if out is not None and out.is_reg:
            if any(_writes_register(q, out.reg) for q in body[i + 1:]):
                continue
        return True
    return False


def _matches_terminator_class(cls: ExpressivityClass, g: Gadget, parsed,
                              strict: bool) -> bool:
    term = parsed[-1]
    shape = cls.pattern.operand_shape
    if term.mnemonic not in cls.pattern.mnemonics:
        return False
    if shape == "terminator:reg" and not (term.operands
                                          and term.operands[0].is_reg):
        return False
    if shape == "terminator:mem" and not (term.operands
                                          and term.operands[0].is_mem):
        return False
    if strict and len(parsed) != 1:
        return False
    if not strict and term.operands and term.operands[0].is_reg:
        fam = term.operands[0].reg
        if any(_writes_register(q, fam) for q in parsed[:-1]):
            return False
    return True


def coverage(gs: GadgetSet, catalog: ClassCatalog, strict: bool = True):
    """Satisfied class ids for one catalog over one gadget set."""
    satisfied = set()
    term_classes = [c for c in catalog.classes
                    if c.pattern.operand_shape.startswith("terminator")]
    body_classes = [c for c in catalog.classes
                    if not c.pattern.operand_shape.startswith("terminator")]
    for g in gs:
        parsed = [parse_insn(t) for t in g.instructions]
        gtype, _ = classify_gadget(g)
        if gtype == ROP:
            for c in body_classes:
                if c.id in satisfied:
                    continue
                if _matches_body_class(c, g, parsed, strict):
                    satisfied.add(c.id)
        for c in term_classes:
            if c.id in satisfied:
                continue
            if _matches_terminator_class(c, g, parsed, strict):
                satisfied.add(c.id)
        if len(satisfied) == catalog.size:
            break
    return ExpressivityEntry(
        catalog=catalog.name, size=catalog.size,
        satisfied=tuple(sorted(satisfied)), strict=strict)


@dataclass(frozen=True)
class ExpressivityEntry:
    catalog: str
    size: int
    satisfied: tuple[str, ...]
    strict: bool = True

    @property
    def count(self):
        return len(self.satisfied)

    def rendered(self):
        return f"{self.count} of {self.size}"

    def to_dict(self):
        return {"catalog": self.catalog, "size": self.size,
                "satisfied": list(self.satisfied), "count": self.count,
                "strict": self.strict,
                "format_version": CATALOG_FORMAT_VERSION}

    @classmethod
    def from_dict(cls, d):
        return cls(catalog=d["catalog"], size=d["size"],
                   satisfied=tuple(d["satisfied"]),
                   strict=d.get("strict", True))


def coverage_report(gs: GadgetSet, catalogs, strict: bool = True,
                    scope: str = "package-only"):
    """ExpressivityEntry per catalog plus the analysis scope note."""
    entries = [coverage(gs, c, strict=strict) for c in catalogs]
    return {"scope": scope, "entries": entries}
