"""Parse the toolkit's canonical instruction text back into a small
structured form.

Classification predicates are defined over canonical texts so they apply
equally to freshly harvested gadgets and to sets reloaded from JSON.
The canonical format is regular enough for a split-based parser: prefix
words, lowercase mnemonic, comma-space separated operands, memory
operands as "[base+index*scale+0xdisp]" with an optional size qualifier.
"""

from __future__ import annotations

from dataclasses import dataclass

_PREFIX_WORDS = {"lock", "rep", "repz", "repnz", "bnd", "notrack", "data16",
                 "addr32", "xacquire", "xrelease", "cs", "ds", "es", "ss",
                 "fs", "gs"}

_FAMILIES = {}
for _i, _base in enumerate(["rax", "rcx", "rdx", "rbx", "rsp", "rbp",
                            "rsi", "rdi"]):
    _e = "e" + _base[1:]
    _w = _base[1:]
    _FAMILIES[_base] = _base
    _FAMILIES[_e] = _base
    _FAMILIES[_w] = _base
for _b, _names in {
    "rax": ("al", "ah"), "rcx": ("cl", "ch"), "rdx": ("dl", "dh"),
    "rbx": ("bl", "bh"), "rsp": ("spl",), "rbp": ("bpl",),
    "rsi": ("sil",), "rdi": ("dil",),
}.items():
    for _n in _names:
        _FAMILIES[_n] = _b
for _i in range(8, 16):
    for _suffix in ("", "d", "w", "b"):
        _FAMILIES[f"r{_i}{_suffix}"] = f"r{_i}"

GPR_FAMILIES = frozenset(_FAMILIES.values())


def register_family(name: str) -> str | None:
    """64-bit family name for any width of a general register, else None."""
    return _FAMILIES.get(name)


@dataclass(frozen=True)
class Op:
    kind: str                  # reg | mem | imm | other
    reg: str | None = None     # family name for GPRs, raw text otherwise
    raw: str = ""
    base: str | None = None    # memory base register family
    index: str | None = None
    disp: int | None = None
    value: int | None = None   # immediates

    @property
    def is_reg(self):
        return self.kind == "reg"

    @property
    def is_mem(self):
        return self.kind == "mem"

    @property
    def is_imm(self):
        return self.kind == "imm"


@dataclass(frozen=True)
class ParsedInsn:
    mnemonic: str
    operands: tuple[Op, ...]
    prefixes: tuple[str, ...] = ()

    def op(self, i) -> Op | None:
        return self.operands[i] if i < len(self.operands) else None


_SIZES = ("byte", "word", "dword", "qword", "fword", "tbyte", "xmmword",
          "ymmword", "zmmword")


def _parse_operand(text: str) -> Op:
    t = text.strip()
    for size in _SIZES:
        q = size + " ptr "
        if t.startswith(q):
            t = t[len(q):]
            break
    seg = None
    for s in ("fs:", "gs:"):
        if t.startswith(s):
            seg = s[:-1]
            t = t[len(s):]
    if t.startswith("[") and t.endswith("]"):
        inner = t[1:-1]
        base = index = None
        disp = 0
        # split additive terms, keeping the sign of displacements
        terms = []
        cur = ""
        for ch in inner:
            if ch in "+-" and cur:
                terms.append(cur)
                cur = ch if ch == "-" else ""
            else:
                cur += ch
        if cur:
            terms.append(cur)
        for term in terms:
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "*" in term:
                index = register_family(term.split("*")[0]) or term.split("*")[0]
            elif term.startswith("0x") or term.isdigit():
                disp = int(term, 16) * (-1 if neg else 1)
            else:
                fam = register_family(term)
                if base is None:
                    base = fam or term
                else:
                    index = fam or term
        return Op(kind="mem", raw=text.strip(), base=base, index=index,
                  disp=disp)
    fam = register_family(t)
    if fam:
        return Op(kind="reg", reg=fam, raw=t)
    if t.startswith("0x") or (t and t[0].isdigit()):
        try:
            return Op(kind="imm", value=int(t, 16), raw=t)
        except ValueError:
            return Op(kind="other", raw=t)
    return Op(kind="other", reg=t, raw=t)


def parse_insn(text: str) -> ParsedInsn:
    """Parse one canonical instruction text."""
    t = text.strip()
    prefixes = []
    while True:
        head, _, rest = t.partition(" ")
        if head in _PREFIX_WORDS and rest:
            prefixes.append(head)
            t = rest
        else:
            break
    mnem, _, rest = t.partition(" ")
    if not rest:
        return ParsedInsn(mnem, (), tuple(prefixes))
    ops = tuple(_parse_operand(o) for o in rest.split(", "))
    return ParsedInsn(mnem, ops, tuple(prefixes))
