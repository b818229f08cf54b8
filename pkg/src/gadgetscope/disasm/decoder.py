"""x86-64 instruction decoder.

Decodes a single instruction at an arbitrary byte offset, producing a
deterministic canonical text rendering (lowercase Intel-style syntax,
destination first, hex immediates, explicit size qualifiers on memory
operands) plus a coarse kind classification used by the gadget scanner.

The decoder accepts exactly what GNU binutils' 64-bit disassembler
accepts; encodings it cannot validate decode as a failure (None), never
as a guess.  decode_at() is pure and stateless.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tables
from . import tables_exact
from . import tables_vex

# instruction kinds
PLAIN = "plain"
RET = "ret"
RET_IMM = "ret-imm"
JMP_INDIRECT = "jmp-indirect"
CALL_INDIRECT = "call-indirect"
SYSCALL = "syscall"
INT80 = "int80"
BRANCH = "branch"
CALL_DIRECT = "call-direct"
PRIVILEGED = "privileged"
INVALID_FOR_GADGET = "invalid-for-gadget"

TERMINATOR_KINDS = frozenset({RET, RET_IMM, JMP_INDIRECT, CALL_INDIRECT,
                              SYSCALL, INT80})

MAX_INSN_LEN = 15

GPR64 = ["rax", "rcx", "rdx", "rbx", "rsp", "rbp", "rsi", "rdi",
         "r8", "r9", "r10", "r11", "r12", "r13", "r14", "r15"]
GPR32 = ["eax", "ecx", "edx", "ebx", "esp", "ebp", "esi", "edi",
         "r8d", "r9d", "r10d", "r11d", "r12d", "r13d", "r14d", "r15d"]
GPR16 = ["ax", "cx", "dx", "bx", "sp", "bp", "si", "di",
         "r8w", "r9w", "r10w", "r11w", "r12w", "r13w", "r14w", "r15w"]
GPR8_REX = ["al", "cl", "dl", "bl", "spl", "bpl", "sil", "dil",
            "r8b", "r9b", "r10b", "r11b", "r12b", "r13b", "r14b", "r15b"]
GPR8_NOREX = ["al", "cl", "dl", "bl", "ah", "ch", "dh", "bh"]
SEGREG = ["es", "cs", "ss", "ds", "fs", "gs"]

LEGACY_PREFIXES = frozenset({0xF0, 0xF2, 0xF3, 0x2E, 0x36, 0x3E, 0x26,
                             0x64, 0x65, 0x66, 0x67})
SEG_PREFIX = {0x2E: "cs", 0x36: "ss", 0x3E: "ds", 0x26: "es",
              0x64: "fs", 0x65: "gs"}

MEM_SIZE_NAME = {1: "byte ptr", 2: "word ptr", 4: "dword ptr",
                 8: "qword ptr", 6: "fword ptr", 10: "tbyte ptr",
                 16: "xmmword ptr", 32: "ymmword ptr", 64: "zmmword ptr"}


@dataclass(frozen=True)
class Operand:
    """One decoded operand: a register, an immediate, or a memory reference."""
    kind: str                 # reg | imm | mem
    reg: str | None = None
    value: int | None = None  # imm
    base: str | None = None
    index: str | None = None
    scale: int = 1
    disp: int = 0
    seg: str | None = None
    size: int | None = None   # memory access width in bytes, None if untyped

    def render(self) -> str:
        if self.kind == "reg":
            return self.reg
        if self.kind == "imm":
            return hex(self.value)
        parts = []
        if self.base:
            parts.append(self.base)
        if self.index:
            parts.append(f"{self.index}*{self.scale}")
        body = "+".join(parts)
        if self.disp or not parts:
            if not parts:
                body = hex(self.disp)
            elif self.disp < 0:
                body += f"-{hex(-self.disp)}"
            else:
                body += f"+{hex(self.disp)}"
        mem = f"[{body}]"
        if self.seg:
            mem = f"{self.seg}:{mem}"
        if self.size is not None:
            return f"{MEM_SIZE_NAME[self.size]} {mem}"
        return mem


@dataclass(frozen=True)
class Instruction:
    """A decoded instruction with its canonical text."""
    offset: int
    length: int
    text: str
    mnemonic: str
    kind: str
    operands: tuple = ()
    prefixes: tuple = ()


class _Fail(Exception):
    pass


class _Cursor:
    __slots__ = ("data", "pos", "start", "end")

    def __init__(self, data, offset):
        self.data = data
        self.start = offset
        self.pos = offset
        self.end = min(len(data), offset + MAX_INSN_LEN)

    def u8(self):
        if self.pos >= self.end:
            raise _Fail()
        b = self.data[self.pos]
        self.pos += 1
        return b

    def peek(self):
        if self.pos >= self.end:
            return None
        return self.data[self.pos]

    def bytes(self, n):
        if self.pos + n > self.end:
            raise _Fail()
        v = self.data[self.pos:self.pos + n]
        self.pos += n
        return v

    def uint(self, n):
        return int.from_bytes(self.bytes(n), "little")

    def sint(self, n):
        return int.from_bytes(self.bytes(n), "little", signed=True)


class _Decode:
    """Single-instruction decode state."""

    def __init__(self, data, offset):
        self.cur = _Cursor(data, offset)
        self.segs = []          # segment prefixes in order
        self.osz = False        # 0x66 seen
        self.asz = False        # 0x67 seen
        self.lock = False
        self.rep = None         # 0xF2 / 0xF3 (last wins)
        self.rep_order = []     # all f2/f3 in order
        self.n66 = 0
        self.rex = 0
        self.vex = None         # (map, w, l, vvvv, pp) once VEX/EVEX parsed
        self.evex = None        # (z, ll, b, aaa, vvvv4) extras
        self.modrm = None
        self.mod = self.reg = self.rm = None
        self.sib = None
        self.mem = None         # pending memory operand pieces
        self.opsize_used = False
        self.mandatory = None   # consumed mandatory prefix
        self.rex_used = 0
        self.opcode_bytes = ()
        self.ppkey = None
        self.vexr = self.vexx = self.vexb = False
        self.vexw = False
        self.vexl = 0
        self.vexll = 0
        self.vvvv = 0
        self.evexr2 = False
        self.evexz = False
        self.evexbcst = False
        self.evexv2 = False
        self.evexaaa = 0
        self.cc_value = None
        self.vvvv_used = False
        self.pfx_seq = []       # legacy prefix bytes in original order
        self.asz_used = False
        self.imm_raw = None     # pre-fetched immediate bytes (VEX/EVEX path)
        self.imm_pos = 0
        self.vsib_index = None

    # --- prefix / modrm machinery -------------------------------------

    def scan_prefixes(self):
        cur = self.cur
        while True:
            if cur.pos - cur.start > 13:
                raise _Fail()   # reference caps prefixes at 13 bytes
            b = cur.peek()
            if b is None:
                raise _Fail()
            if b in LEGACY_PREFIXES:
                cur.u8()
                self.pfx_seq.append(b)
                if b == 0x66:
                    self.osz = True
                    self.n66 += 1
                elif b == 0x67:
                    self.asz = True
                elif b == 0xF0:
                    self.lock = True
                elif b in (0xF2, 0xF3):
                    self.rep = b
                    self.rep_order.append(b)
                else:
                    self.segs.append(SEG_PREFIX[b])
                continue
            if 0x40 <= b <= 0x4F:
                cur.u8()
                nxt = cur.peek()
                if (nxt is None or nxt in LEGACY_PREFIXES
                        or 0x40 <= nxt <= 0x4F or nxt == 0x9B):
                    raise _Fail()  # REX must immediately precede the opcode
                self.rex = b
            return

    @property
    def rexw(self):
        if self.vex is not None:
            return bool(self.vexw)
        return bool(self.rex & 8)

    def need_modrm(self):
        if self.modrm is None:
            m = self.cur.u8()
            self.modrm = m
            self.mod = m >> 6
            self.reg = ((m >> 3) & 7) | (((self.rex & 4) << 1) if self.vex is None
                                         else (8 if self.vexr else 0))
            self.rm = m & 7
        return self.modrm

    def parse_mem(self):
        """Parse SIB/displacement for a memory ModRM; returns operand pieces."""
        if self.mem is not None:
            return self.mem
        mod, rm = self.mod, self.rm
        asz32 = self.asz
        self.asz_used = True
        gpr = GPR32 if asz32 else GPR64
        rexb = (1 if self.vexb else 0) if self.vex is not None else ((self.rex & 1) and 1)
        rexx = (1 if self.vexx else 0) if self.vex is not None else ((self.rex & 2) and 1)
        base = index = None
        scale = 1
        disp = 0
        if rm == 4:  # SIB
            sib = self.cur.u8()
            self.rex_used |= 3
            ss = sib >> 6
            idx = ((sib >> 3) & 7) | (8 if rexx else 0)
            bse = (sib & 7) | (8 if rexb else 0)
            if idx != 4:  # rsp can never be an index
                index = gpr[idx]
                scale = 1 << ss
            if (sib & 7) == 5 and mod == 0:
                disp = self.cur.sint(4)
                base = None
            else:
                base = gpr[bse]
            if mod == 1:
                disp = self.cur.sint(1)
            elif mod == 2:
                disp = self.cur.sint(4)
        elif rm == 5 and mod == 0:
            disp = self.cur.sint(4)
            base = "eip" if asz32 else "rip"
        else:
            self.rex_used |= 1
            base = gpr[rm | (8 if rexb else 0)]
            if mod == 1:
                disp = self.cur.sint(1)
            elif mod == 2:
                disp = self.cur.sint(4)
        seg = None
        for s in reversed(self.segs):
            if s in ("fs", "gs"):
                seg = s
                break
        self.mem = (base, index, scale, disp, seg)
        return self.mem

    # --- effective sizes ----------------------------------------------

    def opsize(self, flags):
        self.opsize_used = True
        if "f64" in flags:
            return 8
        if self.rexw:
            self.rex_used |= 8
            return 8
        if self.osz:
            return 2
        return 8 if "d64" in flags else 4

    def immsize_z(self, flags):
        return 2 if (self.osz and not self.rexw) else 4


def _mask(v, size):
    return v & ((1 << (size * 8)) - 1)


_VALID_SSE_KEYS = (None, "66", "f3", "f2")


def _select_pfx(dec: _Decode, node, consume=True):
    """Resolve a mandatory-prefix table node against the seen prefixes."""
    table = node[1]
    key = None
    if dec.rep == 0xF3:
        key = "f3"
    elif dec.rep == 0xF2:
        key = "f2"
    elif dec.osz:
        key = "66"
    entry = table.get(key)
    if entry is None and key is not None:
        return None
    if entry is not None and key is not None and consume:
        dec.mandatory = key
    if entry is None:
        entry = table.get(None)
    return entry


def _resolve(dec: _Decode, entry, flags):
    """Walk table nodes until a concrete spec string is found."""
    while True:
        if entry is None:
            raise _Fail()
        if isinstance(entry, str):
            return entry
        if isinstance(entry, dict):  # VEX pp-select written as a plain dict
            entry = entry.get(dec.ppkey)
            continue
        tag = entry[0]
        if tag == "grp":
            dec.need_modrm()
            entry = entry[1].get((dec.modrm >> 3) & 7)
        elif tag == "pfx":
            entry = _select_pfx(dec, entry)
        elif tag == "pfxw":  # prefix-selected, but prefix stays a word
            entry = _select_pfx(dec, entry, consume=False)
        elif tag == "mod":
            dec.need_modrm()
            entry = entry[1] if dec.mod != 3 else entry[2]
        elif tag == "modrm":
            dec.need_modrm()
            if dec.modrm in entry[1]:
                entry = entry[1][dec.modrm]
            else:
                entry = entry[2]
        elif tag == "osz":
            sz = dec.opsize(flags)
            entry = entry[1][{2: 16, 4: 32, 8: 64}[sz]]
        elif tag == "rex":
            if dec.rex & 1:
                entry = entry[2]
            else:
                entry = entry[1]
        elif tag == "w":
            entry = entry[2] if dec.vexw else entry[1]
        elif tag == "l":
            entry = entry[2] if dec.vexl else entry[1]
        elif tag == "rexw":  # name depends on REX.W alone
            if dec.rex & 8:
                dec.rex_used |= 8
                entry = entry[2]
            else:
                entry = entry[1]
        elif tag == "o66":  # 0x66-selected variant, prefix consumed
            if dec.osz:
                dec.opsize_used = True
                entry = entry[2]
            else:
                entry = entry[1]
        elif tag == "n66":  # renamed under 0x66 but prefix NOT consumed
            entry = entry[2] if dec.osz else entry[1]
        elif tag == "a32":  # 0x67-selected variant, prefix consumed
            if dec.asz:
                dec.asz_used = True
                entry = entry[2]
            else:
                entry = entry[1]
        else:
            raise _Fail()


# mnemonics whose textual prefix words follow binutils vocabulary
_STRING_REP = {"movs", "stos", "lods", "ins", "outs"}  # f3 -> "rep"
_BND_OPCODES = True  # f2 on branch opcodes renders as "bnd"


def decode_at(data, offset):
    """Decode one instruction at `offset` in `data`.

    Returns an Instruction, or None when the bytes do not form a valid
    64-bit mode instruction (including truncation at the end of `data`).
    """
    if not (0 <= offset < len(data)):
        raise IndexError("offset outside data")
    dec = _Decode(data, offset)
    try:
        dec.scan_prefixes()
        insn = _decode_body(dec)
    except _Fail:
        return None
    if insn is None:
        return None
    length = dec.cur.pos - offset
    if length > MAX_INSN_LEN:
        return None
    return insn


def _decode_body(dec: _Decode):
    cur = dec.cur
    b = cur.u8()

    if b == 0x0F:
        b2 = cur.u8()
        if b2 == 0x38:
            op = cur.u8()
            dec.opcode_bytes = (0x0F, 0x38, op)
            entry = tables.THREE_38.get(op)
            return _build(dec, entry, map_id=2)
        if b2 == 0x3A:
            op = cur.u8()
            dec.opcode_bytes = (0x0F, 0x3A, op)
            entry = tables.THREE_3A.get(op)
            return _build(dec, entry, map_id=3)
        if b2 == 0x0F:
            return _decode_3dnow(dec)
        dec.opcode_bytes = (0x0F, b2)
        entry = tables.TWO_BYTE.get(b2)
        return _build(dec, entry, map_id=1)

    if b in (0xC4, 0xC5):
        return _decode_vex(dec, b)
    if b == 0x62:
        return _decode_evex(dec)
    if 0xD8 <= b <= 0xDF:
        return _decode_x87(dec, b)
    if b == 0x9B:
        return _decode_fwait(dec)
    if b == 0x8F:
        nxt = cur.peek()
        if nxt is not None and (nxt & 0x38) != 0:
            return _decode_xop(dec)
        dec.opcode_bytes = (b,)
        return _build(dec, tables.ONE_BYTE.get(b), map_id=0)

    dec.opcode_bytes = (b,)
    entry = tables.ONE_BYTE.get(b)
    if entry is None:
        return None
    if b == 0x90:
        if dec.rep == 0xF3 and not (dec.rex & 1):
            dec.rep = None
            dec.rep_order.pop()
            dec.pfx_seq.remove(0xF3)
            return _finish(dec, "pause", [], ())
        if dec.rex == 0x48 or (not dec.rex and not dec.osz):
            if dec.rex == 0x48:
                dec.rex_used |= 8
            return _finish(dec, "nop", [], ())
        entry = "xchg +rv,rAX"
    return _build(dec, entry, map_id=0)


# fwait (0x9b) fuses with a following x87 instruction, renaming the
# no-wait forms; prefixes, REX and further 0x9b bytes may intervene
_WAIT_RENAME = {
    "fninit": "finit", "fnclex": "fclex", "fneni": "feni",
    "fndisi": "fdisi", "fnstenv": "fstenv", "fnstenvw": "fstenvw",
    "fnsave": "fsave", "fnsavew": "fsavew", "fnstsw": "fstsw",
    "fnstcw": "fstcw", "fnsetpm": "fsetpm",
}


def _decode_fwait(dec: _Decode):
    data = dec.cur.data
    p = dec.cur.pos
    scan = p
    while scan < len(data) and (data[scan] in LEGACY_PREFIXES
                                or 0x40 <= data[scan] <= 0x4F
                                or data[scan] == 0x9B):
        scan += 1
    fused = scan < len(data) and 0xD8 <= data[scan] <= 0xDF
    if fused and dec.pfx_seq and scan > p:
        # prefixes both before the fwait and between it and the x87 body
        # break the fusion in the reference; the fwait stands alone
        return _finish(dec, "fwait", [], ())
    if fused:
        probe = _Decode(data, p)
        try:
            probe.scan_prefixes()
        except _Fail:
            # dangling inner prefixes: with outer prefixes the fwait still
            # stands alone, otherwise the whole run dangles
            if dec.pfx_seq:
                return _finish(dec, "fwait", [], ())
            raise
    if fused:
        inner = decode_at(data, p)
        if inner is None or 1 + inner.length > MAX_INSN_LEN:
            raise _Fail()
        if True:
            name = inner.mnemonic
            name = _WAIT_RENAME.get(name, name)
            body = inner.text
            if inner.prefixes:
                body = body[len(" ".join(inner.prefixes)) + 1:]
            if inner.mnemonic in _WAIT_RENAME:
                body = name + body[len(inner.mnemonic):]
            words = list(_prefix_words(dec, name, list(inner.operands)))
            words += list(inner.prefixes)
            text = " ".join(words + [body]) if words else body
            return Instruction(
                offset=dec.cur.start, length=(p - dec.cur.start) + inner.length,
                text=text, mnemonic=name, kind=inner.kind,
                operands=inner.operands, prefixes=tuple(words))
    # a legacy-prefix run ending at another fwait is absorbed into this
    # instruction, prefix words and all
    q = p
    while q < len(data) and data[q] in LEGACY_PREFIXES:
        q += 1
    if q > p and q < len(data) and data[q] == 0x9B and not dec.pfx_seq:
        for b in data[p:q]:
            dec.cur.u8()
            dec.pfx_seq.append(b)
            if b == 0x66:
                dec.osz = True
                dec.n66 += 1
            elif b == 0x67:
                dec.asz = True
            elif b == 0xF0:
                dec.lock = True
            elif b in (0xF2, 0xF3):
                dec.rep = b
                dec.rep_order.append(b)
            else:
                dec.segs.append(SEG_PREFIX[b])
        return _finish(dec, "fwait", [], ())
    # otherwise standalone; a bare fwait (no preceding prefixes) dangles
    # with the rest of the run when a REX is followed by another prefix
    if not dec.pfx_seq:
        q = p
        while q < len(data) and (data[q] in LEGACY_PREFIXES
                                 or data[q] == 0x9B):
            q += 1
        if q < len(data) and 0x40 <= data[q] <= 0x4F:
            nxt = data[q + 1] if q + 1 < len(data) else None
            if nxt is not None and (nxt in LEGACY_PREFIXES
                                    or 0x40 <= nxt <= 0x4F or nxt == 0x9B):
                raise _Fail()
    return _finish(dec, "fwait", [], ())


def _decode_x87(dec: _Decode, esc):
    dec.opcode_bytes = (esc,)
    mem_tab, reg_tab = tables.X87[esc]
    m = dec.need_modrm()
    if dec.mod != 3:
        entry = mem_tab.get((m >> 3) & 7)
    else:
        entry = reg_tab.get(m)
    if entry is None:
        return None
    return _build(dec, entry, map_id=0, modrm_known=True)


def _decode_3dnow(dec: _Decode):
    dec.opcode_bytes = (0x0F, 0x0F)
    dec.need_modrm()
    ops = _operands(dec, "Pq,Qq", set())
    suffix = dec.cur.u8()
    name = tables.THREE_DNOW.get(suffix)
    if name is None:
        return None
    return _finish(dec, name, ops, ())


def _decode_vex(dec: _Decode, b):
    cur = dec.cur
    if b == 0xC5:
        p = cur.u8()
        dec.vexr = not (p & 0x80)
        map_id = 1
        dec.vexl = dec.vexll = (p >> 2) & 1
        vvvv = (~(p >> 3)) & 0xF
        pp = p & 3
    else:
        p1 = cur.u8()
        p2 = cur.u8()
        map_id = p1 & 0x1F
        if map_id not in (1, 2, 3):
            return None
        dec.vexr = not (p1 & 0x80)
        dec.vexx = not (p1 & 0x40)
        dec.vexb = not (p1 & 0x20)
        dec.vexw = bool(p2 & 0x80)
        dec.vexl = dec.vexll = (p2 >> 2) & 1
        vvvv = (~(p2 >> 3)) & 0xF
        pp = p2 & 3
    dec.vex = (map_id, pp)
    dec.ppkey = (None, "66", "f3", "f2")[pp]
    dec.vvvv = vvvv
    op = cur.u8()
    dec.opcode_bytes = ("vex", map_id, op)
    if map_id == 1 and op == 0x77:  # vzeroupper / vzeroall: no ModRM
        if vvvv != 0:
            return None
        return _finish(dec, "vzeroall" if dec.vexl else "vzeroupper", [], ())
    return _vex_common(dec, tables_exact.VEX_EXACT, map_id, pp, op,
                       evex=False)


def _decode_xop(dec: _Decode):
    cur = dec.cur
    p1 = cur.u8()
    p2 = cur.u8()
    map_id = p1 & 0x1F
    if map_id not in (8, 9, 10):
        return None
    dec.vexr = not (p1 & 0x80)
    dec.vexx = not (p1 & 0x40)
    dec.vexb = not (p1 & 0x20)
    dec.vexw = bool(p2 & 0x80)
    dec.vexl = dec.vexll = (p2 >> 2) & 1
    vvvv = (~(p2 >> 3)) & 0xF
    pp = p2 & 3
    dec.vex = (map_id, pp)
    dec.ppkey = (None, "66", "f3", "f2")[pp]
    dec.vvvv = vvvv
    op = cur.u8()
    dec.opcode_bytes = ("xop", map_id, op)
    return _vex_common(dec, tables_exact.XOP_EXACT, map_id, pp, op,
                       evex=False)


def _decode_evex(dec: _Decode):
    cur = dec.cur
    p0 = cur.u8()
    p1 = cur.u8()
    p2 = cur.u8()
    map_id = p0 & 7
    if p0 & 0x08:
        return None  # reserved bit
    if map_id not in (1, 2, 3, 5, 6):
        return None
    if not (p1 & 4):
        return None  # fixed bit
    dec.vexr = not (p0 & 0x80)
    dec.vexx = not (p0 & 0x40)
    dec.vexb = not (p0 & 0x20)
    dec.evexr2 = not (p0 & 0x10)
    dec.vexw = bool(p1 & 0x80)
    vvvv = (~(p1 >> 3)) & 0xF
    pp = p1 & 3
    dec.evexz = bool(p2 & 0x80)
    dec.vexll = (p2 >> 5) & 3
    dec.vexl = dec.vexll
    dec.evexbcst = bool(p2 & 0x10)
    dec.evexv2 = not (p2 & 8)
    dec.evexaaa = p2 & 7
    dec.vex = (map_id, pp)
    dec.ppkey = (None, "66", "f3", "f2")[pp]
    dec.vvvv = vvvv | (0x10 if dec.evexv2 else 0)
    dec.evex = True
    op = cur.u8()
    dec.opcode_bytes = ("evex", map_id, op)
    return _vex_common(dec, tables_exact.EVEX_EXACT, map_id, pp, op,
                       evex=True)


# mnemonics whose vector operands are mask registers
_KREG_PREFIXES = ("kmov", "kand", "kor", "kxor", "kxnor", "knot", "ktest",
                  "kortest", "kshift", "kadd", "kunpck")
# EVEX ops writing a mask register (ModRM.reg is k0-k7)
_MASK_DEST_PREFIXES = ("vcmp", "vpcmp", "vptestm", "vptestnm", "vfpclass")
_MASK_DEST_NAMES = frozenset({"vpmovb2m", "vpmovw2m", "vpmovd2m",
                              "vpmovq2m"})
# EVEX ops reading a mask register from ModRM.rm
_MASK_RM_NAMES = frozenset({"vpmovm2b", "vpmovm2w", "vpmovm2d", "vpmovm2q",
                            "vpbroadcastmb2q", "vpbroadcastmw2d"})
# mnemonics whose ModRM.reg operand is a general register
_GPR_DEST = frozenset({"vmovmskps", "vmovmskpd", "vpmovmskb", "vpextrw",
                       "andn", "bextr", "bzhi", "shlx", "sarx", "shrx",
                       "mulx", "pdep", "pext", "rorx", "blsr", "blsmsk",
                       "blsi"})


def _vex_common(dec: _Decode, exact, map_id, pp, op, evex):
    cur = dec.cur
    ll = dec.vexll
    round_reg = False
    if evex and ll == 3:
        # L'L=11 is only reachable as static rounding: b on a reg form
        if not dec.evexbcst:
            raise _Fail()
        ll = 2
        round_reg = True
    ent = exact.get((map_id, pp, 1 if dec.vexw else 0, ll), _EMPTY).get(op)
    if ent is None:
        raise _Fail()
    dec.need_modrm()
    if isinstance(ent, dict):
        ent = ent.get((dec.modrm >> 3) & 7)
        if ent is None:
            raise _Fail()
    mn, imm_n, forms, rflags, mflags = ent
    form = "r" if dec.mod == 3 else "m"
    vsib = forms == "s"
    if round_reg and dec.mod != 3:
        raise _Fail()
    if vsib:
        if dec.mod == 3 or dec.rm != 4:
            raise _Fail()
        flags = mflags
    else:
        if form not in forms:
            raise _Fail()
        flags = rflags if form == "r" else mflags
    if isinstance(mn, dict):
        mn = mn[form]
    if mn.startswith(_KREG_PREFIXES):
        if dec.vvvv & 8:
            raise _Fail()
        km1 = {0x41, 0x42, 0x44, 0x45, 0x46, 0x47, 0x4A, 0x4B, 0x98, 0x99}
        if dec.vexr and not (map_id == 1 and op == 0x93):
            raise _Fail()
        rm_is_k = ((map_id == 1 and (op in km1 or op == 0x93
                                     or (op == 0x90 and dec.mod == 3)))
                   or (map_id == 3 and op in (0x30, 0x31, 0x32, 0x33)))
        if rm_is_k and (dec.vexb or dec.vexx):
            raise _Fail()
    mask_dest = evex and (mn.startswith(_MASK_DEST_PREFIXES)
                          or mn in _MASK_DEST_NAMES)
    mask_rm = evex and mn in _MASK_RM_NAMES
    if mask_dest and (dec.vexr or dec.evexr2):
        raise _Fail()
    if mask_rm and (dec.vexb or dec.vexx):
        raise _Fail()
    if evex:
        if "K" in flags and dec.evexaaa == 0:
            raise _Fail()
        if dec.evexaaa and not ("k" in flags or "K" in flags):
            raise _Fail()
        if dec.evexz and not ("z" in flags and dec.evexaaa):
            raise _Fail()
        if dec.evexbcst and form == "m" and "b" not in flags:
            raise _Fail()
        if round_reg and "b" not in rflags:
            raise _Fail()
        if dec.evexbcst and form == "r" and "b" not in rflags:
            raise _Fail()
    uses_vvvv = "v" in flags or (vsib and not evex)
    if not uses_vvvv and dec.vvvv != 0:
        raise _Fail()
    # memory extent
    if vsib:
        mem_op = _vsib_operand(dec)
    elif form == "m":
        dec.parse_mem()
        mem_op = None
    else:
        mem_op = None
    # immediate bytes are owned by the entry, not the operand spec
    dec.imm_raw = cur.bytes(imm_n) if imm_n else b""
    dec.imm_pos = 0
    if vsib and "gather" in mn:
        dest = dec.reg | (16 if (evex and dec.evexr2) else 0)
        if dest == dec.vsib_index:
            raise _Fail()
        if not evex and (dest == dec.vvvv or dec.vsib_index == dec.vvvv):
            raise _Fail()
    ops = None
    if not evex:
        ops = _try_hand_spec(dec, map_id, op, imm_n)
    if ops is None:
        ops = _generic_vex_operands(dec, mn, uses_vvvv, form, mem_op, imm_n)
    if evex:
        ops = _apply_evex_marks(dec, ops, form)
    if imm_n == 1:
        immv = dec.imm_raw[0]
        if dec.cc_value is None and _is_cmp_pseudo(map_id, op, evex):
            dec.cc_value = immv
        if dec.cc_value is not None and _is_cmp_pseudo(map_id, op, evex) \
                and dec.cc_value < len(_CMP_SUFFIX_VEX):
            stem, tail = mn[:-2], mn[-2:]
            mn = f"{stem}{_CMP_SUFFIX_VEX[dec.cc_value]}{tail}"
            ops = [o for o in ops if o.kind != "imm"]
            dec.cc_value = None
        elif (map_id, op, evex) in _VPCMP_OPS and immv in _VPCMP_SUFFIX:
            stem = mn[:-1]
            tail = mn[-1]
            u = ""
            if stem.endswith("u"):
                stem, u = stem[:-1], "u"
            mn = f"{stem}{_VPCMP_SUFFIX[immv]}{u}{tail}"
            ops = [o for o in ops if o.kind != "imm"]
            dec.cc_value = None
        elif (map_id, op, evex) in _PCLMUL_OPS and immv in _PCLMUL_NAMES:
            mn = _PCLMUL_NAMES[immv].replace("pclmul", mn[:-2], 1) \
                if False else (("v" if mn.startswith("v") else "")
                               + _PCLMUL_NAMES[immv])
            ops = [o for o in ops if o.kind != "imm"]
            dec.cc_value = None
    return _finish(dec, mn, ops, ())


_VPCMP_SUFFIX = {0: "eq", 1: "lt", 2: "le", 4: "neq", 5: "nlt", 6: "nle"}
_PCLMUL_NAMES = {0x00: "pclmullqlqdq", 0x01: "pclmulhqlqdq",
                 0x10: "pclmullqhqdq", 0x11: "pclmulhqhqdq"}


_EMPTY = {}


def _vsib_operand(dec: _Decode):
    cur = dec.cur
    sib = cur.u8()
    ss = sib >> 6
    idx = ((sib >> 3) & 7) | (8 if dec.vexx else 0)
    if dec.evex and dec.evexv2:
        idx |= 16
    bse = (sib & 7) | (8 if dec.vexb else 0)
    gpr = GPR32 if dec.asz else GPR64
    dec.asz_used = True
    disp = 0
    base = None
    if (sib & 7) == 5 and dec.mod == 0:
        disp = cur.sint(4)
    else:
        base = gpr[bse]
    if dec.mod == 1:
        disp = cur.sint(1)
    elif dec.mod == 2:
        disp = cur.sint(4)
    seg = next((s for s in reversed(dec.segs) if s in ("fs", "gs")), None)
    dec.vsib_index = idx
    return Operand("mem", base=base, index=_xmmname(dec, idx),
                   scale=1 << ss, disp=disp, seg=seg,
                   size=8 if dec.vexw else 4)


def _try_hand_spec(dec: _Decode, map_id, op, imm_n):
    """Render operands via the curated spec tables; None on any mismatch."""
    if map_id not in (1, 2, 3):
        return None
    table = (tables_vex.VEX_1, tables_vex.VEX_2, tables_vex.VEX_3)[map_id - 1]
    entry = table.get(op)
    if entry is None:
        return None
    try:
        spec = _resolve(dec, entry, ())
    except _Fail:
        return None
    _, _, rest = spec.partition(" ")
    opspec = rest.partition("|")[0]
    try:
        ops = _operands(dec, opspec, set())
    except _Fail:
        return None
    if dec.imm_pos != imm_n:
        dec.imm_pos = 0
        return None
    return ops


def _generic_vex_operands(dec: _Decode, mn, uses_vvvv, form, mem_op, imm_n):
    kreg = mn.startswith(_KREG_PREFIXES)
    mask_dest = mn.startswith(_MASK_DEST_PREFIXES) or mn in _MASK_DEST_NAMES
    mask_rm = mn in _MASK_RM_NAMES
    gprd = mn in _GPR_DEST

    def vecname(idx):
        if kreg:
            return f"k{idx & 7}"
        return _xmmname(dec, idx)

    ops = []
    dest = dec.reg | (16 if (dec.evex and dec.evexr2) else 0)
    if gprd:
        ops.append(Operand("reg", reg=GPR64[dec.reg] if dec.vexw
                           else GPR32[dec.reg]))
    elif mask_dest:
        ops.append(Operand("reg", reg=f"k{dec.reg & 7}"))
    else:
        ops.append(Operand("reg", reg=vecname(dest)))
    if uses_vvvv:
        ops.append(Operand("reg", reg=vecname(dec.vvvv)))
    if mem_op is not None:
        ops.append(mem_op)
    elif form == "m":
        base, index, scale, disp, seg = dec.parse_mem()
        ll = dec.vexll if dec.vexll in (0, 1, 2) else 0
        ops.append(Operand("mem", base=base, index=index, scale=scale,
                           disp=disp, seg=seg, size=(16, 32, 64)[ll]))
    elif mask_rm:
        ops.append(Operand("reg", reg=f"k{dec.rm}"))
    else:
        idx = dec.rm | (8 if dec.vexb else 0)
        if dec.evex and dec.vexx:
            idx |= 16
        ops.append(Operand("reg", reg=vecname(idx)))
    if imm_n:
        val = int.from_bytes(dec.imm_raw, "little")
        ops.append(Operand("imm", value=val))
        dec.imm_pos = imm_n
    return ops


def _apply_evex_marks(dec: _Decode, ops, form):
    if not ops:
        return ops
    first = ops[0]
    if first.kind == "reg" and (dec.evexaaa or dec.evexz):
        marks = ""
        if dec.evexaaa:
            marks += f"{{k{dec.evexaaa}}}"
        if dec.evexz:
            marks += "{z}"
        ops = [Operand("reg", reg=first.reg + marks)] + list(ops[1:])
    if dec.evexbcst and form == "m":
        out = []
        for o in ops:
            if o.kind == "mem":
                out.append(Operand("mem", base=o.base, index=o.index,
                                   scale=o.scale, disp=o.disp, seg=o.seg,
                                   size=None))
            else:
                out.append(o)
        ops = out
    return ops


_CMP_PSEUDO_OPS = {(1, 0xC2, False), (1, 0xC2, True)}
_VPCMP_OPS = {(3, 0x1E, True), (3, 0x1F, True), (3, 0x3E, True),
              (3, 0x3F, True)}
_PCLMUL_OPS = {(3, 0x44, False), (3, 0x44, True)}


def _is_cmp_pseudo(map_id, op, evex):
    return (map_id, op, evex) in _CMP_PSEUDO_OPS


# binutils pseudo-suffixes for cmpXX immediates
_CMP_SUFFIX_SSE = ["eq", "lt", "le", "unord", "neq", "nlt", "nle", "ord"]
_CMP_SUFFIX_VEX = _CMP_SUFFIX_SSE + [
    "eq_uq", "nge", "ngt", "false", "neq_oq", "ge", "gt", "true",
    "eq_os", "lt_oq", "le_oq", "unord_s", "neq_us", "nlt_uq", "nle_uq",
    "ord_s", "eq_us", "nge_uq", "ngt_uq", "false_os", "neq_os", "ge_oq",
    "gt_oq", "true_us"]


def _build(dec: _Decode, entry, map_id, vex=False, modrm_known=False):
    if entry is None:
        return None
    spec = _resolve(dec, entry, ())
    name, _, rest = spec.partition(" ")
    opspec, _, flagstr = rest.partition("|")
    if not rest:
        opspec, flagstr = "", ""
    flags = set(flagstr.split(",")) if flagstr else set()
    if "|" in name:
        name, flagstr = name.split("|", 1)
        flags = set(flagstr.split(","))
    if "csmr" in flags:   # this form does consume the rep prefix
        dec.mandatory = "f3" if dec.rep == 0xF3 else "f2"
    ops = _operands(dec, opspec, flags)
    if dec.vex is not None and not dec.vvvv_used and dec.vvvv != 0:
        raise _Fail()
    if dec.cc_value is not None:
        table = _CMP_SUFFIX_VEX if dec.vex is not None else _CMP_SUFFIX_SSE
        if dec.cc_value < len(table):
            stem, tail = name[:-2], name[-2:]  # cmpps -> cmp + ps
            name = f"{stem}{table[dec.cc_value]}{tail}"
            ops = ops[:-1]
    if (name == "pclmulqdq" and ops and ops[-1].kind == "imm"
            and ops[-1].value in _PCLMUL_NAMES):
        name = _PCLMUL_NAMES[ops[-1].value]
        ops = ops[:-1]
    if name in ("bndldx", "bndstx", "bndmk"):
        if any(op.kind == "mem" and op.base in ("rip", "eip")
               for op in ops):
            raise _Fail()
    return _finish(dec, name, ops, flags)


# ---------------------------------------------------------------------------
# operand construction
# ---------------------------------------------------------------------------

def _gpr(dec, idx, size):
    if size == 8:
        return GPR64[idx]
    if size == 4:
        return GPR32[idx]
    if size == 2:
        return GPR16[idx]
    if dec.rex:
        return GPR8_REX[idx]
    return GPR8_NOREX[idx & 7]


def _xmmname(dec, idx):
    ll = getattr(dec, "vexll", 0) if dec.vex is not None else 0
    prefix = ("xmm", "ymm", "zmm")[ll if ll in (0, 1, 2) else 0]
    return f"{prefix}{idx}"


def _size_letter(dec, letter, flags):
    if letter == "b":
        return 1
    if letter == "w":
        return 2
    if letter == "d":
        return 4
    if letter == "q":
        return 8
    if letter == "v":
        return dec.opsize(flags)
    if letter == "z":
        dec.opsize_used = True
        sz = dec.opsize(flags)
        return 2 if sz == 2 else 4
    if letter == "y":
        if dec.rexw:
            dec.rex_used |= 8
            return 8
        return 4
    return None


def _operands(dec: _Decode, opspec, flags):
    if not opspec:
        return []
    out = []
    for token in opspec.split(","):
        out.append(_operand(dec, token, flags))
    return out


def _operand(dec: _Decode, token, flags):
    cur = dec.cur

    # implicit registers and literals
    if token == "1":
        return Operand("imm", value=1)
    if token in ("AL", "CL", "DX", "AX"):
        return Operand("reg", reg=token.lower())
    if token == "eAX":
        sz = dec.opsize(flags)
        return Operand("reg", reg=_gpr(dec, 0, 4 if sz == 8 else sz))
    if token == "rAX":
        sz = dec.opsize(flags)
        return Operand("reg", reg=_gpr(dec, 0, sz))
    if token in ("ES", "CS", "SS", "DS", "FS", "GS"):
        return Operand("reg", reg=token.lower())
    if token == "ST":
        return Operand("reg", reg="st")
    if token.startswith("ST") and token[2:].isdigit():
        return Operand("reg", reg=f"st({token[2:]})")
    if token == "XL":  # xlat implicit [rbx]
        base = "ebx" if dec.asz else "rbx"
        return Operand("mem", base=base, size=1,
                       seg=next((s for s in reversed(dec.segs)
                                 if s in ("fs", "gs")), None))

    letter, size_l = token[0], token[1:]

    if letter == "+":  # register encoded in opcode low bits
        idx = dec.opcode_bytes[-1] & 7
        if dec.rex & 1:
            idx |= 8
            dec.rex_used |= 1
        if size_l == "rb":
            return Operand("reg", reg=_gpr(dec, idx, 1))
        sz = dec.opsize(flags)
        return Operand("reg", reg=_gpr(dec, idx, sz))

    if letter == "I":
        if dec.imm_raw is not None:
            if size_l != "b" or dec.imm_pos + 1 > len(dec.imm_raw):
                raise _Fail()
            v = dec.imm_raw[dec.imm_pos]
            dec.imm_pos += 1
            return Operand("imm", value=v)
        if size_l == "b":
            return Operand("imm", value=cur.uint(1))
        if size_l == "w":
            return Operand("imm", value=cur.uint(2))
        if size_l == "z":
            n = dec.immsize_z(flags)
            dec.opsize_used = True
            sz = dec.opsize(flags)
            return Operand("imm", value=_mask(cur.sint(n), sz))
        if size_l == "v":
            sz = dec.opsize(flags)
            return Operand("imm", value=cur.uint(sz))
        raise _Fail()

    if token.startswith("sIb"):
        sz = dec.opsize(flags) if token == "sIbv" else 1
        return Operand("imm", value=_mask(cur.sint(1), sz))

    if letter == "J":
        if size_l == "b":
            rel = cur.sint(1)
        else:
            n = 2 if (dec.osz and not dec.rexw) else 4
            if n == 2:
                dec.opsize_used = True
            rel = cur.sint(n)
        target = (dec.cur.pos - dec.cur.start + rel + dec.cur.start) & ((1 << 64) - 1)
        return Operand("imm", value=target)

    if letter == "O":  # moffs
        n = 4 if dec.asz else 8
        addr = cur.uint(n)
        sz = 1 if size_l == "b" else dec.opsize(flags)
        seg = next((s for s in reversed(dec.segs) if s in ("fs", "gs")), None)
        return Operand("mem", disp=addr, size=sz, seg=seg)

    # everything below needs ModRM
    dec.need_modrm()
    mod, reg, rm = dec.mod, dec.reg, dec.rm

    if token == "CC":  # cmpXX immediate with pseudo-mnemonic rewrite
        if dec.imm_raw is not None:
            if dec.imm_pos + 1 > len(dec.imm_raw):
                raise _Fail()
            v = dec.imm_raw[dec.imm_pos]
            dec.imm_pos += 1
        else:
            v = cur.u8()
        dec.cc_value = v
        return Operand("imm", value=v)
    if token == "GM":  # gather memory operand: SIB with vector index
        if mod == 3 or rm != 4:
            raise _Fail()
        sib = cur.u8()
        dec.rex_used |= 3
        ss = sib >> 6
        rexx = 1 if (dec.vex is not None and dec.vexx) else 0
        rexb = 1 if (dec.vex is not None and dec.vexb) else 0
        idx = ((sib >> 3) & 7) | (8 if rexx else 0)
        bse = (sib & 7) | (8 if rexb else 0)
        gpr = GPR32 if dec.asz else GPR64
        disp = 0
        base = None
        if (sib & 7) == 5 and mod == 0:
            disp = dec.cur.sint(4)
        else:
            base = gpr[bse]
        if mod == 1:
            disp = dec.cur.sint(1)
        elif mod == 2:
            disp = dec.cur.sint(4)
        seg = next((s for s in reversed(dec.segs) if s in ("fs", "gs")), None)
        dec.vvvv_used = True  # gathers use vvvv as the mask source
        return Operand("mem", base=base, index=_xmmname(dec, idx),
                       scale=1 << ss, disp=disp, seg=seg,
                       size=4 if not dec.vexw else 8)
    if letter == "G":
        dec.rex_used |= 4
        sz = _size_letter(dec, size_l or "v", flags)
        return Operand("reg", reg=_gpr(dec, reg, sz))
    if letter == "S":
        if ((dec.modrm >> 3) & 7) > 5:
            return Operand("reg", reg="?")
        return Operand("reg", reg=SEGREG[(dec.modrm >> 3) & 7])
    if token == "RC":
        dec.rex_used |= 1
        return Operand("reg", reg=GPR64[rm | (8 if dec.rex & 1 else 0)])
    if letter == "C":
        dec.rex_used |= 4
        return Operand("reg", reg=f"cr{reg}")
    if letter == "D":
        dec.rex_used |= 4
        return Operand("reg", reg=f"dr{reg}")
    if letter == "P":
        return Operand("reg", reg=f"mm{(dec.modrm >> 3) & 7}")
    if letter == "V":
        idx = reg | (16 if (dec.evex and dec.evexr2) else 0)
        return Operand("reg", reg=_xmmname(dec, idx))
    if letter == "H":  # vex.vvvv xmm
        dec.vvvv_used = True
        return Operand("reg", reg=_xmmname(dec, dec.vvvv))
    if letter == "B":
        if size_l == "!":
            if dec.reg > 3:
                raise _Fail()
            return Operand("reg", reg=f"bnd{dec.reg}")
        dec.vvvv_used = True
        sz = 8 if dec.rexw else 4
        return Operand("reg", reg=_gpr(dec, dec.vvvv, sz))
    if letter == "K":
        if size_l == "r":
            return Operand("reg", reg=f"k{(dec.modrm >> 3) & 7}")
        if size_l == "v":
            dec.vvvv_used = True
            return Operand("reg", reg=f"k{dec.vvvv & 7}")
        if size_l in ("m", "q"):  # rm: mask register or memory
            if mod == 3:
                return Operand("reg", reg=f"k{rm}")
            if size_l == "q":
                raise _Fail()
            base, index, scale, disp, seg = dec.parse_mem()
            return Operand("mem", base=base, index=index, scale=scale,
                           disp=disp, seg=seg, size=None)
        if mod == 3:
            return Operand("reg", reg=f"k{rm}")
        raise _Fail()
    if letter == "L":  # is4
        if dec.imm_raw is not None:
            if dec.imm_pos + 1 > len(dec.imm_raw):
                raise _Fail()
            b = dec.imm_raw[dec.imm_pos]
            dec.imm_pos += 1
        else:
            b = cur.u8()
        return Operand("reg", reg=_xmmname(dec, (b >> 4) & 0xF))

    # r/m family
    if letter in ("E", "M", "R", "Q", "N", "W", "U"):
        if letter in ("M",) and mod == 3:
            raise _Fail()
        if letter in ("R", "N", "U") and mod != 3:
            raise _Fail()
        if mod == 3:
            if letter in ("Q", "N"):
                return Operand("reg", reg=f"mm{rm}")
            if letter in ("W", "U"):
                idx = rm | (8 if (dec.vex is not None and dec.vexb) else
                            (8 if dec.rex & 1 else 0))
                if dec.evex and dec.vexx:
                    idx |= 16  # xmm16-31 exist under EVEX only
                dec.rex_used |= 1
                return Operand("reg", reg=_xmmname(dec, idx))
            if letter == "E" and size_l == "!":
                if (rm | (8 if dec.rex & 1 else 0)) > 3:
                    raise _Fail()
                return Operand("reg", reg=f"bnd{rm}")
            dec.rex_used |= 1
            sz = _size_letter(dec, size_l or "v", flags)
            return Operand("reg", reg=_gpr(dec, rm | (8 if dec.rex & 1 else 0), sz))
        base, index, scale, disp, seg = dec.parse_mem()
        size = _mem_width(dec, letter, size_l, flags)
        return Operand("mem", base=base, index=index, scale=scale,
                       disp=disp, seg=seg, size=size)

    raise _Fail()


def _mem_width(dec, letter, size_l, flags):
    if letter in ("Q", "N"):
        return 8
    if letter in ("W", "U", "V"):
        if size_l == "ss":
            return 4
        if size_l == "sd":
            return 8
        if size_l == "d":
            return 4
        if size_l == "w":
            return 2
        if size_l == "q":
            return 8
        ll = getattr(dec, "vexll", 0) if dec.vex is not None else 0
        return (16, 32, 64)[ll if ll in (0, 1, 2) else 0]
    if size_l == "p":  # far pointer
        sz = dec.opsize(flags)
        return {2: 4, 4: 6, 8: 10}[sz]
    if size_l == "t":
        return 10
    if size_l == "s":
        return None
    if size_l == "x":
        ll = getattr(dec, "vexll", 0) if dec.vex is not None else 0
        return (16, 32, 64)[ll if ll in (0, 1, 2) else 0]
    if size_l == "!":
        return None
    if not size_l:
        return None  # untyped (lea, invlpg, ...)
    return _size_letter(dec, size_l, flags)


# ---------------------------------------------------------------------------
# text assembly and kind classification
# ---------------------------------------------------------------------------

_HLE_NAMES = frozenset({"xchg", "add", "adc", "and", "btc", "btr", "bts",
                        "cmpxchg", "dec", "inc", "neg", "not", "or", "sbb",
                        "sub", "xor", "xadd"})

# f2-prefixed branches render as MPX "bnd"
_BND_NAMES = frozenset({"jo", "jno", "jb", "jae", "je", "jne", "jbe", "ja",
                        "js", "jns", "jp", "jnp", "jl", "jge", "jle", "jg",
                        "jmp", "jmpw", "call", "callw", "ret", "retw"})


def _prefix_words(dec: _Decode, name, ops):
    """Render unconsumed prefixes as words, in original byte order."""
    base = name.rstrip("bwdq")
    mem_dest = bool(ops) and ops[0].kind == "mem"
    hle_ok = name in _HLE_NAMES
    hle = mem_dest and ((dec.lock and hle_ok) or name == "xchg")
    consumed_rep = dec.rep if dec.mandatory in ("f2", "f3") else None
    rep_seen = 0
    n_rep = len(dec.rep_order)
    mem_op = any(op.kind == "mem" for op in ops)
    consume_66 = (dec.mandatory == "66"
                  or (dec.opsize_used and dec.osz and not dec.rexw))
    seen_66 = 0

    words = []
    for b in dec.pfx_seq:
        if b == 0xF0:
            words.append("lock")
        elif b in (0xF2, 0xF3):
            rep_seen += 1
            if consumed_rep is not None and rep_seen == n_rep:
                continue  # the selecting prefix is part of the opcode
            if hle or (b == 0xF3 and mem_dest and name == "mov"
                       and dec.opcode_bytes[0] in (0x88, 0x89, 0xC6, 0xC7)):
                words.append("xacquire" if b == 0xF2 else "xrelease")
            elif b == 0xF2 and name in _BND_NAMES:
                words.append("bnd")
            elif b == 0xF3 and base in _STRING_REP:
                words.append("rep")
            elif b == 0xF3 and base in ("cmps", "scas"):
                words.append("repz")
            else:
                words.append("repnz" if b == 0xF2 else "repz")
        elif b == 0x66:
            seen_66 += 1
            if consume_66 and seen_66 == dec.n66:
                continue  # the effective one is the last
            words.append("data16")
        elif b == 0x67:
            if not dec.asz_used:
                words.append("addr32")
        else:
            seg = SEG_PREFIX[b]
            if seg in ("fs", "gs") and mem_op:
                continue  # rendered inside the memory operand
            words.append(seg)
    return words


def _finish(dec: _Decode, name, ops, flags):
    words = _prefix_words(dec, name, ops)
    rendered = [op.render() for op in ops]
    body = name if not rendered else name + " " + ", ".join(rendered)
    text = " ".join(words + [body]) if words else body
    kind = _classify(dec, name, ops)
    return Instruction(
        offset=dec.cur.start,
        length=dec.cur.pos - dec.cur.start,
        text=text,
        mnemonic=name,
        kind=kind,
        operands=tuple(ops),
        prefixes=tuple(words),
    )


_PRIV_MNEMONICS = frozenset({
    "hlt", "cli", "sti", "in", "out", "insb", "insw", "insd",
    "outsb", "outsw", "outsd", "clts", "invd", "wbinvd", "wrmsr", "rdmsr",
    "rdpmc", "rsm", "swapgs", "xsetbv", "lgdt", "lidt", "lldt", "lmsw",
    "ltr", "invlpg", "invlpga", "invlpgb", "invept", "invvpid", "invpcid",
    "vmcall", "vmlaunch", "vmresume", "vmxoff", "vmxon", "vmclear",
    "vmptrld", "vmptrst", "vmread", "vmwrite", "vmfunc", "vmrun", "vmmcall",
    "vmload", "vmsave", "stgi", "clgi", "skinit", "monitor", "mwait",
    "monitorx", "mwaitx", "sysret", "sysexit", "sysenter", "getsec",
    "encls", "enclu", "enclv", "pconfig", "tlbsync", "psmash", "pvalidate",
    "rmpadjust", "rmpupdate", "wrpkru", "rdpkru", "clzero", "rdpru",
    "serialize", "sldt", "str", "smsw", "verr", "verw", "clac", "stac",
    "xend", "xtest", "xgetbv",
})

_INVALID_MNEMONICS = frozenset({
    "retf", "iret", "iretw", "iretq", "int3", "int1", "ud0", "ud1", "ud2",
    "fneni", "fndisi", "fsetpm",
})


def _classify(dec: _Decode, name, ops):
    opb = dec.opcode_bytes
    if opb and opb[0] in (0xC3, 0xC2):
        return RET if opb[0] == 0xC3 else RET_IMM
    if opb == (0x0F, 0x05):
        return SYSCALL
    if opb and opb[0] == 0xCD:
        return INT80 if ops and ops[0].value == 0x80 else INVALID_FOR_GADGET
    if opb and opb[0] == 0xFF:
        r = (dec.modrm >> 3) & 7
        if r == 2:
            return CALL_INDIRECT
        if r == 3:
            return INVALID_FOR_GADGET
        if r == 4:
            return JMP_INDIRECT
        if r == 5:
            return INVALID_FOR_GADGET
        return PLAIN
    if opb and opb[0] == 0xE8:
        return CALL_DIRECT
    if name in ("jmp", "jmpw", "call", "callw"):
        return BRANCH  # direct relative forms only reach here
    if name.startswith("j") and name != "jmp":  # jcc, jrcxz
        return BRANCH
    if name in ("loop", "loope", "loopne", "xbegin"):
        return BRANCH
    if name.startswith("cmov") or name.startswith("set") and name not in ("setssbsy",):
        return PLAIN
    if name in _INVALID_MNEMONICS:
        return INVALID_FOR_GADGET
    if name in _PRIV_MNEMONICS:
        return PRIVILEGED
    if opb and opb[0] == 0x0F and len(opb) > 1 and opb[1] in (0x20, 0x21, 0x22, 0x23):
        return PRIVILEGED
    return PLAIN
