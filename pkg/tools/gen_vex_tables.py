#!/usr/bin/env python3
"""Generate exact VEX/EVEX acceptance tables from the reference
disassembler (GNU objdump, Intel syntax).

Enumerates every (map, pp, W, L, opcode, modrm.reg) combination in both
register and memory ModRM forms, sweeps the EVEX mask/zero/broadcast and
vvvv fields, and records what the installed binutils accepts together
with the mnemonic it prints.  The output module pins the decoder to the
reference's acceptance behavior; regenerate after a binutils upgrade.

Usage: python tools/gen_vex_tables.py > src/gadgetscope/disasm/tables_exact.py
"""
import re
import subprocess
import sys
from collections import defaultdict

LINE = re.compile(r"^\s*([0-9a-f]+):\t((?:[0-9a-f]{2} )+)\s*\t?(.*)$")
SLED = b"\x90" * 18


def objdump_windows(windows):
    blob = bytearray()
    starts = []
    for w in windows:
        starts.append(len(blob))
        blob += w
        blob += SLED
    with open("/tmp/genvex.bin", "wb") as f:
        f.write(bytes(blob))
    out = subprocess.run(
        ["objdump", "-D", "-b", "binary", "-m", "i386:x86-64", "-M", "intel",
         "/tmp/genvex.bin"],
        capture_output=True, text=True, check=True).stdout
    insns = {}
    last = None
    for line in out.splitlines():
        m = LINE.match(line)
        if not m:
            continue
        off = int(m.group(1), 16)
        nbytes = len(m.group(2).split())
        text = m.group(3).strip()
        if text == "" and last is not None:
            insns[last][0] += nbytes
            continue
        insns[off] = [nbytes, text]
        last = off
    return [insns.get(s) for s in starts]


def mnemonic_of(entry):
    if entry is None:
        return None
    _, text = entry
    if "(bad)" in text or "bad}" in text:
        return None
    toks = text.split()
    i = 0
    while i < len(toks) and toks[i].startswith("{"):
        i += 1
    if i >= len(toks):
        return None
    return toks[i]


def vex_bytes(m, pp, w, l, op, modrm, vvvv=0):
    lead = 0x8F if m >= 8 else 0xC4    # XOP maps ride the 0x8f escape
    p1 = 0xE0 | m                      # R̄X̄B̄ = 111 -> low registers
    p2 = (w << 7) | (((~vvvv) & 0xF) << 3) | (l << 2) | pp
    return bytes([lead, p1, p2, op, modrm])


def evex_bytes(m, pp, w, ll, op, modrm, vvvv=0, aaa=0, z=0, b=0, vp=1):
    p0 = 0xF0 | m                      # R̄X̄B̄R̄' = 1111, P0[3] reserved 0
    p1 = (w << 7) | (((~vvvv) & 0xF) << 3) | 0x04 | pp
    p2 = (z << 7) | (ll << 5) | (b << 4) | ((vp & 1) << 3) | aaa
    return bytes([0x62, p0, p1, p2, op, modrm])


IMM_PAD = bytes([0x70, 0x11, 0x22, 0x33])
SIB_BYTE = 0x0F  # [rdi + reg1*1]


def enumerate_space(evex, maps=None):
    combos = []
    wins = []
    lls = (0, 1, 2) if evex else (0, 1)
    if maps is None:
        maps = (1, 2, 3, 5, 6) if evex else (1, 2, 3)
    for m in maps:
        for pp in range(4):
            for w in (0, 1):
                for ll in lls:
                    for op in range(256):
                        for r in range(8):
                            # two VSIB probes with different index and
                            # mask registers dodge operand-distinctness #UD
                            variants = [("r", bytes([0xC1 | (r << 3)]), 0, 0),
                                        ("m", bytes([0x01 | (r << 3)]), 0, 0),
                                        ("s", bytes([0x04 | (r << 3),
                                                     0x0F]), 0, 6),
                                        ("s2", bytes([0x04 | (r << 3),
                                                      0x17]), 0, 3)]
                            if evex:
                                variants.append(
                                    ("sk", bytes([0x04 | (r << 3),
                                                  0x0F]), 1, 0))
                                variants.append(
                                    ("sk2", bytes([0x04 | (r << 3),
                                                   0x17]), 1, 0))
                            for form, tail, aaa, vv in variants:
                                if evex:
                                    wb = evex_bytes(m, pp, w, ll, op,
                                                    tail[0], aaa=aaa, vvvv=vv)
                                else:
                                    wb = vex_bytes(m, pp, w, ll, op, tail[0],
                                                   vvvv=vv)
                                wb += tail[1:]
                                combos.append((m, pp, w, ll, op, r, form))
                                wins.append(wb + IMM_PAD)
    results = {}
    B = 8192
    for i in range(0, len(wins), B):
        out = objdump_windows(wins[i:i + B])
        for j, entry in enumerate(out):
            key = combos[i + j]
            mn = mnemonic_of(entry)
            if mn is None:
                continue
            base_len = ((6 if evex else 5)
                        + (1 if key[6] in ("s", "s2", "sk", "sk2") else 0))
            win_len = base_len + len(IMM_PAD)
            nbytes = entry[0]
            if nbytes > win_len:       # ran into the sled: memory form etc.
                continue
            has_imm = nbytes - base_len
            if has_imm not in (0, 1, 4):
                continue
            results[key] = (mn, has_imm)
    return results


def sweep_flags(base, evex):
    """For each valid combo, probe vvvv!=0 (both) and EVEX aaa/z/b."""
    keys = [k for k in sorted(base) if k[6] in ("r", "m")]
    probes = []
    tags = []
    for key in keys:
        m, pp, w, ll, op, r, form = key
        modrm = (0xC1 if form == "r" else 0x01) | (r << 3)
        if evex:
            probes.append(evex_bytes(m, pp, w, ll, op, modrm, vvvv=5) + IMM_PAD)
            tags.append((key, "vvvv"))
            probes.append(evex_bytes(m, pp, w, ll, op, modrm, aaa=1) + IMM_PAD)
            tags.append((key, "mask"))
            probes.append(evex_bytes(m, pp, w, ll, op, modrm, aaa=1, z=1) + IMM_PAD)
            tags.append((key, "zmask"))
            probes.append(evex_bytes(m, pp, w, ll, op, modrm, b=1) + IMM_PAD)
            tags.append((key, "bcast"))
        else:
            probes.append(vex_bytes(m, pp, w, ll, op, modrm, vvvv=5) + IMM_PAD)
            tags.append((key, "vvvv"))
    flags = defaultdict(set)
    B = 8192
    for i in range(0, len(probes), B):
        out = objdump_windows(probes[i:i + B])
        for j, entry in enumerate(out):
            key, tag = tags[i + j]
            if mnemonic_of(entry) is not None:
                flags[key].add(tag)
    return flags


def compress(results, flags, evex):
    """Key tables by (map, pp, w, ll) -> op -> (reg,form)-aware entries.

    Forms reduce to: 'rm' (any ModRM), 'm' (memory only), 'r' (register
    only), 's' (vector-index memory only).  A trailing 'K' flag marks
    mask-required encodings (valid only with EVEX.aaa != 0).
    """
    # fold the s/sk probes into per-(m,pp,w,ll,op,r) form sets
    folded = defaultdict(dict)
    for (m, pp, w, ll, op, r, form), val in sorted(results.items()):
        folded[(m, pp, w, ll, op, r)][form] = val
    table = defaultdict(dict)
    for (m, pp, w, ll, op, r), by_form in folded.items():
        if "r" in by_form or "m" in by_form:
            forms = ("rm" if ("r" in by_form and "m" in by_form)
                     else ("r" if "r" in by_form else "m"))
            mn, has_imm = by_form.get("m", by_form.get("r"))
            extra = ""
        elif "s" in by_form or "s2" in by_form:
            forms, extra = "s", ""
            mn, has_imm = by_form.get("s", by_form.get("s2"))
        elif "sk" in by_form or "sk2" in by_form:
            forms, extra = "s", "K"
            mn, has_imm = by_form.get("sk", by_form.get("sk2"))
        else:
            continue
        def fl(form):
            f = flags.get((m, pp, w, ll, op, r, form), set())
            return "".join(sorted(
                ("v" if "vvvv" in f else "") +
                ("k" if "mask" in f else "") +
                ("z" if "zmask" in f else "") +
                ("b" if "bcast" in f else "") + extra))
        name = mn
        if ("r" in by_form and "m" in by_form
                and by_form["r"][0] != by_form["m"][0]):
            name = {"r": by_form["r"][0], "m": by_form["m"][0]}
        ent = (name, has_imm, forms, fl("r"), fl("m"))
        table[(m, pp, w, ll)].setdefault(op, {})[r] = ent
    out = {}
    for sel, ops in table.items():
        out[sel] = {}
        for op, sub in ops.items():
            ents = set(map(repr, sub.values()))
            if len(ents) == 1 and len(sub) == 8:
                out[sel][op] = next(iter(sub.values()))
            else:
                out[sel][op] = dict(sub)
    return out


def main():
    vex = compress(*(lambda b: (b, sweep_flags(b, False)))(
        enumerate_space(False)), evex=False)
    xop = compress(*(lambda b: (b, sweep_flags(b, False)))(
        enumerate_space(False, maps=(8, 9, 10))), evex=False)
    evx = compress(*(lambda b: (b, sweep_flags(b, True)))(
        enumerate_space(True)), evex=True)
    print('"""Exact VEX/EVEX acceptance tables.')
    print()
    print("Generated by tools/gen_vex_tables.py against the reference")
    print("disassembler (GNU binutils objdump).  Keyed by")
    print("(map, pp, W, L) -> opcode -> (mnemonic, imm_bytes, forms, flags)")
    print('or per-(reg,form) dicts for group opcodes."""')
    print()
    print("VEX_EXACT = \\")
    print(repr(dict(sorted(vex.items()))))
    print()
    print("XOP_EXACT = \\")
    print(repr(dict(sorted(xop.items()))))
    print()
    print("EVEX_EXACT = \\")
    print(repr(dict(sorted(evx.items()))))


if __name__ == "__main__":
    main()
