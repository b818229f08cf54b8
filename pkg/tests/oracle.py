"""Reference-disassembler oracle helpers.

GNU objdump (Intel syntax) serves as the independent reference.  All
windows are packed into one file separated by 18-byte NOP sleds, so a
single objdump run yields the reference decode at every window start:
an instruction overrunning its window consumed sled bytes and counts as
truncated-invalid, exactly like the decoder's in-window failure.
"""

import random
import re
import subprocess

from gadgetscope.disasm import decode_at
from gadgetscope.disasm.canon import core_mnemonic

_LINE = re.compile(r"^\s*([0-9a-f]+):\t((?:[0-9a-f]{2} )+)\s*\t?(.*)$")
_SLED = b"\x90" * 18


def reference_decode_windows(windows, tmpdir):
    """Reference (validity, length, core-mnemonic) at each window start."""
    blob = bytearray()
    starts = []
    for w in windows:
        starts.append(len(blob))
        blob += w
        blob += _SLED
    path = f"{tmpdir}/oracle-windows.bin"
    with open(path, "wb") as f:
        f.write(bytes(blob))
    out = subprocess.run(
        ["objdump", "-D", "-b", "binary", "-m", "i386:x86-64", "-M", "intel",
         path],
        capture_output=True, text=True, check=True).stdout
    insns = {}
    last = None
    for line in out.splitlines():
        m = _LINE.match(line)
        if not m:
            continue
        off = int(m.group(1), 16)
        nbytes = len(m.group(2).split())
        text = m.group(3).strip()
        if text == "" and last is not None:
            insns[last][0] += nbytes     # byte-continuation line
            continue
        insns[off] = [nbytes, text]
        last = off
    verdicts = []
    for i, s in enumerate(starts):
        entry = insns.get(s)
        if entry is None:
            verdicts.append(None)        # unreachable with the sled layout
            continue
        nbytes, text = entry
        if "(bad)" in text or "bad}" in text or ".byte" in text:
            verdicts.append(("invalid",))
            continue
        core = core_mnemonic(text)
        if core is None:                 # dangling-prefix line
            verdicts.append(("invalid",))
            continue
        if nbytes > len(windows[i]):     # ran into the sled
            verdicts.append(("invalid",))
            continue
        verdicts.append(("valid", nbytes, core))
    return verdicts


def decoder_verdict(window):
    insn = decode_at(window, 0)
    if insn is None:
        return ("invalid",)
    return ("valid", insn.length, core_mnemonic(insn.text))


def random_windows(n, seed, minlen=1, maxlen=15):
    rng = random.Random(seed)
    return [bytes(rng.getrandbits(8) for _ in range(rng.randint(minlen,
                                                                maxlen)))
            for _ in range(n)]


def compare_windows(windows, tmpdir):
    """Return the list of (window, reference, mine) disagreements."""
    refs = reference_decode_windows(windows, tmpdir)
    bad = []
    for w, ref in zip(windows, refs):
        if ref is None:
            continue
        mine = decoder_verdict(w)
        if mine != ref:
            bad.append((w.hex(), ref, mine))
    return bad
