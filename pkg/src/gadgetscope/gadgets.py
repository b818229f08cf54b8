"""Harvest the unique gadget population of a binary image.

A gadget is a straight-line instruction sequence ending in a terminator
(ret, ret imm16, indirect jmp/call, syscall, int 0x80), decoded from any
byte offset.  Harvesting decodes each region offset once, then links
decode results into chains: a start offset yields a gadget exactly when
its forward decode chain reaches a terminator through plain instructions
within the configured length bound.  Identity is the canonical text of
the instruction sequence, so one encoding of a sequence equals any other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import disasm
from .elfimage import BinaryImage
from .errors import UnsupportedArchError

_TERMINATORS = disasm.TERMINATOR_KINDS


@dataclass(frozen=True)
class ScanParams:
    max_gadget_len: int = 10
    include_int80: bool = True
    align: int = 1

    def __post_init__(self):
        if self.max_gadget_len < 1:
            raise ValueError("max_gadget_len must be >= 1")
        if self.align < 1:
            raise ValueError("align must be >= 1")

    def to_dict(self):
        return {"max_gadget_len": self.max_gadget_len,
                "include_int80": self.include_int80, "align": self.align}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass(frozen=True)
class Gadget:
    """One unique gadget: body instructions plus terminator."""
    address: int
    instructions: tuple[str, ...]
    terminator: str

    @property
    def identity(self) -> str:
        return " ; ".join(self.instructions)

    @property
    def body(self) -> tuple[str, ...]:
        return self.instructions[:-1]


def gadget_identity(g: Gadget) -> str:
    """Joined canonical instruction texts; address-independent."""
    return g.identity


class GadgetSet:
    """Deduplicated gadgets for one image, iterated in identity order."""

    def __init__(self, source: str, params: ScanParams, gadgets=()):
        self.source = source
        self.params = params
        self._by_identity: dict[str, Gadget] = {}
        for g in gadgets:
            self.add(g)

    def add(self, g: Gadget):
        prev = self._by_identity.get(g.identity)
        if prev is None or g.address < prev.address:
            self._by_identity[g.identity] = g

    def __len__(self):
        return len(self._by_identity)

    def __iter__(self):
        for identity in sorted(self._by_identity):
            yield self._by_identity[identity]

    def __contains__(self, identity: str):
        return identity in self._by_identity

    def get(self, identity: str) -> Gadget | None:
        return self._by_identity.get(identity)

    @property
    def identities(self) -> set[str]:
        return set(self._by_identity)

    def to_dict(self):
        return {
            "source": self.source,
            "params": self.params.to_dict(),
            "gadgets": [{"identity": g.identity,
                         "address": hex(g.address),
                         "terminator": g.terminator,
                         "instructions": list(g.instructions)}
                        for g in self],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_dict(cls, d) -> "GadgetSet":
        gs = cls(d["source"], ScanParams.from_dict(d["params"]))
        for item in d["gadgets"]:
            gs.add(Gadget(address=int(item["address"], 16),
                          instructions=tuple(item["instructions"]),
                          terminator=item["terminator"]))
        return gs

    @classmethod
    def from_json(cls, text: str) -> "GadgetSet":
        return cls.from_dict(json.loads(text))


def _terminator_kind_ok(kind: str, params: ScanParams) -> bool:
    if kind not in _TERMINATORS:
        return False
    if kind == disasm.INT80 and not params.include_int80:
        return False
    return True


def scan_region(base: int, data: bytes, params: ScanParams):
    """Yield every gadget in one region (all valid start offsets)."""
    n = len(data)
    insns = [None] * n
    for off in range(n):
        insns[off] = disasm.decode_at(data, off)
    # steps[o]: instruction count from o to the end of its gadget chain,
    # or 0 when no terminator is reachable within the length bound
    steps = [0] * (n + 1)
    for off in range(n - 1, -1, -1):
        insn = insns[off]
        if insn is None:
            continue
        if _terminator_kind_ok(insn.kind, params):
            steps[off] = 1
        elif insn.kind == disasm.PLAIN:
            nxt = off + insn.length
            if nxt <= n and steps[nxt] and steps[nxt] < params.max_gadget_len:
                steps[off] = steps[nxt] + 1
    for off in range(0, n, params.align):
        if not steps[off]:
            continue
        texts = []
        o = off
        for _ in range(steps[off]):
            texts.append(insns[o].text)
            last_kind = insns[o].kind
            o += insns[o].length
        yield Gadget(address=base + off,
                     instructions=tuple(texts),
                     terminator=last_kind)


def harvest_gadgets(image: BinaryImage, params: ScanParams = None) -> GadgetSet:
    """All unique gadgets of an image, deduplicated by identity."""
    if image.arch != "x86-64":
        raise UnsupportedArchError(f"{image.path}: arch {image.arch}")
    params = params or ScanParams()
    gs = GadgetSet(source=image.path, params=params)
    for region in image.regions:
        for g in scan_region(region.base, region.data, params):
            gs.add(g)
    return gs
