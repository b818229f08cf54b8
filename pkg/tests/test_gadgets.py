"""Harvester tests: Fig-style fixtures plus brute-force oracle equality."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from gadgetscope import disasm
from gadgetscope.elfimage import BinaryImage, Region
from gadgetscope.errors import UnsupportedArchError
from gadgetscope.gadgets import (Gadget, GadgetSet, ScanParams,
                                 gadget_identity, harvest_gadgets,
                                 scan_region)

from conftest import FIG3_BYTES, FIG4_BYTES


def brute_force_gadgets(base, data, params):
    """Independent enumeration: walk forward from every start offset."""
    found = []
    for start in range(0, len(data), params.align):
        texts = []
        off = start
        ok = False
        for _ in range(params.max_gadget_len):
            if off >= len(data):
                break
            insn = disasm.decode_at(data, off)
            if insn is None or off + insn.length > len(data):
                break
            if insn.kind in disasm.TERMINATOR_KINDS:
                if insn.kind == disasm.INT80 and not params.include_int80:
                    break
                texts.append(insn.text)
                found.append(Gadget(address=base + start,
                                    instructions=tuple(texts),
                                    terminator=insn.kind))
                ok = True
                break
            if insn.kind != disasm.PLAIN:
                break
            texts.append(insn.text)
            off += insn.length
        del ok
    return found


def make_image(data, base=0x1000):
    return BinaryImage(path="<test>", arch="x86-64",
                       regions=(Region(base=base, data=data),))


class TestKnownRegions:
    def test_epilogue_region_has_six_gadgets(self):
        gs = list(scan_region(0, FIG3_BYTES, ScanParams()))
        assert sorted(g.address for g in gs) == [0, 1, 3, 4, 5, 6]
        texts = {g.address: g.identity for g in gs}
        assert texts[0] == "add rsp, 0x18 ; pop rbx ; pop rbp ; ret"
        assert texts[1] == "add esp, 0x18 ; pop rbx ; pop rbp ; ret"
        assert texts[3] == "sbb byte ptr [rbx+0x5d], bl ; ret"
        assert texts[4] == "pop rbx ; pop rbp ; ret"
        assert texts[5] == "pop rbp ; ret"
        assert texts[6] == "ret"

    def test_no_terminator_no_gadgets(self):
        assert list(scan_region(0, b"\x90\x90\x90", ScanParams())) == []

    def test_single_ret(self):
        gs = list(scan_region(0, b"\xc3", ScanParams()))
        assert len(gs) == 1
        assert gs[0].identity == "ret"

    def test_rewritten_epilogue_offsets(self):
        gs = {g.address: g for g in scan_region(0, FIG4_BYTES, ScanParams())}
        assert gs[10].instructions == (
            "or byte ptr [rax-0x73], cl", "add eax, 0x244d13",
            "pop rbx", "pop rbp", "ret")
        assert gs[14].instructions == (
            "adc ecx, dword ptr [rbp+0x24]", "add byte ptr [rbx+0x5d], bl",
            "ret")


class TestIdentity:
    def test_identity_is_joined_texts(self):
        g = Gadget(address=0, instructions=("pop rbp", "ret"),
                   terminator="ret")
        assert gadget_identity(g) == "pop rbp ; ret"

    def test_identity_address_independent(self):
        a = Gadget(address=0x1000, instructions=("pop rbp", "ret"),
                   terminator="ret")
        b = Gadget(address=0x2000, instructions=("pop rbp", "ret"),
                   terminator="ret")
        assert gadget_identity(a) == gadget_identity(b)

    def test_dedup_keeps_lowest_address(self):
        image = make_image(b"\xc3\x90\xc3")
        gs = harvest_gadgets(image)
        assert gs.get("ret").address == 0x1000


class TestHarvest:
    def test_wrong_arch_rejected(self):
        image = BinaryImage(path="x", arch="arm64",
                            regions=(Region(base=0, data=b"\xc3"),))
        with pytest.raises(UnsupportedArchError):
            harvest_gadgets(image)

    def test_int80_toggle(self):
        data = bytes.fromhex("cd80")
        with_int = harvest_gadgets(make_image(data), ScanParams())
        without = harvest_gadgets(make_image(data),
                                  ScanParams(include_int80=False))
        assert "int 0x80" in with_int.identities
        assert "int 0x80" not in without.identities

    def test_max_len_bound(self):
        data = b"\x90" * 12 + b"\xc3"
        gs = harvest_gadgets(make_image(data), ScanParams(max_gadget_len=3))
        longest = max(len(g.instructions) for g in gs)
        assert longest == 3

    def test_terminator_must_end_exactly(self):
        # c2 xx xx consumes two bytes after the opcode; decoding from the
        # c3 inside the immediate must still find the plain ret
        data = bytes.fromhex("c2c300")
        gs = harvest_gadgets(make_image(data))
        idents = gs.identities
        assert "ret 0xc3" in idents
        assert "ret" in idents

    def test_oracle_equality_on_fig_regions(self):
        for data in (FIG3_BYTES, FIG4_BYTES, FIG3_BYTES + FIG4_BYTES):
            params = ScanParams()
            mine = {g.identity for g in scan_region(0, data, params)}
            ref = {g.identity for g in brute_force_gadgets(0, data, params)}
            assert mine == ref

    @settings(max_examples=120, deadline=None)
    @given(st.binary(min_size=1, max_size=600),
           st.integers(min_value=1, max_value=6))
    def test_oracle_equality_random(self, data, max_len):
        params = ScanParams(max_gadget_len=max_len)
        mine = {g.identity for g in scan_region(0, data, params)}
        ref = {g.identity for g in brute_force_gadgets(0, data, params)}
        assert mine == ref

    def test_monotonic_under_append(self):
        rng = random.Random(7)
        data = bytes(rng.getrandbits(8) for _ in range(300))
        before = {(g.address, g.identity)
                  for g in scan_region(0, data, ScanParams())}
        after = {(g.address, g.identity)
                 for g in scan_region(0, data + b"\xc3\x90\xc3",
                                      ScanParams())}
        # gadgets whose byte extent was unchanged must survive the append
        survived = {(a, i) for (a, i) in before}
        assert survived <= after

    def test_gadgets_within_one_region(self):
        image = BinaryImage(path="x", arch="x86-64", regions=(
            Region(base=0x1000, data=FIG3_BYTES),
            Region(base=0x2000, data=FIG4_BYTES),
        ))
        gs = harvest_gadgets(image)
        for g in gs:
            assert (0x1000 <= g.address < 0x1000 + len(FIG3_BYTES)
                    or 0x2000 <= g.address < 0x2000 + len(FIG4_BYTES))


class TestSerialization:
    def test_json_roundtrip(self):
        gs = harvest_gadgets(make_image(FIG3_BYTES + FIG4_BYTES))
        text = gs.to_json()
        back = GadgetSet.from_json(text)
        assert back.identities == gs.identities
        assert back.params == gs.params
        assert back.to_json() == text

    def test_json_sorted_by_identity(self):
        gs = harvest_gadgets(make_image(FIG3_BYTES))
        doc = gs.to_dict()
        idents = [g["identity"] for g in doc["gadgets"]]
        assert idents == sorted(idents)

    def test_json_bit_exact_across_runs(self):
        a = harvest_gadgets(make_image(FIG4_BYTES)).to_json()
        b = harvest_gadgets(make_image(FIG4_BYTES)).to_json()
        assert a == b
