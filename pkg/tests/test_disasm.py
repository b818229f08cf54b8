"""Decoder unit tests: canonical texts, kinds, determinism."""

import pytest

from gadgetscope import disasm
from gadgetscope.disasm import decode_at

from conftest import FIG3_BYTES, FIG4_BYTES


def text_at(data, off):
    insn = decode_at(data, off)
    assert insn is not None, f"expected a decode at {off}"
    return insn.text


class TestKnownSequences:
    def test_epilogue_at_boundary(self):
        assert text_at(FIG3_BYTES, 0) == "add rsp, 0x18"
        assert text_at(FIG3_BYTES, 4) == "pop rbx"
        assert text_at(FIG3_BYTES, 5) == "pop rbp"
        assert text_at(FIG3_BYTES, 6) == "ret"

    def test_epilogue_offset_one(self):
        insn = decode_at(FIG3_BYTES, 1)
        assert insn.text == "add esp, 0x18"
        assert insn.length == 3

    def test_epilogue_offset_three(self):
        insn = decode_at(FIG3_BYTES, 3)
        assert insn.text == "sbb byte ptr [rbx+0x5d], bl"
        assert insn.length == 3

    def test_epilogue_offset_two_invalid(self):
        assert decode_at(FIG3_BYTES, 2) is None

    def test_rewritten_epilogue_at_boundary(self):
        assert text_at(FIG4_BYTES, 0) == "mov byte ptr [rip+0x244d0f], 0x1"
        assert text_at(FIG4_BYTES, 7) == "add rsp, 0x8"
        assert text_at(FIG4_BYTES, 11) == "lea rax, [rip+0x244d13]"

    def test_rewritten_epilogue_offset_ten(self):
        insn = decode_at(FIG4_BYTES, 10)
        assert insn.text == "or byte ptr [rax-0x73], cl"
        assert insn.length == 3

    def test_rewritten_epilogue_offset_fourteen(self):
        insn = decode_at(FIG4_BYTES, 14)
        assert insn.text == "adc ecx, dword ptr [rbp+0x24]"
        assert insn.length == 3
        nxt = decode_at(FIG4_BYTES, 17)
        assert nxt.text == "add byte ptr [rbx+0x5d], bl"


class TestKinds:
    @pytest.mark.parametrize("data,kind", [
        ("c3", disasm.RET),
        ("c20800", disasm.RET_IMM),
        ("ffe0", disasm.JMP_INDIRECT),
        ("ff20", disasm.JMP_INDIRECT),
        ("ffd0", disasm.CALL_INDIRECT),
        ("ff10", disasm.CALL_INDIRECT),
        ("0f05", disasm.SYSCALL),
        ("cd80", disasm.INT80),
        ("cd03", disasm.INVALID_FOR_GADGET),
        ("eb00", disasm.BRANCH),
        ("7400", disasm.BRANCH),
        ("e800000000", disasm.CALL_DIRECT),
        ("f4", disasm.PRIVILEGED),
        ("ec", disasm.PRIVILEGED),
        ("cb", disasm.INVALID_FOR_GADGET),
        ("cf", disasm.INVALID_FOR_GADGET),
        ("ff28", disasm.INVALID_FOR_GADGET),
        ("ff18", disasm.INVALID_FOR_GADGET),
        ("cc", disasm.INVALID_FOR_GADGET),
        ("0f0b", disasm.INVALID_FOR_GADGET),
        ("90", disasm.PLAIN),
        ("5d", disasm.PLAIN),
    ])
    def test_kind(self, data, kind):
        insn = decode_at(bytes.fromhex(data), 0)
        assert insn is not None
        assert insn.kind == kind

    def test_ret_kind_is_opcode_based(self):
        # prefixed returns still classify as ret
        insn = decode_at(bytes.fromhex("f3c3"), 0)
        assert insn.kind == disasm.RET
        assert insn.text == "repz ret"


class TestEdges:
    def test_illegal_one_byte_opcodes(self):
        for b in (0x06, 0x07, 0x0E, 0x16, 0x17, 0x1E, 0x27, 0x37,
                  0x60, 0x61, 0x82, 0x9A, 0xCE, 0xD4, 0xD5, 0xD6, 0xEA):
            assert decode_at(bytes([b, 0, 0, 0, 0, 0]), 0) is None, hex(b)

    def test_truncation_is_failure(self):
        assert decode_at(b"\x48", 0) is None           # dangling REX
        assert decode_at(b"\x81\xc0\x01\x02", 0) is None  # imm cut short
        assert decode_at(b"\x0f", 0) is None

    def test_offset_out_of_range(self):
        with pytest.raises(IndexError):
            decode_at(b"\x90", 1)

    def test_determinism(self):
        data = FIG4_BYTES * 3
        first = [decode_at(data, o) for o in range(len(data))]
        second = [decode_at(data, o) for o in range(len(data))]
        assert first == second

    def test_self_consistency(self):
        # decoding after a successful decode never depends on earlier bytes
        data = FIG3_BYTES
        insn = decode_at(data, 0)
        tail = decode_at(data[insn.length:], 0)
        assert tail.text == decode_at(data, insn.length).text

    def test_max_length_enforced(self):
        # at most 13 prefix bytes; 15-byte instructions as such are fine
        assert decode_at(b"\x66" * 14 + b"\x90", 0) is None
        assert decode_at(b"\x66" * 13 + b"\x90", 0) is not None
        full15 = bytes.fromhex("2e67f0488184911122334455667788")
        insn = decode_at(full15, 0)
        assert insn is not None and insn.length == 15

    def test_rip_relative_stays_literal(self):
        a = decode_at(bytes.fromhex("488d05134d2400"), 0)
        b = decode_at(bytes.fromhex("488d0511111111"), 0)
        assert a.text == "lea rax, [rip+0x244d13]"
        assert b.text != a.text
