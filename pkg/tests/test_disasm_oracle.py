"""Differential agreement with the reference disassembler."""

import shutil

import pytest

from oracle import compare_windows, random_windows

pytestmark = pytest.mark.skipif(shutil.which("objdump") is None,
                                reason="objdump not available")


def test_random_window_agreement(tmp_path):
    windows = random_windows(4000, seed=0xD15A)
    bad = compare_windows(windows, tmp_path)
    assert bad == [], f"{len(bad)} disagreements, first: {bad[:5]}"


def test_one_byte_opcode_sweep(tmp_path):
    # every single-byte window: validity split must match exactly
    windows = [bytes([b]) for b in range(256)]
    bad = compare_windows(windows, tmp_path)
    assert bad == [], bad[:8]


def test_two_byte_map_sweep(tmp_path):
    windows = [bytes([0x0F, b, 0xC1, 0x11, 0x22, 0x33, 0x44, 0x55])
               for b in range(256)]
    bad = compare_windows(windows, tmp_path)
    assert bad == [], bad[:8]


def test_modrm_sweep_common_opcodes(tmp_path):
    windows = []
    for opc in (b"\x01", b"\x8b", b"\xff", b"\xf7", b"\x0f\xae",
                b"\x0f\x01", b"\xd9", b"\xdf", b"\xc6", b"\xc7"):
        for m in range(256):
            windows.append(opc + bytes([m]) + b"\x11\x22\x33\x44\x55\x66")
    bad = compare_windows(windows, tmp_path)
    assert bad == [], bad[:8]
