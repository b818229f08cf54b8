"""Shared fixtures: minimal ELF64 builders for hermetic loader tests."""

import struct

import pytest

PT_LOAD = 1
PT_DYNAMIC = 2
PF_X = 1
PF_R = 4
PF_W = 2
SHF_ALLOC = 0x2
SHF_EXECINSTR = 0x4
DT_NEEDED = 1
DT_STRTAB = 5
DT_NULL = 0


def build_elf(code=b"\xc3", vaddr=0x401000, needed=(), extra_segments=(),
              with_sections=True, machine=62, ei_class=2):
    """Assemble a minimal ELF64 with one executable PT_LOAD segment.

    needed: sonames to expose via a PT_DYNAMIC segment.
    extra_segments: (bytes, vaddr, flags) triples appended as PT_LOAD.
    """
    ehsize = 64
    phentsize = 56
    shentsize = 64

    segments = [(code, vaddr, PF_R | PF_X)]
    segments += [(d, v, f) for (d, v, f) in extra_segments]

    dynamic = b""
    dynstr = b""
    if needed:
        offs = []
        dynstr = b"\x00"
        for n in needed:
            offs.append(len(dynstr))
            dynstr += n.encode() + b"\x00"
        ents = [(DT_NEEDED, o) for o in offs]
        dyn_vaddr = 0x600000
        str_vaddr = dyn_vaddr + 16 * (len(ents) + 2)
        ents.append((DT_STRTAB, str_vaddr))
        ents.append((DT_NULL, 0))
        dynamic = b"".join(struct.pack("<qQ", t, v) for t, v in ents)
        segments.append((dynamic + dynstr, dyn_vaddr, PF_R))

    phnum = len(segments) + (1 if needed else 0)
    shnum = (2 + sum(1 for (_, _, f) in segments if f & PF_X)) \
        if with_sections else 0

    # layout: ehdr | phdrs | segment datas | shdrs | shstrtab
    off = ehsize + phentsize * phnum
    seg_offsets = []
    blob = b""
    for data, _, _ in segments:
        seg_offsets.append(off + len(blob))
        blob += data

    shoff = 0
    shstr = b"\x00.text\x00.shstrtab\x00"
    sh_blob = b""
    if with_sections:
        shoff = off + len(blob)
        sections = [struct.pack("<IIQQQQIIQQ", 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)]
        for (data, va, fl), soff in zip(segments, seg_offsets):
            if fl & PF_X:
                sections.append(struct.pack(
                    "<IIQQQQIIQQ", 1, 1, SHF_ALLOC | SHF_EXECINSTR, va,
                    soff, len(data), 0, 0, 1, 0))
        strtab_off = shoff + shentsize * shnum
        sections.append(struct.pack(
            "<IIQQQQIIQQ", 7, 3, 0, 0, strtab_off, len(shstr), 0, 0, 1, 0))
        sh_blob = b"".join(sections) + shstr

    ehdr = struct.pack(
        "<4sBBBBB7xHHIQQQIHHHHHH",
        b"\x7fELF", ei_class, 1, 1, 0, 0,
        2, machine, 1,
        vaddr,                  # e_entry
        ehsize,                 # e_phoff
        shoff,                  # e_shoff
        0, ehsize, phentsize, phnum, shentsize, shnum,
        shnum - 1 if with_sections else 0)

    phdrs = b""
    for (data, va, fl), soff in zip(segments, seg_offsets):
        phdrs += struct.pack("<IIQQQQQQ", PT_LOAD, fl, soff, va, va,
                             len(data), len(data), 0x1000)
    if needed:
        dyn_off = seg_offsets[-1]
        dyn_va = segments[-1][1]
        phdrs += struct.pack("<IIQQQQQQ", PT_DYNAMIC, PF_R, dyn_off, dyn_va,
                             dyn_va, len(dynamic), len(dynamic), 8)

    return ehdr + phdrs + blob + sh_blob


@pytest.fixture
def elf_file(tmp_path):
    def make(name="a.bin", **kw):
        p = tmp_path / name
        p.write_bytes(build_elf(**kw))
        return p
    return make


FIG3_BYTES = bytes.fromhex("4883c4185b5dc3")
FIG4_BYTES = bytes.fromhex("c6050f4d2400014883c408488d05134d24005b5dc3")
