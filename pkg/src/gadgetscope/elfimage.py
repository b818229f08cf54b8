"""ELF64 binary loading: executable byte regions and declared dependencies.

Parses little-endian ELF64 files per the System V ABI using struct; no
external ELF library.  Only x86-64 images load; anything else raises
BinaryFormatError with a machine-readable code.  Executable regions are
the PF_X PT_LOAD segments, narrowed to SHF_EXECINSTR sections when a
section header table is present (padding between sections is not code).
"""

from __future__ import annotations

import io
import struct
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BinaryFormatError

ELF_MAGIC = b"\x7fELF"
ELFCLASS64 = 2
ELFDATA2LSB = 1
EM_X86_64 = 62

PT_LOAD = 1
PT_DYNAMIC = 2
PF_X = 1

SHF_EXECINSTR = 0x4
SHT_NOBITS = 8

DT_NULL = 0
DT_NEEDED = 1
DT_STRTAB = 5


@dataclass(frozen=True)
class Region:
    """One executable byte range at a fixed virtual address."""
    base: int
    data: bytes
    executable: bool = True

    def __post_init__(self):
        if len(self.data) < 1:
            raise ValueError("empty region")
        if self.base + len(self.data) > 1 << 64:
            raise ValueError("region wraps the address space")

    @property
    def end(self) -> int:
        return self.base + len(self.data)


@dataclass(frozen=True)
class BinaryImage:
    """Loaded view of one ELF binary: code regions plus DT_NEEDED names."""
    path: str
    arch: str
    regions: tuple[Region, ...]
    dependencies: tuple[str, ...] = ()

    def contains_address(self, vaddr: int) -> bool:
        return any(r.base <= vaddr < r.end for r in self.regions)


def _err(code, message):
    raise BinaryFormatError(message, code)


def load_image(path) -> BinaryImage:
    """Load the executable regions and DT_NEEDED entries of an ELF64 file."""
    p = Path(path)
    if not p.is_file():
        _err("not-a-file", f"{path}: not a regular file")
    data = p.read_bytes()
    return load_image_bytes(data, str(p))


def load_image_bytes(data: bytes, name: str = "<bytes>") -> BinaryImage:
    """Same as load_image but over an in-memory ELF file."""
    if len(data) < 64:
        if data[:4] != ELF_MAGIC:
            _err("not-elf", f"{name}: bad ELF magic")
        _err("malformed-header", f"{name}: truncated ELF header")
    if data[:4] != ELF_MAGIC:
        _err("not-elf", f"{name}: bad ELF magic")
    ei_class = data[4]
    ei_data = data[5]
    if ei_class != ELFCLASS64:
        _err("unsupported-class", f"{name}: not a 64-bit ELF")
    if ei_data != ELFDATA2LSB:
        _err("malformed-header", f"{name}: not little-endian")
    try:
        (e_machine,) = struct.unpack_from("<H", data, 18)
        (e_phoff,) = struct.unpack_from("<Q", data, 32)
        (e_shoff,) = struct.unpack_from("<Q", data, 40)
        (e_phentsize, e_phnum) = struct.unpack_from("<HH", data, 54)
        (e_shentsize, e_shnum) = struct.unpack_from("<HH", data, 58)
    except struct.error:
        _err("malformed-header", f"{name}: truncated ELF header")
    if e_machine != EM_X86_64:
        _err("unsupported-machine", f"{name}: e_machine={e_machine}, "
             "only x86-64 is supported")

    phdrs = []
    for i in range(e_phnum):
        off = e_phoff + i * e_phentsize
        if off + 56 > len(data):
            _err("malformed-header", f"{name}: program header {i} out of range")
        p_type, p_flags, p_offset, p_vaddr, _, p_filesz = \
            struct.unpack_from("<IIQQQQ", data, off)
        phdrs.append((p_type, p_flags, p_offset, p_vaddr, p_filesz))

    shdrs = []
    if e_shoff and e_shnum:
        for i in range(e_shnum):
            off = e_shoff + i * e_shentsize
            if off + 64 > len(data):
                _err("malformed-header",
                     f"{name}: section header {i} out of range")
            (_, sh_type, sh_flags, sh_addr, sh_offset, sh_size) = \
                struct.unpack_from("<IIQQQQ", data, off)
            shdrs.append((sh_type, sh_flags, sh_addr, sh_offset, sh_size))

    regions = _executable_regions(data, name, phdrs, shdrs)
    deps = _needed_entries(data, name, phdrs)
    return BinaryImage(path=name, arch="x86-64", regions=tuple(regions),
                       dependencies=tuple(deps))


def _executable_regions(data, name, phdrs, shdrs):
    exec_spans = []
    for p_type, p_flags, p_offset, p_vaddr, p_filesz in phdrs:
        if p_type != PT_LOAD or not (p_flags & PF_X) or p_filesz == 0:
            continue
        if p_offset + p_filesz > len(data):
            _err("malformed-header", f"{name}: PT_LOAD extends past file end")
        exec_spans.append((p_vaddr, p_offset, p_filesz))

    exec_sections = [(sh_addr, sh_size) for (sh_type, sh_flags, sh_addr,
                                             sh_offset, sh_size) in shdrs
                     if sh_flags & SHF_EXECINSTR and sh_type != SHT_NOBITS
                     and sh_size > 0]

    regions = []
    for vaddr, offset, filesz in exec_spans:
        if exec_sections:
            for s_addr, s_size in exec_sections:
                lo = max(vaddr, s_addr)
                hi = min(vaddr + filesz, s_addr + s_size)
                if lo >= hi:
                    continue
                file_lo = offset + (lo - vaddr)
                regions.append(Region(base=lo,
                                      data=data[file_lo:file_lo + (hi - lo)]))
        else:
            regions.append(Region(base=vaddr,
                                  data=data[offset:offset + filesz]))
    regions.sort(key=lambda r: r.base)
    merged = []
    for r in regions:
        if merged and r.base < merged[-1].end:
            _err("malformed-header", f"{name}: overlapping executable regions")
        merged.append(r)
    return merged


def _needed_entries(data, name, phdrs):
    dyn = next(((off, sz) for (t, _, off, _, sz) in phdrs
                if t == PT_DYNAMIC), None)
    if dyn is None:
        return []
    off, size = dyn
    if off + size > len(data):
        _err("malformed-header", f"{name}: PT_DYNAMIC extends past file end")
    needed_offsets = []
    strtab_vaddr = None
    for pos in range(off, off + size - 15, 16):
        d_tag, d_val = struct.unpack_from("<qQ", data, pos)
        if d_tag == DT_NULL:
            break
        if d_tag == DT_NEEDED:
            needed_offsets.append(d_val)
        elif d_tag == DT_STRTAB:
            strtab_vaddr = d_val
    if not needed_offsets:
        return []
    if strtab_vaddr is None:
        _err("malformed-header", f"{name}: DT_NEEDED without DT_STRTAB")
    str_off = _vaddr_to_offset(strtab_vaddr, phdrs)
    if str_off is None:
        _err("malformed-header", f"{name}: DT_STRTAB outside loadable segments")
    names = []
    for noff in needed_offsets:
        start = str_off + noff
        end = data.find(b"\x00", start)
        if start >= len(data) or end < 0:
            _err("malformed-header", f"{name}: DT_NEEDED string out of range")
        names.append(data[start:end].decode("utf-8", "replace"))
    return names


def _vaddr_to_offset(vaddr, phdrs):
    for p_type, _, p_offset, p_vaddr, p_filesz in phdrs:
        if p_type == PT_LOAD and p_vaddr <= vaddr < p_vaddr + p_filesz:
            return p_offset + (vaddr - p_vaddr)
    return None


def declared_dependencies(image: BinaryImage) -> list[str]:
    """DT_NEEDED sonames in file order, duplicates preserved."""
    return list(image.dependencies)
