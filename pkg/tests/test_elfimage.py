"""ELF64 loader tests against generated fixtures."""

import shutil
import subprocess

import pytest

from gadgetscope.elfimage import declared_dependencies, load_image
from gadgetscope.errors import BinaryFormatError

from conftest import build_elf


class TestLoading:
    def test_single_exec_segment(self, elf_file):
        code = b"\x90" * 4096
        p = elf_file(code=code, vaddr=0x401000)
        image = load_image(p)
        assert image.arch == "x86-64"
        assert len(image.regions) == 1
        r = image.regions[0]
        assert r.base == 0x401000
        assert len(r.data) == 4096
        assert r.executable

    def test_not_a_file(self, tmp_path):
        with pytest.raises(BinaryFormatError) as ei:
            load_image(tmp_path / "missing")
        assert ei.value.code == "not-a-file"

    def test_bad_magic(self, tmp_path):
        p = tmp_path / "junk"
        p.write_bytes(bytes([0x00, 0x01, 0x02, 0x03]) + b"x" * 100)
        with pytest.raises(BinaryFormatError) as ei:
            load_image(p)
        assert ei.value.code == "not-elf"

    def test_elf32_rejected(self, elf_file):
        p = elf_file(ei_class=1)
        with pytest.raises(BinaryFormatError) as ei:
            load_image(p)
        assert ei.value.code == "unsupported-class"

    def test_wrong_machine_rejected(self, elf_file):
        p = elf_file(machine=183)  # aarch64
        with pytest.raises(BinaryFormatError) as ei:
            load_image(p)
        assert ei.value.code == "unsupported-machine"

    def test_truncated_header(self, tmp_path):
        p = tmp_path / "trunc"
        p.write_bytes(b"\x7fELF" + b"\x02\x01\x01" + b"\x00" * 10)
        with pytest.raises(BinaryFormatError) as ei:
            load_image(p)
        assert ei.value.code == "malformed-header"

    def test_deterministic(self, elf_file):
        p = elf_file(code=b"\xc3" * 64, needed=("libc.so.6",))
        a = load_image(p)
        b = load_image(p)
        assert a == b

    def test_regions_sorted_nonoverlapping(self, elf_file):
        p = elf_file(code=b"\x90" * 16, vaddr=0x2000,
                     extra_segments=((b"\xc3" * 8, 0x1000, 5),))
        image = load_image(p)
        bases = [r.base for r in image.regions]
        assert bases == sorted(bases)
        for a, b in zip(image.regions, image.regions[1:]):
            assert a.end <= b.base

    def test_nonexec_segments_excluded(self, elf_file):
        p = elf_file(code=b"\x90" * 16, vaddr=0x1000,
                     extra_segments=((b"\xc3" * 8, 0x3000, 6),))  # rw-
        image = load_image(p)
        assert [r.base for r in image.regions] == [0x1000]


class TestDependencies:
    def test_dynamic_deps_in_order(self, elf_file):
        p = elf_file(needed=("liba.so", "libb.so"))
        image = load_image(p)
        assert declared_dependencies(image) == ["liba.so", "libb.so"]

    def test_static_no_deps(self, elf_file):
        image = load_image(elf_file())
        assert declared_dependencies(image) == []

    def test_duplicates_preserved(self, elf_file):
        p = elf_file(needed=("libx.so", "libx.so"))
        assert declared_dependencies(load_image(p)) == ["libx.so", "libx.so"]


@pytest.mark.skipif(shutil.which("gcc") is None, reason="gcc not available")
class TestToolchainCross:
    def test_gcc_binary_loads_and_reports_libc(self, tmp_path):
        src = tmp_path / "t.c"
        src.write_text("int main(void){return 0;}\n")
        out = tmp_path / "t.bin"
        subprocess.run(["gcc", "-o", str(out), str(src)], check=True)
        image = load_image(out)
        assert image.arch == "x86-64"
        assert image.regions
        assert any(d.startswith("libc.so") for d in image.dependencies)

    def test_region_extent_matches_readelf(self, tmp_path):
        src = tmp_path / "t.c"
        src.write_text("int f(int x){return x+1;}\nint main(void)"
                       "{return f(41);}\n")
        out = tmp_path / "t.bin"
        subprocess.run(["gcc", "-o", str(out), str(src)], check=True)
        image = load_image(out)
        # cross-check every region against readelf's section table
        readelf = subprocess.run(["readelf", "-SW", str(out)],
                                 capture_output=True, text=True,
                                 check=True).stdout
        exec_sections = []
        for line in readelf.splitlines():
            if " AX" in line or " WAX" in line:
                parts = line.split("]")[-1].split()
                exec_sections.append((int(parts[2], 16), int(parts[4], 16)))
        for region in image.regions:
            assert any(addr <= region.base
                       and region.end <= addr + size
                       for addr, size in exec_sections), hex(region.base)
