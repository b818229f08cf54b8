"""Catalog loading and coverage tests, including the union properties."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from gadgetscope.delta import merge_sets
from gadgetscope.errors import CatalogError
from gadgetscope.expressivity import (BUILTIN_CATALOGS, coverage,
                                      load_catalog)
from gadgetscope.gadgets import Gadget, GadgetSet, ScanParams


def mkset(*gadgets, source="t"):
    gs = GadgetSet(source=source, params=ScanParams())
    for g in gadgets:
        gs.add(g)
    return gs


def G(*instructions, terminator="ret", addr=0x1000):
    return Gadget(address=addr, instructions=tuple(instructions),
                  terminator=terminator)


class TestCatalogs:
    def test_builtin_sizes(self):
        assert load_catalog("practical").size == 11
        assert load_catalog("turing").size == 17
        assert load_catalog("aslr_proof").size == 35

    def test_unknown_builtin(self):
        with pytest.raises(CatalogError) as ei:
            load_catalog("mystery")
        assert ei.value.code == "unknown-builtin"

    def test_size_mismatch(self, tmp_path):
        doc = {"name": "custom", "size": 5, "classes": [
            {"id": f"c{i}", "label": "x",
             "pattern": {"mnemonics": ["mov"], "operand_shape": "reg,reg",
                         "fixed_register": None}} for i in range(4)]}
        p = tmp_path / "cat.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(CatalogError) as ei:
            load_catalog(p)
        assert ei.value.code == "size-mismatch"

    def test_malformed_file(self, tmp_path):
        p = tmp_path / "cat.json"
        p.write_text('{"name": "x"}')
        with pytest.raises(CatalogError) as ei:
            load_catalog(p)
        assert ei.value.code == "malformed-catalog-file"

    def test_custom_catalog_loads(self, tmp_path):
        doc = {"name": "tiny", "size": 1, "classes": [
            {"id": "pop-any", "label": "pop a register",
             "pattern": {"mnemonics": ["pop"], "operand_shape": "reg",
                         "fixed_register": None}}]}
        p = tmp_path / "tiny.json"
        p.write_text(json.dumps(doc))
        cat = load_catalog(p)
        entry = coverage(mkset(G("pop rbx", "ret")), cat)
        assert entry.count == 1


class TestCoverage:
    def test_empty_set_zero(self):
        for cat in BUILTIN_CATALOGS.values():
            assert coverage(mkset(), cat).count == 0

    def test_pop_rdi_satisfies_argument_load(self):
        entry = coverage(mkset(G("pop rdi", "ret")),
                         load_catalog("practical"))
        assert "load-rdi" in entry.satisfied
        assert entry.count >= 1

    def test_rendering_format(self):
        entry = coverage(mkset(G("pop rdi", "ret")),
                         load_catalog("practical"))
        assert entry.rendered() == f"{entry.count} of 11"

    def test_strict_requires_single_body(self):
        cat = load_catalog("turing")
        short = coverage(mkset(G("mov rax, rbx", "ret")), cat, strict=True)
        longer = coverage(mkset(G("mov rax, rbx", "pop rcx", "ret")), cat,
                          strict=True)
        assert "move-reg-reg" in short.satisfied
        assert "move-reg-reg" not in longer.satisfied

    def test_extended_accepts_unclobbered(self):
        cat = load_catalog("turing")
        ok = coverage(mkset(G("mov rax, rbx", "pop rcx", "ret")), cat,
                      strict=False)
        clobbered = coverage(mkset(G("mov rax, rbx", "pop rax", "ret")), cat,
                             strict=False)
        assert "move-reg-reg" in ok.satisfied
        assert "move-reg-reg" not in clobbered.satisfied

    def test_syscall_class_from_bare_syscall_gadget(self):
        cat = load_catalog("turing")
        entry = coverage(mkset(G("syscall", terminator="syscall")), cat)
        assert "system-call" in entry.satisfied

    def test_jump_reg_class(self):
        cat = load_catalog("practical")
        entry = coverage(mkset(G("jmp rax", terminator="jmp-indirect")), cat)
        assert "jump-reg" in entry.satisfied

    def test_non_rop_bodies_do_not_satisfy_body_classes(self):
        cat = load_catalog("turing")
        entry = coverage(mkset(G("mov rax, rbx", "jmp rcx",
                                 terminator="jmp-indirect")), cat)
        assert "move-reg-reg" not in entry.satisfied

    def test_sp_arith(self):
        cat = load_catalog("turing")
        entry = coverage(mkset(G("add rsp, 0x10", "ret")), cat)
        assert "sp-arith" in entry.satisfied

    def test_pivot_xchg_either_position(self):
        cat = load_catalog("aslr_proof")
        a = coverage(mkset(G("xchg rsp, rax", "ret")), cat)
        b = coverage(mkset(G("xchg rax, rsp", "ret")), cat)
        assert "pivot-xchg-sp" in a.satisfied
        assert "pivot-xchg-sp" in b.satisfied

    def test_sp_relative_load(self):
        cat = load_catalog("aslr_proof")
        entry = coverage(mkset(G("mov rax, qword ptr [rsp+0x8]", "ret")), cat)
        assert "load-sp-rel" in entry.satisfied


_POOL = [
    G("pop rdi", "ret", addr=1), G("pop rsi", "ret", addr=2),
    G("pop rdx", "ret", addr=3), G("pop rax", "ret", addr=4),
    G("mov rax, rbx", "ret", addr=5), G("mov rcx, qword ptr [rax]",
                                        "ret", addr=6),
    G("mov qword ptr [rdi], rax", "ret", addr=7),
    G("add rax, rbx", "ret", addr=8), G("sub rcx, rdx", "ret", addr=9),
    G("neg rax", "ret", addr=10), G("and rax, rbx", "ret", addr=11),
    G("or rax, rdx", "ret", addr=12), G("xor rsi, rdi", "ret", addr=13),
    G("not rcx", "ret", addr=14), G("shl rax, 0x1", "ret", addr=15),
    G("shr rbx, 0x1", "ret", addr=16), G("cmp rax, rbx", "ret", addr=17),
    G("cmove rax, rbx", "ret", addr=18), G("add rsp, 0x18", "ret", addr=19),
    G("syscall", terminator="syscall", addr=20),
    G("jmp rax", terminator="jmp-indirect", addr=21),
    G("call rax", terminator="call-indirect", addr=22),
    G("push rbx", "ret", addr=23), G("xchg rax, rcx", "ret", addr=24),
    G("sete al", "ret", addr=25), G("xchg rsp, rax", "ret", addr=26),
    G("mov rsp, rbp", "ret", addr=27),
    G("mov rbx, qword ptr [rsp+0x10]", "ret", addr=28),
    G("add rax, qword ptr [rbx]", "ret", addr=29),
    G("add qword ptr [rbx], rax", "ret", addr=30),
    G("sub rax, qword ptr [rbx]", "ret", addr=31),
    G("sub qword ptr [rbx], rax", "ret", addr=32),
    G("and rax, qword ptr [rbx]", "ret", addr=33),
    G("and qword ptr [rbx], rax", "ret", addr=34),
    G("or rax, qword ptr [rbx]", "ret", addr=35),
    G("or qword ptr [rbx], rax", "ret", addr=36),
    G("xor rax, qword ptr [rbx]", "ret", addr=37),
    G("xor qword ptr [rbx], rax", "ret", addr=38),
    G("int 0x80", terminator="int80", addr=39),
    G("jmp qword ptr [rbx]", terminator="jmp-indirect", addr=40),
]


class TestProperties:
    def test_full_pool_saturates_turing(self):
        entry = coverage(mkset(*_POOL), load_catalog("turing"))
        assert entry.count == 17, sorted(
            set(c.id for c in load_catalog("turing").classes)
            - set(entry.satisfied))

    def test_full_pool_saturates_practical_and_hardened(self):
        assert coverage(mkset(*_POOL), load_catalog("practical")).count == 11
        assert coverage(mkset(*_POOL), load_catalog("aslr_proof")).count == 35

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=len(_POOL) - 1)),
           st.sets(st.integers(min_value=0, max_value=len(_POOL) - 1)))
    def test_monotone_under_union(self, ia, ib):
        small = mkset(*[_POOL[i] for i in sorted(ia)])
        union = mkset(*[_POOL[i] for i in sorted(ia | ib)])
        for cat in BUILTIN_CATALOGS.values():
            sa = set(coverage(small, cat).satisfied)
            su = set(coverage(union, cat).satisfied)
            assert sa <= su

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=len(_POOL) - 1)),
           st.sets(st.integers(min_value=0, max_value=len(_POOL) - 1)))
    def test_merge_coverage_equals_union_coverage(self, ia, ib):
        a = mkset(*[_POOL[i] for i in sorted(ia)], source="a")
        b = mkset(*[_POOL[i] for i in sorted(ib)], source="b")
        merged = merge_sets(a, [b])
        union = mkset(*[_POOL[i] for i in sorted(ia | ib)])
        for cat in BUILTIN_CATALOGS.values():
            assert (set(coverage(merged, cat).satisfied)
                    == set(coverage(union, cat).satisfied))

    def test_dependency_merge_can_complete_coverage(self):
        pkg = mkset(*_POOL[:6], source="pkg")
        dep = mkset(*_POOL, source="dep")
        cat = load_catalog("turing")
        assert coverage(pkg, cat).count < 17
        assert coverage(merge_sets(pkg, [dep]), cat).count == 17
