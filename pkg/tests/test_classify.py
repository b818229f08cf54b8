"""Type membership and special-purpose predicate tests."""

import pytest

from gadgetscope.classify import (COP, JOP, ROP, SYSCALL_TERMINATED,
                                  classify_gadget, count_types,
                                  detect_special_purpose)
from gadgetscope.gadgets import Gadget, GadgetSet, ScanParams


def mkset(*gadgets):
    gs = GadgetSet(source="t", params=ScanParams())
    for g in gadgets:
        gs.add(g)
    return gs


def G(*instructions, terminator="ret", addr=0x1000):
    return Gadget(address=addr, instructions=tuple(instructions),
                  terminator=terminator)


class TestTypes:
    @pytest.mark.parametrize("g,expected,sysflag", [
        (G("pop rbp", "ret"), ROP, False),
        (G("ret 0x8", terminator="ret-imm"), ROP, False),
        (G("add rbx, 0x8", "jmp rbx", terminator="jmp-indirect"), JOP, False),
        (G("call rax", terminator="call-indirect"), COP, False),
        (G("syscall", terminator="syscall"), SYSCALL_TERMINATED, True),
        (G("int 0x80", terminator="int80"), SYSCALL_TERMINATED, True),
    ])
    def test_membership(self, g, expected, sysflag):
        gtype, flag = classify_gadget(g)
        assert gtype == expected
        assert flag == sysflag

    def test_counts_partition(self):
        gs = mkset(G("pop rbp", "ret", addr=1),
                   G("jmp rax", terminator="jmp-indirect", addr=2),
                   G("call rax", terminator="call-indirect", addr=3),
                   G("syscall", terminator="syscall", addr=4),
                   G("pop rdi", "ret", addr=5))
        tc = count_types(gs)
        assert tc.total == len(gs) == 5
        assert tc.rop + tc.jop + tc.cop + tc.syscall == tc.total
        assert (tc.rop, tc.jop, tc.cop, tc.syscall) == (2, 1, 1, 1)


class TestSpecialPurpose:
    def test_jop_dispatcher_register_step(self):
        gs = mkset(G("add rbx, 0x8", "jmp qword ptr [rbx]",
                     terminator="jmp-indirect"))
        rep = detect_special_purpose(gs)
        assert rep.count("jop_dispatcher") == 1

    def test_jop_dispatcher_through_register(self):
        gs = mkset(G("add rbx, 0x8", "jmp rbx", terminator="jmp-indirect"))
        assert detect_special_purpose(gs).count("jop_dispatcher") == 1

    def test_lea_self_update_counts(self):
        gs = mkset(G("lea rcx, [rcx+0x10]", "jmp rcx",
                     terminator="jmp-indirect"))
        assert detect_special_purpose(gs).count("jop_dispatcher") == 1

    def test_plain_rop_has_no_special(self):
        rep = detect_special_purpose(mkset(G("pop rbp", "ret")))
        assert all(rep.count(c) == 0 for c in rep.counts)

    def test_jop_load_data(self):
        gs = mkset(G("pop rax", "jmp rbx", terminator="jmp-indirect"))
        rep = detect_special_purpose(gs)
        assert rep.count("jop_load_data") == 1
        assert rep.count("jop_dispatcher") == 0

    def test_load_into_target_not_load_data(self):
        gs = mkset(G("pop rbx", "jmp rbx", terminator="jmp-indirect"))
        assert detect_special_purpose(gs).count("jop_load_data") == 0

    def test_cop_dispatcher(self):
        gs = mkset(G("sub rsi, 0x10", "call rsi",
                     terminator="call-indirect"))
        assert detect_special_purpose(gs).count("cop_dispatcher") == 1

    def test_cop_trampoline_stack_loaded_target(self):
        gs = mkset(G("pop rdi", "call rdi", terminator="call-indirect"))
        assert detect_special_purpose(gs).count("cop_trampoline") == 1

    def test_cop_stack_pivot(self):
        gs = mkset(G("lea rsp, [rsp+0x20]", "call rdi",
                     terminator="call-indirect"))
        rep = detect_special_purpose(gs)
        assert rep.count("cop_stack_pivot") == 1

    def test_syscall_category(self):
        gs = mkset(G("syscall", terminator="syscall"))
        assert detect_special_purpose(gs).count("syscall") == 1

    def test_empty_set_all_zero(self):
        rep = detect_special_purpose(mkset())
        assert all(rep.count(c) == 0 for c in rep.counts)

    def test_categories_disjoint(self):
        gs = mkset(
            G("add rbx, 0x8", "jmp qword ptr [rbx]",
              terminator="jmp-indirect", addr=1),
            G("pop rax", "jmp rbx", terminator="jmp-indirect", addr=2),
            G("add rcx, 0x8", "call rcx", terminator="call-indirect", addr=3),
            G("pop rdi", "call rdi", terminator="call-indirect", addr=4),
            G("mov rsp, rbp", "call rax", terminator="call-indirect", addr=5),
        )
        rep = detect_special_purpose(gs)
        jop = set(rep.identities["jop_dispatcher"]) \
            & set(rep.identities["jop_load_data"])
        cop_sets = [set(rep.identities[c]) for c in
                    ("cop_dispatcher", "cop_trampoline", "cop_stack_pivot")]
        assert not jop
        assert not (cop_sets[0] & cop_sets[1])
        assert not (cop_sets[0] & cop_sets[2])
        assert not (cop_sets[1] & cop_sets[2])

    def test_deterministic(self):
        gs = mkset(G("add rbx, 0x8", "jmp rbx", terminator="jmp-indirect"))
        a = detect_special_purpose(gs).to_dict()
        b = detect_special_purpose(gs).to_dict()
        assert a == b

    def test_counts_equal_list_lengths(self):
        gs = mkset(
            G("add rbx, 0x8", "jmp rbx", terminator="jmp-indirect", addr=1),
            G("syscall", terminator="syscall", addr=2))
        rep = detect_special_purpose(gs)
        for c in rep.counts:
            assert rep.count(c) == len(rep.identities[c])
