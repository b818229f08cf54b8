"""Decode x86-64 instructions at arbitrary byte offsets.

The canonical text format produced here defines gadget identity for the
whole toolkit: lowercase mnemonics, destination-first operands separated
by comma-space, hex immediates with an 0x prefix, explicit size
qualifiers on typed memory operands ("dword ptr [rbp+0x24]"), and
rip-relative displacements kept literal.
"""

from .decoder import (
    Instruction,
    Operand,
    decode_at,
    MAX_INSN_LEN,
    TERMINATOR_KINDS,
    PLAIN,
    RET,
    RET_IMM,
    JMP_INDIRECT,
    CALL_INDIRECT,
    SYSCALL,
    INT80,
    BRANCH,
    CALL_DIRECT,
    PRIVILEGED,
    INVALID_FOR_GADGET,
)

__all__ = [
    "Instruction", "Operand", "decode_at", "MAX_INSN_LEN",
    "TERMINATOR_KINDS", "PLAIN", "RET", "RET_IMM", "JMP_INDIRECT",
    "CALL_INDIRECT", "SYSCALL", "INT80", "BRANCH", "CALL_DIRECT",
    "PRIVILEGED", "INVALID_FOR_GADGET",
]
