"""Canonicalization used when comparing decoder output to a reference
disassembler (GNU objdump, Intel syntax).

The decoder's text format is normative for gadget identity; reference
output differs only in formatting.  This module collapses both sides to
a comparable core: strip prefix words, lowercase, and map mnemonic
aliases that name the same encoding.
"""

import re

# words a disassembler may print before the mnemonic proper
PREFIX_WORDS = frozenset({
    "lock", "rep", "repz", "repnz", "bnd", "notrack", "data16", "data32",
    "addr16", "addr32", "cs", "ds", "es", "fs", "gs", "ss", "{vex}",
    "{vex2}", "{vex3}", "{evex}", "{disp32}", "{disp8}", "{rex}",
})

_REX_WORD = re.compile(r"^rex(\.[wrxb]+)?$")

# alias -> canonical core. Both-direction aliases of the same encoding.
MNEMONIC_ALIASES = {
    # string ops: explicit-suffix form vs operand-carrying form
    # movsd/cmpsd also name SSE2 scalar ops; collapsing both sides to the
    # string-op stem keeps the comparison sound (both sides map identically)
    "movsb": "movs", "movsw": "movs", "movsd": "movs", "movsq": "movs",
    "cmpsb": "cmps", "cmpsw": "cmps", "cmpsd": "cmps", "cmpsq": "cmps",
    "stosb": "stos", "stosw": "stos", "stosd": "stos", "stosq": "stos",
    "lodsb": "lods", "lodsw": "lods", "lodsd": "lods", "lodsq": "lods",
    "scasb": "scas", "scasw": "scas", "scasd": "scas", "scasq": "scas",
    "insb": "ins", "insw": "ins", "insd": "ins",
    "outsb": "outs", "outsw": "outs", "outsd": "outs",
    # operand-size-suffixed control flow
    "retw": "ret", "retq": "ret", "jmpw": "jmp", "callw": "call",
    "iretw": "iret", "iretd": "iret", "iretq": "iret",
    "pushfw": "pushf", "pushfq": "pushf", "popfw": "popf", "popfq": "popf",
    "leavew": "leave", "retfw": "retf", "retfq": "retf",
    # ambiguous historic namings
    "xlatb": "xlat",
    "cwtl": "cwde", "cltq": "cdqe",
}

_PAREN = re.compile(r"\(.*?\)")


def is_prefix_word(tok: str) -> bool:
    return tok in PREFIX_WORDS or bool(_REX_WORD.match(tok))


def core_mnemonic(text: str) -> str | None:
    """First non-prefix token of an instruction text, alias-collapsed.

    Returns None when the text consists of prefix words only (a reference
    disassembler prints such lines for dangling prefixes; they are not
    instructions).
    """
    if "(bad)" in text or "bad}" in text:
        return None
    for tok in text.replace("\t", " ").split(" "):
        tok = tok.strip().lower()
        if not tok:
            continue
        if is_prefix_word(tok):
            continue
        tok = tok.split("(")[0]  # "fneni(8087 only)" -> "fneni"
        tok = tok.rstrip(",")
        if not tok:
            continue
        return MNEMONIC_ALIASES.get(tok, tok)
    return None


def normalize_text(text: str) -> str:
    """Case and whitespace normalization for full-text comparisons.

    External renderings differ only in spacing and case ("BYTE PTR[rbx]"
    vs "byte ptr [rbx]"); dropping whitespace entirely makes the
    comparison insensitive to both spacing conventions.
    """
    return re.sub(r"\s+", "", text.strip().lower())
