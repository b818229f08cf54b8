"""Opcode tables for the x86-64 decoder.

Entry grammar (consumed by decoder.py):

  None                          invalid encoding
  "mnem"                        no explicit operands
  "mnem SPEC"                   SPEC = comma-joined operand tokens
  "mnem SPEC|flags"             flags: d64 (default 64-bit operand size),
                                f64 (operand size forced to 64)
  ("grp", {reg: entry})         select by ModRM.reg (missing -> invalid)
  ("pfx", {None|"66"|"f3"|"f2": entry})   mandatory-prefix select
  ("mod", mem_entry, reg_entry) select by ModRM.mod (mem vs register form)
  ("modrm", {byte: entry}, default)  full-ModRM specials (0f01 etc.)
  ("osz", {16: e, 32: e, 64: e})     select by effective operand size
  ("rex", plain_entry, rexb_entry)   0x90 nop/xchg split on REX.B

Operand tokens: addressing letter + size letter(s), SDM style.
  E G M R I J O S C D P Q N V W U H B L K  as usual; implicit register
  names (AL, CL, DX, rAX, eAX, ...) stand for themselves.  "sIb" is a
  sign-extended byte immediate; "1" the literal shift count.
"""

# ---------------------------------------------------------------------------
# one-byte opcode map
# ---------------------------------------------------------------------------

GRP1 = ["add", "or", "adc", "sbb", "and", "sub", "xor", "cmp"]
GRP2 = ["rol", "ror", "rcl", "rcr", "shl", "shr", "shl", "sar"]

def _grp1(spec):
    return ("grp", {i: f"{m} {spec}" for i, m in enumerate(GRP1)})

def _grp2(spec):
    return ("grp", {i: f"{m} {spec}" for i, m in enumerate(GRP2)})

ONE_BYTE = {}

# 00-3f: classic ALU block, with invalid-in-64 gaps
for i, m in enumerate(["add", "or", "adc", "sbb", "and", "sub", "xor", "cmp"]):
    base = i * 8
    ONE_BYTE[base + 0] = f"{m} Eb,Gb"
    ONE_BYTE[base + 1] = f"{m} Ev,Gv"
    ONE_BYTE[base + 2] = f"{m} Gb,Eb"
    ONE_BYTE[base + 3] = f"{m} Gv,Ev"
    ONE_BYTE[base + 4] = f"{m} AL,Ib"
    ONE_BYTE[base + 5] = f"{m} eAX,Iz"
# 06/07/0e/16/17/1e/1f/27/2f/37/3f invalid in 64-bit mode; 26/2e/36/3e are
# segment prefixes handled by the engine; 0f escapes.
for b in (0x06, 0x07, 0x0E, 0x16, 0x17, 0x1E, 0x1F, 0x27, 0x2F, 0x37, 0x3F):
    ONE_BYTE[b] = None

for r in range(8):
    ONE_BYTE[0x50 + r] = "push +rv|d64"
    ONE_BYTE[0x58 + r] = "pop +rv|d64"

ONE_BYTE[0x60] = None  # pusha
ONE_BYTE[0x61] = None  # popa
# 0x62 is the EVEX prefix in 64-bit mode (engine)
ONE_BYTE[0x63] = "movsxd Gv,Ed"
ONE_BYTE[0x68] = ("osz", {16: "pushw Iz|d64", 32: "push Iz|d64",
                          64: "push Iz|d64"})
ONE_BYTE[0x69] = "imul Gv,Ev,Iz"
ONE_BYTE[0x6A] = ("osz", {16: "pushw sIbv|d64",
                          32: "push sIbv|d64", 64: "push sIbv|d64"})
ONE_BYTE[0x6B] = "imul Gv,Ev,sIbv"
ONE_BYTE[0x6C] = "insb"
ONE_BYTE[0x6D] = ("osz", {16: "insw", 32: "insd", 64: "insd"})
ONE_BYTE[0x6E] = "outsb"
ONE_BYTE[0x6F] = ("osz", {16: "outsw", 32: "outsd", 64: "outsd"})

_CC = ["o", "no", "b", "ae", "e", "ne", "be", "a",
       "s", "ns", "p", "np", "l", "ge", "le", "g"]
for i, cc in enumerate(_CC):
    ONE_BYTE[0x70 + i] = f"j{cc} Jb|d64"

ONE_BYTE[0x80] = _grp1("Eb,Ib")
ONE_BYTE[0x81] = _grp1("Ev,Iz")
ONE_BYTE[0x82] = None
ONE_BYTE[0x83] = _grp1("Ev,sIbv")
ONE_BYTE[0x84] = "test Eb,Gb"
ONE_BYTE[0x85] = "test Ev,Gv"
ONE_BYTE[0x86] = "xchg Eb,Gb"
ONE_BYTE[0x87] = "xchg Ev,Gv"
ONE_BYTE[0x88] = "mov Eb,Gb"
ONE_BYTE[0x89] = "mov Ev,Gv"
ONE_BYTE[0x8A] = "mov Gb,Eb"
ONE_BYTE[0x8B] = "mov Gv,Ev"
ONE_BYTE[0x8C] = "mov Ev,Sw"
ONE_BYTE[0x8D] = "lea Gv,M"
ONE_BYTE[0x8E] = "mov Sw,Ew"
ONE_BYTE[0x8F] = ("grp", {0: "pop Ev|d64"})  # reg!=0 -> XOP, engine

# 0x90 is nop / pause / xchg r8,rax depending on prefixes (engine assist)
ONE_BYTE[0x90] = "nop"  # engine: nop/pause/xchg split
for r in range(1, 8):
    ONE_BYTE[0x90 + r] = "xchg +rv,rAX"
ONE_BYTE[0x98] = ("osz", {16: "cbw", 32: "cwde", 64: "cdqe"})
ONE_BYTE[0x99] = ("osz", {16: "cwd", 32: "cdq", 64: "cqo"})
ONE_BYTE[0x9A] = None  # far call
ONE_BYTE[0x9B] = "fwait"
ONE_BYTE[0x9C] = ("osz", {16: "pushf", 32: "pushf", 64: "pushf"})
ONE_BYTE[0x9D] = ("osz", {16: "popf", 32: "popf", 64: "popf"})
ONE_BYTE[0x9C] = "pushf|d64"
ONE_BYTE[0x9D] = "popf|d64"
ONE_BYTE[0x9E] = "sahf"
ONE_BYTE[0x9F] = "lahf"
ONE_BYTE[0xA0] = ("a32", "movabs AL,Ob", "mov AL,Ob")
ONE_BYTE[0xA1] = ("a32", "movabs rAX,Ov", "mov rAX,Ov")
ONE_BYTE[0xA2] = ("a32", "movabs Ob,AL", "mov Ob,AL")
ONE_BYTE[0xA3] = ("a32", "movabs Ov,rAX", "mov Ov,rAX")
ONE_BYTE[0xA4] = "movsb"
ONE_BYTE[0xA5] = ("osz", {16: "movsw", 32: "movsd", 64: "movsq"})
ONE_BYTE[0xA6] = "cmpsb"
ONE_BYTE[0xA7] = ("osz", {16: "cmpsw", 32: "cmpsd", 64: "cmpsq"})
ONE_BYTE[0xA8] = "test AL,Ib"
ONE_BYTE[0xA9] = "test eAX,Iz"
ONE_BYTE[0xAA] = "stosb"
ONE_BYTE[0xAB] = ("osz", {16: "stosw", 32: "stosd", 64: "stosq"})
ONE_BYTE[0xAC] = "lodsb"
ONE_BYTE[0xAD] = ("osz", {16: "lodsw", 32: "lodsd", 64: "lodsq"})
ONE_BYTE[0xAE] = "scasb"
ONE_BYTE[0xAF] = ("osz", {16: "scasw", 32: "scasd", 64: "scasq"})
for r in range(8):
    ONE_BYTE[0xB0 + r] = "mov +rb,Ib"
    ONE_BYTE[0xB8 + r] = ("osz", {16: "mov +rv,Iv", 32: "mov +rv,Iv",
                                  64: "movabs +rv,Iv"})
ONE_BYTE[0xC0] = _grp2("Eb,Ib")
ONE_BYTE[0xC1] = _grp2("Ev,Ib")
ONE_BYTE[0xC2] = "ret Iw|f64"
ONE_BYTE[0xC3] = "ret|f64"
# 0xC4 / 0xC5 are VEX prefixes in 64-bit mode (engine)
ONE_BYTE[0xC6] = ("grp", {0: "mov Eb,Ib",
                          7: ("mod", None, ("modrm", {0xF8: "xabort Ib"}, None))})
ONE_BYTE[0xC7] = ("grp", {0: "mov Ev,Iz",
                          7: ("mod", None, ("modrm", {0xF8: "xbegin Jz"}, None))})
ONE_BYTE[0xC8] = ("osz", {16: "enterw Iw,Ib|d64",
                          32: "enter Iw,Ib|d64", 64: "enter Iw,Ib|d64"})
ONE_BYTE[0xC9] = ("osz", {16: "leavew|d64", 32: "leave|d64",
                          64: "leave|d64"})
ONE_BYTE[0xCA] = "retf Iw"
ONE_BYTE[0xCB] = "retf"
ONE_BYTE[0xCC] = "int3"
ONE_BYTE[0xCD] = "int Ib"
ONE_BYTE[0xCE] = None  # into
ONE_BYTE[0xCF] = ("osz", {16: "iretw", 32: "iret", 64: "iretq"})
ONE_BYTE[0xD0] = _grp2("Eb,1")
ONE_BYTE[0xD1] = _grp2("Ev,1")
ONE_BYTE[0xD2] = _grp2("Eb,CL")
ONE_BYTE[0xD3] = _grp2("Ev,CL")
ONE_BYTE[0xD4] = None  # aam
ONE_BYTE[0xD5] = None  # aad
ONE_BYTE[0xD6] = None  # salc
ONE_BYTE[0xD7] = "xlat XL"
# 0xD8-0xDF handled by the x87 tables (engine)
ONE_BYTE[0xE0] = "loopne Jb|f64"
ONE_BYTE[0xE1] = "loope Jb|f64"
ONE_BYTE[0xE2] = "loop Jb|f64"
ONE_BYTE[0xE3] = ("a32", "jrcxz Jb|f64", "jecxz Jb|f64")
ONE_BYTE[0xE4] = "in AL,Ib"
ONE_BYTE[0xE5] = "in eAX,Ib"
ONE_BYTE[0xE6] = "out Ib,AL"
ONE_BYTE[0xE7] = "out Ib,eAX"
ONE_BYTE[0xE8] = "call Jz|d64"
ONE_BYTE[0xE9] = "jmp Jz|d64"
ONE_BYTE[0xEA] = None  # far jmp
ONE_BYTE[0xEB] = "jmp Jb|d64"
ONE_BYTE[0xEC] = "in AL,DX"
ONE_BYTE[0xED] = "in eAX,DX"
ONE_BYTE[0xEE] = "out DX,AL"
ONE_BYTE[0xEF] = "out DX,eAX"
ONE_BYTE[0xF1] = "int1"
ONE_BYTE[0xF4] = "hlt"
ONE_BYTE[0xF5] = "cmc"
ONE_BYTE[0xF6] = ("grp", {0: "test Eb,Ib", 1: "test Eb,Ib", 2: "not Eb",
                          3: "neg Eb", 4: "mul Eb", 5: "imul Eb",
                          6: "div Eb", 7: "idiv Eb"})
ONE_BYTE[0xF7] = ("grp", {0: "test Ev,Iz", 1: "test Ev,Iz", 2: "not Ev",
                          3: "neg Ev", 4: "mul Ev", 5: "imul Ev",
                          6: "div Ev", 7: "idiv Ev"})
ONE_BYTE[0xF8] = "clc"
ONE_BYTE[0xF9] = "stc"
ONE_BYTE[0xFA] = "cli"
ONE_BYTE[0xFB] = "sti"
ONE_BYTE[0xFC] = "cld"
ONE_BYTE[0xFD] = "std"
ONE_BYTE[0xFE] = ("grp", {0: "inc Eb", 1: "dec Eb"})
ONE_BYTE[0xFF] = ("grp", {0: "inc Ev", 1: "dec Ev", 2: "call Ev|d64",
                          3: "call Mp", 4: "jmp Ev|d64", 5: "jmp Mp",
                          6: "push Ev|d64"})

# ---------------------------------------------------------------------------
# two-byte opcode map (0f xx)
# ---------------------------------------------------------------------------

TWO_BYTE = {}

TWO_BYTE[0x00] = ("grp", {0: "sldt Ev", 1: "str Ev", 2: "lldt Ew",
                          3: "ltr Ew", 4: "verr Ew", 5: "verw Ew"})
TWO_BYTE[0x01] = ("mod",
                  ("grp", {0: "sgdt Ms", 1: "sidt Ms", 2: "lgdt Ms",
                           3: "lidt Ms", 4: "smsw Ev",
                           5: ("pfx", {"f3": "rstorssp Mq"}),
                           6: "lmsw Ew", 7: "invlpg M"}),
                  ("modrm", {
                      0xC0: "enclv", 0xC1: "vmcall", 0xC2: "vmlaunch",
                      0xC3: "vmresume", 0xC4: "vmxoff", 0xC5: "pconfig",
                      0xC8: "monitor", 0xC9: "mwait",
                      0xCA: "clac", 0xCB: "stac", 0xCF: "encls",
                      0xD0: "xgetbv", 0xD1: "xsetbv",
                      0xD4: "vmfunc", 0xD5: "xend", 0xD6: "xtest",
                      0xD7: "enclu", 0xD8: "vmrun", 0xD9: "vmmcall",
                      0xDA: "vmload", 0xDB: "vmsave", 0xDC: "stgi",
                      0xDD: "clgi", 0xDE: "skinit", 0xDF: "invlpga",
                      0xE8: "serialize", 0xEE: "rdpkru", 0xEF: "wrpkru",
                      0xF8: "swapgs", 0xF9: "rdtscp", 0xFA: "monitorx",
                      0xFB: "mwaitx", 0xFC: "clzero", 0xFD: "rdpru",
                      0xFE: "invlpgb", 0xFF: "tlbsync",
                  }, ("grp", {4: "smsw Ev", 6: "lmsw Ew"})))
TWO_BYTE[0x02] = "lar Gv,Ew"
TWO_BYTE[0x03] = "lsl Gv,Ew"
TWO_BYTE[0x05] = "syscall"
TWO_BYTE[0x06] = "clts"
TWO_BYTE[0x07] = ("rexw", "sysretd", "sysretq")
TWO_BYTE[0x08] = "invd"
TWO_BYTE[0x09] = "wbinvd"
TWO_BYTE[0x0B] = "ud2"
TWO_BYTE[0x0D] = ("grp", {0: "prefetch M", 1: "prefetchw M",
                          2: "prefetchwt1 M", 3: "prefetch M",
                          4: "prefetch M", 5: "prefetch M",
                          6: "prefetch M", 7: "prefetch M"})
TWO_BYTE[0x0E] = "femms"
# 0x0F is the 3DNow! escape (engine: suffix byte after ModRM)

TWO_BYTE[0x10] = ("pfx", {None: "movups Vx,Wx", "66": "movupd Vx,Wx",
                          "f3": "movss Vss,Wss", "f2": "movsd Vsd,Wsd"})
TWO_BYTE[0x11] = ("pfx", {None: "movups Wx,Vx", "66": "movupd Wx,Vx",
                          "f3": "movss Wss,Vss", "f2": "movsd Wsd,Vsd"})
TWO_BYTE[0x12] = ("pfx", {None: ("mod", "movlps Vq,Mq", "movhlps Vq,Uq"),
                          "66": "movlpd Vq,Mq",
                          "f3": "movsldup Vx,Wx", "f2": "movddup Vq,Wq"})
TWO_BYTE[0x13] = ("pfx", {None: "movlps Mq,Vq", "66": "movlpd Mq,Vq"})
TWO_BYTE[0x14] = ("pfx", {None: "unpcklps Vx,Wx", "66": "unpcklpd Vx,Wx"})
TWO_BYTE[0x15] = ("pfx", {None: "unpckhps Vx,Wx", "66": "unpckhpd Vx,Wx"})
TWO_BYTE[0x16] = ("pfx", {None: ("mod", "movhps Vq,Mq", "movlhps Vq,Uq"),
                          "66": "movhpd Vq,Mq", "f3": "movshdup Vx,Wx"})
TWO_BYTE[0x17] = ("pfx", {None: "movhps Mq,Vq", "66": "movhpd Mq,Vq"})
TWO_BYTE[0x18] = ("mod",
                  ("grp", {0: "prefetchnta M", 1: "prefetcht0 M",
                           2: "prefetcht1 M", 3: "prefetcht2 M",
                           4: "nop Ev", 5: "nop Ev", 6: "nop Ev",
                           7: "nop Ev"}),
                  "nop Ev")
TWO_BYTE[0x19] = "nop Ev"
TWO_BYTE[0x1A] = ("pfx", {None: ("mod", "bndldx B!,M", "nop Ev"),
                          "66": "bndmov B!,E!",
                          "f3": "bndcl B!,Ey", "f2": "bndcu B!,Ey"})
TWO_BYTE[0x1B] = ("pfx", {None: ("mod", "bndstx M,B!", "nop Ev"),
                          "66": "bndmov E!,B!",
                          "f3": ("mod", "bndmk B!,M", "nop Ev"),
                          "f2": "bndcn B!,Ey"})
TWO_BYTE[0x1C] = ("pfxw", {None: ("mod",
                                  ("grp", {0: "cldemote Mb", 1: "nop Ev",
                                           2: "nop Ev", 3: "nop Ev",
                                           4: "nop Ev", 5: "nop Ev",
                                           6: "nop Ev", 7: "nop Ev"}),
                                  "nop Ev"),
                           "66": "nop Ev", "f3": "nop Ev", "f2": "nop Ev"})
TWO_BYTE[0x1D] = "nop Ev"
TWO_BYTE[0x1E] = ("pfxw", {None: "nop Ev", "66": "nop Ev", "f2": "nop Ev",
                           "f3": ("modrm",
                                  {0xFA: "endbr64|csmr",
                                   0xFB: "endbr32|csmr"},
                                  ("mod", "nop Ev",
                                   ("grp", {0: "nop Ev",
                                            1: ("rexw", "rdsspd Rd|csmr",
                                                "rdsspq Rq|csmr"),
                                            2: "nop Ev", 3: "nop Ev",
                                            4: "nop Ev", 5: "nop Ev",
                                            6: "nop Ev", 7: "nop Ev"})))})
TWO_BYTE[0x1F] = "nop Ev"
TWO_BYTE[0x20] = "mov RC,Cq"
TWO_BYTE[0x21] = "mov RC,Dq"
TWO_BYTE[0x22] = "mov Cq,RC"
TWO_BYTE[0x23] = "mov Dq,RC"
TWO_BYTE[0x28] = ("pfx", {None: "movaps Vx,Wx", "66": "movapd Vx,Wx"})
TWO_BYTE[0x29] = ("pfx", {None: "movaps Wx,Vx", "66": "movapd Wx,Vx"})
TWO_BYTE[0x2A] = ("pfx", {None: "cvtpi2ps Vx,Qq", "66": "cvtpi2pd Vx,Qq",
                          "f3": "cvtsi2ss Vss,Ey", "f2": "cvtsi2sd Vsd,Ey"})
TWO_BYTE[0x2B] = ("pfx", {None: "movntps Mx,Vx", "66": "movntpd Mx,Vx"})
TWO_BYTE[0x2C] = ("pfx", {None: "cvttps2pi Pq,Wq", "66": "cvttpd2pi Pq,Wx",
                          "f3": "cvttss2si Gy,Wss", "f2": "cvttsd2si Gy,Wsd"})
TWO_BYTE[0x2D] = ("pfx", {None: "cvtps2pi Pq,Wq", "66": "cvtpd2pi Pq,Wx",
                          "f3": "cvtss2si Gy,Wss", "f2": "cvtsd2si Gy,Wsd"})
TWO_BYTE[0x2E] = ("pfx", {None: "ucomiss Vss,Wss", "66": "ucomisd Vsd,Wsd"})
TWO_BYTE[0x2F] = ("pfx", {None: "comiss Vss,Wss", "66": "comisd Vsd,Wsd"})

TWO_BYTE[0x30] = "wrmsr"
TWO_BYTE[0x31] = "rdtsc"
TWO_BYTE[0x32] = "rdmsr"
TWO_BYTE[0x33] = "rdpmc"
TWO_BYTE[0x34] = "sysenter"
TWO_BYTE[0x35] = ("rexw", "sysexitd", "sysexitq")
TWO_BYTE[0x37] = "getsec"
# 0x38 / 0x3A escape to the three-byte maps (engine)

for i, cc in enumerate(_CC):
    TWO_BYTE[0x40 + i] = f"cmov{cc} Gv,Ev"

TWO_BYTE[0x50] = ("pfx", {None: "movmskps Gy,Ux", "66": "movmskpd Gy,Ux"})
TWO_BYTE[0x51] = ("pfx", {None: "sqrtps Vx,Wx", "66": "sqrtpd Vx,Wx",
                          "f3": "sqrtss Vss,Wss", "f2": "sqrtsd Vsd,Wsd"})
TWO_BYTE[0x52] = ("pfx", {None: "rsqrtps Vx,Wx", "f3": "rsqrtss Vss,Wss"})
TWO_BYTE[0x53] = ("pfx", {None: "rcpps Vx,Wx", "f3": "rcpss Vss,Wss"})
TWO_BYTE[0x54] = ("pfx", {None: "andps Vx,Wx", "66": "andpd Vx,Wx"})
TWO_BYTE[0x55] = ("pfx", {None: "andnps Vx,Wx", "66": "andnpd Vx,Wx"})
TWO_BYTE[0x56] = ("pfx", {None: "orps Vx,Wx", "66": "orpd Vx,Wx"})
TWO_BYTE[0x57] = ("pfx", {None: "xorps Vx,Wx", "66": "xorpd Vx,Wx"})
TWO_BYTE[0x58] = ("pfx", {None: "addps Vx,Wx", "66": "addpd Vx,Wx",
                          "f3": "addss Vss,Wss", "f2": "addsd Vsd,Wsd"})
TWO_BYTE[0x59] = ("pfx", {None: "mulps Vx,Wx", "66": "mulpd Vx,Wx",
                          "f3": "mulss Vss,Wss", "f2": "mulsd Vsd,Wsd"})
TWO_BYTE[0x5A] = ("pfx", {None: "cvtps2pd Vx,Wx", "66": "cvtpd2ps Vx,Wx",
                          "f3": "cvtss2sd Vsd,Wss", "f2": "cvtsd2ss Vss,Wsd"})
TWO_BYTE[0x5B] = ("pfx", {None: "cvtdq2ps Vx,Wx", "66": "cvtps2dq Vx,Wx",
                          "f3": "cvttps2dq Vx,Wx"})
TWO_BYTE[0x5C] = ("pfx", {None: "subps Vx,Wx", "66": "subpd Vx,Wx",
                          "f3": "subss Vss,Wss", "f2": "subsd Vsd,Wsd"})
TWO_BYTE[0x5D] = ("pfx", {None: "minps Vx,Wx", "66": "minpd Vx,Wx",
                          "f3": "minss Vss,Wss", "f2": "minsd Vsd,Wsd"})
TWO_BYTE[0x5E] = ("pfx", {None: "divps Vx,Wx", "66": "divpd Vx,Wx",
                          "f3": "divss Vss,Wss", "f2": "divsd Vsd,Wsd"})
TWO_BYTE[0x5F] = ("pfx", {None: "maxps Vx,Wx", "66": "maxpd Vx,Wx",
                          "f3": "maxss Vss,Wss", "f2": "maxsd Vsd,Wsd"})

TWO_BYTE[0x60] = ("pfx", {None: "punpcklbw Pq,Qd", "66": "punpcklbw Vx,Wx"})
TWO_BYTE[0x61] = ("pfx", {None: "punpcklwd Pq,Qd", "66": "punpcklwd Vx,Wx"})
TWO_BYTE[0x62] = ("pfx", {None: "punpckldq Pq,Qd", "66": "punpckldq Vx,Wx"})
TWO_BYTE[0x63] = ("pfx", {None: "packsswb Pq,Qq", "66": "packsswb Vx,Wx"})
TWO_BYTE[0x64] = ("pfx", {None: "pcmpgtb Pq,Qq", "66": "pcmpgtb Vx,Wx"})
TWO_BYTE[0x65] = ("pfx", {None: "pcmpgtw Pq,Qq", "66": "pcmpgtw Vx,Wx"})
TWO_BYTE[0x66] = ("pfx", {None: "pcmpgtd Pq,Qq", "66": "pcmpgtd Vx,Wx"})
TWO_BYTE[0x67] = ("pfx", {None: "packuswb Pq,Qq", "66": "packuswb Vx,Wx"})
TWO_BYTE[0x68] = ("pfx", {None: "punpckhbw Pq,Qd", "66": "punpckhbw Vx,Wx"})
TWO_BYTE[0x69] = ("pfx", {None: "punpckhwd Pq,Qd", "66": "punpckhwd Vx,Wx"})
TWO_BYTE[0x6A] = ("pfx", {None: "punpckhdq Pq,Qd", "66": "punpckhdq Vx,Wx"})
TWO_BYTE[0x6B] = ("pfx", {None: "packssdw Pq,Qd", "66": "packssdw Vx,Wx"})
TWO_BYTE[0x6C] = ("pfx", {"66": "punpcklqdq Vx,Wx"})
TWO_BYTE[0x6D] = ("pfx", {"66": "punpckhqdq Vx,Wx"})
TWO_BYTE[0x6E] = ("pfx", {None: ("rexw", "movd Pq,Ed", "movq Pq,Eq"),
                          "66": ("rexw", "movd Vx,Ed", "movq Vx,Eq")})
TWO_BYTE[0x6F] = ("pfx", {None: "movq Pq,Qq", "66": "movdqa Vx,Wx",
                          "f3": "movdqu Vx,Wx"})

TWO_BYTE[0x70] = ("pfx", {None: "pshufw Pq,Qq,Ib", "66": "pshufd Vx,Wx,Ib",
                          "f3": "pshufhw Vx,Wx,Ib", "f2": "pshuflw Vx,Wx,Ib"})
TWO_BYTE[0x71] = ("grp", {2: ("pfx", {None: "psrlw Nq,Ib", "66": "psrlw Ux,Ib"}),
                          4: ("pfx", {None: "psraw Nq,Ib", "66": "psraw Ux,Ib"}),
                          6: ("pfx", {None: "psllw Nq,Ib", "66": "psllw Ux,Ib"})})
TWO_BYTE[0x72] = ("grp", {2: ("pfx", {None: "psrld Nq,Ib", "66": "psrld Ux,Ib"}),
                          4: ("pfx", {None: "psrad Nq,Ib", "66": "psrad Ux,Ib"}),
                          6: ("pfx", {None: "pslld Nq,Ib", "66": "pslld Ux,Ib"})})
TWO_BYTE[0x73] = ("grp", {2: ("pfx", {None: "psrlq Nq,Ib", "66": "psrlq Ux,Ib"}),
                          3: ("pfx", {"66": "psrldq Ux,Ib"}),
                          6: ("pfx", {None: "psllq Nq,Ib", "66": "psllq Ux,Ib"}),
                          7: ("pfx", {"66": "pslldq Ux,Ib"})})
TWO_BYTE[0x74] = ("pfx", {None: "pcmpeqb Pq,Qq", "66": "pcmpeqb Vx,Wx"})
TWO_BYTE[0x75] = ("pfx", {None: "pcmpeqw Pq,Qq", "66": "pcmpeqw Vx,Wx"})
TWO_BYTE[0x76] = ("pfx", {None: "pcmpeqd Pq,Qq", "66": "pcmpeqd Vx,Wx"})
TWO_BYTE[0x77] = ("pfx", {None: "emms"})
TWO_BYTE[0x78] = ("pfx", {None: "vmread Eq,Gq",
                          "66": ("grp", {0: "extrq Ux,Ib,Ib"}),
                          "f2": "insertq Vx,Ux,Ib,Ib"})
TWO_BYTE[0x79] = ("pfx", {None: "vmwrite Gq,Eq",
                          "66": "extrq Vx,Ux",
                          "f2": "insertq Vx,Ux"})
TWO_BYTE[0x7C] = ("pfx", {"66": "haddpd Vx,Wx", "f2": "haddps Vx,Wx"})
TWO_BYTE[0x7D] = ("pfx", {"66": "hsubpd Vx,Wx", "f2": "hsubps Vx,Wx"})
TWO_BYTE[0x7E] = ("pfx", {None: ("rexw", "movd Ed,Pq", "movq Eq,Pq"),
                          "66": ("rexw", "movd Ed,Vx", "movq Eq,Vx"),
                          "f3": "movq Vq,Wq"})
TWO_BYTE[0x7F] = ("pfx", {None: "movq Qq,Pq", "66": "movdqa Wx,Vx",
                          "f3": "movdqu Wx,Vx"})

for i, cc in enumerate(_CC):
    TWO_BYTE[0x80 + i] = f"j{cc} Jz|d64"
for i, cc in enumerate(_CC):
    TWO_BYTE[0x90 + i] = f"set{cc} Eb"

TWO_BYTE[0xA0] = ("osz", {16: "pushw FS|d64", 32: "push FS|d64",
                            64: "push FS|d64"})
TWO_BYTE[0xA1] = ("osz", {16: "popw FS|d64", 32: "pop FS|d64",
                            64: "pop FS|d64"})
TWO_BYTE[0xA2] = "cpuid"
TWO_BYTE[0xA3] = "bt Ev,Gv"
TWO_BYTE[0xA6] = ("modrm", {0xC0: "montmul", 0xC8: "xsha1",
                            0xD0: "xsha256"}, None)
TWO_BYTE[0xA7] = ("modrm", {0xC0: "xstore-rng", 0xC8: "xcrypt-ecb",
                            0xD0: "xcrypt-cbc", 0xD8: "xcrypt-ctr",
                            0xE0: "xcrypt-cfb", 0xE8: "xcrypt-ofb"}, None)
TWO_BYTE[0xA4] = "shld Ev,Gv,Ib"
TWO_BYTE[0xA5] = "shld Ev,Gv,CL"
TWO_BYTE[0xA8] = ("osz", {16: "pushw GS|d64", 32: "push GS|d64",
                            64: "push GS|d64"})
TWO_BYTE[0xA9] = ("osz", {16: "popw GS|d64", 32: "pop GS|d64",
                            64: "pop GS|d64"})
TWO_BYTE[0xAA] = "rsm"
TWO_BYTE[0xAB] = "bts Ev,Gv"
TWO_BYTE[0xAC] = "shrd Ev,Gv,Ib"
TWO_BYTE[0xAD] = "shrd Ev,Gv,CL"
TWO_BYTE[0xAE] = ("mod",
                  ("grp", {0: ("pfx", {None: ("rexw", "fxsave M",
                                               "fxsave64 M"),
                                        "f3": "wrfsbase Ry"}),
                           1: ("pfx", {None: ("rexw", "fxrstor M",
                                              "fxrstor64 M"),
                                       "f3": "wrgsbase Ry"}),
                           2: "ldmxcsr Md", 3: "stmxcsr Md",
                           4: ("rexw", "xsave M", "xsave64 M"),
                           5: ("rexw", "xrstor M", "xrstor64 M"),
                           6: ("rexw", "xsaveopt M", "xsaveopt64 M"),
                           7: "clflush M"}),
                  ("grp", {0: ("pfx", {"f3": "rdfsbase Ry"}),
                           1: ("pfx", {"f3": "rdgsbase Ry"}),
                           2: ("pfx", {"f3": "wrfsbase Ry"}),
                           3: ("pfx", {"f3": "wrgsbase Ry"}),
                           5: ("pfx", {None: "lfence",
                                       "f3": ("rexw", "incsspd Rd",
                                              "incsspq Rq")}),
                           6: ("modrm", {0xF0: ("pfx", {None: "mfence",
                                                        "66": "tpause Rd",
                                                        "f3": "umonitor Rq",
                                                        "f2": "umwait Rd"})},
                               None),
                           7: ("modrm", {0xF8: ("pfx", {None: "sfence"})},
                               None)}))
TWO_BYTE[0xAF] = "imul Gv,Ev"

TWO_BYTE[0xB0] = "cmpxchg Eb,Gb"
TWO_BYTE[0xB1] = "cmpxchg Ev,Gv"
TWO_BYTE[0xB2] = "lss Gv,Mp"
TWO_BYTE[0xB3] = "btr Ev,Gv"
TWO_BYTE[0xB4] = "lfs Gv,Mp"
TWO_BYTE[0xB5] = "lgs Gv,Mp"
TWO_BYTE[0xB6] = "movzx Gv,Eb"
TWO_BYTE[0xB7] = "movzx Gv,Ew"
TWO_BYTE[0xB8] = ("pfx", {"f3": "popcnt Gv,Ev"})
TWO_BYTE[0xB9] = "ud1 Gv,Ev"
TWO_BYTE[0xBA] = ("grp", {4: "bt Ev,Ib", 5: "bts Ev,Ib", 6: "btr Ev,Ib",
                          7: "btc Ev,Ib"})
TWO_BYTE[0xBB] = "btc Ev,Gv"
TWO_BYTE[0xBC] = ("pfx", {None: "bsf Gv,Ev", "66": "bsf Gv,Ev",
                          "f3": "tzcnt Gv,Ev"})
TWO_BYTE[0xBD] = ("pfx", {None: "bsr Gv,Ev", "66": "bsr Gv,Ev",
                          "f3": "lzcnt Gv,Ev"})
TWO_BYTE[0xBE] = "movsx Gv,Eb"
TWO_BYTE[0xBF] = "movsx Gv,Ew"

TWO_BYTE[0xC0] = "xadd Eb,Gb"
TWO_BYTE[0xC1] = "xadd Ev,Gv"
TWO_BYTE[0xC2] = ("pfx", {None: "cmpps Vx,Wx,CC", "66": "cmppd Vx,Wx,CC",
                          "f3": "cmpss Vss,Wss,CC", "f2": "cmpsd Vsd,Wsd,CC"})
TWO_BYTE[0xC3] = ("pfx", {None: "movnti My,Gy"})
TWO_BYTE[0xC4] = ("pfx", {None: "pinsrw Pq,Ew,Ib", "66": "pinsrw Vx,Ew,Ib"})
TWO_BYTE[0xC5] = ("pfx", {None: "pextrw Gd,Nq,Ib", "66": "pextrw Gd,Ux,Ib"})
TWO_BYTE[0xC6] = ("pfx", {None: "shufps Vx,Wx,Ib", "66": "shufpd Vx,Wx,Ib"})
TWO_BYTE[0xC7] = ("mod",
                  ("grp", {1: ("osz", {16: "cmpxchg8b Mq", 32: "cmpxchg8b Mq",
                                       64: "cmpxchg16b Mx"}),
                           3: ("rexw", "xrstors M", "xrstors64 M"),
                           4: ("rexw", "xsavec M", "xsavec64 M"),
                           5: ("rexw", "xsaves M", "xsaves64 M"),
                           6: ("pfx", {None: "vmptrld Mq", "66": "vmclear Mq",
                                       "f3": "vmxon Mq"}),
                           7: "vmptrst Mq"}),
                  ("grp", {6: "rdrand Rv", 7: ("pfx", {None: "rdseed Rv",
                                                       "f3": "rdpid Rq"})}))
for r in range(8):
    TWO_BYTE[0xC8 + r] = "bswap +rv"

TWO_BYTE[0xD0] = ("pfx", {"66": "addsubpd Vx,Wx", "f2": "addsubps Vx,Wx"})
TWO_BYTE[0xD1] = ("pfx", {None: "psrlw Pq,Qq", "66": "psrlw Vx,Wx"})
TWO_BYTE[0xD2] = ("pfx", {None: "psrld Pq,Qq", "66": "psrld Vx,Wx"})
TWO_BYTE[0xD3] = ("pfx", {None: "psrlq Pq,Qq", "66": "psrlq Vx,Wx"})
TWO_BYTE[0xD4] = ("pfx", {None: "paddq Pq,Qq", "66": "paddq Vx,Wx"})
TWO_BYTE[0xD5] = ("pfx", {None: "pmullw Pq,Qq", "66": "pmullw Vx,Wx"})
TWO_BYTE[0xD6] = ("pfx", {"66": "movq Wq,Vq", "f3": "movq2dq Vx,Nq",
                          "f2": "movdq2q Pq,Ux"})
TWO_BYTE[0xD7] = ("pfx", {None: "pmovmskb Gd,Nq", "66": "pmovmskb Gd,Ux"})
TWO_BYTE[0xD8] = ("pfx", {None: "psubusb Pq,Qq", "66": "psubusb Vx,Wx"})
TWO_BYTE[0xD9] = ("pfx", {None: "psubusw Pq,Qq", "66": "psubusw Vx,Wx"})
TWO_BYTE[0xDA] = ("pfx", {None: "pminub Pq,Qq", "66": "pminub Vx,Wx"})
TWO_BYTE[0xDB] = ("pfx", {None: "pand Pq,Qq", "66": "pand Vx,Wx"})
TWO_BYTE[0xDC] = ("pfx", {None: "paddusb Pq,Qq", "66": "paddusb Vx,Wx"})
TWO_BYTE[0xDD] = ("pfx", {None: "paddusw Pq,Qq", "66": "paddusw Vx,Wx"})
TWO_BYTE[0xDE] = ("pfx", {None: "pmaxub Pq,Qq", "66": "pmaxub Vx,Wx"})
TWO_BYTE[0xDF] = ("pfx", {None: "pandn Pq,Qq", "66": "pandn Vx,Wx"})

TWO_BYTE[0xE0] = ("pfx", {None: "pavgb Pq,Qq", "66": "pavgb Vx,Wx"})
TWO_BYTE[0xE1] = ("pfx", {None: "psraw Pq,Qq", "66": "psraw Vx,Wx"})
TWO_BYTE[0xE2] = ("pfx", {None: "psrad Pq,Qq", "66": "psrad Vx,Wx"})
TWO_BYTE[0xE3] = ("pfx", {None: "pavgw Pq,Qq", "66": "pavgw Vx,Wx"})
TWO_BYTE[0xE4] = ("pfx", {None: "pmulhuw Pq,Qq", "66": "pmulhuw Vx,Wx"})
TWO_BYTE[0xE5] = ("pfx", {None: "pmulhw Pq,Qq", "66": "pmulhw Vx,Wx"})
TWO_BYTE[0xE6] = ("pfx", {"66": "cvttpd2dq Vx,Wx", "f3": "cvtdq2pd Vx,Wx",
                          "f2": "cvtpd2dq Vx,Wx"})
TWO_BYTE[0xE7] = ("pfx", {None: "movntq Mq,Pq", "66": "movntdq Mx,Vx"})
TWO_BYTE[0xE8] = ("pfx", {None: "psubsb Pq,Qq", "66": "psubsb Vx,Wx"})
TWO_BYTE[0xE9] = ("pfx", {None: "psubsw Pq,Qq", "66": "psubsw Vx,Wx"})
TWO_BYTE[0xEA] = ("pfx", {None: "pminsw Pq,Qq", "66": "pminsw Vx,Wx"})
TWO_BYTE[0xEB] = ("pfx", {None: "por Pq,Qq", "66": "por Vx,Wx"})
TWO_BYTE[0xEC] = ("pfx", {None: "paddsb Pq,Qq", "66": "paddsb Vx,Wx"})
TWO_BYTE[0xED] = ("pfx", {None: "paddsw Pq,Qq", "66": "paddsw Vx,Wx"})
TWO_BYTE[0xEE] = ("pfx", {None: "pmaxsw Pq,Qq", "66": "pmaxsw Vx,Wx"})
TWO_BYTE[0xEF] = ("pfx", {None: "pxor Pq,Qq", "66": "pxor Vx,Wx"})

TWO_BYTE[0xF0] = ("pfx", {"f2": "lddqu Vx,Mx"})
TWO_BYTE[0xF1] = ("pfx", {None: "psllw Pq,Qq", "66": "psllw Vx,Wx"})
TWO_BYTE[0xF2] = ("pfx", {None: "pslld Pq,Qq", "66": "pslld Vx,Wx"})
TWO_BYTE[0xF3] = ("pfx", {None: "psllq Pq,Qq", "66": "psllq Vx,Wx"})
TWO_BYTE[0xF4] = ("pfx", {None: "pmuludq Pq,Qq", "66": "pmuludq Vx,Wx"})
TWO_BYTE[0xF5] = ("pfx", {None: "pmaddwd Pq,Qq", "66": "pmaddwd Vx,Wx"})
TWO_BYTE[0xF6] = ("pfx", {None: "psadbw Pq,Qq", "66": "psadbw Vx,Wx"})
TWO_BYTE[0xF7] = ("pfx", {None: "maskmovq Pq,Nq", "66": "maskmovdqu Vx,Ux"})
TWO_BYTE[0xF8] = ("pfx", {None: "psubb Pq,Qq", "66": "psubb Vx,Wx"})
TWO_BYTE[0xF9] = ("pfx", {None: "psubw Pq,Qq", "66": "psubw Vx,Wx"})
TWO_BYTE[0xFA] = ("pfx", {None: "psubd Pq,Qq", "66": "psubd Vx,Wx"})
TWO_BYTE[0xFB] = ("pfx", {None: "psubq Pq,Qq", "66": "psubq Vx,Wx"})
TWO_BYTE[0xFC] = ("pfx", {None: "paddb Pq,Qq", "66": "paddb Vx,Wx"})
TWO_BYTE[0xFD] = ("pfx", {None: "paddw Pq,Qq", "66": "paddw Vx,Wx"})
TWO_BYTE[0xFE] = ("pfx", {None: "paddd Pq,Qq", "66": "paddd Vx,Wx"})
TWO_BYTE[0xFF] = "ud0 Gv,Ev"

# ---------------------------------------------------------------------------
# three-byte maps
# ---------------------------------------------------------------------------

THREE_38 = {}

_SS3 = {0x00: "pshufb", 0x01: "phaddw", 0x02: "phaddd", 0x03: "phaddsw",
        0x04: "pmaddubsw", 0x05: "phsubw", 0x06: "phsubd", 0x07: "phsubsw",
        0x08: "psignb", 0x09: "psignw", 0x0A: "psignd", 0x0B: "pmulhrsw"}
for op, m in _SS3.items():
    THREE_38[op] = ("pfx", {None: f"{m} Pq,Qq", "66": f"{m} Vx,Wx"})
THREE_38[0x0C] = None
THREE_38[0x10] = ("pfx", {"66": "pblendvb Vx,Wx"})
THREE_38[0x14] = ("pfx", {"66": "blendvps Vx,Wx"})
THREE_38[0x15] = ("pfx", {"66": "blendvpd Vx,Wx"})
THREE_38[0x17] = ("pfx", {"66": "ptest Vx,Wx"})
THREE_38[0x1C] = ("pfx", {None: "pabsb Pq,Qq", "66": "pabsb Vx,Wx"})
THREE_38[0x1D] = ("pfx", {None: "pabsw Pq,Qq", "66": "pabsw Vx,Wx"})
THREE_38[0x1E] = ("pfx", {None: "pabsd Pq,Qq", "66": "pabsd Vx,Wx"})
_PMOV = {0x20: ("pmovsxbw", "Wq"), 0x21: ("pmovsxbd", "Wd"),
         0x22: ("pmovsxbq", "Ww"), 0x23: ("pmovsxwd", "Wq"),
         0x24: ("pmovsxwq", "Wd"), 0x25: ("pmovsxdq", "Wq"),
         0x30: ("pmovzxbw", "Wq"), 0x31: ("pmovzxbd", "Wd"),
         0x32: ("pmovzxbq", "Ww"), 0x33: ("pmovzxwd", "Wq"),
         0x34: ("pmovzxwq", "Wd"), 0x35: ("pmovzxdq", "Wq")}
for op, (m, w) in _PMOV.items():
    THREE_38[op] = ("pfx", {"66": f"{m} Vx,{w}"})
THREE_38[0x28] = ("pfx", {"66": "pmuldq Vx,Wx"})
THREE_38[0x29] = ("pfx", {"66": "pcmpeqq Vx,Wx"})
THREE_38[0x2A] = ("pfx", {"66": "movntdqa Vx,Mx"})
THREE_38[0x2B] = ("pfx", {"66": "packusdw Vx,Wx"})
THREE_38[0x37] = ("pfx", {"66": "pcmpgtq Vx,Wx"})
_SSE41 = {0x38: "pminsb", 0x39: "pminsd", 0x3A: "pminuw", 0x3B: "pminud",
          0x3C: "pmaxsb", 0x3D: "pmaxsd", 0x3E: "pmaxuw", 0x3F: "pmaxud",
          0x40: "pmulld"}
for op, m in _SSE41.items():
    THREE_38[op] = ("pfx", {"66": f"{m} Vx,Wx"})
THREE_38[0x41] = ("pfx", {"66": "phminposuw Vx,Wx"})
THREE_38[0x80] = ("pfx", {"66": "invept Gq,Mx"})
THREE_38[0x81] = ("pfx", {"66": "invvpid Gq,Mx"})
THREE_38[0x82] = ("pfx", {"66": "invpcid Gq,Mx"})
THREE_38[0xC8] = ("pfx", {None: "sha1nexte Vx,Wx"})
THREE_38[0xC9] = ("pfx", {None: "sha1msg1 Vx,Wx"})
THREE_38[0xCA] = ("pfx", {None: "sha1msg2 Vx,Wx"})
THREE_38[0xCB] = ("pfx", {None: "sha256rnds2 Vx,Wx"})
THREE_38[0xCC] = ("pfx", {None: "sha256msg1 Vx,Wx"})
THREE_38[0xCD] = ("pfx", {None: "sha256msg2 Vx,Wx"})
THREE_38[0xDB] = ("pfx", {"66": "aesimc Vx,Wx"})
THREE_38[0xDC] = ("pfx", {"66": "aesenc Vx,Wx"})
THREE_38[0xDD] = ("pfx", {"66": "aesenclast Vx,Wx"})
THREE_38[0xDE] = ("pfx", {"66": "aesdec Vx,Wx"})
THREE_38[0xDF] = ("pfx", {"66": "aesdeclast Vx,Wx"})
THREE_38[0xF0] = ("pfx", {None: "movbe Gv,Mv", "f2": "crc32 Gy,Eb"})
THREE_38[0xF1] = ("pfx", {None: "movbe Mv,Gv", "f2": "crc32 Gy,Ev"})
THREE_38[0xF6] = ("pfx", {"66": "adcx Gy,Ey", "f3": "adox Gy,Ey"})

THREE_3A = {}
THREE_3A[0x08] = ("pfx", {"66": "roundps Vx,Wx,Ib"})
THREE_3A[0x09] = ("pfx", {"66": "roundpd Vx,Wx,Ib"})
THREE_3A[0x0A] = ("pfx", {"66": "roundss Vss,Wss,Ib"})
THREE_3A[0x0B] = ("pfx", {"66": "roundsd Vsd,Wsd,Ib"})
THREE_3A[0x0C] = ("pfx", {"66": "blendps Vx,Wx,Ib"})
THREE_3A[0x0D] = ("pfx", {"66": "blendpd Vx,Wx,Ib"})
THREE_3A[0x0E] = ("pfx", {"66": "pblendw Vx,Wx,Ib"})
THREE_3A[0x0F] = ("pfx", {None: "palignr Pq,Qq,Ib", "66": "palignr Vx,Wx,Ib"})
THREE_3A[0x14] = ("pfx", {"66": "pextrb Ed,Vx,Ib"})
THREE_3A[0x15] = ("pfx", {"66": "pextrw Ed,Vx,Ib"})
THREE_3A[0x16] = ("pfx", {"66": "pextr Ey,Vx,Ib"})
THREE_3A[0x17] = ("pfx", {"66": "extractps Ed,Vx,Ib"})
THREE_3A[0x20] = ("pfx", {"66": "pinsrb Vx,Ed,Ib"})
THREE_3A[0x21] = ("pfx", {"66": "insertps Vx,Wd,Ib"})
THREE_3A[0x22] = ("pfx", {"66": "pinsr Vx,Ey,Ib"})
THREE_3A[0x40] = ("pfx", {"66": "dpps Vx,Wx,Ib"})
THREE_3A[0x41] = ("pfx", {"66": "dppd Vx,Wx,Ib"})
THREE_3A[0x42] = ("pfx", {"66": "mpsadbw Vx,Wx,Ib"})
THREE_3A[0x44] = ("pfx", {"66": "pclmulqdq Vx,Wx,Ib"})
THREE_3A[0x60] = ("pfx", {"66": "pcmpestrm Vx,Wx,Ib"})
THREE_3A[0x61] = ("pfx", {"66": "pcmpestri Vx,Wx,Ib"})
THREE_3A[0x62] = ("pfx", {"66": "pcmpistrm Vx,Wx,Ib"})
THREE_3A[0x63] = ("pfx", {"66": "pcmpistri Vx,Wx,Ib"})
THREE_3A[0xCC] = ("pfx", {None: "sha1rnds4 Vx,Wx,Ib"})
THREE_3A[0xDF] = ("pfx", {"66": "aeskeygenassist Vx,Wx,Ib"})

# ---------------------------------------------------------------------------
# x87 escapes (d8-df): (mem_by_reg, reg_by_modrm)
# ---------------------------------------------------------------------------

def _st_pairs(base, mnem, spec):
    return {base + i: f"{mnem} {spec}".replace("%i", str(i)) for i in range(8)}

X87 = {}

X87[0xD8] = (
    {0: "fadd Md", 1: "fmul Md", 2: "fcom Md", 3: "fcomp Md",
     4: "fsub Md", 5: "fsubr Md", 6: "fdiv Md", 7: "fdivr Md"},
    {**_st_pairs(0xC0, "fadd", "ST,ST%i"), **_st_pairs(0xC8, "fmul", "ST,ST%i"),
     **_st_pairs(0xD0, "fcom", "ST,ST%i"), **_st_pairs(0xD8, "fcomp", "ST,ST%i"),
     **_st_pairs(0xE0, "fsub", "ST,ST%i"), **_st_pairs(0xE8, "fsubr", "ST,ST%i"),
     **_st_pairs(0xF0, "fdiv", "ST,ST%i"), **_st_pairs(0xF8, "fdivr", "ST,ST%i")})

X87[0xD9] = (
    {0: "fld Md", 2: "fst Md", 3: "fstp Md",
     4: ("o66", "fldenv M", "fldenvw M"),
     5: "fldcw Mw",
     6: ("o66", "fnstenv M", "fnstenvw M"),
     7: "fnstcw Mw"},
    {**_st_pairs(0xC0, "fld", "ST%i"), **_st_pairs(0xC8, "fxch", "ST%i"),
     0xD0: "fnop",
     0xE0: "fchs", 0xE1: "fabs", 0xE4: "ftst", 0xE5: "fxam",
     0xE8: "fld1", 0xE9: "fldl2t", 0xEA: "fldl2e", 0xEB: "fldpi",
     0xEC: "fldlg2", 0xED: "fldln2", 0xEE: "fldz",
     0xF0: "f2xm1", 0xF1: "fyl2x", 0xF2: "fptan", 0xF3: "fpatan",
     0xF4: "fxtract", 0xF5: "fprem1", 0xF6: "fdecstp", 0xF7: "fincstp",
     0xF8: "fprem", 0xF9: "fyl2xp1", 0xFA: "fsqrt", 0xFB: "fsincos",
     0xFC: "frndint", 0xFD: "fscale", 0xFE: "fsin", 0xFF: "fcos"})

X87[0xDA] = (
    {0: "fiadd Md", 1: "fimul Md", 2: "ficom Md", 3: "ficomp Md",
     4: "fisub Md", 5: "fisubr Md", 6: "fidiv Md", 7: "fidivr Md"},
    {**_st_pairs(0xC0, "fcmovb", "ST,ST%i"), **_st_pairs(0xC8, "fcmove", "ST,ST%i"),
     **_st_pairs(0xD0, "fcmovbe", "ST,ST%i"), **_st_pairs(0xD8, "fcmovu", "ST,ST%i"),
     0xE9: "fucompp"})

X87[0xDB] = (
    {0: "fild Md", 1: "fisttp Md", 2: "fist Md", 3: "fistp Md",
     5: "fld Mt", 7: "fstp Mt"},
    {**_st_pairs(0xC0, "fcmovnb", "ST,ST%i"), **_st_pairs(0xC8, "fcmovne", "ST,ST%i"),
     **_st_pairs(0xD0, "fcmovnbe", "ST,ST%i"), **_st_pairs(0xD8, "fcmovnu", "ST,ST%i"),
     0xE0: "fneni", 0xE1: "fndisi", 0xE2: "fnclex", 0xE3: "fninit",
     0xE4: "fnsetpm", 0xE5: "frstpm",
     **_st_pairs(0xE8, "fucomi", "ST,ST%i"), **_st_pairs(0xF0, "fcomi", "ST,ST%i")})

X87[0xDC] = (
    {0: "fadd Mq", 1: "fmul Mq", 2: "fcom Mq", 3: "fcomp Mq",
     4: "fsub Mq", 5: "fsubr Mq", 6: "fdiv Mq", 7: "fdivr Mq"},
    {**_st_pairs(0xC0, "fadd", "ST%i,ST"), **_st_pairs(0xC8, "fmul", "ST%i,ST"),

     **_st_pairs(0xE0, "fsubr", "ST%i,ST"), **_st_pairs(0xE8, "fsub", "ST%i,ST"),
     **_st_pairs(0xF0, "fdivr", "ST%i,ST"), **_st_pairs(0xF8, "fdiv", "ST%i,ST")})

X87[0xDD] = (
    {0: "fld Mq", 1: "fisttp Mq", 2: "fst Mq", 3: "fstp Mq",
     4: ("o66", "frstor M", "frstorw M"),
     6: ("o66", "fnsave M", "fnsavew M"),
     7: "fnstsw Mw"},
    {**_st_pairs(0xC0, "ffree", "ST%i"),
     **_st_pairs(0xD0, "fst", "ST%i"), **_st_pairs(0xD8, "fstp", "ST%i"),
     **_st_pairs(0xE0, "fucom", "ST%i"), **_st_pairs(0xE8, "fucomp", "ST%i")})

X87[0xDE] = (
    {0: "fiadd Mw", 1: "fimul Mw", 2: "ficom Mw", 3: "ficomp Mw",
     4: "fisub Mw", 5: "fisubr Mw", 6: "fidiv Mw", 7: "fidivr Mw"},
    {**_st_pairs(0xC0, "faddp", "ST%i,ST"), **_st_pairs(0xC8, "fmulp", "ST%i,ST"),
     0xD9: "fcompp",
     **_st_pairs(0xE0, "fsubrp", "ST%i,ST"), **_st_pairs(0xE8, "fsubp", "ST%i,ST"),
     **_st_pairs(0xF0, "fdivrp", "ST%i,ST"), **_st_pairs(0xF8, "fdivp", "ST%i,ST")})

X87[0xDF] = (
    {0: "fild Mw", 1: "fisttp Mw", 2: "fist Mw", 3: "fistp Mw",
     4: "fbld Mt", 5: "fild Mq", 6: "fbstp Mt", 7: "fistp Mq"},
    {**_st_pairs(0xC0, "ffreep", "ST%i"),
     0xE0: "fnstsw AX",
     **_st_pairs(0xE8, "fucomip", "ST,ST%i"), **_st_pairs(0xF0, "fcomip", "ST,ST%i")})

# ---------------------------------------------------------------------------
# 3DNow! suffix-byte mnemonics (0f 0f modrm suffix)
# ---------------------------------------------------------------------------

THREE_DNOW = {
    0x0C: "pi2fw", 0x0D: "pi2fd", 0x1C: "pf2iw", 0x1D: "pf2id",
    0x8A: "pfnacc", 0x8E: "pfpnacc", 0x90: "pfcmpge", 0x94: "pfmin",
    0x96: "pfrcp", 0x97: "pfrsqrt", 0x9A: "pfsub", 0x9E: "pfadd",
    0xA0: "pfcmpgt", 0xA4: "pfmax", 0xA6: "pfrcpit1", 0xA7: "pfrsqit1",
    0xAA: "pfsubr", 0xAE: "pfacc", 0xB0: "pfcmpeq", 0xB4: "pfmul",
    0xB6: "pfrcpit2", 0xB7: "pmulhrw", 0xBB: "pswapd", 0xBF: "pavgusb",
}
