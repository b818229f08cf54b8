"""VEX- and EVEX-encoded opcode tables.

Layout mirrors tables.py.  Maps are keyed by opcode byte; each value is
either an entry or a dict keyed by the mandatory prefix implied by the
``pp`` field (None / "66" / "f3" / "f2").  A ("w", e0, e1) node selects
on VEX.W.  Entries reuse the operand token language of tables.py with
the vector letters sized by VEX.L / EVEX.L'L.
"""

def W(e0, e1):
    return ("w", e0, e1)

# ---------------------------------------------------------------------------
# VEX map 1 (0f)
# ---------------------------------------------------------------------------

VEX_1 = {
    0x10: {None: "vmovups Vx,Wx", "66": "vmovupd Vx,Wx",
           "f3": ("mod", "vmovss Vss,Mss", "vmovss Vss,Hx,Uss"),
           "f2": ("mod", "vmovsd Vsd,Msd", "vmovsd Vsd,Hx,Usd")},
    0x11: {None: "vmovups Wx,Vx", "66": "vmovupd Wx,Vx",
           "f3": ("mod", "vmovss Mss,Vss", "vmovss Uss,Hx,Vss"),
           "f2": ("mod", "vmovsd Msd,Vsd", "vmovsd Usd,Hx,Vsd")},
    0x12: {None: ("mod", "vmovlps Vx,Hx,Mq", "vmovhlps Vx,Hx,Ux"),
           "66": "vmovlpd Vx,Hx,Mq",
           "f3": "vmovsldup Vx,Wx", "f2": "vmovddup Vx,Wx"},
    0x13: {None: "vmovlps Mq,Vx", "66": "vmovlpd Mq,Vx"},
    0x14: {None: "vunpcklps Vx,Hx,Wx", "66": "vunpcklpd Vx,Hx,Wx"},
    0x15: {None: "vunpckhps Vx,Hx,Wx", "66": "vunpckhpd Vx,Hx,Wx"},
    0x16: {None: ("mod", "vmovhps Vx,Hx,Mq", "vmovlhps Vx,Hx,Ux"),
           "66": "vmovhpd Vx,Hx,Mq", "f3": "vmovshdup Vx,Wx"},
    0x17: {None: "vmovhps Mq,Vx", "66": "vmovhpd Mq,Vx"},
    0x28: {None: "vmovaps Vx,Wx", "66": "vmovapd Vx,Wx"},
    0x29: {None: "vmovaps Wx,Vx", "66": "vmovapd Wx,Vx"},
    0x2A: {"f3": "vcvtsi2ss Vss,Hx,Ey", "f2": "vcvtsi2sd Vsd,Hx,Ey"},
    0x2B: {None: "vmovntps Mx,Vx", "66": "vmovntpd Mx,Vx"},
    0x2C: {"f3": "vcvttss2si Gy,Wss", "f2": "vcvttsd2si Gy,Wsd"},
    0x2D: {"f3": "vcvtss2si Gy,Wss", "f2": "vcvtsd2si Gy,Wsd"},
    0x2E: {None: "vucomiss Vss,Wss", "66": "vucomisd Vsd,Wsd"},
    0x2F: {None: "vcomiss Vss,Wss", "66": "vcomisd Vsd,Wsd"},
    0x41: ("l", None, {None: W("kandw Kr,Kv,Kq", "kandq Kr,Kv,Kq"),
           "66": W("kandb Kr,Kv,Kq", "kandd Kr,Kv,Kq")}),
    0x42: ("l", None, {None: W("kandnw Kr,Kv,Kq", "kandnq Kr,Kv,Kq"),
           "66": W("kandnb Kr,Kv,Kq", "kandnd Kr,Kv,Kq")}),
    0x44: ("l", {None: W("knotw Kr,Kq", "knotq Kr,Kq"),
           "66": W("knotb Kr,Kq", "knotd Kr,Kq")}, None),
    0x45: ("l", None, {None: W("korw Kr,Kv,Kq", "korq Kr,Kv,Kq"),
           "66": W("korb Kr,Kv,Kq", "kord Kr,Kv,Kq")}),
    0x46: ("l", None, {None: W("kxnorw Kr,Kv,Kq", "kxnorq Kr,Kv,Kq"),
           "66": W("kxnorb Kr,Kv,Kq", "kxnord Kr,Kv,Kq")}),
    0x47: ("l", None, {None: W("kxorw Kr,Kv,Kq", "kxorq Kr,Kv,Kq"),
           "66": W("kxorb Kr,Kv,Kq", "kxord Kr,Kv,Kq")}),
    0x4A: ("l", None, {None: W("kaddw Kr,Kv,Kq", "kaddq Kr,Kv,Kq"),
           "66": W("kaddb Kr,Kv,Kq", "kaddd Kr,Kv,Kq")}),
    0x4B: ("l", None, {None: W("kunpckwd Kr,Kv,Kq", "kunpckdq Kr,Kv,Kq"),
           "66": "kunpckbw Kr,Kv,Kq"}),
    0x50: {None: "vmovmskps Gy,Ux", "66": "vmovmskpd Gy,Ux"},
    0x51: {None: "vsqrtps Vx,Wx", "66": "vsqrtpd Vx,Wx",
           "f3": "vsqrtss Vss,Hx,Wss", "f2": "vsqrtsd Vsd,Hx,Wsd"},
    0x52: {None: "vrsqrtps Vx,Wx", "f3": "vrsqrtss Vss,Hx,Wss"},
    0x53: {None: "vrcpps Vx,Wx", "f3": "vrcpss Vss,Hx,Wss"},
    0x54: {None: "vandps Vx,Hx,Wx", "66": "vandpd Vx,Hx,Wx"},
    0x55: {None: "vandnps Vx,Hx,Wx", "66": "vandnpd Vx,Hx,Wx"},
    0x56: {None: "vorps Vx,Hx,Wx", "66": "vorpd Vx,Hx,Wx"},
    0x57: {None: "vxorps Vx,Hx,Wx", "66": "vxorpd Vx,Hx,Wx"},
    0x58: {None: "vaddps Vx,Hx,Wx", "66": "vaddpd Vx,Hx,Wx",
           "f3": "vaddss Vss,Hx,Wss", "f2": "vaddsd Vsd,Hx,Wsd"},
    0x59: {None: "vmulps Vx,Hx,Wx", "66": "vmulpd Vx,Hx,Wx",
           "f3": "vmulss Vss,Hx,Wss", "f2": "vmulsd Vsd,Hx,Wsd"},
    0x5A: {None: "vcvtps2pd Vx,Wx", "66": "vcvtpd2ps Vx,Wx",
           "f3": "vcvtss2sd Vsd,Hx,Wss", "f2": "vcvtsd2ss Vss,Hx,Wsd"},
    0x5B: {None: "vcvtdq2ps Vx,Wx", "66": "vcvtps2dq Vx,Wx",
           "f3": "vcvttps2dq Vx,Wx"},
    0x5C: {None: "vsubps Vx,Hx,Wx", "66": "vsubpd Vx,Hx,Wx",
           "f3": "vsubss Vss,Hx,Wss", "f2": "vsubsd Vsd,Hx,Wsd"},
    0x5D: {None: "vminps Vx,Hx,Wx", "66": "vminpd Vx,Hx,Wx",
           "f3": "vminss Vss,Hx,Wss", "f2": "vminsd Vsd,Hx,Wsd"},
    0x5E: {None: "vdivps Vx,Hx,Wx", "66": "vdivpd Vx,Hx,Wx",
           "f3": "vdivss Vss,Hx,Wss", "f2": "vdivsd Vsd,Hx,Wsd"},
    0x5F: {None: "vmaxps Vx,Hx,Wx", "66": "vmaxpd Vx,Hx,Wx",
           "f3": "vmaxss Vss,Hx,Wss", "f2": "vmaxsd Vsd,Hx,Wsd"},
    0x60: {"66": "vpunpcklbw Vx,Hx,Wx"},
    0x61: {"66": "vpunpcklwd Vx,Hx,Wx"},
    0x62: {"66": "vpunpckldq Vx,Hx,Wx"},
    0x63: {"66": "vpacksswb Vx,Hx,Wx"},
    0x64: {"66": "vpcmpgtb Vx,Hx,Wx"},
    0x65: {"66": "vpcmpgtw Vx,Hx,Wx"},
    0x66: {"66": "vpcmpgtd Vx,Hx,Wx"},
    0x67: {"66": "vpackuswb Vx,Hx,Wx"},
    0x68: {"66": "vpunpckhbw Vx,Hx,Wx"},
    0x69: {"66": "vpunpckhwd Vx,Hx,Wx"},
    0x6A: {"66": "vpunpckhdq Vx,Hx,Wx"},
    0x6B: {"66": "vpackssdw Vx,Hx,Wx"},
    0x6C: {"66": "vpunpcklqdq Vx,Hx,Wx"},
    0x6D: {"66": "vpunpckhqdq Vx,Hx,Wx"},
    0x6E: {"66": W("vmovd Vx,Ed", "vmovq Vx,Eq")},
    0x6F: {"66": "vmovdqa Vx,Wx", "f3": "vmovdqu Vx,Wx"},
    0x70: {"66": "vpshufd Vx,Wx,Ib", "f3": "vpshufhw Vx,Wx,Ib",
           "f2": "vpshuflw Vx,Wx,Ib"},
    0x71: ("grp", {2: {"66": "vpsrlw Hx,Ux,Ib"},
                   4: {"66": "vpsraw Hx,Ux,Ib"},
                   6: {"66": "vpsllw Hx,Ux,Ib"}}),
    0x72: ("grp", {2: {"66": "vpsrld Hx,Ux,Ib"},
                   4: {"66": "vpsrad Hx,Ux,Ib"},
                   6: {"66": "vpslld Hx,Ux,Ib"}}),
    0x73: ("grp", {2: {"66": "vpsrlq Hx,Ux,Ib"},
                   3: {"66": "vpsrldq Hx,Ux,Ib"},
                   6: {"66": "vpsllq Hx,Ux,Ib"},
                   7: {"66": "vpslldq Hx,Ux,Ib"}}),
    0x74: {"66": "vpcmpeqb Vx,Hx,Wx"},
    0x75: {"66": "vpcmpeqw Vx,Hx,Wx"},
    0x76: {"66": "vpcmpeqd Vx,Hx,Wx"},
    0x77: {None: ("l", "vzeroupper", "vzeroall")},
    0x7C: {"66": "vhaddpd Vx,Hx,Wx", "f2": "vhaddps Vx,Hx,Wx"},
    0x7D: {"66": "vhsubpd Vx,Hx,Wx", "f2": "vhsubps Vx,Hx,Wx"},
    0x7E: {"66": W("vmovd Ed,Vx", "vmovq Eq,Vx"), "f3": "vmovq Vq,Wq"},
    0x7F: {"66": "vmovdqa Wx,Vx", "f3": "vmovdqu Wx,Vx"},
    0x90: ("l", {None: W("kmovw Kr,Km", "kmovq Kr,Km"),
           "66": W("kmovb Kr,Km", "kmovd Kr,Km")}, None),
    0x91: ("l", {None: W("kmovw Mw,Kr", "kmovq Mq,Kr"),
           "66": W("kmovb Mb,Kr", "kmovd Md,Kr")}, None),
    0x92: ("l", {None: "kmovw Kr,Rd", "66": "kmovb Kr,Rd",
           "f2": W("kmovd Kr,Rd", "kmovq Kr,Rq")}, None),
    0x93: ("l", {None: "kmovw Gd,Kq", "66": "kmovb Gd,Kq",
           "f2": W("kmovd Gd,Kq", "kmovq Gq,Kq")}, None),
    0x98: ("l", {None: W("kortestw Kr,Kq", "kortestq Kr,Kq"),
           "66": W("kortestb Kr,Kq", "kortestd Kr,Kq")}, None),
    0x99: ("l", {None: W("ktestw Kr,Kq", "ktestq Kr,Kq"),
           "66": W("ktestb Kr,Kq", "ktestd Kr,Kq")}, None),
    0xAE: ("grp", {2: {None: "vldmxcsr Md"}, 3: {None: "vstmxcsr Md"}}),
    0xC2: {None: "vcmpps Vx,Hx,Wx,CC", "66": "vcmppd Vx,Hx,Wx,CC",
           "f3": "vcmpss Vss,Hx,Wss,CC", "f2": "vcmpsd Vsd,Hx,Wsd,CC"},
    0xC4: {"66": "vpinsrw Vx,Hx,Ew,Ib"},
    0xC5: {"66": "vpextrw Gd,Ux,Ib"},
    0xC6: {None: "vshufps Vx,Hx,Wx,Ib", "66": "vshufpd Vx,Hx,Wx,Ib"},
    0xD0: {"66": "vaddsubpd Vx,Hx,Wx", "f2": "vaddsubps Vx,Hx,Wx"},
    0xD1: {"66": "vpsrlw Vx,Hx,Wx"},
    0xD2: {"66": "vpsrld Vx,Hx,Wx"},
    0xD3: {"66": "vpsrlq Vx,Hx,Wx"},
    0xD4: {"66": "vpaddq Vx,Hx,Wx"},
    0xD5: {"66": "vpmullw Vx,Hx,Wx"},
    0xD6: {"66": "vmovq Wq,Vq"},
    0xD7: {"66": "vpmovmskb Gd,Ux"},
    0xD8: {"66": "vpsubusb Vx,Hx,Wx"},
    0xD9: {"66": "vpsubusw Vx,Hx,Wx"},
    0xDA: {"66": "vpminub Vx,Hx,Wx"},
    0xDB: {"66": "vpand Vx,Hx,Wx"},
    0xDC: {"66": "vpaddusb Vx,Hx,Wx"},
    0xDD: {"66": "vpaddusw Vx,Hx,Wx"},
    0xDE: {"66": "vpmaxub Vx,Hx,Wx"},
    0xDF: {"66": "vpandn Vx,Hx,Wx"},
    0xE0: {"66": "vpavgb Vx,Hx,Wx"},
    0xE1: {"66": "vpsraw Vx,Hx,Wx"},
    0xE2: {"66": "vpsrad Vx,Hx,Wx"},
    0xE3: {"66": "vpavgw Vx,Hx,Wx"},
    0xE4: {"66": "vpmulhuw Vx,Hx,Wx"},
    0xE5: {"66": "vpmulhw Vx,Hx,Wx"},
    0xE6: {"66": "vcvttpd2dq Vx,Wx", "f3": "vcvtdq2pd Vx,Wx",
           "f2": "vcvtpd2dq Vx,Wx"},
    0xE7: {"66": "vmovntdq Mx,Vx"},
    0xE8: {"66": "vpsubsb Vx,Hx,Wx"},
    0xE9: {"66": "vpsubsw Vx,Hx,Wx"},
    0xEA: {"66": "vpminsw Vx,Hx,Wx"},
    0xEB: {"66": "vpor Vx,Hx,Wx"},
    0xEC: {"66": "vpaddsb Vx,Hx,Wx"},
    0xED: {"66": "vpaddsw Vx,Hx,Wx"},
    0xEE: {"66": "vpmaxsw Vx,Hx,Wx"},
    0xEF: {"66": "vpxor Vx,Hx,Wx"},
    0xF0: {"f2": "vlddqu Vx,Mx"},
    0xF1: {"66": "vpsllw Vx,Hx,Wx"},
    0xF2: {"66": "vpslld Vx,Hx,Wx"},
    0xF3: {"66": "vpsllq Vx,Hx,Wx"},
    0xF4: {"66": "vpmuludq Vx,Hx,Wx"},
    0xF5: {"66": "vpmaddwd Vx,Hx,Wx"},
    0xF6: {"66": "vpsadbw Vx,Hx,Wx"},
    0xF7: {"66": "vmaskmovdqu Vx,Ux"},
    0xF8: {"66": "vpsubb Vx,Hx,Wx"},
    0xF9: {"66": "vpsubw Vx,Hx,Wx"},
    0xFA: {"66": "vpsubd Vx,Hx,Wx"},
    0xFB: {"66": "vpsubq Vx,Hx,Wx"},
    0xFC: {"66": "vpaddb Vx,Hx,Wx"},
    0xFD: {"66": "vpaddw Vx,Hx,Wx"},
    0xFE: {"66": "vpaddd Vx,Hx,Wx"},
}

# ---------------------------------------------------------------------------
# VEX map 2 (0f 38)
# ---------------------------------------------------------------------------

VEX_2 = {
    0x00: {"66": "vpshufb Vx,Hx,Wx"},
    0x01: {"66": "vphaddw Vx,Hx,Wx"},
    0x02: {"66": "vphaddd Vx,Hx,Wx"},
    0x03: {"66": "vphaddsw Vx,Hx,Wx"},
    0x04: {"66": "vpmaddubsw Vx,Hx,Wx"},
    0x05: {"66": "vphsubw Vx,Hx,Wx"},
    0x06: {"66": "vphsubd Vx,Hx,Wx"},
    0x07: {"66": "vphsubsw Vx,Hx,Wx"},
    0x08: {"66": "vpsignb Vx,Hx,Wx"},
    0x09: {"66": "vpsignw Vx,Hx,Wx"},
    0x0A: {"66": "vpsignd Vx,Hx,Wx"},
    0x0B: {"66": "vpmulhrsw Vx,Hx,Wx"},
    0x0C: {"66": "vpermilps Vx,Hx,Wx"},
    0x0D: {"66": "vpermilpd Vx,Hx,Wx"},
    0x0E: {"66": "vtestps Vx,Wx"},
    0x0F: {"66": "vtestpd Vx,Wx"},
    0x13: {"66": "vcvtph2ps Vx,Wq"},
    0x16: {"66": "vpermps Vx,Hx,Wx"},
    0x17: {"66": "vptest Vx,Wx"},
    0x18: {"66": "vbroadcastss Vx,Wd"},
    0x19: {"66": "vbroadcastsd Vx,Wq"},
    0x1A: {"66": "vbroadcastf128 Vx,Mx"},
    0x1C: {"66": "vpabsb Vx,Wx"},
    0x1D: {"66": "vpabsw Vx,Wx"},
    0x1E: {"66": "vpabsd Vx,Wx"},
    0x20: {"66": "vpmovsxbw Vx,Wq"},
    0x21: {"66": "vpmovsxbd Vx,Wd"},
    0x22: {"66": "vpmovsxbq Vx,Ww"},
    0x23: {"66": "vpmovsxwd Vx,Wq"},
    0x24: {"66": "vpmovsxwq Vx,Wd"},
    0x25: {"66": "vpmovsxdq Vx,Wq"},
    0x28: {"66": "vpmuldq Vx,Hx,Wx"},
    0x29: {"66": "vpcmpeqq Vx,Hx,Wx"},
    0x2A: {"66": "vmovntdqa Vx,Mx"},
    0x2B: {"66": "vpackusdw Vx,Hx,Wx"},
    0x2C: {"66": "vmaskmovps Vx,Hx,Mx"},
    0x2D: {"66": "vmaskmovpd Vx,Hx,Mx"},
    0x2E: {"66": "vmaskmovps Mx,Hx,Vx"},
    0x2F: {"66": "vmaskmovpd Mx,Hx,Vx"},
    0x30: {"66": "vpmovzxbw Vx,Wq"},
    0x31: {"66": "vpmovzxbd Vx,Wd"},
    0x32: {"66": "vpmovzxbq Vx,Ww"},
    0x33: {"66": "vpmovzxwd Vx,Wq"},
    0x34: {"66": "vpmovzxwq Vx,Wd"},
    0x35: {"66": "vpmovzxdq Vx,Wq"},
    0x36: {"66": "vpermd Vx,Hx,Wx"},
    0x37: {"66": "vpcmpgtq Vx,Hx,Wx"},
    0x38: {"66": "vpminsb Vx,Hx,Wx"},
    0x39: {"66": "vpminsd Vx,Hx,Wx"},
    0x3A: {"66": "vpminuw Vx,Hx,Wx"},
    0x3B: {"66": "vpminud Vx,Hx,Wx"},
    0x3C: {"66": "vpmaxsb Vx,Hx,Wx"},
    0x3D: {"66": "vpmaxsd Vx,Hx,Wx"},
    0x3E: {"66": "vpmaxuw Vx,Hx,Wx"},
    0x3F: {"66": "vpmaxud Vx,Hx,Wx"},
    0x40: {"66": "vpmulld Vx,Hx,Wx"},
    0x41: {"66": "vphminposuw Vx,Wx"},
    0x45: {"66": W("vpsrlvd Vx,Hx,Wx", "vpsrlvq Vx,Hx,Wx")},
    0x46: {"66": "vpsravd Vx,Hx,Wx"},
    0x47: {"66": W("vpsllvd Vx,Hx,Wx", "vpsllvq Vx,Hx,Wx")},
    0x58: {"66": "vpbroadcastd Vx,Wd"},
    0x59: {"66": "vpbroadcastq Vx,Wq"},
    0x5A: {"66": "vbroadcasti128 Vx,Mx"},
    0x78: {"66": "vpbroadcastb Vx,Wb"},
    0x79: {"66": "vpbroadcastw Vx,Ww"},
    0x8C: {"66": W("vpmaskmovd Vx,Hx,Mx", "vpmaskmovq Vx,Hx,Mx")},
    0x8E: {"66": W("vpmaskmovd Mx,Hx,Vx", "vpmaskmovq Mx,Hx,Vx")},
    0x90: {"66": W("vpgatherdd Vx,GM,Hx", "vpgatherdq Vx,GM,Hx")},
    0x91: {"66": W("vpgatherqd Vx,GM,Hx", "vpgatherqq Vx,GM,Hx")},
    0x92: {"66": W("vgatherdps Vx,GM,Hx", "vgatherdpd Vx,GM,Hx")},
    0x93: {"66": W("vgatherqps Vx,GM,Hx", "vgatherqpd Vx,GM,Hx")},
    0x96: {"66": W("vfmaddsub132ps Vx,Hx,Wx", "vfmaddsub132pd Vx,Hx,Wx")},
    0x97: {"66": W("vfmsubadd132ps Vx,Hx,Wx", "vfmsubadd132pd Vx,Hx,Wx")},
    0x98: {"66": W("vfmadd132ps Vx,Hx,Wx", "vfmadd132pd Vx,Hx,Wx")},
    0x99: {"66": W("vfmadd132ss Vss,Hx,Wss", "vfmadd132sd Vsd,Hx,Wsd")},
    0x9A: {"66": W("vfmsub132ps Vx,Hx,Wx", "vfmsub132pd Vx,Hx,Wx")},
    0x9B: {"66": W("vfmsub132ss Vss,Hx,Wss", "vfmsub132sd Vsd,Hx,Wsd")},
    0x9C: {"66": W("vfnmadd132ps Vx,Hx,Wx", "vfnmadd132pd Vx,Hx,Wx")},
    0x9D: {"66": W("vfnmadd132ss Vss,Hx,Wss", "vfnmadd132sd Vsd,Hx,Wsd")},
    0x9E: {"66": W("vfnmsub132ps Vx,Hx,Wx", "vfnmsub132pd Vx,Hx,Wx")},
    0x9F: {"66": W("vfnmsub132ss Vss,Hx,Wss", "vfnmsub132sd Vsd,Hx,Wsd")},
    0xA6: {"66": W("vfmaddsub213ps Vx,Hx,Wx", "vfmaddsub213pd Vx,Hx,Wx")},
    0xA7: {"66": W("vfmsubadd213ps Vx,Hx,Wx", "vfmsubadd213pd Vx,Hx,Wx")},
    0xA8: {"66": W("vfmadd213ps Vx,Hx,Wx", "vfmadd213pd Vx,Hx,Wx")},
    0xA9: {"66": W("vfmadd213ss Vss,Hx,Wss", "vfmadd213sd Vsd,Hx,Wsd")},
    0xAA: {"66": W("vfmsub213ps Vx,Hx,Wx", "vfmsub213pd Vx,Hx,Wx")},
    0xAB: {"66": W("vfmsub213ss Vss,Hx,Wss", "vfmsub213sd Vsd,Hx,Wsd")},
    0xAC: {"66": W("vfnmadd213ps Vx,Hx,Wx", "vfnmadd213pd Vx,Hx,Wx")},
    0xAD: {"66": W("vfnmadd213ss Vss,Hx,Wss", "vfnmadd213sd Vsd,Hx,Wsd")},
    0xAE: {"66": W("vfnmsub213ps Vx,Hx,Wx", "vfnmsub213pd Vx,Hx,Wx")},
    0xAF: {"66": W("vfnmsub213ss Vss,Hx,Wss", "vfnmsub213sd Vsd,Hx,Wsd")},
    0xB6: {"66": W("vfmaddsub231ps Vx,Hx,Wx", "vfmaddsub231pd Vx,Hx,Wx")},
    0xB7: {"66": W("vfmsubadd231ps Vx,Hx,Wx", "vfmsubadd231pd Vx,Hx,Wx")},
    0xB8: {"66": W("vfmadd231ps Vx,Hx,Wx", "vfmadd231pd Vx,Hx,Wx")},
    0xB9: {"66": W("vfmadd231ss Vss,Hx,Wss", "vfmadd231sd Vsd,Hx,Wsd")},
    0xBA: {"66": W("vfmsub231ps Vx,Hx,Wx", "vfmsub231pd Vx,Hx,Wx")},
    0xBB: {"66": W("vfmsub231ss Vss,Hx,Wss", "vfmsub231sd Vsd,Hx,Wsd")},
    0xBC: {"66": W("vfnmadd231ps Vx,Hx,Wx", "vfnmadd231pd Vx,Hx,Wx")},
    0xBD: {"66": W("vfnmadd231ss Vss,Hx,Wss", "vfnmadd231sd Vsd,Hx,Wsd")},
    0xBE: {"66": W("vfnmsub231ps Vx,Hx,Wx", "vfnmsub231pd Vx,Hx,Wx")},
    0xBF: {"66": W("vfnmsub231ss Vss,Hx,Wss", "vfnmsub231sd Vsd,Hx,Wsd")},
    0xDB: {"66": "vaesimc Vx,Wx"},
    0xDC: {"66": "vaesenc Vx,Hx,Wx"},
    0xDD: {"66": "vaesenclast Vx,Hx,Wx"},
    0xDE: {"66": "vaesdec Vx,Hx,Wx"},
    0xDF: {"66": "vaesdeclast Vx,Hx,Wx"},
    0xF2: {None: "andn Gy,By,Ey"},
    0xF3: ("grp", {1: {None: "blsr By,Ey"},
                   2: {None: "blsmsk By,Ey"},
                   3: {None: "blsi By,Ey"}}),
    0xF5: {None: "bzhi Gy,Ey,By", "f3": "pext Gy,By,Ey",
           "f2": "pdep Gy,By,Ey"},
    0xF6: {"f2": "mulx Gy,By,Ey"},
    0xF7: {None: "bextr Gy,Ey,By", "66": "shlx Gy,Ey,By",
           "f3": "sarx Gy,Ey,By", "f2": "shrx Gy,Ey,By"},
}

# ---------------------------------------------------------------------------
# VEX map 3 (0f 3a)
# ---------------------------------------------------------------------------

VEX_3 = {
    0x00: {"66": W(None, "vpermq Vx,Wx,Ib")},
    0x01: {"66": W(None, "vpermpd Vx,Wx,Ib")},
    0x02: {"66": "vpblendd Vx,Hx,Wx,Ib"},
    0x04: {"66": "vpermilps Vx,Wx,Ib"},
    0x05: {"66": "vpermilpd Vx,Wx,Ib"},
    0x06: {"66": "vperm2f128 Vx,Hx,Wx,Ib"},
    0x08: {"66": "vroundps Vx,Wx,Ib"},
    0x09: {"66": "vroundpd Vx,Wx,Ib"},
    0x0A: {"66": "vroundss Vss,Hx,Wss,Ib"},
    0x0B: {"66": "vroundsd Vsd,Hx,Wsd,Ib"},
    0x0C: {"66": "vblendps Vx,Hx,Wx,Ib"},
    0x0D: {"66": "vblendpd Vx,Hx,Wx,Ib"},
    0x0E: {"66": "vpblendw Vx,Hx,Wx,Ib"},
    0x0F: {"66": "vpalignr Vx,Hx,Wx,Ib"},
    0x14: {"66": "vpextrb Ed,Vx,Ib"},
    0x15: {"66": "vpextrw Ed,Vx,Ib"},
    0x16: {"66": W("vpextrd Ed,Vx,Ib", "vpextrq Eq,Vx,Ib")},
    0x17: {"66": "vextractps Ed,Vx,Ib"},
    0x18: {"66": "vinsertf128 Vx,Hx,Wx,Ib"},
    0x19: {"66": "vextractf128 Wx,Vx,Ib"},
    0x1D: {"66": "vcvtps2ph Wq,Vx,Ib"},
    0x20: {"66": "vpinsrb Vx,Hx,Ed,Ib"},
    0x21: {"66": "vinsertps Vx,Hx,Wd,Ib"},
    0x22: {"66": W("vpinsrd Vx,Hx,Ed,Ib", "vpinsrq Vx,Hx,Eq,Ib")},
    0x30: ("l", {"66": W("kshiftrb Kr,Kq,Ib", "kshiftrw Kr,Kq,Ib")}, None),
    0x31: ("l", {"66": W("kshiftrd Kr,Kq,Ib", "kshiftrq Kr,Kq,Ib")}, None),
    0x32: ("l", {"66": W("kshiftlb Kr,Kq,Ib", "kshiftlw Kr,Kq,Ib")}, None),
    0x33: ("l", {"66": W("kshiftld Kr,Kq,Ib", "kshiftlq Kr,Kq,Ib")}, None),
    0x38: {"66": "vinserti128 Vx,Hx,Wx,Ib"},
    0x39: {"66": "vextracti128 Wx,Vx,Ib"},
    0x40: {"66": "vdpps Vx,Hx,Wx,Ib"},
    0x41: {"66": "vdppd Vx,Hx,Wx,Ib"},
    0x42: {"66": "vmpsadbw Vx,Hx,Wx,Ib"},
    0x44: {"66": "vpclmulqdq Vx,Hx,Wx,Ib"},
    0x46: {"66": "vperm2i128 Vx,Hx,Wx,Ib"},
    0x4A: {"66": "vblendvps Vx,Hx,Wx,Lx"},
    0x4B: {"66": "vblendvpd Vx,Hx,Wx,Lx"},
    0x4C: {"66": "vpblendvb Vx,Hx,Wx,Lx"},
    0x60: {"66": "vpcmpestrm Vx,Wx,Ib"},
    0x61: {"66": "vpcmpestri Vx,Wx,Ib"},
    0x62: {"66": "vpcmpistrm Vx,Wx,Ib"},
    0x63: {"66": "vpcmpistri Vx,Wx,Ib"},
    0xDF: {"66": "vaeskeygenassist Vx,Wx,Ib"},
    0xF0: {"f2": "rorx Gy,Ey,Ib"},
}
