"""Exact VEX/EVEX acceptance tables.

Generated by tools/gen_vex_tables.py against the reference
disassembler (GNU binutils objdump).  Keyed by
(map, pp, W, L) -> opcode -> (mnemonic, imm_bytes, forms, flags)
or per-(reg,form) dicts for group opcodes."""

VEX_EXACT = \
{(1, 0, 0, 0): {16: ('vmovups', 0, 'rm', '', ''), 17: ('vmovups', 0, 'rm', '', ''), 18: ({'r': 'vmovhlps', 'm': 'vmovlps'}, 0, 'rm', 'v', 'v'), 19: ('vmovlps', 0, 'm', '', ''), 20: ('vunpcklps', 0, 'rm', 'v', 'v'), 21: ('vunpckhps', 0, 'rm', 'v', 'v'), 22: ({'r': 'vmovlhps', 'm': 'vmovhps'}, 0, 'rm', 'v', 'v'), 23: ('vmovhps', 0, 'm', '', ''), 40: ('vmovaps', 0, 'rm', '', ''), 41: ('vmovaps', 0, 'rm', '', ''), 43: ('vmovntps', 0, 'm', '', ''), 46: ('vucomiss', 0, 'rm', '', ''), 47: ('vcomiss', 0, 'rm', '', ''), 68: ('knotw', 0, 'r', '', ''), 80: ('vmovmskps', 0, 'r', '', ''), 81: ('vsqrtps', 0, 'rm', '', ''), 82: ('vrsqrtps', 0, 'rm', '', ''), 83: ('vrcpps', 0, 'rm', '', ''), 84: ('vandps', 0, 'rm', 'v', 'v'), 85: ('vandnps', 0, 'rm', 'v', 'v'), 86: ('vorps', 0, 'rm', 'v', 'v'), 87: ('vxorps', 0, 'rm', 'v', 'v'), 88: ('vaddps', 0, 'rm', 'v', 'v'), 89: ('vmulps', 0, 'rm', 'v', 'v'), 90: ('vcvtps2pd', 0, 'rm', '', ''), 91: ('vcvtdq2ps', 0, 'rm', '', ''), 92: ('vsubps', 0, 'rm', 'v', 'v'), 93: ('vminps', 0, 'rm', 'v', 'v'), 94: ('vdivps', 0, 'rm', 'v', 'v'), 95: ('vmaxps', 0, 'rm', 'v', 'v'), 144: ('kmovw', 0, 'rm', '', ''), 145: ('kmovw', 0, 'm', '', ''), 146: ('kmovw', 0, 'r', '', ''), 147: ('kmovw', 0, 'r', '', ''), 152: ('kortestw', 0, 'r', '', ''), 153: ('ktestw', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpps', 1, 'rm', 'v', 'v'), 198: ('vshufps', 1, 'rm', 'v', 'v')}, (1, 0, 0, 1): {16: ('vmovups', 0, 'rm', '', ''), 17: ('vmovups', 0, 'rm', '', ''), 20: ('vunpcklps', 0, 'rm', 'v', 'v'), 21: ('vunpckhps', 0, 'rm', 'v', 'v'), 40: ('vmovaps', 0, 'rm', '', ''), 41: ('vmovaps', 0, 'rm', '', ''), 43: ('vmovntps', 0, 'm', '', ''), 46: ('vucomiss', 0, 'rm', '', ''), 47: ('vcomiss', 0, 'rm', '', ''), 65: ('kandw', 0, 'r', 'v', ''), 66: ('kandnw', 0, 'r', 'v', ''), 69: ('korw', 0, 'r', 'v', ''), 70: ('kxnorw', 0, 'r', 'v', ''), 71: ('kxorw', 0, 'r', 'v', ''), 74: ('kaddw', 0, 'r', 'v', ''), 75: ('kunpckwd', 0, 'r', 'v', ''), 80: ('vmovmskps', 0, 'r', '', ''), 81: ('vsqrtps', 0, 'rm', '', ''), 82: ('vrsqrtps', 0, 'rm', '', ''), 83: ('vrcpps', 0, 'rm', '', ''), 84: ('vandps', 0, 'rm', 'v', 'v'), 85: ('vandnps', 0, 'rm', 'v', 'v'), 86: ('vorps', 0, 'rm', 'v', 'v'), 87: ('vxorps', 0, 'rm', 'v', 'v'), 88: ('vaddps', 0, 'rm', 'v', 'v'), 89: ('vmulps', 0, 'rm', 'v', 'v'), 90: ('vcvtps2pd', 0, 'rm', '', ''), 91: ('vcvtdq2ps', 0, 'rm', '', ''), 92: ('vsubps', 0, 'rm', 'v', 'v'), 93: ('vminps', 0, 'rm', 'v', 'v'), 94: ('vdivps', 0, 'rm', 'v', 'v'), 95: ('vmaxps', 0, 'rm', 'v', 'v'), 194: ('vcmpps', 1, 'rm', 'v', 'v'), 198: ('vshufps', 1, 'rm', 'v', 'v')}, (1, 0, 1, 0): {16: ('vmovups', 0, 'rm', '', ''), 17: ('vmovups', 0, 'rm', '', ''), 18: ({'r': 'vmovhlps', 'm': 'vmovlps'}, 0, 'rm', 'v', 'v'), 19: ('vmovlps', 0, 'm', '', ''), 20: ('vunpcklps', 0, 'rm', 'v', 'v'), 21: ('vunpckhps', 0, 'rm', 'v', 'v'), 22: ({'r': 'vmovlhps', 'm': 'vmovhps'}, 0, 'rm', 'v', 'v'), 23: ('vmovhps', 0, 'm', '', ''), 40: ('vmovaps', 0, 'rm', '', ''), 41: ('vmovaps', 0, 'rm', '', ''), 43: ('vmovntps', 0, 'm', '', ''), 46: ('vucomiss', 0, 'rm', '', ''), 47: ('vcomiss', 0, 'rm', '', ''), 68: ('knotq', 0, 'r', '', ''), 80: ('vmovmskps', 0, 'r', '', ''), 81: ('vsqrtps', 0, 'rm', '', ''), 82: ('vrsqrtps', 0, 'rm', '', ''), 83: ('vrcpps', 0, 'rm', '', ''), 84: ('vandps', 0, 'rm', 'v', 'v'), 85: ('vandnps', 0, 'rm', 'v', 'v'), 86: ('vorps', 0, 'rm', 'v', 'v'), 87: ('vxorps', 0, 'rm', 'v', 'v'), 88: ('vaddps', 0, 'rm', 'v', 'v'), 89: ('vmulps', 0, 'rm', 'v', 'v'), 90: ('vcvtps2pd', 0, 'rm', '', ''), 91: ('vcvtdq2ps', 0, 'rm', '', ''), 92: ('vsubps', 0, 'rm', 'v', 'v'), 93: ('vminps', 0, 'rm', 'v', 'v'), 94: ('vdivps', 0, 'rm', 'v', 'v'), 95: ('vmaxps', 0, 'rm', 'v', 'v'), 144: ('kmovq', 0, 'rm', '', ''), 145: ('kmovq', 0, 'm', '', ''), 152: ('kortestq', 0, 'r', '', ''), 153: ('ktestq', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpps', 1, 'rm', 'v', 'v'), 198: ('vshufps', 1, 'rm', 'v', 'v')}, (1, 0, 1, 1): {16: ('vmovups', 0, 'rm', '', ''), 17: ('vmovups', 0, 'rm', '', ''), 20: ('vunpcklps', 0, 'rm', 'v', 'v'), 21: ('vunpckhps', 0, 'rm', 'v', 'v'), 40: ('vmovaps', 0, 'rm', '', ''), 41: ('vmovaps', 0, 'rm', '', ''), 43: ('vmovntps', 0, 'm', '', ''), 46: ('vucomiss', 0, 'rm', '', ''), 47: ('vcomiss', 0, 'rm', '', ''), 65: ('kandq', 0, 'r', 'v', ''), 66: ('kandnq', 0, 'r', 'v', ''), 69: ('korq', 0, 'r', 'v', ''), 70: ('kxnorq', 0, 'r', 'v', ''), 71: ('kxorq', 0, 'r', 'v', ''), 74: ('kaddq', 0, 'r', 'v', ''), 75: ('kunpckdq', 0, 'r', 'v', ''), 80: ('vmovmskps', 0, 'r', '', ''), 81: ('vsqrtps', 0, 'rm', '', ''), 82: ('vrsqrtps', 0, 'rm', '', ''), 83: ('vrcpps', 0, 'rm', '', ''), 84: ('vandps', 0, 'rm', 'v', 'v'), 85: ('vandnps', 0, 'rm', 'v', 'v'), 86: ('vorps', 0, 'rm', 'v', 'v'), 87: ('vxorps', 0, 'rm', 'v', 'v'), 88: ('vaddps', 0, 'rm', 'v', 'v'), 89: ('vmulps', 0, 'rm', 'v', 'v'), 90: ('vcvtps2pd', 0, 'rm', '', ''), 91: ('vcvtdq2ps', 0, 'rm', '', ''), 92: ('vsubps', 0, 'rm', 'v', 'v'), 93: ('vminps', 0, 'rm', 'v', 'v'), 94: ('vdivps', 0, 'rm', 'v', 'v'), 95: ('vmaxps', 0, 'rm', 'v', 'v'), 194: ('vcmpps', 1, 'rm', 'v', 'v'), 198: ('vshufps', 1, 'rm', 'v', 'v')}, (1, 1, 0, 0): {16: ('vmovupd', 0, 'rm', '', ''), 17: ('vmovupd', 0, 'rm', '', ''), 18: ('vmovlpd', 0, 'm', '', 'v'), 19: ('vmovlpd', 0, 'm', '', ''), 20: ('vunpcklpd', 0, 'rm', 'v', 'v'), 21: ('vunpckhpd', 0, 'rm', 'v', 'v'), 22: ('vmovhpd', 0, 'm', '', 'v'), 23: ('vmovhpd', 0, 'm', '', ''), 40: ('vmovapd', 0, 'rm', '', ''), 41: ('vmovapd', 0, 'rm', '', ''), 43: ('vmovntpd', 0, 'm', '', ''), 46: ('vucomisd', 0, 'rm', '', ''), 47: ('vcomisd', 0, 'rm', '', ''), 68: ('knotb', 0, 'r', '', ''), 80: ('vmovmskpd', 0, 'r', '', ''), 81: ('vsqrtpd', 0, 'rm', '', ''), 84: ('vandpd', 0, 'rm', 'v', 'v'), 85: ('vandnpd', 0, 'rm', 'v', 'v'), 86: ('vorpd', 0, 'rm', 'v', 'v'), 87: ('vxorpd', 0, 'rm', 'v', 'v'), 88: ('vaddpd', 0, 'rm', 'v', 'v'), 89: ('vmulpd', 0, 'rm', 'v', 'v'), 90: ('vcvtpd2ps', 0, 'rm', '', ''), 91: ('vcvtps2dq', 0, 'rm', '', ''), 92: ('vsubpd', 0, 'rm', 'v', 'v'), 93: ('vminpd', 0, 'rm', 'v', 'v'), 94: ('vdivpd', 0, 'rm', 'v', 'v'), 95: ('vmaxpd', 0, 'rm', 'v', 'v'), 96: ('vpunpcklbw', 0, 'rm', 'v', 'v'), 97: ('vpunpcklwd', 0, 'rm', 'v', 'v'), 98: ('vpunpckldq', 0, 'rm', 'v', 'v'), 99: ('vpacksswb', 0, 'rm', 'v', 'v'), 100: ('vpcmpgtb', 0, 'rm', 'v', 'v'), 101: ('vpcmpgtw', 0, 'rm', 'v', 'v'), 102: ('vpcmpgtd', 0, 'rm', 'v', 'v'), 103: ('vpackuswb', 0, 'rm', 'v', 'v'), 104: ('vpunpckhbw', 0, 'rm', 'v', 'v'), 105: ('vpunpckhwd', 0, 'rm', 'v', 'v'), 106: ('vpunpckhdq', 0, 'rm', 'v', 'v'), 107: ('vpackssdw', 0, 'rm', 'v', 'v'), 108: ('vpunpcklqdq', 0, 'rm', 'v', 'v'), 109: ('vpunpckhqdq', 0, 'rm', 'v', 'v'), 110: ('vmovd', 0, 'rm', '', ''), 111: ('vmovdqa', 0, 'rm', '', ''), 112: ('vpshufd', 1, 'rm', '', ''), 113: {2: ('vpsrlw', 1, 'r', 'v', ''), 4: ('vpsraw', 1, 'r', 'v', ''), 6: ('vpsllw', 1, 'r', 'v', '')}, 114: {2: ('vpsrld', 1, 'r', 'v', ''), 4: ('vpsrad', 1, 'r', 'v', ''), 6: ('vpslld', 1, 'r', 'v', '')}, 115: {2: ('vpsrlq', 1, 'r', 'v', ''), 3: ('vpsrldq', 1, 'r', 'v', ''), 6: ('vpsllq', 1, 'r', 'v', ''), 7: ('vpslldq', 1, 'r', 'v', '')}, 116: ('vpcmpeqb', 0, 'rm', 'v', 'v'), 117: ('vpcmpeqw', 0, 'rm', 'v', 'v'), 118: ('vpcmpeqd', 0, 'rm', 'v', 'v'), 124: ('vhaddpd', 0, 'rm', 'v', 'v'), 125: ('vhsubpd', 0, 'rm', 'v', 'v'), 126: ('vmovd', 0, 'rm', '', ''), 127: ('vmovdqa', 0, 'rm', '', ''), 144: ('kmovb', 0, 'rm', '', ''), 145: ('kmovb', 0, 'm', '', ''), 146: ('kmovb', 0, 'r', '', ''), 147: ('kmovb', 0, 'r', '', ''), 152: ('kortestb', 0, 'r', '', ''), 153: ('ktestb', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmppd', 1, 'rm', 'v', 'v'), 196: ('vpinsrw', 1, 'rm', 'v', 'v'), 197: ('vpextrw', 1, 'r', '', ''), 198: ('vshufpd', 1, 'rm', 'v', 'v'), 208: ('vaddsubpd', 0, 'rm', 'v', 'v'), 209: ('vpsrlw', 0, 'rm', 'v', 'v'), 210: ('vpsrld', 0, 'rm', 'v', 'v'), 211: ('vpsrlq', 0, 'rm', 'v', 'v'), 212: ('vpaddq', 0, 'rm', 'v', 'v'), 213: ('vpmullw', 0, 'rm', 'v', 'v'), 214: ('vmovq', 0, 'rm', '', ''), 215: ('vpmovmskb', 0, 'r', '', ''), 216: ('vpsubusb', 0, 'rm', 'v', 'v'), 217: ('vpsubusw', 0, 'rm', 'v', 'v'), 218: ('vpminub', 0, 'rm', 'v', 'v'), 219: ('vpand', 0, 'rm', 'v', 'v'), 220: ('vpaddusb', 0, 'rm', 'v', 'v'), 221: ('vpaddusw', 0, 'rm', 'v', 'v'), 222: ('vpmaxub', 0, 'rm', 'v', 'v'), 223: ('vpandn', 0, 'rm', 'v', 'v'), 224: ('vpavgb', 0, 'rm', 'v', 'v'), 225: ('vpsraw', 0, 'rm', 'v', 'v'), 226: ('vpsrad', 0, 'rm', 'v', 'v'), 227: ('vpavgw', 0, 'rm', 'v', 'v'), 228: ('vpmulhuw', 0, 'rm', 'v', 'v'), 229: ('vpmulhw', 0, 'rm', 'v', 'v'), 230: ('vcvttpd2dq', 0, 'rm', '', ''), 231: ('vmovntdq', 0, 'm', '', ''), 232: ('vpsubsb', 0, 'rm', 'v', 'v'), 233: ('vpsubsw', 0, 'rm', 'v', 'v'), 234: ('vpminsw', 0, 'rm', 'v', 'v'), 235: ('vpor', 0, 'rm', 'v', 'v'), 236: ('vpaddsb', 0, 'rm', 'v', 'v'), 237: ('vpaddsw', 0, 'rm', 'v', 'v'), 238: ('vpmaxsw', 0, 'rm', 'v', 'v'), 239: ('vpxor', 0, 'rm', 'v', 'v'), 241: ('vpsllw', 0, 'rm', 'v', 'v'), 242: ('vpslld', 0, 'rm', 'v', 'v'), 243: ('vpsllq', 0, 'rm', 'v', 'v'), 244: ('vpmuludq', 0, 'rm', 'v', 'v'), 245: ('vpmaddwd', 0, 'rm', 'v', 'v'), 246: ('vpsadbw', 0, 'rm', 'v', 'v'), 247: ('vmaskmovdqu', 0, 'r', '', ''), 248: ('vpsubb', 0, 'rm', 'v', 'v'), 249: ('vpsubw', 0, 'rm', 'v', 'v'), 250: ('vpsubd', 0, 'rm', 'v', 'v'), 251: ('vpsubq', 0, 'rm', 'v', 'v'), 252: ('vpaddb', 0, 'rm', 'v', 'v'), 253: ('vpaddw', 0, 'rm', 'v', 'v'), 254: ('vpaddd', 0, 'rm', 'v', 'v')}, (1, 1, 0, 1): {16: ('vmovupd', 0, 'rm', '', ''), 17: ('vmovupd', 0, 'rm', '', ''), 20: ('vunpcklpd', 0, 'rm', 'v', 'v'), 21: ('vunpckhpd', 0, 'rm', 'v', 'v'), 40: ('vmovapd', 0, 'rm', '', ''), 41: ('vmovapd', 0, 'rm', '', ''), 43: ('vmovntpd', 0, 'm', '', ''), 46: ('vucomisd', 0, 'rm', '', ''), 47: ('vcomisd', 0, 'rm', '', ''), 65: ('kandb', 0, 'r', 'v', ''), 66: ('kandnb', 0, 'r', 'v', ''), 69: ('korb', 0, 'r', 'v', ''), 70: ('kxnorb', 0, 'r', 'v', ''), 71: ('kxorb', 0, 'r', 'v', ''), 74: ('kaddb', 0, 'r', 'v', ''), 75: ('kunpckbw', 0, 'r', 'v', ''), 80: ('vmovmskpd', 0, 'r', '', ''), 81: ('vsqrtpd', 0, 'rm', '', ''), 84: ('vandpd', 0, 'rm', 'v', 'v'), 85: ('vandnpd', 0, 'rm', 'v', 'v'), 86: ('vorpd', 0, 'rm', 'v', 'v'), 87: ('vxorpd', 0, 'rm', 'v', 'v'), 88: ('vaddpd', 0, 'rm', 'v', 'v'), 89: ('vmulpd', 0, 'rm', 'v', 'v'), 90: ('vcvtpd2ps', 0, 'rm', '', ''), 91: ('vcvtps2dq', 0, 'rm', '', ''), 92: ('vsubpd', 0, 'rm', 'v', 'v'), 93: ('vminpd', 0, 'rm', 'v', 'v'), 94: ('vdivpd', 0, 'rm', 'v', 'v'), 95: ('vmaxpd', 0, 'rm', 'v', 'v'), 96: ('vpunpcklbw', 0, 'rm', 'v', 'v'), 97: ('vpunpcklwd', 0, 'rm', 'v', 'v'), 98: ('vpunpckldq', 0, 'rm', 'v', 'v'), 99: ('vpacksswb', 0, 'rm', 'v', 'v'), 100: ('vpcmpgtb', 0, 'rm', 'v', 'v'), 101: ('vpcmpgtw', 0, 'rm', 'v', 'v'), 102: ('vpcmpgtd', 0, 'rm', 'v', 'v'), 103: ('vpackuswb', 0, 'rm', 'v', 'v'), 104: ('vpunpckhbw', 0, 'rm', 'v', 'v'), 105: ('vpunpckhwd', 0, 'rm', 'v', 'v'), 106: ('vpunpckhdq', 0, 'rm', 'v', 'v'), 107: ('vpackssdw', 0, 'rm', 'v', 'v'), 108: ('vpunpcklqdq', 0, 'rm', 'v', 'v'), 109: ('vpunpckhqdq', 0, 'rm', 'v', 'v'), 111: ('vmovdqa', 0, 'rm', '', ''), 112: ('vpshufd', 1, 'rm', '', ''), 113: {2: ('vpsrlw', 1, 'r', 'v', ''), 4: ('vpsraw', 1, 'r', 'v', ''), 6: ('vpsllw', 1, 'r', 'v', '')}, 114: {2: ('vpsrld', 1, 'r', 'v', ''), 4: ('vpsrad', 1, 'r', 'v', ''), 6: ('vpslld', 1, 'r', 'v', '')}, 115: {2: ('vpsrlq', 1, 'r', 'v', ''), 3: ('vpsrldq', 1, 'r', 'v', ''), 6: ('vpsllq', 1, 'r', 'v', ''), 7: ('vpslldq', 1, 'r', 'v', '')}, 116: ('vpcmpeqb', 0, 'rm', 'v', 'v'), 117: ('vpcmpeqw', 0, 'rm', 'v', 'v'), 118: ('vpcmpeqd', 0, 'rm', 'v', 'v'), 124: ('vhaddpd', 0, 'rm', 'v', 'v'), 125: ('vhsubpd', 0, 'rm', 'v', 'v'), 127: ('vmovdqa', 0, 'rm', '', ''), 194: ('vcmppd', 1, 'rm', 'v', 'v'), 198: ('vshufpd', 1, 'rm', 'v', 'v'), 208: ('vaddsubpd', 0, 'rm', 'v', 'v'), 209: ('vpsrlw', 0, 'rm', 'v', 'v'), 210: ('vpsrld', 0, 'rm', 'v', 'v'), 211: ('vpsrlq', 0, 'rm', 'v', 'v'), 212: ('vpaddq', 0, 'rm', 'v', 'v'), 213: ('vpmullw', 0, 'rm', 'v', 'v'), 215: ('vpmovmskb', 0, 'r', '', ''), 216: ('vpsubusb', 0, 'rm', 'v', 'v'), 217: ('vpsubusw', 0, 'rm', 'v', 'v'), 218: ('vpminub', 0, 'rm', 'v', 'v'), 219: ('vpand', 0, 'rm', 'v', 'v'), 220: ('vpaddusb', 0, 'rm', 'v', 'v'), 221: ('vpaddusw', 0, 'rm', 'v', 'v'), 222: ('vpmaxub', 0, 'rm', 'v', 'v'), 223: ('vpandn', 0, 'rm', 'v', 'v'), 224: ('vpavgb', 0, 'rm', 'v', 'v'), 225: ('vpsraw', 0, 'rm', 'v', 'v'), 226: ('vpsrad', 0, 'rm', 'v', 'v'), 227: ('vpavgw', 0, 'rm', 'v', 'v'), 228: ('vpmulhuw', 0, 'rm', 'v', 'v'), 229: ('vpmulhw', 0, 'rm', 'v', 'v'), 230: ('vcvttpd2dq', 0, 'rm', '', ''), 231: ('vmovntdq', 0, 'm', '', ''), 232: ('vpsubsb', 0, 'rm', 'v', 'v'), 233: ('vpsubsw', 0, 'rm', 'v', 'v'), 234: ('vpminsw', 0, 'rm', 'v', 'v'), 235: ('vpor', 0, 'rm', 'v', 'v'), 236: ('vpaddsb', 0, 'rm', 'v', 'v'), 237: ('vpaddsw', 0, 'rm', 'v', 'v'), 238: ('vpmaxsw', 0, 'rm', 'v', 'v'), 239: ('vpxor', 0, 'rm', 'v', 'v'), 241: ('vpsllw', 0, 'rm', 'v', 'v'), 242: ('vpslld', 0, 'rm', 'v', 'v'), 243: ('vpsllq', 0, 'rm', 'v', 'v'), 244: ('vpmuludq', 0, 'rm', 'v', 'v'), 245: ('vpmaddwd', 0, 'rm', 'v', 'v'), 246: ('vpsadbw', 0, 'rm', 'v', 'v'), 248: ('vpsubb', 0, 'rm', 'v', 'v'), 249: ('vpsubw', 0, 'rm', 'v', 'v'), 250: ('vpsubd', 0, 'rm', 'v', 'v'), 251: ('vpsubq', 0, 'rm', 'v', 'v'), 252: ('vpaddb', 0, 'rm', 'v', 'v'), 253: ('vpaddw', 0, 'rm', 'v', 'v'), 254: ('vpaddd', 0, 'rm', 'v', 'v')}, (1, 1, 1, 0): {16: ('vmovupd', 0, 'rm', '', ''), 17: ('vmovupd', 0, 'rm', '', ''), 18: ('vmovlpd', 0, 'm', '', 'v'), 19: ('vmovlpd', 0, 'm', '', ''), 20: ('vunpcklpd', 0, 'rm', 'v', 'v'), 21: ('vunpckhpd', 0, 'rm', 'v', 'v'), 22: ('vmovhpd', 0, 'm', '', 'v'), 23: ('vmovhpd', 0, 'm', '', ''), 40: ('vmovapd', 0, 'rm', '', ''), 41: ('vmovapd', 0, 'rm', '', ''), 43: ('vmovntpd', 0, 'm', '', ''), 46: ('vucomisd', 0, 'rm', '', ''), 47: ('vcomisd', 0, 'rm', '', ''), 68: ('knotd', 0, 'r', '', ''), 80: ('vmovmskpd', 0, 'r', '', ''), 81: ('vsqrtpd', 0, 'rm', '', ''), 84: ('vandpd', 0, 'rm', 'v', 'v'), 85: ('vandnpd', 0, 'rm', 'v', 'v'), 86: ('vorpd', 0, 'rm', 'v', 'v'), 87: ('vxorpd', 0, 'rm', 'v', 'v'), 88: ('vaddpd', 0, 'rm', 'v', 'v'), 89: ('vmulpd', 0, 'rm', 'v', 'v'), 90: ('vcvtpd2ps', 0, 'rm', '', ''), 91: ('vcvtps2dq', 0, 'rm', '', ''), 92: ('vsubpd', 0, 'rm', 'v', 'v'), 93: ('vminpd', 0, 'rm', 'v', 'v'), 94: ('vdivpd', 0, 'rm', 'v', 'v'), 95: ('vmaxpd', 0, 'rm', 'v', 'v'), 96: ('vpunpcklbw', 0, 'rm', 'v', 'v'), 97: ('vpunpcklwd', 0, 'rm', 'v', 'v'), 98: ('vpunpckldq', 0, 'rm', 'v', 'v'), 99: ('vpacksswb', 0, 'rm', 'v', 'v'), 100: ('vpcmpgtb', 0, 'rm', 'v', 'v'), 101: ('vpcmpgtw', 0, 'rm', 'v', 'v'), 102: ('vpcmpgtd', 0, 'rm', 'v', 'v'), 103: ('vpackuswb', 0, 'rm', 'v', 'v'), 104: ('vpunpckhbw', 0, 'rm', 'v', 'v'), 105: ('vpunpckhwd', 0, 'rm', 'v', 'v'), 106: ('vpunpckhdq', 0, 'rm', 'v', 'v'), 107: ('vpackssdw', 0, 'rm', 'v', 'v'), 108: ('vpunpcklqdq', 0, 'rm', 'v', 'v'), 109: ('vpunpckhqdq', 0, 'rm', 'v', 'v'), 110: ('vmovq', 0, 'rm', '', ''), 111: ('vmovdqa', 0, 'rm', '', ''), 112: ('vpshufd', 1, 'rm', '', ''), 113: {2: ('vpsrlw', 1, 'r', 'v', ''), 4: ('vpsraw', 1, 'r', 'v', ''), 6: ('vpsllw', 1, 'r', 'v', '')}, 114: {2: ('vpsrld', 1, 'r', 'v', ''), 4: ('vpsrad', 1, 'r', 'v', ''), 6: ('vpslld', 1, 'r', 'v', '')}, 115: {2: ('vpsrlq', 1, 'r', 'v', ''), 3: ('vpsrldq', 1, 'r', 'v', ''), 6: ('vpsllq', 1, 'r', 'v', ''), 7: ('vpslldq', 1, 'r', 'v', '')}, 116: ('vpcmpeqb', 0, 'rm', 'v', 'v'), 117: ('vpcmpeqw', 0, 'rm', 'v', 'v'), 118: ('vpcmpeqd', 0, 'rm', 'v', 'v'), 124: ('vhaddpd', 0, 'rm', 'v', 'v'), 125: ('vhsubpd', 0, 'rm', 'v', 'v'), 126: ('vmovq', 0, 'rm', '', ''), 127: ('vmovdqa', 0, 'rm', '', ''), 144: ('kmovd', 0, 'rm', '', ''), 145: ('kmovd', 0, 'm', '', ''), 152: ('kortestd', 0, 'r', '', ''), 153: ('ktestd', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmppd', 1, 'rm', 'v', 'v'), 196: ('vpinsrw', 1, 'rm', 'v', 'v'), 197: ('vpextrw', 1, 'r', '', ''), 198: ('vshufpd', 1, 'rm', 'v', 'v'), 208: ('vaddsubpd', 0, 'rm', 'v', 'v'), 209: ('vpsrlw', 0, 'rm', 'v', 'v'), 210: ('vpsrld', 0, 'rm', 'v', 'v'), 211: ('vpsrlq', 0, 'rm', 'v', 'v'), 212: ('vpaddq', 0, 'rm', 'v', 'v'), 213: ('vpmullw', 0, 'rm', 'v', 'v'), 214: ('vmovq', 0, 'rm', '', ''), 215: ('vpmovmskb', 0, 'r', '', ''), 216: ('vpsubusb', 0, 'rm', 'v', 'v'), 217: ('vpsubusw', 0, 'rm', 'v', 'v'), 218: ('vpminub', 0, 'rm', 'v', 'v'), 219: ('vpand', 0, 'rm', 'v', 'v'), 220: ('vpaddusb', 0, 'rm', 'v', 'v'), 221: ('vpaddusw', 0, 'rm', 'v', 'v'), 222: ('vpmaxub', 0, 'rm', 'v', 'v'), 223: ('vpandn', 0, 'rm', 'v', 'v'), 224: ('vpavgb', 0, 'rm', 'v', 'v'), 225: ('vpsraw', 0, 'rm', 'v', 'v'), 226: ('vpsrad', 0, 'rm', 'v', 'v'), 227: ('vpavgw', 0, 'rm', 'v', 'v'), 228: ('vpmulhuw', 0, 'rm', 'v', 'v'), 229: ('vpmulhw', 0, 'rm', 'v', 'v'), 230: ('vcvttpd2dq', 0, 'rm', '', ''), 231: ('vmovntdq', 0, 'm', '', ''), 232: ('vpsubsb', 0, 'rm', 'v', 'v'), 233: ('vpsubsw', 0, 'rm', 'v', 'v'), 234: ('vpminsw', 0, 'rm', 'v', 'v'), 235: ('vpor', 0, 'rm', 'v', 'v'), 236: ('vpaddsb', 0, 'rm', 'v', 'v'), 237: ('vpaddsw', 0, 'rm', 'v', 'v'), 238: ('vpmaxsw', 0, 'rm', 'v', 'v'), 239: ('vpxor', 0, 'rm', 'v', 'v'), 241: ('vpsllw', 0, 'rm', 'v', 'v'), 242: ('vpslld', 0, 'rm', 'v', 'v'), 243: ('vpsllq', 0, 'rm', 'v', 'v'), 244: ('vpmuludq', 0, 'rm', 'v', 'v'), 245: ('vpmaddwd', 0, 'rm', 'v', 'v'), 246: ('vpsadbw', 0, 'rm', 'v', 'v'), 247: ('vmaskmovdqu', 0, 'r', '', ''), 248: ('vpsubb', 0, 'rm', 'v', 'v'), 249: ('vpsubw', 0, 'rm', 'v', 'v'), 250: ('vpsubd', 0, 'rm', 'v', 'v'), 251: ('vpsubq', 0, 'rm', 'v', 'v'), 252: ('vpaddb', 0, 'rm', 'v', 'v'), 253: ('vpaddw', 0, 'rm', 'v', 'v'), 254: ('vpaddd', 0, 'rm', 'v', 'v')}, (1, 1, 1, 1): {16: ('vmovupd', 0, 'rm', '', ''), 17: ('vmovupd', 0, 'rm', '', ''), 20: ('vunpcklpd', 0, 'rm', 'v', 'v'), 21: ('vunpckhpd', 0, 'rm', 'v', 'v'), 40: ('vmovapd', 0, 'rm', '', ''), 41: ('vmovapd', 0, 'rm', '', ''), 43: ('vmovntpd', 0, 'm', '', ''), 46: ('vucomisd', 0, 'rm', '', ''), 47: ('vcomisd', 0, 'rm', '', ''), 65: ('kandd', 0, 'r', 'v', ''), 66: ('kandnd', 0, 'r', 'v', ''), 69: ('kord', 0, 'r', 'v', ''), 70: ('kxnord', 0, 'r', 'v', ''), 71: ('kxord', 0, 'r', 'v', ''), 74: ('kaddd', 0, 'r', 'v', ''), 80: ('vmovmskpd', 0, 'r', '', ''), 81: ('vsqrtpd', 0, 'rm', '', ''), 84: ('vandpd', 0, 'rm', 'v', 'v'), 85: ('vandnpd', 0, 'rm', 'v', 'v'), 86: ('vorpd', 0, 'rm', 'v', 'v'), 87: ('vxorpd', 0, 'rm', 'v', 'v'), 88: ('vaddpd', 0, 'rm', 'v', 'v'), 89: ('vmulpd', 0, 'rm', 'v', 'v'), 90: ('vcvtpd2ps', 0, 'rm', '', ''), 91: ('vcvtps2dq', 0, 'rm', '', ''), 92: ('vsubpd', 0, 'rm', 'v', 'v'), 93: ('vminpd', 0, 'rm', 'v', 'v'), 94: ('vdivpd', 0, 'rm', 'v', 'v'), 95: ('vmaxpd', 0, 'rm', 'v', 'v'), 96: ('vpunpcklbw', 0, 'rm', 'v', 'v'), 97: ('vpunpcklwd', 0, 'rm', 'v', 'v'), 98: ('vpunpckldq', 0, 'rm', 'v', 'v'), 99: ('vpacksswb', 0, 'rm', 'v', 'v'), 100: ('vpcmpgtb', 0, 'rm', 'v', 'v'), 101: ('vpcmpgtw', 0, 'rm', 'v', 'v'), 102: ('vpcmpgtd', 0, 'rm', 'v', 'v'), 103: ('vpackuswb', 0, 'rm', 'v', 'v'), 104: ('vpunpckhbw', 0, 'rm', 'v', 'v'), 105: ('vpunpckhwd', 0, 'rm', 'v', 'v'), 106: ('vpunpckhdq', 0, 'rm', 'v', 'v'), 107: ('vpackssdw', 0, 'rm', 'v', 'v'), 108: ('vpunpcklqdq', 0, 'rm', 'v', 'v'), 109: ('vpunpckhqdq', 0, 'rm', 'v', 'v'), 111: ('vmovdqa', 0, 'rm', '', ''), 112: ('vpshufd', 1, 'rm', '', ''), 113: {2: ('vpsrlw', 1, 'r', 'v', ''), 4: ('vpsraw', 1, 'r', 'v', ''), 6: ('vpsllw', 1, 'r', 'v', '')}, 114: {2: ('vpsrld', 1, 'r', 'v', ''), 4: ('vpsrad', 1, 'r', 'v', ''), 6: ('vpslld', 1, 'r', 'v', '')}, 115: {2: ('vpsrlq', 1, 'r', 'v', ''), 3: ('vpsrldq', 1, 'r', 'v', ''), 6: ('vpsllq', 1, 'r', 'v', ''), 7: ('vpslldq', 1, 'r', 'v', '')}, 116: ('vpcmpeqb', 0, 'rm', 'v', 'v'), 117: ('vpcmpeqw', 0, 'rm', 'v', 'v'), 118: ('vpcmpeqd', 0, 'rm', 'v', 'v'), 124: ('vhaddpd', 0, 'rm', 'v', 'v'), 125: ('vhsubpd', 0, 'rm', 'v', 'v'), 127: ('vmovdqa', 0, 'rm', '', ''), 194: ('vcmppd', 1, 'rm', 'v', 'v'), 198: ('vshufpd', 1, 'rm', 'v', 'v'), 208: ('vaddsubpd', 0, 'rm', 'v', 'v'), 209: ('vpsrlw', 0, 'rm', 'v', 'v'), 210: ('vpsrld', 0, 'rm', 'v', 'v'), 211: ('vpsrlq', 0, 'rm', 'v', 'v'), 212: ('vpaddq', 0, 'rm', 'v', 'v'), 213: ('vpmullw', 0, 'rm', 'v', 'v'), 215: ('vpmovmskb', 0, 'r', '', ''), 216: ('vpsubusb', 0, 'rm', 'v', 'v'), 217: ('vpsubusw', 0, 'rm', 'v', 'v'), 218: ('vpminub', 0, 'rm', 'v', 'v'), 219: ('vpand', 0, 'rm', 'v', 'v'), 220: ('vpaddusb', 0, 'rm', 'v', 'v'), 221: ('vpaddusw', 0, 'rm', 'v', 'v'), 222: ('vpmaxub', 0, 'rm', 'v', 'v'), 223: ('vpandn', 0, 'rm', 'v', 'v'), 224: ('vpavgb', 0, 'rm', 'v', 'v'), 225: ('vpsraw', 0, 'rm', 'v', 'v'), 226: ('vpsrad', 0, 'rm', 'v', 'v'), 227: ('vpavgw', 0, 'rm', 'v', 'v'), 228: ('vpmulhuw', 0, 'rm', 'v', 'v'), 229: ('vpmulhw', 0, 'rm', 'v', 'v'), 230: ('vcvttpd2dq', 0, 'rm', '', ''), 231: ('vmovntdq', 0, 'm', '', ''), 232: ('vpsubsb', 0, 'rm', 'v', 'v'), 233: ('vpsubsw', 0, 'rm', 'v', 'v'), 234: ('vpminsw', 0, 'rm', 'v', 'v'), 235: ('vpor', 0, 'rm', 'v', 'v'), 236: ('vpaddsb', 0, 'rm', 'v', 'v'), 237: ('vpaddsw', 0, 'rm', 'v', 'v'), 238: ('vpmaxsw', 0, 'rm', 'v', 'v'), 239: ('vpxor', 0, 'rm', 'v', 'v'), 241: ('vpsllw', 0, 'rm', 'v', 'v'), 242: ('vpslld', 0, 'rm', 'v', 'v'), 243: ('vpsllq', 0, 'rm', 'v', 'v'), 244: ('vpmuludq', 0, 'rm', 'v', 'v'), 245: ('vpmaddwd', 0, 'rm', 'v', 'v'), 246: ('vpsadbw', 0, 'rm', 'v', 'v'), 248: ('vpsubb', 0, 'rm', 'v', 'v'), 249: ('vpsubw', 0, 'rm', 'v', 'v'), 250: ('vpsubd', 0, 'rm', 'v', 'v'), 251: ('vpsubq', 0, 'rm', 'v', 'v'), 252: ('vpaddb', 0, 'rm', 'v', 'v'), 253: ('vpaddw', 0, 'rm', 'v', 'v'), 254: ('vpaddd', 0, 'rm', 'v', 'v')}, (1, 2, 0, 0): {16: ('vmovss', 0, 'rm', 'v', ''), 17: ('vmovss', 0, 'rm', 'v', ''), 18: ('vmovsldup', 0, 'rm', '', ''), 22: ('vmovshdup', 0, 'rm', '', ''), 42: ('vcvtsi2ss', 0, 'rm', 'v', 'v'), 44: ('vcvttss2si', 0, 'rm', '', ''), 45: ('vcvtss2si', 0, 'rm', '', ''), 81: ('vsqrtss', 0, 'rm', 'v', 'v'), 82: ('vrsqrtss', 0, 'rm', 'v', 'v'), 83: ('vrcpss', 0, 'rm', 'v', 'v'), 88: ('vaddss', 0, 'rm', 'v', 'v'), 89: ('vmulss', 0, 'rm', 'v', 'v'), 90: ('vcvtss2sd', 0, 'rm', 'v', 'v'), 91: ('vcvttps2dq', 0, 'rm', '', ''), 92: ('vsubss', 0, 'rm', 'v', 'v'), 93: ('vminss', 0, 'rm', 'v', 'v'), 94: ('vdivss', 0, 'rm', 'v', 'v'), 95: ('vmaxss', 0, 'rm', 'v', 'v'), 111: ('vmovdqu', 0, 'rm', '', ''), 112: ('vpshufhw', 1, 'rm', '', ''), 126: ('vmovq', 0, 'rm', '', ''), 127: ('vmovdqu', 0, 'rm', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpss', 1, 'rm', 'v', 'v'), 230: ('vcvtdq2pd', 0, 'rm', '', '')}, (1, 2, 0, 1): {16: ('vmovss', 0, 'rm', 'v', ''), 17: ('vmovss', 0, 'rm', 'v', ''), 18: ('vmovsldup', 0, 'rm', '', ''), 22: ('vmovshdup', 0, 'rm', '', ''), 42: ('vcvtsi2ss', 0, 'rm', 'v', 'v'), 44: ('vcvttss2si', 0, 'rm', '', ''), 45: ('vcvtss2si', 0, 'rm', '', ''), 81: ('vsqrtss', 0, 'rm', 'v', 'v'), 82: ('vrsqrtss', 0, 'rm', 'v', 'v'), 83: ('vrcpss', 0, 'rm', 'v', 'v'), 88: ('vaddss', 0, 'rm', 'v', 'v'), 89: ('vmulss', 0, 'rm', 'v', 'v'), 90: ('vcvtss2sd', 0, 'rm', 'v', 'v'), 91: ('vcvttps2dq', 0, 'rm', '', ''), 92: ('vsubss', 0, 'rm', 'v', 'v'), 93: ('vminss', 0, 'rm', 'v', 'v'), 94: ('vdivss', 0, 'rm', 'v', 'v'), 95: ('vmaxss', 0, 'rm', 'v', 'v'), 111: ('vmovdqu', 0, 'rm', '', ''), 112: ('vpshufhw', 1, 'rm', '', ''), 127: ('vmovdqu', 0, 'rm', '', ''), 194: ('vcmpss', 1, 'rm', 'v', 'v'), 230: ('vcvtdq2pd', 0, 'rm', '', '')}, (1, 2, 1, 0): {16: ('vmovss', 0, 'rm', 'v', ''), 17: ('vmovss', 0, 'rm', 'v', ''), 18: ('vmovsldup', 0, 'rm', '', ''), 22: ('vmovshdup', 0, 'rm', '', ''), 42: ('vcvtsi2ss', 0, 'rm', 'v', 'v'), 44: ('vcvttss2si', 0, 'rm', '', ''), 45: ('vcvtss2si', 0, 'rm', '', ''), 81: ('vsqrtss', 0, 'rm', 'v', 'v'), 82: ('vrsqrtss', 0, 'rm', 'v', 'v'), 83: ('vrcpss', 0, 'rm', 'v', 'v'), 88: ('vaddss', 0, 'rm', 'v', 'v'), 89: ('vmulss', 0, 'rm', 'v', 'v'), 90: ('vcvtss2sd', 0, 'rm', 'v', 'v'), 91: ('vcvttps2dq', 0, 'rm', '', ''), 92: ('vsubss', 0, 'rm', 'v', 'v'), 93: ('vminss', 0, 'rm', 'v', 'v'), 94: ('vdivss', 0, 'rm', 'v', 'v'), 95: ('vmaxss', 0, 'rm', 'v', 'v'), 111: ('vmovdqu', 0, 'rm', '', ''), 112: ('vpshufhw', 1, 'rm', '', ''), 126: ('vmovq', 0, 'rm', '', ''), 127: ('vmovdqu', 0, 'rm', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpss', 1, 'rm', 'v', 'v'), 230: ('vcvtdq2pd', 0, 'rm', '', '')}, (1, 2, 1, 1): {16: ('vmovss', 0, 'rm', 'v', ''), 17: ('vmovss', 0, 'rm', 'v', ''), 18: ('vmovsldup', 0, 'rm', '', ''), 22: ('vmovshdup', 0, 'rm', '', ''), 42: ('vcvtsi2ss', 0, 'rm', 'v', 'v'), 44: ('vcvttss2si', 0, 'rm', '', ''), 45: ('vcvtss2si', 0, 'rm', '', ''), 81: ('vsqrtss', 0, 'rm', 'v', 'v'), 82: ('vrsqrtss', 0, 'rm', 'v', 'v'), 83: ('vrcpss', 0, 'rm', 'v', 'v'), 88: ('vaddss', 0, 'rm', 'v', 'v'), 89: ('vmulss', 0, 'rm', 'v', 'v'), 90: ('vcvtss2sd', 0, 'rm', 'v', 'v'), 91: ('vcvttps2dq', 0, 'rm', '', ''), 92: ('vsubss', 0, 'rm', 'v', 'v'), 93: ('vminss', 0, 'rm', 'v', 'v'), 94: ('vdivss', 0, 'rm', 'v', 'v'), 95: ('vmaxss', 0, 'rm', 'v', 'v'), 111: ('vmovdqu', 0, 'rm', '', ''), 112: ('vpshufhw', 1, 'rm', '', ''), 127: ('vmovdqu', 0, 'rm', '', ''), 194: ('vcmpss', 1, 'rm', 'v', 'v'), 230: ('vcvtdq2pd', 0, 'rm', '', '')}, (1, 3, 0, 0): {16: ('vmovsd', 0, 'rm', 'v', ''), 17: ('vmovsd', 0, 'rm', 'v', ''), 18: ('vmovddup', 0, 'rm', '', ''), 42: ('vcvtsi2sd', 0, 'rm', 'v', 'v'), 44: ('vcvttsd2si', 0, 'rm', '', ''), 45: ('vcvtsd2si', 0, 'rm', '', ''), 81: ('vsqrtsd', 0, 'rm', 'v', 'v'), 88: ('vaddsd', 0, 'rm', 'v', 'v'), 89: ('vmulsd', 0, 'rm', 'v', 'v'), 90: ('vcvtsd2ss', 0, 'rm', 'v', 'v'), 92: ('vsubsd', 0, 'rm', 'v', 'v'), 93: ('vminsd', 0, 'rm', 'v', 'v'), 94: ('vdivsd', 0, 'rm', 'v', 'v'), 95: ('vmaxsd', 0, 'rm', 'v', 'v'), 112: ('vpshuflw', 1, 'rm', '', ''), 124: ('vhaddps', 0, 'rm', 'v', 'v'), 125: ('vhsubps', 0, 'rm', 'v', 'v'), 146: ('kmovd', 0, 'r', '', ''), 147: ('kmovd', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpsd', 1, 'rm', 'v', 'v'), 208: ('vaddsubps', 0, 'rm', 'v', 'v'), 230: ('vcvtpd2dq', 0, 'rm', '', ''), 240: ('vlddqu', 0, 'm', '', '')}, (1, 3, 0, 1): {16: ('vmovsd', 0, 'rm', 'v', ''), 17: ('vmovsd', 0, 'rm', 'v', ''), 18: ('vmovddup', 0, 'rm', '', ''), 42: ('vcvtsi2sd', 0, 'rm', 'v', 'v'), 44: ('vcvttsd2si', 0, 'rm', '', ''), 45: ('vcvtsd2si', 0, 'rm', '', ''), 81: ('vsqrtsd', 0, 'rm', 'v', 'v'), 88: ('vaddsd', 0, 'rm', 'v', 'v'), 89: ('vmulsd', 0, 'rm', 'v', 'v'), 90: ('vcvtsd2ss', 0, 'rm', 'v', 'v'), 92: ('vsubsd', 0, 'rm', 'v', 'v'), 93: ('vminsd', 0, 'rm', 'v', 'v'), 94: ('vdivsd', 0, 'rm', 'v', 'v'), 95: ('vmaxsd', 0, 'rm', 'v', 'v'), 112: ('vpshuflw', 1, 'rm', '', ''), 124: ('vhaddps', 0, 'rm', 'v', 'v'), 125: ('vhsubps', 0, 'rm', 'v', 'v'), 194: ('vcmpsd', 1, 'rm', 'v', 'v'), 208: ('vaddsubps', 0, 'rm', 'v', 'v'), 230: ('vcvtpd2dq', 0, 'rm', '', ''), 240: ('vlddqu', 0, 'm', '', '')}, (1, 3, 1, 0): {16: ('vmovsd', 0, 'rm', 'v', ''), 17: ('vmovsd', 0, 'rm', 'v', ''), 18: ('vmovddup', 0, 'rm', '', ''), 42: ('vcvtsi2sd', 0, 'rm', 'v', 'v'), 44: ('vcvttsd2si', 0, 'rm', '', ''), 45: ('vcvtsd2si', 0, 'rm', '', ''), 81: ('vsqrtsd', 0, 'rm', 'v', 'v'), 88: ('vaddsd', 0, 'rm', 'v', 'v'), 89: ('vmulsd', 0, 'rm', 'v', 'v'), 90: ('vcvtsd2ss', 0, 'rm', 'v', 'v'), 92: ('vsubsd', 0, 'rm', 'v', 'v'), 93: ('vminsd', 0, 'rm', 'v', 'v'), 94: ('vdivsd', 0, 'rm', 'v', 'v'), 95: ('vmaxsd', 0, 'rm', 'v', 'v'), 112: ('vpshuflw', 1, 'rm', '', ''), 124: ('vhaddps', 0, 'rm', 'v', 'v'), 125: ('vhsubps', 0, 'rm', 'v', 'v'), 146: ('kmovq', 0, 'r', '', ''), 147: ('kmovq', 0, 'r', '', ''), 174: {2: ('vldmxcsr', 0, 'm', '', ''), 3: ('vstmxcsr', 0, 'm', '', '')}, 194: ('vcmpsd', 1, 'rm', 'v', 'v'), 208: ('vaddsubps', 0, 'rm', 'v', 'v'), 230: ('vcvtpd2dq', 0, 'rm', '', ''), 240: ('vlddqu', 0, 'm', '', '')}, (1, 3, 1, 1): {16: ('vmovsd', 0, 'rm', 'v', ''), 17: ('vmovsd', 0, 'rm', 'v', ''), 18: ('vmovddup', 0, 'rm', '', ''), 42: ('vcvtsi2sd', 0, 'rm', 'v', 'v'), 44: ('vcvttsd2si', 0, 'rm', '', ''), 45: ('vcvtsd2si', 0, 'rm', '', ''), 81: ('vsqrtsd', 0, 'rm', 'v', 'v'), 88: ('vaddsd', 0, 'rm', 'v', 'v'), 89: ('vmulsd', 0, 'rm', 'v', 'v'), 90: ('vcvtsd2ss', 0, 'rm', 'v', 'v'), 92: ('vsubsd', 0, 'rm', 'v', 'v'), 93: ('vminsd', 0, 'rm', 'v', 'v'), 94: ('vdivsd', 0, 'rm', 'v', 'v'), 95: ('vmaxsd', 0, 'rm', 'v', 'v'), 112: ('vpshuflw', 1, 'rm', '', ''), 124: ('vhaddps', 0, 'rm', 'v', 'v'), 125: ('vhsubps', 0, 'rm', 'v', 'v'), 194: ('vcmpsd', 1, 'rm', 'v', 'v'), 208: ('vaddsubps', 0, 'rm', 'v', 'v'), 230: ('vcvtpd2dq', 0, 'rm', '', ''), 240: ('vlddqu', 0, 'm', '', '')}, (2, 0, 0, 0): {73: ('ldtilecfg', 0, 'm', '', ''), 80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v'), 94: {2: ('tdpbuud', 0, 'r', 'v', ''), 3: ('tdpbuud', 0, 'r', 'v', ''), 4: ('tdpbuud', 0, 'r', 'v', ''), 5: ('tdpbuud', 0, 'r', '', ''), 6: ('tdpbuud', 0, 'r', 'v', ''), 7: ('tdpbuud', 0, 'r', 'v', '')}, 242: ('andn', 0, 'rm', 'v', 'v'), 243: {1: ('blsr', 0, 'rm', 'v', 'v'), 2: ('blsmsk', 0, 'rm', 'v', 'v'), 3: ('blsi', 0, 'rm', 'v', 'v')}, 245: ('bzhi', 0, 'rm', 'v', 'v'), 247: ('bextr', 0, 'rm', 'v', 'v')}, (2, 0, 0, 1): {80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v')}, (2, 0, 1, 0): {242: ('andn', 0, 'rm', 'v', 'v'), 243: {1: ('blsr', 0, 'rm', 'v', 'v'), 2: ('blsmsk', 0, 'rm', 'v', 'v'), 3: ('blsi', 0, 'rm', 'v', 'v')}, 245: ('bzhi', 0, 'rm', 'v', 'v'), 247: ('bextr', 0, 'rm', 'v', 'v')}, (2, 1, 0, 0): {0: ('vpshufb', 0, 'rm', 'v', 'v'), 1: ('vphaddw', 0, 'rm', 'v', 'v'), 2: ('vphaddd', 0, 'rm', 'v', 'v'), 3: ('vphaddsw', 0, 'rm', 'v', 'v'), 4: ('vpmaddubsw', 0, 'rm', 'v', 'v'), 5: ('vphsubw', 0, 'rm', 'v', 'v'), 6: ('vphsubd', 0, 'rm', 'v', 'v'), 7: ('vphsubsw', 0, 'rm', 'v', 'v'), 8: ('vpsignb', 0, 'rm', 'v', 'v'), 9: ('vpsignw', 0, 'rm', 'v', 'v'), 10: ('vpsignd', 0, 'rm', 'v', 'v'), 11: ('vpmulhrsw', 0, 'rm', 'v', 'v'), 12: ('vpermilps', 0, 'rm', 'v', 'v'), 13: ('vpermilpd', 0, 'rm', 'v', 'v'), 14: ('vtestps', 0, 'rm', '', ''), 15: ('vtestpd', 0, 'rm', '', ''), 19: ('vcvtph2ps', 0, 'rm', '', ''), 23: ('vptest', 0, 'rm', '', ''), 24: ('vbroadcastss', 0, 'rm', '', ''), 28: ('vpabsb', 0, 'rm', '', ''), 29: ('vpabsw', 0, 'rm', '', ''), 30: ('vpabsd', 0, 'rm', '', ''), 32: ('vpmovsxbw', 0, 'rm', '', ''), 33: ('vpmovsxbd', 0, 'rm', '', ''), 34: ('vpmovsxbq', 0, 'rm', '', ''), 35: ('vpmovsxwd', 0, 'rm', '', ''), 36: ('vpmovsxwq', 0, 'rm', '', ''), 37: ('vpmovsxdq', 0, 'rm', '', ''), 40: ('vpmuldq', 0, 'rm', 'v', 'v'), 41: ('vpcmpeqq', 0, 'rm', 'v', 'v'), 42: ('vmovntdqa', 0, 'm', '', ''), 43: ('vpackusdw', 0, 'rm', 'v', 'v'), 44: ('vmaskmovps', 0, 'm', '', 'v'), 45: ('vmaskmovpd', 0, 'm', '', 'v'), 46: ('vmaskmovps', 0, 'm', '', 'v'), 47: ('vmaskmovpd', 0, 'm', '', 'v'), 48: ('vpmovzxbw', 0, 'rm', '', ''), 49: ('vpmovzxbd', 0, 'rm', '', ''), 50: ('vpmovzxbq', 0, 'rm', '', ''), 51: ('vpmovzxwd', 0, 'rm', '', ''), 52: ('vpmovzxwq', 0, 'rm', '', ''), 53: ('vpmovzxdq', 0, 'rm', '', ''), 55: ('vpcmpgtq', 0, 'rm', 'v', 'v'), 56: ('vpminsb', 0, 'rm', 'v', 'v'), 57: ('vpminsd', 0, 'rm', 'v', 'v'), 58: ('vpminuw', 0, 'rm', 'v', 'v'), 59: ('vpminud', 0, 'rm', 'v', 'v'), 60: ('vpmaxsb', 0, 'rm', 'v', 'v'), 61: ('vpmaxsd', 0, 'rm', 'v', 'v'), 62: ('vpmaxuw', 0, 'rm', 'v', 'v'), 63: ('vpmaxud', 0, 'rm', 'v', 'v'), 64: ('vpmulld', 0, 'rm', 'v', 'v'), 65: ('vphminposuw', 0, 'rm', '', ''), 69: ('vpsrlvd', 0, 'rm', 'v', 'v'), 70: ('vpsravd', 0, 'rm', 'v', 'v'), 71: ('vpsllvd', 0, 'rm', 'v', 'v'), 73: ('sttilecfg', 0, 'm', '', ''), 80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v'), 88: ('vpbroadcastd', 0, 'rm', '', ''), 89: ('vpbroadcastq', 0, 'rm', '', ''), 94: {2: ('tdpbusd', 0, 'r', 'v', ''), 3: ('tdpbusd', 0, 'r', 'v', ''), 4: ('tdpbusd', 0, 'r', 'v', ''), 5: ('tdpbusd', 0, 'r', '', ''), 6: ('tdpbusd', 0, 'r', 'v', ''), 7: ('tdpbusd', 0, 'r', 'v', '')}, 120: ('vpbroadcastb', 0, 'rm', '', ''), 121: ('vpbroadcastw', 0, 'rm', '', ''), 140: ('vpmaskmovd', 0, 'm', '', 'v'), 142: ('vpmaskmovd', 0, 'm', '', 'v'), 144: ('vpgatherdd', 0, 's', '', ''), 145: ('vpgatherqd', 0, 's', '', ''), 146: ('vgatherdps', 0, 's', '', ''), 147: ('vgatherqps', 0, 's', '', ''), 150: ('vfmaddsub132ps', 0, 'rm', 'v', 'v'), 151: ('vfmsubadd132ps', 0, 'rm', 'v', 'v'), 152: ('vfmadd132ps', 0, 'rm', 'v', 'v'), 153: ('vfmadd132ss', 0, 'rm', 'v', 'v'), 154: ('vfmsub132ps', 0, 'rm', 'v', 'v'), 155: ('vfmsub132ss', 0, 'rm', 'v', 'v'), 156: ('vfnmadd132ps', 0, 'rm', 'v', 'v'), 157: ('vfnmadd132ss', 0, 'rm', 'v', 'v'), 158: ('vfnmsub132ps', 0, 'rm', 'v', 'v'), 159: ('vfnmsub132ss', 0, 'rm', 'v', 'v'), 166: ('vfmaddsub213ps', 0, 'rm', 'v', 'v'), 167: ('vfmsubadd213ps', 0, 'rm', 'v', 'v'), 168: ('vfmadd213ps', 0, 'rm', 'v', 'v'), 169: ('vfmadd213ss', 0, 'rm', 'v', 'v'), 170: ('vfmsub213ps', 0, 'rm', 'v', 'v'), 171: ('vfmsub213ss', 0, 'rm', 'v', 'v'), 172: ('vfnmadd213ps', 0, 'rm', 'v', 'v'), 173: ('vfnmadd213ss', 0, 'rm', 'v', 'v'), 174: ('vfnmsub213ps', 0, 'rm', 'v', 'v'), 175: ('vfnmsub213ss', 0, 'rm', 'v', 'v'), 182: ('vfmaddsub231ps', 0, 'rm', 'v', 'v'), 183: ('vfmsubadd231ps', 0, 'rm', 'v', 'v'), 184: ('vfmadd231ps', 0, 'rm', 'v', 'v'), 185: ('vfmadd231ss', 0, 'rm', 'v', 'v'), 186: ('vfmsub231ps', 0, 'rm', 'v', 'v'), 187: ('vfmsub231ss', 0, 'rm', 'v', 'v'), 188: ('vfnmadd231ps', 0, 'rm', 'v', 'v'), 189: ('vfnmadd231ss', 0, 'rm', 'v', 'v'), 190: ('vfnmsub231ps', 0, 'rm', 'v', 'v'), 191: ('vfnmsub231ss', 0, 'rm', 'v', 'v'), 207: ('vgf2p8mulb', 0, 'rm', 'v', 'v'), 219: ('vaesimc', 0, 'rm', '', ''), 220: ('vaesenc', 0, 'rm', 'v', 'v'), 221: ('vaesenclast', 0, 'rm', 'v', 'v'), 222: ('vaesdec', 0, 'rm', 'v', 'v'), 223: ('vaesdeclast', 0, 'rm', 'v', 'v'), 247: ('shlx', 0, 'rm', 'v', 'v')}, (2, 1, 0, 1): {0: ('vpshufb', 0, 'rm', 'v', 'v'), 1: ('vphaddw', 0, 'rm', 'v', 'v'), 2: ('vphaddd', 0, 'rm', 'v', 'v'), 3: ('vphaddsw', 0, 'rm', 'v', 'v'), 4: ('vpmaddubsw', 0, 'rm', 'v', 'v'), 5: ('vphsubw', 0, 'rm', 'v', 'v'), 6: ('vphsubd', 0, 'rm', 'v', 'v'), 7: ('vphsubsw', 0, 'rm', 'v', 'v'), 8: ('vpsignb', 0, 'rm', 'v', 'v'), 9: ('vpsignw', 0, 'rm', 'v', 'v'), 10: ('vpsignd', 0, 'rm', 'v', 'v'), 11: ('vpmulhrsw', 0, 'rm', 'v', 'v'), 12: ('vpermilps', 0, 'rm', 'v', 'v'), 13: ('vpermilpd', 0, 'rm', 'v', 'v'), 14: ('vtestps', 0, 'rm', '', ''), 15: ('vtestpd', 0, 'rm', '', ''), 19: ('vcvtph2ps', 0, 'rm', '', ''), 22: ('vpermps', 0, 'rm', 'v', 'v'), 23: ('vptest', 0, 'rm', '', ''), 24: ('vbroadcastss', 0, 'rm', '', ''), 25: ('vbroadcastsd', 0, 'rm', '', ''), 26: ('vbroadcastf128', 0, 'm', '', ''), 28: ('vpabsb', 0, 'rm', '', ''), 29: ('vpabsw', 0, 'rm', '', ''), 30: ('vpabsd', 0, 'rm', '', ''), 32: ('vpmovsxbw', 0, 'rm', '', ''), 33: ('vpmovsxbd', 0, 'rm', '', ''), 34: ('vpmovsxbq', 0, 'rm', '', ''), 35: ('vpmovsxwd', 0, 'rm', '', ''), 36: ('vpmovsxwq', 0, 'rm', '', ''), 37: ('vpmovsxdq', 0, 'rm', '', ''), 40: ('vpmuldq', 0, 'rm', 'v', 'v'), 41: ('vpcmpeqq', 0, 'rm', 'v', 'v'), 42: ('vmovntdqa', 0, 'm', '', ''), 43: ('vpackusdw', 0, 'rm', 'v', 'v'), 44: ('vmaskmovps', 0, 'm', '', 'v'), 45: ('vmaskmovpd', 0, 'm', '', 'v'), 46: ('vmaskmovps', 0, 'm', '', 'v'), 47: ('vmaskmovpd', 0, 'm', '', 'v'), 48: ('vpmovzxbw', 0, 'rm', '', ''), 49: ('vpmovzxbd', 0, 'rm', '', ''), 50: ('vpmovzxbq', 0, 'rm', '', ''), 51: ('vpmovzxwd', 0, 'rm', '', ''), 52: ('vpmovzxwq', 0, 'rm', '', ''), 53: ('vpmovzxdq', 0, 'rm', '', ''), 54: ('vpermd', 0, 'rm', 'v', 'v'), 55: ('vpcmpgtq', 0, 'rm', 'v', 'v'), 56: ('vpminsb', 0, 'rm', 'v', 'v'), 57: ('vpminsd', 0, 'rm', 'v', 'v'), 58: ('vpminuw', 0, 'rm', 'v', 'v'), 59: ('vpminud', 0, 'rm', 'v', 'v'), 60: ('vpmaxsb', 0, 'rm', 'v', 'v'), 61: ('vpmaxsd', 0, 'rm', 'v', 'v'), 62: ('vpmaxuw', 0, 'rm', 'v', 'v'), 63: ('vpmaxud', 0, 'rm', 'v', 'v'), 64: ('vpmulld', 0, 'rm', 'v', 'v'), 69: ('vpsrlvd', 0, 'rm', 'v', 'v'), 70: ('vpsravd', 0, 'rm', 'v', 'v'), 71: ('vpsllvd', 0, 'rm', 'v', 'v'), 80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v'), 88: ('vpbroadcastd', 0, 'rm', '', ''), 89: ('vpbroadcastq', 0, 'rm', '', ''), 90: ('vbroadcasti128', 0, 'm', '', ''), 120: ('vpbroadcastb', 0, 'rm', '', ''), 121: ('vpbroadcastw', 0, 'rm', '', ''), 140: ('vpmaskmovd', 0, 'm', '', 'v'), 142: ('vpmaskmovd', 0, 'm', '', 'v'), 144: ('vpgatherdd', 0, 's', '', ''), 145: ('vpgatherqd', 0, 's', '', ''), 146: ('vgatherdps', 0, 's', '', ''), 147: ('vgatherqps', 0, 's', '', ''), 150: ('vfmaddsub132ps', 0, 'rm', 'v', 'v'), 151: ('vfmsubadd132ps', 0, 'rm', 'v', 'v'), 152: ('vfmadd132ps', 0, 'rm', 'v', 'v'), 153: ('vfmadd132ss', 0, 'rm', 'v', 'v'), 154: ('vfmsub132ps', 0, 'rm', 'v', 'v'), 155: ('vfmsub132ss', 0, 'rm', 'v', 'v'), 156: ('vfnmadd132ps', 0, 'rm', 'v', 'v'), 157: ('vfnmadd132ss', 0, 'rm', 'v', 'v'), 158: ('vfnmsub132ps', 0, 'rm', 'v', 'v'), 159: ('vfnmsub132ss', 0, 'rm', 'v', 'v'), 166: ('vfmaddsub213ps', 0, 'rm', 'v', 'v'), 167: ('vfmsubadd213ps', 0, 'rm', 'v', 'v'), 168: ('vfmadd213ps', 0, 'rm', 'v', 'v'), 169: ('vfmadd213ss', 0, 'rm', 'v', 'v'), 170: ('vfmsub213ps', 0, 'rm', 'v', 'v'), 171: ('vfmsub213ss', 0, 'rm', 'v', 'v'), 172: ('vfnmadd213ps', 0, 'rm', 'v', 'v'), 173: ('vfnmadd213ss', 0, 'rm', 'v', 'v'), 174: ('vfnmsub213ps', 0, 'rm', 'v', 'v'), 175: ('vfnmsub213ss', 0, 'rm', 'v', 'v'), 182: ('vfmaddsub231ps', 0, 'rm', 'v', 'v'), 183: ('vfmsubadd231ps', 0, 'rm', 'v', 'v'), 184: ('vfmadd231ps', 0, 'rm', 'v', 'v'), 185: ('vfmadd231ss', 0, 'rm', 'v', 'v'), 186: ('vfmsub231ps', 0, 'rm', 'v', 'v'), 187: ('vfmsub231ss', 0, 'rm', 'v', 'v'), 188: ('vfnmadd231ps', 0, 'rm', 'v', 'v'), 189: ('vfnmadd231ss', 0, 'rm', 'v', 'v'), 190: ('vfnmsub231ps', 0, 'rm', 'v', 'v'), 191: ('vfnmsub231ss', 0, 'rm', 'v', 'v'), 207: ('vgf2p8mulb', 0, 'rm', 'v', 'v'), 220: ('vaesenc', 0, 'rm', 'v', 'v'), 221: ('vaesenclast', 0, 'rm', 'v', 'v'), 222: ('vaesdec', 0, 'rm', 'v', 'v'), 223: ('vaesdeclast', 0, 'rm', 'v', 'v')}, (2, 1, 1, 0): {0: ('vpshufb', 0, 'rm', 'v', 'v'), 1: ('vphaddw', 0, 'rm', 'v', 'v'), 2: ('vphaddd', 0, 'rm', 'v', 'v'), 3: ('vphaddsw', 0, 'rm', 'v', 'v'), 4: ('vpmaddubsw', 0, 'rm', 'v', 'v'), 5: ('vphsubw', 0, 'rm', 'v', 'v'), 6: ('vphsubd', 0, 'rm', 'v', 'v'), 7: ('vphsubsw', 0, 'rm', 'v', 'v'), 8: ('vpsignb', 0, 'rm', 'v', 'v'), 9: ('vpsignw', 0, 'rm', 'v', 'v'), 10: ('vpsignd', 0, 'rm', 'v', 'v'), 11: ('vpmulhrsw', 0, 'rm', 'v', 'v'), 23: ('vptest', 0, 'rm', '', ''), 28: ('vpabsb', 0, 'rm', '', ''), 29: ('vpabsw', 0, 'rm', '', ''), 30: ('vpabsd', 0, 'rm', '', ''), 32: ('vpmovsxbw', 0, 'rm', '', ''), 33: ('vpmovsxbd', 0, 'rm', '', ''), 34: ('vpmovsxbq', 0, 'rm', '', ''), 35: ('vpmovsxwd', 0, 'rm', '', ''), 36: ('vpmovsxwq', 0, 'rm', '', ''), 37: ('vpmovsxdq', 0, 'rm', '', ''), 40: ('vpmuldq', 0, 'rm', 'v', 'v'), 41: ('vpcmpeqq', 0, 'rm', 'v', 'v'), 42: ('vmovntdqa', 0, 'm', '', ''), 43: ('vpackusdw', 0, 'rm', 'v', 'v'), 48: ('vpmovzxbw', 0, 'rm', '', ''), 49: ('vpmovzxbd', 0, 'rm', '', ''), 50: ('vpmovzxbq', 0, 'rm', '', ''), 51: ('vpmovzxwd', 0, 'rm', '', ''), 52: ('vpmovzxwq', 0, 'rm', '', ''), 53: ('vpmovzxdq', 0, 'rm', '', ''), 55: ('vpcmpgtq', 0, 'rm', 'v', 'v'), 56: ('vpminsb', 0, 'rm', 'v', 'v'), 57: ('vpminsd', 0, 'rm', 'v', 'v'), 58: ('vpminuw', 0, 'rm', 'v', 'v'), 59: ('vpminud', 0, 'rm', 'v', 'v'), 60: ('vpmaxsb', 0, 'rm', 'v', 'v'), 61: ('vpmaxsd', 0, 'rm', 'v', 'v'), 62: ('vpmaxuw', 0, 'rm', 'v', 'v'), 63: ('vpmaxud', 0, 'rm', 'v', 'v'), 64: ('vpmulld', 0, 'rm', 'v', 'v'), 65: ('vphminposuw', 0, 'rm', '', ''), 69: ('vpsrlvq', 0, 'rm', 'v', 'v'), 71: ('vpsllvq', 0, 'rm', 'v', 'v'), 140: ('vpmaskmovq', 0, 'm', '', 'v'), 142: ('vpmaskmovq', 0, 'm', '', 'v'), 144: ('vpgatherdq', 0, 's', '', ''), 145: ('vpgatherqq', 0, 's', '', ''), 146: ('vgatherdpd', 0, 's', '', ''), 147: ('vgatherqpd', 0, 's', '', ''), 150: ('vfmaddsub132pd', 0, 'rm', 'v', 'v'), 151: ('vfmsubadd132pd', 0, 'rm', 'v', 'v'), 152: ('vfmadd132pd', 0, 'rm', 'v', 'v'), 153: ('vfmadd132sd', 0, 'rm', 'v', 'v'), 154: ('vfmsub132pd', 0, 'rm', 'v', 'v'), 155: ('vfmsub132sd', 0, 'rm', 'v', 'v'), 156: ('vfnmadd132pd', 0, 'rm', 'v', 'v'), 157: ('vfnmadd132sd', 0, 'rm', 'v', 'v'), 158: ('vfnmsub132pd', 0, 'rm', 'v', 'v'), 159: ('vfnmsub132sd', 0, 'rm', 'v', 'v'), 166: ('vfmaddsub213pd', 0, 'rm', 'v', 'v'), 167: ('vfmsubadd213pd', 0, 'rm', 'v', 'v'), 168: ('vfmadd213pd', 0, 'rm', 'v', 'v'), 169: ('vfmadd213sd', 0, 'rm', 'v', 'v'), 170: ('vfmsub213pd', 0, 'rm', 'v', 'v'), 171: ('vfmsub213sd', 0, 'rm', 'v', 'v'), 172: ('vfnmadd213pd', 0, 'rm', 'v', 'v'), 173: ('vfnmadd213sd', 0, 'rm', 'v', 'v'), 174: ('vfnmsub213pd', 0, 'rm', 'v', 'v'), 175: ('vfnmsub213sd', 0, 'rm', 'v', 'v'), 182: ('vfmaddsub231pd', 0, 'rm', 'v', 'v'), 183: ('vfmsubadd231pd', 0, 'rm', 'v', 'v'), 184: ('vfmadd231pd', 0, 'rm', 'v', 'v'), 185: ('vfmadd231sd', 0, 'rm', 'v', 'v'), 186: ('vfmsub231pd', 0, 'rm', 'v', 'v'), 187: ('vfmsub231sd', 0, 'rm', 'v', 'v'), 188: ('vfnmadd231pd', 0, 'rm', 'v', 'v'), 189: ('vfnmadd231sd', 0, 'rm', 'v', 'v'), 190: ('vfnmsub231pd', 0, 'rm', 'v', 'v'), 191: ('vfnmsub231sd', 0, 'rm', 'v', 'v'), 219: ('vaesimc', 0, 'rm', '', ''), 220: ('vaesenc', 0, 'rm', 'v', 'v'), 221: ('vaesenclast', 0, 'rm', 'v', 'v'), 222: ('vaesdec', 0, 'rm', 'v', 'v'), 223: ('vaesdeclast', 0, 'rm', 'v', 'v'), 247: ('shlx', 0, 'rm', 'v', 'v')}, (2, 1, 1, 1): {0: ('vpshufb', 0, 'rm', 'v', 'v'), 1: ('vphaddw', 0, 'rm', 'v', 'v'), 2: ('vphaddd', 0, 'rm', 'v', 'v'), 3: ('vphaddsw', 0, 'rm', 'v', 'v'), 4: ('vpmaddubsw', 0, 'rm', 'v', 'v'), 5: ('vphsubw', 0, 'rm', 'v', 'v'), 6: ('vphsubd', 0, 'rm', 'v', 'v'), 7: ('vphsubsw', 0, 'rm', 'v', 'v'), 8: ('vpsignb', 0, 'rm', 'v', 'v'), 9: ('vpsignw', 0, 'rm', 'v', 'v'), 10: ('vpsignd', 0, 'rm', 'v', 'v'), 11: ('vpmulhrsw', 0, 'rm', 'v', 'v'), 23: ('vptest', 0, 'rm', '', ''), 28: ('vpabsb', 0, 'rm', '', ''), 29: ('vpabsw', 0, 'rm', '', ''), 30: ('vpabsd', 0, 'rm', '', ''), 32: ('vpmovsxbw', 0, 'rm', '', ''), 33: ('vpmovsxbd', 0, 'rm', '', ''), 34: ('vpmovsxbq', 0, 'rm', '', ''), 35: ('vpmovsxwd', 0, 'rm', '', ''), 36: ('vpmovsxwq', 0, 'rm', '', ''), 37: ('vpmovsxdq', 0, 'rm', '', ''), 40: ('vpmuldq', 0, 'rm', 'v', 'v'), 41: ('vpcmpeqq', 0, 'rm', 'v', 'v'), 42: ('vmovntdqa', 0, 'm', '', ''), 43: ('vpackusdw', 0, 'rm', 'v', 'v'), 48: ('vpmovzxbw', 0, 'rm', '', ''), 49: ('vpmovzxbd', 0, 'rm', '', ''), 50: ('vpmovzxbq', 0, 'rm', '', ''), 51: ('vpmovzxwd', 0, 'rm', '', ''), 52: ('vpmovzxwq', 0, 'rm', '', ''), 53: ('vpmovzxdq', 0, 'rm', '', ''), 55: ('vpcmpgtq', 0, 'rm', 'v', 'v'), 56: ('vpminsb', 0, 'rm', 'v', 'v'), 57: ('vpminsd', 0, 'rm', 'v', 'v'), 58: ('vpminuw', 0, 'rm', 'v', 'v'), 59: ('vpminud', 0, 'rm', 'v', 'v'), 60: ('vpmaxsb', 0, 'rm', 'v', 'v'), 61: ('vpmaxsd', 0, 'rm', 'v', 'v'), 62: ('vpmaxuw', 0, 'rm', 'v', 'v'), 63: ('vpmaxud', 0, 'rm', 'v', 'v'), 64: ('vpmulld', 0, 'rm', 'v', 'v'), 69: ('vpsrlvq', 0, 'rm', 'v', 'v'), 71: ('vpsllvq', 0, 'rm', 'v', 'v'), 140: ('vpmaskmovq', 0, 'm', '', 'v'), 142: ('vpmaskmovq', 0, 'm', '', 'v'), 144: ('vpgatherdq', 0, 's', '', ''), 145: ('vpgatherqq', 0, 's', '', ''), 146: ('vgatherdpd', 0, 's', '', ''), 147: ('vgatherqpd', 0, 's', '', ''), 150: ('vfmaddsub132pd', 0, 'rm', 'v', 'v'), 151: ('vfmsubadd132pd', 0, 'rm', 'v', 'v'), 152: ('vfmadd132pd', 0, 'rm', 'v', 'v'), 153: ('vfmadd132sd', 0, 'rm', 'v', 'v'), 154: ('vfmsub132pd', 0, 'rm', 'v', 'v'), 155: ('vfmsub132sd', 0, 'rm', 'v', 'v'), 156: ('vfnmadd132pd', 0, 'rm', 'v', 'v'), 157: ('vfnmadd132sd', 0, 'rm', 'v', 'v'), 158: ('vfnmsub132pd', 0, 'rm', 'v', 'v'), 159: ('vfnmsub132sd', 0, 'rm', 'v', 'v'), 166: ('vfmaddsub213pd', 0, 'rm', 'v', 'v'), 167: ('vfmsubadd213pd', 0, 'rm', 'v', 'v'), 168: ('vfmadd213pd', 0, 'rm', 'v', 'v'), 169: ('vfmadd213sd', 0, 'rm', 'v', 'v'), 170: ('vfmsub213pd', 0, 'rm', 'v', 'v'), 171: ('vfmsub213sd', 0, 'rm', 'v', 'v'), 172: ('vfnmadd213pd', 0, 'rm', 'v', 'v'), 173: ('vfnmadd213sd', 0, 'rm', 'v', 'v'), 174: ('vfnmsub213pd', 0, 'rm', 'v', 'v'), 175: ('vfnmsub213sd', 0, 'rm', 'v', 'v'), 182: ('vfmaddsub231pd', 0, 'rm', 'v', 'v'), 183: ('vfmsubadd231pd', 0, 'rm', 'v', 'v'), 184: ('vfmadd231pd', 0, 'rm', 'v', 'v'), 185: ('vfmadd231sd', 0, 'rm', 'v', 'v'), 186: ('vfmsub231pd', 0, 'rm', 'v', 'v'), 187: ('vfmsub231sd', 0, 'rm', 'v', 'v'), 188: ('vfnmadd231pd', 0, 'rm', 'v', 'v'), 189: ('vfnmadd231sd', 0, 'rm', 'v', 'v'), 190: ('vfnmsub231pd', 0, 'rm', 'v', 'v'), 191: ('vfnmsub231sd', 0, 'rm', 'v', 'v'), 220: ('vaesenc', 0, 'rm', 'v', 'v'), 221: ('vaesenclast', 0, 'rm', 'v', 'v'), 222: ('vaesdec', 0, 'rm', 'v', 'v'), 223: ('vaesdeclast', 0, 'rm', 'v', 'v')}, (2, 2, 0, 0): {80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v'), 92: {2: ('tdpbf16ps', 0, 'r', 'v', ''), 3: ('tdpbf16ps', 0, 'r', 'v', ''), 4: ('tdpbf16ps', 0, 'r', 'v', ''), 5: ('tdpbf16ps', 0, 'r', '', ''), 6: ('tdpbf16ps', 0, 'r', 'v', ''), 7: ('tdpbf16ps', 0, 'r', 'v', '')}, 94: {2: ('tdpbsud', 0, 'r', 'v', ''), 3: ('tdpbsud', 0, 'r', 'v', ''), 4: ('tdpbsud', 0, 'r', 'v', ''), 5: ('tdpbsud', 0, 'r', '', ''), 6: ('tdpbsud', 0, 'r', 'v', ''), 7: ('tdpbsud', 0, 'r', 'v', '')}, 245: ('pext', 0, 'rm', 'v', 'v'), 247: ('sarx', 0, 'rm', 'v', 'v')}, (2, 2, 0, 1): {80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v')}, (2, 2, 1, 0): {245: ('pext', 0, 'rm', 'v', 'v'), 247: ('sarx', 0, 'rm', 'v', 'v')}, (2, 3, 0, 0): {73: ('tilezero', 0, 'r', '', ''), 80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v'), 94: {2: ('tdpbssd', 0, 'r', 'v', ''), 3: ('tdpbssd', 0, 'r', 'v', ''), 4: ('tdpbssd', 0, 'r', 'v', ''), 5: ('tdpbssd', 0, 'r', '', ''), 6: ('tdpbssd', 0, 'r', 'v', ''), 7: ('tdpbssd', 0, 'r', 'v', '')}, 245: ('pdep', 0, 'rm', 'v', 'v'), 246: ('mulx', 0, 'rm', 'v', 'v'), 247: ('shrx', 0, 'rm', 'v', 'v')}, (2, 3, 0, 1): {80: ('vpdpbusd', 0, 'rm', 'v', 'v'), 81: ('vpdpbusds', 0, 'rm', 'v', 'v'), 82: ('vpdpwssd', 0, 'rm', 'v', 'v'), 83: ('vpdpwssds', 0, 'rm', 'v', 'v')}, (2, 3, 1, 0): {245: ('pdep', 0, 'rm', 'v', 'v'), 246: ('mulx', 0, 'rm', 'v', 'v'), 247: ('shrx', 0, 'rm', 'v', 'v')}, (3, 1, 0, 0): {2: ('vpblendd', 1, 'rm', 'v', 'v'), 4: ('vpermilps', 1, 'rm', '', ''), 5: ('vpermilpd', 1, 'rm', '', ''), 8: ('vroundps', 1, 'rm', '', ''), 9: ('vroundpd', 1, 'rm', '', ''), 10: ('vroundss', 1, 'rm', 'v', 'v'), 11: ('vroundsd', 1, 'rm', 'v', 'v'), 12: ('vblendps', 1, 'rm', 'v', 'v'), 13: ('vblendpd', 1, 'rm', 'v', 'v'), 14: ('vpblendw', 1, 'rm', 'v', 'v'), 15: ('vpalignr', 1, 'rm', 'v', 'v'), 20: ('vpextrb', 1, 'rm', '', ''), 21: ('vpextrw', 1, 'rm', '', ''), 22: ('vpextrd', 1, 'rm', '', ''), 23: ('vextractps', 1, 'rm', '', ''), 29: ('vcvtps2ph', 1, 'rm', '', ''), 32: ('vpinsrb', 1, 'rm', 'v', 'v'), 33: ('vinsertps', 1, 'rm', 'v', 'v'), 34: ('vpinsrd', 1, 'rm', 'v', 'v'), 48: ('kshiftrb', 1, 'r', '', ''), 49: ('kshiftrd', 1, 'r', '', ''), 50: ('kshiftlb', 1, 'r', '', ''), 51: ('kshiftld', 1, 'r', '', ''), 64: ('vdpps', 1, 'rm', 'v', 'v'), 65: ('vdppd', 1, 'rm', 'v', 'v'), 66: ('vmpsadbw', 1, 'rm', 'v', 'v'), 68: ('vpclmulqdq', 1, 'rm', 'v', 'v'), 72: ('vpermil2ps', 1, 'rm', 'v', 'v'), 73: ('vpermil2pd', 1, 'rm', 'v', 'v'), 74: ('vblendvps', 1, 'rm', 'v', 'v'), 75: ('vblendvpd', 1, 'rm', 'v', 'v'), 76: ('vpblendvb', 1, 'rm', 'v', 'v'), 92: ('vfmaddsubps', 1, 'rm', 'v', 'v'), 93: ('vfmaddsubpd', 1, 'rm', 'v', 'v'), 94: ('vfmsubaddps', 1, 'rm', 'v', 'v'), 95: ('vfmsubaddpd', 1, 'rm', 'v', 'v'), 96: ('vpcmpestrm', 1, 'rm', '', ''), 97: ('vpcmpestri', 1, 'rm', '', ''), 98: ('vpcmpistrm', 1, 'rm', '', ''), 99: ('vpcmpistri', 1, 'rm', '', ''), 104: ('vfmaddps', 1, 'rm', 'v', 'v'), 105: ('vfmaddpd', 1, 'rm', 'v', 'v'), 106: ('vfmaddss', 1, 'rm', 'v', 'v'), 107: ('vfmaddsd', 1, 'rm', 'v', 'v'), 108: ('vfmsubps', 1, 'rm', 'v', 'v'), 109: ('vfmsubpd', 1, 'rm', 'v', 'v'), 110: ('vfmsubss', 1, 'rm', 'v', 'v'), 111: ('vfmsubsd', 1, 'rm', 'v', 'v'), 120: ('vfnmaddps', 1, 'rm', 'v', 'v'), 121: ('vfnmaddpd', 1, 'rm', 'v', 'v'), 122: ('vfnmaddss', 1, 'rm', 'v', 'v'), 123: ('vfnmaddsd', 1, 'rm', 'v', 'v'), 124: ('vfnmsubps', 1, 'rm', 'v', 'v'), 125: ('vfnmsubpd', 1, 'rm', 'v', 'v'), 126: ('vfnmsubss', 1, 'rm', 'v', 'v'), 127: ('vfnmsubsd', 1, 'rm', 'v', 'v'), 223: ('vaeskeygenassist', 1, 'rm', '', '')}, (3, 1, 0, 1): {2: ('vpblendd', 1, 'rm', 'v', 'v'), 4: ('vpermilps', 1, 'rm', '', ''), 5: ('vpermilpd', 1, 'rm', '', ''), 6: ('vperm2f128', 1, 'rm', 'v', 'v'), 8: ('vroundps', 1, 'rm', '', ''), 9: ('vroundpd', 1, 'rm', '', ''), 10: ('vroundss', 1, 'rm', 'v', 'v'), 11: ('vroundsd', 1, 'rm', 'v', 'v'), 12: ('vblendps', 1, 'rm', 'v', 'v'), 13: ('vblendpd', 1, 'rm', 'v', 'v'), 14: ('vpblendw', 1, 'rm', 'v', 'v'), 15: ('vpalignr', 1, 'rm', 'v', 'v'), 24: ('vinsertf128', 1, 'rm', 'v', 'v'), 25: ('vextractf128', 1, 'rm', '', ''), 29: ('vcvtps2ph', 1, 'rm', '', ''), 56: ('vinserti128', 1, 'rm', 'v', 'v'), 57: ('vextracti128', 1, 'rm', '', ''), 64: ('vdpps', 1, 'rm', 'v', 'v'), 66: ('vmpsadbw', 1, 'rm', 'v', 'v'), 68: ('vpclmulqdq', 1, 'rm', 'v', 'v'), 70: ('vperm2i128', 1, 'rm', 'v', 'v'), 72: ('vpermil2ps', 1, 'rm', 'v', 'v'), 73: ('vpermil2pd', 1, 'rm', 'v', 'v'), 74: ('vblendvps', 1, 'rm', 'v', 'v'), 75: ('vblendvpd', 1, 'rm', 'v', 'v'), 76: ('vpblendvb', 1, 'rm', 'v', 'v'), 92: ('vfmaddsubps', 1, 'rm', 'v', 'v'), 93: ('vfmaddsubpd', 1, 'rm', 'v', 'v'), 94: ('vfmsubaddps', 1, 'rm', 'v', 'v'), 95: ('vfmsubaddpd', 1, 'rm', 'v', 'v'), 104: ('vfmaddps', 1, 'rm', 'v', 'v'), 105: ('vfmaddpd', 1, 'rm', 'v', 'v'), 106: ('vfmaddss', 1, 'rm', 'v', 'v'), 107: ('vfmaddsd', 1, 'rm', 'v', 'v'), 108: ('vfmsubps', 1, 'rm', 'v', 'v'), 109: ('vfmsubpd', 1, 'rm', 'v', 'v'), 110: ('vfmsubss', 1, 'rm', 'v', 'v'), 111: ('vfmsubsd', 1, 'rm', 'v', 'v'), 120: ('vfnmaddps', 1, 'rm', 'v', 'v'), 121: ('vfnmaddpd', 1, 'rm', 'v', 'v'), 122: ('vfnmaddss', 1, 'rm', 'v', 'v'), 123: ('vfnmaddsd', 1, 'rm', 'v', 'v'), 124: ('vfnmsubps', 1, 'rm', 'v', 'v'), 125: ('vfnmsubpd', 1, 'rm', 'v', 'v'), 126: ('vfnmsubss', 1, 'rm', 'v', 'v'), 127: ('vfnmsubsd', 1, 'rm', 'v', 'v')}, (3, 1, 1, 0): {8: ('vroundps', 1, 'rm', '', ''), 9: ('vroundpd', 1, 'rm', '', ''), 10: ('vroundss', 1, 'rm', 'v', 'v'), 11: ('vroundsd', 1, 'rm', 'v', 'v'), 12: ('vblendps', 1, 'rm', 'v', 'v'), 13: ('vblendpd', 1, 'rm', 'v', 'v'), 14: ('vpblendw', 1, 'rm', 'v', 'v'), 15: ('vpalignr', 1, 'rm', 'v', 'v'), 20: ('vpextrb', 1, 'rm', '', ''), 21: ('vpextrw', 1, 'rm', '', ''), 22: ('vpextrq', 1, 'rm', '', ''), 23: ('vextractps', 1, 'rm', '', ''), 32: ('vpinsrb', 1, 'rm', 'v', 'v'), 33: ('vinsertps', 1, 'rm', 'v', 'v'), 34: ('vpinsrq', 1, 'rm', 'v', 'v'), 48: ('kshiftrw', 1, 'r', '', ''), 49: ('kshiftrq', 1, 'r', '', ''), 50: ('kshiftlw', 1, 'r', '', ''), 51: ('kshiftlq', 1, 'r', '', ''), 64: ('vdpps', 1, 'rm', 'v', 'v'), 65: ('vdppd', 1, 'rm', 'v', 'v'), 66: ('vmpsadbw', 1, 'rm', 'v', 'v'), 68: ('vpclmulqdq', 1, 'rm', 'v', 'v'), 72: ('vpermil2ps', 1, 'rm', 'v', 'v'), 73: ('vpermil2pd', 1, 'rm', 'v', 'v'), 92: ('vfmaddsubps', 1, 'rm', 'v', 'v'), 93: ('vfmaddsubpd', 1, 'rm', 'v', 'v'), 94: ('vfmsubaddps', 1, 'rm', 'v', 'v'), 95: ('vfmsubaddpd', 1, 'rm', 'v', 'v'), 96: ('vpcmpestrmq', 1, 'rm', '', ''), 97: ('vpcmpestriq', 1, 'rm', '', ''), 98: ('vpcmpistrm', 1, 'rm', '', ''), 99: ('vpcmpistri', 1, 'rm', '', ''), 104: ('vfmaddps', 1, 'rm', 'v', 'v'), 105: ('vfmaddpd', 1, 'rm', 'v', 'v'), 106: ('vfmaddss', 1, 'rm', 'v', 'v'), 107: ('vfmaddsd', 1, 'rm', 'v', 'v'), 108: ('vfmsubps', 1, 'rm', 'v', 'v'), 109: ('vfmsubpd', 1, 'rm', 'v', 'v'), 110: ('vfmsubss', 1, 'rm', 'v', 'v'), 111: ('vfmsubsd', 1, 'rm', 'v', 'v'), 120: ('vfnmaddps', 1, 'rm', 'v', 'v'), 121: ('vfnmaddpd', 1, 'rm', 'v', 'v'), 122: ('vfnmaddss', 1, 'rm', 'v', 'v'), 123: ('vfnmaddsd', 1, 'rm', 'v', 'v'), 124: ('vfnmsubps', 1, 'rm', 'v', 'v'), 125: ('vfnmsubpd', 1, 'rm', 'v', 'v'), 126: ('vfnmsubss', 1, 'rm', 'v', 'v'), 127: ('vfnmsubsd', 1, 'rm', 'v', 'v'), 206: ('vgf2p8affineqb', 1, 'rm', 'v', 'v'), 207: ('vgf2p8affineinvqb', 1, 'rm', 'v', 'v'), 223: ('vaeskeygenassist', 1, 'rm', '', '')}, (3, 1, 1, 1): {0: ('vpermq', 1, 'rm', '', ''), 1: ('vpermpd', 1, 'rm', '', ''), 8: ('vroundps', 1, 'rm', '', ''), 9: ('vroundpd', 1, 'rm', '', ''), 10: ('vroundss', 1, 'rm', 'v', 'v'), 11: ('vroundsd', 1, 'rm', 'v', 'v'), 12: ('vblendps', 1, 'rm', 'v', 'v'), 13: ('vblendpd', 1, 'rm', 'v', 'v'), 14: ('vpblendw', 1, 'rm', 'v', 'v'), 15: ('vpalignr', 1, 'rm', 'v', 'v'), 64: ('vdpps', 1, 'rm', 'v', 'v'), 66: ('vmpsadbw', 1, 'rm', 'v', 'v'), 68: ('vpclmulqdq', 1, 'rm', 'v', 'v'), 72: ('vpermil2ps', 1, 'rm', 'v', 'v'), 73: ('vpermil2pd', 1, 'rm', 'v', 'v'), 92: ('vfmaddsubps', 1, 'rm', 'v', 'v'), 93: ('vfmaddsubpd', 1, 'rm', 'v', 'v'), 94: ('vfmsubaddps', 1, 'rm', 'v', 'v'), 95: ('vfmsubaddpd', 1, 'rm', 'v', 'v'), 104: ('vfmaddps', 1, 'rm', 'v', 'v'), 105: ('vfmaddpd', 1, 'rm', 'v', 'v'), 106: ('vfmaddss', 1, 'rm', 'v', 'v'), 107: ('vfmaddsd', 1, 'rm', 'v', 'v'), 108: ('vfmsubps', 1, 'rm', 'v', 'v'), 109: ('vfmsubpd', 1, 'rm', 'v', 'v'), 110: ('vfmsubss', 1, 'rm', 'v', 'v'), 111: ('vfmsubsd', 1, 'rm', 'v', 'v'), 120: ('vfnmaddps', 1, 'rm', 'v', 'v'), 121: ('vfnmaddpd', 1, 'rm', 'v', 'v'), 122: ('vfnmaddss', 1, 'rm', 'v', 'v'), 123: ('vfnmaddsd', 1, 'rm', 'v', 'v'), 124: ('vfnmsubps', 1, 'rm', 'v', 'v'), 125: ('vfnmsubpd', 1, 'rm', 'v', 'v'), 126: ('vfnmsubss', 1, 'rm', 'v', 'v'), 127: ('vfnmsubsd', 1, 'rm', 'v', 'v'), 206: ('vgf2p8affineqb', 1, 'rm', 'v', 'v'), 207: ('vgf2p8affineinvqb', 1, 'rm', 'v', 'v')}, (3, 3, 0, 0): {240: ('rorx', 1, 'rm', '', '')}, (3, 3, 1, 0): {240: ('rorx', 1, 'rm', '', '')}}

XOP_EXACT = \
{(8, 0, 0, 0): {133: ('vpmacssww', 1, 'rm', 'v', 'v'), 134: ('vpmacsswd', 1, 'rm', 'v', 'v'), 135: ('vpmacssdql', 1, 'rm', 'v', 'v'), 142: ('vpmacssdd', 1, 'rm', 'v', 'v'), 143: ('vpmacssdqh', 1, 'rm', 'v', 'v'), 149: ('vpmacsww', 1, 'rm', 'v', 'v'), 150: ('vpmacswd', 1, 'rm', 'v', 'v'), 151: ('vpmacsdql', 1, 'rm', 'v', 'v'), 158: ('vpmacsdd', 1, 'rm', 'v', 'v'), 159: ('vpmacsdqh', 1, 'rm', 'v', 'v'), 162: ('vpcmov', 1, 'rm', 'v', 'v'), 163: ('vpperm', 1, 'rm', 'v', 'v'), 166: ('vpmadcsswd', 1, 'rm', 'v', 'v'), 182: ('vpmadcswd', 1, 'rm', 'v', 'v'), 192: ('vprotb', 1, 'rm', '', ''), 193: ('vprotw', 1, 'rm', '', ''), 194: ('vprotd', 1, 'rm', '', ''), 195: ('vprotq', 1, 'rm', '', ''), 204: ('vpcomb', 1, 'rm', 'v', 'v'), 205: ('vpcomw', 1, 'rm', 'v', 'v'), 206: ('vpcomd', 1, 'rm', 'v', 'v'), 207: ('vpcomq', 1, 'rm', 'v', 'v'), 236: ('vpcomub', 1, 'rm', 'v', 'v'), 237: ('vpcomuw', 1, 'rm', 'v', 'v'), 238: ('vpcomud', 1, 'rm', 'v', 'v'), 239: ('vpcomuq', 1, 'rm', 'v', 'v')}, (8, 0, 0, 1): {162: ('vpcmov', 1, 'rm', 'v', 'v')}, (8, 0, 1, 0): {162: ('vpcmov', 1, 'rm', 'v', 'v'), 163: ('vpperm', 1, 'rm', 'v', 'v')}, (8, 0, 1, 1): {162: ('vpcmov', 1, 'rm', 'v', 'v')}, (9, 0, 0, 0): {1: {1: ('blcfill', 0, 'rm', 'v', 'v'), 2: ('blsfill', 0, 'rm', 'v', 'v'), 3: ('blcs', 0, 'rm', 'v', 'v'), 4: ('tzmsk', 0, 'rm', 'v', 'v'), 5: ('blcic', 0, 'rm', 'v', 'v'), 6: ('blsic', 0, 'rm', 'v', 'v'), 7: ('t1mskc', 0, 'rm', 'v', 'v')}, 2: {1: ('blcmsk', 0, 'rm', 'v', 'v'), 6: ('blci', 0, 'rm', 'v', 'v')}, 18: {0: ('llwpcb', 0, 'r', '', ''), 1: ('slwpcb', 0, 'r', '', '')}, 128: ('vfrczps', 0, 'rm', '', ''), 129: ('vfrczpd', 0, 'rm', '', ''), 130: ('vfrczss', 0, 'rm', '', ''), 131: ('vfrczsd', 0, 'rm', '', ''), 144: ('vprotb', 0, 'rm', 'v', 'v'), 145: ('vprotw', 0, 'rm', 'v', 'v'), 146: ('vprotd', 0, 'rm', 'v', 'v'), 147: ('vprotq', 0, 'rm', 'v', 'v'), 148: ('vpshlb', 0, 'rm', 'v', 'v'), 149: ('vpshlw', 0, 'rm', 'v', 'v'), 150: ('vpshld', 0, 'rm', 'v', 'v'), 151: ('vpshlq', 0, 'rm', 'v', 'v'), 152: ('vpshab', 0, 'rm', 'v', 'v'), 153: ('vpshaw', 0, 'rm', 'v', 'v'), 154: ('vpshad', 0, 'rm', 'v', 'v'), 155: ('vpshaq', 0, 'rm', 'v', 'v'), 193: ('vphaddbw', 0, 'rm', '', ''), 194: ('vphaddbd', 0, 'rm', '', ''), 195: ('vphaddbq', 0, 'rm', '', ''), 198: ('vphaddwd', 0, 'rm', '', ''), 199: ('vphaddwq', 0, 'rm', '', ''), 203: ('vphadddq', 0, 'rm', '', ''), 209: ('vphaddubw', 0, 'rm', '', ''), 210: ('vphaddubd', 0, 'rm', '', ''), 211: ('vphaddubq', 0, 'rm', '', ''), 214: ('vphadduwd', 0, 'rm', '', ''), 215: ('vphadduwq', 0, 'rm', '', ''), 219: ('vphaddudq', 0, 'rm', '', ''), 225: ('vphsubbw', 0, 'rm', '', ''), 226: ('vphsubwd', 0, 'rm', '', ''), 227: ('vphsubdq', 0, 'rm', '', '')}, (9, 0, 0, 1): {128: ('vfrczps', 0, 'rm', '', ''), 129: ('vfrczpd', 0, 'rm', '', '')}, (9, 0, 1, 0): {1: {1: ('blcfill', 0, 'rm', 'v', 'v'), 2: ('blsfill', 0, 'rm', 'v', 'v'), 3: ('blcs', 0, 'rm', 'v', 'v'), 4: ('tzmsk', 0, 'rm', 'v', 'v'), 5: ('blcic', 0, 'rm', 'v', 'v'), 6: ('blsic', 0, 'rm', 'v', 'v'), 7: ('t1mskc', 0, 'rm', 'v', 'v')}, 2: {1: ('blcmsk', 0, 'rm', 'v', 'v'), 6: ('blci', 0, 'rm', 'v', 'v')}, 18: {0: ('llwpcb', 0, 'r', '', ''), 1: ('slwpcb', 0, 'r', '', '')}, 144: ('vprotb', 0, 'rm', 'v', 'v'), 145: ('vprotw', 0, 'rm', 'v', 'v'), 146: ('vprotd', 0, 'rm', 'v', 'v'), 147: ('vprotq', 0, 'rm', 'v', 'v'), 148: ('vpshlb', 0, 'rm', 'v', 'v'), 149: ('vpshlw', 0, 'rm', 'v', 'v'), 150: ('vpshld', 0, 'rm', 'v', 'v'), 151: ('vpshlq', 0, 'rm', 'v', 'v'), 152: ('vpshab', 0, 'rm', 'v', 'v'), 153: ('vpshaw', 0, 'rm', 'v', 'v'), 154: ('vpshad', 0, 'rm', 'v', 'v'), 155: ('vpshaq', 0, 'rm', 'v', 'v')}, (10, 0, 0, 0): {16: ('bextr', 4, 'rm', '', ''), 18: {0: ('lwpins', 4, 'rm', 'v', 'v'), 1: ('lwpval', 4, 'rm', 'v', 'v')}}, (10, 0, 0, 1): {16: ('bextr', 4, 'rm', '', '')}, (10, 0, 1, 0): {16: ('bextr', 4, 'rm', '', ''), 18: {0: ('lwpins', 4, 'rm', 'v', 'v'), 1: ('lwpval', 4, 'rm', 'v', 'v')}}, (10, 0, 1, 1): {16: ('bextr', 4, 'rm', '', '')}}

EVEX_EXACT = \
{(1, 0, 0, 0): {16: ('vmovups', 0, 'rm', 'kz', 'kz'), 17: ('vmovups', 0, 'rm', 'kz', 'kz'), 18: ({'r': 'vmovhlps', 'm': 'vmovlps'}, 0, 'rm', 'kvz', 'kvz'), 19: ('vmovlps', 0, 'm', '', 'kz'), 20: ('vunpcklps', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhps', 0, 'rm', 'kvz', 'bkvz'), 22: ({'r': 'vmovlhps', 'm': 'vmovhps'}, 0, 'rm', 'kvz', 'kvz'), 23: ('vmovhps', 0, 'm', '', 'kz'), 40: ('vmovaps', 0, 'rm', 'kz', 'bkz'), 41: ('vmovaps', 0, 'rm', 'kz', 'kz'), 43: ('vmovntps', 0, 'm', '', 'bkz'), 46: ('vucomiss', 0, 'rm', 'bkz', 'kz'), 47: ('vcomiss', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtps', 0, 'rm', 'bkz', 'bkz'), 84: ('vandps', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnps', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorps', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorps', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddps', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulps', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtps2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubps', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminps', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivps', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxps', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttps2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2udq', 0, 'rm', 'bkz', 'bkz'), 194: ('vcmpps', 1, 'rm', 'bkvz', 'bkvz'), 198: ('vshufps', 1, 'rm', 'kvz', 'bkvz')}, (1, 0, 0, 1): {16: ('vmovups', 0, 'rm', 'kz', 'kz'), 17: ('vmovups', 0, 'rm', 'kz', 'kz'), 20: ('vunpcklps', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhps', 0, 'rm', 'kvz', 'bkvz'), 40: ('vmovaps', 0, 'rm', 'kz', 'bkz'), 41: ('vmovaps', 0, 'rm', 'kz', 'kz'), 43: ('vmovntps', 0, 'm', '', 'bkz'), 46: ('vucomiss', 0, 'rm', 'bkz', 'kz'), 47: ('vcomiss', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtps', 0, 'rm', 'bkz', 'bkz'), 84: ('vandps', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnps', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorps', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorps', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddps', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulps', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtps2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubps', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminps', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivps', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxps', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttps2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2udq', 0, 'rm', 'bkz', 'bkz'), 194: ('vcmpps', 1, 'rm', 'bkvz', 'bkvz'), 198: ('vshufps', 1, 'rm', 'kvz', 'bkvz')}, (1, 0, 0, 2): {16: ('vmovups', 0, 'rm', 'kz', 'kz'), 17: ('vmovups', 0, 'rm', 'kz', 'kz'), 20: ('vunpcklps', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhps', 0, 'rm', 'kvz', 'bkvz'), 40: ('vmovaps', 0, 'rm', 'kz', 'bkz'), 41: ('vmovaps', 0, 'rm', 'kz', 'kz'), 43: ('vmovntps', 0, 'm', '', 'bkz'), 46: ('vucomiss', 0, 'rm', 'bkz', 'kz'), 47: ('vcomiss', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtps', 0, 'rm', 'bkz', 'bkz'), 84: ('vandps', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnps', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorps', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorps', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddps', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulps', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtps2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubps', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminps', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivps', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxps', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttps2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2udq', 0, 'rm', 'bkz', 'bkz'), 194: ('vcmpps', 1, 'rm', 'bkvz', 'bkvz'), 198: ('vshufps', 1, 'rm', 'kvz', 'bkvz')}, (1, 0, 1, 0): {91: ('vcvtqq2ps', 0, 'rm', 'bkz', 'bkz'), 120: ('vcvttpd2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2udq', 0, 'rm', 'bkz', 'bkz')}, (1, 0, 1, 1): {91: ('vcvtqq2ps', 0, 'rm', 'bkz', 'bkz'), 120: ('vcvttpd2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2udq', 0, 'rm', 'bkz', 'bkz')}, (1, 0, 1, 2): {91: ('vcvtqq2ps', 0, 'rm', 'bkz', 'bkz'), 120: ('vcvttpd2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2udq', 0, 'rm', 'bkz', 'bkz')}, (1, 1, 0, 0): {91: ('vcvtps2dq', 0, 'rm', 'bkz', 'bkz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 98: ('vpunpckldq', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpcmpgtd', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 106: ('vpunpckhdq', 0, 'rm', 'kvz', 'bkvz'), 107: ('vpackssdw', 0, 'rm', 'kvz', 'bkvz'), 110: ('vmovd', 0, 'rm', 'kz', 'kz'), 111: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufd', 1, 'rm', 'kz', 'bkz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprord', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprold', 1, 'rm', 'kvz', 'bkvz'), 2: ('vpsrld', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsrad', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpslld', 1, 'rm', 'kvz', 'bkvz')}, 115: {3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpcmpeqd', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttps2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttps2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtps2qq', 0, 'rm', 'bkz', 'bkz'), 126: ('vmovd', 0, 'rm', 'kz', 'kz'), 127: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 196: ('vpinsrw', 1, 'rm', 'kvz', 'kvz'), 197: ('vpextrw', 1, 'r', 'kz', ''), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 210: ('vpsrld', 0, 'rm', 'kvz', 'kvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandd', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnd', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsrad', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 231: ('vmovntdq', 0, 'rm', 'kz', 'kz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vpord', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxord', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 242: ('vpslld', 0, 'rm', 'kvz', 'kvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 250: ('vpsubd', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz'), 254: ('vpaddd', 0, 'rm', 'kvz', 'bkvz')}, (1, 1, 0, 1): {91: ('vcvtps2dq', 0, 'rm', 'bkz', 'bkz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 98: ('vpunpckldq', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpcmpgtd', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 106: ('vpunpckhdq', 0, 'rm', 'kvz', 'bkvz'), 107: ('vpackssdw', 0, 'rm', 'kvz', 'bkvz'), 111: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufd', 1, 'rm', 'kz', 'bkz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprord', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprold', 1, 'rm', 'kvz', 'bkvz'), 2: ('vpsrld', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsrad', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpslld', 1, 'rm', 'kvz', 'bkvz')}, 115: {3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpcmpeqd', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttps2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttps2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtps2qq', 0, 'rm', 'bkz', 'bkz'), 127: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 210: ('vpsrld', 0, 'rm', 'kvz', 'kvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandd', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnd', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsrad', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 231: ('vmovntdq', 0, 'rm', 'kz', 'kz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vpord', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxord', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 242: ('vpslld', 0, 'rm', 'kvz', 'kvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 250: ('vpsubd', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz'), 254: ('vpaddd', 0, 'rm', 'kvz', 'bkvz')}, (1, 1, 0, 2): {91: ('vcvtps2dq', 0, 'rm', 'bkz', 'bkz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 98: ('vpunpckldq', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpcmpgtd', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 106: ('vpunpckhdq', 0, 'rm', 'kvz', 'bkvz'), 107: ('vpackssdw', 0, 'rm', 'kvz', 'bkvz'), 111: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufd', 1, 'rm', 'kz', 'bkz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprord', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprold', 1, 'rm', 'kvz', 'bkvz'), 2: ('vpsrld', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsrad', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpslld', 1, 'rm', 'kvz', 'bkvz')}, 115: {3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpcmpeqd', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttps2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtps2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttps2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtps2qq', 0, 'rm', 'bkz', 'bkz'), 127: ('vmovdqa32', 0, 'rm', 'kz', 'kz'), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 210: ('vpsrld', 0, 'rm', 'kvz', 'kvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandd', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnd', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsrad', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 231: ('vmovntdq', 0, 'rm', 'kz', 'kz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vpord', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxord', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 242: ('vpslld', 0, 'rm', 'kvz', 'kvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 250: ('vpsubd', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz'), 254: ('vpaddd', 0, 'rm', 'kvz', 'bkvz')}, (1, 1, 1, 0): {16: ('vmovupd', 0, 'rm', 'kz', 'kz'), 17: ('vmovupd', 0, 'rm', 'kz', 'kz'), 18: ('vmovlpd', 0, 'm', '', 'kvz'), 19: ('vmovlpd', 0, 'm', '', 'kz'), 20: ('vunpcklpd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhpd', 0, 'rm', 'kvz', 'bkvz'), 22: ('vmovhpd', 0, 'm', '', 'kvz'), 23: ('vmovhpd', 0, 'm', '', 'kz'), 40: ('vmovapd', 0, 'rm', 'kz', 'bkz'), 41: ('vmovapd', 0, 'rm', 'kz', 'kz'), 43: ('vmovntpd', 0, 'm', '', 'bkz'), 46: ('vucomisd', 0, 'rm', 'bkz', 'kz'), 47: ('vcomisd', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtpd', 0, 'rm', 'bkz', 'bkz'), 84: ('vandpd', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnpd', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorpd', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorpd', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddpd', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulpd', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtpd2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubpd', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminpd', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivpd', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxpd', 0, 'rm', 'bkvz', 'bkvz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 108: ('vpunpcklqdq', 0, 'rm', 'kvz', 'bkvz'), 109: ('vpunpckhqdq', 0, 'rm', 'kvz', 'bkvz'), 110: ('vmovq', 0, 'rm', 'kz', 'kz'), 111: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprorq', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprolq', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraq', 1, 'rm', 'kvz', 'bkvz')}, 115: {2: ('vpsrlq', 1, 'rm', 'kvz', 'bkvz'), 3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttpd2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttpd2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtpd2qq', 0, 'rm', 'bkz', 'bkz'), 126: ('vmovq', 0, 'rm', 'kz', 'kz'), 127: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 194: ('vcmppd', 1, 'rm', 'bkvz', 'bkvz'), 196: ('vpinsrw', 1, 'rm', 'kvz', 'kvz'), 197: ('vpextrw', 1, 'r', 'kz', ''), 198: ('vshufpd', 1, 'rm', 'kvz', 'bkvz'), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 211: ('vpsrlq', 0, 'rm', 'kvz', 'kvz'), 212: ('vpaddq', 0, 'rm', 'kvz', 'bkvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 214: ('vmovq', 0, 'rm', 'kz', 'kz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandq', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnq', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsraq', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 230: ('vcvttpd2dq', 0, 'rm', 'bkz', 'bkz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vporq', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxorq', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 243: ('vpsllq', 0, 'rm', 'kvz', 'kvz'), 244: ('vpmuludq', 0, 'rm', 'kvz', 'bkvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 251: ('vpsubq', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz')}, (1, 1, 1, 1): {16: ('vmovupd', 0, 'rm', 'kz', 'kz'), 17: ('vmovupd', 0, 'rm', 'kz', 'kz'), 20: ('vunpcklpd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhpd', 0, 'rm', 'kvz', 'bkvz'), 40: ('vmovapd', 0, 'rm', 'kz', 'bkz'), 41: ('vmovapd', 0, 'rm', 'kz', 'kz'), 43: ('vmovntpd', 0, 'm', '', 'bkz'), 46: ('vucomisd', 0, 'rm', 'bkz', 'kz'), 47: ('vcomisd', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtpd', 0, 'rm', 'bkz', 'bkz'), 84: ('vandpd', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnpd', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorpd', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorpd', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddpd', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulpd', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtpd2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubpd', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminpd', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivpd', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxpd', 0, 'rm', 'bkvz', 'bkvz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 108: ('vpunpcklqdq', 0, 'rm', 'kvz', 'bkvz'), 109: ('vpunpckhqdq', 0, 'rm', 'kvz', 'bkvz'), 111: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprorq', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprolq', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraq', 1, 'rm', 'kvz', 'bkvz')}, 115: {2: ('vpsrlq', 1, 'rm', 'kvz', 'bkvz'), 3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttpd2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttpd2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtpd2qq', 0, 'rm', 'bkz', 'bkz'), 127: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 194: ('vcmppd', 1, 'rm', 'bkvz', 'bkvz'), 198: ('vshufpd', 1, 'rm', 'kvz', 'bkvz'), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 211: ('vpsrlq', 0, 'rm', 'kvz', 'kvz'), 212: ('vpaddq', 0, 'rm', 'kvz', 'bkvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandq', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnq', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsraq', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 230: ('vcvttpd2dq', 0, 'rm', 'bkz', 'bkz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vporq', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxorq', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 243: ('vpsllq', 0, 'rm', 'kvz', 'kvz'), 244: ('vpmuludq', 0, 'rm', 'kvz', 'bkvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 251: ('vpsubq', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz')}, (1, 1, 1, 2): {16: ('vmovupd', 0, 'rm', 'kz', 'kz'), 17: ('vmovupd', 0, 'rm', 'kz', 'kz'), 20: ('vunpcklpd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vunpckhpd', 0, 'rm', 'kvz', 'bkvz'), 40: ('vmovapd', 0, 'rm', 'kz', 'bkz'), 41: ('vmovapd', 0, 'rm', 'kz', 'kz'), 43: ('vmovntpd', 0, 'm', '', 'bkz'), 46: ('vucomisd', 0, 'rm', 'bkz', 'kz'), 47: ('vcomisd', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtpd', 0, 'rm', 'bkz', 'bkz'), 84: ('vandpd', 0, 'rm', 'kvz', 'bkvz'), 85: ('vandnpd', 0, 'rm', 'kvz', 'bkvz'), 86: ('vorpd', 0, 'rm', 'kvz', 'bkvz'), 87: ('vxorpd', 0, 'rm', 'kvz', 'bkvz'), 88: ('vaddpd', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulpd', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtpd2ps', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubpd', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminpd', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivpd', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxpd', 0, 'rm', 'bkvz', 'bkvz'), 96: ('vpunpcklbw', 0, 'rm', 'kvz', 'bkvz'), 97: ('vpunpcklwd', 0, 'rm', 'kvz', 'bkvz'), 99: ('vpacksswb', 0, 'rm', 'kvz', 'bkvz'), 100: ('vpcmpgtb', 0, 'rm', 'kvz', 'bkvz'), 101: ('vpcmpgtw', 0, 'rm', 'kvz', 'bkvz'), 103: ('vpackuswb', 0, 'rm', 'kvz', 'bkvz'), 104: ('vpunpckhbw', 0, 'rm', 'kvz', 'bkvz'), 105: ('vpunpckhwd', 0, 'rm', 'kvz', 'bkvz'), 108: ('vpunpcklqdq', 0, 'rm', 'kvz', 'bkvz'), 109: ('vpunpckhqdq', 0, 'rm', 'kvz', 'bkvz'), 111: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 113: {2: ('vpsrlw', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraw', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllw', 1, 'rm', 'kvz', 'bkvz')}, 114: {0: ('vprorq', 1, 'rm', 'kvz', 'bkvz'), 1: ('vprolq', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpsraq', 1, 'rm', 'kvz', 'bkvz')}, 115: {2: ('vpsrlq', 1, 'rm', 'kvz', 'bkvz'), 3: ('vpsrldq', 1, 'rm', 'kvz', 'bkvz'), 6: ('vpsllq', 1, 'rm', 'kvz', 'bkvz'), 7: ('vpslldq', 1, 'rm', 'kvz', 'bkvz')}, 116: ('vpcmpeqb', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpcmpeqw', 0, 'rm', 'kvz', 'bkvz'), 120: ('vcvttpd2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtpd2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttpd2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtpd2qq', 0, 'rm', 'bkz', 'bkz'), 127: ('vmovdqa64', 0, 'rm', 'kz', 'kz'), 194: ('vcmppd', 1, 'rm', 'bkvz', 'bkvz'), 198: ('vshufpd', 1, 'rm', 'kvz', 'bkvz'), 209: ('vpsrlw', 0, 'rm', 'kvz', 'kvz'), 211: ('vpsrlq', 0, 'rm', 'kvz', 'kvz'), 212: ('vpaddq', 0, 'rm', 'kvz', 'bkvz'), 213: ('vpmullw', 0, 'rm', 'kvz', 'bkvz'), 216: ('vpsubusb', 0, 'rm', 'kvz', 'bkvz'), 217: ('vpsubusw', 0, 'rm', 'kvz', 'bkvz'), 218: ('vpminub', 0, 'rm', 'kvz', 'bkvz'), 219: ('vpandq', 0, 'rm', 'kvz', 'bkvz'), 220: ('vpaddusb', 0, 'rm', 'kvz', 'bkvz'), 221: ('vpaddusw', 0, 'rm', 'kvz', 'bkvz'), 222: ('vpmaxub', 0, 'rm', 'kvz', 'bkvz'), 223: ('vpandnq', 0, 'rm', 'kvz', 'bkvz'), 224: ('vpavgb', 0, 'rm', 'kvz', 'bkvz'), 225: ('vpsraw', 0, 'rm', 'kvz', 'kvz'), 226: ('vpsraq', 0, 'rm', 'kvz', 'kvz'), 227: ('vpavgw', 0, 'rm', 'kvz', 'bkvz'), 228: ('vpmulhuw', 0, 'rm', 'kvz', 'bkvz'), 229: ('vpmulhw', 0, 'rm', 'kvz', 'bkvz'), 230: ('vcvttpd2dq', 0, 'rm', 'bkz', 'bkz'), 232: ('vpsubsb', 0, 'rm', 'kvz', 'bkvz'), 233: ('vpsubsw', 0, 'rm', 'kvz', 'bkvz'), 234: ('vpminsw', 0, 'rm', 'kvz', 'bkvz'), 235: ('vporq', 0, 'rm', 'kvz', 'bkvz'), 236: ('vpaddsb', 0, 'rm', 'kvz', 'bkvz'), 237: ('vpaddsw', 0, 'rm', 'kvz', 'bkvz'), 238: ('vpmaxsw', 0, 'rm', 'kvz', 'bkvz'), 239: ('vpxorq', 0, 'rm', 'kvz', 'bkvz'), 241: ('vpsllw', 0, 'rm', 'kvz', 'kvz'), 243: ('vpsllq', 0, 'rm', 'kvz', 'kvz'), 244: ('vpmuludq', 0, 'rm', 'kvz', 'bkvz'), 245: ('vpmaddwd', 0, 'rm', 'kvz', 'bkvz'), 246: ('vpsadbw', 0, 'rm', 'kvz', 'bkvz'), 248: ('vpsubb', 0, 'rm', 'kvz', 'bkvz'), 249: ('vpsubw', 0, 'rm', 'kvz', 'bkvz'), 251: ('vpsubq', 0, 'rm', 'kvz', 'bkvz'), 252: ('vpaddb', 0, 'rm', 'kvz', 'bkvz'), 253: ('vpaddw', 0, 'rm', 'kvz', 'bkvz')}, (1, 2, 0, 0): {16: ('vmovss', 0, 'rm', 'kvz', 'kz'), 17: ('vmovss', 0, 'rm', 'kvz', 'kz'), 18: ('vmovsldup', 0, 'rm', 'kz', 'kz'), 22: ('vmovshdup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtss', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddss', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulss', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtss2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttps2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubss', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminss', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivss', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxss', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2pd', 0, 'rm', 'kz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 194: ('vcmpss', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtdq2pd', 0, 'rm', 'kz', 'bkz')}, (1, 2, 0, 1): {16: ('vmovss', 0, 'rm', 'kvz', 'kz'), 17: ('vmovss', 0, 'rm', 'kvz', 'kz'), 18: ('vmovsldup', 0, 'rm', 'kz', 'kz'), 22: ('vmovshdup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtss', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddss', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulss', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtss2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttps2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubss', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminss', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivss', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxss', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2pd', 0, 'rm', 'kz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 194: ('vcmpss', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtdq2pd', 0, 'rm', 'kz', 'bkz')}, (1, 2, 0, 2): {16: ('vmovss', 0, 'rm', 'kvz', 'kz'), 17: ('vmovss', 0, 'rm', 'kvz', 'kz'), 18: ('vmovsldup', 0, 'rm', 'kz', 'kz'), 22: ('vmovshdup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtss', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddss', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulss', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtss2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttps2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubss', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminss', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivss', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxss', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2pd', 0, 'rm', 'kz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu32', 0, 'rm', 'kz', 'kz'), 194: ('vcmpss', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtdq2pd', 0, 'rm', 'kz', 'bkz')}, (1, 2, 1, 0): {42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2pd', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 126: ('vmovq', 0, 'rm', 'kz', 'kz'), 127: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 230: ('vcvtqq2pd', 0, 'rm', 'bkz', 'bkz')}, (1, 2, 1, 1): {42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2pd', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 230: ('vcvtqq2pd', 0, 'rm', 'bkz', 'bkz')}, (1, 2, 1, 2): {42: ('vcvtsi2ss', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttss2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtss2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 112: ('vpshufhw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttss2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtss2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2pd', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2ss', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu64', 0, 'rm', 'kz', 'kz'), 230: ('vcvtqq2pd', 0, 'rm', 'bkz', 'bkz')}, (1, 3, 0, 0): {42: ('vcvtsi2sd', 0, 'rm', 'kvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu8', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'kvz', 'kvz'), 127: ('vmovdqu8', 0, 'rm', 'kz', 'kz')}, (1, 3, 0, 1): {42: ('vcvtsi2sd', 0, 'rm', 'kvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu8', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'kvz', 'kvz'), 127: ('vmovdqu8', 0, 'rm', 'kz', 'kz')}, (1, 3, 0, 2): {42: ('vcvtsi2sd', 0, 'rm', 'kvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 111: ('vmovdqu8', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtudq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'kvz', 'kvz'), 127: ('vmovdqu8', 0, 'rm', 'kz', 'kz')}, (1, 3, 1, 0): {16: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 18: ('vmovddup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2sd', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsd', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsd', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsd', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsd2ss', 0, 'rm', 'bkvz', 'kvz'), 92: ('vsubsd', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsd', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsd', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsd', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu16', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu16', 0, 'rm', 'kz', 'kz'), 194: ('vcmpsd', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtpd2dq', 0, 'rm', 'bkz', 'bkz')}, (1, 3, 1, 1): {16: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 18: ('vmovddup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2sd', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsd', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsd', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsd', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsd2ss', 0, 'rm', 'bkvz', 'kvz'), 92: ('vsubsd', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsd', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsd', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsd', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu16', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu16', 0, 'rm', 'kz', 'kz'), 194: ('vcmpsd', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtpd2dq', 0, 'rm', 'bkz', 'bkz')}, (1, 3, 1, 2): {16: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsd', 0, 'rm', 'kvz', 'kz'), 18: ('vmovddup', 0, 'rm', 'kz', 'kz'), 42: ('vcvtsi2sd', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsd2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsd2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsd', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsd', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsd', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsd2ss', 0, 'rm', 'bkvz', 'kvz'), 92: ('vsubsd', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsd', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsd', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsd', 0, 'rm', 'bkvz', 'kvz'), 111: ('vmovdqu16', 0, 'rm', 'kz', 'bkz'), 112: ('vpshuflw', 1, 'rm', 'kz', 'bkz'), 120: ('vcvttsd2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsd2usi', 0, 'rm', 'bkz', 'kz'), 122: ('vcvtuqq2ps', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtusi2sd', 0, 'rm', 'bkvz', 'kvz'), 127: ('vmovdqu16', 0, 'rm', 'kz', 'kz'), 194: ('vcmpsd', 1, 'rm', 'bkvz', 'kvz'), 230: ('vcvtpd2dq', 0, 'rm', 'bkz', 'bkz')}, (2, 0, 0, 0): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz')}, (2, 0, 0, 1): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz')}, (2, 0, 0, 2): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz')}, (2, 0, 1, 0): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 0, 1, 1): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 0, 1, 2): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 1, 0, 0): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 12: ('vpermilps', 0, 'rm', 'kvz', 'bkvz'), 19: ('vcvtph2ps', 0, 'rm', 'bkz', 'kz'), 20: ('vprorvd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvd', 0, 'rm', 'kvz', 'bkvz'), 24: ('vbroadcastss', 0, 'rm', 'kz', 'kz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 30: ('vpabsd', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsxdq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmd', 0, 'rm', 'kvz', 'bkvz'), 42: ('vmovntdqa', 0, 'rm', 'kz', 'kz'), 43: ('vpackusdw', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefps', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefss', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 53: ('vpmovzxdq', 0, 'rm', 'kz', 'kz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsd', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminud', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsd', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxud', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmulld', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexpps', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpss', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntd', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvd', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravd', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvd', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14ps', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14ss', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14ss', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntb', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntd', 0, 'rm', 'kz', 'bkz'), 88: ('vpbroadcastd', 0, 'rm', 'kz', 'kz'), 89: ('vbroadcasti32x2', 0, 'rm', 'kz', 'kz'), 98: ('vpexpandb', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressb', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmd', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmps', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmb', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvd', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvd', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2b', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2d', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2ps', 0, 'rm', 'kvz', 'bkvz'), 120: ('vpbroadcastb', 0, 'rm', 'kz', 'kz'), 121: ('vpbroadcastw', 0, 'rm', 'kz', 'kz'), 122: ('vpbroadcastb', 0, 'r', 'kz', ''), 123: ('vpbroadcastw', 0, 'r', 'kz', ''), 124: ('vpbroadcastd', 0, 'r', 'kz', ''), 125: ('vpermt2b', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2d', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2ps', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandps', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandd', 0, 'rm', 'kz', 'kz'), 138: ('vcompressps', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressd', 0, 'rm', 'kz', 'kz'), 141: ('vpermb', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdd', 0, 's', 'K', 'K'), 145: ('vpgatherqd', 0, 's', 'K', 'K'), 146: ('vgatherdps', 0, 's', 'K', 'K'), 147: ('vgatherqps', 0, 's', 'K', 'K'), 150: ('vfmaddsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdd', 0, 's', 'K', 'K'), 161: ('vpscatterqd', 0, 's', 'K', 'K'), 162: ('vscatterdps', 0, 's', 'K', 'K'), 163: ('vscatterqps', 0, 's', 'K', 'K'), 166: ('vfmaddsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictd', 0, 'rm', 'kz', 'bkz'), 200: ('vexp2ps', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28ps', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28ss', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28ps', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28ss', 0, 'rm', 'bkvz', 'kvz'), 207: ('vgf2p8mulb', 0, 'rm', 'kvz', 'bkvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 1, 0, 1): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 12: ('vpermilps', 0, 'rm', 'kvz', 'bkvz'), 19: ('vcvtph2ps', 0, 'rm', 'bkz', 'kz'), 20: ('vprorvd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvd', 0, 'rm', 'kvz', 'bkvz'), 22: ('vpermps', 0, 'rm', 'kvz', 'bkvz'), 24: ('vbroadcastss', 0, 'rm', 'kz', 'kz'), 25: ('vbroadcastf32x2', 0, 'rm', 'kz', 'kz'), 26: ('vbroadcastf32x4', 0, 'm', '', 'kz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 30: ('vpabsd', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsxdq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmd', 0, 'rm', 'kvz', 'bkvz'), 42: ('vmovntdqa', 0, 'rm', 'kz', 'kz'), 43: ('vpackusdw', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefps', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefss', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 53: ('vpmovzxdq', 0, 'rm', 'kz', 'kz'), 54: ('vpermd', 0, 'rm', 'kvz', 'bkvz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsd', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminud', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsd', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxud', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmulld', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexpps', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpss', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntd', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvd', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravd', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvd', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14ps', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14ss', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14ss', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntb', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntd', 0, 'rm', 'kz', 'bkz'), 88: ('vpbroadcastd', 0, 'rm', 'kz', 'kz'), 89: ('vbroadcasti32x2', 0, 'rm', 'kz', 'kz'), 90: ('vbroadcasti32x4', 0, 'm', '', 'kz'), 98: ('vpexpandb', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressb', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmd', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmps', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmb', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvd', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvd', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2b', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2d', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2ps', 0, 'rm', 'kvz', 'bkvz'), 120: ('vpbroadcastb', 0, 'rm', 'kz', 'kz'), 121: ('vpbroadcastw', 0, 'rm', 'kz', 'kz'), 122: ('vpbroadcastb', 0, 'r', 'kz', ''), 123: ('vpbroadcastw', 0, 'r', 'kz', ''), 124: ('vpbroadcastd', 0, 'r', 'kz', ''), 125: ('vpermt2b', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2d', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2ps', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandps', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandd', 0, 'rm', 'kz', 'kz'), 138: ('vcompressps', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressd', 0, 'rm', 'kz', 'kz'), 141: ('vpermb', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdd', 0, 's', 'K', 'K'), 145: ('vpgatherqd', 0, 's', 'K', 'K'), 146: ('vgatherdps', 0, 's', 'K', 'K'), 147: ('vgatherqps', 0, 's', 'K', 'K'), 150: ('vfmaddsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdd', 0, 's', 'K', 'K'), 161: ('vpscatterqd', 0, 's', 'K', 'K'), 162: ('vscatterdps', 0, 's', 'K', 'K'), 163: ('vscatterqps', 0, 's', 'K', 'K'), 166: ('vfmaddsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictd', 0, 'rm', 'kz', 'bkz'), 200: ('vexp2ps', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28ps', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28ss', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28ps', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28ss', 0, 'rm', 'bkvz', 'kvz'), 207: ('vgf2p8mulb', 0, 'rm', 'kvz', 'bkvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 1, 0, 2): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 12: ('vpermilps', 0, 'rm', 'kvz', 'bkvz'), 19: ('vcvtph2ps', 0, 'rm', 'bkz', 'kz'), 20: ('vprorvd', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvd', 0, 'rm', 'kvz', 'bkvz'), 22: ('vpermps', 0, 'rm', 'kvz', 'bkvz'), 24: ('vbroadcastss', 0, 'rm', 'kz', 'kz'), 25: ('vbroadcastf32x2', 0, 'rm', 'kz', 'kz'), 26: ('vbroadcastf32x4', 0, 'm', '', 'kz'), 27: ('vbroadcastf32x8', 0, 'm', '', 'kz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 30: ('vpabsd', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsxdq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmd', 0, 'rm', 'kvz', 'bkvz'), 42: ('vmovntdqa', 0, 'rm', 'kz', 'kz'), 43: ('vpackusdw', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefps', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefss', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 53: ('vpmovzxdq', 0, 'rm', 'kz', 'kz'), 54: ('vpermd', 0, 'rm', 'kvz', 'bkvz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsd', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminud', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsd', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxud', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmulld', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexpps', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpss', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntd', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvd', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravd', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvd', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14ps', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14ss', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14ss', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntb', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntd', 0, 'rm', 'kz', 'bkz'), 88: ('vpbroadcastd', 0, 'rm', 'kz', 'kz'), 89: ('vbroadcasti32x2', 0, 'rm', 'kz', 'kz'), 90: ('vbroadcasti32x4', 0, 'm', '', 'kz'), 91: ('vbroadcasti32x8', 0, 'm', '', 'kz'), 98: ('vpexpandb', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressb', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmd', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmps', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmb', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvd', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvd', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2b', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2d', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2ps', 0, 'rm', 'kvz', 'bkvz'), 120: ('vpbroadcastb', 0, 'rm', 'kz', 'kz'), 121: ('vpbroadcastw', 0, 'rm', 'kz', 'kz'), 122: ('vpbroadcastb', 0, 'r', 'kz', ''), 123: ('vpbroadcastw', 0, 'r', 'kz', ''), 124: ('vpbroadcastd', 0, 'r', 'kz', ''), 125: ('vpermt2b', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2d', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2ps', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandps', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandd', 0, 'rm', 'kz', 'kz'), 138: ('vcompressps', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressd', 0, 'rm', 'kz', 'kz'), 141: ('vpermb', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdd', 0, 's', 'K', 'K'), 145: ('vpgatherqd', 0, 's', 'K', 'K'), 146: ('vgatherdps', 0, 's', 'K', 'K'), 147: ('vgatherqps', 0, 's', 'K', 'K'), 150: ('vfmaddsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ps', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132ss', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ps', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132ss', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdd', 0, 's', 'K', 'K'), 161: ('vpscatterqd', 0, 's', 'K', 'K'), 162: ('vscatterdps', 0, 's', 'K', 'K'), 163: ('vscatterqps', 0, 's', 'K', 'K'), 166: ('vfmaddsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ps', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213ss', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ps', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213ss', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ps', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231ss', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ps', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231ss', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictd', 0, 'rm', 'kz', 'bkz'), 198: {1: ('vgatherpf0dps', 0, 's', 'K', 'K'), 2: ('vgatherpf1dps', 0, 's', 'K', 'K'), 5: ('vscatterpf0dps', 0, 's', 'K', 'K'), 6: ('vscatterpf1dps', 0, 's', 'K', 'K')}, 199: {1: ('vgatherpf0qps', 0, 's', 'K', 'K'), 2: ('vgatherpf1qps', 0, 's', 'K', 'K'), 5: ('vscatterpf0qps', 0, 's', 'K', 'K'), 6: ('vscatterpf1qps', 0, 's', 'K', 'K')}, 200: ('vexp2ps', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28ps', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28ss', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28ps', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28ss', 0, 'rm', 'bkvz', 'kvz'), 207: ('vgf2p8mulb', 0, 'rm', 'kvz', 'bkvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 1, 1, 0): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 13: ('vpermilpd', 0, 'rm', 'kvz', 'bkvz'), 16: ('vpsrlvw', 0, 'rm', 'kvz', 'bkvz'), 17: ('vpsravw', 0, 'rm', 'kvz', 'bkvz'), 18: ('vpsllvw', 0, 'rm', 'kvz', 'bkvz'), 20: ('vprorvq', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvq', 0, 'rm', 'kvz', 'bkvz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 31: ('vpabsq', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmuldq', 0, 'rm', 'kvz', 'bkvz'), 41: ('vpcmpeqq', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefpd', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsd', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 55: ('vpcmpgtq', 0, 'rm', 'kvz', 'bkvz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsq', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminuq', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsq', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxuq', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmullq', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexppd', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsd', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntq', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvq', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravq', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvq', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14pd', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14sd', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14sd', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntw', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntq', 0, 'rm', 'kz', 'bkz'), 89: ('vpbroadcastq', 0, 'rm', 'kz', 'kz'), 98: ('vpexpandw', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressw', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmq', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmpd', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmw', 0, 'rm', 'kvz', 'bkvz'), 112: ('vpshldvw', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvq', 0, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdvw', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvq', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2w', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2q', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2pd', 0, 'rm', 'kvz', 'bkvz'), 124: ('vpbroadcastq', 0, 'r', 'kz', ''), 125: ('vpermt2w', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2q', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2pd', 0, 'rm', 'kvz', 'bkvz'), 131: ('vpmultishiftqb', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandpd', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandq', 0, 'rm', 'kz', 'kz'), 138: ('vcompresspd', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressq', 0, 'rm', 'kz', 'kz'), 141: ('vpermw', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdq', 0, 's', 'K', 'K'), 145: ('vpgatherqq', 0, 's', 'K', 'K'), 146: ('vgatherdpd', 0, 's', 'K', 'K'), 147: ('vgatherqpd', 0, 's', 'K', 'K'), 150: ('vfmaddsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdq', 0, 's', 'K', 'K'), 161: ('vpscatterqq', 0, 's', 'K', 'K'), 162: ('vscatterdpd', 0, 's', 'K', 'K'), 163: ('vscatterqpd', 0, 's', 'K', 'K'), 166: ('vfmaddsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictq', 0, 'rm', 'kz', 'bkz'), 200: ('vexp2pd', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28pd', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28sd', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28pd', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28sd', 0, 'rm', 'bkvz', 'kvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 1, 1, 1): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 13: ('vpermilpd', 0, 'rm', 'kvz', 'bkvz'), 16: ('vpsrlvw', 0, 'rm', 'kvz', 'bkvz'), 17: ('vpsravw', 0, 'rm', 'kvz', 'bkvz'), 18: ('vpsllvw', 0, 'rm', 'kvz', 'bkvz'), 20: ('vprorvq', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvq', 0, 'rm', 'kvz', 'bkvz'), 22: ('vpermpd', 0, 'rm', 'kvz', 'bkvz'), 25: ('vbroadcastsd', 0, 'rm', 'kz', 'kz'), 26: ('vbroadcastf64x2', 0, 'm', '', 'kz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 31: ('vpabsq', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmuldq', 0, 'rm', 'kvz', 'bkvz'), 41: ('vpcmpeqq', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefpd', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsd', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 54: ('vpermq', 0, 'rm', 'kvz', 'bkvz'), 55: ('vpcmpgtq', 0, 'rm', 'kvz', 'bkvz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsq', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminuq', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsq', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxuq', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmullq', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexppd', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsd', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntq', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvq', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravq', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvq', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14pd', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14sd', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14sd', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntw', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntq', 0, 'rm', 'kz', 'bkz'), 89: ('vpbroadcastq', 0, 'rm', 'kz', 'kz'), 90: ('vbroadcasti64x2', 0, 'm', '', 'kz'), 98: ('vpexpandw', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressw', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmq', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmpd', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmw', 0, 'rm', 'kvz', 'bkvz'), 112: ('vpshldvw', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvq', 0, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdvw', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvq', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2w', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2q', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2pd', 0, 'rm', 'kvz', 'bkvz'), 124: ('vpbroadcastq', 0, 'r', 'kz', ''), 125: ('vpermt2w', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2q', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2pd', 0, 'rm', 'kvz', 'bkvz'), 131: ('vpmultishiftqb', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandpd', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandq', 0, 'rm', 'kz', 'kz'), 138: ('vcompresspd', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressq', 0, 'rm', 'kz', 'kz'), 141: ('vpermw', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdq', 0, 's', 'K', 'K'), 145: ('vpgatherqq', 0, 's', 'K', 'K'), 146: ('vgatherdpd', 0, 's', 'K', 'K'), 147: ('vgatherqpd', 0, 's', 'K', 'K'), 150: ('vfmaddsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdq', 0, 's', 'K', 'K'), 161: ('vpscatterqq', 0, 's', 'K', 'K'), 162: ('vscatterdpd', 0, 's', 'K', 'K'), 163: ('vscatterqpd', 0, 's', 'K', 'K'), 166: ('vfmaddsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictq', 0, 'rm', 'kz', 'bkz'), 200: ('vexp2pd', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28pd', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28sd', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28pd', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28sd', 0, 'rm', 'bkvz', 'kvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 1, 1, 2): {0: ('vpshufb', 0, 'rm', 'kvz', 'bkvz'), 4: ('vpmaddubsw', 0, 'rm', 'kvz', 'bkvz'), 11: ('vpmulhrsw', 0, 'rm', 'kvz', 'bkvz'), 13: ('vpermilpd', 0, 'rm', 'kvz', 'bkvz'), 16: ('vpsrlvw', 0, 'rm', 'kvz', 'bkvz'), 17: ('vpsravw', 0, 'rm', 'kvz', 'bkvz'), 18: ('vpsllvw', 0, 'rm', 'kvz', 'bkvz'), 20: ('vprorvq', 0, 'rm', 'kvz', 'bkvz'), 21: ('vprolvq', 0, 'rm', 'kvz', 'bkvz'), 22: ('vpermpd', 0, 'rm', 'kvz', 'bkvz'), 25: ('vbroadcastsd', 0, 'rm', 'kz', 'kz'), 26: ('vbroadcastf64x2', 0, 'm', '', 'kz'), 27: ('vbroadcastf64x4', 0, 'm', '', 'kz'), 28: ('vpabsb', 0, 'rm', 'kz', 'bkz'), 29: ('vpabsw', 0, 'rm', 'kz', 'bkz'), 31: ('vpabsq', 0, 'rm', 'kz', 'bkz'), 32: ('vpmovsxbw', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsxbd', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsxbq', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsxwd', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsxwq', 0, 'rm', 'kz', 'kz'), 38: ('vptestmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmuldq', 0, 'rm', 'kvz', 'bkvz'), 41: ('vpcmpeqq', 0, 'rm', 'kvz', 'bkvz'), 44: ('vscalefpd', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsd', 0, 'rm', 'bkvz', 'kvz'), 48: ('vpmovzxbw', 0, 'rm', 'kz', 'kz'), 49: ('vpmovzxbd', 0, 'rm', 'kz', 'kz'), 50: ('vpmovzxbq', 0, 'rm', 'kz', 'kz'), 51: ('vpmovzxwd', 0, 'rm', 'kz', 'kz'), 52: ('vpmovzxwq', 0, 'rm', 'kz', 'kz'), 54: ('vpermq', 0, 'rm', 'kvz', 'bkvz'), 55: ('vpcmpgtq', 0, 'rm', 'kvz', 'bkvz'), 56: ('vpminsb', 0, 'rm', 'kvz', 'bkvz'), 57: ('vpminsq', 0, 'rm', 'kvz', 'bkvz'), 58: ('vpminuw', 0, 'rm', 'kvz', 'bkvz'), 59: ('vpminuq', 0, 'rm', 'kvz', 'bkvz'), 60: ('vpmaxsb', 0, 'rm', 'kvz', 'bkvz'), 61: ('vpmaxsq', 0, 'rm', 'kvz', 'bkvz'), 62: ('vpmaxuw', 0, 'rm', 'kvz', 'bkvz'), 63: ('vpmaxuq', 0, 'rm', 'kvz', 'bkvz'), 64: ('vpmullq', 0, 'rm', 'kvz', 'bkvz'), 66: ('vgetexppd', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsd', 0, 'rm', 'bkvz', 'kvz'), 68: ('vplzcntq', 0, 'rm', 'kz', 'bkz'), 69: ('vpsrlvq', 0, 'rm', 'kvz', 'bkvz'), 70: ('vpsravq', 0, 'rm', 'kvz', 'bkvz'), 71: ('vpsllvq', 0, 'rm', 'kvz', 'bkvz'), 76: ('vrcp14pd', 0, 'rm', 'kz', 'bkz'), 77: ('vrcp14sd', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrt14sd', 0, 'rm', 'kvz', 'kvz'), 80: ('vpdpbusd', 0, 'rm', 'kvz', 'bkvz'), 81: ('vpdpbusds', 0, 'rm', 'kvz', 'bkvz'), 82: ('vpdpwssd', 0, 'rm', 'kvz', 'bkvz'), 83: ('vpdpwssds', 0, 'rm', 'kvz', 'bkvz'), 84: ('vpopcntw', 0, 'rm', 'kz', 'bkz'), 85: ('vpopcntq', 0, 'rm', 'kz', 'bkz'), 89: ('vpbroadcastq', 0, 'rm', 'kz', 'kz'), 90: ('vbroadcasti64x2', 0, 'm', '', 'kz'), 91: ('vbroadcasti64x4', 0, 'm', '', 'kz'), 98: ('vpexpandw', 0, 'rm', 'kz', 'kz'), 99: ('vpcompressw', 0, 'rm', 'kz', 'kz'), 100: ('vpblendmq', 0, 'rm', 'kvz', 'bkvz'), 101: ('vblendmpd', 0, 'rm', 'kvz', 'bkvz'), 102: ('vpblendmw', 0, 'rm', 'kvz', 'bkvz'), 112: ('vpshldvw', 0, 'rm', 'kvz', 'bkvz'), 113: ('vpshldvq', 0, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdvw', 0, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdvq', 0, 'rm', 'kvz', 'bkvz'), 117: ('vpermi2w', 0, 'rm', 'kvz', 'bkvz'), 118: ('vpermi2q', 0, 'rm', 'kvz', 'bkvz'), 119: ('vpermi2pd', 0, 'rm', 'kvz', 'bkvz'), 124: ('vpbroadcastq', 0, 'r', 'kz', ''), 125: ('vpermt2w', 0, 'rm', 'kvz', 'bkvz'), 126: ('vpermt2q', 0, 'rm', 'kvz', 'bkvz'), 127: ('vpermt2pd', 0, 'rm', 'kvz', 'bkvz'), 131: ('vpmultishiftqb', 0, 'rm', 'kvz', 'bkvz'), 136: ('vexpandpd', 0, 'rm', 'kz', 'kz'), 137: ('vpexpandq', 0, 'rm', 'kz', 'kz'), 138: ('vcompresspd', 0, 'rm', 'kz', 'kz'), 139: ('vpcompressq', 0, 'rm', 'kz', 'kz'), 141: ('vpermw', 0, 'rm', 'kvz', 'bkvz'), 143: ('vpshufbitqmb', 0, 'rm', 'kvz', 'bkvz'), 144: ('vpgatherdq', 0, 's', 'K', 'K'), 145: ('vpgatherqq', 0, 's', 'K', 'K'), 146: ('vgatherdpd', 0, 's', 'K', 'K'), 147: ('vgatherqpd', 0, 's', 'K', 'K'), 150: ('vfmaddsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132pd', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sd', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132pd', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sd', 0, 'rm', 'bkvz', 'kvz'), 160: ('vpscatterdq', 0, 's', 'K', 'K'), 161: ('vpscatterqq', 0, 's', 'K', 'K'), 162: ('vscatterdpd', 0, 's', 'K', 'K'), 163: ('vscatterqpd', 0, 's', 'K', 'K'), 166: ('vfmaddsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213pd', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sd', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213pd', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sd', 0, 'rm', 'bkvz', 'kvz'), 180: ('vpmadd52luq', 0, 'rm', 'kvz', 'bkvz'), 181: ('vpmadd52huq', 0, 'rm', 'kvz', 'bkvz'), 182: ('vfmaddsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231pd', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sd', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231pd', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sd', 0, 'rm', 'bkvz', 'kvz'), 196: ('vpconflictq', 0, 'rm', 'kz', 'bkz'), 198: {1: ('vgatherpf0dpd', 0, 's', 'K', 'K'), 2: ('vgatherpf1dpd', 0, 's', 'K', 'K'), 5: ('vscatterpf0dpd', 0, 's', 'K', 'K'), 6: ('vscatterpf1dpd', 0, 's', 'K', 'K')}, 199: {1: ('vgatherpf0qpd', 0, 's', 'K', 'K'), 2: ('vgatherpf1qpd', 0, 's', 'K', 'K'), 5: ('vscatterpf0qpd', 0, 's', 'K', 'K'), 6: ('vscatterpf1qpd', 0, 's', 'K', 'K')}, 200: ('vexp2pd', 0, 'rm', 'bkz', 'bkz'), 202: ('vrcp28pd', 0, 'rm', 'bkz', 'bkz'), 203: ('vrcp28sd', 0, 'rm', 'bkvz', 'kvz'), 204: ('vrsqrt28pd', 0, 'rm', 'bkz', 'bkz'), 205: ('vrsqrt28sd', 0, 'rm', 'bkvz', 'kvz'), 220: ('vaesenc', 0, 'rm', 'kvz', 'bkvz'), 221: ('vaesenclast', 0, 'rm', 'kvz', 'bkvz'), 222: ('vaesdec', 0, 'rm', 'kvz', 'bkvz'), 223: ('vaesdeclast', 0, 'rm', 'kvz', 'bkvz')}, (2, 2, 0, 0): {16: ('vpmovuswb', 0, 'rm', 'kz', 'kz'), 17: ('vpmovusdb', 0, 'rm', 'kz', 'kz'), 18: ('vpmovusqb', 0, 'rm', 'kz', 'kz'), 19: ('vpmovusdw', 0, 'rm', 'kz', 'kz'), 20: ('vpmovusqw', 0, 'rm', 'kz', 'kz'), 21: ('vpmovusqd', 0, 'rm', 'kz', 'kz'), 32: ('vpmovswb', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsdb', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsqb', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsdw', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsqw', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsqd', 0, 'rm', 'kz', 'kz'), 38: ('vptestnmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmd', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2b', 0, 'r', 'kz', ''), 41: ('vpmovb2m', 0, 'rm', 'kz', 'bkz'), 48: ('vpmovwb', 0, 'rm', 'kz', 'kz'), 49: ('vpmovdb', 0, 'rm', 'kz', 'kz'), 50: ('vpmovqb', 0, 'rm', 'kz', 'kz'), 51: ('vpmovdw', 0, 'rm', 'kz', 'kz'), 52: ('vpmovqw', 0, 'rm', 'kz', 'kz'), 53: ('vpmovqd', 0, 'rm', 'kz', 'kz'), 56: ('vpmovm2d', 0, 'r', 'kz', ''), 57: ('vpmovd2m', 0, 'rm', 'kz', 'bkz'), 58: ('vpbroadcastmw2d', 0, 'r', 'kz', ''), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vdpbf16ps', 0, 'rm', 'kvz', 'bkvz'), 114: ('vcvtneps2bf16', 0, 'rm', 'kz', 'bkz')}, (2, 2, 0, 1): {16: ('vpmovuswb', 0, 'rm', 'kz', 'kz'), 17: ('vpmovusdb', 0, 'rm', 'kz', 'kz'), 18: ('vpmovusqb', 0, 'rm', 'kz', 'kz'), 19: ('vpmovusdw', 0, 'rm', 'kz', 'kz'), 20: ('vpmovusqw', 0, 'rm', 'kz', 'kz'), 21: ('vpmovusqd', 0, 'rm', 'kz', 'kz'), 32: ('vpmovswb', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsdb', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsqb', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsdw', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsqw', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsqd', 0, 'rm', 'kz', 'kz'), 38: ('vptestnmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmd', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2b', 0, 'r', 'kz', ''), 41: ('vpmovb2m', 0, 'rm', 'kz', 'bkz'), 48: ('vpmovwb', 0, 'rm', 'kz', 'kz'), 49: ('vpmovdb', 0, 'rm', 'kz', 'kz'), 50: ('vpmovqb', 0, 'rm', 'kz', 'kz'), 51: ('vpmovdw', 0, 'rm', 'kz', 'kz'), 52: ('vpmovqw', 0, 'rm', 'kz', 'kz'), 53: ('vpmovqd', 0, 'rm', 'kz', 'kz'), 56: ('vpmovm2d', 0, 'r', 'kz', ''), 57: ('vpmovd2m', 0, 'rm', 'kz', 'bkz'), 58: ('vpbroadcastmw2d', 0, 'r', 'kz', ''), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vdpbf16ps', 0, 'rm', 'kvz', 'bkvz'), 114: ('vcvtneps2bf16', 0, 'rm', 'kz', 'bkz')}, (2, 2, 0, 2): {16: ('vpmovuswb', 0, 'rm', 'kz', 'kz'), 17: ('vpmovusdb', 0, 'rm', 'kz', 'kz'), 18: ('vpmovusqb', 0, 'rm', 'kz', 'kz'), 19: ('vpmovusdw', 0, 'rm', 'kz', 'kz'), 20: ('vpmovusqw', 0, 'rm', 'kz', 'kz'), 21: ('vpmovusqd', 0, 'rm', 'kz', 'kz'), 32: ('vpmovswb', 0, 'rm', 'kz', 'kz'), 33: ('vpmovsdb', 0, 'rm', 'kz', 'kz'), 34: ('vpmovsqb', 0, 'rm', 'kz', 'kz'), 35: ('vpmovsdw', 0, 'rm', 'kz', 'kz'), 36: ('vpmovsqw', 0, 'rm', 'kz', 'kz'), 37: ('vpmovsqd', 0, 'rm', 'kz', 'kz'), 38: ('vptestnmb', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmd', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2b', 0, 'r', 'kz', ''), 41: ('vpmovb2m', 0, 'rm', 'kz', 'bkz'), 48: ('vpmovwb', 0, 'rm', 'kz', 'kz'), 49: ('vpmovdb', 0, 'rm', 'kz', 'kz'), 50: ('vpmovqb', 0, 'rm', 'kz', 'kz'), 51: ('vpmovdw', 0, 'rm', 'kz', 'kz'), 52: ('vpmovqw', 0, 'rm', 'kz', 'kz'), 53: ('vpmovqd', 0, 'rm', 'kz', 'kz'), 56: ('vpmovm2d', 0, 'r', 'kz', ''), 57: ('vpmovd2m', 0, 'rm', 'kz', 'bkz'), 58: ('vpbroadcastmw2d', 0, 'r', 'kz', ''), 78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vdpbf16ps', 0, 'rm', 'kvz', 'bkvz'), 114: ('vcvtneps2bf16', 0, 'rm', 'kz', 'bkz')}, (2, 2, 1, 0): {38: ('vptestnmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2w', 0, 'r', 'kz', ''), 41: ('vpmovw2m', 0, 'rm', 'kz', 'bkz'), 42: ('vpbroadcastmb2q', 0, 'r', 'kz', ''), 56: ('vpmovm2q', 0, 'r', 'kz', ''), 57: ('vpmovq2m', 0, 'rm', 'kz', 'bkz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 2, 1, 1): {38: ('vptestnmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2w', 0, 'r', 'kz', ''), 41: ('vpmovw2m', 0, 'rm', 'kz', 'bkz'), 42: ('vpbroadcastmb2q', 0, 'r', 'kz', ''), 56: ('vpmovm2q', 0, 'r', 'kz', ''), 57: ('vpmovq2m', 0, 'rm', 'kz', 'bkz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 2, 1, 2): {38: ('vptestnmw', 0, 'rm', 'kvz', 'bkvz'), 39: ('vptestnmq', 0, 'rm', 'kvz', 'bkvz'), 40: ('vpmovm2w', 0, 'r', 'kz', ''), 41: ('vpmovw2m', 0, 'rm', 'kz', 'bkz'), 42: ('vpbroadcastmb2q', 0, 'r', 'kz', ''), 56: ('vpmovm2q', 0, 'r', 'kz', ''), 57: ('vpmovq2m', 0, 'rm', 'kz', 'bkz'), 78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz')}, (2, 3, 0, 0): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectd', 0, 'rm', 'bkvz', 'bkvz'), 114: ('vcvtne2ps2bf16', 0, 'rm', 'kvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (2, 3, 0, 1): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectd', 0, 'rm', 'bkvz', 'bkvz'), 114: ('vcvtne2ps2bf16', 0, 'rm', 'kvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (2, 3, 0, 2): {78: ('vrsqrt14ps', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectd', 0, 'rm', 'bkvz', 'bkvz'), 114: ('vcvtne2ps2bf16', 0, 'rm', 'kvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (2, 3, 1, 0): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectq', 0, 'rm', 'bkvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (2, 3, 1, 1): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectq', 0, 'rm', 'bkvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (2, 3, 1, 2): {78: ('vrsqrt14pd', 0, 'rm', 'kz', 'bkz'), 82: ('vp4dpwssd', 0, 'rm', 'kvz', 'kvz'), 83: ('vp4dpwssds', 0, 'rm', 'kvz', 'kvz'), 104: ('vp2intersectq', 0, 'rm', 'bkvz', 'bkvz'), 154: ('v4fmaddps', 0, 'm', '', 'kvz'), 155: ('v4fmaddss', 0, 'm', '', 'kvz'), 170: ('v4fnmaddps', 0, 'm', '', 'kvz'), 171: ('v4fnmaddss', 0, 'm', '', 'kvz')}, (3, 0, 0, 0): {8: ('vrndscaleph', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscalesh', 1, 'rm', 'bkvz', 'kvz'), 38: ('vgetmantph', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsh', 1, 'rm', 'bkvz', 'kvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 86: ('vreduceph', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesh', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassph', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssh', 1, 'rm', 'kz', 'kz'), 194: ('vcmpph', 1, 'rm', 'bkvz', 'bkvz')}, (3, 0, 0, 1): {8: ('vrndscaleph', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscalesh', 1, 'rm', 'bkvz', 'kvz'), 38: ('vgetmantph', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsh', 1, 'rm', 'bkvz', 'kvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 86: ('vreduceph', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesh', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassph', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssh', 1, 'rm', 'kz', 'kz'), 194: ('vcmpph', 1, 'rm', 'bkvz', 'bkvz')}, (3, 0, 0, 2): {8: ('vrndscaleph', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscalesh', 1, 'rm', 'bkvz', 'kvz'), 38: ('vgetmantph', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsh', 1, 'rm', 'bkvz', 'kvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 86: ('vreduceph', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesh', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassph', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssh', 1, 'rm', 'kz', 'kz'), 194: ('vcmpph', 1, 'rm', 'bkvz', 'bkvz')}, (3, 0, 1, 0): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 0, 1, 1): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 0, 1, 2): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 0, 0): {3: ('valignd', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpermilps', 1, 'rm', 'kz', 'bkz'), 8: ('vrndscaleps', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscaless', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 20: ('vpextrb', 1, 'rm', 'kz', 'kz'), 21: ('vpextrw', 1, 'rm', 'kz', 'kz'), 22: ('vpextrd', 1, 'rm', 'kz', 'kz'), 23: ('vextractps', 1, 'rm', 'kz', 'kz'), 29: ('vcvtps2ph', 1, 'rm', 'bkz', 'kz'), 30: ('vpcmpud', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpd', 1, 'rm', 'kvz', 'bkvz'), 32: ('vpinsrb', 1, 'rm', 'kvz', 'kvz'), 33: ('vinsertps', 1, 'rm', 'kvz', 'kvz'), 34: ('vpinsrd', 1, 'rm', 'kvz', 'kvz'), 37: ('vpternlogd', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantps', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantss', 1, 'rm', 'bkvz', 'kvz'), 62: ('vpcmpub', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpb', 1, 'rm', 'kvz', 'bkvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangeps', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangess', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmps', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmss', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreduceps', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducess', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassps', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclassss', 1, 'rm', 'kz', 'kz'), 113: ('vpshldd', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdd', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 0, 1): {3: ('valignd', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpermilps', 1, 'rm', 'kz', 'bkz'), 8: ('vrndscaleps', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscaless', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 24: ('vinsertf32x4', 1, 'rm', 'kvz', 'kvz'), 25: ('vextractf32x4', 1, 'rm', 'kz', 'kz'), 29: ('vcvtps2ph', 1, 'rm', 'bkz', 'kz'), 30: ('vpcmpud', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpd', 1, 'rm', 'kvz', 'bkvz'), 35: ('vshuff32x4', 1, 'rm', 'kvz', 'bkvz'), 37: ('vpternlogd', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantps', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantss', 1, 'rm', 'bkvz', 'kvz'), 56: ('vinserti32x4', 1, 'rm', 'kvz', 'kvz'), 57: ('vextracti32x4', 1, 'rm', 'kz', 'kz'), 62: ('vpcmpub', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpb', 1, 'rm', 'kvz', 'bkvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 67: ('vshufi32x4', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangeps', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangess', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmps', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmss', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreduceps', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducess', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassps', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclassss', 1, 'rm', 'kz', 'kz'), 113: ('vpshldd', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdd', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 0, 2): {3: ('valignd', 1, 'rm', 'kvz', 'bkvz'), 4: ('vpermilps', 1, 'rm', 'kz', 'bkz'), 8: ('vrndscaleps', 1, 'rm', 'bkz', 'bkz'), 10: ('vrndscaless', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 24: ('vinsertf32x4', 1, 'rm', 'kvz', 'kvz'), 25: ('vextractf32x4', 1, 'rm', 'kz', 'kz'), 26: ('vinsertf32x8', 1, 'rm', 'kvz', 'kvz'), 27: ('vextractf32x8', 1, 'rm', 'kz', 'kz'), 29: ('vcvtps2ph', 1, 'rm', 'bkz', 'kz'), 30: ('vpcmpud', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpd', 1, 'rm', 'kvz', 'bkvz'), 35: ('vshuff32x4', 1, 'rm', 'kvz', 'bkvz'), 37: ('vpternlogd', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantps', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantss', 1, 'rm', 'bkvz', 'kvz'), 56: ('vinserti32x4', 1, 'rm', 'kvz', 'kvz'), 57: ('vextracti32x4', 1, 'rm', 'kz', 'kz'), 58: ('vinserti32x8', 1, 'rm', 'kvz', 'kvz'), 59: ('vextracti32x8', 1, 'rm', 'kz', 'kz'), 62: ('vpcmpub', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpb', 1, 'rm', 'kvz', 'bkvz'), 66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 67: ('vshufi32x4', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangeps', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangess', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmps', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmss', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreduceps', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducess', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclassps', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclassss', 1, 'rm', 'kz', 'kz'), 113: ('vpshldd', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdd', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 1, 0): {3: ('valignq', 1, 'rm', 'kvz', 'bkvz'), 5: ('vpermilpd', 1, 'rm', 'kz', 'bkz'), 9: ('vrndscalepd', 1, 'rm', 'bkz', 'bkz'), 11: ('vrndscalesd', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 20: ('vpextrb', 1, 'rm', 'kz', 'kz'), 21: ('vpextrw', 1, 'rm', 'kz', 'kz'), 22: ('vpextrq', 1, 'rm', 'kz', 'kz'), 23: ('vextractps', 1, 'rm', 'kz', 'kz'), 30: ('vpcmpuq', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpq', 1, 'rm', 'kvz', 'bkvz'), 32: ('vpinsrb', 1, 'rm', 'kvz', 'kvz'), 34: ('vpinsrq', 1, 'rm', 'kvz', 'kvz'), 37: ('vpternlogq', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantpd', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsd', 1, 'rm', 'bkvz', 'kvz'), 62: ('vpcmpuw', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpw', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangepd', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangesd', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmpd', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmsd', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreducepd', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesd', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclasspd', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssd', 1, 'rm', 'kz', 'kz'), 112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 113: ('vpshldq', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdq', 1, 'rm', 'kvz', 'bkvz'), 206: ('vgf2p8affineqb', 1, 'rm', 'kvz', 'bkvz'), 207: ('vgf2p8affineinvqb', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 1, 1): {0: ('vpermq', 1, 'rm', 'kz', 'bkz'), 1: ('vpermpd', 1, 'rm', 'kz', 'bkz'), 3: ('valignq', 1, 'rm', 'kvz', 'bkvz'), 5: ('vpermilpd', 1, 'rm', 'kz', 'bkz'), 9: ('vrndscalepd', 1, 'rm', 'bkz', 'bkz'), 11: ('vrndscalesd', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 24: ('vinsertf64x2', 1, 'rm', 'kvz', 'kvz'), 25: ('vextractf64x2', 1, 'rm', 'kz', 'kz'), 30: ('vpcmpuq', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpq', 1, 'rm', 'kvz', 'bkvz'), 35: ('vshuff64x2', 1, 'rm', 'kvz', 'bkvz'), 37: ('vpternlogq', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantpd', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsd', 1, 'rm', 'bkvz', 'kvz'), 56: ('vinserti64x2', 1, 'rm', 'kvz', 'kvz'), 57: ('vextracti64x2', 1, 'rm', 'kz', 'kz'), 62: ('vpcmpuw', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpw', 1, 'rm', 'kvz', 'bkvz'), 67: ('vshufi64x2', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangepd', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangesd', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmpd', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmsd', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreducepd', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesd', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclasspd', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssd', 1, 'rm', 'kz', 'kz'), 112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 113: ('vpshldq', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdq', 1, 'rm', 'kvz', 'bkvz'), 206: ('vgf2p8affineqb', 1, 'rm', 'kvz', 'bkvz'), 207: ('vgf2p8affineinvqb', 1, 'rm', 'kvz', 'bkvz')}, (3, 1, 1, 2): {0: ('vpermq', 1, 'rm', 'kz', 'bkz'), 1: ('vpermpd', 1, 'rm', 'kz', 'bkz'), 3: ('valignq', 1, 'rm', 'kvz', 'bkvz'), 5: ('vpermilpd', 1, 'rm', 'kz', 'bkz'), 9: ('vrndscalepd', 1, 'rm', 'bkz', 'bkz'), 11: ('vrndscalesd', 1, 'rm', 'bkvz', 'kvz'), 15: ('vpalignr', 1, 'rm', 'kvz', 'bkvz'), 24: ('vinsertf64x2', 1, 'rm', 'kvz', 'kvz'), 25: ('vextractf64x2', 1, 'rm', 'kz', 'kz'), 26: ('vinsertf64x4', 1, 'rm', 'kvz', 'kvz'), 27: ('vextractf64x4', 1, 'rm', 'kz', 'kz'), 30: ('vpcmpuq', 1, 'rm', 'kvz', 'bkvz'), 31: ('vpcmpq', 1, 'rm', 'kvz', 'bkvz'), 35: ('vshuff64x2', 1, 'rm', 'kvz', 'bkvz'), 37: ('vpternlogq', 1, 'rm', 'kvz', 'bkvz'), 38: ('vgetmantpd', 1, 'rm', 'bkz', 'bkz'), 39: ('vgetmantsd', 1, 'rm', 'bkvz', 'kvz'), 56: ('vinserti64x2', 1, 'rm', 'kvz', 'kvz'), 57: ('vextracti64x2', 1, 'rm', 'kz', 'kz'), 58: ('vinserti64x4', 1, 'rm', 'kvz', 'kvz'), 59: ('vextracti64x4', 1, 'rm', 'kz', 'kz'), 62: ('vpcmpuw', 1, 'rm', 'kvz', 'bkvz'), 63: ('vpcmpw', 1, 'rm', 'kvz', 'bkvz'), 67: ('vshufi64x2', 1, 'rm', 'kvz', 'bkvz'), 68: ('vpclmulqdq', 1, 'rm', 'kvz', 'bkvz'), 80: ('vrangepd', 1, 'rm', 'bkvz', 'bkvz'), 81: ('vrangesd', 1, 'rm', 'bkvz', 'kvz'), 84: ('vfixupimmpd', 1, 'rm', 'bkvz', 'bkvz'), 85: ('vfixupimmsd', 1, 'rm', 'bkvz', 'kvz'), 86: ('vreducepd', 1, 'rm', 'bkz', 'bkz'), 87: ('vreducesd', 1, 'rm', 'bkvz', 'kvz'), 102: ('vfpclasspd', 1, 'rm', 'kz', 'bkz'), 103: ('vfpclasssd', 1, 'rm', 'kz', 'kz'), 112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 113: ('vpshldq', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz'), 115: ('vpshrdq', 1, 'rm', 'kvz', 'bkvz'), 206: ('vgf2p8affineqb', 1, 'rm', 'kvz', 'bkvz'), 207: ('vgf2p8affineinvqb', 1, 'rm', 'kvz', 'bkvz')}, (3, 2, 0, 0): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 194: ('vcmpsh', 1, 'rm', 'bkvz', 'kvz')}, (3, 2, 0, 1): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 194: ('vcmpsh', 1, 'rm', 'bkvz', 'kvz')}, (3, 2, 0, 2): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz'), 194: ('vcmpsh', 1, 'rm', 'bkvz', 'kvz')}, (3, 2, 1, 0): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 2, 1, 1): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 2, 1, 2): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 0, 0): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 0, 1): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 0, 2): {66: ('vdbpsadbw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 1, 0): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 1, 1): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (3, 3, 1, 2): {112: ('vpshldw', 1, 'rm', 'kvz', 'bkvz'), 114: ('vpshrdw', 1, 'rm', 'kvz', 'bkvz')}, (5, 0, 0, 0): {29: ('vcvtss2sh', 0, 'rm', 'bkvz', 'kvz'), 46: ('vucomish', 0, 'rm', 'bkz', 'kz'), 47: ('vcomish', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtph', 0, 'rm', 'bkz', 'bkz'), 88: ('vaddph', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulph', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtph2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ph', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubph', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminph', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivph', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxph', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttph2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2udq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2uw', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2uw', 0, 'rm', 'bkz', 'bkz')}, (5, 0, 0, 1): {29: ('vcvtss2sh', 0, 'rm', 'bkvz', 'kvz'), 46: ('vucomish', 0, 'rm', 'bkz', 'kz'), 47: ('vcomish', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtph', 0, 'rm', 'bkz', 'bkz'), 88: ('vaddph', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulph', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtph2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ph', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubph', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminph', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivph', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxph', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttph2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2udq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2uw', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2uw', 0, 'rm', 'bkz', 'bkz')}, (5, 0, 0, 2): {29: ('vcvtss2sh', 0, 'rm', 'bkvz', 'kvz'), 46: ('vucomish', 0, 'rm', 'bkz', 'kz'), 47: ('vcomish', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtph', 0, 'rm', 'bkz', 'bkz'), 88: ('vaddph', 0, 'rm', 'bkvz', 'bkvz'), 89: ('vmulph', 0, 'rm', 'bkvz', 'bkvz'), 90: ('vcvtph2pd', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtdq2ph', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubph', 0, 'rm', 'bkvz', 'bkvz'), 93: ('vminph', 0, 'rm', 'bkvz', 'bkvz'), 94: ('vdivph', 0, 'rm', 'bkvz', 'bkvz'), 95: ('vmaxph', 0, 'rm', 'bkvz', 'bkvz'), 120: ('vcvttph2udq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2udq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2uw', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2uw', 0, 'rm', 'bkz', 'bkz')}, (5, 0, 1, 0): {91: ('vcvtqq2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 0, 1, 1): {91: ('vcvtqq2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 0, 1, 2): {91: ('vcvtqq2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 1, 0, 0): {29: ('vcvtps2phx', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtph2dq', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 120: ('vcvttph2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttph2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtph2qq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2w', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2w', 0, 'rm', 'bkz', 'bkz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 1, 0, 1): {29: ('vcvtps2phx', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtph2dq', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 120: ('vcvttph2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttph2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtph2qq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2w', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2w', 0, 'rm', 'bkz', 'bkz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 1, 0, 2): {29: ('vcvtps2phx', 0, 'rm', 'bkz', 'bkz'), 91: ('vcvtph2dq', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 120: ('vcvttph2uqq', 0, 'rm', 'bkz', 'bkz'), 121: ('vcvtph2uqq', 0, 'rm', 'bkz', 'bkz'), 122: ('vcvttph2qq', 0, 'rm', 'bkz', 'bkz'), 123: ('vcvtph2qq', 0, 'rm', 'bkz', 'bkz'), 124: ('vcvttph2w', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtph2w', 0, 'rm', 'bkz', 'bkz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 1, 1, 0): {90: ('vcvtpd2ph', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 1, 1, 1): {90: ('vcvtpd2ph', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 1, 1, 2): {90: ('vcvtpd2ph', 0, 'rm', 'bkz', 'bkz'), 110: ('vmovw', 0, 'rm', 'kz', 'kz'), 126: ('vmovw', 0, 'rm', 'kz', 'kz')}, (5, 2, 0, 0): {16: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsh', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsh', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsh', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsh2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttph2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubsh', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsh', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsh', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsh', 0, 'rm', 'bkvz', 'kvz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz'), 125: ('vcvtw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 2, 0, 1): {16: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsh', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsh', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsh', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsh2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttph2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubsh', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsh', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsh', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsh', 0, 'rm', 'bkvz', 'kvz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz'), 125: ('vcvtw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 2, 0, 2): {16: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 17: ('vmovsh', 0, 'rm', 'kvz', 'kz'), 42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 81: ('vsqrtsh', 0, 'rm', 'bkvz', 'kvz'), 88: ('vaddsh', 0, 'rm', 'bkvz', 'kvz'), 89: ('vmulsh', 0, 'rm', 'bkvz', 'kvz'), 90: ('vcvtsh2sd', 0, 'rm', 'bkvz', 'kvz'), 91: ('vcvttph2dq', 0, 'rm', 'bkz', 'bkz'), 92: ('vsubsh', 0, 'rm', 'bkvz', 'kvz'), 93: ('vminsh', 0, 'rm', 'bkvz', 'kvz'), 94: ('vdivsh', 0, 'rm', 'bkvz', 'kvz'), 95: ('vmaxsh', 0, 'rm', 'bkvz', 'kvz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz'), 125: ('vcvtw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 2, 1, 0): {42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz')}, (5, 2, 1, 1): {42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz')}, (5, 2, 1, 2): {42: ('vcvtsi2sh', 0, 'rm', 'bkvz', 'kvz'), 44: ('vcvttsh2si', 0, 'rm', 'bkz', 'kz'), 45: ('vcvtsh2si', 0, 'rm', 'bkz', 'kz'), 120: ('vcvttsh2usi', 0, 'rm', 'bkz', 'kz'), 121: ('vcvtsh2usi', 0, 'rm', 'bkz', 'kz'), 123: ('vcvtusi2sh', 0, 'rm', 'bkvz', 'kvz')}, (5, 3, 0, 0): {122: ('vcvtudq2ph', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtuw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 3, 0, 1): {122: ('vcvtudq2ph', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtuw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 3, 0, 2): {122: ('vcvtudq2ph', 0, 'rm', 'bkz', 'bkz'), 125: ('vcvtuw2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 3, 1, 0): {90: ('vcvtsd2sh', 0, 'rm', 'bkvz', 'kvz'), 122: ('vcvtuqq2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 3, 1, 1): {90: ('vcvtsd2sh', 0, 'rm', 'bkvz', 'kvz'), 122: ('vcvtuqq2ph', 0, 'rm', 'bkz', 'bkz')}, (5, 3, 1, 2): {90: ('vcvtsd2sh', 0, 'rm', 'bkvz', 'kvz'), 122: ('vcvtuqq2ph', 0, 'rm', 'bkz', 'bkz')}, (6, 0, 0, 0): {19: ('vcvtsh2ss', 0, 'rm', 'bkvz', 'kvz')}, (6, 0, 0, 1): {19: ('vcvtsh2ss', 0, 'rm', 'bkvz', 'kvz')}, (6, 0, 0, 2): {19: ('vcvtsh2ss', 0, 'rm', 'bkvz', 'kvz')}, (6, 1, 0, 0): {19: ('vcvtph2psx', 0, 'rm', 'bkz', 'bkz'), 44: ('vscalefph', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsh', 0, 'rm', 'bkvz', 'kvz'), 66: ('vgetexpph', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsh', 0, 'rm', 'bkvz', 'kvz'), 76: ('vrcpph', 0, 'rm', 'kz', 'bkz'), 77: ('vrcpsh', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrtph', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrtsh', 0, 'rm', 'kvz', 'kvz'), 150: ('vfmaddsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 166: ('vfmaddsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 182: ('vfmaddsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sh', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sh', 0, 'rm', 'bkvz', 'kvz')}, (6, 1, 0, 1): {19: ('vcvtph2psx', 0, 'rm', 'bkz', 'bkz'), 44: ('vscalefph', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsh', 0, 'rm', 'bkvz', 'kvz'), 66: ('vgetexpph', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsh', 0, 'rm', 'bkvz', 'kvz'), 76: ('vrcpph', 0, 'rm', 'kz', 'bkz'), 77: ('vrcpsh', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrtph', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrtsh', 0, 'rm', 'kvz', 'kvz'), 150: ('vfmaddsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 166: ('vfmaddsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 182: ('vfmaddsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sh', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sh', 0, 'rm', 'bkvz', 'kvz')}, (6, 1, 0, 2): {19: ('vcvtph2psx', 0, 'rm', 'bkz', 'bkz'), 44: ('vscalefph', 0, 'rm', 'bkvz', 'bkvz'), 45: ('vscalefsh', 0, 'rm', 'bkvz', 'kvz'), 66: ('vgetexpph', 0, 'rm', 'bkz', 'bkz'), 67: ('vgetexpsh', 0, 'rm', 'bkvz', 'kvz'), 76: ('vrcpph', 0, 'rm', 'kz', 'bkz'), 77: ('vrcpsh', 0, 'rm', 'kvz', 'kvz'), 78: ('vrsqrtph', 0, 'rm', 'kz', 'bkz'), 79: ('vrsqrtsh', 0, 'rm', 'kvz', 'kvz'), 150: ('vfmaddsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 151: ('vfmsubadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 152: ('vfmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 153: ('vfmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 154: ('vfmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 155: ('vfmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 156: ('vfnmadd132ph', 0, 'rm', 'bkvz', 'bkvz'), 157: ('vfnmadd132sh', 0, 'rm', 'bkvz', 'kvz'), 158: ('vfnmsub132ph', 0, 'rm', 'bkvz', 'bkvz'), 159: ('vfnmsub132sh', 0, 'rm', 'bkvz', 'kvz'), 166: ('vfmaddsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 167: ('vfmsubadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 168: ('vfmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 169: ('vfmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 170: ('vfmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 171: ('vfmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 172: ('vfnmadd213ph', 0, 'rm', 'bkvz', 'bkvz'), 173: ('vfnmadd213sh', 0, 'rm', 'bkvz', 'kvz'), 174: ('vfnmsub213ph', 0, 'rm', 'bkvz', 'bkvz'), 175: ('vfnmsub213sh', 0, 'rm', 'bkvz', 'kvz'), 182: ('vfmaddsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 183: ('vfmsubadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 184: ('vfmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 185: ('vfmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 186: ('vfmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 187: ('vfmsub231sh', 0, 'rm', 'bkvz', 'kvz'), 188: ('vfnmadd231ph', 0, 'rm', 'bkvz', 'bkvz'), 189: ('vfnmadd231sh', 0, 'rm', 'bkvz', 'kvz'), 190: ('vfnmsub231ph', 0, 'rm', 'bkvz', 'bkvz'), 191: ('vfnmsub231sh', 0, 'rm', 'bkvz', 'kvz')}, (6, 2, 0, 0): {86: {0: ('vfmaddcph', 0, 's', '', ''), 1: ('vfmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfmaddcsh', 0, 's', '', ''), 1: ('vfmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfmulcph', 0, 's', '', ''), 1: ('vfmulcph', 0, 'm', '', 'bkvz'), 2: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfmulcsh', 0, 's', '', ''), 1: ('vfmulcsh', 0, 'm', '', 'kvz'), 2: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz')}}, (6, 2, 0, 1): {86: {0: ('vfmaddcph', 0, 's', '', ''), 1: ('vfmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfmaddcsh', 0, 's', '', ''), 1: ('vfmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfmulcph', 0, 's', '', ''), 1: ('vfmulcph', 0, 'm', '', 'bkvz'), 2: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfmulcsh', 0, 's', '', ''), 1: ('vfmulcsh', 0, 'm', '', 'kvz'), 2: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz')}}, (6, 2, 0, 2): {86: {0: ('vfmaddcph', 0, 's', '', ''), 1: ('vfmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfmaddcsh', 0, 's', '', ''), 1: ('vfmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfmulcph', 0, 's', '', ''), 1: ('vfmulcph', 0, 'm', '', 'bkvz'), 2: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfmulcsh', 0, 's', '', ''), 1: ('vfmulcsh', 0, 'm', '', 'kvz'), 2: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfmulcsh', 0, 'rm', 'bkvz', 'kvz')}}, (6, 3, 0, 0): {86: {0: ('vfcmaddcph', 0, 's', '', ''), 1: ('vfcmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfcmaddcsh', 0, 's', '', ''), 1: ('vfcmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfcmulcph', 0, 's', '', ''), 1: ('vfcmulcph', 0, 'm', '', 'bkvz'), 2: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfcmulcsh', 0, 's', '', ''), 1: ('vfcmulcsh', 0, 'm', '', 'kvz'), 2: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz')}}, (6, 3, 0, 1): {86: {0: ('vfcmaddcph', 0, 's', '', ''), 1: ('vfcmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfcmaddcsh', 0, 's', '', ''), 1: ('vfcmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfcmulcph', 0, 's', '', ''), 1: ('vfcmulcph', 0, 'm', '', 'bkvz'), 2: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfcmulcsh', 0, 's', '', ''), 1: ('vfcmulcsh', 0, 'm', '', 'kvz'), 2: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz')}}, (6, 3, 0, 2): {86: {0: ('vfcmaddcph', 0, 's', '', ''), 1: ('vfcmaddcph', 0, 'm', '', 'bkvz'), 2: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmaddcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmaddcph', 0, 'rm', 'bkvz', 'bkvz')}, 87: {0: ('vfcmaddcsh', 0, 's', '', ''), 1: ('vfcmaddcsh', 0, 'm', '', 'kvz'), 2: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmaddcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmaddcsh', 0, 'rm', 'bkvz', 'kvz')}, 214: {0: ('vfcmulcph', 0, 's', '', ''), 1: ('vfcmulcph', 0, 'm', '', 'bkvz'), 2: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 3: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 4: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 5: ('vfcmulcph', 0, 'rm', 'bkz', 'bkz'), 6: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz'), 7: ('vfcmulcph', 0, 'rm', 'bkvz', 'bkvz')}, 215: {0: ('vfcmulcsh', 0, 's', '', ''), 1: ('vfcmulcsh', 0, 'm', '', 'kvz'), 2: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 3: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 4: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 5: ('vfcmulcsh', 0, 'rm', 'bkz', 'kz'), 6: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz'), 7: ('vfcmulcsh', 0, 'rm', 'bkvz', 'kvz')}}}
