#!/usr/bin/env python3
"""Build the checked-in end-to-end fixtures.

Compiles a small marker-annotated C program twice: once as-is and once
after excising the PARSER feature with the debloater.  The two binaries
plus the golden delta reports land under tests/fixtures/; tests never
recompile them.  Rerunning this script on a different toolchain will
change the binaries and goldens together.
"""

import subprocess
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gadgetscope.cli import main as cli_main  # noqa: E402
from gadgetscope.debloat import (DebloatConfig, excise_features,  # noqa: E402
                                 scan_markers)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"

DEMO_C = r"""
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static unsigned mix(unsigned x) {
    x ^= x >> 13;
    x *= 0x5bd1e995u;
    x ^= x >> 15;
    return x;
}

/*~feature:begin PARSER*/
static int parse_record(const char *line, unsigned *out) {
    unsigned acc = 0;
    int seen = 0;
    while (*line) {
        if (*line >= '0' && *line <= '9') {
            acc = acc * 10u + (unsigned)(*line - '0');
            seen = 1;
        } else if (*line == ':') {
            acc = mix(acc);
        } else if (*line != ' ') {
            return -1;
        }
        line++;
    }
    if (!seen)
        return -1;
    *out = acc;
    return 0;
}

static unsigned parse_all(int count, char **lines) {
    unsigned total = 0;
    for (int i = 0; i < count; i++) {
        unsigned v = 0;
        if (parse_record(lines[i], &v) == 0)
            total += v;
        else
            total = mix(total ^ 0x9e3779b9u);
    }
    return total;
}
/*~feature:end PARSER*/

static unsigned checksum(const unsigned char *buf, size_t n) {
    unsigned h = 2166136261u;
    for (size_t i = 0; i < n; i++) {
        h ^= buf[i];
        h *= 16777619u;
    }
    return h;
}

int main(int argc, char **argv) {
    unsigned acc = checksum((const unsigned char *)"seed", 4);
/*~feature:begin PARSER*/
    if (argc > 1)
        acc ^= parse_all(argc - 1, argv + 1);
/*~feature:end PARSER*/
    for (int i = 0; i < 16; i++)
        acc = mix(acc + (unsigned)i);
    printf("%08x\n", acc);
    return (int)(acc & 1);
}
"""


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    src = FIXTURES / "demo-src"
    src.mkdir(exist_ok=True)
    (src / "demo.c").write_text(DEMO_C)

    variant_src = FIXTURES / "demo-src-variant"
    fmap = scan_markers(src)
    excise_features(src, fmap, DebloatConfig(frozenset({"PARSER"}),
                                             "aggressive"), variant_src)

    cc = ["gcc", "-O2", "-fno-plt", "-s", "-o"]
    subprocess.run(cc + [str(FIXTURES / "demo-orig.bin"),
                         str(src / "demo.c")], check=True)
    subprocess.run(cc + [str(FIXTURES / "demo-variant.bin"),
                         str(variant_src / "demo.c")], check=True)

    # golden delta reports, via the public CLI
    import contextlib
    import io
    for fmt, name in (("json", "golden_delta.json"),
                      ("text", "golden_delta.txt")):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = cli_main(["diff", str(FIXTURES / "demo-orig.bin"),
                           str(FIXTURES / "demo-variant.bin"),
                           "--original-label", "O", "--variant-label", "A",
                           "--format", fmt, "--ascii"])
        assert rc == 0
        (FIXTURES / name).write_text(buf.getvalue())

    import json
    doc = json.loads((FIXTURES / "golden_delta.json").read_text())
    introduced = doc["introduced_counts"]["total"]
    print(f"introduced gadgets in variant: {introduced}")
    assert introduced > 0, "fixture must introduce gadgets"
    print("fixtures written to", FIXTURES)


if __name__ == "__main__":
    main()
