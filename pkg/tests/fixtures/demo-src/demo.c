
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
