#!/usr/bin/env python3
"""Regenerates the reference fixtures in this directory.

The values are computed here from first principles (exact integer square
roots and brute-force bit tests), independently of the Rust code, so the
`verify` command has something external to compare against without network
access. Indices follow the OEIS numbering of each sequence; the fibbinary
file starts at index 1.
"""

from math import isqrt
from pathlib import Path

COUNT = 200
HERE = Path(__file__).resolve().parent


def floor_phi(m):
    """floor(m * phi) for m >= 0."""
    return (m + isqrt(5 * m * m)) // 2


def floor_phi2(m):
    """floor(m * phi^2) for m >= 0."""
    return (3 * m + isqrt(5 * m * m)) // 2


def fibonacci(i):
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def array_cell(n, k):
    return floor_phi(n + 1) * fibonacci(k + 1) + n * fibonacci(k)


def fibbinary(count, odd_only=False):
    out, m = [], 1
    while len(out) < count:
        if m & (m >> 1) == 0 and (not odd_only or m % 2 == 1):
            out.append(m)
        m += 1
    return out


def fractal(count):
    row_of = {}
    n = 0
    while array_cell(n, 1) <= count:
        k = 1
        while array_cell(n, k) <= count:
            row_of[array_cell(n, k)] = n + 1
            k += 1
        n += 1
    return [row_of[v] for v in range(1, count + 1)]


def antidiagonals(count):
    out, d = [], 1
    while len(out) < count:
        for j in range(1, d + 1):
            out.append(array_cell(j - 1, d - j + 1))
        d += 1
    return out[:count]


FIXTURES = {
    "A000201": (1, [floor_phi(n) for n in range(1, COUNT + 1)]),
    "A001950": (1, [floor_phi2(n) for n in range(1, COUNT + 1)]),
    "A003622": (1, [floor_phi2(n) - 1 for n in range(1, COUNT + 1)]),
    "A022342": (1, [floor_phi(n) - 1 for n in range(1, COUNT + 1)]),
    "A003714": (1, fibbinary(COUNT)),
    "A022341": (0, fibbinary(COUNT, odd_only=True)),
    "A003603": (1, fractal(COUNT)),
    "A035513": (1, antidiagonals(210)),
}


def main():
    for seq_id, (offset, terms) in FIXTURES.items():
        lines = [f"# {seq_id} {offset}"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
        (HERE / f"{seq_id}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
