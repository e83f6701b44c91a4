#!/usr/bin/env python3
# Copyright 2026 The qpcsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference generator for the frozen test vectors.

Implements the 64-bit mixing step, the keyed sponge hash, and the seeded
partial shuffle directly in Python big-integer arithmetic, with no code shared
with the C++ library. Running it rewrites data/hash_vectors.txt and prints the
constants that are frozen into the C++ tests; any change to the printed values
indicates a break in bit-compatibility.

Usage: python3 scripts/reference_vectors.py [repo_root]
"""

import os
import sys

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(state):
    """One mixing step: returns (output, new_state)."""
    state = (state + GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    z = z ^ (z >> 31)
    return z, state


def mix64_value(v):
    return mix64(v)[0]


def keyed_hash_bits(key, msg, hash_len):
    """Digest of `msg` under `key`, as a list of bits, highest index first."""
    assert hash_len >= 1
    state = key
    for i, b in enumerate(msg):
        state = mix64_value(state ^ (b + 0x100 * (i % 251)))
    bits = []
    s = state
    while len(bits) < hash_len:
        z, s = mix64(s)
        for k in range(63, -1, -1):
            if len(bits) == hash_len:
                break
            bits.append((z >> k) & 1)
    return bits


def bits_to_hex(bits):
    """MSB-first hex, right-padded with zero bits to a whole hex digit."""
    padded = bits + [0] * (-len(bits) % 4)
    out = []
    for i in range(0, len(padded), 4):
        nibble = padded[i] * 8 + padded[i + 1] * 4 + padded[i + 2] * 2 + padded[i + 3]
        out.append("0123456789abcdef"[nibble])
    return "".join(out)


def sampling_positions(l, n_total, n_sampling):
    """First n_sampling entries of a Fisher-Yates shuffle of [0, n_total)."""
    assert 0 <= n_sampling <= n_total
    a = list(range(n_total))
    s = l
    for i in range(n_total - 1, 0, -1):
        z, s = mix64(s)
        j = z % (i + 1)
        a[i], a[j] = a[j], a[i]
    return a[:n_sampling]


def encode_ops(bit_string):
    """Op codes for a digest written highest-index bit first ("x3x2x1x0")."""
    bits = [int(c) for c in bit_string]
    if len(bits) % 2 == 1:
        bits = [0] + bits
    m = len(bits)
    ops = []
    for k in range(m // 2):
        x_2k = bits[m - 1 - 2 * k]      # drives the bit-flip component
        x_2k1 = bits[m - 2 - 2 * k]     # drives the phase-flip component
        ops.append(f"{x_2k}{x_2k1}")
    return ops


HASH_VECTOR_INPUTS = [
    (0x0000000000000000, b"", 64),
    (0x0000000000000001, b"", 64),
    (0x0123456789ABCDEF, b"x", 16),
    (0xDEADBEEFCAFEBABE, b"abc", 64),
    (0xDEADBEEFCAFEBABE, b"abd", 64),
    (0x0000000000000000, b"The quick brown fox jumps over the lazy dog", 128),
    (0xFFFFFFFFFFFFFFFF, b"a", 1),
    (0xFFFFFFFFFFFFFFFF, b"a", 13),
    (0x9E3779B97F4A7C15, b"compare", 200),
    (0x1111111111111111, b"xyxyxyxy", 8),
    (0x000000000000002A, b"equal-inputs", 64),
    (0x000000000000002B, b"equal-inputs", 64),
]


def write_hash_vectors(path):
    lines = [
        "# keyed-hash test vectors: key_hex msg_hex hash_len digest_hex",
        "# msg \"-\" denotes the empty message; digest bits are MSB-first and",
        "# right-padded with zero bits to a whole number of hex digits.",
    ]
    for key, msg, hash_len in HASH_VECTOR_INPUTS:
        msg_hex = msg.hex() if msg else "-"
        digest = bits_to_hex(keyed_hash_bits(key, msg, hash_len))
        lines.append(f"{key:016x} {msg_hex} {hash_len} {digest}")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    return lines


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

    print("== mix64 single outputs (input -> output) ==")
    for v in [0, 1, 2, 42, 0xDEADBEEF, GOLDEN, MASK64]:
        print(f"  mix64({v:#018x}) = {mix64_value(v):#018x}")

    print("== mix64 stream from state 1, first 4 outputs ==")
    s = 1
    outs = []
    for _ in range(4):
        z, s = mix64(s)
        outs.append(z)
    print("  " + ", ".join(f"{z:#018x}" for z in outs))

    print("== keyed hash spot vectors ==")
    for key, msg, hash_len in HASH_VECTOR_INPUTS:
        digest = bits_to_hex(keyed_hash_bits(key, msg, hash_len))
        print(f"  key={key:016x} msg={msg!r} len={hash_len} digest={digest}")

    print("== sampling positions ==")
    for l, n, k in [(42, 10, 4), (42, 10, 10), (7, 5, 3), (123456789, 16, 8), (0, 1, 1)]:
        print(f"  sampling_positions({l}, {n}, {k}) = {sampling_positions(l, n, k)}")

    print("== digest-to-op encodings (digest written x'_top..x'_0) ==")
    for h in ["1011", "00", "101", "0000", "1", "111111"]:
        print(f"  encode({h}) = {encode_ops(h)}")

    path = os.path.join(root, "data", "hash_vectors.txt")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    write_hash_vectors(path)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
