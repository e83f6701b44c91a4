// Copyright 2026 The qpcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/rng.hpp"

namespace qpc {

// Digest bits ordered highest index first: bits.front() is the top bit and
// bits.back() is bit zero, the first one consumed by the pair encoder.
struct hash_digest {
  std::vector<std::uint8_t> bits;

  int length() const { return static_cast<int>(bits.size()); }

  // MSB-first hex, right-padded with zero bits to a whole hex digit.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
      int nibble = 0;
      for (std::size_t b = 0; b < 4; ++b)
        nibble = nibble * 2 + (i + b < bits.size() ? bits[i + b] : 0);
      out.push_back(digits[nibble]);
    }
    return out;
  }

  friend bool operator==(const hash_digest&, const hash_digest&) = default;
};

// Keyed sponge over the mixing step: absorbs one position-salted byte per
// round, then squeezes 64-bit words MSB-first until hash_len bits exist.
// This is a toy hash for simulation, not a cryptographic one.
inline hash_digest keyed_hash(std::uint64_t key, std::string_view message,
                              int hash_len) {
  if (hash_len < 1) throw std::invalid_argument("keyed_hash: hash_len must be >= 1");
  std::uint64_t state = key;
  for (std::size_t i = 0; i < message.size(); ++i) {
    const auto byte = static_cast<std::uint64_t>(static_cast<unsigned char>(message[i]));
    state = mix64_once(state ^ (byte + 0x100ull * (i % 251)));
  }
  hash_digest digest;
  digest.bits.reserve(static_cast<std::size_t>(hash_len));
  std::uint64_t s = state;
  while (digest.length() < hash_len) {
    const std::uint64_t z = mix64(s);
    for (int k = 63; k >= 0 && digest.length() < hash_len; --k)
      digest.bits.push_back(static_cast<std::uint8_t>((z >> k) & 1u));
  }
  return digest;
}

// First n_sampling entries of a seeded Fisher-Yates shuffle of [0, n_total).
// Both participants call this with the shared secret l, so they agree on the
// sampling-pair positions without communicating them.
inline std::vector<int> sampling_positions(std::uint64_t l, int n_total,
                                           int n_sampling) {
  if (n_total < 0 || n_sampling < 0 || n_sampling > n_total)
    throw std::invalid_argument("sampling_positions: need 0 <= n_sampling <= n_total");
  std::vector<int> slots(static_cast<std::size_t>(n_total));
  std::iota(slots.begin(), slots.end(), 0);
  rng_stream rs(l);
  for (int i = n_total - 1; i >= 1; --i) {
    const auto j = static_cast<int>(rs.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
  }
  slots.resize(static_cast<std::size_t>(n_sampling));
  return slots;
}

// One line of the plain-text fixture file: inputs plus the frozen digest.
struct hash_vector {
  std::uint64_t key = 0;
  std::string message;
  int hash_len = 0;
  hash_digest digest;
};

namespace detail {

inline int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("bad hex digit: ") + c);
}

inline std::string hex_to_bytes(std::string_view hex) {
  if (hex.size() % 2 != 0)
    throw std::invalid_argument("hex byte string has odd length");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(hex_nibble(hex[i]) * 16 + hex_nibble(hex[i + 1])));
  return out;
}

inline hash_digest hex_to_digest(std::string_view hex, int hash_len) {
  if (static_cast<int>(hex.size()) != (hash_len + 3) / 4)
    throw std::invalid_argument("digest hex length does not match hash_len");
  hash_digest d;
  d.bits.reserve(static_cast<std::size_t>(hash_len));
  for (char c : hex) {
    const int nibble = hex_nibble(c);
    for (int b = 3; b >= 0; --b) {
      const auto bit = static_cast<std::uint8_t>((nibble >> b) & 1);
      if (d.length() < hash_len) {
        d.bits.push_back(bit);
      } else if (bit != 0) {
        throw std::invalid_argument("digest hex has nonzero padding bits");
      }
    }
  }
  return d;
}

}  // namespace detail

// Parses the fixture file: `key_hex msg_hex hash_len digest_hex` per line,
// `#` comments and blank lines skipped, `-` for the empty message.
inline std::vector<hash_vector> load_hash_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open hash vector file: " + path);
  std::vector<hash_vector> vectors;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string key_hex, msg_hex, digest_hex;
    int hash_len = 0;
    if (!(fields >> key_hex >> msg_hex >> hash_len >> digest_hex))
      throw std::invalid_argument("malformed hash vector line: " + line);
    hash_vector v;
    v.key = std::stoull(key_hex, nullptr, 16);
    v.message = msg_hex == "-" ? std::string() : detail::hex_to_bytes(msg_hex);
    v.hash_len = hash_len;
    v.digest = detail::hex_to_digest(digest_hex, hash_len);
    vectors.push_back(std::move(v));
  }
  return vectors;
}

// Recomputes every vector and returns how many digests disagree.
inline int verify_hash_vectors(const std::vector<hash_vector>& vectors) {
  int mismatches = 0;
  for (const auto& v : vectors)
    if (!(keyed_hash(v.key, v.message, v.hash_len) == v.digest)) ++mismatches;
  return mismatches;
}

}  // namespace qpc
