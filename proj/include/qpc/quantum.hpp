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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/rng.hpp"

namespace qpc {

// One of the four maximally entangled photon-pair states, tracked as two
// bits. parity 0 is the Phi family (photons agree in the computational
// basis), parity 1 the Psi family; phase selects the +/- superposition sign.
struct bell_code {
  std::uint8_t parity = 0;
  std::uint8_t phase = 0;

  friend constexpr bool operator==(const bell_code&, const bell_code&) = default;
};

inline constexpr std::array<bell_code, 4> all_bell_codes{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

constexpr const char* to_label(bell_code b) {
  constexpr const char* labels[4] = {"Phi+", "Phi-", "Psi+", "Psi-"};
  return labels[b.parity * 2 + b.phase];
}

inline bell_code bell_from_label(std::string_view label) {
  for (bell_code b : all_bell_codes)
    if (label == to_label(b)) return b;
  throw std::invalid_argument("unknown Bell state label: " + std::string(label));
}

// Encoding unitary identified by its two code bits. bit_x is the bit-flip
// component and toggles the parity; bit_z is the phase-flip component and
// toggles the phase. 00 = identity, 01 = sigma_z, 10 = sigma_x,
// 11 = i*sigma_y = -(sigma_x * sigma_z).
struct pauli_op {
  std::uint8_t bit_x = 0;
  std::uint8_t bit_z = 0;

  friend constexpr bool operator==(const pauli_op&, const pauli_op&) = default;
};

inline constexpr std::array<pauli_op, 4> all_pauli_ops{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

constexpr pauli_op op_xor(pauli_op a, pauli_op b) {
  return {static_cast<std::uint8_t>(a.bit_x ^ b.bit_x),
          static_cast<std::uint8_t>(a.bit_z ^ b.bit_z)};
}

constexpr bool is_identity(pauli_op op) { return op.bit_x == 0 && op.bit_z == 0; }

constexpr const char* to_code(pauli_op op) {
  constexpr const char* codes[4] = {"00", "01", "10", "11"};
  return codes[op.bit_x * 2 + op.bit_z];
}

inline pauli_op pauli_from_code(std::string_view code) {
  for (pauli_op op : all_pauli_ops)
    if (code == to_code(op)) return op;
  throw std::invalid_argument("unknown op code: " + std::string(code));
}

// Which photon of a pair an operation acts on: b holds the first photon of
// every pair, c the second.
enum class pair_side : std::uint8_t { b, c };

// Bell state plus the accumulated global sign. The sign is unobservable; it
// is tracked only so the symbolic backend can be compared against the dense
// one amplitude by amplitude.
struct pair_state {
  bell_code bell{};
  int sign = +1;

  friend constexpr bool operator==(const pair_state&, const pair_state&) = default;
};

// Local encoding unitary on one photon of a Bell pair. The code bits act by
// XOR on the Bell code; the sign bookkeeping follows from writing the op as
// (-1)^(bit_x*bit_z) * sigma_x^bit_x * sigma_z^bit_z and commuting it through
// the two-photon superposition.
constexpr pair_state apply_pauli_to_bell(pair_state state, pauli_op op, pair_side side) {
  pair_state out;
  out.bell.parity = state.bell.parity ^ op.bit_x;
  out.bell.phase = state.bell.phase ^ op.bit_z;
  int sign = (op.bit_x & op.bit_z) ? -1 : +1;
  if (side == pair_side::b) {
    if (op.bit_x && out.bell.phase) sign = -sign;
  } else {
    if (op.bit_z && state.bell.parity) sign = -sign;
  }
  out.sign = state.sign * sign;
  return out;
}

// Bell-basis measurement of an intact pair is deterministic.
constexpr bell_code measure_bell(const pair_state& state) { return state.bell; }

// Recovers the XOR of all ops applied to a pair from its initial and final
// Bell codes; this is what the participants compute from TP's announcements.
constexpr pauli_op deduce_op_xor(bell_code initial, bell_code final_code) {
  return {static_cast<std::uint8_t>(initial.parity ^ final_code.parity),
          static_cast<std::uint8_t>(initial.phase ^ final_code.phase)};
}

// Turns a digest (bits ordered top bit first, bit zero last) into the op
// list: op k is coded by bit pair (2k, 2k+1), consuming the digest from bit
// zero upward. Odd-length digests gain one zero top bit first so the even
// pairing rule applies uniformly.
inline std::vector<pauli_op> encode_bits_to_ops(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("encode_bits_to_ops: empty digest");
  for (auto b : bits)
    if (b > 1) throw std::invalid_argument("encode_bits_to_ops: digest entries must be bits");
  if (bits.size() % 2 != 0) bits.insert(bits.begin(), 0);
  const auto m = bits.size();
  std::vector<pauli_op> ops(m / 2);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    ops[k].bit_x = bits[m - 1 - 2 * k];
    ops[k].bit_z = bits[m - 2 - 2 * k];
  }
  return ops;
}

// Single-photon eavesdropping-check states: Z eigenstates |0>,|1> and X
// eigenstates |+>,|->.
enum class basis : std::uint8_t { z, x };

struct decoy_state {
  basis b = basis::z;
  std::uint8_t value = 0;

  friend constexpr bool operator==(const decoy_state&, const decoy_state&) = default;
};

constexpr const char* to_label(decoy_state d) {
  constexpr const char* labels[4] = {"Z0", "Z1", "X0", "X1"};
  return labels[(d.b == basis::x ? 2 : 0) + d.value];
}

inline decoy_state decoy_from_label(std::string_view label) {
  for (int i = 0; i < 4; ++i) {
    decoy_state d{i >= 2 ? basis::x : basis::z, static_cast<std::uint8_t>(i & 1)};
    if (label == to_label(d)) return d;
  }
  throw std::invalid_argument("unknown decoy label: " + std::string(label));
}

// Uniform draw over the four decoy states.
inline decoy_state decoy_prepare(rng_stream& rng) {
  const auto r = rng.next_below(4);
  return {(r & 2u) ? basis::x : basis::z, static_cast<std::uint8_t>(r & 1u)};
}

struct decoy_measurement {
  std::uint8_t value = 0;
  decoy_state post{};  // the measured eigenstate, forwarded by intercept-resend
};

// Projective measurement of a decoy photon. A matched basis reproduces the
// prepared value; a mismatched basis yields a uniform bit and leaves the
// photon in the measured eigenstate.
inline decoy_measurement decoy_measure(decoy_state state, basis measure_basis,
                                       rng_stream& rng) {
  if (measure_basis == state.b) return {state.value, state};
  const std::uint8_t v = rng.next_bit();
  return {v, {measure_basis, v}};
}

// ---------- dense oracle ----------
//
// Independent cross-check route: explicit amplitudes over |00>,|01>,|10>,|11>
// with textbook matrices, no shared logic with the XOR backend above.

using dense_amp = std::complex<double>;
using dense_vec = std::array<dense_amp, 4>;
using dense_mat2 = std::array<std::array<dense_amp, 2>, 2>;

inline constexpr double dense_tolerance = 1e-9;

inline dense_vec dense_bell_vector(bell_code b) {
  constexpr double r = 0.7071067811865475244;  // 1/sqrt(2)
  const double s = b.phase ? -r : r;
  dense_vec v{};
  if (b.parity == 0) {
    v[0] = r;
    v[3] = s;
  } else {
    v[1] = r;
    v[2] = s;
  }
  return v;
}

inline dense_mat2 dense_pauli_matrix(pauli_op op) {
  switch (op.bit_x * 2 + op.bit_z) {
    case 0: return {{{1, 0}, {0, 1}}};    // identity
    case 1: return {{{1, 0}, {0, -1}}};   // sigma_z
    case 2: return {{{0, 1}, {1, 0}}};    // sigma_x
    default: return {{{0, 1}, {-1, 0}}};  // i*sigma_y
  }
}

// Applies one-photon matrices to both halves of a two-photon amplitude
// vector; index 2*b + c addresses photon values (b, c).
inline dense_vec dense_apply(const dense_vec& v, const dense_mat2& on_b,
                             const dense_mat2& on_c) {
  dense_vec out{};
  for (int b0 = 0; b0 < 2; ++b0)
    for (int c0 = 0; c0 < 2; ++c0)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int c1 = 0; c1 < 2; ++c1)
          out[2 * b0 + c0] += on_b[b0][b1] * on_c[c0][c1] * v[2 * b1 + c1];
  return out;
}

inline dense_amp dense_inner(const dense_vec& a, const dense_vec& b) {
  dense_amp acc = 0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double dense_norm(const dense_vec& v) {
  return std::sqrt(std::abs(dense_inner(v, v)));
}

// Projects onto the Bell basis and demands exactly one unit-magnitude
// overlap; anything else means the vector left the Bell manifold, which is a
// bug in the caller, so fail loudly.
inline bell_code dense_bell_project(const dense_vec& v) {
  int hits = 0;
  bell_code found{};
  for (bell_code b : all_bell_codes) {
    const double overlap = std::abs(dense_inner(dense_bell_vector(b), v));
    if (std::abs(overlap - 1.0) <= dense_tolerance) {
      ++hits;
      found = b;
    }
  }
  if (hits != 1)
    throw std::logic_error("dense_bell_project: vector is not a Bell state");
  return found;
}

inline bell_code dense_apply_and_project(bell_code initial, pauli_op op_b,
                                         pauli_op op_c) {
  return dense_bell_project(dense_apply(dense_bell_vector(initial),
                                        dense_pauli_matrix(op_b),
                                        dense_pauli_matrix(op_c)));
}

}  // namespace qpc
