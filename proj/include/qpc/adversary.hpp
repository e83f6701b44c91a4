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

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/quantum.hpp"
#include "qpc/rng.hpp"

namespace qpc {

// What the third party does: follow the protocol, or prepare one known state
// for every pair and announce outcomes identical to it.
enum class tp_kind : std::uint8_t { honest, same_state_attack };

struct tp_behavior {
  tp_kind kind = tp_kind::honest;
  bell_code attack_state{};  // Phi+ unless configured otherwise
};

constexpr const char* to_label(tp_kind k) {
  return k == tp_kind::honest ? "HONEST" : "SAME_STATE_ATTACK";
}

inline tp_kind tp_kind_from_label(std::string_view label) {
  if (label == "HONEST") return tp_kind::honest;
  if (label == "SAME_STATE_ATTACK") return tp_kind::same_state_attack;
  throw std::invalid_argument("unknown TP behavior: " + std::string(label));
}

// The four quantum channels photons travel on.
enum class channel_id : std::uint8_t { tp_to_b, tp_to_c, b_to_tp, c_to_tp };

inline constexpr std::array<channel_id, 4> all_channels{
    channel_id::tp_to_b, channel_id::tp_to_c, channel_id::b_to_tp, channel_id::c_to_tp};

constexpr const char* to_label(channel_id ch) {
  constexpr const char* labels[4] = {"TP->B", "TP->C", "B->TP", "C->TP"};
  return labels[static_cast<int>(ch)];
}

inline channel_id channel_from_label(std::string_view label) {
  for (channel_id ch : all_channels)
    if (label == to_label(ch)) return ch;
  throw std::invalid_argument("unknown channel: " + std::string(label));
}

// Which photon of each pair a channel carries.
constexpr pair_side channel_side(channel_id ch) {
  return (ch == channel_id::tp_to_b || ch == channel_id::b_to_tp) ? pair_side::b
                                                                  : pair_side::c;
}

// Outside eavesdropper: intercepts every photon on the tapped channels,
// measures it in a uniformly random basis, and resends the eigenstate.
struct eve_model {
  std::vector<channel_id> channels;

  bool taps(channel_id ch) const {
    return std::find(channels.begin(), channels.end(), ch) != channels.end();
  }
};

// Product state left behind once one photon of a pair has been measured:
// each side is an eigenstate of its own recorded basis.
struct collapsed_halves {
  basis basis_b = basis::z;
  std::uint8_t value_b = 0;
  basis basis_c = basis::z;
  std::uint8_t value_c = 0;
};

// Quantum state of one pair in the simulation. Pairs stay Bell states under
// every protocol operation; only interception can collapse them.
struct pair_quantum {
  bool collapsed = false;
  pair_state bell{};
  collapsed_halves halves{};
};

inline pair_quantum make_entangled(bell_code b) {
  pair_quantum q;
  q.bell = {b, +1};
  return q;
}

// Local encoding unitary on one photon, valid in either regime. On a
// collapsed photon only the component that moves its eigenbasis flips the
// recorded value: sigma_x flips Z eigenstates, sigma_z flips X eigenstates,
// i*sigma_y flips both.
inline void apply_op(pair_quantum& q, pauli_op op, pair_side side) {
  if (!q.collapsed) {
    q.bell = apply_pauli_to_bell(q.bell, op, side);
    return;
  }
  auto& h = q.halves;
  const basis local = side == pair_side::b ? h.basis_b : h.basis_c;
  const std::uint8_t flips = local == basis::z ? op.bit_x : op.bit_z;
  if (side == pair_side::b)
    h.value_b ^= flips;
  else
    h.value_c ^= flips;
}

// Bell-basis measurement. An intact pair gives its code deterministically.
// A pair collapsed in one shared basis keeps the corresponding code bit
// (parity for Z, phase for X) and draws the other uniformly; halves collapsed
// in different bases give a uniform draw over all four codes. The pair is
// left in the measured Bell state.
inline bell_code measure_pair(pair_quantum& q, rng_stream& rng) {
  if (!q.collapsed) return q.bell.bell;
  const auto& h = q.halves;
  bell_code out;
  if (h.basis_b == h.basis_c) {
    const auto fixed_bit = static_cast<std::uint8_t>(h.value_b ^ h.value_c);
    if (h.basis_b == basis::z) {
      out.parity = fixed_bit;
      out.phase = rng.next_bit();
    } else {
      out.phase = fixed_bit;
      out.parity = rng.next_bit();
    }
  } else {
    out.parity = rng.next_bit();
    out.phase = rng.next_bit();
  }
  q = make_entangled(out);
  return out;
}

// Intercept-resend on a decoy photon: measure in a random basis and forward
// the measured eigenstate.
inline decoy_state eve_intercept_resend(decoy_state photon, rng_stream& eve_rng) {
  const basis w = eve_rng.next_bit() ? basis::x : basis::z;
  return decoy_measure(photon, w, eve_rng).post;
}

// Intercept-resend on one photon of an EPR pair. Measuring an intact pair's
// photon in basis W collapses both halves into W eigenstates whose values
// differ by the pair's parity (Z) or phase (X) bit. Re-measuring an already
// collapsed photon only changes it when the bases mismatch.
inline void eve_intercept_resend(pair_quantum& q, pair_side side, rng_stream& eve_rng) {
  const basis w = eve_rng.next_bit() ? basis::x : basis::z;
  if (!q.collapsed) {
    const std::uint8_t v = eve_rng.next_bit();
    const std::uint8_t correlation =
        w == basis::z ? q.bell.bell.parity : q.bell.bell.phase;
    collapsed_halves h;
    h.basis_b = h.basis_c = w;
    if (side == pair_side::b) {
      h.value_b = v;
      h.value_c = static_cast<std::uint8_t>(v ^ correlation);
    } else {
      h.value_c = v;
      h.value_b = static_cast<std::uint8_t>(v ^ correlation);
    }
    q.collapsed = true;
    q.halves = h;
    return;
  }
  basis& local_basis = side == pair_side::b ? q.halves.basis_b : q.halves.basis_c;
  std::uint8_t& local_value = side == pair_side::b ? q.halves.value_b : q.halves.value_c;
  if (w != local_basis) {
    local_basis = w;
    local_value = eve_rng.next_bit();
  }
}

// Result categories: what the protocol can conclude and what TP can infer.
enum class comparison : std::uint8_t { equal, unequal, unknown };

constexpr const char* to_label(comparison c) {
  constexpr const char* labels[3] = {"EQUAL", "UNEQUAL", "UNKNOWN"};
  return labels[static_cast<int>(c)];
}

// The attacking TP learns the comparison from its own measurements: if every
// pair still measures as the state it prepared, the encodings cancelled, so
// the digests match; any deviation means they differ. An honest TP learns
// nothing.
inline comparison tp_infer_result(const std::vector<bell_code>& true_outcomes,
                                  const tp_behavior& tp) {
  if (tp.kind != tp_kind::same_state_attack) return comparison::unknown;
  for (bell_code outcome : true_outcomes)
    if (!(outcome == tp.attack_state)) return comparison::unequal;
  return comparison::equal;
}

}  // namespace qpc
