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

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpc/adversary.hpp"
#include "qpc/hashing.hpp"
#include "qpc/quantum.hpp"
#include "qpc/rng.hpp"

namespace qpc {

enum class variant_kind : std::uint8_t { original, improved };

constexpr const char* to_label(variant_kind v) {
  return v == variant_kind::original ? "ORIGINAL" : "IMPROVED";
}

inline variant_kind variant_from_label(std::string_view label) {
  if (label == "ORIGINAL") return variant_kind::original;
  if (label == "IMPROVED") return variant_kind::improved;
  throw std::invalid_argument("unknown variant: " + std::string(label));
}

// What the participants conclude at the end of a run.
enum class verdict_kind : std::uint8_t {
  equal,
  unequal,
  abort_eavesdropper,
  abort_tp_cheating,
};

constexpr const char* to_label(verdict_kind v) {
  constexpr const char* labels[4] = {"EQUAL", "UNEQUAL", "ABORT_EAVESDROPPER",
                                     "ABORT_TP_CHEATING"};
  return labels[static_cast<int>(v)];
}

// The first ceil(hash_len/2) pairs carry digest bits; the rest only audit TP.
enum class pair_role : std::uint8_t { encoding, sampling };

constexpr const char* to_label(pair_role r) {
  return r == pair_role::encoding ? "ENCODING" : "SAMPLING";
}

struct protocol_config {
  variant_kind variant = variant_kind::original;
  int n_pairs = 48;
  int hash_len = 64;
  int decoy_count_per_channel = 16;
  double reveal_fraction_sampling = 1.0;   // share of sampling pairs audited
  double inconsistency_threshold = 0.0;    // for both decoy and sampling checks
  tp_behavior tp{};
  std::vector<channel_id> eve_on;
  std::uint64_t seed = 0;
  std::string x;
  std::string y;

  int encoding_pairs() const { return (hash_len + 1) / 2; }
  int sampling_pairs() const { return n_pairs - encoding_pairs(); }

  void validate() const {
    if (hash_len < 1) throw std::invalid_argument("config: hash_len must be >= 1");
    if (n_pairs <= encoding_pairs())
      throw std::invalid_argument(
          "config: n_pairs must exceed the encoding pair count so at least one "
          "sampling pair exists");
    if (decoy_count_per_channel < 0)
      throw std::invalid_argument("config: decoy_count_per_channel must be >= 0");
    if (!(reveal_fraction_sampling > 0.0) || reveal_fraction_sampling > 1.0)
      throw std::invalid_argument("config: reveal_fraction_sampling must be in (0, 1]");
    if (inconsistency_threshold < 0.0 || inconsistency_threshold >= 1.0)
      throw std::invalid_argument("config: inconsistency_threshold must be in [0, 1)");
  }
};

// Audit record of one EPR pair across the whole run. Announced outcomes stay
// empty until the participants actually requested them; the true outcome
// stays empty if the run aborted before TP measured.
struct pair_record {
  int original_index = 0;
  pair_role role = pair_role::encoding;
  bell_code initial{};
  pauli_op op_b{};
  pauli_op op_c{};
  int shuffled_position = -1;
  std::optional<bell_code> tp_outcome_announced;
  std::optional<bell_code> tp_outcome_true;
};

struct decoy_record {
  channel_id channel = channel_id::tp_to_b;
  int position = -1;  // slot in the transmitted photon sequence
  decoy_state prepared{};
  std::optional<std::uint8_t> measured_value;
};

struct decoy_check_result {
  bool passed = false;
  double error_rate = 0.0;
  int checked = 0;
};

struct sampling_check_result {
  bool passed = false;
  double inconsistency_rate = 0.0;
  int checked = 0;
};

// Full machine-readable record of one protocol run.
struct transcript {
  protocol_config config;
  std::vector<pair_record> pairs;
  std::vector<decoy_record> decoys;
  std::map<int, bell_code> tp_preannouncement;  // claimed initial per pair index
  std::optional<std::map<int, std::pair<pauli_op, pauli_op>>> improved_sampling_ops_published;
  std::map<channel_id, decoy_check_result> decoy_check_results;
  std::optional<sampling_check_result> sampling_check;
  verdict_kind participant_verdict = verdict_kind::equal;
  comparison tp_inference = comparison::unknown;
  bool ground_truth_equal = false;
};

// Secrets and per-party stream seeds derived from the run seed in a fixed
// order, so one seed pins down the entire run.
struct run_secrets {
  std::uint64_t hash_key = 0;
  std::uint64_t disarrange_secret = 0;
  std::uint64_t tp_seed = 0;
  std::uint64_t bob_seed = 0;
  std::uint64_t charlie_seed = 0;
  std::uint64_t eve_seed = 0;
  std::uint64_t checker_seed = 0;
};

inline run_secrets derive_run_secrets(std::uint64_t seed) {
  rng_stream s(seed);
  run_secrets r;
  r.hash_key = s.next();
  r.disarrange_secret = s.next();
  r.tp_seed = s.next();
  r.bob_seed = s.next();
  r.charlie_seed = s.next();
  r.eve_seed = s.next();
  r.checker_seed = s.next();
  return r;
}

// One photon slot in a channel payload: either the channel-side half of EPR
// pair `index` (original numbering) or entry `index` of the decoy table.
struct payload_slot {
  bool is_decoy = false;
  int index = 0;
};

using channel_payload = std::vector<payload_slot>;

// Builds the photon sequence for one channel: the given EPR halves in order,
// with `count` fresh decoys inserted at uniformly random positions. Decoy
// records (with final positions) and live states are appended to the tables.
inline channel_payload build_payload(const std::vector<int>& epr_indices,
                                     channel_id ch, int count, rng_stream& inserter,
                                     std::vector<decoy_record>& decoys,
                                     std::vector<decoy_state>& decoy_live) {
  channel_payload payload;
  payload.reserve(epr_indices.size() + static_cast<std::size_t>(count));
  for (int i : epr_indices) payload.push_back({false, i});
  for (int j = 0; j < count; ++j) {
    const decoy_state d = decoy_prepare(inserter);
    const int table_index = static_cast<int>(decoys.size());
    decoys.push_back({ch, -1, d, std::nullopt});
    decoy_live.push_back(d);
    const auto pos = inserter.next_below(payload.size() + 1);
    payload.insert(payload.begin() + static_cast<std::ptrdiff_t>(pos), {true, table_index});
  }
  for (std::size_t p = 0; p < payload.size(); ++p)
    if (payload[p].is_decoy) decoys[payload[p].index].position = static_cast<int>(p);
  return payload;
}

// Step 2: TP prepares the EPR pairs (uniformly random Bell states when
// honest, the fixed attack state otherwise) and both outbound payloads.
struct tp_preparation {
  std::vector<pair_record> pairs;    // original order
  std::vector<pair_quantum> states;  // parallel to pairs
  std::vector<decoy_record> decoys;
  std::vector<decoy_state> decoy_live;
  channel_payload payload_b;
  channel_payload payload_c;
};

inline tp_preparation tp_prepare(const protocol_config& cfg, rng_stream& tp_rng) {
  cfg.validate();
  tp_preparation prep;
  const int m = cfg.encoding_pairs();
  for (int i = 0; i < cfg.n_pairs; ++i) {
    bell_code initial;
    if (cfg.tp.kind == tp_kind::same_state_attack) {
      initial = cfg.tp.attack_state;
    } else {
      const auto r = tp_rng.next_below(4);
      initial = {static_cast<std::uint8_t>(r >> 1), static_cast<std::uint8_t>(r & 1u)};
    }
    pair_record rec;
    rec.original_index = i;
    rec.role = i < m ? pair_role::encoding : pair_role::sampling;
    rec.initial = initial;
    prep.pairs.push_back(rec);
    prep.states.push_back(make_entangled(initial));
  }
  std::vector<int> order(static_cast<std::size_t>(cfg.n_pairs));
  for (int i = 0; i < cfg.n_pairs; ++i) order[static_cast<std::size_t>(i)] = i;
  prep.payload_b = build_payload(order, channel_id::tp_to_b, cfg.decoy_count_per_channel,
                                 tp_rng, prep.decoys, prep.decoy_live);
  prep.payload_c = build_payload(order, channel_id::tp_to_c, cfg.decoy_count_per_channel,
                                 tp_rng, prep.decoys, prep.decoy_live);
  return prep;
}

// Transmission over one channel; on a tapped channel the eavesdropper
// measures and resends every photon, decoy or EPR half alike.
inline void transit_channel(const channel_payload& payload, channel_id ch,
                            const eve_model& eve, std::vector<pair_quantum>& states,
                            std::vector<decoy_state>& decoy_live, rng_stream& eve_rng) {
  if (!eve.taps(ch)) return;
  for (const payload_slot& slot : payload) {
    if (slot.is_decoy)
      decoy_live[slot.index] = eve_intercept_resend(decoy_live[slot.index], eve_rng);
    else
      eve_intercept_resend(states[slot.index], channel_side(ch), eve_rng);
  }
}

// The receiving party measures every decoy of `ch` in its announced
// preparation basis and records the outcome.
inline void measure_channel_decoys(channel_id ch, std::vector<decoy_record>& decoys,
                                   std::vector<decoy_state>& decoy_live,
                                   rng_stream& receiver_rng) {
  for (std::size_t i = 0; i < decoys.size(); ++i) {
    if (decoys[i].channel != ch) continue;
    const auto meas = decoy_measure(decoy_live[i], decoys[i].prepared.b, receiver_rng);
    decoy_live[i] = meas.post;
    decoys[i].measured_value = meas.value;
  }
}

inline std::vector<decoy_record> decoys_on_channel(const std::vector<decoy_record>& decoys,
                                                   channel_id ch) {
  std::vector<decoy_record> out;
  for (const auto& d : decoys)
    if (d.channel == ch) out.push_back(d);
  return out;
}

// Compares measured decoy values against the prepared ones.
inline decoy_check_result check_decoys(const std::vector<decoy_record>& records,
                                       double threshold) {
  int checked = 0;
  int mismatches = 0;
  for (const auto& r : records) {
    if (!r.measured_value)
      throw std::logic_error("check_decoys: record was never measured");
    ++checked;
    if (*r.measured_value != r.prepared.value) ++mismatches;
  }
  const double rate = checked == 0 ? 0.0 : static_cast<double>(mismatches) / checked;
  return {rate <= threshold, rate, checked};
}

// Step 4: one participant applies the digest-derived ops to the encoding
// pairs on their side.
inline void participant_encode(const hash_digest& digest, std::vector<pair_record>& pairs,
                               std::vector<pair_quantum>& states, pair_side side) {
  const auto ops = encode_bits_to_ops(digest.bits);
  std::size_t encoding_count = 0;
  for (const auto& rec : pairs)
    if (rec.role == pair_role::encoding) ++encoding_count;
  if (ops.size() != encoding_count || pairs.size() != states.size())
    throw std::invalid_argument("participant_encode: digest/pair count mismatch");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    auto& rec = pairs[k];
    if (rec.role != pair_role::encoding)
      throw std::invalid_argument("participant_encode: encoding pairs must come first");
    (side == pair_side::b ? rec.op_b : rec.op_c) = ops[k];
    apply_op(states[k], ops[k], side);
  }
}

// Hardened variant only: one participant masks every sampling pair with a
// uniformly random op and publishes the choices, keyed by original pair
// index. Positions stay hidden behind the disarrangement.
inline std::map<int, pauli_op> improved_sampling_ops(variant_kind variant,
                                                     std::vector<pair_record>& pairs,
                                                     std::vector<pair_quantum>& states,
                                                     pair_side side, rng_stream& rng) {
  if (variant != variant_kind::improved)
    throw std::logic_error("improved_sampling_ops: only defined for the improved variant");
  std::map<int, pauli_op> published;
  for (auto& rec : pairs) {
    if (rec.role != pair_role::sampling) continue;
    const auto r = rng.next_below(4);
    const pauli_op op{static_cast<std::uint8_t>(r >> 1), static_cast<std::uint8_t>(r & 1u)};
    (side == pair_side::b ? rec.op_b : rec.op_c) = op;
    apply_op(states[rec.original_index], op, side);
    published[rec.original_index] = op;
  }
  return published;
}

// Position of every pair after the secret reordering: sampling pairs occupy
// the seeded shuffle prefix, encoding pairs fill the remaining positions in
// original order.
inline std::vector<int> disarrange_layout(std::uint64_t secret, int n_pairs,
                                          int n_encoding) {
  if (n_encoding < 0 || n_encoding > n_pairs)
    throw std::invalid_argument("disarrange_layout: bad encoding count");
  const auto sampling = sampling_positions(secret, n_pairs, n_pairs - n_encoding);
  std::vector<char> taken(static_cast<std::size_t>(n_pairs), 0);
  for (int p : sampling) taken[static_cast<std::size_t>(p)] = 1;
  std::vector<int> position_of(static_cast<std::size_t>(n_pairs), -1);
  for (std::size_t j = 0; j < sampling.size(); ++j)
    position_of[static_cast<std::size_t>(n_encoding) + j] = sampling[j];
  int next_free = 0;
  for (int k = 0; k < n_encoding; ++k) {
    while (taken[static_cast<std::size_t>(next_free)]) ++next_free;
    position_of[static_cast<std::size_t>(k)] = next_free++;
  }
  return position_of;
}

inline void disarrange(std::vector<pair_record>& pairs, std::uint64_t secret,
                       int n_encoding) {
  const auto position_of = disarrange_layout(secret, static_cast<int>(pairs.size()),
                                             n_encoding);
  for (auto& rec : pairs)
    rec.shuffled_position = position_of[static_cast<std::size_t>(rec.original_index)];
}

// What TP publishes for one measured position. A function of TP-visible data
// only; roles and the disarrangement secret never reach it.
constexpr bell_code announced_outcome(const tp_behavior& tp, bell_code true_outcome) {
  return tp.kind == tp_kind::same_state_attack ? tp.attack_state : true_outcome;
}

// Claimed initial state per original pair index, committed before the
// photons return to TP.
inline std::map<int, bell_code> tp_preannounce_initials(const tp_behavior& tp,
                                                        const std::vector<bell_code>& initials) {
  std::map<int, bell_code> out;
  for (std::size_t i = 0; i < initials.size(); ++i)
    out[static_cast<int>(i)] = tp.kind == tp_kind::same_state_attack ? tp.attack_state
                                                                     : initials[i];
  return out;
}

// Outcome the participants expect TP to announce for a sampling pair they
// masked with (op_b, op_c); identity ops give the claimed initial back.
inline bell_code expected_sampling_outcome(bell_code claimed_initial, pauli_op op_b,
                                           pauli_op op_c) {
  pair_state s{claimed_initial, +1};
  s = apply_pauli_to_bell(s, op_b, pair_side::b);
  s = apply_pauli_to_bell(s, op_c, pair_side::c);
  return s.bell;
}

// Audits every announced sampling outcome against the pre-announced initial
// state and (in the hardened variant) the published masking ops. A pure
// function of the transcript, so any recorded run can be re-audited.
inline sampling_check_result verify_sampling(const transcript& t) {
  int checked = 0;
  int mismatches = 0;
  for (const auto& rec : t.pairs) {
    if (rec.role != pair_role::sampling || !rec.tp_outcome_announced) continue;
    const auto claimed = t.tp_preannouncement.find(rec.original_index);
    if (claimed == t.tp_preannouncement.end())
      throw std::invalid_argument("verify_sampling: pair has no pre-announced state");
    pauli_op op_b{};
    pauli_op op_c{};
    if (t.config.variant == variant_kind::improved) {
      if (!t.improved_sampling_ops_published)
        throw std::invalid_argument("verify_sampling: masking ops were never published");
      const auto ops = t.improved_sampling_ops_published->find(rec.original_index);
      if (ops == t.improved_sampling_ops_published->end())
        throw std::invalid_argument("verify_sampling: pair has no published masking ops");
      op_b = ops->second.first;
      op_c = ops->second.second;
    }
    ++checked;
    if (!(*rec.tp_outcome_announced ==
          expected_sampling_outcome(claimed->second, op_b, op_c)))
      ++mismatches;
  }
  if (checked == 0)
    throw std::invalid_argument("verify_sampling: no announced sampling outcomes");
  const double rate = static_cast<double>(mismatches) / checked;
  return {rate <= t.config.inconsistency_threshold, rate, checked};
}

// Recovers the comparison from the encoding pairs: TP's announced outcome
// differs from the claimed initial exactly by op_b xor op_c, so the digests
// agree iff every difference is the identity.
inline verdict_kind deduce_comparison(const transcript& t) {
  int seen = 0;
  bool all_identity = true;
  for (const auto& rec : t.pairs) {
    if (rec.role != pair_role::encoding) continue;
    if (!rec.tp_outcome_announced)
      throw std::invalid_argument("deduce_comparison: encoding outcome was never announced");
    const auto claimed = t.tp_preannouncement.find(rec.original_index);
    if (claimed == t.tp_preannouncement.end())
      throw std::invalid_argument("deduce_comparison: pair has no pre-announced state");
    if (!is_identity(deduce_op_xor(claimed->second, *rec.tp_outcome_announced)))
      all_identity = false;
    ++seen;
  }
  if (seen == 0) throw std::invalid_argument("deduce_comparison: no encoding pairs");
  return all_identity ? verdict_kind::equal : verdict_kind::unequal;
}

// One full protocol run.
inline transcript run_protocol(const protocol_config& cfg) {
  cfg.validate();
  transcript t;
  t.config = cfg;
  t.ground_truth_equal = cfg.x == cfg.y;

  const run_secrets sec = derive_run_secrets(cfg.seed);
  rng_stream tp_rng(sec.tp_seed);
  rng_stream bob_rng(sec.bob_seed);
  rng_stream charlie_rng(sec.charlie_seed);
  rng_stream eve_rng(sec.eve_seed);
  rng_stream checker_rng(sec.checker_seed);
  const eve_model eve{cfg.eve_on};

  // Step 1: shared keyed hash of both inputs.
  const hash_digest digest_b = keyed_hash(sec.hash_key, cfg.x, cfg.hash_len);
  const hash_digest digest_c = keyed_hash(sec.hash_key, cfg.y, cfg.hash_len);

  // Step 2: TP prepares pairs and sends both photon sequences out.
  tp_preparation prep = tp_prepare(cfg, tp_rng);
  t.pairs = std::move(prep.pairs);
  t.decoys = std::move(prep.decoys);
  std::vector<pair_quantum>& states = prep.states;
  std::vector<decoy_state>& decoy_live = prep.decoy_live;

  transit_channel(prep.payload_b, channel_id::tp_to_b, eve, states, decoy_live, eve_rng);
  transit_channel(prep.payload_c, channel_id::tp_to_c, eve, states, decoy_live, eve_rng);

  // Step 3: outbound eavesdropping check on both channels.
  measure_channel_decoys(channel_id::tp_to_b, t.decoys, decoy_live, bob_rng);
  measure_channel_decoys(channel_id::tp_to_c, t.decoys, decoy_live, charlie_rng);
  for (channel_id ch : {channel_id::tp_to_b, channel_id::tp_to_c})
    t.decoy_check_results[ch] =
        check_decoys(decoys_on_channel(t.decoys, ch), cfg.inconsistency_threshold);
  if (!t.decoy_check_results[channel_id::tp_to_b].passed ||
      !t.decoy_check_results[channel_id::tp_to_c].passed) {
    t.participant_verdict = verdict_kind::abort_eavesdropper;
    return t;
  }

  // Step 4: encode the digests, mask the sampling pairs (hardened variant),
  // reorder by the shared secret, and require TP's commitment before return.
  participant_encode(digest_b, t.pairs, states, pair_side::b);
  participant_encode(digest_c, t.pairs, states, pair_side::c);

  if (cfg.variant == variant_kind::improved) {
    const auto published_b =
        improved_sampling_ops(cfg.variant, t.pairs, states, pair_side::b, bob_rng);
    const auto published_c =
        improved_sampling_ops(cfg.variant, t.pairs, states, pair_side::c, charlie_rng);
    std::map<int, std::pair<pauli_op, pauli_op>> published;
    for (const auto& [index, op_b] : published_b)
      published[index] = {op_b, published_c.at(index)};
    t.improved_sampling_ops_published = std::move(published);
  }

  // Both participants derive the layout independently; they must agree.
  const int m = cfg.encoding_pairs();
  const auto layout_b = disarrange_layout(sec.disarrange_secret, cfg.n_pairs, m);
  const auto layout_c = disarrange_layout(sec.disarrange_secret, cfg.n_pairs, m);
  if (layout_b != layout_c)
    throw std::logic_error("run_protocol: participants disagree on the disarrangement");
  for (auto& rec : t.pairs)
    rec.shuffled_position = layout_b[static_cast<std::size_t>(rec.original_index)];

  std::vector<bell_code> prepared_initials;
  prepared_initials.reserve(t.pairs.size());
  for (const auto& rec : t.pairs) prepared_initials.push_back(rec.initial);
  t.tp_preannouncement = tp_preannounce_initials(cfg.tp, prepared_initials);

  // Return transit: photons travel in shuffled order with fresh decoys.
  std::vector<int> original_at_position(static_cast<std::size_t>(cfg.n_pairs), -1);
  for (const auto& rec : t.pairs)
    original_at_position[static_cast<std::size_t>(rec.shuffled_position)] =
        rec.original_index;
  const auto payload_back_b =
      build_payload(original_at_position, channel_id::b_to_tp,
                    cfg.decoy_count_per_channel, bob_rng, t.decoys, decoy_live);
  const auto payload_back_c =
      build_payload(original_at_position, channel_id::c_to_tp,
                    cfg.decoy_count_per_channel, charlie_rng, t.decoys, decoy_live);
  transit_channel(payload_back_b, channel_id::b_to_tp, eve, states, decoy_live, eve_rng);
  transit_channel(payload_back_c, channel_id::c_to_tp, eve, states, decoy_live, eve_rng);

  // Step 5: return-trip eavesdropping check, measured by TP.
  measure_channel_decoys(channel_id::b_to_tp, t.decoys, decoy_live, tp_rng);
  measure_channel_decoys(channel_id::c_to_tp, t.decoys, decoy_live, tp_rng);
  for (channel_id ch : {channel_id::b_to_tp, channel_id::c_to_tp})
    t.decoy_check_results[ch] =
        check_decoys(decoys_on_channel(t.decoys, ch), cfg.inconsistency_threshold);
  if (!t.decoy_check_results[channel_id::b_to_tp].passed ||
      !t.decoy_check_results[channel_id::c_to_tp].passed) {
    t.participant_verdict = verdict_kind::abort_eavesdropper;
    return t;
  }

  // TP measures every pair in position order and forms its private inference.
  std::vector<bell_code> outcomes_by_position;
  outcomes_by_position.reserve(t.pairs.size());
  for (int p = 0; p < cfg.n_pairs; ++p) {
    const int i = original_at_position[static_cast<std::size_t>(p)];
    const bell_code outcome = measure_pair(states[static_cast<std::size_t>(i)], tp_rng);
    t.pairs[static_cast<std::size_t>(i)].tp_outcome_true = outcome;
    outcomes_by_position.push_back(outcome);
  }
  t.tp_inference = tp_infer_result(outcomes_by_position, cfg.tp);

  // The participants pick the audited sampling subset and request those
  // announcements first; the encoding reveal is gated on the audit passing.
  std::vector<int> sampling_indices;
  for (const auto& rec : t.pairs)
    if (rec.role == pair_role::sampling) sampling_indices.push_back(rec.original_index);
  const auto subset_size = static_cast<std::size_t>(std::min<double>(
      static_cast<double>(sampling_indices.size()),
      std::ceil(cfg.reveal_fraction_sampling * static_cast<double>(sampling_indices.size()))));
  for (std::size_t i = sampling_indices.size() - 1; i >= 1; --i) {
    const auto j = checker_rng.next_below(i + 1);
    std::swap(sampling_indices[i], sampling_indices[j]);
  }
  for (std::size_t k = 0; k < subset_size; ++k) {
    auto& rec = t.pairs[static_cast<std::size_t>(sampling_indices[k])];
    rec.tp_outcome_announced = announced_outcome(cfg.tp, *rec.tp_outcome_true);
  }

  t.sampling_check = verify_sampling(t);
  if (!t.sampling_check->passed) {
    t.participant_verdict = verdict_kind::abort_tp_cheating;
    return t;
  }

  // Reveal of the encoding positions and the final deduction.
  for (auto& rec : t.pairs)
    if (rec.role == pair_role::encoding)
      rec.tp_outcome_announced = announced_outcome(cfg.tp, *rec.tp_outcome_true);
  t.participant_verdict = deduce_comparison(t);
  return t;
}

}  // namespace qpc
