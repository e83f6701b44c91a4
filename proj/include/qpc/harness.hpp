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
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpc/protocol.hpp"
#include "qpc/rng.hpp"

namespace qpc {

// How each trial's inputs are chosen: keep the configured strings, draw a
// fresh token and compare it to itself, or draw two distinct tokens whose
// digests also differ (hash collisions are redrawn and logged).
enum class input_policy : std::uint8_t { fixed, equal_pairs, random_pairs };

constexpr const char* to_label(input_policy p) {
  constexpr const char* labels[3] = {"FIXED", "EQUAL_PAIRS", "RANDOM_PAIRS"};
  return labels[static_cast<int>(p)];
}

struct scenario {
  std::string name;
  protocol_config config;
  input_policy policy = input_policy::fixed;
  int trials = 1;
  std::uint64_t base_seed = 0;
};

struct trial_stats {
  int trials = 0;
  std::map<verdict_kind, int> verdict_counts{
      {verdict_kind::equal, 0},
      {verdict_kind::unequal, 0},
      {verdict_kind::abort_eavesdropper, 0},
      {verdict_kind::abort_tp_cheating, 0},
  };
  int wrong_verdicts = 0;        // EQUAL/UNEQUAL verdicts contradicting ground truth
  int tp_inference_correct = 0;  // private inferences matching ground truth
  int detection_count = 0;       // runs ending in ABORT_TP_CHEATING
  int sampling_checks_run = 0;
  double sampling_inconsistency_sum = 0.0;
  std::vector<std::uint64_t> seeds_of_failures;
  std::vector<std::uint64_t> excluded_collision_seeds;

  double mean_sampling_inconsistency() const {
    return sampling_checks_run == 0 ? 0.0
                                    : sampling_inconsistency_sum / sampling_checks_run;
  }

  void add(const transcript& t, std::uint64_t seed, bool collision_excluded) {
    ++trials;
    ++verdict_counts[t.participant_verdict];
    if (t.participant_verdict == verdict_kind::equal ||
        t.participant_verdict == verdict_kind::unequal) {
      const bool said_equal = t.participant_verdict == verdict_kind::equal;
      if (said_equal != t.ground_truth_equal) {
        ++wrong_verdicts;
        seeds_of_failures.push_back(seed);
      }
    }
    if (t.participant_verdict == verdict_kind::abort_tp_cheating) ++detection_count;
    if (t.tp_inference != comparison::unknown) {
      const bool inferred_equal = t.tp_inference == comparison::equal;
      if (inferred_equal == t.ground_truth_equal) ++tp_inference_correct;
    }
    if (t.sampling_check) {
      ++sampling_checks_run;
      sampling_inconsistency_sum += t.sampling_check->inconsistency_rate;
    }
    if (collision_excluded) excluded_collision_seeds.push_back(seed);
  }

  void merge(const trial_stats& later) {
    trials += later.trials;
    for (const auto& [verdict, count] : later.verdict_counts)
      verdict_counts[verdict] += count;
    wrong_verdicts += later.wrong_verdicts;
    tp_inference_correct += later.tp_inference_correct;
    detection_count += later.detection_count;
    sampling_checks_run += later.sampling_checks_run;
    sampling_inconsistency_sum += later.sampling_inconsistency_sum;
    seeds_of_failures.insert(seeds_of_failures.end(), later.seeds_of_failures.begin(),
                             later.seeds_of_failures.end());
    excluded_collision_seeds.insert(excluded_collision_seeds.end(),
                                    later.excluded_collision_seeds.begin(),
                                    later.excluded_collision_seeds.end());
  }
};

namespace detail {

// Keeps the input-drawing stream distinct from every stream derived inside
// run_protocol from the same trial seed.
inline constexpr std::uint64_t input_stream_salt = 0x1BD11BDAA9FC1A22ull;

inline std::string random_token(rng_stream& rng) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string token(16, '0');
  for (char& c : token) c = digits[rng.next_below(16)];
  return token;
}

}  // namespace detail

// Runs every trial of a scenario, feeding each finished transcript to `sink`.
// Trial t runs with seed mix64_once(base_seed ^ t), so any single trial can
// be replayed in isolation.
template <typename sink_fn>
trial_stats run_trials(const scenario& s, sink_fn&& sink) {
  if (s.trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  trial_stats stats;
  for (int t = 0; t < s.trials; ++t) {
    const std::uint64_t trial_seed =
        mix64_once(s.base_seed ^ static_cast<std::uint64_t>(t));
    protocol_config cfg = s.config;
    cfg.seed = trial_seed;
    bool collision_excluded = false;
    if (s.policy != input_policy::fixed) {
      rng_stream input_rng(mix64_once(trial_seed ^ detail::input_stream_salt));
      cfg.x = detail::random_token(input_rng);
      if (s.policy == input_policy::equal_pairs) {
        cfg.y = cfg.x;
      } else {
        const std::uint64_t hash_key = derive_run_secrets(trial_seed).hash_key;
        const hash_digest digest_x = keyed_hash(hash_key, cfg.x, cfg.hash_len);
        cfg.y = detail::random_token(input_rng);
        while (cfg.y == cfg.x ||
               keyed_hash(hash_key, cfg.y, cfg.hash_len) == digest_x) {
          if (cfg.y != cfg.x) collision_excluded = true;
          cfg.y = detail::random_token(input_rng);
        }
      }
    }
    const transcript result = run_protocol(cfg);
    stats.add(result, trial_seed, collision_excluded);
    sink(result);
  }
  return stats;
}

inline trial_stats run_trials(const scenario& s) {
  return run_trials(s, [](const transcript&) {});
}

// Detection probability of the same-state attack in the hardened variant
// with s audited sampling pairs: each audit passes with probability 1/4.
inline double predict_attack_detection(int audited_sampling_pairs) {
  if (audited_sampling_pairs < 0)
    throw std::invalid_argument("predict_attack_detection: negative pair count");
  return 1.0 - std::pow(0.25, audited_sampling_pairs);
}

// Detection probability of intercept-resend on one channel with d decoys:
// each decoy survives with probability 3/4.
inline double predict_eve_detection(int decoys_on_channel) {
  if (decoys_on_channel < 0)
    throw std::invalid_argument("predict_eve_detection: negative decoy count");
  return 1.0 - std::pow(0.75, decoys_on_channel);
}

struct prediction_report {
  bool pass = false;
  double z = 0.0;
  double empirical = 0.0;
  double predicted = 0.0;
  int trials = 0;
};

// Three-sigma binomial test of an empirical frequency against a predicted
// probability.
inline prediction_report compare_to_prediction(int successes, int trials,
                                               double predicted) {
  if (trials < 30)
    throw std::invalid_argument("compare_to_prediction: needs at least 30 trials");
  if (successes < 0 || successes > trials)
    throw std::invalid_argument("compare_to_prediction: successes out of range");
  prediction_report r;
  r.trials = trials;
  r.predicted = predicted;
  r.empirical = static_cast<double>(successes) / trials;
  const double variance = predicted * (1.0 - predicted) / trials;
  if (variance == 0.0) {
    r.pass = r.empirical == predicted;
    r.z = r.pass ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    r.z = std::abs(r.empirical - predicted) / std::sqrt(variance);
    r.pass = r.z <= 3.0;
  }
  return r;
}

// Canned scenarios exercised by the command-line driver.
inline scenario make_named_scenario(const std::string& name) {
  scenario s;
  s.name = name;
  s.policy = input_policy::equal_pairs;
  if (name == "honest") {
  } else if (name == "attack-original") {
    s.config.tp.kind = tp_kind::same_state_attack;
    s.policy = input_policy::random_pairs;
  } else if (name == "attack-improved") {
    s.config.variant = variant_kind::improved;
    s.config.tp.kind = tp_kind::same_state_attack;
    s.policy = input_policy::random_pairs;
  } else if (name == "eve") {
    s.config.eve_on = {channel_id::tp_to_b};
  } else {
    throw std::invalid_argument("unknown scenario: " + name);
  }
  return s;
}

inline const std::vector<std::string>& named_scenarios() {
  static const std::vector<std::string> names = {"honest", "attack-original",
                                                 "attack-improved", "eve"};
  return names;
}

}  // namespace qpc
