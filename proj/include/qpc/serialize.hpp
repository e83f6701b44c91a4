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

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "qpc/adversary.hpp"
#include "qpc/harness.hpp"
#include "qpc/protocol.hpp"
#include "qpc/quantum.hpp"

namespace qpc {

using json = nlohmann::ordered_json;

// Rounds through a %.6g print so emitted reals are reproducible across
// platforms and re-parse to the same value.
inline double round6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::strtod(buf, nullptr);
}

inline void to_json(json& j, const bell_code& b) { j = to_label(b); }

inline void to_json(json& j, const pauli_op& op) { j = to_code(op); }

inline void to_json(json& j, const decoy_state& d) { j = to_label(d); }

inline void to_json(json& j, const protocol_config& cfg) {
  j = json::object();
  j["variant"] = to_label(cfg.variant);
  j["n_pairs"] = cfg.n_pairs;
  j["hash_len"] = cfg.hash_len;
  j["decoy_count_per_channel"] = cfg.decoy_count_per_channel;
  j["reveal_fraction_sampling"] = round6(cfg.reveal_fraction_sampling);
  j["inconsistency_threshold"] = round6(cfg.inconsistency_threshold);
  j["tp_behavior"] = to_label(cfg.tp.kind);
  j["attack_state"] = cfg.tp.attack_state;
  j["eve_on"] = json::array();
  for (channel_id ch : cfg.eve_on) j["eve_on"].push_back(to_label(ch));
  j["seed"] = cfg.seed;
  j["x"] = cfg.x;
  j["y"] = cfg.y;
}

inline void to_json(json& j, const pair_record& rec) {
  j = json::object();
  j["original_index"] = rec.original_index;
  j["role"] = to_label(rec.role);
  j["initial"] = rec.initial;
  j["opB"] = rec.op_b;
  j["opC"] = rec.op_c;
  j["shuffled_position"] = rec.shuffled_position;
  j["tp_outcome_announced"] =
      rec.tp_outcome_announced ? json(*rec.tp_outcome_announced) : json(nullptr);
  j["tp_outcome_true"] = rec.tp_outcome_true ? json(*rec.tp_outcome_true) : json(nullptr);
}

inline void to_json(json& j, const decoy_record& rec) {
  j = json::object();
  j["channel"] = to_label(rec.channel);
  j["position"] = rec.position;
  j["prepared"] = rec.prepared;
  j["measured_value"] =
      rec.measured_value ? json(static_cast<int>(*rec.measured_value)) : json(nullptr);
}

inline void to_json(json& j, const decoy_check_result& r) {
  j = json::object();
  j["passed"] = r.passed;
  j["error_rate"] = round6(r.error_rate);
  j["checked"] = r.checked;
}

inline void to_json(json& j, const sampling_check_result& r) {
  j = json::object();
  j["passed"] = r.passed;
  j["inconsistency_rate"] = round6(r.inconsistency_rate);
  j["checked"] = r.checked;
}

inline void to_json(json& j, const transcript& t) {
  j = json::object();
  j["config"] = t.config;
  j["pairs"] = t.pairs;
  j["decoys"] = t.decoys;
  j["tp_preannouncement"] = json::object();
  for (const auto& [index, state] : t.tp_preannouncement)
    j["tp_preannouncement"][std::to_string(index)] = state;
  if (t.improved_sampling_ops_published) {
    json ops = json::object();
    for (const auto& [index, pair_ops] : *t.improved_sampling_ops_published) {
      json entry = json::object();
      entry["opB"] = pair_ops.first;
      entry["opC"] = pair_ops.second;
      ops[std::to_string(index)] = std::move(entry);
    }
    j["improved_sampling_ops_published"] = std::move(ops);
  } else {
    j["improved_sampling_ops_published"] = nullptr;
  }
  j["decoy_check_results"] = json::object();
  for (const auto& [ch, result] : t.decoy_check_results)
    j["decoy_check_results"][to_label(ch)] = result;
  j["sampling_check"] = t.sampling_check ? json(*t.sampling_check) : json(nullptr);
  j["participant_verdict"] = to_label(t.participant_verdict);
  j["tp_inference"] = to_label(t.tp_inference);
  j["ground_truth_equal"] = t.ground_truth_equal;
}

inline void to_json(json& j, const trial_stats& stats) {
  j = json::object();
  j["trials"] = stats.trials;
  j["verdict_counts"] = json::object();
  for (const auto& [verdict, count] : stats.verdict_counts)
    j["verdict_counts"][to_label(verdict)] = count;
  j["wrong_verdicts"] = stats.wrong_verdicts;
  j["tp_inference_correct"] = stats.tp_inference_correct;
  j["detection_count"] = stats.detection_count;
  j["mean_sampling_inconsistency"] = round6(stats.mean_sampling_inconsistency());
  j["sampling_checks_run"] = stats.sampling_checks_run;
  j["seeds_of_failures"] = stats.seeds_of_failures;
  j["excluded_collision_seeds"] = stats.excluded_collision_seeds;
}

inline void to_json(json& j, const prediction_report& r) {
  j = json::object();
  j["pass"] = r.pass;
  j["z"] = round6(r.z);
  j["empirical"] = round6(r.empirical);
  j["predicted"] = round6(r.predicted);
  j["trials"] = r.trials;
}

// Strict config overlay for --config files: every key must be known and
// well-typed.
inline void apply_config_json(protocol_config& cfg, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config json: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "variant") {
      cfg.variant = variant_from_label(value.get<std::string>());
    } else if (key == "n_pairs") {
      cfg.n_pairs = value.get<int>();
    } else if (key == "hash_len") {
      cfg.hash_len = value.get<int>();
    } else if (key == "decoy_count_per_channel") {
      cfg.decoy_count_per_channel = value.get<int>();
    } else if (key == "reveal_fraction_sampling") {
      cfg.reveal_fraction_sampling = value.get<double>();
    } else if (key == "inconsistency_threshold") {
      cfg.inconsistency_threshold = value.get<double>();
    } else if (key == "tp_behavior") {
      cfg.tp.kind = tp_kind_from_label(value.get<std::string>());
    } else if (key == "attack_state") {
      cfg.tp.attack_state = bell_from_label(value.get<std::string>());
    } else if (key == "eve_on") {
      cfg.eve_on.clear();
      for (const auto& ch : value) cfg.eve_on.push_back(channel_from_label(ch.get<std::string>()));
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "x") {
      cfg.x = value.get<std::string>();
    } else if (key == "y") {
      cfg.y = value.get<std::string>();
    } else {
      throw std::invalid_argument("config json: unknown key '" + key + "'");
    }
  }
}

}  // namespace qpc
