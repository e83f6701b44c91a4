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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qpc/frozen_vectors.hpp"
#include "qpc/harness.hpp"
#include "qpc/serialize.hpp"

namespace {

std::vector<qpc::channel_id> parse_channel_list(const std::string& csv) {
  std::vector<qpc::channel_id> channels;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) channels.push_back(qpc::channel_from_label(item));
  return channels;
}

struct run_options {
  std::string scenario_name = "honest";
  std::string config_path;
  int trials = 1;
  std::uint64_t base_seed = 0;
  int n_pairs = -1;
  int hash_len = -1;
  std::string variant;
  std::string tp;
  std::string eve_csv;
  double reveal_fraction = -1.0;
  double threshold = -1.0;
  std::string x_input;
  std::string y_input;
  std::string transcripts_path;
  bool config_given = false;
  bool inputs_given = false;
  bool eve_given = false;
};

int do_run(const run_options& opt) {
  qpc::scenario s;
  if (opt.config_given) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + opt.config_path);
    qpc::json j = qpc::json::parse(in);
    s.name = "config";
    s.policy = qpc::input_policy::fixed;
    qpc::apply_config_json(s.config, j);
  } else {
    s = qpc::make_named_scenario(opt.scenario_name);
  }
  if (opt.n_pairs >= 0) s.config.n_pairs = opt.n_pairs;
  if (opt.hash_len >= 0) s.config.hash_len = opt.hash_len;
  if (!opt.variant.empty()) {
    if (opt.variant == "original")
      s.config.variant = qpc::variant_kind::original;
    else if (opt.variant == "improved")
      s.config.variant = qpc::variant_kind::improved;
    else
      throw std::invalid_argument("--variant must be 'original' or 'improved'");
  }
  if (!opt.tp.empty()) {
    if (opt.tp == "honest")
      s.config.tp.kind = qpc::tp_kind::honest;
    else if (opt.tp == "same-state")
      s.config.tp.kind = qpc::tp_kind::same_state_attack;
    else
      throw std::invalid_argument("--tp must be 'honest' or 'same-state'");
  }
  if (opt.eve_given) s.config.eve_on = parse_channel_list(opt.eve_csv);
  if (opt.reveal_fraction >= 0.0) s.config.reveal_fraction_sampling = opt.reveal_fraction;
  if (opt.threshold >= 0.0) s.config.inconsistency_threshold = opt.threshold;
  if (opt.inputs_given) {
    s.policy = qpc::input_policy::fixed;
    s.config.x = opt.x_input;
    s.config.y = opt.y_input;
  }
  s.trials = opt.trials;
  s.base_seed = opt.base_seed;
  s.config.validate();

  std::ofstream transcripts_out;
  if (!opt.transcripts_path.empty()) {
    transcripts_out.open(opt.transcripts_path);
    if (!transcripts_out)
      throw std::invalid_argument("cannot open transcript file: " + opt.transcripts_path);
  }
  const qpc::trial_stats stats =
      qpc::run_trials(s, [&](const qpc::transcript& t) {
        if (transcripts_out.is_open()) transcripts_out << qpc::json(t).dump() << '\n';
      });

  qpc::json out = qpc::json::object();
  out["name"] = s.name;
  out["policy"] = qpc::to_label(s.policy);
  out["trials"] = s.trials;
  out["base_seed"] = s.base_seed;
  out["config"] = s.config;
  out["stats"] = stats;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int do_predict(int attack_sampling, int eve_decoys) {
  if (attack_sampling < 0 && eve_decoys < 0)
    throw std::invalid_argument("predict: provide --attack-sampling and/or --eve-decoys");
  qpc::json out = qpc::json::object();
  if (attack_sampling >= 0) {
    qpc::json entry = qpc::json::object();
    entry["audited_pairs"] = attack_sampling;
    entry["detection_probability"] =
        qpc::round6(qpc::predict_attack_detection(attack_sampling));
    out["attack_sampling"] = std::move(entry);
  } else {
    out["attack_sampling"] = nullptr;
  }
  if (eve_decoys >= 0) {
    qpc::json entry = qpc::json::object();
    entry["decoys"] = eve_decoys;
    entry["detection_probability"] = qpc::round6(qpc::predict_eve_detection(eve_decoys));
    out["eve_decoys"] = std::move(entry);
  } else {
    out["eve_decoys"] = nullptr;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int do_vectors(const std::string& path) {
  const auto vectors = qpc::load_hash_vectors(path);
  const int file_mismatches = qpc::verify_hash_vectors(vectors);
  const auto frozen = qpc::verify_frozen_constants();
  const bool ok = file_mismatches == 0 && frozen.mismatches == 0;
  qpc::json out = qpc::json::object();
  out["ok"] = ok;
  out["file"] = path;
  out["file_vectors"] = static_cast<int>(vectors.size());
  out["file_mismatches"] = file_mismatches;
  out["frozen_checked"] = frozen.checked;
  out["frozen_mismatches"] = frozen.mismatches;
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}

int do_demo() {
  qpc::json out = qpc::json::array();
  int index = 0;
  for (const std::string& name : qpc::named_scenarios()) {
    qpc::scenario s = qpc::make_named_scenario(name);
    s.config.hash_len = 8;
    s.config.n_pairs = 8;
    s.config.decoy_count_per_channel = 4;
    s.config.seed = qpc::mix64_once(0x00DEC0DEull + static_cast<std::uint64_t>(index));
    const bool wants_equal = name == "honest" || name == "eve";
    s.config.x = wants_equal ? "compare-me" : "alpha";
    s.config.y = wants_equal ? "compare-me" : "bravo";
    const qpc::transcript t = qpc::run_protocol(s.config);
    std::cerr << "[demo] " << name << ": verdict " << qpc::to_label(t.participant_verdict)
              << ", tp inference " << qpc::to_label(t.tp_inference)
              << ", ground truth " << (t.ground_truth_equal ? "equal" : "unequal")
              << '\n';
    qpc::json entry = qpc::json::object();
    entry["name"] = name;
    entry["transcript"] = t;
    out.push_back(std::move(entry));
    ++index;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-pair private comparison simulator"};
  app.require_subcommand(1);

  run_options ropt;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario for a number of trials");
  auto* scenario_opt =
      run_cmd->add_option("--scenario", ropt.scenario_name,
                          "Named scenario: honest, attack-original, attack-improved, eve");
  auto* config_opt = run_cmd->add_option("--config", ropt.config_path,
                                         "JSON file with protocol settings");
  config_opt->excludes(scenario_opt);
  run_cmd->add_option("--trials", ropt.trials, "Number of trials");
  run_cmd->add_option("--seed", ropt.base_seed, "Base seed; trial t runs with a seed derived from it")
      ->required();
  run_cmd->add_option("--n-pairs", ropt.n_pairs, "EPR pairs per run");
  run_cmd->add_option("--hash-len", ropt.hash_len, "Digest length in bits");
  run_cmd->add_option("--variant", ropt.variant, "Protocol variant: original or improved");
  run_cmd->add_option("--tp", ropt.tp, "Third-party behavior: honest or same-state");
  auto* eve_opt = run_cmd->add_option(
      "--eve", ropt.eve_csv, "Comma-separated tapped channels, e.g. 'TP->B,B->TP'");
  run_cmd->add_option("--reveal-fraction", ropt.reveal_fraction,
                      "Fraction of sampling pairs audited");
  run_cmd->add_option("--threshold", ropt.threshold,
                      "Tolerated decoy/sampling inconsistency rate");
  auto* x_opt = run_cmd->add_option("--x", ropt.x_input, "First party's secret input");
  auto* y_opt = run_cmd->add_option("--y", ropt.y_input, "Second party's secret input");
  x_opt->needs(y_opt);
  y_opt->needs(x_opt);
  run_cmd->add_option("--transcripts", ropt.transcripts_path,
                      "Write one JSON transcript per line to this file");

  int attack_sampling = -1;
  int eve_decoys = -1;
  auto* predict_cmd =
      app.add_subcommand("predict", "Closed-form detection probabilities");
  predict_cmd->add_option("--attack-sampling", attack_sampling,
                          "Audited sampling pairs in the improved variant");
  predict_cmd->add_option("--eve-decoys", eve_decoys,
                          "Decoys checked on an intercepted channel");

  std::string vectors_path = "data/hash_vectors.txt";
  auto* vectors_cmd =
      app.add_subcommand("vectors", "Verify reference vectors and frozen constants");
  vectors_cmd->add_option("--file", vectors_path, "Hash vector fixture file");

  auto* demo_cmd = app.add_subcommand("demo", "Run each named scenario once, small sizes");

  try {
    app.parse(argc, argv);
    if (*run_cmd) {
      ropt.config_given = config_opt->count() > 0;
      ropt.inputs_given = x_opt->count() > 0;
      ropt.eve_given = eve_opt->count() > 0;
      return do_run(ropt);
    }
    if (*predict_cmd) return do_predict(attack_sampling, eve_decoys);
    if (*vectors_cmd) return do_vectors(vectors_path);
    if (*demo_cmd) return do_demo();
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
