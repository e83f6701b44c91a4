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
#include <vector>

#include "qpc/hashing.hpp"
#include "qpc/rng.hpp"

namespace qpc {

// Reference values generated by scripts/reference_vectors.py. The generator
// is the source of truth; regenerate rather than editing these by hand.

struct mix64_case {
  std::uint64_t input;
  std::uint64_t output;
};

inline constexpr mix64_case frozen_mix64_cases[] = {
    {0x0000000000000000ull, 0xe220a8397b1dcdafull},
    {0x0000000000000001ull, 0x910a2dec89025cc1ull},
    {0x0000000000000002ull, 0x975835de1c9756ceull},
    {0x000000000000002aull, 0xbdd732262feb6e95ull},
    {0x00000000deadbeefull, 0x4adfb90f68c9eb9bull},
    {0x9e3779b97f4a7c15ull, 0x6e789e6aa1b965f4ull},
    {0xffffffffffffffffull, 0xe4d971771b652c20ull},
};

inline constexpr std::uint64_t frozen_stream_seed = 1;

inline constexpr std::uint64_t frozen_stream_values[] = {
    0x910a2dec89025cc1ull,
    0xbeeb8da1658eec67ull,
    0xf893a2eefb32555eull,
    0x71c18690ee42c90bull,
};

struct sampling_case {
  std::uint64_t seed;
  int n_total;
  int n_sampling;
  std::vector<int> expected;
};

inline const std::vector<sampling_case>& frozen_sampling_cases() {
  static const std::vector<sampling_case> cases = {
      {42, 10, 4, {0, 9, 5, 8}},
      {42, 10, 10, {0, 9, 5, 8, 6, 4, 7, 2, 1, 3}},
      {7, 5, 3, {4, 1, 3}},
      {123456789, 16, 8, {15, 11, 2, 13, 4, 14, 8, 3}},
      {0, 1, 1, {0}},
  };
  return cases;
}

struct frozen_check_report {
  int checked = 0;
  int mismatches = 0;
};

inline frozen_check_report verify_frozen_constants() {
  frozen_check_report report;
  for (const auto& c : frozen_mix64_cases) {
    ++report.checked;
    if (mix64_once(c.input) != c.output) ++report.mismatches;
  }
  rng_stream stream(frozen_stream_seed);
  for (std::uint64_t expected : frozen_stream_values) {
    ++report.checked;
    if (stream.next() != expected) ++report.mismatches;
  }
  for (const auto& c : frozen_sampling_cases()) {
    ++report.checked;
    if (sampling_positions(c.seed, c.n_total, c.n_sampling) != c.expected)
      ++report.mismatches;
  }
  return report;
}

}  // namespace qpc
