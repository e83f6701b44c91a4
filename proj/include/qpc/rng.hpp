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

namespace qpc {

// One 64-bit mixing step: advances the stream state by the golden-ratio
// increment and returns the mixed output. Every randomized component of the
// simulator draws from this primitive so that a seed pins down a whole run.
constexpr std::uint64_t mix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Output of a single mixing step, discarding the advanced state.
constexpr std::uint64_t mix64_once(std::uint64_t state) noexcept {
  return mix64(state);
}

// Deterministic stream of 64-bit draws seeded once and stepped with mix64.
class rng_stream {
 public:
  explicit constexpr rng_stream(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept { return mix64(state_); }

  // Residue reduction; the bias is negligible for the tiny ranges used here.
  constexpr std::uint64_t next_below(std::uint64_t n) noexcept {
    return next() % n;
  }

  constexpr std::uint8_t next_bit() noexcept {
    return static_cast<std::uint8_t>(next() & 1u);
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace qpc
