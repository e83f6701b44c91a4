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

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qpc/quantum.hpp"
#include "qpc/rng.hpp"

namespace qpc {
namespace {

TEST(BellCode, LabelsRoundTrip) {
  EXPECT_STREQ(to_label(bell_code{0, 0}), "Phi+");
  EXPECT_STREQ(to_label(bell_code{0, 1}), "Phi-");
  EXPECT_STREQ(to_label(bell_code{1, 0}), "Psi+");
  EXPECT_STREQ(to_label(bell_code{1, 1}), "Psi-");
  for (bell_code b : all_bell_codes) EXPECT_EQ(bell_from_label(to_label(b)), b);
  EXPECT_THROW(bell_from_label("Phi*"), std::invalid_argument);
}

TEST(PauliOp, CodesRoundTripAndXor) {
  EXPECT_STREQ(to_code(pauli_op{0, 0}), "00");
  EXPECT_STREQ(to_code(pauli_op{0, 1}), "01");
  EXPECT_STREQ(to_code(pauli_op{1, 0}), "10");
  EXPECT_STREQ(to_code(pauli_op{1, 1}), "11");
  for (pauli_op op : all_pauli_ops) {
    EXPECT_EQ(pauli_from_code(to_code(op)), op);
    EXPECT_TRUE(is_identity(op_xor(op, op)));
  }
  EXPECT_EQ(op_xor(pauli_op{1, 0}, pauli_op{0, 1}), (pauli_op{1, 1}));
  EXPECT_FALSE(is_identity(pauli_op{0, 1}));
  EXPECT_THROW(pauli_from_code("21"), std::invalid_argument);
}

TEST(ApplyPauli, CodeFollowsXorLawOnBothSides) {
  for (bell_code b : all_bell_codes) {
    for (pauli_op op : all_pauli_ops) {
      for (pair_side side : {pair_side::b, pair_side::c}) {
        const pair_state out = apply_pauli_to_bell({b, +1}, op, side);
        EXPECT_EQ(out.bell.parity, b.parity ^ op.bit_x);
        EXPECT_EQ(out.bell.phase, b.phase ^ op.bit_z);
      }
    }
  }
}

TEST(ApplyPauli, FrozenSignExamples) {
  EXPECT_EQ(apply_pauli_to_bell({bell_from_label("Phi-"), +1}, {1, 0}, pair_side::b),
            (pair_state{bell_from_label("Psi-"), -1}));
  EXPECT_EQ(apply_pauli_to_bell({bell_from_label("Phi+"), +1}, {1, 1}, pair_side::c),
            (pair_state{bell_from_label("Psi-"), -1}));
  EXPECT_EQ(apply_pauli_to_bell({bell_from_label("Psi+"), +1}, {1, 1}, pair_side::c),
            (pair_state{bell_from_label("Phi-"), +1}));
  EXPECT_EQ(apply_pauli_to_bell({bell_from_label("Psi+"), +1}, {0, 0}, pair_side::b),
            (pair_state{bell_from_label("Psi+"), +1}));
}

TEST(ApplyPauli, SingleOpMatchesDenseAmplitudeExactly) {
  const dense_mat2 identity = dense_pauli_matrix({0, 0});
  for (bell_code initial : all_bell_codes) {
    for (pauli_op op : all_pauli_ops) {
      for (pair_side side : {pair_side::b, pair_side::c}) {
        const pair_state out = apply_pauli_to_bell({initial, +1}, op, side);
        const dense_vec v = dense_apply(
            dense_bell_vector(initial),
            side == pair_side::b ? dense_pauli_matrix(op) : identity,
            side == pair_side::c ? dense_pauli_matrix(op) : identity);
        EXPECT_EQ(dense_bell_project(v), out.bell);
        const dense_amp amp = dense_inner(dense_bell_vector(out.bell), v);
        EXPECT_NEAR(amp.real(), out.sign, dense_tolerance);
        EXPECT_NEAR(amp.imag(), 0.0, dense_tolerance);
        EXPECT_NEAR(dense_norm(v), 1.0, dense_tolerance);
      }
    }
  }
}

TEST(ApplyPauli, BothSidesMatchDenseForAll64OpPairs) {
  for (bell_code initial : all_bell_codes) {
    for (pauli_op op_b : all_pauli_ops) {
      for (pauli_op op_c : all_pauli_ops) {
        pair_state s{initial, +1};
        s = apply_pauli_to_bell(s, op_b, pair_side::b);
        s = apply_pauli_to_bell(s, op_c, pair_side::c);
        const dense_vec v =
            dense_apply(dense_bell_vector(initial), dense_pauli_matrix(op_b),
                        dense_pauli_matrix(op_c));
        EXPECT_EQ(dense_bell_project(v), s.bell);
        const dense_amp amp = dense_inner(dense_bell_vector(s.bell), v);
        EXPECT_NEAR(amp.real(), s.sign, dense_tolerance);
        EXPECT_NEAR(amp.imag(), 0.0, dense_tolerance);
      }
    }
  }
}

TEST(ApplyPauli, SameOpOnBothSidesRestoresTheCode) {
  for (bell_code initial : all_bell_codes) {
    for (pauli_op op : all_pauli_ops) {
      pair_state s{initial, +1};
      s = apply_pauli_to_bell(s, op, pair_side::b);
      s = apply_pauli_to_bell(s, op, pair_side::c);
      EXPECT_EQ(s.bell, initial);
      EXPECT_TRUE(is_identity(deduce_op_xor(initial, s.bell)));
    }
  }
}

TEST(DeduceOpXor, RecoversTheXorOfBothOps) {
  for (bell_code initial : all_bell_codes) {
    for (pauli_op op_b : all_pauli_ops) {
      for (pauli_op op_c : all_pauli_ops) {
        pair_state s{initial, +1};
        s = apply_pauli_to_bell(s, op_b, pair_side::b);
        s = apply_pauli_to_bell(s, op_c, pair_side::c);
        EXPECT_EQ(deduce_op_xor(initial, measure_bell(s)), op_xor(op_b, op_c));
      }
    }
  }
}

std::vector<std::uint8_t> bits_of(const std::string& s) {
  std::vector<std::uint8_t> bits;
  for (char c : s) bits.push_back(static_cast<std::uint8_t>(c - '0'));
  return bits;
}

TEST(EncodeBits, PairsDigestBitsFromBitZeroUp) {
  EXPECT_EQ(encode_bits_to_ops(bits_of("1011")),
            (std::vector<pauli_op>{{1, 1}, {0, 1}}));
  EXPECT_EQ(encode_bits_to_ops(bits_of("00")), (std::vector<pauli_op>{{0, 0}}));
  EXPECT_EQ(encode_bits_to_ops(bits_of("0000")),
            (std::vector<pauli_op>{{0, 0}, {0, 0}}));
  EXPECT_EQ(encode_bits_to_ops(bits_of("111111")),
            (std::vector<pauli_op>{{1, 1}, {1, 1}, {1, 1}}));
}

TEST(EncodeBits, OddLengthGainsAZeroTopBit) {
  EXPECT_EQ(encode_bits_to_ops(bits_of("101")),
            (std::vector<pauli_op>{{1, 0}, {1, 0}}));
  EXPECT_EQ(encode_bits_to_ops(bits_of("1")), (std::vector<pauli_op>{{1, 0}}));
  EXPECT_EQ(encode_bits_to_ops(bits_of("101")), encode_bits_to_ops(bits_of("0101")));
}

TEST(EncodeBits, RejectsEmptyAndNonBits) {
  EXPECT_THROW(encode_bits_to_ops({}), std::invalid_argument);
  EXPECT_THROW(encode_bits_to_ops({0, 2}), std::invalid_argument);
}

TEST(Decoy, LabelsRoundTrip) {
  const decoy_state states[4] = {{basis::z, 0}, {basis::z, 1}, {basis::x, 0},
                                 {basis::x, 1}};
  const char* labels[4] = {"Z0", "Z1", "X0", "X1"};
  for (int i = 0; i < 4; ++i) {
    EXPECT_STREQ(to_label(states[i]), labels[i]);
    EXPECT_EQ(decoy_from_label(labels[i]), states[i]);
  }
  EXPECT_THROW(decoy_from_label("Y0"), std::invalid_argument);
}

TEST(Decoy, PrepareIsUniformOverTheFourStates) {
  rng_stream rng(2024);
  std::map<std::string, int> counts;
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[to_label(decoy_prepare(rng))];
  ASSERT_EQ(counts.size(), 4u);
  const double expected = n / 4.0;
  const double band = 3.0 * std::sqrt(n * 0.25 * 0.75);
  for (const auto& [label, count] : counts) {
    EXPECT_NEAR(count, expected, band) << label;
  }
}

TEST(Decoy, MatchedBasisMeasurementIsDeterministic) {
  rng_stream rng(5);
  for (const decoy_state d :
       {decoy_state{basis::z, 0}, decoy_state{basis::z, 1}, decoy_state{basis::x, 0},
        decoy_state{basis::x, 1}}) {
    const std::uint64_t before = rng.state();
    const decoy_measurement m = decoy_measure(d, d.b, rng);
    EXPECT_EQ(rng.state(), before);
    EXPECT_EQ(m.value, d.value);
    EXPECT_EQ(m.post, d);
  }
}

TEST(Decoy, MismatchedBasisMeasurementIsUniform) {
  rng_stream rng(6);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) {
    const decoy_measurement m = decoy_measure({basis::z, 0}, basis::x, rng);
    EXPECT_EQ(m.post.b, basis::x);
    EXPECT_EQ(m.post.value, m.value);
    ones += m.value;
  }
  const double band = 3.0 * std::sqrt(n * 0.25);
  EXPECT_NEAR(ones, n / 2.0, band);
}

TEST(Dense, BellVectorsAreOrthonormal) {
  for (bell_code a : all_bell_codes) {
    for (bell_code b : all_bell_codes) {
      const dense_amp inner = dense_inner(dense_bell_vector(a), dense_bell_vector(b));
      EXPECT_NEAR(inner.real(), a == b ? 1.0 : 0.0, dense_tolerance);
      EXPECT_NEAR(inner.imag(), 0.0, dense_tolerance);
    }
  }
}

TEST(Dense, BellVectorAmplitudes) {
  const double r = 1.0 / std::sqrt(2.0);
  const dense_vec phi_minus = dense_bell_vector({0, 1});
  EXPECT_NEAR(phi_minus[0].real(), r, dense_tolerance);
  EXPECT_NEAR(phi_minus[3].real(), -r, dense_tolerance);
  EXPECT_NEAR(std::abs(phi_minus[1]), 0.0, dense_tolerance);
  EXPECT_NEAR(std::abs(phi_minus[2]), 0.0, dense_tolerance);
  const dense_vec psi_plus = dense_bell_vector({1, 0});
  EXPECT_NEAR(psi_plus[1].real(), r, dense_tolerance);
  EXPECT_NEAR(psi_plus[2].real(), r, dense_tolerance);
}

TEST(Dense, ProjectRejectsNonBellVectors) {
  dense_vec product{};
  product[0] = 1.0;  // a basis state overlaps two Bell states equally
  EXPECT_THROW(dense_bell_project(product), std::logic_error);
  dense_vec zero{};
  EXPECT_THROW(dense_bell_project(zero), std::logic_error);
}

TEST(Dense, PauliMatricesSquareToIdentityUpToSign) {
  for (pauli_op op : all_pauli_ops) {
    const dense_mat2 m = dense_pauli_matrix(op);
    dense_mat2 sq{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) sq[i][j] += m[i][k] * m[k][j];
    const double expected = (op.bit_x && op.bit_z) ? -1.0 : 1.0;
    EXPECT_NEAR(sq[0][0].real(), expected, dense_tolerance);
    EXPECT_NEAR(sq[1][1].real(), expected, dense_tolerance);
    EXPECT_NEAR(std::abs(sq[0][1]), 0.0, dense_tolerance);
    EXPECT_NEAR(std::abs(sq[1][0]), 0.0, dense_tolerance);
  }
}

}  // namespace
}  // namespace qpc
