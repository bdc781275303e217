// Copyright 2026 The bcnobs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <bcnobs/observability.hpp>
#include <bcnobs/oracle.hpp>
#include <bcnobs/random.hpp>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace bcnobs {
namespace {

using namespace bcnobs::testing;
using T = ObservabilityType;

// Test-local enumeration: does some word of length `len` separate x, x'?
bool separable_at(const Bcn& b, StateIdx x, StateIdx xp, std::size_t len) {
  for (const auto& w : words_up_to(b.input_count(), len))
    if (w.size() == len && outputs_from(b, x, w) != outputs_from(b, xp, w)) return true;
  return false;
}

// Test-local enumeration: does every word of length `len` separate x, x'?
bool always_separated_at(const Bcn& b, StateIdx x, StateIdx xp, std::size_t len) {
  for (const auto& w : words_up_to(b.input_count(), len))
    if (w.size() == len && outputs_from(b, x, w) == outputs_from(b, xp, w)) return false;
  return true;
}

Bcn dead_end_network() { return make_bcn(4, 2, 2, {1, 1, 3, 3, 1, 1, 3, 3}, {1, 1, 2, 2}); }

TEST(DecideI, Bcn5NotObservable) {
  const auto v = decide_I(bcn5());
  EXPECT_FALSE(v.observable);
  EXPECT_EQ(v.offending_state, sx(2));
  ASSERT_FALSE(v.automata.empty());
  EXPECT_EQ(v.automata.back().states, 3u);
  EXPECT_TRUE(v.automata.back().complete);
}

TEST(DecideI, Bcn7Observable) {
  const auto v = decide_I(bcn7());
  EXPECT_TRUE(v.observable);
  EXPECT_EQ(v.state_witnesses.at(sx(1)), make_word({2}));
  EXPECT_EQ(v.state_witnesses.at(sx(3)), make_word({1}));
  EXPECT_TRUE(verify_witness(bcn7(), v));
}

TEST(DecideI, NoNonDiagonalVertices) {
  const Bcn b(LogicalMatrix(4, {2, 3, 4, 1, 1, 1, 2, 2}), LogicalMatrix::identity(4), 2,
              ColumnOrder::InputFirst);
  const auto v = decide_I(b);
  EXPECT_TRUE(v.observable);
  EXPECT_TRUE(v.state_witnesses.empty());
  EXPECT_EQ(v.trivially_determined.size(), 4u);
}

TEST(DecideII, Bcn5Observable) {
  const auto v = decide_II(bcn5());
  EXPECT_TRUE(v.observable);
  const std::map<PairVertex, Word> expected{
      {pv(2, 3), make_word({2})}, {pv(2, 4), make_word({1})}, {pv(3, 4), make_word({1})}};
  EXPECT_EQ(v.pair_witnesses, expected);
}

TEST(DecideII, ConstantOutputNotObservable) {
  const auto b = make_bcn(2, 2, 2, {1, 2, 2, 1}, {1, 1});
  const auto v = decide_II(b);
  EXPECT_FALSE(v.observable);
  EXPECT_EQ(v.offending_pair, pv(1, 2));
}

TEST(DecideII, Bcn7ObservableAgreesWithEnumeration) {
  const auto b = bcn7();
  EXPECT_TRUE(decide_II(b).observable);
  // N_nd = 2: both confusable pairs separable by some word of length 2.
  EXPECT_TRUE(separable_at(b, sx(1), sx(2), 2));
  EXPECT_TRUE(separable_at(b, sx(3), sx(4), 2));
}

TEST(DecideIII, Examples) {
  EXPECT_FALSE(decide_III(bcn5()).observable);
  const auto v6 = decide_III(bcn6());
  EXPECT_TRUE(v6.observable);
  EXPECT_EQ(v6.universal_word, make_word({1}));
  const auto v7 = decide_III(bcn7());
  EXPECT_FALSE(v7.observable);
  ASSERT_EQ(v7.automata.size(), 1u);
  EXPECT_EQ(v7.automata[0].states, 4u);
  EXPECT_TRUE(v7.automata[0].complete);
}

TEST(DecideIV, Examples) {
  EXPECT_FALSE(decide_IV(bcn5()).observable);
  const auto v6 = decide_IV(bcn6());
  EXPECT_FALSE(v6.observable);
  ASSERT_TRUE(v6.lasso.has_value());
  EXPECT_TRUE(verify_witness(bcn6(), v6));

  const auto dead = dead_end_network();
  EXPECT_TRUE(decide_IV(dead).observable);
  // N_nd = 2: every word of length 2 separates both confusable pairs.
  EXPECT_TRUE(always_separated_at(dead, sx(1), sx(2), 2));
  EXPECT_TRUE(always_separated_at(dead, sx(3), sx(4), 2));
}

TEST(ImplicationMatrix, Fixtures) {
  const auto r5 = implication_matrix(bcn5());
  EXPECT_FALSE(r5[T::I].observable);
  EXPECT_TRUE(r5[T::II].observable);
  EXPECT_FALSE(r5[T::III].observable);
  EXPECT_FALSE(r5[T::IV].observable);
  EXPECT_FALSE(r5.violation);

  const auto r6 = implication_matrix(bcn6());
  EXPECT_TRUE(r6[T::I].observable);
  EXPECT_TRUE(r6[T::II].observable);
  EXPECT_TRUE(r6[T::III].observable);
  EXPECT_FALSE(r6[T::IV].observable);
  EXPECT_FALSE(r6.violation);

  const auto r7 = implication_matrix(bcn7());
  EXPECT_TRUE(r7[T::I].observable);
  EXPECT_TRUE(r7[T::II].observable);
  EXPECT_FALSE(r7[T::III].observable);
  EXPECT_FALSE(r7[T::IV].observable);
  EXPECT_FALSE(r7.violation);

  // Strictness: II =/=> I (bcn5), III =/=> IV (bcn6), I =/=> III and I =/=> IV (bcn7).
  EXPECT_FALSE(r5.holds[type_slot(T::II)][type_slot(T::I)]);
  EXPECT_FALSE(r6.holds[type_slot(T::III)][type_slot(T::IV)]);
  EXPECT_FALSE(r7.holds[type_slot(T::I)][type_slot(T::III)]);
  EXPECT_FALSE(r7.holds[type_slot(T::I)][type_slot(T::IV)]);
}

TEST(ImplicationMatrix, ExpectedOrder) {
  EXPECT_TRUE(ImplicationReport::expected(T::IV, T::III));
  EXPECT_TRUE(ImplicationReport::expected(T::IV, T::I));
  EXPECT_TRUE(ImplicationReport::expected(T::IV, T::II));
  EXPECT_TRUE(ImplicationReport::expected(T::III, T::I));
  EXPECT_TRUE(ImplicationReport::expected(T::I, T::II));
  EXPECT_FALSE(ImplicationReport::expected(T::II, T::I));
  EXPECT_FALSE(ImplicationReport::expected(T::III, T::IV));
}

TEST(ImplicationMatrix, RandomSuiteHasNoViolations) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const unsigned n = 2 + seed % 2, m = 1 + (seed / 2) % 2, q = 1 + (seed / 4) % 2;
    const auto b = gen_random_bcn(seed, n, m, q);
    ASSERT_FALSE(implication_matrix(b).violation) << "seed " << seed;
  }
}

TEST(LengthBounds, TypeIIAndIVMatchEnumerationAtNnd) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = gen_random_bcn(500 + seed, 2 + seed % 2, 1, 1 + seed % 2);
    const auto g = PairGraph::build(b);
    const auto nd = g.non_diagonal_vertices();
    bool all_separable = true, all_always = true;
    for (const auto& v : nd) {
      all_separable &= separable_at(b, v.lo, v.hi, nd.size());
      all_always &= always_separated_at(b, v.lo, v.hi, nd.size());
    }
    ASSERT_EQ(decide_II(b).observable, all_separable) << "seed " << seed;
    ASSERT_EQ(decide_IV(b).observable, all_always) << "seed " << seed;
  }
}

TEST(Verdicts, WitnessesVerifyOnRandomNetworks) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = gen_random_bcn(7000 + seed, 3, 1 + seed % 2, 1 + seed % 3 % 2);
    const auto r = implication_matrix(b);
    for (auto t : kAllTypes) ASSERT_TRUE(verify_witness(b, r[t])) << "seed " << seed;
  }
}

TEST(ExactHorizon, Fixtures) {
  const auto g5 = PairGraph::build(bcn5());
  EXPECT_EQ(exact_horizon(g5, T::II), 3u);
  EXPECT_EQ(exact_horizon(g5, T::IV), 3u);
  EXPECT_EQ(exact_horizon(g5, T::III), 2u);
  EXPECT_EQ(exact_horizon(g5, T::I), 3u);  // A_x3: {23,34} -> {22} -> {11}
  const auto g7 = PairGraph::build(bcn7());
  EXPECT_EQ(exact_horizon(g7, T::III), 3u);
  EXPECT_EQ(exact_horizon(g7, T::I), 3u);
}

TEST(ObservabilityType, Names) {
  for (auto t : kAllTypes) EXPECT_EQ(parse_type(to_string(t)), t);
  EXPECT_THROW(parse_type("V"), std::invalid_argument);
}

}  // namespace
}  // namespace bcnobs
