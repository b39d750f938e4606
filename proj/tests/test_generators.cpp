// Copyright 2026 The Interlace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "interlace/domains.hpp"
#include "interlace/error.hpp"
#include "interlace/exact.hpp"
#include "interlace/generators.hpp"
#include "oracles.hpp"

using namespace interlace;
using testing_support::ballots_of;
using testing_support::committee;
using testing_support::ids;
using testing_support::mask_of;

namespace {

std::vector<VoterId> support(const Election& e, const std::string& label) {
  auto s = e.supporters(*e.find_candidate(label));
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Examples, FourVoterProfile) {
  const Election e = gen_example(1).election;
  EXPECT_EQ(e.n(), 4u);
  EXPECT_EQ(e.m(), 6u);
  EXPECT_EQ(e.k(), 4u);
  EXPECT_EQ(support(e, "b1"), (std::vector<VoterId>{0, 1}));
  EXPECT_EQ(support(e, "c1"), support(e, "c3"));
}

TEST(Examples, SixCycleProfile) {
  const Election e = gen_example(2).election;
  EXPECT_EQ(e.n(), 6u);
  EXPECT_EQ(e.m(), 8u);
  EXPECT_EQ(e.k(), 6u);
  EXPECT_EQ(support(e, "d1"), (std::vector<VoterId>{1, 5}));
  EXPECT_EQ(cons_score(e, committee(e, {"c1", "c2", "c3", "c4", "c5", "c6"})), 15u);
  EXPECT_EQ(cons_score(e, committee(e, {"c1", "c3", "c4", "c6", "d1", "d2"})), 6u);
  EXPECT_THROW(gen_example(3), ArgumentError);
}

TEST(BlockCentral, CountsAndCertificates) {
  const Instance inst = gen_block_central(2);
  EXPECT_EQ(inst.election.m(), 17u);
  EXPECT_EQ(inst.election.n(), 20u);
  EXPECT_EQ(inst.election.k(), 9u);
  ASSERT_TRUE(inst.ci && inst.vi);
  EXPECT_TRUE(verify_ci_order(inst.election, *inst.ci));
  EXPECT_TRUE(verify_vi_order(inst.election, *inst.vi));
  EXPECT_FALSE(gen_block_central(1).notes.empty());
}

TEST(BlockCentral, ClosedFormsMatchScoring) {
  for (std::uint64_t x : {2, 3}) {
    const Election e = gen_block_central(x).election;
    const std::uint64_t x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    for (std::uint64_t g = 0; g <= x3; ++g) {
      const Committee w(e, block_central_committee(x, g));
      EXPECT_EQ(w.size(), e.k());
      EXPECT_EQ(av_score(e, w), (g + 1) * x2 + (x3 - g) * x);
      EXPECT_EQ(2 * pairs_score(e, w), (x4 - x2) + (x3 - g) * (x2 - x));
    }
  }
  const Election e = gen_block_central(2).election;
  const auto b = ballots_of(e);
  EXPECT_EQ(oracle::av(b, mask_of(Committee(e, block_central_committee(2, 8)))), 36u);
  EXPECT_EQ(oracle::pairs(b, mask_of(Committee(e, block_central_committee(2, 0)))), 14u);
}

TEST(BlockArm, CountsAndClosedForms) {
  const Instance inst = gen_block_arm(2);
  EXPECT_EQ(inst.election.n(), 57u);
  EXPECT_EQ(inst.election.m(), 33u);
  EXPECT_EQ(inst.election.k(), 17u);
  ASSERT_TRUE(inst.ci.has_value());
  EXPECT_TRUE(verify_ci_order(inst.election, *inst.ci));
  for (std::uint64_t x : {2, 3}) {
    const Election e = gen_block_arm(x).election;
    const std::uint64_t x3 = x * x * x, x4 = x3 * x;
    for (std::uint64_t g = 0; g <= x4; ++g) {
      const Committee w(e, block_arm_committee(x4, g + 1, x4 - g));
      EXPECT_EQ(w.size(), e.k());
      EXPECT_EQ(cc_score(e, w), (x4 - g) * x + g + x3 + 1);
      EXPECT_EQ(pairs_score(e, w), (x4 - g) * binom2(x) + binom2(x3 + 1) + g * x3);
    }
  }
}

TEST(BlockArm, ScaledVariant) {
  const Instance half = gen_block_arm_scaled(2, Rational(1, 2));
  EXPECT_EQ(half.election.n(), 41u);
  EXPECT_EQ(half.election.m(), 8u + 17u);
  EXPECT_EQ(half.election.k(), 17u);
  EXPECT_EQ(gen_block_arm_scaled(2, Rational(1)).election, gen_block_arm(2).election);
  EXPECT_THROW(gen_block_arm_scaled(2, Rational(1, 3)), ArgumentError);
}

TEST(ViBlockChain, CountsAndCertificates) {
  const Instance inst = gen_vi_block_chain(2);
  const Election& e = inst.election;
  EXPECT_EQ(e.n(), 25u);
  EXPECT_EQ(e.m(), 16u);
  EXPECT_EQ(e.k(), 8u);
  ASSERT_TRUE(inst.vi && inst.vci);
  EXPECT_TRUE(verify_vi_order(e, *inst.vi));
  EXPECT_TRUE(verify_vci(e, *inst.vci));
  const Committee central(e, vi_block_chain_committee(8, 0, 8));
  EXPECT_EQ(cons_score(e, central), 36u);
  EXPECT_EQ(oracle::cons(ballots_of(e), mask_of(central)), 36u);
  const Instance small = gen_vi_block_chain(2, Rational(1, 2));
  EXPECT_EQ(small.election.m(), 12u);
  EXPECT_THROW(gen_vi_block_chain(2, Rational(1, 3)), ArgumentError);
}

TEST(ArmsChains, CountsAndConnectivity) {
  const Instance inst = gen_arms_chains(2, 3);
  const Election& e = inst.election;
  EXPECT_EQ(e.m(), 28u);
  EXPECT_EQ(e.n(), 38u);
  EXPECT_EQ(e.k(), 16u);
  EXPECT_FALSE(inst.ci.has_value());
  EXPECT_FALSE(inst.notes.empty());
  const Committee chains(e, arms_chains_committee(2, 3, 0));
  EXPECT_EQ(chains.size(), e.k());
  // Arm, chain and central voters form one component; one block adds C(4, 2).
  EXPECT_EQ(cons_score(e, chains), binom2(34) + binom2(4));
  const auto comps = connected_components(e, chains);
  std::size_t largest = 0;
  for (const auto& c : comps) largest = std::max(largest, c.size());
  EXPECT_EQ(largest, 34u);
}

TEST(ArmsChains, TwoArmsShipCiOrder) {
  const Instance inst = gen_arms_chains(2, 2);
  ASSERT_TRUE(inst.ci.has_value());
  EXPECT_TRUE(verify_ci_order(inst.election, *inst.ci));
  const Instance one = gen_arms_chains(3, 1);
  ASSERT_TRUE(one.ci.has_value());
  EXPECT_TRUE(verify_ci_order(one.election, *one.ci));
}

TEST(X3c, SingleSetPairsVariant) {
  X3cInstance x3c{1, {{0, 1, 2}}};
  const X3cReduction r = gen_from_x3c(x3c, X3cVariant::kPairs);
  EXPECT_EQ(r.election.n(), 6u);
  EXPECT_EQ(r.threshold, 15u);
  EXPECT_EQ(pairs_score(r.election, Committee(r.election, {0})), 15u);
}

TEST(X3c, YesAndNoInstances) {
  const X3cInstance yes{2, {{0, 1, 2}, {3, 4, 5}, {1, 2, 3}}};
  const X3cInstance no{2, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}}};
  ASSERT_TRUE(oracle::exact_cover(yes.rho, yes.sets));
  ASSERT_FALSE(oracle::exact_cover(no.rho, no.sets));
  for (auto variant : {X3cVariant::kPairs, X3cVariant::kCons}) {
    const auto kind = variant == X3cVariant::kPairs ? ObjectiveKind::kPairs : ObjectiveKind::kCons;
    const X3cReduction ry = gen_from_x3c(yes, variant);
    EXPECT_GE(brute_force_opt(ry.election, kind, ry.election.k()).score, ry.threshold);
    const X3cReduction rn = gen_from_x3c(no, variant);
    EXPECT_LT(brute_force_opt(rn.election, kind, rn.election.k()).score, rn.threshold);
  }
}

TEST(X3c, RejectsMalformedSets) {
  EXPECT_THROW(gen_from_x3c({1, {{0, 1, 3}}}, X3cVariant::kPairs), ArgumentError);
  EXPECT_THROW(gen_from_x3c({1, {{0, 0, 1}}}, X3cVariant::kCons), ArgumentError);
  EXPECT_THROW(gen_from_x3c({2, {{0, 1, 2}}}, X3cVariant::kCons), ArgumentError);
}

TEST(Random, ReproducibleAndCertified) {
  for (auto d : {RandomDomain::kNone, RandomDomain::kVI, RandomDomain::kCI, RandomDomain::kVCI}) {
    const Instance a = gen_random(9, 7, 3, d, 42);
    const Instance b = gen_random(9, 7, 3, d, 42);
    EXPECT_EQ(a.election, b.election);
    EXPECT_EQ(a.ci, b.ci);
    EXPECT_EQ(a.vi, b.vi);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance vi = gen_random(8, 6, 2, RandomDomain::kVI, seed);
    ASSERT_TRUE(vi.vi.has_value());
    EXPECT_TRUE(verify_vi_order(vi.election, *vi.vi));
    const Instance ci = gen_random(8, 6, 2, RandomDomain::kCI, seed);
    ASSERT_TRUE(ci.ci.has_value());
    EXPECT_TRUE(oracle::contiguous_ballots(ballots_of(ci.election), ci.ci->order));
  }
  EXPECT_NE(gen_random(9, 7, 3, RandomDomain::kNone, 1).election,
            gen_random(9, 7, 3, RandomDomain::kNone, 2).election);
}

TEST(Random, ZeroDensityIsFlagged) {
  const Instance inst = gen_random(5, 4, 2, RandomDomain::kNone, 3, 0.0);
  for (VoterId v = 0; v < inst.election.n(); ++v) EXPECT_TRUE(inst.election.approvals(v).empty());
  EXPECT_FALSE(inst.notes.empty());
  EXPECT_THROW(gen_random(5, 4, 2, RandomDomain::kNone, 3, 1.5), ArgumentError);
}
