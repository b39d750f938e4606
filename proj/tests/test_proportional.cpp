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

#include <random>

#include "helpers.hpp"
#include "interlace/error.hpp"
#include "interlace/generators.hpp"
#include "interlace/proportional.hpp"
#include "oracles.hpp"

using namespace interlace;
using testing_support::ballots_of;
using testing_support::mask_of;

namespace {

// v1, v2 approve a; v3, v4 approve b; c is approved by nobody.
Election two_blocks() { return Election(3, {{0}, {0}, {1}, {1}}, 2, {}, {"a", "b", "dummy"}); }

}  // namespace

TEST(EqualShares, PriceSolvesTheCapEquation) {
  EXPECT_EQ(*equal_share_price({Rational(1, 2), Rational(1, 2)}), Rational(1, 2));
  EXPECT_EQ(*equal_share_price({Rational(1, 10), Rational(1), Rational(1)}), Rational(9, 20));
  EXPECT_FALSE(equal_share_price({Rational(1, 4), Rational(1, 4)}).has_value());
  EXPECT_FALSE(equal_share_price({}).has_value());
}

TEST(Mes, UnanimousCandidate) {
  Election e(2, {{0}, {0}, {0}}, 1);
  const MesResult r = alpha_mes(e, Rational(1));
  EXPECT_EQ(r.committee.size(), 1u);
  EXPECT_EQ(r.committee.members()[0], 0u);
}

TEST(Mes, TwoBlocksFullBudget) {
  const Election e = two_blocks();
  const MesResult r = alpha_mes(e, Rational(1));
  ASSERT_EQ(r.rounds.size(), 2u);
  EXPECT_EQ(r.rounds[0].candidate, 0u);
  EXPECT_EQ(r.rounds[0].price, Rational(1, 2));
  EXPECT_EQ(r.rounds[1].candidate, 1u);
  EXPECT_EQ(r.rounds[1].price, Rational(1, 2));
  EXPECT_EQ(r.initial_budget, Rational(1, 2));
  for (const auto& b : r.budgets) EXPECT_EQ(b, Rational(0));
}

TEST(Mes, BudgetTooSmall) {
  const MesResult r = alpha_mes(two_blocks(), Rational(2, 5));
  EXPECT_TRUE(r.committee.empty());
  EXPECT_EQ(r.target, 0u);
}

TEST(Mes, HalfBudgetCannotAffordAHalfBlock) {
  // Budgets of 1/4 each: two supporters hold only 1/2, below the unit cost.
  const MesResult r = alpha_mes(two_blocks(), Rational(1, 2));
  EXPECT_EQ(r.target, 1u);
  EXPECT_TRUE(r.committee.empty());
}

TEST(Mes, HalfBudgetBuysUnanimousCandidate) {
  Election e(2, {{0}, {0}, {0, 1}, {0, 1}}, 2);
  const MesResult r = alpha_mes(e, Rational(1, 2));
  ASSERT_EQ(r.committee.size(), 1u);
  EXPECT_EQ(r.committee.members()[0], 0u);
  EXPECT_EQ(r.rounds[0].price, Rational(1, 4));
}

TEST(Mes, RejectsAlphaOutOfRange) {
  EXPECT_THROW(alpha_mes(two_blocks(), Rational(0)), ArgumentError);
  EXPECT_THROW(alpha_mes(two_blocks(), Rational(3, 2)), ArgumentError);
}

TEST(Mes, ConservesBudgetAndSatisfiesEjr) {
  std::mt19937 rng(77);
  const Rational alphas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  const std::uint64_t nums[] = {1, 1, 3, 1}, dens[] = {4, 2, 4, 1};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 8, k = 1 + rng() % std::min<std::size_t>(m, 5);
    auto b = oracle::random_ballots(rng, n, m);
    Election e(m, b, k);
    for (int a = 0; a < 4; ++a) {
      const MesResult r = alpha_mes(e, alphas[a]);
      EXPECT_LE(r.committee.size(), r.target);
      EXPECT_EQ(Rational(r.target), Rational(floor(alphas[a] * k)));
      Rational remaining = 0;
      for (const auto& v : r.budgets) {
        EXPECT_GE(v, 0);
        remaining += v;
      }
      EXPECT_EQ(r.initial_budget * n - remaining, Rational(r.committee.size()));
      EXPECT_TRUE(oracle::ejr_holds(b, m, k, mask_of(r.committee), nums[a], dens[a]))
          << "trial " << trial << " alpha " << to_string(alphas[a]);
      EXPECT_TRUE(check_alpha_ejr(e, r.committee, alphas[a]).satisfied);
    }
  }
}

TEST(Ejr, TwoBlockVerdicts) {
  const Election e = two_blocks();
  EXPECT_TRUE(check_alpha_ejr(e, Committee(e, {0, 1}), Rational(1)).satisfied);
  const EjrVerdict v = check_alpha_ejr(e, Committee(e, {0, 2}), Rational(1));
  ASSERT_FALSE(v.satisfied);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->level, 1u);
  EXPECT_EQ(v.witness->candidates, (std::vector<CandidateId>{1}));
  EXPECT_EQ(v.witness->group, (std::vector<VoterId>{2, 3}));
  // α = 1/2 halves the demand: the group of two no longer reaches n/k.
  EXPECT_TRUE(check_alpha_ejr(e, Committee(e, {0, 2}), Rational(1, 2)).satisfied);
}

TEST(Ejr, VacuousWhenNoCohesiveGroup) {
  Election e(3, {{0}, {1}, {2}}, 1);
  EXPECT_TRUE(check_alpha_ejr(e, Committee(e, {0}), Rational(1)).satisfied);
}

TEST(Ejr, ZeroAlphaAndLimits) {
  const Election e = two_blocks();
  EXPECT_TRUE(check_alpha_ejr(e, Committee(e, {}), Rational(0)).satisfied);
  EXPECT_THROW(check_alpha_ejr(e, Committee(e, {}), Rational(-1)), ArgumentError);
  // Each of 20 candidates misses one of the four voters, so every candidate is
  // probed and none forms a group of n/k = 4.
  std::vector<std::vector<CandidateId>> ballots(4);
  for (CandidateId c = 0; c < 20; ++c) {
    for (std::size_t v = 0; v < 4; ++v) {
      if (c % 4 != v) ballots[v].push_back(c);
    }
  }
  Election spread(20, ballots, 1);
  const EjrVerdict full = check_alpha_ejr(spread, Committee(spread, {}), Rational(1));
  EXPECT_TRUE(full.satisfied);
  EXPECT_EQ(full.subsets_examined, 20u);
  EXPECT_THROW(check_alpha_ejr(spread, Committee(spread, {}), Rational(1), 10), SizeLimitError);
}

TEST(Ejr, AgreesWithOracleOnRandomCommittees) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7, m = 1 + rng() % 7, k = 1 + rng() % m;
    auto b = oracle::random_ballots(rng, n, m, 0.5);
    Election e(m, b, k);
    std::vector<CandidateId> w;
    for (CandidateId c = 0; c < m; ++c) {
      if (rng() % 3 == 0) w.push_back(c);
    }
    const Committee cw(e, w);
    const std::uint64_t num = 1 + rng() % 4, den = 4;
    const EjrVerdict v = check_alpha_ejr(e, cw, Rational(num, den));
    EXPECT_EQ(v.satisfied, oracle::ejr_holds(b, m, k, mask_of(cw), num, den)) << trial;
    if (v.witness) {
      const auto& wt = *v.witness;
      EXPECT_EQ(wt.candidates.size(), wt.level);
      EXPECT_GE(Rational(num, den) * wt.group.size() * k, Rational(wt.level * n));
      for (VoterId u : wt.group) {
        for (CandidateId c : wt.candidates) EXPECT_TRUE(e.approves(u, c));
        std::size_t hits = 0;
        for (CandidateId c : cw.members()) hits += e.approves(u, c);
        EXPECT_LT(hits, wt.level);
      }
    }
  }
}

TEST(Jr, EmptyCommitteeViolatesWithUnanimousCandidate) {
  Election e(2, {{0}, {0, 1}}, 1);
  EXPECT_FALSE(check_jr(e, Committee(e, {})).satisfied);
  EXPECT_TRUE(check_jr(e, Committee(e, {0})).satisfied);
  const Election blocks = two_blocks();
  EXPECT_FALSE(check_jr(blocks, Committee(blocks, {0, 2})).satisfied);
}

TEST(Jr, ScaledBlockArmNeedsEveryBlock) {
  // Half of the blocks at x = 4 are large enough that omitting one violates JR.
  const Instance inst = gen_block_arm_scaled(4, Rational(1, 2));
  const Election& e = inst.election;
  ASSERT_EQ(e.n(), 833u);
  ASSERT_EQ(e.k(), 257u);
  const std::size_t blocks = 128;
  const auto with_all = block_arm_committee(blocks, e.k() - blocks, blocks);
  EXPECT_TRUE(check_jr(e, Committee(e, with_all)).satisfied);
  const auto missing_one = block_arm_committee(blocks, e.k() - blocks + 1, blocks - 1);
  const EjrVerdict v = check_jr(e, Committee(e, missing_one));
  ASSERT_FALSE(v.satisfied);
  EXPECT_EQ(v.witness->candidates, (std::vector<CandidateId>{static_cast<CandidateId>(blocks - 1)}));
}
