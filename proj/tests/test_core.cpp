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
#include "oracles.hpp"

using namespace interlace;
using testing_support::ballots_of;
using testing_support::committee;
using testing_support::mask_of;

namespace {

Election four_voter() { return gen_example(1).election; }
Election six_cycle() { return gen_example(2).election; }

}  // namespace

TEST(Election, RejectsBadInput) {
  EXPECT_THROW(Election(3, {{0, 3}}, 1), ArgumentError);
  EXPECT_THROW(Election(3, {{0}}, 0), ArgumentError);
  EXPECT_THROW(Election(3, {{0}}, 4), ArgumentError);
  EXPECT_THROW(Election(2, {{0}}, 1, {"bad label"}), ArgumentError);
  EXPECT_THROW(Election(2, {{0}}, 1, {}, {"a", "a"}), ArgumentError);
}

TEST(Election, SupportsMatchApprovals) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = oracle::random_ballots(rng, 6, 5);
    Election e(5, b, 2);
    for (VoterId v = 0; v < e.n(); ++v) {
      for (CandidateId c = 0; c < e.m(); ++c) {
        const bool in_support = std::ranges::find(e.supporters(c), v) != e.supporters(c).end();
        EXPECT_EQ(e.approves(v, c), oracle::approves(b[v], c));
        EXPECT_EQ(in_support, oracle::approves(b[v], c));
      }
    }
  }
}

TEST(Election, DefaultLabelsAndLookup) {
  Election e(3, {{0}, {1, 2}}, 2);
  EXPECT_EQ(e.voter_label(1), "v2");
  EXPECT_EQ(e.candidate_label(2), "c3");
  EXPECT_EQ(e.find_candidate("c2"), CandidateId{1});
  EXPECT_FALSE(e.find_candidate("zz").has_value());
  EXPECT_EQ(e.with_k(3).k(), 3u);
}

TEST(Committee, ValidatesAndSorts) {
  const Election e = four_voter();
  Committee w(e, {3, 1, 3});
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(w.members()[0], 1u);
  EXPECT_THROW(Committee(e, {6}), InvalidCommitteeError);
  EXPECT_FALSE(w.feasible(e));
  EXPECT_TRUE(w.within_budget(e));
}

TEST(Scores, SixCycleValues) {
  const Election e = six_cycle();
  const Committee cycle = committee(e, {"c1", "c2", "c3", "c4", "c5", "c6"});
  const Committee alt = committee(e, {"c1", "c3", "c4", "c6", "d1", "d2"});
  EXPECT_EQ(av_score(e, cycle), 12u);
  EXPECT_EQ(cc_score(e, cycle), 6u);
  EXPECT_EQ(pairs_score(e, cycle), 6u);
  EXPECT_EQ(pairs_score(e, alt), 6u);
  EXPECT_EQ(cons_score(e, cycle), 15u);
  EXPECT_EQ(cons_score(e, alt), 6u);
  EXPECT_EQ(av_score(e, alt), 12u);
  const auto comps = connected_components(e, cycle);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 6u);
}

TEST(Scores, EmptyCommitteeIsZero) {
  const Election e = six_cycle();
  const Committee none(e, {});
  EXPECT_EQ(av_score(e, none), 0u);
  EXPECT_EQ(cc_score(e, none), 0u);
  EXPECT_EQ(pairs_score(e, none), 0u);
  EXPECT_EQ(cons_score(e, none), 0u);
  EXPECT_EQ(connected_components(e, none).size(), e.n());
}

TEST(Scores, FourVoterValues) {
  const Election e = four_voter();
  EXPECT_EQ(cc_score(e, committee(e, {"b1"})), 2u);
  EXPECT_EQ(pairs_score(e, committee(e, {"c1", "c2", "c3", "c4"})), 2u);
  EXPECT_EQ(pairs_score(e, committee(e, {"c1", "c2", "b1", "b2"})), 4u);
  const auto comps = connected_components(e, committee(e, {"c1", "c2"}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<VoterId>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<VoterId>{1, 3}));
}

TEST(Scores, BlockCentralFormula) {
  const Instance inst = gen_block_central(2);
  const Election& e = inst.election;
  EXPECT_EQ(av_score(e, Committee(e, block_central_committee(2, 8))), 36u);
  EXPECT_EQ(pairs_score(e, Committee(e, block_central_committee(2, 0))), 14u);
}

TEST(Scores, MatchOracleOnRandomElections) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 8;
    auto b = oracle::random_ballots(rng, n, m);
    Election e(m, b, 1);
    std::vector<CandidateId> members;
    for (CandidateId c = 0; c < m; ++c) {
      if (rng() % 2) members.push_back(c);
    }
    Committee w(e, members);
    const auto mask = mask_of(w);
    EXPECT_EQ(av_score(e, w), oracle::av(b, mask));
    EXPECT_EQ(cc_score(e, w), oracle::cc(b, mask));
    EXPECT_EQ(pairs_score(e, w), oracle::pairs(b, mask));
    EXPECT_EQ(cons_score(e, w), oracle::cons(b, mask));
    std::uint64_t from_components = 0;
    for (const auto& c : connected_components(e, w)) from_components += binom2(c.size());
    EXPECT_EQ(from_components, cons_score(e, w));
    EXPECT_GE(cons_score(e, w), pairs_score(e, w));
  }
}

TEST(Scores, MonotoneUnderSupersets) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = oracle::random_ballots(rng, 7, 6);
    Election e(6, b, 1);
    std::vector<CandidateId> small, big;
    for (CandidateId c = 0; c < 6; ++c) {
      const auto r = rng() % 3;
      if (r == 0) small.push_back(c);
      if (r <= 1) big.push_back(c);
    }
    Committee s(e, small), t(e, big);
    for (auto kind : {ObjectiveKind::kAV, ObjectiveKind::kCC, ObjectiveKind::kPairs,
                      ObjectiveKind::kCons}) {
      EXPECT_LE(score(e, s, kind).value, score(e, t, kind).value);
    }
  }
}

TEST(Scores, SubmodularityAndConsCounterexample) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto b = oracle::random_ballots(rng, 6, 6);
    std::vector<CandidateId> s, t;
    CandidateId x = static_cast<CandidateId>(rng() % 6);
    for (CandidateId c = 0; c < 6; ++c) {
      if (c == x) continue;
      const auto r = rng() % 3;
      if (r == 0) s.push_back(c);
      if (r <= 1) t.push_back(c);
    }
    const oracle::Mask ms = oracle::to_mask(s), mt = oracle::to_mask(t), mx = 1U << x;
    for (auto kind : {ObjectiveKind::kAV, ObjectiveKind::kCC, ObjectiveKind::kPairs}) {
      Election e(6, b, 1);
      auto f = [&](oracle::Mask w) {
        std::vector<CandidateId> mem;
        for (CandidateId c = 0; c < 6; ++c) {
          if (w >> c & 1U) mem.push_back(c);
        }
        return static_cast<std::int64_t>(score(e, Committee(e, mem), kind).value);
      };
      EXPECT_GE(f(ms | mx) - f(ms), f(mt | mx) - f(mt));
    }
  }
  const Election e = six_cycle();
  const auto gain = [&](std::initializer_list<std::string> base, std::initializer_list<std::string> with) {
    return cons_score(e, committee(e, with)) - cons_score(e, committee(e, base));
  };
  EXPECT_EQ(gain({"c1"}, {"c1", "c2"}), 2u);
  EXPECT_EQ(gain({"c1", "c3"}, {"c1", "c2", "c3"}), 4u);
}

TEST(PairInstance, FourVoterStructure) {
  const Election e = four_voter();
  const Election p = pair_instance(e);
  EXPECT_EQ(p.n(), 6u);
  const auto a = p.approvals(static_cast<VoterId>(pair_index(4, 0, 2)));
  EXPECT_EQ(std::vector<CandidateId>(a.begin(), a.end()), (std::vector<CandidateId>{0, 2}));
  EXPECT_THROW(pair_instance(Election(1, {{0}}, 1)), DegenerateInstanceError);
  const Election two(1, {{0}, {0}}, 1);
  const Election tp = pair_instance(two);
  ASSERT_EQ(tp.n(), 1u);
  EXPECT_EQ(tp.approvals(0).size(), 1u);
}

TEST(PairInstance, PairsEqualsCoverageOfPairs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 6, m = 1 + rng() % 6;
    Election e(m, oracle::random_ballots(rng, n, m), 1);
    const Election p = pair_instance(e);
    for (oracle::Mask w = 0; w < (1U << m); ++w) {
      if (std::popcount(w) > 3) continue;
      std::vector<CandidateId> mem;
      for (CandidateId c = 0; c < m; ++c) {
        if (w >> c & 1U) mem.push_back(c);
      }
      EXPECT_EQ(pairs_score(e, Committee(e, mem)), cc_score(p, Committee(p, mem)));
    }
  }
}

TEST(Objective, NamesRoundTrip) {
  for (auto kind : {ObjectiveKind::kAV, ObjectiveKind::kCC, ObjectiveKind::kPairs,
                    ObjectiveKind::kCons}) {
    EXPECT_EQ(parse_objective(objective_name(kind)), kind);
  }
  EXPECT_EQ(parse_objective("PAIRS"), ObjectiveKind::kPairs);
  EXPECT_THROW(parse_objective("ejr"), ArgumentError);
  EXPECT_FALSE(is_submodular(ObjectiveKind::kCons));
}

TEST(CommitteeOrder, LexicographicForEqualSizes) {
  const std::vector<CandidateId> a{0, 2}, b{0, 3}, c{1, 2};
  EXPECT_TRUE(committee_less(a, b));
  EXPECT_TRUE(committee_less(b, c));
  EXPECT_FALSE(committee_less(c, a));
  EXPECT_FALSE(committee_less(a, a));
}
