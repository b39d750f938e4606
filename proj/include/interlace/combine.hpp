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

// Building committees that serve several objectives at once.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "interlace/domains.hpp"
#include "interlace/election.hpp"
#include "interlace/exact.hpp"
#include "interlace/rational.hpp"

namespace interlace {

struct ShrinkResult {
  std::vector<CandidateId> members;      ///< subsequence of the input order
  std::vector<std::uint64_t> marginals;  ///< σ_i per input position
  bool unchanged = false;                ///< target >= |S|; input returned as is
};

/// Keeps the `target` members with the largest telescoping marginals along
/// the given insertion order (ties: earlier position). For submodular f the
/// result satisfies f(S')/target >= f(S)/|S|.
/// Throws ArgumentError for Cons or when `members` has duplicates.
ShrinkResult submodular_shrink(const Election& election, ObjectiveKind objective,
                               std::span<const CandidateId> members, std::size_t target);

/// Adds the candidate with the largest marginal gain `size` times (ties:
/// least id). Throws ArgumentError for Cons or size > m.
Committee greedy_max(const Election& election, ObjectiveKind objective, std::size_t size);

/// Produces at most `size` candidates for an election.
using Solver = std::function<std::vector<CandidateId>(const Election&, std::size_t size)>;

Solver brute_solver(ObjectiveKind objective, std::uint64_t limit = kDefaultEvalLimit);
Solver greedy_solver(ObjectiveKind objective);
/// Interval DP for CC, Pairs or Cons under `order`; AV falls back to greedy.
Solver dp_solver(ObjectiveKind objective, CiOrder order);
/// α-MES at `beta` over the full k; the requested size is an upper bound.
Solver mes_solver(Rational beta);

struct SplitResult {
  Committee committee;
  std::size_t seats_a = 0;  ///< ⌈α·k⌉
  std::size_t seats_b = 0;  ///< ⌊(1 − α)·k⌋
  std::vector<CandidateId> part_a;
  std::vector<CandidateId> part_b;
  std::size_t filled = 0;   ///< seats filled with least unused ids
};

/// Gives ⌈α·k⌉ seats to solver_a and ⌊(1 − α)·k⌋ to solver_b, merges, and
/// replaces duplicates or missing seats with least unused candidates.
/// Throws ArgumentError unless 0 <= alpha <= 1.
SplitResult split_combine(const Election& election, const Rational& alpha, const Solver& solver_a,
                          const Solver& solver_b);

struct HalvingResult {
  Committee committee;
  std::vector<std::vector<CandidateId>> chains;  ///< after dropping subsumed members
  std::vector<CandidateId> dropped;
};

/// Selects at most ⌈|W|/2⌉ members of W with Cons >= Cons(W)/4 on a VI
/// election. Requires an even k unless `allow_odd_k` is set.
/// Throws PreconditionError when `order` is not a VI witness.
HalvingResult halve_cons_vi(const Election& election, const ViOrder& order,
                            const Committee& committee, bool allow_odd_k = false);

/// s(α) = 1 / (⌈2/α⌉ − 1). Throws ArgumentError unless 0 < alpha <= 1.
Rational stepwise_bound(const Rational& alpha);

}  // namespace interlace
