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

// Method of Equal Shares with scaled budgets, and exhaustive EJR audits.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "interlace/election.hpp"
#include "interlace/exact.hpp"
#include "interlace/rational.hpp"

namespace interlace {

struct MesRound {
  CandidateId candidate;
  Rational price;  ///< per-supporter payment cap ρ
};

struct MesResult {
  Committee committee;
  std::vector<MesRound> rounds;  ///< selection order
  Rational initial_budget;       ///< α·k/n per voter
  std::vector<Rational> budgets; ///< remaining, per voter
  std::size_t target = 0;        ///< ⌊α·k⌋
};

/// Smallest ρ with Σ_v min(budget_v, ρ) >= 1, or nullopt when the budgets
/// sum to less than 1.
std::optional<Rational> equal_share_price(std::vector<Rational> budgets);

/// Runs MES with every voter starting at α·k/n. Each round buys the
/// affordable candidate with the smallest price (ties: least id) and stops
/// after ⌊α·k⌋ purchases or when nothing is affordable.
/// Throws ArgumentError unless 0 < alpha <= 1.
MesResult alpha_mes(const Election& election, const Rational& alpha);

struct EjrWitness {
  std::size_t level = 0;              ///< ℓ
  std::vector<CandidateId> candidates; ///< T, |T| = ℓ
  std::vector<VoterId> group;         ///< S_T
  friend bool operator==(const EjrWitness&, const EjrWitness&) = default;
};

struct EjrVerdict {
  bool satisfied = true;
  std::optional<EjrWitness> witness;
  std::uint64_t subsets_examined = 0;
};

/// For ℓ = 1..max_level (0 means k) and every ℓ-set T, tests whether
/// S_T = {v : T ⊆ A_v, |A_v ∩ W| < ℓ} satisfies α·|S_T|·k >= ℓ·n. The
/// reported witness has the smallest ℓ and, within it, the lexicographically
/// least T. Throws SizeLimitError after `limit` search nodes and
/// ArgumentError for negative alpha.
EjrVerdict check_alpha_ejr(const Election& election, const Committee& committee,
                           const Rational& alpha, std::uint64_t limit = kDefaultEvalLimit,
                           std::size_t max_level = 0);

/// Justified representation: the ℓ = 1 layer of check_alpha_ejr.
EjrVerdict check_jr(const Election& election, const Committee& committee,
                    const Rational& alpha = Rational(1));

}  // namespace interlace
