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

// Trade-off experiments on the generator families.
//
// Each family pairs two objectives (A, B). Explicit mode sweeps the
// family's parametric committees W_γ; split mode runs split_combine with
// exact sub-solvers over an alpha grid. Ratios are taken against the exact
// optima of the family's CI order.
//
//   family          A     B      γ
//   block-central   AV    Pairs  g/x³, g+1 central and x³−g block members
//   block-arm       CC    Pairs  g/B, B−g blocks and the rest arms
//   vi-block-chain  AV    Cons   c/x³, c central and x³−c block members
//   arms-chains     AV    Cons   z/(yx²), see arms_chains_committee

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/election.hpp"
#include "interlace/generators.hpp"
#include "interlace/rational.hpp"

namespace interlace {

enum class TradeoffFamily { kBlockCentral, kBlockArm, kViBlockChain, kArmsChains };

/// Accepts the family names of the table above. Throws ArgumentError.
TradeoffFamily parse_family(std::string_view name);
std::string_view family_name(TradeoffFamily family);

struct TradeoffParams {
  TradeoffFamily family = TradeoffFamily::kBlockCentral;
  std::size_t x = 2;
  std::size_t y = 2;                ///< arms-chains only
  Rational fraction = Rational(1);  ///< block-arm and vi-block-chain
};

Instance build_family(const TradeoffParams& params);

struct TradeoffRow {
  Rational alpha;
  Committee committee;
  std::uint64_t score_a = 0;
  std::uint64_t score_b = 0;
  Rational ratio_a;
  Rational ratio_b;
  Rational sum() const { return ratio_a + ratio_b; }
};

struct TradeoffTable {
  ObjectiveKind objective_a = ObjectiveKind::kAV;
  ObjectiveKind objective_b = ObjectiveKind::kPairs;
  std::uint64_t opt_a = 0;
  std::uint64_t opt_b = 0;
  std::vector<TradeoffRow> rows;

  /// Index of the row with the largest ratio sum (first on ties).
  std::size_t best_row() const;
};

/// Sweeps every representable γ in increasing order. With a non-empty grid,
/// each α maps to the largest representable γ <= α instead.
TradeoffTable explicit_tradeoff(const TradeoffParams& params,
                                std::span<const Rational> grid = {});

/// split_combine(α) with exact sub-solvers for A and B, per grid point.
TradeoffTable split_tradeoff(const TradeoffParams& params, std::span<const Rational> grid);

/// Header "alpha,ratio_A,ratio_B,sum", one row per line, fixed decimals.
std::string tradeoff_csv(const TradeoffTable& table, int digits = 6);

/// Rounds half up to `digits` decimals with '.' as separator.
std::string format_decimal(const Rational& value, int digits);

}  // namespace interlace
