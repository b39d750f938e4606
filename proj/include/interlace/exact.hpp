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

// Exact optimizers: exhaustive search for any objective, and interval
// dynamic programs for Cons, CC and Pairs on CI-ordered elections.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "interlace/domains.hpp"
#include "interlace/election.hpp"

namespace interlace {

inline constexpr std::uint64_t kDefaultEvalLimit = 10'000'000;

struct Solution {
  Committee committee;
  std::uint64_t score = 0;
  std::size_t padded = 0;      ///< members appended after the optimizer (least unused ids)
  std::uint64_t table_cells = 0;
};

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Scores every committee of exactly `size` members and returns the
/// lexicographically least maximizer. Throws SizeLimitError when
/// C(m, size) > limit and ArgumentError when size > m.
Solution brute_force_opt(const Election& election, ObjectiveKind objective, std::size_t size,
                         std::uint64_t limit = kDefaultEvalLimit);

/// Cons dynamic program over a verified CI order.
///
/// Positions 0..m-1 refer to `order`; cell (i, x, b) holds the largest number
/// of connected voter pairs over committees of at most b members whose
/// rightmost member sits at position i and whose component through that
/// member has exactly x voters, or -1 if there is none.
class ConsDp {
 public:
  /// Throws PreconditionError when `order` is not a CI witness and
  /// ArgumentError when k is outside [1, m]. Throws SizeLimitError when the
  /// table would exceed `max_cells`.
  ConsDp(const Election& election, const CiOrder& order, std::size_t k,
         std::uint64_t max_cells = 200'000'000);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  std::int64_t value(std::size_t i, std::size_t x, std::size_t b) const {
    return value_[index(i, x, b)];
  }
  /// Members (original ids, ascending) of the committee behind a filled cell.
  std::vector<CandidateId> reconstruct(std::size_t i, std::size_t x, std::size_t b) const;

  /// Best cell at budget k, padded to k members.
  Solution best() const;

  std::uint64_t cells() const { return value_.size(); }

 private:
  std::size_t index(std::size_t i, std::size_t x, std::size_t b) const {
    return ((b - 1) * m_ + i) * (n_ + 1) + x;
  }

  const Election* election_;
  std::vector<CandidateId> order_;
  std::size_t m_, n_, k_;
  std::vector<std::int64_t> value_;
  std::vector<std::int32_t> back_j_;
  std::vector<std::int32_t> back_y_;
};

Solution max_cons_ci(const Election& election, const CiOrder& order, std::size_t k);

/// CC dynamic program: cc[i][b] = max_{j<i} cc[j][b-1] + n(not j, i) with
/// cc[i][1] = |V_{c_i}|.
Solution max_cc_ci(const Election& election, const CiOrder& order, std::size_t k);

/// Pairs as CC on the pair instance, which stays CI under the same order.
/// The pair voters' intervals are derived directly, so the pair instance is
/// never materialized. Throws DegenerateInstanceError when n < 2.
Solution max_pairs_ci(const Election& election, const CiOrder& order, std::size_t k);

/// Adds least unused ids until the committee has `size` members; returns the ids sorted.
std::vector<CandidateId> pad_least_unused(std::vector<CandidateId> members, std::size_t m,
                                          std::size_t size);

}  // namespace interlace
