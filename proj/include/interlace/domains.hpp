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

// One-dimensional preference domains.
//
//   VCI: voters and candidates are closed intervals [x - r, x + r] on the
//        line; v approves c iff the intervals intersect.
//   CI:  some candidate order makes every ballot a contiguous run.
//   VI:  some voter order makes every support set a contiguous run.
//
// Recognition is certificate-based: orders and coordinates are supplied (or
// derived) and then verified against the approvals.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "interlace/election.hpp"
#include "interlace/rational.hpp"

namespace interlace {

struct Interval {
  Rational x;
  Rational r;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Positions and radii for every voter and candidate. A candidate slot may be
/// empty ("excluded"): allowed only for candidates nobody approves.
struct VciCertificate {
  std::vector<std::optional<Interval>> candidates;
  std::vector<Interval> voters;

  /// Certificate for the candidate subset `kept` (new id i = kept[i]).
  VciCertificate restricted_to(std::span<const CandidateId> kept) const;

  friend bool operator==(const VciCertificate&, const VciCertificate&) = default;
};

/// Candidate permutation witnessing CI.
struct CiOrder {
  std::vector<CandidateId> order;
  friend bool operator==(const CiOrder&, const CiOrder&) = default;
};

/// Voter permutation witnessing VI.
struct ViOrder {
  std::vector<VoterId> order;
  friend bool operator==(const ViOrder&, const ViOrder&) = default;
};

/// True iff the certificate has the right shape, nonnegative radii, and
/// reproduces the approvals exactly.
bool verify_vci(const Election& election, const VciCertificate& certificate);

/// True iff every approval set is contiguous under `order`.
/// Throws ArgumentError when `order` is not a permutation of the candidates.
bool verify_ci_order(const Election& election, const CiOrder& order);

/// True iff every support set is contiguous under `order`.
/// Throws ArgumentError when `order` is not a permutation of the voters.
bool verify_vi_order(const Election& election, const ViOrder& order);

struct DominanceRemoval {
  Election election;                  ///< remaining candidates, relabeled densely
  std::vector<CandidateId> kept;      ///< new id -> original id
  std::vector<CandidateId> removed;   ///< original ids, in removal order
  std::size_t shortfall = 0;          ///< k - remaining m when positive; k was capped
};

/// Removes every candidate whose support is a proper subset of another
/// candidate's support. Candidates are examined by decreasing support size
/// (ties by id); identical supports are all kept.
DominanceRemoval remove_dominated(const Election& election);

/// Candidates sorted by position (ties by id), verified to witness CI.
/// Throws InconsistencyError when the certificate does not match the
/// approvals or the sorted order is not CI (dominated candidates remain).
CiOrder ci_order_from_vci(const Election& election, const VciCertificate& certificate);

/// VCI coordinates from a VI order: the voter at 1-based position i sits at
/// x = i with radius 0; a candidate supported by positions [lo, hi] sits at
/// (lo + hi) / 2 with radius (hi - lo) / 2. Candidates nobody approves are
/// excluded. Throws InconsistencyError when `order` does not witness VI.
VciCertificate vi_to_vci(const Election& election, const ViOrder& order);

inline constexpr std::size_t kDefaultCiSearchLimit = 10;

/// Exhaustive search for a CI order (backtracking over candidate
/// permutations; a branch dies once a voter's run has been closed and one of
/// their candidates reappears). Throws SizeLimitError when m > max_candidates.
std::optional<CiOrder> find_ci_order_bruteforce(const Election& election,
                                                std::size_t max_candidates = kDefaultCiSearchLimit);

/// Relabels candidates so that position i of `order` becomes candidate i.
Election reorder_candidates(const Election& election, const CiOrder& order);

}  // namespace interlace
