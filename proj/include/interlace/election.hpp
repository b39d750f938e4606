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

// Approval elections, committees and the four committee objectives.
//
// An election is a hypergraph: voters are vertices and each candidate c is
// the hyperedge V_c of voters approving it. Voters and candidates are dense
// 0-based identifiers; labels are display metadata only.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

using VoterId = std::uint32_t;
using CandidateId = std::uint32_t;

/// C(n, 2).
constexpr std::uint64_t binom2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Immutable approval profile with target committee size k, 1 <= k <= m.
class Election {
 public:
  /// `approvals[v]` lists the candidates approved by voter v; order and
  /// duplicates do not matter. Empty label vectors produce the defaults
  /// "v1".."vn" and "c1".."cm". Throws ArgumentError when an identifier is
  /// out of range, k is outside [1, m], or labels are malformed.
  Election(std::size_t num_candidates, std::vector<std::vector<CandidateId>> approvals,
           std::size_t k, std::vector<std::string> voter_labels = {},
           std::vector<std::string> candidate_labels = {});

  std::size_t n() const { return voter_offsets_.size() - 1; }
  std::size_t m() const { return support_offsets_.size() - 1; }
  std::size_t k() const { return k_; }

  /// A_v, sorted ascending.
  std::span<const CandidateId> approvals(VoterId v) const {
    return {approvals_.data() + voter_offsets_[v], approvals_.data() + voter_offsets_[v + 1]};
  }
  /// V_c, sorted ascending.
  std::span<const VoterId> supporters(CandidateId c) const {
    return {supporters_.data() + support_offsets_[c],
            supporters_.data() + support_offsets_[c + 1]};
  }
  std::size_t support_size(CandidateId c) const {
    return support_offsets_[c + 1] - support_offsets_[c];
  }
  bool approves(VoterId v, CandidateId c) const;

  const std::string& voter_label(VoterId v) const { return voter_labels_[v]; }
  const std::string& candidate_label(CandidateId c) const { return candidate_labels_[c]; }
  const std::vector<std::string>& voter_labels() const { return voter_labels_; }
  const std::vector<std::string>& candidate_labels() const { return candidate_labels_; }
  std::optional<CandidateId> find_candidate(std::string_view label) const;
  std::optional<VoterId> find_voter(std::string_view label) const;

  /// Same profile, different target size.
  Election with_k(std::size_t k) const;

  /// Ballots as nested vectors (copy).
  std::vector<std::vector<CandidateId>> ballots() const;

  friend bool operator==(const Election& a, const Election& b);

 private:
  std::size_t k_;
  std::vector<std::size_t> voter_offsets_;
  std::vector<CandidateId> approvals_;
  std::vector<std::size_t> support_offsets_;
  std::vector<VoterId> supporters_;
  std::vector<std::string> voter_labels_;
  std::vector<std::string> candidate_labels_;
};

/// A set of candidates W of some election. Members are kept sorted and
/// distinct. Scoring accepts any subset; `feasible` flags |W| = k.
class Committee {
 public:
  Committee() = default;
  /// Throws InvalidCommitteeError when a member is >= m. Duplicates collapse.
  Committee(const Election& election, std::vector<CandidateId> members);

  std::span<const CandidateId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(CandidateId c) const;

  bool feasible(const Election& election) const { return members_.size() == election.k(); }
  bool within_budget(const Election& election) const { return members_.size() <= election.k(); }

  friend bool operator==(const Committee&, const Committee&) = default;

 private:
  std::vector<CandidateId> members_;
};

/// Strict weak order used for every tie-break: for equal sizes this is the
/// lexicographic order of the sorted member lists. In general, the set that
/// holds the smallest element of the symmetric difference comes first, which
/// is preserved under adding a common new element to both sides.
bool committee_less(std::span<const CandidateId> a, std::span<const CandidateId> b);

enum class ObjectiveKind { kAV, kCC, kPairs, kCons };

std::string_view objective_name(ObjectiveKind kind);
/// Accepts "av", "cc", "pairs", "cons" (case-insensitive).
ObjectiveKind parse_objective(std::string_view name);
bool is_submodular(ObjectiveKind kind);

struct Score {
  ObjectiveKind kind;
  std::uint64_t value;
  friend bool operator==(const Score&, const Score&) = default;
};

/// Union-find over a fixed universe with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size);
  std::size_t find(std::size_t x);
  /// Returns true when the two elements were in different sets.
  bool unite(std::size_t a, std::size_t b);
  std::size_t set_size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// AV(W) = sum_v |A_v ∩ W|.
std::uint64_t av_score(const Election& election, const Committee& committee);
/// CC(W) = |{v : A_v ∩ W != ∅}|.
std::uint64_t cc_score(const Election& election, const Committee& committee);
/// Pairs(W): unordered voter pairs that approve a common member of W.
std::uint64_t pairs_score(const Election& election, const Committee& committee);
/// Cons(W): unordered voter pairs connected through W. Equals the sum of
/// C(size, 2) over the blocks of `connected_components`.
std::uint64_t cons_score(const Election& election, const Committee& committee);

Score score(const Election& election, const Committee& committee, ObjectiveKind kind);

/// Partition of the voters under the transitive closure of "approve a common
/// member of W". Each block is sorted; blocks are ordered by least voter.
/// Voters approving no member form singleton blocks.
std::vector<std::vector<VoterId>> connected_components(const Election& election,
                                                       const Committee& committee);

/// The associated pair instance: one voter per unordered pair {u, v}
/// (u < v, lexicographic order), approving A_u ∩ A_v. Candidates and k are
/// unchanged, so Pairs(W, E) = CC(W, pair_instance(E)).
/// Throws DegenerateInstanceError when n < 2.
Election pair_instance(const Election& election);

/// Index of pair voter {u, v} (u < v) in `pair_instance` of an n-voter election.
std::size_t pair_index(std::size_t n, VoterId u, VoterId v);

}  // namespace interlace
