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

#include "interlace/election.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "interlace/error.hpp"

namespace interlace {
namespace {

void check_labels(std::vector<std::string>& labels, std::size_t count, char prefix,
                  const char* what) {
  if (labels.empty()) {
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i + 1));
    return;
  }
  if (labels.size() != count) {
    throw ArgumentError(std::string(what) + " label count " + std::to_string(labels.size()) +
                        " does not match " + std::to_string(count));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw ArgumentError(std::string("empty ") + what + " label");
    for (char ch : label) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ':' || ch == ',' || ch == '#') {
        throw ArgumentError(std::string(what) + " label '" + label +
                            "' contains whitespace or one of ':,#'");
      }
    }
    if (!seen.insert(label).second) {
      throw ArgumentError(std::string("duplicate ") + what + " label '" + label + "'");
    }
  }
}

}  // namespace

Election::Election(std::size_t num_candidates, std::vector<std::vector<CandidateId>> approvals,
                   std::size_t k, std::vector<std::string> voter_labels,
                   std::vector<std::string> candidate_labels)
    : k_(k),
      voter_labels_(std::move(voter_labels)),
      candidate_labels_(std::move(candidate_labels)) {
  const std::size_t n = approvals.size();
  if (k < 1 || k > num_candidates) {
    throw ArgumentError("committee size k=" + std::to_string(k) + " outside [1, m=" +
                        std::to_string(num_candidates) + "]");
  }
  check_labels(voter_labels_, n, 'v', "voter");
  check_labels(candidate_labels_, num_candidates, 'c', "candidate");

  voter_offsets_.assign(1, 0);
  voter_offsets_.reserve(n + 1);
  std::vector<std::size_t> counts(num_candidates, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& ballot = approvals[v];
    std::sort(ballot.begin(), ballot.end());
    ballot.erase(std::unique(ballot.begin(), ballot.end()), ballot.end());
    for (CandidateId c : ballot) {
      if (c >= num_candidates) {
        throw ArgumentError("voter " + std::to_string(v) + " approves candidate " +
                            std::to_string(c) + " but m=" + std::to_string(num_candidates));
      }
      ++counts[c];
    }
    approvals_.insert(approvals_.end(), ballot.begin(), ballot.end());
    voter_offsets_.push_back(approvals_.size());
  }

  support_offsets_.assign(num_candidates + 1, 0);
  for (std::size_t c = 0; c < num_candidates; ++c) {
    support_offsets_[c + 1] = support_offsets_[c] + counts[c];
  }
  supporters_.resize(approvals_.size());
  std::vector<std::size_t> cursor(support_offsets_.begin(), support_offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (CandidateId c : this->approvals(static_cast<VoterId>(v))) {
      supporters_[cursor[c]++] = static_cast<VoterId>(v);
    }
  }
}

bool Election::approves(VoterId v, CandidateId c) const {
  auto a = approvals(v);
  return std::binary_search(a.begin(), a.end(), c);
}

std::optional<CandidateId> Election::find_candidate(std::string_view label) const {
  for (std::size_t c = 0; c < candidate_labels_.size(); ++c) {
    if (candidate_labels_[c] == label) return static_cast<CandidateId>(c);
  }
  return std::nullopt;
}

std::optional<VoterId> Election::find_voter(std::string_view label) const {
  for (std::size_t v = 0; v < voter_labels_.size(); ++v) {
    if (voter_labels_[v] == label) return static_cast<VoterId>(v);
  }
  return std::nullopt;
}

Election Election::with_k(std::size_t k) const {
  return Election(m(), ballots(), k, voter_labels_, candidate_labels_);
}

std::vector<std::vector<CandidateId>> Election::ballots() const {
  std::vector<std::vector<CandidateId>> out;
  out.reserve(n());
  for (std::size_t v = 0; v < n(); ++v) {
    auto a = approvals(static_cast<VoterId>(v));
    out.emplace_back(a.begin(), a.end());
  }
  return out;
}

bool operator==(const Election& a, const Election& b) {
  return a.k_ == b.k_ && a.voter_offsets_ == b.voter_offsets_ && a.approvals_ == b.approvals_ &&
         a.support_offsets_ == b.support_offsets_ && a.voter_labels_ == b.voter_labels_ &&
         a.candidate_labels_ == b.candidate_labels_;
}

Committee::Committee(const Election& election, std::vector<CandidateId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= election.m()) {
    throw InvalidCommitteeError("committee member " + std::to_string(members_.back()) +
                                " is not a candidate (m=" + std::to_string(election.m()) + ")");
  }
}

bool Committee::contains(CandidateId c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

bool committee_less(std::span<const CandidateId> a, std::span<const CandidateId> b) {
  // Both sorted. Walk until the first element present in only one side.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return a[i] < b[j];
    }
  }
  // One is a prefix of the other; the longer holds the smallest extra element.
  return i < a.size();
}

std::string_view objective_name(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kAV: return "av";
    case ObjectiveKind::kCC: return "cc";
    case ObjectiveKind::kPairs: return "pairs";
    case ObjectiveKind::kCons: return "cons";
  }
  return "?";
}

ObjectiveKind parse_objective(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "av") return ObjectiveKind::kAV;
  if (lower == "cc") return ObjectiveKind::kCC;
  if (lower == "pairs") return ObjectiveKind::kPairs;
  if (lower == "cons") return ObjectiveKind::kCons;
  throw ArgumentError("unknown objective '" + std::string(name) + "'");
}

bool is_submodular(ObjectiveKind kind) { return kind != ObjectiveKind::kCons; }

DisjointSets::DisjointSets(std::size_t size) : parent_(size), size_(size, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

std::uint64_t av_score(const Election& election, const Committee& committee) {
  std::uint64_t total = 0;
  for (CandidateId c : committee.members()) total += election.support_size(c);
  return total;
}

std::uint64_t cc_score(const Election& election, const Committee& committee) {
  std::vector<char> covered(election.n(), 0);
  std::uint64_t count = 0;
  for (CandidateId c : committee.members()) {
    for (VoterId v : election.supporters(c)) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

std::uint64_t pairs_score(const Election& election, const Committee& committee) {
  const std::size_t n = election.n();
  if (n < 2) return 0;
  std::vector<char> covered(n * (n - 1) / 2, 0);
  std::uint64_t count = 0;
  for (CandidateId c : committee.members()) {
    auto sup = election.supporters(c);
    for (std::size_t a = 0; a < sup.size(); ++a) {
      for (std::size_t b = a + 1; b < sup.size(); ++b) {
        char& slot = covered[pair_index(n, sup[a], sup[b])];
        if (!slot) {
          slot = 1;
          ++count;
        }
      }
    }
  }
  return count;
}

std::uint64_t cons_score(const Election& election, const Committee& committee) {
  DisjointSets sets(election.n());
  for (CandidateId c : committee.members()) {
    auto sup = election.supporters(c);
    for (std::size_t i = 1; i < sup.size(); ++i) sets.unite(sup[0], sup[i]);
  }
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < election.n(); ++v) {
    if (sets.find(v) == v) total += binom2(sets.set_size(v));
  }
  return total;
}

Score score(const Election& election, const Committee& committee, ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kAV: return {kind, av_score(election, committee)};
    case ObjectiveKind::kCC: return {kind, cc_score(election, committee)};
    case ObjectiveKind::kPairs: return {kind, pairs_score(election, committee)};
    case ObjectiveKind::kCons: return {kind, cons_score(election, committee)};
  }
  return {kind, 0};
}

std::vector<std::vector<VoterId>> connected_components(const Election& election,
                                                       const Committee& committee) {
  const std::size_t n = election.n();
  DisjointSets sets(n);
  for (CandidateId c : committee.members()) {
    auto sup = election.supporters(c);
    for (std::size_t i = 1; i < sup.size(); ++i) sets.unite(sup[0], sup[i]);
  }
  std::vector<std::size_t> block_of_root(n, n);
  std::vector<std::vector<VoterId>> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (block_of_root[root] == n) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(static_cast<VoterId>(v));
  }
  return blocks;
}

std::size_t pair_index(std::size_t n, VoterId u, VoterId v) {
  if (u > v) std::swap(u, v);
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

Election pair_instance(const Election& election) {
  const std::size_t n = election.n();
  if (n < 2) {
    throw DegenerateInstanceError("pair instance needs at least two voters, got n=" +
                                  std::to_string(n));
  }
  std::vector<std::vector<CandidateId>> approvals;
  std::vector<std::string> labels;
  approvals.reserve(n * (n - 1) / 2);
  labels.reserve(n * (n - 1) / 2);
  for (VoterId u = 0; u < n; ++u) {
    auto au = election.approvals(u);
    for (VoterId v = u + 1; v < n; ++v) {
      auto av = election.approvals(v);
      std::vector<CandidateId> both;
      std::set_intersection(au.begin(), au.end(), av.begin(), av.end(), std::back_inserter(both));
      approvals.push_back(std::move(both));
      labels.push_back(election.voter_label(u) + "+" + election.voter_label(v));
    }
  }
  // Joined labels can collide when voter labels contain '+'; fall back to
  // the default labels then.
  std::unordered_set<std::string_view> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) labels.clear();
  return Election(election.m(), std::move(approvals), election.k(), std::move(labels),
                  election.candidate_labels());
}

}  // namespace interlace
