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

// Allocation-free objective evaluation for inner loops.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "interlace/election.hpp"

namespace interlace::detail {

class Scorer {
 public:
  explicit Scorer(const Election& election)
      : e_(election), stamp_(election.n(), 0), in_w_(election.m(), 0), sets_(election.n()) {}

  std::uint64_t operator()(ObjectiveKind kind, std::span<const CandidateId> w) {
    switch (kind) {
      case ObjectiveKind::kAV: return av(w);
      case ObjectiveKind::kCC: return cc(w);
      case ObjectiveKind::kPairs: return pairs(w);
      case ObjectiveKind::kCons: return cons(w);
    }
    return 0;
  }

  std::uint64_t av(std::span<const CandidateId> w) const {
    std::uint64_t total = 0;
    for (CandidateId c : w) total += e_.support_size(c);
    return total;
  }

  std::uint64_t cc(std::span<const CandidateId> w) {
    next_round();
    std::uint64_t covered = 0;
    for (CandidateId c : w) {
      for (VoterId v : e_.supporters(c)) {
        if (stamp_[v] != round_) {
          stamp_[v] = round_;
          ++covered;
        }
      }
    }
    return covered;
  }

  // For each voter u, count distinct partners reached through members u
  // approves; each pair is seen from both ends.
  std::uint64_t pairs(std::span<const CandidateId> w) {
    for (CandidateId c : w) in_w_[c] = 1;
    std::uint64_t twice = 0;
    for (std::size_t u = 0; u < e_.n(); ++u) {
      next_round();
      stamp_[u] = round_;
      for (CandidateId c : e_.approvals(static_cast<VoterId>(u))) {
        if (!in_w_[c]) continue;
        for (VoterId v : e_.supporters(c)) {
          if (stamp_[v] != round_) {
            stamp_[v] = round_;
            ++twice;
          }
        }
      }
    }
    for (CandidateId c : w) in_w_[c] = 0;
    return twice / 2;
  }

  std::uint64_t cons(std::span<const CandidateId> w) {
    sets_ = DisjointSets(e_.n());
    for (CandidateId c : w) {
      auto sup = e_.supporters(c);
      for (std::size_t i = 1; i < sup.size(); ++i) sets_.unite(sup[0], sup[i]);
    }
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < e_.n(); ++v) {
      if (sets_.find(v) == v) total += binom2(sets_.set_size(v));
    }
    return total;
  }

 private:
  void next_round() {
    if (++round_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      round_ = 1;
    }
  }

  const Election& e_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
  std::vector<char> in_w_;
  DisjointSets sets_;
};

}  // namespace interlace::detail
