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

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "interlace/election.hpp"
#include "oracles.hpp"

namespace testing_support {

inline std::vector<interlace::CandidateId> ids(const interlace::Election& e,
                                               std::initializer_list<std::string> labels) {
  std::vector<interlace::CandidateId> out;
  for (const auto& l : labels) {
    auto c = e.find_candidate(l);
    if (!c) throw std::invalid_argument("no candidate " + l);
    out.push_back(*c);
  }
  return out;
}

inline interlace::Committee committee(const interlace::Election& e,
                                      std::initializer_list<std::string> labels) {
  return interlace::Committee(e, ids(e, labels));
}

inline oracle::Ballots ballots_of(const interlace::Election& e) {
  oracle::Ballots b;
  for (std::size_t v = 0; v < e.n(); ++v) {
    auto a = e.approvals(static_cast<interlace::VoterId>(v));
    b.emplace_back(a.begin(), a.end());
  }
  return b;
}

inline oracle::Mask mask_of(const interlace::Committee& w) { return oracle::to_mask(w.members()); }

}  // namespace testing_support
