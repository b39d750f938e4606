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

// Election files.
//
// Text form (UTF-8, '#' starts a comment):
//
//   election n=4 m=6 k=4
//   candidates: c1 c2 c3 c4 b1 b2        (optional; default c1..cm)
//   ci-order: b1 c1 c3 b2 c2 c4          (optional)
//   vi-order: v1 v2 v3 v4                (optional)
//   vci:                                 (optional, followed by entries)
//   cand c1 x=1 r=1/2
//   cand c5 excluded
//   voter v1 x=0 r=0
//   v1: c1 c3 b1                         (one ballot line per voter)
//
// The keywords candidates, ci-order, vi-order, vci, cand and voter cannot
// be used as voter labels. JSON files carry the same fields, with rationals
// as strings.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "interlace/generators.hpp"

namespace interlace {

/// Throws ParseError (with line number) on malformed input.
Instance parse_election(std::string_view text);
std::string render_election(const Instance& instance);

Instance parse_election_json(std::string_view text);
std::string render_election_json(const Instance& instance, int indent = 2);

/// Dispatches on the first non-blank character ('{' means JSON).
Instance parse_election_auto(std::string_view text);
/// Throws Error when the file cannot be read.
Instance read_election_file(const std::string& path);

/// Candidate labels separated by commas and/or whitespace. Throws
/// ArgumentError naming the first unknown label.
std::vector<CandidateId> parse_committee(const Election& election, std::string_view text);

std::string format_committee(const Election& election, std::span<const CandidateId> members);

}  // namespace interlace
