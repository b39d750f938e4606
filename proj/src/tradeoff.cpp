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

#include "interlace/tradeoff.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "interlace/combine.hpp"
#include "interlace/error.hpp"
#include "interlace/exact.hpp"

namespace interlace {
namespace {

struct Candidate {
  Rational gamma;
  std::vector<CandidateId> members;
};

std::pair<ObjectiveKind, ObjectiveKind> objectives(TradeoffFamily family) {
  switch (family) {
    case TradeoffFamily::kBlockCentral:
      return {ObjectiveKind::kAV, ObjectiveKind::kPairs};
    case TradeoffFamily::kBlockArm:
      return {ObjectiveKind::kCC, ObjectiveKind::kPairs};
    case TradeoffFamily::kViBlockChain:
    case TradeoffFamily::kArmsChains:
      return {ObjectiveKind::kAV, ObjectiveKind::kCons};
  }
  throw ArgumentError("unknown family");
}

const CiOrder& require_ci(const Instance& inst) {
  if (!inst.ci) throw PreconditionError("the family instance ships no CI order at these parameters");
  return *inst.ci;
}

std::uint64_t optimum(const Instance& inst, ObjectiveKind kind) {
  const Election& e = inst.election;
  switch (kind) {
    case ObjectiveKind::kAV:
      return av_score(e, greedy_max(e, kind, e.k()));
    case ObjectiveKind::kCC:
      return max_cc_ci(e, require_ci(inst), e.k()).score;
    case ObjectiveKind::kPairs:
      return max_pairs_ci(e, require_ci(inst), e.k()).score;
    case ObjectiveKind::kCons:
      return max_cons_ci(e, require_ci(inst), e.k()).score;
  }
  return 0;
}

Rational ratio(std::uint64_t value, std::uint64_t opt) {
  if (opt == 0) return Rational(1);
  return Rational(BigInt(value), BigInt(opt));
}

std::vector<Candidate> family_committees(const TradeoffParams& p, const Election& e) {
  std::vector<Candidate> out;
  const std::size_t x3 = p.x * p.x * p.x;
  const std::size_t x4 = x3 * p.x;
  switch (p.family) {
    case TradeoffFamily::kBlockCentral:
      for (std::size_t g = 0; g <= x3; ++g) {
        out.push_back({Rational(BigInt(g), BigInt(x3)), block_central_committee(p.x, g)});
      }
      break;
    case TradeoffFamily::kBlockArm: {
      const std::size_t blocks = e.m() - (x4 + 1);
      for (std::size_t g = 0; g <= blocks; ++g) {
        out.push_back({Rational(BigInt(g), BigInt(blocks)),
                       block_arm_committee(blocks, e.k() - (blocks - g), blocks - g)});
      }
      break;
    }
    case TradeoffFamily::kViBlockChain: {
      const std::size_t blocks = e.m() - x3;
      for (std::size_t c = x3 > blocks ? x3 - blocks : 0; c <= x3; ++c) {
        out.push_back({Rational(BigInt(c), BigInt(x3)), vi_block_chain_committee(blocks, x3 - c, c)});
      }
      break;
    }
    case TradeoffFamily::kArmsChains: {
      const std::size_t top = p.y * p.x * p.x;
      for (std::size_t z = 0; z <= top; ++z) {
        out.push_back({Rational(BigInt(z), BigInt(top)), arms_chains_committee(p.x, p.y, z)});
      }
      break;
    }
  }
  return out;
}

TradeoffRow make_row(const Election& e, const TradeoffTable& t, Rational alpha,
                     std::vector<CandidateId> members) {
  TradeoffRow row;
  row.alpha = std::move(alpha);
  row.committee = Committee(e, std::move(members));
  row.score_a = score(e, row.committee, t.objective_a).value;
  row.score_b = score(e, row.committee, t.objective_b).value;
  row.ratio_a = ratio(row.score_a, t.opt_a);
  row.ratio_b = ratio(row.score_b, t.opt_b);
  return row;
}

TradeoffTable table_header(const TradeoffParams& params, const Instance& inst) {
  TradeoffTable t;
  std::tie(t.objective_a, t.objective_b) = objectives(params.family);
  t.opt_a = optimum(inst, t.objective_a);
  t.opt_b = optimum(inst, t.objective_b);
  return t;
}

}  // namespace

TradeoffFamily parse_family(std::string_view name) {
  if (name == "block-central") return TradeoffFamily::kBlockCentral;
  if (name == "block-arm") return TradeoffFamily::kBlockArm;
  if (name == "vi-block-chain") return TradeoffFamily::kViBlockChain;
  if (name == "arms-chains") return TradeoffFamily::kArmsChains;
  throw ArgumentError("unknown trade-off family '" + std::string(name) + "'");
}

std::string_view family_name(TradeoffFamily family) {
  switch (family) {
    case TradeoffFamily::kBlockCentral: return "block-central";
    case TradeoffFamily::kBlockArm: return "block-arm";
    case TradeoffFamily::kViBlockChain: return "vi-block-chain";
    case TradeoffFamily::kArmsChains: return "arms-chains";
  }
  return "?";
}

Instance build_family(const TradeoffParams& params) {
  switch (params.family) {
    case TradeoffFamily::kBlockCentral:
      return gen_block_central(params.x);
    case TradeoffFamily::kBlockArm:
      return gen_block_arm_scaled(params.x, params.fraction);
    case TradeoffFamily::kViBlockChain:
      return gen_vi_block_chain(params.x, params.fraction);
    case TradeoffFamily::kArmsChains:
      return gen_arms_chains(params.x, params.y);
  }
  throw ArgumentError("unknown family");
}

std::size_t TradeoffTable::best_row() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].sum() > rows[best].sum()) best = i;
  }
  return best;
}

TradeoffTable explicit_tradeoff(const TradeoffParams& params, std::span<const Rational> grid) {
  const Instance inst = build_family(params);
  const Election& e = inst.election;
  TradeoffTable t = table_header(params, inst);
  auto committees = family_committees(params, e);
  if (grid.empty()) {
    for (auto& c : committees) t.rows.push_back(make_row(e, t, c.gamma, std::move(c.members)));
    return t;
  }
  for (const Rational& alpha : grid) {
    // Largest representable γ <= α, or the smallest one.
    std::size_t pick = 0;
    for (std::size_t i = 0; i < committees.size(); ++i) {
      if (committees[i].gamma <= alpha) pick = i;
    }
    t.rows.push_back(make_row(e, t, committees[pick].gamma, committees[pick].members));
  }
  return t;
}

TradeoffTable split_tradeoff(const TradeoffParams& params, std::span<const Rational> grid) {
  const Instance inst = build_family(params);
  const Election& e = inst.election;
  TradeoffTable t = table_header(params, inst);
  const CiOrder& order = require_ci(inst);
  const Solver a = dp_solver(t.objective_a, order);
  const Solver b = dp_solver(t.objective_b, order);
  for (const Rational& alpha : grid) {
    SplitResult r = split_combine(e, alpha, a, b);
    std::vector<CandidateId> members(r.committee.members().begin(), r.committee.members().end());
    t.rows.push_back(make_row(e, t, alpha, std::move(members)));
  }
  return t;
}

std::string format_decimal(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const BigInt scaled = floor(magnitude * scale + Rational(1, 2));
  const BigInt whole = scaled / scale;
  const BigInt remainder = scaled % scale;
  std::string frac = remainder.str();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

std::string tradeoff_csv(const TradeoffTable& table, int digits) {
  std::ostringstream out;
  out << "alpha,ratio_A,ratio_B,sum\n";
  for (const auto& row : table.rows) {
    out << format_decimal(row.alpha, digits) << ',' << format_decimal(row.ratio_a, digits) << ','
        << format_decimal(row.ratio_b, digits) << ',' << format_decimal(row.sum(), digits) << '\n';
  }
  return out.str();
}

}  // namespace interlace
