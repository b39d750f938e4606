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

#include "interlace/proportional.hpp"

#include <algorithm>

#include "interlace/error.hpp"

namespace interlace {

std::optional<Rational> equal_share_price(std::vector<Rational> budgets) {
  std::sort(budgets.begin(), budgets.end());
  Rational paid = 0;
  const std::size_t s = budgets.size();
  for (std::size_t t = 0; t < s; ++t) {
    // Voters t.. pay ρ each, voters before t pay their whole budget.
    Rational rho = (Rational(1) - paid) / Rational(s - t);
    if (rho <= budgets[t]) return rho;
    paid += budgets[t];
  }
  return std::nullopt;
}

MesResult alpha_mes(const Election& election, const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) {
    throw ArgumentError("alpha must lie in (0, 1], got " + to_string(alpha));
  }
  const std::size_t n = election.n();
  MesResult out;
  out.initial_budget = alpha * Rational(election.k()) / Rational(std::max<std::size_t>(n, 1));
  out.budgets.assign(n, out.initial_budget);
  out.target = static_cast<std::size_t>(to_u64(floor(alpha * Rational(election.k()))));

  std::vector<char> chosen(election.m(), 0);
  std::vector<CandidateId> members;
  std::vector<Rational> shares;
  while (members.size() < out.target) {
    std::optional<Rational> best;
    CandidateId arg = 0;
    for (CandidateId c = 0; c < election.m(); ++c) {
      if (chosen[c]) continue;
      shares.clear();
      for (VoterId v : election.supporters(c)) shares.push_back(out.budgets[v]);
      auto rho = equal_share_price(shares);
      if (rho && (!best || *rho < *best)) {
        best = rho;
        arg = c;
      }
    }
    if (!best) break;
    for (VoterId v : election.supporters(arg)) {
      Rational& b = out.budgets[v];
      b -= std::min(b, *best);
    }
    chosen[arg] = 1;
    members.push_back(arg);
    out.rounds.push_back(MesRound{arg, *best});
  }
  out.committee = Committee(election, std::move(members));
  return out;
}

namespace {

class EjrSearch {
 public:
  EjrSearch(const Election& e, const Committee& w, const Rational& alpha, std::uint64_t limit)
      : e_(e), alpha_k_(alpha * Rational(e.k())), limit_(limit), hits_(e.n(), 0) {
    for (std::size_t v = 0; v < e.n(); ++v) {
      for (CandidateId c : e.approvals(static_cast<VoterId>(v))) {
        if (w.contains(c)) ++hits_[v];
      }
    }
  }

  std::optional<EjrWitness> level(std::size_t l) {
    level_ = l;
    threshold_ = Rational(l * e_.n());
    std::vector<VoterId> eligible;
    for (std::size_t v = 0; v < e_.n(); ++v) {
      if (hits_[v] < l && e_.approvals(static_cast<VoterId>(v)).size() >= l) {
        eligible.push_back(static_cast<VoterId>(v));
      }
    }
    if (!large_enough(eligible.size())) return std::nullopt;
    chosen_.clear();
    if (dfs(0, eligible)) return witness_;
    return std::nullopt;
  }

  std::uint64_t examined() const { return examined_; }

 private:
  bool large_enough(std::size_t group) const {
    return alpha_k_ * Rational(group) >= threshold_;
  }

  // `group` = eligible voters approving every candidate in chosen_.
  bool dfs(CandidateId from, const std::vector<VoterId>& group) {
    if (chosen_.size() == level_) {
      witness_ = EjrWitness{level_, chosen_, group};
      return true;
    }
    const std::size_t need = level_ - chosen_.size();
    std::vector<VoterId> next;
    for (CandidateId c = from; c + need <= e_.m(); ++c) {
      if (++examined_ > limit_) {
        throw SizeLimitError("EJR audit exceeded " + std::to_string(limit_) +
                             " search nodes at level " + std::to_string(level_) +
                             "; cap the level or raise the limit");
      }
      next.clear();
      for (VoterId v : group) {
        if (e_.approves(v, c)) next.push_back(v);
      }
      if (!large_enough(next.size())) continue;
      chosen_.push_back(c);
      if (dfs(c + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Election& e_;
  Rational alpha_k_;
  Rational threshold_;
  std::uint64_t limit_;
  std::uint64_t examined_ = 0;
  std::vector<std::size_t> hits_;
  std::size_t level_ = 0;
  std::vector<CandidateId> chosen_;
  EjrWitness witness_;
};

}  // namespace

EjrVerdict check_alpha_ejr(const Election& election, const Committee& committee,
                           const Rational& alpha, std::uint64_t limit, std::size_t max_level) {
  if (alpha < 0) throw ArgumentError("alpha must be nonnegative, got " + to_string(alpha));
  for (CandidateId c : committee.members()) {
    if (c >= election.m()) throw InvalidCommitteeError("committee member out of range");
  }
  const std::size_t top = max_level == 0 ? election.k() : std::min(max_level, election.k());
  EjrVerdict verdict;
  if (alpha == 0) return verdict;
  EjrSearch search(election, committee, alpha, limit);
  for (std::size_t l = 1; l <= top; ++l) {
    if (auto w = search.level(l)) {
      verdict.satisfied = false;
      verdict.witness = std::move(w);
      break;
    }
  }
  verdict.subsets_examined = search.examined();
  return verdict;
}

EjrVerdict check_jr(const Election& election, const Committee& committee, const Rational& alpha) {
  return check_alpha_ejr(election, committee, alpha, kDefaultEvalLimit, 1);
}

}  // namespace interlace
