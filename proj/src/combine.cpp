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

#include "interlace/combine.hpp"

#include <algorithm>
#include <numeric>

#include "interlace/error.hpp"
#include "interlace/proportional.hpp"
#include "scorer.hpp"

namespace interlace {
namespace {

void require_submodular(ObjectiveKind objective, const char* op) {
  if (!is_submodular(objective)) {
    throw ArgumentError(std::string(op) + " needs a submodular objective; " +
                        std::string(objective_name(objective)) + " is not");
  }
}

// Marginal gains under a growing committee, for AV, CC and Pairs.
class GainTracker {
 public:
  GainTracker(const Election& e, ObjectiveKind kind) : e_(e), kind_(kind), covered_(e.n(), 0) {
    if (kind == ObjectiveKind::kPairs) linked_.assign(e.n() * e.n(), 0);
  }

  std::uint64_t gain(CandidateId c) const {
    auto sup = e_.supporters(c);
    switch (kind_) {
      case ObjectiveKind::kAV:
        return sup.size();
      case ObjectiveKind::kCC: {
        std::uint64_t g = 0;
        for (VoterId v : sup) g += covered_[v] ? 0 : 1;
        return g;
      }
      default: {
        std::uint64_t g = 0;
        for (std::size_t a = 0; a < sup.size(); ++a) {
          for (std::size_t b = a + 1; b < sup.size(); ++b) {
            g += linked_[sup[a] * e_.n() + sup[b]] ? 0 : 1;
          }
        }
        return g;
      }
    }
  }

  void add(CandidateId c) {
    auto sup = e_.supporters(c);
    for (VoterId v : sup) covered_[v] = 1;
    if (kind_ != ObjectiveKind::kPairs) return;
    for (std::size_t a = 0; a < sup.size(); ++a) {
      for (std::size_t b = a + 1; b < sup.size(); ++b) linked_[sup[a] * e_.n() + sup[b]] = 1;
    }
  }

 private:
  const Election& e_;
  ObjectiveKind kind_;
  std::vector<char> covered_;
  std::vector<char> linked_;
};

std::vector<CandidateId> top_by_approvals(const Election& e, std::size_t size) {
  const Committee w = greedy_max(e, ObjectiveKind::kAV, size);
  return std::vector<CandidateId>(w.members().begin(), w.members().end());
}

}  // namespace

ShrinkResult submodular_shrink(const Election& election, ObjectiveKind objective,
                               std::span<const CandidateId> members, std::size_t target) {
  require_submodular(objective, "submodular_shrink");
  std::vector<CandidateId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("submodular_shrink: committee lists a candidate twice");
  }
  for (CandidateId c : sorted) {
    if (c >= election.m()) throw InvalidCommitteeError("committee member out of range");
  }
  ShrinkResult out;
  detail::Scorer scorer(election);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::uint64_t cur = scorer(objective, members.first(i + 1));
    out.marginals.push_back(cur - prev);
    prev = cur;
  }
  if (target >= members.size()) {
    out.members.assign(members.begin(), members.end());
    out.unchanged = true;
    return out;
  }
  std::vector<std::size_t> idx(members.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return out.marginals[a] > out.marginals[b]; });
  idx.resize(target);
  std::sort(idx.begin(), idx.end());
  for (std::size_t i : idx) out.members.push_back(members[i]);
  return out;
}

Committee greedy_max(const Election& election, ObjectiveKind objective, std::size_t size) {
  require_submodular(objective, "greedy_max");
  if (size > election.m()) {
    throw ArgumentError("greedy size " + std::to_string(size) + " exceeds m=" +
                        std::to_string(election.m()));
  }
  GainTracker tracker(election, objective);
  std::vector<char> used(election.m(), 0);
  std::vector<CandidateId> picked;
  while (picked.size() < size) {
    CandidateId arg = 0;
    std::uint64_t best = 0;
    bool any = false;
    for (CandidateId c = 0; c < election.m(); ++c) {
      if (used[c]) continue;
      const std::uint64_t g = tracker.gain(c);
      if (!any || g > best) {
        any = true;
        best = g;
        arg = c;
      }
    }
    used[arg] = 1;
    tracker.add(arg);
    picked.push_back(arg);
  }
  return Committee(election, std::move(picked));
}

Solver brute_solver(ObjectiveKind objective, std::uint64_t limit) {
  return [objective, limit](const Election& e, std::size_t size) {
    auto sol = brute_force_opt(e, objective, size, limit);
    return std::vector<CandidateId>(sol.committee.members().begin(), sol.committee.members().end());
  };
}

Solver greedy_solver(ObjectiveKind objective) {
  return [objective](const Election& e, std::size_t size) {
    auto w = greedy_max(e, objective, size);
    return std::vector<CandidateId>(w.members().begin(), w.members().end());
  };
}

Solver dp_solver(ObjectiveKind objective, CiOrder order) {
  return [objective, order = std::move(order)](const Election& e, std::size_t size) {
    Solution sol;
    switch (objective) {
      case ObjectiveKind::kAV: return top_by_approvals(e, size);
      case ObjectiveKind::kCC: sol = max_cc_ci(e, order, size); break;
      case ObjectiveKind::kPairs: sol = max_pairs_ci(e, order, size); break;
      case ObjectiveKind::kCons: sol = max_cons_ci(e, order, size); break;
    }
    return std::vector<CandidateId>(sol.committee.members().begin(), sol.committee.members().end());
  };
}

Solver mes_solver(Rational beta) {
  return [beta = std::move(beta)](const Election& e, std::size_t size) {
    auto res = alpha_mes(e, beta);
    std::vector<CandidateId> out;
    for (const auto& round : res.rounds) {
      if (out.size() == size) break;
      out.push_back(round.candidate);
    }
    return out;
  };
}

SplitResult split_combine(const Election& election, const Rational& alpha, const Solver& solver_a,
                          const Solver& solver_b) {
  if (alpha < 0 || alpha > 1) {
    throw ArgumentError("alpha must lie in [0, 1], got " + to_string(alpha));
  }
  const std::size_t k = election.k();
  const std::size_t m = election.m();
  SplitResult out;
  out.seats_a = static_cast<std::size_t>(to_u64(ceil(alpha * Rational(k))));
  out.seats_b = static_cast<std::size_t>(to_u64(floor((Rational(1) - alpha) * Rational(k))));
  if (out.seats_a > 0) out.part_a = solver_a(election, out.seats_a);
  if (out.seats_b > 0) out.part_b = solver_b(election, out.seats_b);

  std::vector<char> used(m, 0);
  std::vector<CandidateId> merged;
  auto take = [&](const std::vector<CandidateId>& part, std::size_t cap) {
    std::size_t taken = 0;
    for (CandidateId c : part) {
      if (taken == cap) break;
      if (c >= m) throw InvalidCommitteeError("solver returned an unknown candidate");
      ++taken;
      if (used[c]) continue;  // duplicate: its seat is refilled below
      used[c] = 1;
      merged.push_back(c);
    }
  };
  take(out.part_a, out.seats_a);
  take(out.part_b, out.seats_b);
  const std::size_t before = merged.size();
  merged = pad_least_unused(std::move(merged), m, std::min(k, m));
  out.filled = merged.size() - before;
  out.committee = Committee(election, std::move(merged));
  return out;
}

HalvingResult halve_cons_vi(const Election& election, const ViOrder& order,
                            const Committee& committee, bool allow_odd_k) {
  if (election.k() % 2 != 0 && !allow_odd_k) {
    throw ArgumentError("halving needs an even k; pass allow_odd_k to compare against k+1 seats");
  }
  if (!verify_vi_order(election, order)) {
    throw PreconditionError("voter order does not witness VI: some support is not contiguous");
  }
  std::vector<std::size_t> pos(election.n());
  for (std::size_t i = 0; i < order.order.size(); ++i) pos[order.order[i]] = i;

  struct Member {
    CandidateId id;
    std::size_t l, r;
  };
  HalvingResult out;
  std::vector<Member> kept;
  for (CandidateId c : committee.members()) {
    auto sup = election.supporters(c);
    if (sup.empty()) {
      out.dropped.push_back(c);
      continue;
    }
    std::size_t l = pos[sup[0]], r = l;
    for (VoterId v : sup) {
      l = std::min(l, pos[v]);
      r = std::max(r, pos[v]);
    }
    kept.push_back(Member{c, l, r});
  }
  // Drop members whose interval sits inside another's; for equal intervals
  // the least id survives (members arrive in ascending id order).
  std::vector<Member> core;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    bool inside = false;
    for (std::size_t b = 0; b < kept.size() && !inside; ++b) {
      if (a == b) continue;
      const bool covers = kept[b].l <= kept[a].l && kept[a].r <= kept[b].r;
      const bool same = kept[b].l == kept[a].l && kept[b].r == kept[a].r;
      inside = covers && (!same || b < a);
    }
    if (inside) {
      out.dropped.push_back(kept[a].id);
    } else {
      core.push_back(kept[a]);
    }
  }
  std::sort(core.begin(), core.end(), [](const Member& a, const Member& b) { return a.l < b.l; });
  for (std::size_t i = 1; i < core.size(); ++i) {
    if (!(core[i - 1].l < core[i].l && core[i - 1].r < core[i].r)) {
      throw InconsistencyError("internal: committee intervals are not strictly increasing");
    }
  }

  std::vector<std::vector<Member>> chains;
  for (const Member& mb : core) {
    if (chains.empty() || mb.l > chains.back().back().r) chains.emplace_back();
    chains.back().push_back(mb);
  }
  for (const auto& ch : chains) {
    out.chains.emplace_back();
    for (const Member& mb : ch) out.chains.back().push_back(mb.id);
  }

  std::vector<CandidateId> picked;
  auto append = [&](std::vector<CandidateId>& dst, const std::vector<Member>& ch, std::size_t from,
                    std::size_t to) {
    for (std::size_t i = from; i < to; ++i) dst.push_back(ch[i].id);
  };
  std::vector<const std::vector<Member>*> odd;
  for (const auto& ch : chains) {
    const std::size_t t = ch.size();
    if (t % 2 == 1) {
      odd.push_back(&ch);
      continue;
    }
    const std::size_t s = t / 2;
    const std::size_t covered = ch.back().r - ch.front().l + 1;
    const std::size_t prefix = ch[s - 1].r - ch.front().l + 1;
    if (2 * prefix > covered) {
      append(picked, ch, 0, s);
    } else {
      append(picked, ch, s, t);
    }
  }
  detail::Scorer scorer(election);
  auto cons_of = [&](std::vector<CandidateId> ids) {
    std::sort(ids.begin(), ids.end());
    return scorer.cons(ids);
  };
  static const std::vector<Member> kEmpty;
  if (odd.size() % 2 == 1) odd.push_back(&kEmpty);
  for (std::size_t p = 0; p < odd.size(); p += 2) {
    const auto& u = *odd[p];
    const auto& w = *odd[p + 1];
    const std::size_t su = u.size() / 2, sw = w.size() / 2;
    // Option 1: first s+1 of U with the last s' of U'. Option 2: mirrored.
    std::vector<CandidateId> one, two;
    append(one, u, 0, su + 1);
    if (!w.empty()) append(one, w, sw + 1, w.size());
    append(two, u, su + 1, u.size());
    if (!w.empty()) append(two, w, 0, sw + 1);
    const auto& best = cons_of(one) >= cons_of(two) ? one : two;
    picked.insert(picked.end(), best.begin(), best.end());
  }
  out.committee = Committee(election, std::move(picked));
  return out;
}

Rational stepwise_bound(const Rational& alpha) {
  if (alpha <= 0 || alpha > 1) {
    throw ArgumentError("alpha must lie in (0, 1], got " + to_string(alpha));
  }
  const BigInt steps = ceil(Rational(2) / alpha) - 1;
  return Rational(BigInt(1), steps);
}

}  // namespace interlace
