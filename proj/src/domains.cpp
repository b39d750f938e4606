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

#include "interlace/domains.hpp"

#include <algorithm>
#include <numeric>

#include "interlace/error.hpp"

namespace interlace {
namespace {

template <typename Id>
std::vector<std::size_t> positions_of(const std::vector<Id>& order, std::size_t size,
                                      const char* what) {
  if (order.size() != size) {
    throw ArgumentError(std::string(what) + " order has " + std::to_string(order.size()) +
                        " entries, expected " + std::to_string(size));
  }
  std::vector<std::size_t> pos(size, size);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto id = order[i];
    if (id >= size || pos[id] != size) {
      throw ArgumentError(std::string(what) + " order is not a permutation");
    }
    pos[id] = i;
  }
  return pos;
}

// A set of ids is contiguous under `pos` iff max - min + 1 == size.
template <typename Id>
bool contiguous(std::span<const Id> ids, const std::vector<std::size_t>& pos) {
  if (ids.size() <= 1) return true;
  std::size_t lo = pos[ids[0]], hi = lo;
  for (Id id : ids) {
    lo = std::min(lo, pos[id]);
    hi = std::max(hi, pos[id]);
  }
  return hi - lo + 1 == ids.size();
}

}  // namespace

VciCertificate VciCertificate::restricted_to(std::span<const CandidateId> kept) const {
  VciCertificate out;
  out.voters = voters;
  out.candidates.reserve(kept.size());
  for (CandidateId c : kept) {
    if (c >= candidates.size()) throw ArgumentError("restriction refers to unknown candidate");
    out.candidates.push_back(candidates[c]);
  }
  return out;
}

bool verify_vci(const Election& election, const VciCertificate& certificate) {
  if (certificate.candidates.size() != election.m() || certificate.voters.size() != election.n()) {
    return false;
  }
  for (const auto& iv : certificate.voters) {
    if (iv.r < 0) return false;
  }
  for (std::size_t c = 0; c < election.m(); ++c) {
    const auto& slot = certificate.candidates[c];
    if (!slot) {
      if (election.support_size(static_cast<CandidateId>(c)) != 0) return false;
      continue;
    }
    if (slot->r < 0) return false;
    for (std::size_t v = 0; v < election.n(); ++v) {
      const auto& iv = certificate.voters[v];
      const Rational gap = slot->x > iv.x ? Rational(slot->x - iv.x) : Rational(iv.x - slot->x);
      const bool close = gap <= slot->r + iv.r;
      if (close != election.approves(static_cast<VoterId>(v), static_cast<CandidateId>(c))) {
        return false;
      }
    }
  }
  return true;
}

bool verify_ci_order(const Election& election, const CiOrder& order) {
  const auto pos = positions_of(order.order, election.m(), "candidate");
  for (std::size_t v = 0; v < election.n(); ++v) {
    if (!contiguous(election.approvals(static_cast<VoterId>(v)), pos)) return false;
  }
  return true;
}

bool verify_vi_order(const Election& election, const ViOrder& order) {
  const auto pos = positions_of(order.order, election.n(), "voter");
  for (std::size_t c = 0; c < election.m(); ++c) {
    if (!contiguous(election.supporters(static_cast<CandidateId>(c)), pos)) return false;
  }
  return true;
}

DominanceRemoval remove_dominated(const Election& election) {
  const std::size_t m = election.m();
  std::vector<CandidateId> by_size(m);
  std::iota(by_size.begin(), by_size.end(), CandidateId{0});
  std::stable_sort(by_size.begin(), by_size.end(), [&](CandidateId a, CandidateId b) {
    return election.support_size(a) > election.support_size(b);
  });

  // V_a ⊊ V_b. Dominance is transitive, so checking against every candidate
  // (removed or not) reaches the same fixed point as iterated removal.
  auto properly_inside = [&](CandidateId a, CandidateId b) {
    auto sa = election.supporters(a);
    auto sb = election.supporters(b);
    return sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  };

  std::vector<char> dominated(m, 0);
  DominanceRemoval out{election, {}, {}, 0};
  for (CandidateId c : by_size) {
    for (CandidateId other : by_size) {
      if (election.support_size(other) <= election.support_size(c)) break;
      if (properly_inside(c, other)) {
        dominated[c] = 1;
        out.removed.push_back(c);
        break;
      }
    }
  }
  if (out.removed.empty()) {
    out.kept.resize(m);
    std::iota(out.kept.begin(), out.kept.end(), CandidateId{0});
    return out;
  }

  std::vector<CandidateId> new_id(m, 0);
  std::vector<std::string> labels;
  for (CandidateId c = 0; c < m; ++c) {
    if (dominated[c]) continue;
    new_id[c] = static_cast<CandidateId>(out.kept.size());
    out.kept.push_back(c);
    labels.push_back(election.candidate_label(c));
  }
  std::vector<std::vector<CandidateId>> ballots(election.n());
  for (std::size_t v = 0; v < election.n(); ++v) {
    for (CandidateId c : election.approvals(static_cast<VoterId>(v))) {
      if (!dominated[c]) ballots[v].push_back(new_id[c]);
    }
  }
  const std::size_t remaining = out.kept.size();
  std::size_t k = election.k();
  if (k > remaining) {
    out.shortfall = k - remaining;
    k = remaining;
  }
  out.election = Election(remaining, std::move(ballots), k, election.voter_labels(),
                          std::move(labels));
  return out;
}

CiOrder ci_order_from_vci(const Election& election, const VciCertificate& certificate) {
  if (!verify_vci(election, certificate)) {
    throw InconsistencyError("VCI certificate does not reproduce the approvals");
  }
  std::vector<CandidateId> placed;
  std::vector<CandidateId> excluded;
  for (CandidateId c = 0; c < election.m(); ++c) {
    (certificate.candidates[c] ? placed : excluded).push_back(c);
  }
  std::stable_sort(placed.begin(), placed.end(), [&](CandidateId a, CandidateId b) {
    return certificate.candidates[a]->x < certificate.candidates[b]->x;
  });
  CiOrder order;
  order.order = std::move(placed);
  order.order.insert(order.order.end(), excluded.begin(), excluded.end());
  if (!verify_ci_order(election, order)) {
    throw InconsistencyError(
        "candidates sorted by position do not witness CI; dominated candidates remain");
  }
  return order;
}

VciCertificate vi_to_vci(const Election& election, const ViOrder& order) {
  if (!verify_vi_order(election, order)) {
    throw InconsistencyError("voter order does not witness VI");
  }
  const auto pos = positions_of(order.order, election.n(), "voter");
  VciCertificate cert;
  cert.voters.resize(election.n());
  for (std::size_t v = 0; v < election.n(); ++v) {
    cert.voters[v] = Interval{Rational(pos[v] + 1), Rational(0)};
  }
  cert.candidates.resize(election.m());
  for (std::size_t c = 0; c < election.m(); ++c) {
    auto sup = election.supporters(static_cast<CandidateId>(c));
    if (sup.empty()) continue;
    std::size_t lo = pos[sup[0]], hi = lo;
    for (VoterId v : sup) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    const Rational lo1(lo + 1), hi1(hi + 1);
    cert.candidates[c] = Interval{(lo1 + hi1) / 2, (hi1 - lo1) / 2};
  }
  return cert;
}

std::optional<CiOrder> find_ci_order_bruteforce(const Election& election,
                                                std::size_t max_candidates) {
  const std::size_t m = election.m();
  if (m > max_candidates) {
    throw SizeLimitError("exhaustive CI search refused: m=" + std::to_string(m) + " exceeds " +
                         std::to_string(max_candidates) + "; supply a certificate instead");
  }
  const std::size_t n = election.n();
  // state per voter: how many approved candidates are placed so far.
  std::vector<std::size_t> placed_count(n, 0);
  std::vector<char> used(m, 0);
  std::vector<CandidateId> prefix;
  prefix.reserve(m);

  // A voter's run is open iff the last placed candidate is approved by them.
  auto extend = [&](auto&& self) -> bool {
    if (prefix.size() == m) return true;
    for (CandidateId c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (VoterId v : election.supporters(c)) {
        if (placed_count[v] > 0 && !election.approves(v, prefix.back())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[c] = 1;
      prefix.push_back(c);
      for (VoterId v : election.supporters(c)) ++placed_count[v];
      if (self(self)) return true;
      for (VoterId v : election.supporters(c)) --placed_count[v];
      prefix.pop_back();
      used[c] = 0;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  CiOrder order{prefix};
  if (!verify_ci_order(election, order)) {
    throw InconsistencyError("internal: CI search produced an invalid order");
  }
  return order;
}

Election reorder_candidates(const Election& election, const CiOrder& order) {
  const auto pos = positions_of(order.order, election.m(), "candidate");
  auto ballots = election.ballots();
  for (auto& ballot : ballots) {
    for (auto& c : ballot) c = static_cast<CandidateId>(pos[c]);
  }
  std::vector<std::string> labels(election.m());
  for (std::size_t i = 0; i < election.m(); ++i) {
    labels[i] = election.candidate_label(order.order[i]);
  }
  return Election(election.m(), std::move(ballots), election.k(), election.voter_labels(),
                  std::move(labels));
}

}  // namespace interlace
