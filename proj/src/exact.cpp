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

#include "interlace/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "interlace/error.hpp"
#include "scorer.hpp"

namespace interlace {
namespace {

void check_k(const Election& election, std::size_t k) {
  if (k < 1 || k > election.m()) {
    throw ArgumentError("committee size " + std::to_string(k) + " outside [1, " +
                        std::to_string(election.m()) + "]");
  }
}

// Candidate positions under a verified CI order.
std::vector<std::size_t> checked_positions(const Election& election, const CiOrder& order) {
  if (!verify_ci_order(election, order)) {
    throw PreconditionError("candidate order does not witness CI: some ballot is not contiguous");
  }
  std::vector<std::size_t> pos(election.m());
  for (std::size_t i = 0; i < order.order.size(); ++i) pos[order.order[i]] = i;
  return pos;
}

struct Span {
  std::size_t l, r;
};

// Ballot of each voter as a position interval; nullopt-like {1, 0} for empty.
std::vector<Span> voter_spans(const Election& election, const std::vector<std::size_t>& pos) {
  std::vector<Span> spans(election.n(), Span{1, 0});
  for (std::size_t v = 0; v < election.n(); ++v) {
    auto ballot = election.approvals(static_cast<VoterId>(v));
    if (ballot.empty()) continue;
    std::size_t lo = pos[ballot[0]], hi = lo;
    for (CandidateId c : ballot) {
      lo = std::min(lo, pos[c]);
      hi = std::max(hi, pos[c]);
    }
    spans[v] = Span{lo, hi};
  }
  return spans;
}

// excl[(j + 1) * m + i] = number of intervals with j < l <= i <= r, for
// j in [-1, i). excl[i] (j = -1) is the number of intervals containing i.
class ExclusiveCounts {
 public:
  ExclusiveCounts(std::size_t m, const std::vector<std::uint64_t>& cnt) : m_(m), excl_((m + 1) * m, 0) {
    std::vector<std::uint64_t> reach(m, 0);  // reach[l] = #intervals [l, r] with r >= i
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t l = 0; l <= i; ++l) reach[l] += cnt[l * m + i];
      std::uint64_t run = 0;
      for (std::size_t l = i + 1; l-- > 0;) {
        run += reach[l];
        excl_[l * m + i] = run;  // row l corresponds to j = l - 1
      }
    }
  }
  std::uint64_t after(std::ptrdiff_t j, std::size_t i) const {
    return excl_[static_cast<std::size_t>(j + 1) * m_ + i];
  }
  std::uint64_t containing(std::size_t i) const { return excl_[i]; }

 private:
  std::size_t m_;
  std::vector<std::uint64_t> excl_;
};

// CC over a multiset of candidate intervals, exactly `k` members by position.
Solution interval_cc(const Election& election, const std::vector<CandidateId>& order,
                     const std::vector<std::uint64_t>& cnt, std::size_t k) {
  const std::size_t m = order.size();
  const ExclusiveCounts ex(m, cnt);
  std::vector<std::int64_t> cc(k * m, -1);
  std::vector<std::int32_t> back(k * m, -1);
  auto at = [m](std::size_t b, std::size_t i) { return (b - 1) * m + i; };
  for (std::size_t i = 0; i < m; ++i) cc[at(1, i)] = static_cast<std::int64_t>(ex.containing(i));
  for (std::size_t b = 2; b <= k; ++b) {
    for (std::size_t i = 1; i < m; ++i) {
      std::int64_t best = -1;
      std::int32_t arg = -1;
      for (std::size_t j = 0; j < i; ++j) {
        const std::int64_t prev = cc[at(b - 1, j)];
        if (prev < 0) continue;
        const std::int64_t cand =
            prev + static_cast<std::int64_t>(ex.after(static_cast<std::ptrdiff_t>(j), i));
        if (cand > best) {
          best = cand;
          arg = static_cast<std::int32_t>(j);
        }
      }
      cc[at(b, i)] = best;
      back[at(b, i)] = arg;
    }
  }
  auto rebuild = [&](std::size_t i) {
    std::vector<CandidateId> members;
    std::size_t b = k;
    std::int64_t cur = static_cast<std::int64_t>(i);
    while (cur >= 0) {
      members.push_back(order[static_cast<std::size_t>(cur)]);
      cur = back[at(b, static_cast<std::size_t>(cur))];
      --b;
    }
    std::sort(members.begin(), members.end());
    return members;
  };
  std::int64_t top = -1;
  std::vector<CandidateId> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t v = cc[at(k, i)];
    if (v < 0 || v < top) continue;
    auto members = rebuild(i);
    if (v > top || committee_less(members, chosen)) {
      top = v;
      chosen = std::move(members);
    }
  }
  Solution out;
  out.committee = Committee(election, std::move(chosen));
  out.score = static_cast<std::uint64_t>(top);
  out.table_cells = cc.size();
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  // Partial products C(n - r + i, i) increase with i, so saturating is safe.
  __extension__ using U128 = unsigned __int128;
  U128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<CandidateId> pad_least_unused(std::vector<CandidateId> members, std::size_t m,
                                          std::size_t size) {
  std::vector<char> used(m, 0);
  for (CandidateId c : members) used[c] = 1;
  for (CandidateId c = 0; c < m && members.size() < size; ++c) {
    if (!used[c]) {
      members.push_back(c);
      used[c] = 1;
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Solution brute_force_opt(const Election& election, ObjectiveKind objective, std::size_t size,
                         std::uint64_t limit) {
  const std::size_t m = election.m();
  if (size > m) {
    throw ArgumentError("committee size " + std::to_string(size) + " exceeds m=" + std::to_string(m));
  }
  const std::uint64_t total = binomial(m, size);
  if (total > limit) {
    throw SizeLimitError("brute force needs C(" + std::to_string(m) + "," + std::to_string(size) +
                         ") evaluations, above the limit of " + std::to_string(limit));
  }
  detail::Scorer scorer(election);
  std::vector<CandidateId> idx(size);
  std::iota(idx.begin(), idx.end(), CandidateId{0});
  std::vector<CandidateId> best = idx;
  std::uint64_t best_score = scorer(objective, idx);
  // Lexicographic enumeration; only strict improvements replace the incumbent.
  while (true) {
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < size; ++t) idx[t] = idx[t - 1] + 1;
    const std::uint64_t s = scorer(objective, idx);
    if (s > best_score) {
      best_score = s;
      best = idx;
    }
  }
  Solution out;
  out.committee = Committee(election, std::move(best));
  out.score = best_score;
  return out;
}

ConsDp::ConsDp(const Election& election, const CiOrder& order, std::size_t k,
               std::uint64_t max_cells)
    : election_(&election), order_(order.order), m_(election.m()), n_(election.n()), k_(k) {
  check_k(election, k);
  const auto pos = checked_positions(election, order);
  const std::uint64_t cells = static_cast<std::uint64_t>(m_) * (n_ + 1) * k_;
  if (cells > max_cells) {
    throw SizeLimitError("Cons table would have " + std::to_string(cells) + " cells");
  }
  const auto spans = voter_spans(election, pos);
  std::vector<std::uint64_t> cnt(m_ * m_, 0);
  for (const Span& s : spans) {
    if (s.l <= s.r) ++cnt[s.l * m_ + s.r];
  }
  const ExclusiveCounts ex(m_, cnt);

  value_.assign(cells, -1);
  back_j_.assign(cells, -1);
  back_y_.assign(cells, -1);

  std::vector<std::size_t> size(m_);
  for (std::size_t i = 0; i < m_; ++i) size[i] = ex.containing(i);

  for (std::size_t i = 0; i < m_; ++i) {
    value_[index(i, size[i], 1)] = static_cast<std::int64_t>(binom2(size[i]));
  }
  for (std::size_t b = 2; b <= k_; ++b) {
    value_[index(0, size[0], b)] = static_cast<std::int64_t>(binom2(size[0]));
  }

  std::vector<std::int64_t> top(m_);
  std::vector<std::int32_t> top_y(m_);
  for (std::size_t b = 2; b <= k_; ++b) {
    // Best previous cell per j, used when c_i shares no voter with c_j.
    for (std::size_t j = 0; j < m_; ++j) {
      top[j] = -1;
      top_y[j] = -1;
      for (std::size_t y = 0; y <= n_; ++y) {
        const std::int64_t v = value_[index(j, y, b - 1)];
        if (v > top[j]) {
          top[j] = v;
          top_y[j] = static_cast<std::int32_t>(y);
        }
      }
    }
    for (std::size_t i = 1; i < m_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint64_t fresh = ex.after(static_cast<std::ptrdiff_t>(j), i);
        if (fresh < size[i]) {
          // Shared voter: the component of c_j absorbs the fresh voters.
          for (std::size_t y = 0; y + fresh <= n_; ++y) {
            const std::int64_t prev = value_[index(j, y, b - 1)];
            if (prev < 0) continue;
            const std::size_t x = y + fresh;
            const std::int64_t s = prev + static_cast<std::int64_t>(binom2(fresh) + y * fresh);
            const std::size_t cell = index(i, x, b);
            if (s > value_[cell]) {
              value_[cell] = s;
              back_j_[cell] = static_cast<std::int32_t>(j);
              back_y_[cell] = static_cast<std::int32_t>(y);
            }
          }
        } else if (top[j] >= 0) {
          const std::size_t x = size[i];
          const std::int64_t s = top[j] + static_cast<std::int64_t>(binom2(x));
          const std::size_t cell = index(i, x, b);
          if (s > value_[cell]) {
            value_[cell] = s;
            back_j_[cell] = static_cast<std::int32_t>(j);
            back_y_[cell] = top_y[j];
          }
        }
      }
    }
  }
}

std::vector<CandidateId> ConsDp::reconstruct(std::size_t i, std::size_t x, std::size_t b) const {
  std::vector<CandidateId> members;
  if (value(i, x, b) < 0) return members;
  while (true) {
    const std::size_t cell = index(i, x, b);
    members.push_back(order_[i]);
    if (back_j_[cell] < 0) break;
    i = static_cast<std::size_t>(back_j_[cell]);
    x = static_cast<std::size_t>(back_y_[cell]);
    --b;
  }
  std::sort(members.begin(), members.end());
  return members;
}

Solution ConsDp::best() const {
  std::int64_t top = -1;
  std::vector<CandidateId> chosen;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t x = 0; x <= n_; ++x) {
      const std::int64_t v = value(i, x, k_);
      if (v < 0 || v < top) continue;
      auto members = reconstruct(i, x, k_);
      if (v > top || committee_less(members, chosen)) {
        top = v;
        chosen = std::move(members);
      }
    }
  }
  Solution out;
  const std::size_t found = chosen.size();
  out.committee = Committee(*election_, pad_least_unused(std::move(chosen), m_, k_));
  out.padded = out.committee.size() - found;
  out.score = static_cast<std::uint64_t>(top);
  out.table_cells = cells();
  return out;
}

Solution max_cons_ci(const Election& election, const CiOrder& order, std::size_t k) {
  return ConsDp(election, order, k).best();
}

Solution max_cc_ci(const Election& election, const CiOrder& order, std::size_t k) {
  check_k(election, k);
  const auto pos = checked_positions(election, order);
  const std::size_t m = election.m();
  std::vector<std::uint64_t> cnt(m * m, 0);
  for (const Span& s : voter_spans(election, pos)) {
    if (s.l <= s.r) ++cnt[s.l * m + s.r];
  }
  return interval_cc(election, order.order, cnt, k);
}

Solution max_pairs_ci(const Election& election, const CiOrder& order, std::size_t k) {
  if (election.n() < 2) throw DegenerateInstanceError("Pairs needs at least two voters");
  check_k(election, k);
  const auto pos = checked_positions(election, order);
  const std::size_t m = election.m();
  const auto spans = voter_spans(election, pos);
  // A_u ∩ A_v is the intersection of two intervals, hence an interval.
  std::vector<std::uint64_t> cnt(m * m, 0);
  for (std::size_t u = 0; u < spans.size(); ++u) {
    if (spans[u].l > spans[u].r) continue;
    for (std::size_t v = u + 1; v < spans.size(); ++v) {
      const std::size_t l = std::max(spans[u].l, spans[v].l);
      const std::size_t r = std::min(spans[u].r, spans[v].r);
      if (l <= r) ++cnt[l * m + r];
    }
  }
  return interval_cc(election, order.order, cnt, k);
}

}  // namespace interlace
