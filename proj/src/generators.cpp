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

#include "interlace/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "interlace/error.hpp"

namespace interlace {
namespace {

class Builder {
 public:
  CandidateId candidate(std::string label) {
    cand_labels_.push_back(std::move(label));
    return static_cast<CandidateId>(cand_labels_.size() - 1);
  }
  VoterId voter(std::string label, std::vector<CandidateId> ballot) {
    voter_labels_.push_back(std::move(label));
    ballots_.push_back(std::move(ballot));
    return static_cast<VoterId>(ballots_.size() - 1);
  }
  Election build(std::size_t k) {
    return Election(cand_labels_.size(), ballots_, k, voter_labels_, cand_labels_);
  }
  std::size_t m() const { return cand_labels_.size(); }
  std::size_t n() const { return ballots_.size(); }

 private:
  std::vector<std::string> cand_labels_;
  std::vector<std::string> voter_labels_;
  std::vector<std::vector<CandidateId>> ballots_;
};

std::string num(std::size_t i) { return std::to_string(i); }

std::size_t checked_power(std::size_t x, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (x != 0 && out > (std::size_t{1} << 40) / x) throw ArgumentError("parameter x too large");
    out *= x;
  }
  return out;
}

void require_x(std::size_t x, Instance& inst) {
  if (x == 0) throw ArgumentError("x must be at least 1");
  if (x < 2) inst.notes.push_back("x < 2 is degenerate: the trade-off does not show");
}

std::vector<CandidateId> identity(std::size_t m) {
  std::vector<CandidateId> v(m);
  std::iota(v.begin(), v.end(), CandidateId{0});
  return v;
}

// fraction·scale as an integer, or ArgumentError.
std::size_t integral_part_of(const Rational& fraction, std::size_t scale, const char* what) {
  if (fraction <= 0 || fraction > 1) {
    throw ArgumentError("fraction must lie in (0, 1], got " + to_string(fraction));
  }
  const Rational v = fraction * Rational(scale);
  if (boost::multiprecision::denominator(v) != 1) {
    throw ArgumentError(std::string(what) + " must be integral, got " + to_string(v));
  }
  return static_cast<std::size_t>(to_u64(boost::multiprecision::numerator(v)));
}

Instance block_arm_family(std::size_t x, std::size_t blocks) {
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  require_x(x, inst);
  const std::size_t x3 = checked_power(x, 3), x4 = checked_power(x, 4);
  Builder b;
  for (std::size_t i = 1; i <= blocks; ++i) b.candidate("b" + num(i));
  std::vector<CandidateId> arms;
  for (std::size_t i = 1; i <= x4 + 1; ++i) arms.push_back(b.candidate("a" + num(i)));
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t j = 1; j <= x; ++j) {
      b.voter("B" + num(i + 1) + "." + num(j), {static_cast<CandidateId>(i)});
    }
  }
  for (std::size_t j = 1; j <= x3; ++j) b.voter("C" + num(j), arms);
  for (std::size_t i = 0; i < arms.size(); ++i) b.voter("A" + num(i + 1), {arms[i]});
  inst.election = b.build(x4 + 1);
  inst.ci = CiOrder{identity(inst.election.m())};
  return inst;
}

// Uniform integer in [0, bound), independent of the standard library's
// distribution implementations so seeds reproduce across platforms.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
std::vector<T> shuffled(std::mt19937_64& rng, std::size_t size) {
  std::vector<T> v(size);
  std::iota(v.begin(), v.end(), T{0});
  for (std::size_t i = size; i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
  return v;
}

}  // namespace

Instance gen_example(int which) {
  Builder b;
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  if (which == 1) {
    const auto c1 = b.candidate("c1"), c2 = b.candidate("c2"), c3 = b.candidate("c3"),
               c4 = b.candidate("c4"), b1 = b.candidate("b1"), b2 = b.candidate("b2");
    b.voter("v1", {c1, c3, b1});
    b.voter("v2", {c2, c4, b1});
    b.voter("v3", {c1, c3, b2});
    b.voter("v4", {c2, c4, b2});
    inst.election = b.build(4);
    return inst;
  }
  if (which == 2) {
    std::vector<CandidateId> c;
    for (int i = 1; i <= 6; ++i) c.push_back(b.candidate("c" + num(static_cast<std::size_t>(i))));
    const auto d1 = b.candidate("d1"), d2 = b.candidate("d2");
    // c_i covers v_i, v_{i+1}; c6 closes the cycle; d1 = {v2, v6}, d2 = {v3, v5}.
    b.voter("v1", {c[0], c[5]});
    b.voter("v2", {c[0], c[1], d1});
    b.voter("v3", {c[1], c[2], d2});
    b.voter("v4", {c[2], c[3]});
    b.voter("v5", {c[3], c[4], d2});
    b.voter("v6", {c[4], c[5], d1});
    inst.election = b.build(6);
    return inst;
  }
  throw ArgumentError("unknown example " + std::to_string(which) + "; expected 1 or 2");
}

Instance gen_block_central(std::size_t x) {
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  require_x(x, inst);
  const std::size_t x2 = x * x, x3 = checked_power(x, 3);
  Builder b;
  for (std::size_t i = 1; i <= x3; ++i) b.candidate("b" + num(i));
  std::vector<CandidateId> central;
  for (std::size_t i = 1; i <= x3 + 1; ++i) central.push_back(b.candidate("c" + num(i)));
  for (std::size_t i = 0; i < x3; ++i) {
    for (std::size_t j = 1; j <= x; ++j) {
      b.voter("B" + num(i + 1) + "." + num(j), {static_cast<CandidateId>(i)});
    }
  }
  for (std::size_t j = 1; j <= x2; ++j) b.voter("C" + num(j), central);
  inst.election = b.build(x3 + 1);
  inst.ci = CiOrder{identity(inst.election.m())};
  std::vector<VoterId> voters(inst.election.n());
  std::iota(voters.begin(), voters.end(), VoterId{0});
  inst.vi = ViOrder{std::move(voters)};
  return inst;
}

std::vector<CandidateId> block_central_committee(std::size_t x, std::size_t g) {
  const std::size_t x3 = checked_power(x, 3);
  if (g > x3) throw ArgumentError("g must lie in [0, x^3]");
  std::vector<CandidateId> w;
  for (std::size_t i = 0; i < x3 - g; ++i) w.push_back(static_cast<CandidateId>(i));
  for (std::size_t i = 0; i <= g; ++i) w.push_back(static_cast<CandidateId>(x3 + i));
  return w;
}

Instance gen_block_arm(std::size_t x) { return block_arm_family(x, checked_power(x, 4)); }

Instance gen_block_arm_scaled(std::size_t x, const Rational& fraction) {
  integral_part_of(fraction, x, "fraction * x");
  return block_arm_family(x, integral_part_of(fraction, checked_power(x, 4), "fraction * x^4"));
}

std::vector<CandidateId> block_arm_committee(std::size_t num_blocks, std::size_t arms,
                                             std::size_t blocks) {
  if (blocks > num_blocks) throw ArgumentError("more blocks requested than exist");
  std::vector<CandidateId> w;
  for (std::size_t i = 0; i < blocks; ++i) w.push_back(static_cast<CandidateId>(i));
  for (std::size_t i = 0; i < arms; ++i) w.push_back(static_cast<CandidateId>(num_blocks + i));
  return w;
}

Instance gen_vi_block_chain(std::size_t x, const Rational& fraction) {
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  require_x(x, inst);
  const std::size_t x3 = checked_power(x, 3);
  const std::size_t blocks = integral_part_of(fraction, x3, "fraction * x^3");
  Builder b;
  for (std::size_t i = 1; i <= blocks; ++i) b.candidate("b" + num(i));
  std::vector<CandidateId> c;
  for (std::size_t i = 1; i <= x3; ++i) c.push_back(b.candidate("c" + num(i)));
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t j = 1; j <= x; ++j) {
      b.voter("B" + num(i + 1) + "." + num(j), {static_cast<CandidateId>(i)});
    }
  }
  // Central voter i approves c_{i-1} and c_i (where they exist).
  for (std::size_t i = 1; i <= x3 + 1; ++i) {
    std::vector<CandidateId> ballot;
    if (i >= 2) ballot.push_back(c[i - 2]);
    if (i <= x3) ballot.push_back(c[i - 1]);
    b.voter("C" + num(i), std::move(ballot));
  }
  inst.election = b.build(x3);
  inst.ci = CiOrder{identity(inst.election.m())};
  std::vector<VoterId> voters(inst.election.n());
  std::iota(voters.begin(), voters.end(), VoterId{0});
  inst.vi = ViOrder{std::move(voters)};
  inst.vci = vi_to_vci(inst.election, *inst.vi);
  return inst;
}

std::vector<CandidateId> vi_block_chain_committee(std::size_t num_blocks, std::size_t blocks,
                                                  std::size_t central) {
  if (blocks > num_blocks) throw ArgumentError("more blocks requested than exist");
  std::vector<CandidateId> w;
  for (std::size_t i = 0; i < blocks; ++i) w.push_back(static_cast<CandidateId>(i));
  for (std::size_t i = 0; i < central; ++i) w.push_back(static_cast<CandidateId>(num_blocks + i));
  return w;
}

CandidateId arms_chains_block(std::size_t i) { return static_cast<CandidateId>(i); }

CandidateId arms_chains_arm(std::size_t x, std::size_t y, std::size_t j) {
  return static_cast<CandidateId>(y * x * x + 1 + j);
}

CandidateId arms_chains_chain(std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
  return static_cast<CandidateId>(y * x * x + 1 + y + j * x * x + i);
}

Instance gen_arms_chains(std::size_t x, std::size_t y) {
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  require_x(x, inst);
  if (y == 0) throw ArgumentError("y must be at least 1");
  const std::size_t x2 = x * x, x3 = checked_power(x, 3);
  Builder b;
  std::vector<CandidateId> blocks;
  for (std::size_t i = 1; i <= y * x2 + 1; ++i) blocks.push_back(b.candidate("b" + num(i)));
  for (std::size_t j = 1; j <= y; ++j) b.candidate("a" + num(j));
  for (std::size_t j = 1; j <= y; ++j) {
    for (std::size_t i = 1; i <= x2; ++i) b.candidate("c" + num(i) + "." + num(j));
  }
  for (std::size_t i = 1; i <= x2; ++i) b.voter("B" + num(i), blocks);
  for (std::size_t j = 0; j < y; ++j) {
    for (std::size_t t = 0; t < x3; ++t) {
      std::vector<CandidateId> ballot{arms_chains_arm(x, y, j)};
      if (t == 0) ballot.push_back(arms_chains_chain(x, y, x2 - 1, j));
      b.voter("A" + num(j + 1) + "." + num(t + 1), std::move(ballot));
    }
  }
  for (std::size_t j = 0; j < y; ++j) {
    for (std::size_t i = 0; i + 1 < x2; ++i) {
      b.voter("H" + num(i + 1) + "." + num(j + 1),
              {arms_chains_chain(x, y, i, j), arms_chains_chain(x, y, i + 1, j)});
    }
  }
  std::vector<CandidateId> firsts;
  for (std::size_t j = 0; j < y; ++j) firsts.push_back(arms_chains_chain(x, y, 0, j));
  b.voter("Z", std::move(firsts));
  inst.election = b.build(y * (x2 + 1) + 1);
  if (x < 2) inst.notes.push_back("x too small to separate the AV and Cons regimes");
  if (y <= 2) {
    // blocks | a1, chain 1 from the arm end down, chain 2 from the centre out, a2
    std::vector<CandidateId> order(blocks);
    order.push_back(arms_chains_arm(x, y, 0));
    for (std::size_t i = x2; i-- > 0;) order.push_back(arms_chains_chain(x, y, i, 0));
    if (y == 2) {
      for (std::size_t i = 0; i < x2; ++i) order.push_back(arms_chains_chain(x, y, i, 1));
      order.push_back(arms_chains_arm(x, y, 1));
    }
    inst.ci = CiOrder{std::move(order)};
  } else {
    inst.notes.push_back("no CI order: the central voter joins more than two chains");
  }
  return inst;
}

std::vector<CandidateId> arms_chains_committee(std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t x2 = x * x;
  if (z > y * x2) throw ArgumentError("z must lie in [0, y*x^2]");
  std::vector<CandidateId> w;
  for (std::size_t j = 0; j < y; ++j) w.push_back(arms_chains_arm(x, y, j));
  for (std::size_t i = 0; i <= z; ++i) w.push_back(arms_chains_block(i));
  std::size_t chains = y * x2 - z;
  for (std::size_t j = 0; j < y && chains > 0; ++j) {
    for (std::size_t i = x2; i-- > 0 && chains > 0; --chains) {
      w.push_back(arms_chains_chain(x, y, i, j));
    }
  }
  std::sort(w.begin(), w.end());
  return w;
}

X3cReduction gen_from_x3c(const X3cInstance& x3c, X3cVariant variant) {
  const std::size_t ground = 3 * x3c.rho;
  if (x3c.rho == 0) throw ArgumentError("X3C instance needs rho >= 1");
  if (x3c.sets.size() < x3c.rho) {
    throw ArgumentError("X3C instance has fewer sets than rho; no committee of size rho exists");
  }
  for (const auto& s : x3c.sets) {
    for (auto e : s) {
      if (e >= ground) throw ArgumentError("X3C set element outside the ground set");
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw ArgumentError("X3C set repeats an element");
    }
  }
  Builder b;
  for (std::size_t i = 0; i < x3c.sets.size(); ++i) b.candidate("S" + num(i + 1));
  std::vector<std::vector<CandidateId>> of_element(ground);
  for (std::size_t i = 0; i < x3c.sets.size(); ++i) {
    for (auto e : x3c.sets[i]) of_element[e].push_back(static_cast<CandidateId>(i));
  }
  X3cReduction out{Election(1, {}, 1), 0};
  if (variant == X3cVariant::kPairs) {
    for (std::size_t r = 0; r < ground; ++r) {
      b.voter("r" + num(r + 1), of_element[r]);
      b.voter("r" + num(r + 1) + "p", of_element[r]);
    }
    out.election = b.build(x3c.rho);
    out.threshold = 15 * x3c.rho;
  } else {
    b.voter("hub", identity(x3c.sets.size()));
    for (std::size_t r = 0; r < ground; ++r) b.voter("r" + num(r + 1), of_element[r]);
    out.election = b.build(x3c.rho);
    out.threshold = binom2(out.election.n());
  }
  return out;
}

Instance gen_random(std::size_t n, std::size_t m, std::size_t k, RandomDomain domain,
                    std::uint64_t seed, double density) {
  if (m == 0) throw ArgumentError("random election needs m >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw ArgumentError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<CandidateId>> ballots(n);
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};

  switch (domain) {
    case RandomDomain::kNone:
      for (auto& ballot : ballots) {
        for (CandidateId c = 0; c < m; ++c) {
          if (chance(rng, density)) ballot.push_back(c);
        }
      }
      break;
    case RandomDomain::kCI: {
      auto order = shuffled<CandidateId>(rng, m);
      for (auto& ballot : ballots) {
        if (!chance(rng, density)) continue;
        const std::size_t l = below(rng, m);
        const std::size_t len = 1 + below(rng, m - l);
        for (std::size_t p = l; p < l + len; ++p) ballot.push_back(order[p]);
      }
      inst.ci = CiOrder{std::move(order)};
      break;
    }
    case RandomDomain::kVI: {
      auto order = shuffled<VoterId>(rng, n);
      for (CandidateId c = 0; c < m; ++c) {
        if (n == 0 || !chance(rng, density)) continue;
        const std::size_t l = below(rng, n);
        const std::size_t len = 1 + below(rng, n - l);
        for (std::size_t p = l; p < l + len; ++p) ballots[order[p]].push_back(c);
      }
      inst.vi = ViOrder{std::move(order)};
      break;
    }
    case RandomDomain::kVCI: {
      const std::uint64_t span = 2 * (n + m) + 1;
      const std::uint64_t reach = 1 + static_cast<std::uint64_t>(density * static_cast<double>(span) / 4.0);
      VciCertificate cert;
      for (std::size_t v = 0; v < n; ++v) {
        cert.voters.push_back(Interval{Rational(below(rng, span)), Rational(below(rng, reach))});
      }
      for (std::size_t c = 0; c < m; ++c) {
        cert.candidates.push_back(Interval{Rational(below(rng, span)), Rational(below(rng, reach))});
      }
      for (std::size_t v = 0; v < n; ++v) {
        for (CandidateId c = 0; c < m; ++c) {
          const auto& a = *cert.candidates[c];
          const auto& b = cert.voters[v];
          const Rational gap = a.x > b.x ? Rational(a.x - b.x) : Rational(b.x - a.x);
          if (gap <= a.r + b.r) ballots[v].push_back(c);
        }
      }
      inst.vci = std::move(cert);
      break;
    }
  }
  for (auto& ballot : ballots) std::sort(ballot.begin(), ballot.end());
  inst.election = Election(m, std::move(ballots), k);
  bool any_empty = false;
  for (std::size_t v = 0; v < inst.election.n(); ++v) {
    any_empty |= inst.election.approvals(static_cast<VoterId>(v)).empty();
  }
  if (any_empty) inst.notes.push_back("some voters approve no candidate");
  if (inst.ci && !verify_ci_order(inst.election, *inst.ci)) {
    throw InconsistencyError("internal: random CI certificate failed verification");
  }
  if (inst.vi && !verify_vi_order(inst.election, *inst.vi)) {
    throw InconsistencyError("internal: random VI certificate failed verification");
  }
  if (inst.vci && !verify_vci(inst.election, *inst.vci)) {
    throw InconsistencyError("internal: random VCI certificate failed verification");
  }
  return inst;
}

}  // namespace interlace
