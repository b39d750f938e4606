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

// Instance families: the two motivating examples, the block/arm/chain
// trade-off constructions, X3C reductions, and seeded random ensembles.
//
// Labeling is stable: block candidates come first, then central, arm and
// chain candidates, so committee helpers can address members by index.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "interlace/domains.hpp"
#include "interlace/election.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// An election with whatever domain certificates the construction provides.
struct Instance {
  Election election;
  std::optional<CiOrder> ci;
  std::optional<ViOrder> vi;
  std::optional<VciCertificate> vci;
  std::vector<std::string> notes;
};

/// Example with four voters and six candidates (which = 1, k = 4) or the
/// six-voter cycle with two diagonals (which = 2, k = 6).
Instance gen_example(int which);

/// x³ blocks of x voters, each approving its own block candidate b_i; x²
/// central voters approving all x³+1 central candidates. k = x³+1.
/// Candidates: b1..b{x³}, c1..c{x³+1}. Ships CI and VI orders.
Instance gen_block_central(std::size_t x);

/// Committee with g+1 central and x³−g block candidates (γ = g/x³).
std::vector<CandidateId> block_central_committee(std::size_t x, std::size_t g);

/// x⁴ blocks of x voters with block candidates, x⁴+1 arm voters and x³
/// central voters; arm candidate a_i is approved by arm voter i and every
/// central voter. k = x⁴+1. Candidates: b1.., a1... Ships a CI order.
Instance gen_block_arm(std::size_t x);

/// As gen_block_arm with fraction·x⁴ blocks. Requires fraction·x integral
/// and 0 < fraction <= 1.
Instance gen_block_arm_scaled(std::size_t x, const Rational& fraction);

/// Committee with `arms` arm candidates and `blocks` block candidates
/// (lowest indices first) in a block/arm election with `num_blocks` blocks.
std::vector<CandidateId> block_arm_committee(std::size_t num_blocks, std::size_t arms,
                                             std::size_t blocks);

/// fraction·x³ blocks of x voters with block candidates, plus x³ central
/// candidates forming a path over x³+1 central voters. k = x³. Requires
/// fraction·x³ integral. Ships VI, CI and VCI certificates.
Instance gen_vi_block_chain(std::size_t x, const Rational& fraction = Rational(1));

/// Committee with the first `blocks` block candidates and the first
/// `central` central candidates of a block/chain election.
std::vector<CandidateId> vi_block_chain_committee(std::size_t num_blocks, std::size_t blocks,
                                                  std::size_t central);

/// yx²+1 block candidates approved by x² block voters; y arms of x³ voters
/// with arm candidates; y chains of x² chain candidates joined by chain
/// voters, each ending at one arm voter, and a central voter touching every
/// chain's first candidate. k = y(x²+1)+1. Ships a CI order when y <= 2.
Instance gen_arms_chains(std::size_t x, std::size_t y);

/// Index helpers for gen_arms_chains (0-based i < x², j < y).
CandidateId arms_chains_block(std::size_t i);
CandidateId arms_chains_arm(std::size_t x, std::size_t y, std::size_t j);
CandidateId arms_chains_chain(std::size_t x, std::size_t y, std::size_t i, std::size_t j);

/// All arms, z+1 blocks and yx²−z chain candidates; chains are filled arm by
/// arm starting from the arm end.
std::vector<CandidateId> arms_chains_committee(std::size_t x, std::size_t y, std::size_t z);

struct X3cInstance {
  std::size_t rho = 0;                              ///< ground set has 3ρ elements
  std::vector<std::array<std::uint32_t, 3>> sets;   ///< distinct elements < 3ρ
};

enum class X3cVariant { kPairs, kCons };

struct X3cReduction {
  Election election;
  std::uint64_t threshold = 0;
};

/// Pairs: two voters per element, k = ρ, q = 15ρ. Cons: one voter per
/// element plus a voter approving everything, k = ρ, q = C(n, 2).
/// Throws ArgumentError for malformed sets or fewer sets than ρ.
X3cReduction gen_from_x3c(const X3cInstance& x3c, X3cVariant variant);

enum class RandomDomain { kNone, kVI, kCI, kVCI };

/// Seeded random profile. kNone: independent approvals with probability
/// `density`. kCI / kVI: random intervals over a random candidate / voter
/// order (an empty ballot / support with probability 1 − density). kVCI:
/// integer positions and radii. Certificates are verified before returning.
Instance gen_random(std::size_t n, std::size_t m, std::size_t k, RandomDomain domain,
                    std::uint64_t seed, double density = 0.5);

}  // namespace interlace
