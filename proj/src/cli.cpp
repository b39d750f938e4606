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

#include "interlace/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "interlace/combine.hpp"
#include "interlace/domains.hpp"
#include "interlace/error.hpp"
#include "interlace/exact.hpp"
#include "interlace/generators.hpp"
#include "interlace/io.hpp"
#include "interlace/proportional.hpp"
#include "interlace/tradeoff.hpp"
#include "json.hpp"

namespace interlace::cli {
namespace {

using Json = nlohmann::json;

std::uint64_t default_limit() {
  if (const char* env = std::getenv("INTERLACE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ArgumentError(std::string("INTERLACE_LIMIT is not a number: '") + env + "'");
    }
  }
  return kDefaultEvalLimit;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_election_auto(buf.str());
  }
  try {
    return read_election_file(path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ArgumentError(e.what());
  }
}

Committee load_committee(const Election& e, const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '@' ? slurp(arg.substr(1)) : arg;
  return Committee(e, parse_committee(e, text));
}

Json labels_json(const Election& e, std::span<const CandidateId> members) {
  Json out = Json::array();
  for (CandidateId c : members) out.push_back(e.candidate_label(c));
  return out;
}

Rational parse_alpha(const std::string& text) { return parse_rational(text); }

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) grid.push_back(parse_rational(token));
  }
  return grid;
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string file;
  std::string committee;
  bool json = false;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  const Instance inst = load(a.file);
  const Election& e = inst.election;
  const Committee w = load_committee(e, a.committee);
  const auto comps = connected_components(e, w);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  const std::uint64_t av = av_score(e, w), cc = cc_score(e, w), pairs = pairs_score(e, w),
                      cons = cons_score(e, w);
  if (a.json) {
    Json comp_json = Json::array();
    for (const auto& c : comps) {
      Json block = Json::array();
      for (VoterId v : c) block.push_back(e.voter_label(v));
      comp_json.push_back(block);
    }
    Json j{{"committee", labels_json(e, w.members())},
           {"size", w.size()},
           {"k", e.k()},
           {"feasible", w.feasible(e)},
           {"av", av},
           {"cc", cc},
           {"pairs", pairs},
           {"cons", cons},
           {"component_sizes", sizes},
           {"components", comp_json}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "committee: " << format_committee(e, w.members()) << '\n';
  out << "size: " << w.size() << " (k=" << e.k() << ", "
      << (w.feasible(e) ? "feasible" : w.size() < e.k() ? "below k" : "exceeds k") << ")\n";
  out << "av: " << av << "\ncc: " << cc << "\npairs: " << pairs << "\ncons: " << cons << '\n';
  std::size_t singletons = 0;
  std::string big;
  for (std::size_t s : sizes) {
    if (s == 1) {
      ++singletons;
    } else {
      big += (big.empty() ? "" : " ") + std::to_string(s);
    }
  }
  out << "components: " << (big.empty() ? "none" : big) << " (+" << singletons << " singletons)\n";
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string file;
  std::string objective;
  std::string method = "dp";
  std::string alpha = "1";
  std::optional<std::size_t> k;
  std::uint64_t limit = 0;
  bool json = false;
};

// A CI order for the DP, possibly on a reduced election.
struct DpPlan {
  Election election;
  CiOrder order;
  std::vector<CandidateId> back;  // reduced id -> original id
  std::string source;
};

DpPlan plan_from_vci(const Election& e, const VciCertificate& cert, std::string source) {
  if (!verify_vci(e, cert)) {
    throw InconsistencyError("the vci certificate fails verify_vci");
  }
  DominanceRemoval red = remove_dominated(e);
  const VciCertificate sub = cert.restricted_to(red.kept);
  CiOrder order = ci_order_from_vci(red.election, sub);
  return DpPlan{red.election, std::move(order), red.kept, std::move(source)};
}

DpPlan plan_dp(const Instance& inst) {
  const Election& e = inst.election;
  std::vector<CandidateId> identity(e.m());
  for (std::size_t c = 0; c < e.m(); ++c) identity[c] = static_cast<CandidateId>(c);
  if (inst.ci) {
    if (!verify_ci_order(e, *inst.ci)) {
      throw InconsistencyError("the ci-order fails verify_ci_order (some ballot is not contiguous)");
    }
    return DpPlan{e, *inst.ci, identity, "ci-order"};
  }
  if (inst.vci) return plan_from_vci(e, *inst.vci, "vci certificate");
  if (inst.vi) {
    if (!verify_vi_order(e, *inst.vi)) {
      throw InconsistencyError("the vi-order fails verify_vi_order (some support is not contiguous)");
    }
    return plan_from_vci(e, vi_to_vci(e, *inst.vi), "vi-order");
  }
  if (e.m() <= kDefaultCiSearchLimit) {
    auto order = find_ci_order_bruteforce(e);
    if (!order) throw InconsistencyError("no candidate order makes every ballot contiguous");
    return DpPlan{e, *order, identity, "exhaustive order search"};
  }
  throw PreconditionError(
      "method dp needs a ci-order, vi-order or vci certificate in the file (too many candidates "
      "to search for a CI order)");
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Instance inst = load(a.file);
  if (a.k) inst.election = inst.election.with_k(*a.k);
  const Election& e = inst.election;
  Json meta = Json::object();
  std::vector<std::string> lines;
  std::vector<CandidateId> members;
  std::optional<ObjectiveKind> objective;
  if (!a.objective.empty()) objective = parse_objective(a.objective);
  if (a.method != "mes" && !objective) throw ArgumentError("--objective is required for this method");

  if (a.method == "brute") {
    Solution s = brute_force_opt(e, *objective, e.k(), a.limit);
    members.assign(s.committee.members().begin(), s.committee.members().end());
  } else if (a.method == "greedy") {
    if (*objective == ObjectiveKind::kCons) throw ArgumentError("greedy does not support cons");
    Committee w = greedy_max(e, *objective, e.k());
    members.assign(w.members().begin(), w.members().end());
  } else if (a.method == "dp") {
    if (*objective == ObjectiveKind::kAV) {
      Committee w = greedy_max(e, *objective, e.k());
      members.assign(w.members().begin(), w.members().end());
      meta["note"] = "av is maximized exactly by the top approval counts";
      lines.push_back("method: dp (av is exact via top approval counts)");
    } else {
      DpPlan plan = plan_dp(inst);
      const std::size_t k = std::min(e.k(), plan.election.m());
      const Election sub = plan.election.with_k(k);
      Solution s;
      switch (*objective) {
        case ObjectiveKind::kCC: s = max_cc_ci(sub, plan.order, k); break;
        case ObjectiveKind::kPairs: s = max_pairs_ci(sub, plan.order, k); break;
        default: s = max_cons_ci(sub, plan.order, k); break;
      }
      for (CandidateId c : s.committee.members()) members.push_back(plan.back[c]);
      const std::size_t before = members.size();
      std::sort(members.begin(), members.end());
      members = pad_least_unused(std::move(members), e.m(), e.k());
      const std::size_t removed = e.m() - plan.election.m();
      meta["order_source"] = plan.source;
      meta["table_cells"] = s.table_cells;
      meta["dominated_removed"] = removed;
      meta["padded"] = s.padded + (members.size() - before);
      lines.push_back("method: dp (order from " + plan.source + ", table cells " +
                      std::to_string(s.table_cells) + ", dominated removed " +
                      std::to_string(removed) + ")");
    }
  } else if (a.method == "mes") {
    const Rational alpha = parse_alpha(a.alpha);
    MesResult r = alpha_mes(e, alpha);
    members.assign(r.committee.members().begin(), r.committee.members().end());
    Json rounds = Json::array();
    lines.push_back("method: mes (alpha=" + to_string(alpha) + ", budget per voter " +
                    to_string(r.initial_budget) + ", target " + std::to_string(r.target) + ")");
    for (std::size_t i = 0; i < r.rounds.size(); ++i) {
      const auto& rd = r.rounds[i];
      rounds.push_back({{"candidate", e.candidate_label(rd.candidate)}, {"price", to_string(rd.price)}});
      lines.push_back("round " + std::to_string(i + 1) + ": " + e.candidate_label(rd.candidate) +
                      " at price " + to_string(rd.price));
    }
    meta["alpha"] = to_string(alpha);
    meta["initial_budget"] = to_string(r.initial_budget);
    meta["target"] = r.target;
    meta["rounds"] = rounds;
  } else {
    throw ArgumentError("unknown method '" + a.method + "' (brute, dp, greedy, mes)");
  }

  const Committee w(e, members);
  std::optional<std::uint64_t> value;
  if (objective) value = score(e, w, *objective).value;
  if (a.json) {
    Json j{{"committee", labels_json(e, w.members())}, {"method", a.method}, {"k", e.k()}};
    if (objective) {
      j["objective"] = std::string(objective_name(*objective));
      j["score"] = *value;
    }
    j["metadata"] = meta;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "committee: " << format_committee(e, w.members()) << '\n';
  if (objective) out << "score: " << objective_name(*objective) << '=' << *value << '\n';
  for (const auto& l : lines) out << l << '\n';
  return kOk;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
  std::string file;
  std::string committee;
  std::string alpha = "1";
  std::size_t max_level = 0;
  std::uint64_t limit = 0;
  bool json = false;
};

int cmd_audit(const AuditArgs& a, std::ostream& out) {
  const Instance inst = load(a.file);
  const Election& e = inst.election;
  const Committee w = load_committee(e, a.committee);
  const Rational alpha = parse_alpha(a.alpha);
  EjrVerdict v;
  try {
    v = check_alpha_ejr(e, w, alpha, a.limit, a.max_level);
  } catch (const SizeLimitError& err) {
    throw SizeLimitError(std::string(err.what()) +
                         "; cap the level with --max-level or raise --limit-evals");
  }
  if (a.json) {
    Json j{{"alpha", to_string(alpha)},
           {"satisfied", v.satisfied},
           {"subsets_examined", v.subsets_examined}};
    if (v.witness) {
      Json group = Json::array();
      for (VoterId u : v.witness->group) group.push_back(e.voter_label(u));
      j["witness"] = {{"level", v.witness->level},
                      {"candidates", labels_json(e, v.witness->candidates)},
                      {"group_size", v.witness->group.size()},
                      {"group", group}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "alpha-EJR at alpha=" << to_string(alpha) << ": "
        << (v.satisfied ? "satisfied" : "violated") << " (" << v.subsets_examined
        << " subsets examined)\n";
    if (v.witness) {
      const auto& wt = *v.witness;
      out << "witness: level " << wt.level << ", candidates "
          << format_committee(e, wt.candidates) << ", group size " << wt.group.size() << '\n';
      out << "sample voters:";
      for (std::size_t i = 0; i < wt.group.size() && i < 8; ++i) out << ' ' << e.voter_label(wt.group[i]);
      if (wt.group.size() > 8) out << " ...";
      out << '\n';
    }
  }
  return v.satisfied ? kOk : kAuditFailed;
}

// ---------------------------------------------------------------- tradeoff

struct TradeoffArgs {
  std::string family;
  std::vector<std::size_t> x{2};
  std::size_t y = 2;
  std::string fraction = "1";
  std::string grid;
  std::string mode = "explicit";
  bool max_only = false;
  int digits = 6;
};

int cmd_tradeoff(const TradeoffArgs& a, std::ostream& out, std::ostream& err) {
  TradeoffParams p;
  p.family = parse_family(a.family);
  p.y = a.y;
  p.fraction = parse_rational(a.fraction);
  std::vector<Rational> grid = parse_grid(a.grid);
  if (a.mode == "split" && grid.empty()) {
    grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  } else if (a.mode != "split" && a.mode != "explicit") {
    throw ArgumentError("unknown mode '" + a.mode + "' (explicit, split)");
  }
  out << "alpha,ratio_A,ratio_B,sum\n";
  for (std::size_t x : a.x) {
    p.x = x;
    const TradeoffTable t = a.mode == "split" ? split_tradeoff(p, grid) : explicit_tradeoff(p, grid);
    const std::size_t best = t.best_row();
    if (a.x.size() > 1) out << "# x=" << x << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (a.max_only && i != best) continue;
      const auto& r = t.rows[i];
      out << format_decimal(r.alpha, a.digits) << ',' << format_decimal(r.ratio_a, a.digits) << ','
          << format_decimal(r.ratio_b, a.digits) << ',' << format_decimal(r.sum(), a.digits) << '\n';
    }
    err << family_name(p.family) << " x=" << x << ": " << objective_name(t.objective_a) << " opt "
        << t.opt_a << ", " << objective_name(t.objective_b) << " opt " << t.opt_b
        << ", max ratio sum " << format_decimal(t.rows[best].sum(), a.digits) << " at alpha "
        << format_decimal(t.rows[best].alpha, a.digits) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::size_t x = 2;
  std::size_t y = 2;
  std::string fraction = "1";
  std::size_t rho = 1;
  std::string sets;
  std::string variant = "pairs";
  std::size_t n = 8, m = 8, k = 3;
  std::string domain = "none";
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string out_path;
  bool json = false;
};

X3cInstance parse_sets(std::size_t rho, const std::string& text) {
  X3cInstance inst;
  inst.rho = rho;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream items(group);
    std::vector<std::uint32_t> v;
    std::string tok;
    while (items >> tok) {
      for (char& ch : tok) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream parts(tok);
      std::uint32_t value;
      while (parts >> value) v.push_back(value);
      if (!parts.eof()) throw ArgumentError("malformed --sets entry '" + tok + "'");
    }
    if (v.empty()) continue;
    if (v.size() != 3) throw ArgumentError("every X3C set needs exactly three elements");
    inst.sets.push_back({v[0], v[1], v[2]});
  }
  return inst;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst{Election(1, {}, 1), {}, {}, {}, {}};
  std::optional<std::uint64_t> threshold;
  const Rational fraction = parse_rational(a.fraction);
  if (a.family == "example1") {
    inst = gen_example(1);
  } else if (a.family == "example2") {
    inst = gen_example(2);
  } else if (a.family == "block-central") {
    inst = gen_block_central(a.x);
  } else if (a.family == "block-arm") {
    inst = fraction == 1 ? gen_block_arm(a.x) : gen_block_arm_scaled(a.x, fraction);
  } else if (a.family == "vi-block-chain") {
    inst = gen_vi_block_chain(a.x, fraction);
  } else if (a.family == "arms-chains") {
    inst = gen_arms_chains(a.x, a.y);
  } else if (a.family == "x3c") {
    X3cVariant variant;
    if (a.variant == "pairs") {
      variant = X3cVariant::kPairs;
    } else if (a.variant == "cons") {
      variant = X3cVariant::kCons;
    } else {
      throw ArgumentError("unknown X3C variant '" + a.variant + "' (pairs, cons)");
    }
    X3cReduction r = gen_from_x3c(parse_sets(a.rho, a.sets), variant);
    inst.election = std::move(r.election);
    threshold = r.threshold;
  } else if (a.family == "random") {
    RandomDomain d;
    if (a.domain == "none") {
      d = RandomDomain::kNone;
    } else if (a.domain == "vi") {
      d = RandomDomain::kVI;
    } else if (a.domain == "ci") {
      d = RandomDomain::kCI;
    } else if (a.domain == "vci") {
      d = RandomDomain::kVCI;
    } else {
      throw ArgumentError("unknown domain '" + a.domain + "' (none, vi, ci, vci)");
    }
    inst = gen_random(a.n, a.m, a.k, d, a.seed, a.density);
  } else {
    throw ArgumentError("unknown family '" + a.family + "'");
  }
  for (const auto& note : inst.notes) err << "note: " << note << '\n';

  std::string body;
  if (a.json) {
    body = render_election_json(inst);
    if (threshold) {
      Json j = Json::parse(body);
      j["threshold"] = *threshold;
      body = j.dump(2) + "\n";
    }
  } else {
    std::string header;
    for (const auto& note : inst.notes) header += "# " + note + "\n";
    if (threshold) header += "# threshold q=" + std::to_string(*threshold) + "\n";
    body = header + render_election(inst);
  }
  if (a.out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f) throw ArgumentError("cannot write '" + a.out_path + "'");
    f << body;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Committee selection with anti-polarization objectives", "interlace"};
  app.require_subcommand(1);

  std::uint64_t limit = 0;
  ScoreArgs score_args;
  auto* score_cmd = app.add_subcommand("score", "Report AV, CC, Pairs and Cons of a committee");
  score_cmd->add_option("file", score_args.file, "Election file ('-' for stdin)")->required();
  score_cmd->add_option("committee", score_args.committee,
                        "Candidate labels separated by commas or spaces, or @file")
      ->required();
  score_cmd->add_flag("--json", score_args.json, "Machine-readable output");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a committee");
  solve_cmd->add_option("file", solve_args.file, "Election file")->required();
  solve_cmd->add_option("--objective,-o", solve_args.objective, "av, cc, pairs or cons");
  solve_cmd->add_option("--method,-m", solve_args.method, "brute, dp, greedy or mes")
      ->capture_default_str();
  solve_cmd->add_option("--alpha", solve_args.alpha, "Budget scaling for mes")->capture_default_str();
  solve_cmd->add_option("--k", solve_args.k, "Override the committee size");
  solve_cmd->add_option("--limit-evals", limit, "Enumeration limit (env INTERLACE_LIMIT)");
  solve_cmd->add_flag("--json", solve_args.json, "Machine-readable output");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Check alpha-EJR; exit 1 on violation");
  audit_cmd->add_option("file", audit_args.file, "Election file")->required();
  audit_cmd->add_option("committee", audit_args.committee, "Committee labels or @file")->required();
  audit_cmd->add_option("--alpha", audit_args.alpha, "Scaling of the cohesiveness demand")
      ->capture_default_str();
  audit_cmd->add_option("--max-level", audit_args.max_level, "Largest level to check (0 = k)");
  audit_cmd->add_option("--limit-evals", limit, "Enumeration limit (env INTERLACE_LIMIT)");
  audit_cmd->add_flag("--json", audit_args.json, "Machine-readable output");

  TradeoffArgs tradeoff_args;
  auto* tradeoff_cmd = app.add_subcommand("tradeoff", "Ratio table for a construction family");
  tradeoff_cmd->add_option("family", tradeoff_args.family,
                           "block-central, block-arm, vi-block-chain or arms-chains")
      ->required();
  tradeoff_cmd->add_option("--x", tradeoff_args.x, "Size parameter(s), comma separated")
      ->delimiter(',')
      ->capture_default_str();
  tradeoff_cmd->add_option("--y", tradeoff_args.y, "Number of arms (arms-chains)");
  tradeoff_cmd->add_option("--fraction", tradeoff_args.fraction, "Block fraction");
  tradeoff_cmd->add_option("--alpha-grid", tradeoff_args.grid, "Comma separated alphas");
  tradeoff_cmd->add_option("--mode", tradeoff_args.mode, "explicit or split")->capture_default_str();
  tradeoff_cmd->add_flag("--max-only", tradeoff_args.max_only, "Print only the best row per x");
  tradeoff_cmd->add_option("--digits", tradeoff_args.digits, "Decimals in the CSV");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an election file");
  gen_cmd->add_option("family", gen_args.family,
                      "example1, example2, block-central, block-arm, vi-block-chain, "
                      "arms-chains, x3c or random")
      ->required();
  gen_cmd->add_option("--x", gen_args.x, "Size parameter");
  gen_cmd->add_option("--y", gen_args.y, "Number of arms (arms-chains)");
  gen_cmd->add_option("--fraction", gen_args.fraction, "Block fraction");
  gen_cmd->add_option("--rho", gen_args.rho, "X3C: ground set has 3*rho elements");
  gen_cmd->add_option("--sets", gen_args.sets, "X3C sets, e.g. \"0 1 2; 3 4 5\"");
  gen_cmd->add_option("--variant", gen_args.variant, "X3C reduction: pairs or cons");
  gen_cmd->add_option("--n", gen_args.n, "Random: voters");
  gen_cmd->add_option("--m", gen_args.m, "Random: candidates");
  gen_cmd->add_option("--k", gen_args.k, "Random: committee size");
  gen_cmd->add_option("--domain", gen_args.domain, "Random: none, vi, ci or vci");
  gen_cmd->add_option("--seed", gen_args.seed, "Random: seed");
  gen_cmd->add_option("--density", gen_args.density, "Random: approval density");
  gen_cmd->add_option("--out", gen_args.out_path, "Output file (default stdout)");
  gen_cmd->add_flag("--json", gen_args.json, "Write JSON instead of text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::uint64_t eval_limit = limit ? limit : default_limit();
    if (*score_cmd) return cmd_score(score_args, out);
    if (*solve_cmd) {
      solve_args.limit = eval_limit;
      return cmd_solve(solve_args, out);
    }
    if (*audit_cmd) {
      audit_args.limit = eval_limit;
      return cmd_audit(audit_args, out);
    }
    if (*tradeoff_cmd) return cmd_tradeoff(tradeoff_args, out, err);
    if (*gen_cmd) return cmd_gen(gen_args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const InconsistencyError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace interlace::cli
