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

#include "interlace/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "interlace/error.hpp"
#include "json.hpp"

namespace interlace {
namespace {

using Json = nlohmann::json;

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::size_t line, const char* key) {
  if (text.empty()) throw ParseError(std::string("empty value for ") + key, line);
  std::size_t v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string("malformed value for ") + key + ": '" + std::string(text) + "'",
                       line);
    }
    if (v > (std::size_t{1} << 40)) throw ParseError(std::string(key) + " is too large", line);
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

Rational parse_rational_at(std::string_view text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), line);
  }
}

bool reserved_label(std::string_view s) {
  return s == "candidates" || s == "ci-order" || s == "vi-order" || s == "vci" || s == "cand" ||
         s == "voter" || s == "election";
}

struct VciEntry {
  bool voter;
  std::string label;
  std::optional<Interval> interval;
  std::size_t line;
};

template <typename Id>
std::vector<Id> resolve_order(const std::vector<std::string>& labels,
                              const std::unordered_map<std::string, Id>& ids, std::size_t expected,
                              std::size_t line, const char* what) {
  if (labels.size() != expected) {
    throw ParseError(std::string(what) + " lists " + std::to_string(labels.size()) +
                         " entries, expected " + std::to_string(expected),
                     line);
  }
  std::vector<Id> out;
  std::vector<char> seen(expected, 0);
  for (const auto& l : labels) {
    auto it = ids.find(l);
    if (it == ids.end()) throw ParseError(std::string(what) + " names unknown '" + l + "'", line);
    if (seen[it->second]) throw ParseError(std::string(what) + " repeats '" + l + "'", line);
    seen[it->second] = 1;
    out.push_back(it->second);
  }
  return out;
}

std::string join(const std::vector<std::string>& labels, std::span<const std::uint32_t> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += labels[ids[i]];
  }
  return out;
}

Election build_election(std::size_t m, std::vector<std::vector<CandidateId>> ballots, std::size_t k,
                        std::vector<std::string> voter_labels,
                        std::vector<std::string> cand_labels, std::size_t line) {
  try {
    return Election(m, std::move(ballots), k, std::move(voter_labels), std::move(cand_labels));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

Instance parse_election(std::string_view text) {
  std::size_t header_line = 0;
  std::size_t n = 0, m = 0, k = 0;
  std::optional<std::pair<std::vector<std::string>, std::size_t>> cand_line, ci_line, vi_line;
  std::size_t vci_line = 0;
  std::vector<VciEntry> vci;
  struct Ballot {
    std::string label;
    std::vector<std::string> cands;
    std::size_t line;
  };
  std::vector<Ballot> ballots;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const auto tokens = split_ws(line);
    const std::string& first = tokens[0];

    if (first == "election") {
      if (header_line) throw ParseError("duplicate election header", lineno);
      if (!ballots.empty() || cand_line || ci_line || vi_line || vci_line) {
        throw ParseError("the election header must come first", lineno);
      }
      header_line = lineno;
      bool has_n = false, has_m = false, has_k = false;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tokens[i] + "'", lineno);
        const std::string key = tokens[i].substr(0, eq);
        const std::string_view val = std::string_view(tokens[i]).substr(eq + 1);
        if (key == "n") {
          n = parse_count(val, lineno, "n");
          has_n = true;
        } else if (key == "m") {
          m = parse_count(val, lineno, "m");
          has_m = true;
        } else if (key == "k") {
          k = parse_count(val, lineno, "k");
          has_k = true;
        } else {
          throw ParseError("unknown header field '" + key + "'", lineno);
        }
      }
      if (!(has_n && has_m && has_k)) throw ParseError("header needs n=, m= and k=", lineno);
      continue;
    }
    if (!header_line) throw ParseError("expected 'election n=<n> m=<m> k=<k>' header", lineno);

    if (first == "cand" || first == "voter") {
      if (!vci_line) throw ParseError("'" + first + "' entry outside a vci: block", lineno);
      VciEntry entry{first == "voter", "", std::nullopt, lineno};
      if (tokens.size() < 2) throw ParseError("vci entry needs a label", lineno);
      entry.label = tokens[1];
      if (tokens.size() == 3 && tokens[2] == "excluded" && !entry.voter) {
        vci.push_back(std::move(entry));
        continue;
      }
      std::optional<Rational> x, r;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const std::string_view tok = tokens[i];
        if (tok.starts_with("x=")) {
          x = parse_rational_at(tok.substr(2), lineno);
        } else if (tok.starts_with("r=")) {
          r = parse_rational_at(tok.substr(2), lineno);
        } else {
          throw ParseError("unexpected vci field '" + std::string(tok) + "'", lineno);
        }
      }
      if (!x || !r) throw ParseError("vci entry needs x= and r=", lineno);
      entry.interval = Interval{*x, *r};
      vci.push_back(std::move(entry));
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected '<voter>: <candidates...>', got '" + std::string(line) + "'", lineno);
    }
    const std::string label(trim(line.substr(0, colon)));
    if (label.empty() || split_ws(label).size() != 1) {
      throw ParseError("malformed label before ':'", lineno);
    }
    auto rest = split_ws(line.substr(colon + 1));
    if (label == "candidates") {
      if (cand_line) throw ParseError("duplicate candidates: line", lineno);
      cand_line.emplace(std::move(rest), lineno);
    } else if (label == "ci-order") {
      if (ci_line) throw ParseError("duplicate ci-order: line", lineno);
      ci_line.emplace(std::move(rest), lineno);
    } else if (label == "vi-order") {
      if (vi_line) throw ParseError("duplicate vi-order: line", lineno);
      vi_line.emplace(std::move(rest), lineno);
    } else if (label == "vci") {
      if (vci_line) throw ParseError("duplicate vci: block", lineno);
      if (!rest.empty()) throw ParseError("vci: entries go on their own lines", lineno);
      vci_line = lineno;
    } else if (reserved_label(label)) {
      throw ParseError("'" + label + "' is reserved and cannot label a voter", lineno);
    } else {
      ballots.push_back(Ballot{label, std::move(rest), lineno});
    }
    if (eol == text.size()) break;
  }
  if (!header_line) throw ParseError("missing 'election n=<n> m=<m> k=<k>' header", 0);

  std::vector<std::string> cand_labels;
  if (cand_line) {
    if (cand_line->first.size() != m) {
      throw ParseError("candidates: lists " + std::to_string(cand_line->first.size()) +
                           " labels but m=" + std::to_string(m),
                       cand_line->second);
    }
    cand_labels = cand_line->first;
  } else {
    for (std::size_t c = 1; c <= m; ++c) cand_labels.push_back("c" + std::to_string(c));
  }
  std::unordered_map<std::string, CandidateId> cand_ids;
  for (std::size_t c = 0; c < cand_labels.size(); ++c) {
    if (!cand_ids.emplace(cand_labels[c], static_cast<CandidateId>(c)).second) {
      throw ParseError("duplicate candidate label '" + cand_labels[c] + "'",
                       cand_line ? cand_line->second : header_line);
    }
  }
  if (ballots.size() != n) {
    throw ParseError("header declares n=" + std::to_string(n) + " but " +
                         std::to_string(ballots.size()) + " ballot lines follow",
                     header_line);
  }
  std::vector<std::vector<CandidateId>> approvals(n);
  std::vector<std::string> voter_labels;
  std::unordered_map<std::string, VoterId> voter_ids;
  for (std::size_t v = 0; v < n; ++v) {
    const Ballot& b = ballots[v];
    if (!voter_ids.emplace(b.label, static_cast<VoterId>(v)).second) {
      throw ParseError("duplicate voter label '" + b.label + "'", b.line);
    }
    voter_labels.push_back(b.label);
    for (const auto& c : b.cands) {
      auto it = cand_ids.find(c);
      if (it == cand_ids.end()) throw ParseError("unknown candidate '" + c + "'", b.line);
      approvals[v].push_back(it->second);
    }
  }
  Instance inst{build_election(m, std::move(approvals), k, std::move(voter_labels),
                               std::move(cand_labels), header_line),
                {}, {}, {}, {}};
  if (ci_line) {
    inst.ci = CiOrder{resolve_order(ci_line->first, cand_ids, m, ci_line->second, "ci-order")};
  }
  if (vi_line) {
    inst.vi = ViOrder{resolve_order(vi_line->first, voter_ids, n, vi_line->second, "vi-order")};
  }
  if (vci_line) {
    VciCertificate cert;
    cert.candidates.resize(m);
    cert.voters.resize(n);
    std::vector<char> cand_seen(m, 0), voter_seen(n, 0);
    for (const auto& e : vci) {
      if (e.voter) {
        auto it = voter_ids.find(e.label);
        if (it == voter_ids.end()) throw ParseError("vci names unknown voter '" + e.label + "'", e.line);
        if (voter_seen[it->second]++) throw ParseError("vci repeats voter '" + e.label + "'", e.line);
        cert.voters[it->second] = *e.interval;
      } else {
        auto it = cand_ids.find(e.label);
        if (it == cand_ids.end()) {
          throw ParseError("vci names unknown candidate '" + e.label + "'", e.line);
        }
        if (cand_seen[it->second]++) throw ParseError("vci repeats candidate '" + e.label + "'", e.line);
        cert.candidates[it->second] = e.interval;
      }
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (!cand_seen[c]) {
        throw ParseError(
            "vci misses candidate '" + inst.election.candidate_label(static_cast<CandidateId>(c)) + "'",
            vci_line);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!voter_seen[v]) {
        throw ParseError("vci misses voter '" + inst.election.voter_label(static_cast<VoterId>(v)) + "'",
                         vci_line);
      }
    }
    inst.vci = std::move(cert);
  }
  return inst;
}

std::string render_election(const Instance& instance) {
  const Election& e = instance.election;
  for (const auto& label : e.voter_labels()) {
    if (reserved_label(label)) {
      throw ArgumentError("voter label '" + label + "' is reserved in the text format");
    }
  }
  std::ostringstream out;
  out << "election n=" << e.n() << " m=" << e.m() << " k=" << e.k() << '\n';
  out << "candidates:";
  for (const auto& l : e.candidate_labels()) out << ' ' << l;
  out << '\n';
  if (instance.ci) out << "ci-order: " << join(e.candidate_labels(), instance.ci->order) << '\n';
  if (instance.vi) out << "vi-order: " << join(e.voter_labels(), instance.vi->order) << '\n';
  if (instance.vci) {
    const auto& cert = *instance.vci;
    out << "vci:\n";
    for (std::size_t c = 0; c < cert.candidates.size(); ++c) {
      out << "cand " << e.candidate_label(static_cast<CandidateId>(c));
      if (cert.candidates[c]) {
        out << " x=" << to_string(cert.candidates[c]->x) << " r=" << to_string(cert.candidates[c]->r);
      } else {
        out << " excluded";
      }
      out << '\n';
    }
    for (std::size_t v = 0; v < cert.voters.size(); ++v) {
      out << "voter " << e.voter_label(static_cast<VoterId>(v)) << " x=" << to_string(cert.voters[v].x)
          << " r=" << to_string(cert.voters[v].r) << '\n';
    }
  }
  for (std::size_t v = 0; v < e.n(); ++v) {
    out << e.voter_label(static_cast<VoterId>(v)) << ':';
    for (CandidateId c : e.approvals(static_cast<VoterId>(v))) out << ' ' << e.candidate_label(c);
    out << '\n';
  }
  return out.str();
}

std::string render_election_json(const Instance& instance, int indent) {
  const Election& e = instance.election;
  Json j;
  j["n"] = e.n();
  j["m"] = e.m();
  j["k"] = e.k();
  j["candidates"] = e.candidate_labels();
  Json voters = Json::array();
  for (std::size_t v = 0; v < e.n(); ++v) {
    Json approves = Json::array();
    for (CandidateId c : e.approvals(static_cast<VoterId>(v))) approves.push_back(e.candidate_label(c));
    voters.push_back({{"label", e.voter_label(static_cast<VoterId>(v))}, {"approves", approves}});
  }
  j["voters"] = voters;
  if (instance.ci) {
    Json order = Json::array();
    for (CandidateId c : instance.ci->order) order.push_back(e.candidate_label(c));
    j["ci_order"] = order;
  }
  if (instance.vi) {
    Json order = Json::array();
    for (VoterId v : instance.vi->order) order.push_back(e.voter_label(v));
    j["vi_order"] = order;
  }
  if (instance.vci) {
    Json cands = Json::array();
    for (std::size_t c = 0; c < instance.vci->candidates.size(); ++c) {
      const auto& slot = instance.vci->candidates[c];
      Json entry{{"label", e.candidate_label(static_cast<CandidateId>(c))}};
      if (slot) {
        entry["x"] = to_string(slot->x);
        entry["r"] = to_string(slot->r);
      } else {
        entry["excluded"] = true;
      }
      cands.push_back(entry);
    }
    Json vs = Json::array();
    for (std::size_t v = 0; v < instance.vci->voters.size(); ++v) {
      vs.push_back({{"label", e.voter_label(static_cast<VoterId>(v))},
                    {"x", to_string(instance.vci->voters[v].x)},
                    {"r", to_string(instance.vci->voters[v].r)}});
    }
    j["vci"] = {{"candidates", cands}, {"voters", vs}};
  }
  return j.dump(indent) + "\n";
}

Instance parse_election_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  try {
    const std::size_t m = j.at("m").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    std::vector<std::string> cand_labels;
    if (j.contains("candidates")) {
      cand_labels = j.at("candidates").get<std::vector<std::string>>();
    } else {
      for (std::size_t c = 1; c <= m; ++c) cand_labels.push_back("c" + std::to_string(c));
    }
    if (cand_labels.size() != m) throw ParseError("candidates length differs from m", 0);
    std::unordered_map<std::string, CandidateId> cand_ids;
    for (std::size_t c = 0; c < m; ++c) cand_ids.emplace(cand_labels[c], static_cast<CandidateId>(c));
    const auto& voters = j.at("voters");
    const std::size_t n = voters.size();
    if (j.contains("n") && j.at("n").get<std::size_t>() != n) {
      throw ParseError("n differs from the number of voters", 0);
    }
    std::vector<std::string> voter_labels;
    std::vector<std::vector<CandidateId>> approvals;
    std::unordered_map<std::string, VoterId> voter_ids;
    for (const auto& v : voters) {
      voter_labels.push_back(v.at("label").get<std::string>());
      voter_ids.emplace(voter_labels.back(), static_cast<VoterId>(voter_ids.size()));
      approvals.emplace_back();
      for (const auto& c : v.at("approves")) {
        auto it = cand_ids.find(c.get<std::string>());
        if (it == cand_ids.end()) {
          throw ParseError("unknown candidate '" + c.get<std::string>() + "'", 0);
        }
        approvals.back().push_back(it->second);
      }
    }
    Instance inst{build_election(m, std::move(approvals), k, std::move(voter_labels),
                                 std::move(cand_labels), 0),
                  {}, {}, {}, {}};
    if (j.contains("ci_order")) {
      inst.ci = CiOrder{resolve_order(j.at("ci_order").get<std::vector<std::string>>(), cand_ids, m,
                                      0, "ci_order")};
    }
    if (j.contains("vi_order")) {
      inst.vi = ViOrder{resolve_order(j.at("vi_order").get<std::vector<std::string>>(), voter_ids,
                                      n, 0, "vi_order")};
    }
    if (j.contains("vci")) {
      const auto& vj = j.at("vci");
      VciCertificate cert;
      cert.candidates.resize(m);
      cert.voters.resize(n);
      const auto& cands = vj.at("candidates");
      const auto& vs = vj.at("voters");
      if (cands.size() != m || vs.size() != n) throw ParseError("vci must list every entity once", 0);
      for (std::size_t c = 0; c < m; ++c) {
        if (cands[c].value("excluded", false)) continue;
        cert.candidates[c] = Interval{parse_rational_at(cands[c].at("x").get<std::string>(), 0),
                                      parse_rational_at(cands[c].at("r").get<std::string>(), 0)};
      }
      for (std::size_t v = 0; v < n; ++v) {
        cert.voters[v] = Interval{parse_rational_at(vs[v].at("x").get<std::string>(), 0),
                                  parse_rational_at(vs[v].at("r").get<std::string>(), 0)};
      }
      inst.vci = std::move(cert);
    }
    return inst;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed election JSON: ") + e.what(), 0);
  }
}

Instance parse_election_auto(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_election_json(text);
  return parse_election(text);
}

Instance read_election_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election_auto(buf.str());
}

std::vector<CandidateId> parse_committee(const Election& election, std::string_view text) {
  std::vector<CandidateId> out;
  std::string cleaned(text);
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  }
  for (const auto& label : split_ws(cleaned)) {
    auto id = election.find_candidate(label);
    if (!id) throw ArgumentError("unknown candidate label '" + label + "'");
    out.push_back(*id);
  }
  return out;
}

std::string format_committee(const Election& election, std::span<const CandidateId> members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += election.candidate_label(members[i]);
  }
  return out + "}";
}

}  // namespace interlace
