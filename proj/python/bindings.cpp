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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "interlace/combine.hpp"
#include "interlace/domains.hpp"
#include "interlace/error.hpp"
#include "interlace/exact.hpp"
#include "interlace/generators.hpp"
#include "interlace/io.hpp"
#include "interlace/proportional.hpp"
#include "interlace/tradeoff.hpp"

namespace py = pybind11;
using namespace interlace;

namespace {

// Rationals cross the boundary as strings; the package wraps them in Fraction.
Rational rat(const std::string& s) { return parse_rational(s); }

Committee committee(const Election& e, std::vector<CandidateId> members) {
  return Committee(e, std::move(members));
}

std::vector<CandidateId> ids(const Committee& w) { return {w.members().begin(), w.members().end()}; }

py::dict solution_dict(const Solution& s) {
  py::dict d;
  d["committee"] = ids(s.committee);
  d["score"] = s.score;
  d["padded"] = s.padded;
  d["table_cells"] = s.table_cells;
  return d;
}

}  // namespace

PYBIND11_MODULE(_interlace, m) {
  m.doc() = "Committee selection with anti-polarization objectives";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidCommitteeError>(m, "InvalidCommitteeError", base.ptr());
  py::register_exception<DegenerateInstanceError>(m, "DegenerateInstanceError", base.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Election>(m, "Election")
      .def(py::init<std::size_t, std::vector<std::vector<CandidateId>>, std::size_t,
                    std::vector<std::string>, std::vector<std::string>>(),
           py::arg("m"), py::arg("approvals"), py::arg("k"),
           py::arg("voter_labels") = std::vector<std::string>{},
           py::arg("candidate_labels") = std::vector<std::string>{})
      .def_property_readonly("n", &Election::n)
      .def_property_readonly("m", &Election::m)
      .def_property_readonly("k", &Election::k)
      .def_property_readonly("voter_labels", &Election::voter_labels)
      .def_property_readonly("candidate_labels", &Election::candidate_labels)
      .def("approvals", [](const Election& e, VoterId v) {
        if (v >= e.n()) throw py::index_error("voter out of range");
        auto a = e.approvals(v);
        return std::vector<CandidateId>(a.begin(), a.end());
      })
      .def("supporters", [](const Election& e, CandidateId c) {
        if (c >= e.m()) throw py::index_error("candidate out of range");
        auto s = e.supporters(c);
        return std::vector<VoterId>(s.begin(), s.end());
      })
      .def("ballots", &Election::ballots)
      .def("with_k", &Election::with_k)
      .def("find_candidate", &Election::find_candidate)
      .def("__eq__", [](const Election& a, const Election& b) { return a == b; }, py::is_operator())
      .def("__repr__", [](const Election& e) {
        return "Election(n=" + std::to_string(e.n()) + ", m=" + std::to_string(e.m()) +
               ", k=" + std::to_string(e.k()) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("election", [](const Instance& i) { return i.election; })
      .def_property_readonly("ci_order", [](const Instance& i) -> std::optional<std::vector<CandidateId>> {
        if (!i.ci) return std::nullopt;
        return i.ci->order;
      })
      .def_property_readonly("vi_order", [](const Instance& i) -> std::optional<std::vector<VoterId>> {
        if (!i.vi) return std::nullopt;
        return i.vi->order;
      })
      .def_property_readonly("has_vci", [](const Instance& i) { return i.vci.has_value(); })
      .def_readonly("notes", &Instance::notes);

  const auto scorer = [](std::uint64_t (*f)(const Election&, const Committee&)) {
    return [f](const Election& e, std::vector<CandidateId> w) { return f(e, committee(e, std::move(w))); };
  };
  m.def("av_score", scorer(&av_score), py::arg("election"), py::arg("committee"));
  m.def("cc_score", scorer(&cc_score), py::arg("election"), py::arg("committee"));
  m.def("pairs_score", scorer(&pairs_score), py::arg("election"), py::arg("committee"));
  m.def("cons_score", scorer(&cons_score), py::arg("election"), py::arg("committee"));
  m.def("connected_components", [](const Election& e, std::vector<CandidateId> w) {
    return connected_components(e, committee(e, std::move(w)));
  });

  m.def("brute_force_opt",
        [](const Election& e, const std::string& objective, std::size_t size, std::uint64_t limit) {
          return solution_dict(brute_force_opt(e, parse_objective(objective), size, limit));
        },
        py::arg("election"), py::arg("objective"), py::arg("size"),
        py::arg("limit") = kDefaultEvalLimit);
  m.def("max_cons_ci", [](const Election& e, std::vector<CandidateId> order, std::size_t k) {
    return solution_dict(max_cons_ci(e, CiOrder{std::move(order)}, k));
  });
  m.def("max_cc_ci", [](const Election& e, std::vector<CandidateId> order, std::size_t k) {
    return solution_dict(max_cc_ci(e, CiOrder{std::move(order)}, k));
  });
  m.def("max_pairs_ci", [](const Election& e, std::vector<CandidateId> order, std::size_t k) {
    return solution_dict(max_pairs_ci(e, CiOrder{std::move(order)}, k));
  });
  m.def("greedy_max", [](const Election& e, const std::string& objective, std::size_t size) {
    return ids(greedy_max(e, parse_objective(objective), size));
  });

  m.def("verify_ci_order", [](const Election& e, std::vector<CandidateId> order) {
    return verify_ci_order(e, CiOrder{std::move(order)});
  });
  m.def("verify_vi_order", [](const Election& e, std::vector<VoterId> order) {
    return verify_vi_order(e, ViOrder{std::move(order)});
  });

  m.def("alpha_mes", [](const Election& e, const std::string& alpha) {
    MesResult r = alpha_mes(e, rat(alpha));
    py::list rounds;
    for (const auto& rd : r.rounds) rounds.append(py::make_tuple(rd.candidate, to_string(rd.price)));
    py::dict d;
    d["committee"] = ids(r.committee);
    d["rounds"] = rounds;
    d["initial_budget"] = to_string(r.initial_budget);
    std::vector<std::string> budgets;
    for (const auto& b : r.budgets) budgets.push_back(to_string(b));
    d["budgets"] = budgets;
    d["target"] = r.target;
    return d;
  });
  m.def("check_alpha_ejr",
        [](const Election& e, std::vector<CandidateId> w, const std::string& alpha,
           std::uint64_t limit, std::size_t max_level) {
          EjrVerdict v = check_alpha_ejr(e, committee(e, std::move(w)), rat(alpha), limit, max_level);
          py::dict d;
          d["satisfied"] = v.satisfied;
          d["subsets_examined"] = v.subsets_examined;
          if (v.witness) {
            py::dict wt;
            wt["level"] = v.witness->level;
            wt["candidates"] = v.witness->candidates;
            wt["group"] = v.witness->group;
            d["witness"] = wt;
          } else {
            d["witness"] = py::none();
          }
          return d;
        },
        py::arg("election"), py::arg("committee"), py::arg("alpha") = "1",
        py::arg("limit") = kDefaultEvalLimit, py::arg("max_level") = 0);

  m.def("split_combine",
        [](const Election& e, const std::string& alpha, const std::string& objective_a,
           const std::string& objective_b) {
          SplitResult r = split_combine(e, rat(alpha), brute_solver(parse_objective(objective_a)),
                                        brute_solver(parse_objective(objective_b)));
          return ids(r.committee);
        },
        "Split combiner with brute-force sub-solvers");
  m.def("halve_cons_vi",
        [](const Election& e, std::vector<VoterId> order, std::vector<CandidateId> w,
           bool allow_odd_k) {
          return ids(halve_cons_vi(e, ViOrder{std::move(order)}, committee(e, std::move(w)),
                                   allow_odd_k)
                         .committee);
        },
        py::arg("election"), py::arg("vi_order"), py::arg("committee"),
        py::arg("allow_odd_k") = false);
  m.def("stepwise_bound", [](const std::string& alpha) { return to_string(stepwise_bound(rat(alpha))); });

  m.def("gen_example", &gen_example);
  m.def("gen_block_central", &gen_block_central);
  m.def("gen_block_arm", &gen_block_arm);
  m.def("gen_vi_block_chain",
        [](std::size_t x, const std::string& fraction) { return gen_vi_block_chain(x, rat(fraction)); },
        py::arg("x"), py::arg("fraction") = "1");
  m.def("gen_arms_chains", &gen_arms_chains);
  m.def("gen_random",
        [](std::size_t n, std::size_t mm, std::size_t k, const std::string& domain,
           std::uint64_t seed, double density) {
          RandomDomain d = RandomDomain::kNone;
          if (domain == "vi") {
            d = RandomDomain::kVI;
          } else if (domain == "ci") {
            d = RandomDomain::kCI;
          } else if (domain == "vci") {
            d = RandomDomain::kVCI;
          } else if (domain != "none") {
            throw ArgumentError("unknown domain '" + domain + "'");
          }
          return gen_random(n, mm, k, d, seed, density);
        },
        py::arg("n"), py::arg("m"), py::arg("k"), py::arg("domain") = "none", py::arg("seed") = 1,
        py::arg("density") = 0.5);

  m.def("parse_election", [](const std::string& text) { return parse_election_auto(text); });
  m.def("render_election", &render_election);
  m.def("render_election_json", &render_election_json, py::arg("instance"), py::arg("indent") = 2);
}
