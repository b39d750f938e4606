# Copyright 2026 The Interlace Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Committee selection with anti-polarization objectives.

Rational inputs accept int, str or fractions.Fraction; rational outputs are
returned as Fraction.
"""

from fractions import Fraction

from . import _interlace as _core
from ._interlace import (  # noqa: F401
    ArgumentError,
    DegenerateInstanceError,
    Election,
    Error,
    InconsistencyError,
    Instance,
    InvalidCommitteeError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    av_score,
    brute_force_opt,
    cc_score,
    connected_components,
    cons_score,
    gen_arms_chains,
    gen_block_arm,
    gen_block_central,
    gen_example,
    gen_random,
    greedy_max,
    max_cc_ci,
    max_cons_ci,
    max_pairs_ci,
    pairs_score,
    parse_election,
    render_election,
    render_election_json,
    verify_ci_order,
    verify_vi_order,
)


def _rat(value):
    return str(Fraction(value))


def alpha_mes(election, alpha):
    out = _core.alpha_mes(election, _rat(alpha))
    out["rounds"] = [(c, Fraction(p)) for c, p in out["rounds"]]
    out["initial_budget"] = Fraction(out["initial_budget"])
    out["budgets"] = [Fraction(b) for b in out["budgets"]]
    return out


def check_alpha_ejr(election, committee, alpha=1, limit=10_000_000, max_level=0):
    return _core.check_alpha_ejr(election, list(committee), _rat(alpha), limit, max_level)


def split_combine(election, alpha, objective_a, objective_b):
    return _core.split_combine(election, _rat(alpha), objective_a, objective_b)


def halve_cons_vi(election, vi_order, committee, allow_odd_k=False):
    return _core.halve_cons_vi(election, list(vi_order), list(committee), allow_odd_k)


def stepwise_bound(alpha):
    return Fraction(_core.stepwise_bound(_rat(alpha)))


def gen_vi_block_chain(x, fraction=1):
    return _core.gen_vi_block_chain(x, _rat(fraction))
