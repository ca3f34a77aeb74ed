#  * Copyright (c) 2022-2023. Authors: see NOTICE file.
#  *
#  * Licensed under the Apache License, Version 2.0 (the "License");
#  * you may not use this file except in compliance with the License.
#  * You may obtain a copy of the License at
#  *
#  *      http://www.apache.org/licenses/LICENSE-2.0
#  *
#  * Unless required by applicable law or agreed to in writing, software
#  * distributed under the License is distributed on an "AS IS" BASIS,
#  * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  * See the License for the specific language governing permissions and
#  * limitations under the License.

import sympy

from walg.freefield import (
    alpha_residuals, make_shift_current, make_w_current, match_B_constants, solve_alpha, solve_alpha_symbolic,
    w_alpha_table
)
from walg.freefield.solver import MatchingEquation, alpha_symbol, describe_b_table
from walg.ope import build_g_ope, build_wtilde_ope, canonicalize, gg_realization_ope
from walg.ope.expansion import PoleRule
from walg.structure import CouplingRegistry


def _target(q1, s1, q2, s2, kappa, truncate_p=None):
    reg = CouplingRegistry.uniform(kappa)
    return canonicalize(build_wtilde_ope(q1, s1, q2, s2, reg, truncate_p))


def test_solve_alpha_shift_currents():
    target = _target(2, 1, 2, 1, 4, truncate_p=0)
    left = right = make_shift_current(2)
    solution = solve_alpha(1, target, left, right)
    assert solution.consistent
    assert solution.table[(3, 0, 0)] == 1
    assert solution.table[(3, 0, 1)] == 0
    assert solution.table[(3, 1, 0)] == 0
    assert solution.free == ()
    assert solution.residuals() == []


def test_solve_alpha_w_currents_inconsistent():
    target = _target(2, 2, 2, 2, 1)
    solution = solve_alpha(1, target, make_w_current(2), make_w_current(2))
    assert not solution.consistent
    assert solution.failing is not None
    assert solution.residuals() == [solution.failing.expr]
    assert solution.table == {}


SAMPLES = ((2, 2), (2, 3), (3, 3))


def _rule(kappa, truncate_p=None):
    return lambda q1, q2: _target(q1, 2, q2, 2, kappa, truncate_p)


def test_solve_alpha_symbolic_has_no_bare_bilinear():
    w2 = make_w_current(2)
    solution = solve_alpha_symbolic(0, _rule(1, truncate_p=0), w2, w2, SAMPLES, poles=(1,))
    assert solution.consistent
    assert solution.table == {(0, 0): 0}
    assert solution.free == ()
    assert solution.residuals() == []
    assert {e.slot.split(" pole")[0] for e in solution.equations} == {
        f"q1={q1} q2={q2}" for q1, q2 in SAMPLES
    }


def test_printed_recipe_leaves_residuals():
    w2 = make_w_current(2)
    residuals = alpha_residuals(1, _rule(1, truncate_p=0), w2, w2, SAMPLES, w_alpha_table())
    assert residuals
    for q1, q2 in SAMPLES:
        prefix = f"q1={q1} q2={q2} pole=3 dbar=(0,0) q={q1 + q2 - 1} "
        assert [e.expr for e in residuals if e.slot.startswith(prefix)] == [2 * (q1 + q2 + 4)] * 2

    solution = solve_alpha_symbolic(1, _rule(1, truncate_p=0), w2, w2, SAMPLES)
    assert not solution.consistent
    assert solution.failing is not None
    assert solution.table == {}


def test_matching_equation():
    u = alpha_symbol(3, 0, 0, 0)
    equation = MatchingEquation("slot", 2 * u, sympy.Integer(2))
    assert equation.unknowns == ("u_3_0_0_0",)
    assert equation.expr == 2 * u - 2
    assert equation.to_dict() == {"slot": "slot", "lhs": "2*u_3_0_0_0", "rhs": "2",
                                  "unknowns": ["u_3_0_0_0"]}


def test_match_b_numeric():
    result = match_B_constants(gg_realization_ope("5/2", "3/2"), build_g_ope("5/2", "3/2"))
    assert result.consistent
    assert result.B == {(0, 0): 4, (1, 0): 0, (1, 1): 0}
    assert result.Btilde == {(0, 0): 0, (1, 0): -14, (1, 1): -2}
    assert result.free == ()
    assert describe_b_table(result.Btilde) == {"0,0": "0", "1,0": "-14", "1,1": "-2"}


def test_match_b_symbolic():
    q1, q2 = sympy.symbols("q1 q2")
    result = match_B_constants(gg_realization_ope(q1, q2), build_g_ope(q1, q2))
    assert result.consistent
    assert result.B == {(0, 0): 4, (1, 0): 0, (1, 1): 0}
    assert result.Btilde[(0, 0)] == 0
    assert result.Btilde[(1, 1)] == -2
    expected = -2 * (2 * q1 + q2 - 3) / (q2 - 1)
    assert sympy.simplify(result.Btilde[(1, 0)] - expected) == 0


def test_match_b_calculus_rule():
    template = build_g_ope("5/2", "3/2", pole_rule=PoleRule.CALCULUS)
    result = match_B_constants(gg_realization_ope("5/2", "3/2"), template)
    assert result.consistent
    assert result.Btilde[(1, 0)] == -2
    assert result.Btilde[(1, 1)] == -2
