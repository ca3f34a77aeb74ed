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

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from walg.arith import HalfInt
from walg.cli.sweeps import wedge_modes
from walg.exceptions import UnsupportedBracketProblem
from walg.ope import known_b_constants
from walg.structure import Family, GeneratorLabel, ModeCombination, cyclic_jacobi, make_mode, n_coeff
from walg.structure.coefficients import M, N
from walg.supertwist import (
    GhatTable, brst, brst_variation, gg_anticommutator, rescale_exponent, rescale_limit, vhat_bracket,
    vhat_expression
)
from walg.supertwist import topological


def test_ghat_p1():
    ghat = GhatTable()
    assert ghat.value(2, 2, 1, -1, 1) == 2
    assert ghat.value(3, 2, 1, 0, 1) == 1
    for q1 in (2, 3, 4):
        for q2 in (2, 3):
            for m in wedge_modes(q1):
                for n in wedge_modes(q2):
                    assert n_coeff(q1, q2, m, n, 1) == -2 * ghat.value(q1, q2, m, n, 1)


def test_ghat_unknown_entries():
    ghat = GhatTable({(2, 3, 0, 1, 2): "1/3"})
    assert ghat.is_known(2, 3, 0, 1, 2)
    assert ghat.value(2, 3, 0, 1, 2) == Fraction(1, 3)
    assert not ghat.is_known(2, 3, 0, 0, 2)
    assert str(ghat.value(2, 3, 0, 0, 2)) == "ghat(2,3,0,0,2)"


def test_vhat_bracket():
    for m, n in ((1, -1), (0, 1), (-1, -1)):
        expected = ModeCombination([(m - n, make_mode(Family.VHAT, 2, m + n))])
        assert vhat_bracket(2, m, 2, n) == expected


def test_vhat_expression():
    B, Btilde = known_b_constants("3/2", "5/2")
    vhat = vhat_expression("5/2", B, Btilde)
    plain, double = GeneratorLabel(Family.WTILDE, 3), GeneratorLabel(Family.WTILDE2, 2)

    assert len(vhat.expansion) == 2
    assert vhat.expansion.coefficient(0, 0, 0, plain) == 2
    assert vhat.expansion.coefficient(0, 0, 1, double) == -1
    assert vhat.origin_of(0, plain) == ((0, 0),)
    assert vhat.origin_of(1, double) == ((1, 1),)
    assert all(p == x for p, x in vhat.all_origins)


def test_brst_variation_vanishes():
    assert gg_anticommutator(brst(), brst()).is_empty
    for q, m in (("3/2", -1), ("3/2", 0), ("5/2", 0), ("7/2", 1)):
        assert brst_variation(q, m).is_empty


def test_brst_variation_brackets_the_anticommutator(monkeypatch):
    w = make_mode(Family.W, 2, 0)
    ghat = make_mode(Family.GHAT, 2, "1/2")
    monkeypatch.setattr(topological, "gg_anticommutator", lambda a, b: ModeCombination([(2, w)]))

    calls = []

    def bracket(a, b):
        calls.append((a, b))
        return ModeCombination([(3, ghat)])

    assert brst_variation("3/2", 0, bracket) == ModeCombination([(3, ghat)])
    assert len(calls) == 1
    left, right = calls[0]
    assert left == w
    assert right.family is Family.GMINUS and right.q == HalfInt.of("3/2") and right.m == HalfInt.of("1/2")

    with pytest.raises(UnsupportedBracketProblem):
        brst_variation("3/2", 0)


def test_rescale_exponent():
    assert [rescale_exponent(p) for p in range(3)] == [-1, 0, 1]
    with pytest.raises(ValueError):
        rescale_limit(p_keep=0)


def test_rescaled_brackets():
    algebra = rescale_limit()
    v31 = make_mode(Family.W, 3, 1)
    assert algebra(v31, make_mode(Family.W, 2, 0)) == ModeCombination([(1, v31)])

    g = make_mode(Family.GHAT, 2, "1/2")
    expected = ModeCombination([(1, make_mode(Family.GHAT, 3, "3/2"))])
    assert algebra(v31, g) == expected
    assert algebra(g, v31) == -expected
    assert algebra(g, g).is_empty


def test_rescaled_higher_grade_vanishes():
    algebra = rescale_limit(p_keep=2)
    assert algebra(make_mode(Family.W, 3, 1), make_mode(Family.W, 2, 0)).is_empty
    assert all(row[-1] == 0 for row in algebra.table(3))


def test_rescaled_jacobi():
    algebra = rescale_limit()
    modes = [make_mode(Family.W, q, m) for q in (2, 3, 4) for m in wedge_modes(q)]
    for a, b, c in combinations_with_replacement(modes, 3):
        assert cyclic_jacobi(a, b, c, algebra).is_empty, (a, b, c)


def test_rescaled_table():
    rows = rescale_limit().table(3)
    assert len(rows) == 8
    assert rows[0] == ("v,v", 2, 2, 2, M - N)
    assert ("v,Ghat", 3, 2, 3, M - 2 * N) in rows
