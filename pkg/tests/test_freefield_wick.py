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

from itertools import product

import pytest
import sympy

from walg.freefield import (
    K, GhostKind, make_shift_current, make_w_current, polynomial_equations, recognize, wick_ope,
    wick_pieces
)
from walg.ope import OpeExpansion, OpeTerm
from walg.structure import Family, GeneratorLabel


def test_shift_current_pieces():
    (piece,) = wick_pieces(make_shift_current(2), make_shift_current(2), 1)
    assert piece.coeff == 2
    assert piece.pole == 1
    assert piece.left.kind is GhostKind.C
    assert piece.right.kind is GhostKind.B
    assert sympy.expand(piece.left.index - K) == 0
    assert sympy.expand(piece.right.index - K) == 2
    assert piece.weight == 3


def test_shift_currents_close():
    for q1, q2 in [(2, 2), (2, 3), (4, 3)]:
        expansion = wick_ope(make_shift_current(q1), make_shift_current(q2), 1)
        assert expansion == OpeExpansion([
            OpeTerm(2, 1, 1, 0, GeneratorLabel(Family.W, q1 + q2 - 1))
        ])
        assert expansion.residuals == ()
        assert expansion.source is Family.W


@pytest.mark.parametrize("q1, q2", list(product(range(2, 6), repeat=2)))
def test_w_currents_do_not_close(q1, q2):
    expansion = wick_ope(make_w_current(q1), make_w_current(q2), 1)

    (triple,) = [r for r in expansion.residuals if r.pole == 3]
    (piece,) = triple.pieces
    assert (piece.left.kind, piece.left.dbar) == (GhostKind.C, 0)
    assert (piece.right.kind, piece.right.dbar) == (GhostKind.B, 0)
    assert sympy.expand(piece.left.index - K) == 0
    assert sympy.expand(piece.right.index - K) == q1 + q2 - 2
    assert sympy.expand(piece.coeff + 2 * (K + 1) * (q1 + q2 + 4)) == 0

    w = GeneratorLabel(Family.W, q1 + q2 - 2)
    assert expansion.coefficient(1, 2, 0, w) != -(q1 + q2 - 2)
    assert all(term.hol_pole == 1 for term in expansion)


def test_polynomial_equations():
    u = sympy.Symbol("u")
    assert polynomial_equations(sympy.Integer(0)) == []
    assert polynomial_equations(u * K ** 2 + 3 * u - 3 * u) == [u]
    assert polynomial_equations(2 * K + u) == [2, u]


def test_recognize_empty():
    assert recognize([], make_shift_current(2).at_weight) == ([], [])
