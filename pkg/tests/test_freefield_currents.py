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

import pytest
import sympy

from walg.arith import HalfInt
from walg.exceptions import InvalidLabelProblem, NonSquareKappaProblem
from walg.freefield import K, Q, GhostKind, make_bilinear_current, make_shift_current, make_w_current
from walg.freefield import w_alpha_table
from walg.structure import Family, GeneratorLabel


def test_shift_current():
    current = make_shift_current(3)
    assert current.q == HalfInt.of(3)
    assert current.shift == 2
    assert current.label == GeneratorLabel(Family.W, 3)
    (summand,) = current.summands()
    assert summand.coeff == 1
    assert summand.left.kind is GhostKind.C
    assert summand.right.kind is GhostKind.B
    assert sympy.expand(summand.right.index - K) == 2


def test_w_current():
    current = make_w_current(2)
    assert current.coefficient(1, 0) == -4
    assert sympy.expand(current.coefficient(0, 1) + K + 1) == 0
    assert current.coefficient(1, 1) == 0
    assert current.max_degree == 1
    assert current.at_weight(4).coefficient(1, 0) == -6


def test_w_alpha_table():
    table = w_alpha_table(4)
    assert sympy.expand(table[(1, 0)] + 2 * (Q + 2)) == 0

    with pytest.raises(NonSquareKappaProblem):
        w_alpha_table(2)


def test_invalid_currents():
    with pytest.raises(InvalidLabelProblem):
        make_w_current(1)

    with pytest.raises(InvalidLabelProblem):
        make_w_current("5/2")

    with pytest.raises(InvalidLabelProblem):
        make_bilinear_current("3/2", {(0, 0): 1})
