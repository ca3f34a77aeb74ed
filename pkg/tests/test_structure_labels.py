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
from walg.exceptions import InvalidLabelProblem, WedgeViolationProblem
from walg.structure import Family, GeneratorLabel, GeneratorMode, make_mode
from walg.structure.labels import wedge_violation
from tests.conftest import not_raises


def test_family():
    assert Family.GPLUS.is_fermionic
    assert Family.GHAT.is_fermionic
    assert not Family.WTILDE.is_fermionic
    assert Family.GMINUS.min_weight == HalfInt.of("3/2")
    assert Family.W.min_weight == HalfInt.of(1)
    assert Family.GPLUS.mode_name == "r"
    assert Family.VHAT.mode_name == "m"
    assert Family.H.antiholomorphic_weight(HalfInt.of(2)) == -1
    assert Family.WTILDE.antiholomorphic_weight(HalfInt.of(2)) == 2


def test_generator_label():
    label = GeneratorLabel(Family.WTILDE, 2, 2)
    assert label.q == HalfInt.of(2)
    assert label.s == HalfInt.of(2)
    assert str(label) == "Wt[q=2,s=2]"
    assert str(GeneratorLabel(Family.GMINUS, "3/2")) == "G-[q=3/2]"
    assert GeneratorLabel("wtilde", "2", "2") == label

    with pytest.raises(InvalidLabelProblem):
        GeneratorLabel(Family.WTILDE, "1/2")

    with pytest.raises(InvalidLabelProblem):
        GeneratorLabel(Family.GPLUS, 1)

    with pytest.raises(InvalidLabelProblem):
        GeneratorLabel(Family.WTILDE, 2, 0)

    with pytest.raises(InvalidLabelProblem):
        GeneratorLabel(Family.H, 2)

    with not_raises(InvalidLabelProblem):
        GeneratorLabel(Family.WTILDE, sympy.Symbol("q"))


def test_soft_label():
    label = GeneratorLabel.soft(0, 2)
    assert label.q == HalfInt.of(2)
    assert label.k == HalfInt.of(0)
    assert str(label) == "H[k=0,s=2]"
    assert label.hbar == -1

    label = GeneratorLabel.soft(1, 2)
    assert label.q == HalfInt.of("3/2")
    assert label.k == HalfInt.of(1)

    with pytest.raises(InvalidLabelProblem):
        GeneratorLabel.soft("1/2", 2)


def test_wedge():
    label = GeneratorLabel(Family.WTILDE, 3, 2)
    assert wedge_violation(label, HalfInt.of(2)) is None
    assert wedge_violation(label, HalfInt.of(3)) == "wedge"
    assert wedge_violation(label, HalfInt.of("1/2")) == "wedge"

    g = GeneratorLabel(Family.GPLUS, "5/2")
    assert wedge_violation(g, HalfInt.of("3/2")) is None
    assert wedge_violation(g, HalfInt.of(1)) is not None
    assert wedge_violation(GeneratorLabel(Family.VHAT, 2), HalfInt.of(7)) is None


def test_generator_mode():
    mode = make_mode(Family.WTILDE, 2, -1, 2)
    assert mode.m == HalfInt.of(-1)
    assert mode.family is Family.WTILDE
    assert str(mode) == "Wt[q=2,s=2,m=-1]"
    assert str(make_mode(Family.GPLUS, "3/2", "-1/2")) == "G+[q=3/2,r=-1/2]"
    assert mode == GeneratorMode(GeneratorLabel(Family.WTILDE, 2, 2), "-1")
    assert make_mode(Family.WTILDE, 1, 0, 1).sort_key < mode.sort_key

    with pytest.raises(WedgeViolationProblem):
        make_mode(Family.WTILDE, 2, 2, 2)

    with pytest.raises(WedgeViolationProblem):
        make_mode(Family.GMINUS, "5/2", 0)
