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

from walg.structure import Family, ModeCombination, make_mode, target_mode


def test_mode_combination_merges_and_sorts():
    a = make_mode(Family.WTILDE, 2, 0, 2)
    b = make_mode(Family.WTILDE, 1, 0, 1)
    c = ModeCombination([(1, a), (Fraction(1, 2), b), (1, a)])
    assert c.terms == ((Fraction(1, 2), b), (Fraction(2), a))
    assert c.coefficient(a) == 2
    assert c.coefficient(make_mode(Family.WTILDE, 3, 0, 2)) == 0
    assert len(c) == 2


def test_mode_combination_algebra():
    a = make_mode(Family.WTILDE, 2, 1, 2)
    c = ModeCombination([(3, a)])
    assert (c - c).is_empty
    assert (c + c) == c.scale(2)
    assert -c == ModeCombination([(-3, a)])
    assert ModeCombination([(0, a)]).is_empty
    assert str(ModeCombination()) == "0"


def test_collect_drops_inadmissible_targets():
    c = ModeCombination.collect([
        (2, Family.WTILDE, 2, 2, 0),
        (5, Family.WTILDE, 2, 2, 3),
        (7, Family.WTILDE, 0, 1, 0),
        (0, Family.WTILDE, 0, 1, 0),
    ])
    assert c.terms == ((Fraction(2), make_mode(Family.WTILDE, 2, 0, 2)),)
    assert [d.coeff for d in c.dropped] == [5, 7]
    assert c.dropped[0].reason == "wedge"


def test_target_mode():
    mode, reason = target_mode(Family.WTILDE, 2, 1, 2)
    assert reason is None
    assert mode == make_mode(Family.WTILDE, 2, 1, 2)

    mode, reason = target_mode(Family.WTILDE, 2, 5, 2)
    assert mode is None
    assert reason == "wedge"
