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

import sympy

from walg.ope import OpeExpansion, OpeTerm, canonicalize
from walg.ope.expansion import PoleRule, RawOpeTemplate, RawTerm
from walg.structure import Family, GeneratorLabel

W2 = GeneratorLabel(Family.WTILDE, 2, 2)
W1 = GeneratorLabel(Family.WTILDE, 1, 1)


def test_expansion_merges_terms():
    e = OpeExpansion([
        OpeTerm(1, 1, 1, 0, W2), OpeTerm(Fraction(1, 2), 1, 1, 0, W2), OpeTerm(0, 1, 2, 0, W2)
    ])
    assert len(e) == 1
    assert e.coefficient(1, 1, 0, W2) == Fraction(3, 2)
    assert e.coefficient(1, 2, 0, W2) == 0
    assert e.targets() == (W2,)


def test_expansion_equality_and_arithmetic():
    a = OpeExpansion([OpeTerm(1, 1, 1, 0, W2), OpeTerm(2, 1, 3, 0, W1)])
    b = OpeExpansion([OpeTerm(2, 1, 3, 0, W1), OpeTerm(1, 1, 1, 0, W2)])
    assert a == b
    assert (a - b).is_empty
    assert a + a == a.scale(2)
    assert str(OpeExpansion()) == "0"


def test_expansion_substitute():
    x = sympy.Symbol("x")
    e = OpeExpansion([OpeTerm(2 * x, 1, 1, 0, W2)])
    assert e.unknowns == {x}
    assert e.substitute({x: 3}) == OpeExpansion([OpeTerm(6, 1, 1, 0, W2)])
    assert e.substitute({x: 0}).is_empty


def test_canonicalize_pole_rules():
    raw = (RawTerm(1, 1, 0, 1, W2),)
    calculus = canonicalize(RawOpeTemplate(raw, PoleRule.CALCULUS))
    printed = canonicalize(RawOpeTemplate(raw, PoleRule.PRINTED))
    assert calculus == OpeExpansion([OpeTerm(1, 1, 2, 0, W2), OpeTerm(1, 1, 1, 1, W2)])
    assert printed == OpeExpansion([OpeTerm(-1, 1, 2, 0, W2), OpeTerm(1, 1, 1, 1, W2)])


def test_canonicalize_zbar_derivatives():
    raw = (RawTerm(1, 1, 2, 0, W2),)
    assert canonicalize(RawOpeTemplate(raw)) == OpeExpansion([OpeTerm(2, 1, 3, 0, W2)])


def test_canonicalize_is_idempotent():
    e = OpeExpansion([OpeTerm(1, 1, 1, 0, W2)], Family.H)
    c = canonicalize(e)
    assert c == e
    assert c.source is Family.H
