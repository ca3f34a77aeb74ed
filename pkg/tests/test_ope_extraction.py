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
from itertools import product

import pytest
import sympy

from walg.arith import HalfInt
from walg.cli.sweeps import wedge_modes
from walg.ope import (
    OpeExpansion, OpeTerm, build_soft_ope, build_wtilde_ope, canonicalize, mode_extract,
    residue_at_wbar, zbar_contour
)
from walg.structure import (
    Family, GeneratorLabel, GeneratorMode, ModeCombination, make_mode, soft_bracket, wtilde_bracket
)


def test_zbar_contour_is_minus_residue():
    z, w = sympy.symbols("z w")
    for a in range(9):
        for b in range(1, 7):
            residue = sympy.diff(z ** a, z, b - 1).subs(z, w) / sympy.factorial(b - 1)
            value = residue_at_wbar(a, b)
            expected = sympy.Rational(value.numerator, value.denominator) * w ** (a - b + 1)
            assert sympy.expand(residue - expected) == 0
            assert zbar_contour(a, b) == -residue_at_wbar(a, b)


def test_zbar_contour_regular_factors():
    assert zbar_contour(-1, 0) == 1
    assert zbar_contour(0, 0) == 0
    assert zbar_contour(-2, -1) == 1
    assert zbar_contour(-1, -1) == -1
    assert zbar_contour(-3, -2) == 1

    with pytest.raises(ValueError):
        zbar_contour(Fraction(1, 2), 0)


def test_mode_extract_example(unit_registry):
    expansion = canonicalize(build_wtilde_ope(2, 2, 2, 2, unit_registry))
    result = mode_extract(expansion, 1, -1, 2, 2)
    assert result == ModeCombination([
        (2, make_mode(Family.WTILDE, 2, 0, 2)), (-2, make_mode(Family.WTILDE, 1, 0, 1)),
    ])


def test_mode_extract_matches_bracket(unit_registry):
    weights = [HalfInt(d) for d in range(2, 9)]
    for q1 in weights:
        for q2 in weights:
            expansion = canonicalize(build_wtilde_ope(q1, 2, q2, 2, unit_registry))
            for m in wedge_modes(q1):
                for n in wedge_modes(q2):
                    a = make_mode(Family.WTILDE, q1, m, 2)
                    b = make_mode(Family.WTILDE, q2, n, 2)
                    assert mode_extract(expansion, m, n, q1, q2) == \
                        wtilde_bracket(a, b, unit_registry), (a, b)


@pytest.mark.parametrize("k1, k2", list(product([0, -1, -2], repeat=2)))
def test_mode_extract_soft(unit_registry, k1, k2):
    left, right = GeneratorLabel.soft(k1, 2), GeneratorLabel.soft(k2, 2)
    expansion = build_soft_ope(k1, 2, k2, 2, unit_registry, alpha_max=8)
    for m in wedge_modes(left.q):
        for n in wedge_modes(right.q):
            a, b = GeneratorMode(left, m), GeneratorMode(right, n)
            assert mode_extract(expansion, m, n, left.q, right.q) == \
                soft_bracket(a, b, unit_registry), (a, b)


def test_mode_extract_rejects_symbolic_targets():
    q = sympy.Symbol("q")
    expansion = OpeExpansion([OpeTerm(1, 1, 1, 0, GeneratorLabel(Family.WTILDE, q))])
    with pytest.raises(ValueError):
        mode_extract(expansion, 0, 0, 2, 2)
