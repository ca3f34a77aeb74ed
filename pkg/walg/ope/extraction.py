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
"""
Mode extraction by formal contour integration.

[A_m, B_n] = oint dz oint dzbar zbar^{m+h1-1} oint dwbar wbar^{n+h2-1} A(z) B(w)

The holomorphic contour keeps simple poles only. The zbar contour is the
formal rule `zbar_contour`; the wbar contour then selects the target mode.
"""
from fractions import Fraction
from typing import Any

from walg.arith import HalfInt, as_scalar, binomial, is_zero, pochhammer_falling, sign
from walg.ope.expansion import OpeExpansion
from walg.structure import ModeCombination


def zbar_contour(a: Any, b: int) -> Fraction:
    """
    Coefficient c of oint dzbar/(2 pi i) zbar^a (zbar - wbar)^-b = c wbar^{a-b+1}.

    For a pole (b >= 1) this is minus the residue at zbar = wbar,
    -binom(a, b-1). For a regular factor (b <= 0) it is the residue at
    zbar = 0 of the expanded polynomial, binom(-b, -1-a) (-1)^{-b+1+a}.
    """
    a = as_scalar(a)
    if b >= 1:
        return -binomial(a, b - 1)
    if a.denominator != 1:
        raise ValueError(f"Regular factors need an integer power of zbar, got {a}")
    k, i = -b, -1 - int(a)
    if i < 0 or i > k:
        return Fraction(0)
    return binomial(k, i) * sign(k + 1 + int(a))


def residue_at_wbar(a: Any, b: int) -> Fraction:
    """Res_{zbar = wbar} zbar^a (zbar - wbar)^-b, coefficient of wbar^{a-b+1}."""
    if b < 1:
        return Fraction(0)
    return binomial(a, b - 1)


def mode_extract(e: OpeExpansion, m: Any, n: Any, q1: Any, q2: Any) -> ModeCombination:
    """
    Bracket of modes m, n read off an OPE of currents with weights q1, q2.

    Parameters
    ----------
    e
        Canonical expansion. Its `source` family fixes the antiholomorphic
        weights: h = 1 - q for soft currents, h = q otherwise.
    m, n
        Modes of the left and right currents.
    q1, q2
        Weights of the left and right currents.

    Returns
    -------
    ModeCombination
        Targets outside their wedge are reported in `dropped`.
    """
    m, n = HalfInt.of(m).value, HalfInt.of(n).value
    h1 = as_scalar(e.source.antiholomorphic_weight(HalfInt.of(q1)))
    h2 = as_scalar(e.source.antiholomorphic_weight(HalfInt.of(q2)))
    a = m + h1 - 1

    entries = []
    for term in e:
        if term.hol_pole != 1:
            continue
        if term.target.is_symbolic:
            raise ValueError(f"Cannot extract modes of symbolic target {term.target}")
        zbar = zbar_contour(a, term.antihol_pole)
        if zbar == 0:
            continue
        h3 = as_scalar(term.target.hbar)
        # wbar^{a-b+1} wbar^{n+h2-1} wbar^{-j-h3-d} must be wbar^-1
        j = a - term.antihol_pole + 1 + n + h2 - h3 - term.dbar_order
        coeff = term.coeff * zbar * pochhammer_falling(-j - h3, term.dbar_order)
        if is_zero(coeff):
            continue
        target = term.target
        entries.append((coeff, target.family, target.q, target.s, j))
    return ModeCombination.collect(entries)
