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
from typing import Any, Callable, Optional, Tuple

from walg.arith import HalfInt, binomial, factorial, sign
from walg.exceptions import UnsupportedBracketProblem, WedgeViolationProblem
from walg.structure.coefficients import n_coeff, p_range
from walg.structure.combination import ModeCombination
from walg.structure.couplings import CouplingKey, CouplingRegistry
from walg.structure.labels import Family, GeneratorLabel, GeneratorMode, wedge_violation

Bracket = Callable[[GeneratorMode, GeneratorMode], ModeCombination]


def _grades(s1: HalfInt, s2: HalfInt, truncate_p: Optional[int]):
    for p in p_range(s1, s2):
        if truncate_p is None or p <= truncate_p:
            yield p


def _require(a: GeneratorMode, b: GeneratorMode, family: Family):
    for mode in (a, b):
        if mode.family is not family or mode.s is None:
            raise UnsupportedBracketProblem(a, b)


def wtilde_bracket(
    a: GeneratorMode, b: GeneratorMode, reg: CouplingRegistry,
    truncate_p: Optional[int] = None
) -> ModeCombination:
    """
    Bracket of two spinning W-tilde modes.

    [W^{q1,s1}_m, W^{q2,s2}_n] = -sum_p kappa/2 N(q1,q2,m,n,p) W^{q1+q2-p-1, s1+s2-p-1}_{m+n}

    Grades whose coefficient vanishes do not consult the registry.
    Inadmissible targets are reported in `dropped`.
    """
    _require(a, b, Family.WTILDE)
    entries = []
    for p in _grades(a.s, b.s, truncate_p):
        n = n_coeff(a.q, b.q, a.m, b.m, p)
        if n == 0:
            continue
        kappa = reg.lookup(CouplingKey.for_bracket(a.s, b.s, p))
        entries.append((
            -kappa / 2 * n, Family.WTILDE,
            a.q + b.q - p - 1, a.s + b.s - p - 1, a.m + b.m
        ))
    return ModeCombination.collect(entries)


def soft_bracket_coefficient(hbar1, hbar2, m, n, p: int) -> Fraction:
    """Inner x-sum of the soft-current bracket at grade p."""
    total = Fraction(0)
    for x in range(p + 1):
        total += (
            sign(p - x) * binomial(p, x)
            * binomial(m + n - hbar1 - hbar2 - p, m - hbar1 - p + x)
            * binomial(-m - n - hbar1 - hbar2 - p, -m - hbar1 - x)
        )
    return total


def soft_bracket(
    a: GeneratorMode, b: GeneratorMode, reg: CouplingRegistry,
    truncate_p: Optional[int] = None
) -> ModeCombination:
    """
    Bracket of soft-current modes H^{k1,s1}_m and H^{k2,s2}_n in binomial
    form, with target H^{k1+k2+p-1, s1+s2-p-1}_{m+n}.
    """
    _require(a, b, Family.H)
    h1, h2 = a.label.hbar.value, b.label.hbar.value
    m, n = a.m.value, b.m.value
    entries = []
    for p in _grades(a.s, b.s, truncate_p):
        c = soft_bracket_coefficient(h1, h2, m, n, p)
        if c == 0:
            continue
        kappa = reg.lookup(CouplingKey.for_bracket(a.s, b.s, p))
        entries.append((
            -kappa / 2 * c, Family.H,
            a.q + b.q - p - 1, a.s + b.s - p - 1, a.m + b.m
        ))
    return ModeCombination.collect(entries)


def wedge_factor(q: Any, m: Any) -> int:
    """(-m + q - 1)! (m + q - 1)!, the soft to W-tilde mode normalization."""
    return factorial(-m + q - 1) * factorial(m + q - 1)


def wtilde_from_soft(h_mode: GeneratorMode, q: Any = None) -> Tuple[int, GeneratorMode]:
    """
    W-tilde image of a soft-current mode: W^{q,s}_m = factor * H^{s+2(1-q),s}_m.

    Raises
    ------
    WedgeViolationProblem
        If m is outside |m| <= q - 1 with an integer gap.
    """
    if h_mode.family is not Family.H:
        raise UnsupportedBracketProblem(h_mode, h_mode)
    if q is not None and HalfInt.of(q) != h_mode.q:
        raise WedgeViolationProblem(h_mode.label, h_mode.m)
    label = GeneratorLabel(Family.WTILDE, h_mode.q, h_mode.s)
    if wedge_violation(label, h_mode.m) is not None:
        raise WedgeViolationProblem(label, h_mode.m)
    return wedge_factor(h_mode.q, h_mode.m), GeneratorMode(label, h_mode.m)


def soft_from_wtilde(w_mode: GeneratorMode) -> Tuple[int, GeneratorMode]:
    """Inverse map: W^{q,s}_m = factor * H_m, returned as (factor, H_m)."""
    h_mode = GeneratorMode(GeneratorLabel(Family.H, w_mode.q, w_mode.s), w_mode.m)
    factor, _ = wtilde_from_soft(h_mode)
    return factor, h_mode


def wtilde_bracket_via_soft(
    a: GeneratorMode, b: GeneratorMode, reg: CouplingRegistry,
    truncate_p: Optional[int] = None
) -> ModeCombination:
    """W-tilde bracket obtained by conjugating the soft bracket through the mode map."""
    factor_a, h_a = soft_from_wtilde(a)
    factor_b, h_b = soft_from_wtilde(b)
    soft = soft_bracket(h_a, h_b, reg, truncate_p)
    terms = []
    for c, h_mode in soft:
        factor, w_mode = wtilde_from_soft(h_mode)
        terms.append((Fraction(factor_a * factor_b, factor) * c, w_mode))
    dropped = list(soft.dropped)
    return ModeCombination(terms, dropped)


def bracket_with(combination: ModeCombination, mode: GeneratorMode, bracket: Bracket) -> ModeCombination:
    """[sum_i c_i X_i, mode] expanded by linearity."""
    result = ModeCombination((), combination.dropped)
    for c, x in combination:
        result = result + bracket(x, mode).scale(c)
    return result
