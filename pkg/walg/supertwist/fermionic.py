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
Fermionic modes, the BRST operator and fermionic anticommutators.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from walg.arith import HalfInt
from walg.exceptions import InvalidLabelProblem, MixedChargeProblem, UnsupportedBracketProblem
from walg.ope import BTable, PoleRule, build_g_ope, canonicalize, mode_extract, zbar_contour
from walg.structure import CouplingRegistry, Family, GeneratorLabel, GeneratorMode, ModeCombination

log = logging.getLogger("walg.supertwist")

CHARGES = {Family.GPLUS: "+", Family.GMINUS: "-", Family.GHAT: "hat"}


@dataclass(frozen=True)
class FermionicMode(GeneratorMode):
    """A G+, G- or G-hat mode, r in Z + 1/2 with |r| <= q - 1."""

    def __post_init__(self):
        if not self.label.family.is_fermionic:
            raise InvalidLabelProblem(self.label.family.value, "not a fermionic family")
        super().__post_init__()

    @classmethod
    def of(cls, family: Family, q: Any, r: Any) -> "FermionicMode":
        return cls(GeneratorLabel(Family(family), q), r)

    @property
    def r(self) -> HalfInt:
        return self.m

    @property
    def charge(self) -> str:
        return CHARGES[self.family]

    def as_mode(self) -> GeneratorMode:
        return GeneratorMode(self.label, self.m)


BRST_LABEL = GeneratorLabel(Family.GPLUS, Fraction(3, 2))
BRST_MODE = HalfInt.of(Fraction(-1, 2))


def contour_modes(q: Any, power: int = 0):
    """
    Modes r of sum_r G_r zbar^{-r-q} picked by oint dzbar zbar^power,
    scanned over the wedge |r| <= q - 1.
    """
    q = HalfInt.of(q)
    r = -(q - 1)
    selected = []
    while r <= q - 1:
        if zbar_contour(power - r.value - q.value, 0) != 0:
            selected.append(r)
        r = r + 1
    return selected


@dataclass(frozen=True)
class BrstOperator(FermionicMode):
    """Q = G^{3/2+}_{-1/2}; any other label or mode is rejected."""
    label: GeneratorLabel = BRST_LABEL
    m: HalfInt = BRST_MODE

    def __post_init__(self):
        super().__post_init__()
        if self.label != BRST_LABEL or self.m != BRST_MODE:
            raise InvalidLabelProblem(
                self.label.family.value, f"the BRST operator is {BRST_LABEL} at r = {BRST_MODE}"
            )


def brst() -> BrstOperator:
    """
    The BRST charge, the zbar contour integral of G^{3/2+}.

    The contour against the mode expansion must select exactly r = -1/2.
    """
    selected = contour_modes(BRST_LABEL.q)
    if selected != [BRST_MODE]:
        raise AssertionError(f"Contour selects {selected}, not {BRST_MODE}")
    return BrstOperator()


def _require_fermionic(a: GeneratorMode, b: GeneratorMode):
    if not (a.family.is_fermionic and b.family.is_fermionic):
        raise UnsupportedBracketProblem(a, b)


def g_pairing_zero(a: GeneratorMode, b: GeneratorMode) -> ModeCombination:
    """
    {G^{+}, G^{+}}, {G^{-}, G^{-}} and {G-hat, G-hat} all vanish.

    Raises
    ------
    MixedChargeProblem
        If the modes have different charges; use `gg_anticommutator`.
    """
    _require_fermionic(a, b)
    if CHARGES[a.family] != CHARGES[b.family]:
        raise MixedChargeProblem(a, b)
    return ModeCombination()


def gg_anticommutator(
    a: GeneratorMode, b: GeneratorMode, reg: Optional[CouplingRegistry] = None,
    B: Optional[BTable] = None, Btilde: Optional[BTable] = None,
    pole_rule: PoleRule = PoleRule.PRINTED, p_max: int = 1, coupling_offset: int = 2
) -> ModeCombination:
    """
    {G^{q1-}_r, G^{q2+}_s} by mode extraction of the fermionic OPE template.

    Exchanging two odd modes through the contour deformation costs a sign.
    B or B-tilde entries not given stay as symbols in the coefficients.
    The pair may be given in either order.
    """
    _require_fermionic(a, b)
    if a.family is Family.GPLUS and b.family is Family.GMINUS:
        a, b = b, a
    if a.family is not Family.GMINUS or b.family is not Family.GPLUS:
        if CHARGES[a.family] == CHARGES[b.family]:
            return g_pairing_zero(a, b)
        raise UnsupportedBracketProblem(a, b)

    template = build_g_ope(
        a.q, b.q, B, Btilde, reg, p_max, pole_rule,
        s1=a.s, s2=b.s, coupling_offset=coupling_offset
    )
    if template.dropped:
        log.debug(f"Fermionic template dropped grades: {template.dropped}")
    return -mode_extract(canonicalize(template), a.m, b.m, a.q, b.q)
