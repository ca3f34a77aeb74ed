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
from typing import Union

from walg.arith import binomial, pochhammer_falling, pochhammer_rising
from walg.ope.expansion import OpeExpansion, OpeTerm, RawOpeTemplate, RawTerm


def _expand_raw(term: RawTerm, wbar_sign: int):
    # dbar_zbar^k (zbar-wbar)^-b = [-b]_k (zbar-wbar)^-(b+k)
    coeff = term.coeff * pochhammer_falling(-term.pole, term.zbar_order)
    pole = term.pole + term.zbar_order

    # Leibniz: dbar_wbar^r (zbar-wbar)^-b = (b)_r (zbar-wbar)^-(b+r)
    x = term.wbar_order
    for j in range(x + 1):
        r = x - j
        yield OpeTerm(
            coeff * binomial(x, j) * pochhammer_rising(pole, r) * wbar_sign ** r,
            term.hol_pole, pole + r, term.dbar_order + j, term.target
        )


def canonicalize(t: Union[RawOpeTemplate, OpeExpansion]) -> OpeExpansion:
    """
    Apply every pending derivative and merge.

    dbar_zbar acts on the pole only; dbar_wbar is distributed by Leibniz
    between pole and target, with the sign convention of the template's
    pole rule. Canonical expansions are returned unchanged.
    """
    if isinstance(t, OpeExpansion):
        return OpeExpansion(t.terms, t.source, t.residuals, t.dropped)

    sign = t.pole_rule.wbar_sign
    terms = []
    for raw in t.terms:
        terms.extend(_expand_raw(raw, sign))
    return OpeExpansion(terms, t.source, dropped=t.dropped)
