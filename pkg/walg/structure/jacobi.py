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
from functools import partial
from typing import Optional

from walg.structure.brackets import Bracket, bracket_with, wtilde_bracket
from walg.structure.combination import ModeCombination
from walg.structure.couplings import CouplingRegistry
from walg.structure.labels import GeneratorMode


def cyclic_jacobi(a: GeneratorMode, b: GeneratorMode, c: GeneratorMode, bracket: Bracket) -> ModeCombination:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] for any bilinear mode bracket."""
    return (
        bracket_with(bracket(a, b), c, bracket)
        + bracket_with(bracket(b, c), a, bracket)
        + bracket_with(bracket(c, a), b, bracket)
    )


def jacobi_residual(
    a: GeneratorMode, b: GeneratorMode, c: GeneratorMode,
    reg: CouplingRegistry, truncate_p: Optional[int] = None
) -> ModeCombination:
    """
    Jacobi combination of three W-tilde modes; empty when the identity holds.

    `truncate_p` restricts every internal bracket to grades p <= truncate_p.
    """
    bracket = partial(wtilde_bracket, reg=reg, truncate_p=truncate_p)
    return cyclic_jacobi(a, b, c, bracket)
