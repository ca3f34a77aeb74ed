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

from itertools import combinations_with_replacement

from walg.cli.sweeps import wedge_modes
from walg.structure import (
    Family, cyclic_jacobi, jacobi_residual, make_mode, wtilde_bracket
)


def _modes(weights, s=2):
    return [make_mode(Family.WTILDE, q, m, s) for q in weights for m in wedge_modes(q)]


def test_jacobi_truncated_holds(unit_registry):
    for a, b, c in combinations_with_replacement(_modes(range(1, 5)), 3):
        assert jacobi_residual(a, b, c, unit_registry, truncate_p=1).is_empty, (a, b, c)


def test_cyclic_jacobi_matches_residual(unit_registry):
    a, b, c = (make_mode(Family.WTILDE, q, m, 2) for q, m in ((2, 1), (3, -1), (2, 0)))

    def bracket(x, y):
        return wtilde_bracket(x, y, unit_registry, truncate_p=1)

    assert cyclic_jacobi(a, b, c, bracket) == jacobi_residual(a, b, c, unit_registry, 1)
