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

from walg.freefield.currents import (
    K, Q, BilinearCurrent, make_bilinear_current, make_shift_current, make_w_current, w_alpha_table
)
from walg.freefield.ghosts import Contraction, GhostField, GhostKind, contract, propagator_sign
from walg.freefield.solver import (
    AlphaSolution, BMatch, MatchingEquation, alpha_residuals, describe_b_table, match_B_constants, solve_alpha,
    solve_alpha_symbolic
)
from walg.freefield.wick import (
    BilinearPiece, UnrecognizedBilinear, polynomial_equations, recognize, wick_ope, wick_pieces
)
