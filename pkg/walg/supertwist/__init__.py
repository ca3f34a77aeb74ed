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

from walg.supertwist.fermionic import (
    BRST_LABEL, BrstOperator, FermionicMode, brst, contour_modes, g_pairing_zero, gg_anticommutator
)
from walg.supertwist.topological import (
    GhatTable, ReducedBracket, RescaledAlgebra, VhatExpression, brst_variation, rescale_exponent,
    rescale_limit, vhat_bracket, vhat_expression
)
