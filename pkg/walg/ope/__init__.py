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

from walg.ope.canonical import canonicalize
from walg.ope.expansion import OpeExpansion, OpeTerm, PoleRule, RawOpeTemplate, RawTerm
from walg.ope.extraction import mode_extract, residue_at_wbar, zbar_contour
from walg.ope.templates import (
    BTable, b_symbol, build_g_ope, build_soft_ope, build_wtilde_ope, fermionic_coupling,
    describe_template, gg_realization_ope, known_b_constants, template_coefficient
)
