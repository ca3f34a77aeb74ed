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

from walg.structure.brackets import (
    soft_bracket, wedge_factor, wtilde_bracket, wtilde_bracket_via_soft, wtilde_from_soft
)
from walg.structure.coefficients import (
    BivariatePolynomial, Representation, m_poly, n_closed_form_p1, n_coeff, n_poly, p_range,
    vanishing_p_report
)
from walg.structure.combination import DroppedTerm, ModeCombination, target_mode
from walg.structure.couplings import (
    ConstraintViolation, CouplingKey, CouplingRegistry, KAPPA_CONSTRAINTS, ViolationKind,
    kappa_conditions
)
from walg.structure.jacobi import cyclic_jacobi, jacobi_residual
from walg.structure.labels import Family, GeneratorLabel, GeneratorMode, make_mode
