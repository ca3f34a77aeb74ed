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

from walg.arith.combinatorics import (
    binomial, factorial, pochhammer_falling, pochhammer_rising, sign
)
from walg.arith.rational import (
    HalfInt, Scalar, as_scalar, exact_sqrt, format_rational, is_symbolic, is_zero,
    normalize_scalar, parse_rational, to_sympy
)
