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
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

import sympy

from walg.arith import factorial, sign


class GhostKind(str, Enum):
    B = "b"
    C = "c"
    BTILDE = "btilde"
    CTILDE = "ctilde"
    BETA = "beta"
    GAMMA = "gamma"
    BETABAR = "betabar"
    GAMMABAR = "gammabar"

    @property
    def is_odd(self) -> bool:
        return self in (GhostKind.B, GhostKind.C, GhostKind.BTILDE, GhostKind.CTILDE)


# Sign of x(z) y(w) ~ sign * delta_ij / ((z - w)(zbar - wbar)).
PROPAGATOR = {
    (GhostKind.B, GhostKind.C): 1,
    (GhostKind.C, GhostKind.B): -1,
    (GhostKind.BTILDE, GhostKind.CTILDE): 1,
    (GhostKind.CTILDE, GhostKind.BTILDE): -1,
    (GhostKind.BETABAR, GhostKind.GAMMA): 1,
    (GhostKind.BETA, GhostKind.GAMMABAR): 1,
    (GhostKind.GAMMABAR, GhostKind.BETA): -1,
    (GhostKind.GAMMA, GhostKind.BETABAR): -1,
}


def propagator_sign(left: GhostKind, right: GhostKind) -> int:
    return PROPAGATOR.get((GhostKind(left), GhostKind(right)), 0)


@dataclass(frozen=True)
class GhostField:
    """
    dbar^dbar kind_index, where index is a non-negative integer or an
    expression `k + shift` in a free summation index.
    """
    kind: GhostKind
    index: Any = 0
    dbar: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'kind', GhostKind(self.kind))
        object.__setattr__(self, 'index', sympy.sympify(self.index))
        if self.dbar < 0:
            raise ValueError(f"Derivative order must be non-negative, got {self.dbar}")

    @property
    def is_odd(self) -> bool:
        return self.kind.is_odd

    def __str__(self):
        derivative = "" if self.dbar == 0 else f"dbar^{self.dbar} "
        return f"{derivative}{self.kind.value}_{{{self.index}}}"


@dataclass(frozen=True)
class Contraction:
    """coeff * delta(index_left, index_right) / ((z - w)(zbar - wbar)^antihol_pole)."""
    coeff: int
    antihol_pole: int
    hol_pole: int = 1


def propagator_derivative(dz: int, dw: int) -> int:
    """dbar_zbar^dz dbar_wbar^dw (zbar - wbar)^-1 = (-1)^dz (dz+dw)! (zbar - wbar)^-(1+dz+dw)."""
    return sign(dz) * factorial(dz + dw)


def contract(x: GhostField, y: GhostField) -> Optional[Contraction]:
    """
    Single contraction of x(z, zbar) with y(w, wbar).

    Returns None when the kinds do not pair or concrete indices differ.
    Symbolic indices are assumed to be identified by the caller.
    """
    s = propagator_sign(x.kind, y.kind)
    if s == 0:
        return None
    difference = sympy.simplify(x.index - y.index)
    if difference.is_number and difference != 0:
        return None
    return Contraction(s * propagator_derivative(x.dbar, y.dbar), 1 + x.dbar + y.dbar)
