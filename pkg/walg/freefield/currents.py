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
Normal-ordered bilinear currents in the ghost fields.

A current of weight q is

    sum_{k >= 0} sum_{(a, b)} alpha_{a,b}(q, k) :dbar^a X_k dbar^b Y_{k+q-1}:

with (X, Y) = (c, b) by default. The alpha table is kept as sympy
expressions in the symbols `Q` and `K`, so the same recipe builds the
current at any weight.
"""
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple

import sympy

from walg.arith import HalfInt, as_scalar, exact_sqrt, to_sympy
from walg.exceptions import InvalidLabelProblem, NonSquareKappaProblem
from walg.freefield.ghosts import GhostField, GhostKind
from walg.structure import Family, GeneratorLabel

Q = sympy.Symbol("q")
K = sympy.Symbol("k", integer=True, nonnegative=True)

AlphaTable = Mapping[Tuple[int, int], Any]


@dataclass(frozen=True)
class BilinearSummand:
    coeff: sympy.Expr
    left: GhostField
    right: GhostField

    def __str__(self):
        return f"({self.coeff}) :{self.left} {self.right}:"


@dataclass(frozen=True)
class BilinearCurrent:
    q: HalfInt
    alpha: Tuple[Tuple[Tuple[int, int], sympy.Expr], ...]
    left_kind: GhostKind = GhostKind.C
    right_kind: GhostKind = GhostKind.B
    family: Family = Family.W

    def __post_init__(self):
        object.__setattr__(self, 'q', HalfInt.of(self.q))
        if not self.q.is_integer:
            raise InvalidLabelProblem(self.family.value, f"bilinear currents need integer q, got {self.q}")
        object.__setattr__(self, 'alpha', tuple(sorted(
            ((int(a), int(b)), sympy.sympify(expr)) for (a, b), expr in dict(self.alpha).items()
        )))

    @property
    def label(self) -> GeneratorLabel:
        return GeneratorLabel(self.family, self.q)

    @property
    def shift(self) -> int:
        return int(self.q) - 1

    def coefficient(self, a: int, b: int) -> sympy.Expr:
        """alpha_{a,b}(k) at this weight."""
        for degrees, expr in self.alpha:
            if degrees == (a, b):
                return sympy.expand(expr.subs(Q, int(self.q)))
        return sympy.Integer(0)

    def summands(self, index: sympy.Symbol = K) -> Tuple[BilinearSummand, ...]:
        terms = []
        for (a, b), expr in self.alpha:
            coeff = sympy.expand(expr.subs(Q, int(self.q)).subs(K, index))
            if coeff == 0:
                continue
            terms.append(BilinearSummand(
                coeff,
                GhostField(self.left_kind, index, a),
                GhostField(self.right_kind, index + self.shift, b)
            ))
        return tuple(terms)

    def at_weight(self, q: Any) -> "BilinearCurrent":
        return BilinearCurrent(q, self.alpha, self.left_kind, self.right_kind, self.family)

    @property
    def max_degree(self) -> int:
        return max((a + b for (a, b), _ in self.alpha), default=0)

    def __str__(self):
        inner = " + ".join(str(s) for s in self.summands())
        return f"{self.label} = sum_k [{inner}]"


def make_bilinear_current(q: Any, alpha_table: AlphaTable, family: Family = Family.W) -> BilinearCurrent:
    """
    General realization with coefficients alpha_{a,b} given as numbers or
    sympy expressions in `Q` and `K`.
    """
    table = {}
    for degrees, value in alpha_table.items():
        table[degrees] = value if isinstance(value, sympy.Basic) else to_sympy(as_scalar(value))
    return BilinearCurrent(q, tuple(table.items()), family=family)


def w_alpha_table(kappa: Any = 1) -> Dict[Tuple[int, int], sympy.Expr]:
    """
    alpha table of w^q: -sqrt(kappa) [(q+2) :dbar c_k b_{q-1+k}: + (k+1) :c_k dbar b_{q-1+k}:].

    Raises
    ------
    NonSquareKappaProblem
        If kappa is not the square of a rational.
    """
    try:
        root = to_sympy(exact_sqrt(kappa))
    except ValueError:
        raise NonSquareKappaProblem(kappa)
    return {(1, 0): -root * (Q + 2), (0, 1): -root * (K + 1)}


def make_w_current(q: Any, kappa: Any = 1) -> BilinearCurrent:
    q = HalfInt.of(q)
    if not q.is_integer or q < 2:
        raise InvalidLabelProblem(Family.W.value, f"w currents need an integer q >= 2, got {q}")
    return make_bilinear_current(q, w_alpha_table(kappa))


def make_shift_current(q: Any) -> BilinearCurrent:
    """sum_k :c_k b_{k+q-1}:, closed under single contractions."""
    return make_bilinear_current(q, {(0, 0): 1})
