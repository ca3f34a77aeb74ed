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
Single-contraction Wick products of bilinear currents.

Only one propagator is taken per term, so every result carries exactly one
holomorphic pole; double contractions would only feed a central term.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import sympy

from walg.arith import binomial, factorial, sign
from walg.freefield.currents import K, BilinearCurrent
from walg.freefield.ghosts import GhostField, GhostKind, contract
from walg.ope import OpeExpansion, OpeTerm

log = logging.getLogger("walg.freefield")

L = sympy.Symbol("l", integer=True, nonnegative=True)

KIND_ORDER = [
    GhostKind.C, GhostKind.CTILDE, GhostKind.GAMMA, GhostKind.GAMMABAR,
    GhostKind.B, GhostKind.BTILDE, GhostKind.BETA, GhostKind.BETABAR,
]

Basis = Callable[[int], BilinearCurrent]


def _shift(index: sympy.Expr, var: sympy.Symbol) -> int:
    offset = sympy.expand(index - var)
    if not offset.is_Integer:
        raise ValueError(f"Index {index} is not {var} plus an integer")
    return int(offset)


@dataclass(frozen=True)
class BilinearPiece:
    """
    coeff(k) (z-w)^-1 (zbar-wbar)^-pole sum_{k>=0} :left right:(w, wbar),
    with both field indices of the form k + shift.
    """
    coeff: sympy.Expr
    pole: int
    left: GhostField
    right: GhostField

    @property
    def key(self) -> Tuple:
        return (
            self.pole,
            KIND_ORDER.index(self.left.kind), self.left.dbar, _shift(self.left.index, K),
            KIND_ORDER.index(self.right.kind), self.right.dbar, _shift(self.right.index, K),
        )

    @property
    def weight(self) -> Optional[int]:
        """q of the bilinear family this piece belongs to, if its left index is bare k."""
        if _shift(self.left.index, K) != 0:
            return None
        return _shift(self.right.index, K) + 1

    def __str__(self):
        return f"({self.coeff}) (zbar-wbar)^-{self.pole} :{self.left} {self.right}:"


def _ordered(a: GhostField, b: GhostField) -> Tuple[int, GhostField, GhostField]:
    if KIND_ORDER.index(a.kind) <= KIND_ORDER.index(b.kind):
        return 1, a, b
    return (-1 if a.is_odd and b.is_odd else 1), b, a


def _merge(pieces: List[BilinearPiece]) -> List[BilinearPiece]:
    merged: Dict[Tuple, BilinearPiece] = {}
    for piece in pieces:
        key = piece.key
        if key in merged:
            previous = merged[key]
            piece = BilinearPiece(sympy.expand(previous.coeff + piece.coeff),
                                  piece.pole, piece.left, piece.right)
        merged[key] = piece
    return [merged[key] for key in sorted(merged) if merged[key].coeff != 0]


def wick_pieces(
    left: BilinearCurrent, right: BilinearCurrent, antihol_order_max: int
) -> List[BilinearPiece]:
    """
    Singular part of left(z, zbar) right(w, wbar) as raw bilinears at (w, wbar).

    Every field of `left` is contracted with every conjugate field of
    `right`; the delta eliminates the summation index that keeps the other
    one non-negative. The surviving left field is Taylor expanded in zbar up
    to order `antihol_order_max`, keeping only singular terms.
    """
    pieces = []
    for s in left.summands(K):
        for t in right.summands(L):
            xs, ys = (s.left, s.right), (t.left, t.right)
            fields = [s.left, s.right, t.left, t.right]
            for i in (0, 1):
                for j in (0, 1):
                    x, y = xs[i], ys[j]
                    contraction = contract(x, y)
                    if contraction is None:
                        continue
                    between = fields[i + 1:2 + j]
                    reorder = sign(sum(f.is_odd for f in between)) if y.is_odd else 1

                    u, v = _shift(x.index, K), _shift(y.index, L)
                    if u - v >= 0:
                        substitution = [(L, K + u - v)]
                    else:
                        substitution = [(K, L + v - u), (L, K)]

                    def resolve(expr):
                        for old, new in substitution:
                            expr = expr.subs(old, new)
                        return sympy.expand(expr)

                    base = resolve(s.coeff * t.coeff) * reorder * contraction.coeff
                    a_other, b_other = xs[1 - i], ys[1 - j]
                    a_index, b_index = resolve(a_other.index), resolve(b_other.index)

                    for r in range(antihol_order_max + 1):
                        pole = contraction.antihol_pole - r
                        if pole < 1:
                            break
                        swap, first, second = _ordered(
                            GhostField(a_other.kind, a_index, a_other.dbar + r),
                            GhostField(b_other.kind, b_index, b_other.dbar)
                        )
                        coeff = base * swap / factorial(r)
                        pieces.append(BilinearPiece(sympy.expand(coeff), pole, first, second))
    return _merge(pieces)


@dataclass(frozen=True)
class UnrecognizedBilinear:
    """Wick output at one pole that no combination of basis derivatives reproduces."""
    pole: int
    pieces: Tuple[BilinearPiece, ...]

    def __str__(self):
        return "; ".join(str(p) for p in self.pieces)


def derivative_contribution(current: BilinearCurrent, d: int, e1: int, e2: int) -> sympy.Expr:
    """Coefficient of :dbar^e1 X_k dbar^e2 Y: in dbar^d of `current`."""
    total = sympy.Integer(0)
    for (a, b), _ in current.alpha:
        i, rest = e1 - a, e2 - b
        if i < 0 or rest < 0 or i + rest != d:
            continue
        total += current.coefficient(a, b) * int(binomial(d, i))
    return sympy.expand(total)


def polynomial_equations(expr: sympy.Expr) -> List[sympy.Expr]:
    """Non-zero coefficients of the powers of k in `expr`; each must vanish."""
    expr = sympy.expand(expr)
    if expr == 0:
        return []
    return [c for c in sympy.Poly(expr, K).all_coeffs() if c != 0]


def recognize(
    pieces: List[BilinearPiece], basis: Basis
) -> Tuple[List[OpeTerm], List[UnrecognizedBilinear]]:
    """
    Write each pole group as sum_d lambda_d dbar^d J^Q with J^Q = basis(Q).

    Groups that admit no such decomposition, or whose fields are not in the
    basis layout, are returned unrecognized.
    """
    groups: Dict[Tuple[int, Optional[int]], List[BilinearPiece]] = {}
    for piece in pieces:
        groups.setdefault((piece.pole, piece.weight), []).append(piece)

    terms, residuals = [], []
    for (pole, weight), group in sorted(groups.items(), key=lambda g: (g[0][0], g[0][1] or 0)):
        current = None if weight is None or weight < 1 else basis(weight)
        if current is None or any(
            (p.left.kind, p.right.kind) != (current.left_kind, current.right_kind) for p in group
        ):
            residuals.append(UnrecognizedBilinear(pole, tuple(group)))
            continue

        observed = {(p.left.dbar, p.right.dbar): p.coeff for p in group}
        top = max(e1 + e2 for e1, e2 in observed)
        lowest = min((a + b for (a, b), _ in current.alpha), default=0)
        lambdas = [sympy.Symbol(f"lambda_{d}") for d in range(max(top - lowest, 0) + 1)]

        equations = []
        for degree in range(top + 1):
            for e1 in range(degree + 1):
                e2 = degree - e1
                expr = -observed.get((e1, e2), sympy.Integer(0))
                for d, lam in enumerate(lambdas):
                    expr += lam * derivative_contribution(current, d, e1, e2)
                equations.extend(polynomial_equations(expr))

        values = [sympy.Integer(0)] * len(lambdas)
        if equations:
            solution = sympy.linsolve(equations, lambdas)
            if solution == sympy.S.EmptySet:
                residuals.append(UnrecognizedBilinear(pole, tuple(group)))
                continue
            values = list(next(iter(solution)))
        free = {lam: 0 for lam in lambdas}
        for d, value in enumerate(values):
            value = sympy.sympify(value).subs(free)
            if value != 0:
                terms.append(OpeTerm(value, 1, pole, d, current.label))
    return terms, residuals


def wick_ope(
    A: BilinearCurrent, B: BilinearCurrent, antihol_order_max: int,
    basis: Optional[Basis] = None
) -> OpeExpansion:
    """
    Single-contraction OPE of two bilinear currents.

    Surviving bilinears are recognized as derivatives of `basis(q)`, which
    defaults to the recipe of `A` at weight q. Anything left over is
    returned in the expansion's `residuals`.
    """
    if basis is None:
        basis = A.at_weight
    pieces = wick_pieces(A, B, antihol_order_max)
    terms, residuals = recognize(pieces, basis)
    for residual in residuals:
        log.debug(f"Unrecognized bilinear at pole {residual.pole}: {residual}")
    return OpeExpansion(terms, A.family, residuals)
