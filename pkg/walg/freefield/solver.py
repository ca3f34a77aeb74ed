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
Linear solvers for realization coefficients and fermionic structure
constants.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from walg.arith import as_scalar, format_rational, normalize_scalar, to_sympy
from walg.freefield.currents import K, Q, BilinearCurrent
from walg.freefield.wick import BilinearPiece, polynomial_equations, wick_pieces
from walg.ope import OpeExpansion, RawOpeTemplate, canonicalize

log = logging.getLogger("walg.freefield")


@dataclass(frozen=True)
class MatchingEquation:
    """lhs = rhs at one matching slot, with the unknowns it involves."""
    slot: str
    lhs: sympy.Expr
    rhs: sympy.Expr

    @property
    def unknowns(self) -> Tuple[str, ...]:
        return tuple(sorted(str(s) for s in (self.lhs - self.rhs).free_symbols))

    @property
    def expr(self) -> sympy.Expr:
        return sympy.expand(self.lhs - self.rhs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "slot": self.slot,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "unknowns": list(self.unknowns),
        }


def _first_failing(equations: Sequence[MatchingEquation], unknowns: Sequence[sympy.Symbol]):
    for i in range(len(equations)):
        if sympy.linsolve([e.expr for e in equations[:i + 1]], list(unknowns)) == sympy.S.EmptySet:
            return equations[i]
    return None


def _solve(equations: Sequence[MatchingEquation], unknowns: Sequence[sympy.Symbol]):
    """Solution mapping, free unknowns, and the first failing equation if any."""
    unknowns = list(unknowns)
    if not equations:
        return {}, tuple(unknowns), None
    solution = sympy.linsolve([e.expr for e in equations], unknowns)
    if solution == sympy.S.EmptySet:
        return None, (), _first_failing(equations, unknowns)

    values = next(iter(solution))
    mapping, free = {}, set()
    for unknown, value in zip(unknowns, values):
        mapping[unknown] = value
        free |= value.free_symbols & set(unknowns)
    return mapping, tuple(sorted(free, key=str)), None


def alpha_symbol(q: int, a: int, b: int, i: int) -> sympy.Symbol:
    return sympy.Symbol(f"u_{q}_{a}_{b}_{i}")


def recipe_symbol(a: int, b: int, i: int, j: int) -> sympy.Symbol:
    """Coefficient of k^i q^j in alpha_{a,b}(q, k)."""
    return sympy.Symbol(f"u_{a}_{b}_{i}_{j}")


@dataclass
class AlphaSolution:
    """
    alpha_{a,b}(k) of target currents, keyed (q, a, b), as polynomials in k.
    A symbolic solve keys the table (a, b) and keeps q as the symbol `Q`.
    Unsolved coefficients remain as free `u_*` symbols.
    """
    consistent: bool
    table: Dict[Tuple[int, ...], sympy.Expr] = field(default_factory=dict)
    free: Tuple[sympy.Symbol, ...] = ()
    failing: Optional[MatchingEquation] = None
    equations: List[MatchingEquation] = field(default_factory=list)
    solution: Dict[sympy.Symbol, sympy.Expr] = field(default_factory=dict)

    def residuals(self) -> List[sympy.Expr]:
        """Equations that do not vanish under the solution."""
        if not self.consistent:
            return [self.failing.expr] if self.failing is not None else []
        left = [sympy.expand(e.expr.xreplace(self.solution)) for e in self.equations]
        return [r for r in left if r != 0]


AlphaLookup = Callable[[int, int, int], Optional[sympy.Expr]]
TargetRule = Callable[[int, int], OpeExpansion]


def _matching_slots(
    order_max: int, target: OpeExpansion, pieces: Sequence[BilinearPiece],
    layout: Tuple, alpha: AlphaLookup
) -> Dict[Tuple, sympy.Expr]:
    """Wick output minus target, per (pole, e1, e2, q) slot; `alpha(q, a, b)` is None off the ansatz."""
    # Slots not of the (left_kind, right_kind) layout with a bare k on the
    # left can only be matched by zero.
    slots: Dict[Tuple, sympy.Expr] = {}
    for piece in pieces:
        e1, e2 = piece.left.dbar, piece.right.dbar
        if e1 + e2 > order_max:
            continue
        weight = piece.weight if (piece.left.kind, piece.right.kind) == layout else None
        key = (piece.pole, e1, e2, weight) if weight is not None else (piece.pole, e1, e2, -1, piece.key)
        slots[key] = slots.get(key, sympy.Integer(0)) - piece.coeff

    for term in target:
        if term.hol_pole != 1:
            continue
        q, d = int(term.target.q), term.dbar_order
        for e1 in range(order_max + 1):
            for e2 in range(order_max + 1 - e1):
                contribution = sympy.Integer(0)
                for a in range(e1 + 1):
                    i = e1 - a
                    b = e2 - (d - i)
                    if i > d or b < 0:
                        continue
                    value = alpha(q, a, b)
                    if value is None:
                        continue
                    contribution += value * sympy.binomial(d, i)
                if contribution != 0:
                    key = (term.antihol_pole, e1, e2, q)
                    slots[key] = slots.get(key, sympy.Integer(0)) + to_sympy(term.coeff) * contribution
    return slots


def _equations(slots: Dict[Tuple, sympy.Expr], prefix: str = "") -> List[MatchingEquation]:
    equations = []
    for key in sorted(slots, key=str):
        pole, e1, e2, q = key[:4]
        for i, expr in enumerate(polynomial_equations(slots[key])):
            equations.append(MatchingEquation(
                f"{prefix}pole={pole} dbar=({e1},{e2}) q={q} k-coefficient {i}",
                sympy.expand(expr), sympy.Integer(0)
            ))
    return equations


def solve_alpha(
    order_max: int, target: OpeExpansion, left: BilinearCurrent, right: BilinearCurrent,
    k_degree: int = 2
) -> AlphaSolution:
    """
    Realization coefficients of the target currents, order by order.

    The Wick product of `left` and `right` is matched against `target`,
    whose currents are taken as bilinears sum_k alpha_{a,b}(k) :dbar^a c_k
    dbar^b b_{k+q-1}: with alpha_{a,b} a polynomial of degree `k_degree`
    in k and a + b <= order_max. Matching runs over every pole, derivative
    split (e1, e2) with e1 + e2 <= order_max, and power of k.
    """
    pieces = wick_pieces(left, right, order_max)
    weights = sorted({int(t.target.q) for t in target if t.hol_pole == 1})

    unknowns, alpha = [], {}
    for q in weights:
        for a in range(order_max + 1):
            for b in range(order_max + 1 - a):
                coeffs = [alpha_symbol(q, a, b, i) for i in range(k_degree + 1)]
                unknowns.extend(coeffs)
                alpha[(q, a, b)] = sum(c * K ** i for i, c in enumerate(coeffs))

    layout = (left.left_kind, left.right_kind)
    slots = _matching_slots(order_max, target, pieces, layout, lambda q, a, b: alpha.get((q, a, b)))
    equations = _equations(slots)

    mapping, free, failing = _solve(equations, unknowns)
    if mapping is None:
        log.warning(f"Realization matching is inconsistent at {failing.slot}")
        return AlphaSolution(False, failing=failing, equations=equations)

    table = {}
    for key, expr in alpha.items():
        table[key] = sympy.expand(expr.subs(mapping))
    return AlphaSolution(True, table, free, None, equations, mapping)


def _sample_equations(
    order_max: int, target: TargetRule, left: BilinearCurrent, right: BilinearCurrent,
    samples: Sequence[Tuple[int, int]], recipe: Mapping[Tuple[int, int], sympy.Expr],
    poles: Optional[Sequence[int]] = None
) -> List[MatchingEquation]:
    equations = []
    for q1, q2 in samples:
        lhs, rhs = left.at_weight(q1), right.at_weight(q2)
        pieces = wick_pieces(lhs, rhs, order_max)

        def at_weight(q, a, b):
            expr = recipe.get((a, b))
            return None if expr is None else sympy.expand(sympy.sympify(expr).subs(Q, q))

        slots = _matching_slots(order_max, target(q1, q2), pieces, (lhs.left_kind, lhs.right_kind), at_weight)
        if poles is not None:
            slots = {key: value for key, value in slots.items() if key[0] in poles}
        equations.extend(_equations(slots, f"q1={q1} q2={q2} "))
    return equations


def solve_alpha_symbolic(
    order_max: int, target: TargetRule, left: BilinearCurrent, right: BilinearCurrent,
    samples: Sequence[Tuple[int, int]], k_degree: int = 2, q_degree: int = 1,
    poles: Optional[Sequence[int]] = None
) -> AlphaSolution:
    """
    One realization recipe alpha_{a,b}(q, k) for every weight.

    `left` and `right` are recipes too: they are taken at the weights of
    each sample (q1, q2) and `target(q1, q2)` gives the expansion to match.
    The ansatz is a polynomial of degree `k_degree` in k and `q_degree` in
    q; each target current uses it with q set to its own weight, so the
    weight q1 + q2 - 1 - p of the template runs through the same unknowns.
    `poles` restricts the matching to those (zbar - wbar) poles.
    """
    unknowns, recipe = [], {}
    for a in range(order_max + 1):
        for b in range(order_max + 1 - a):
            expr = sympy.Integer(0)
            for i in range(k_degree + 1):
                for j in range(q_degree + 1):
                    u = recipe_symbol(a, b, i, j)
                    unknowns.append(u)
                    expr += u * K ** i * Q ** j
            recipe[(a, b)] = expr

    equations = _sample_equations(order_max, target, left, right, samples, recipe, poles)
    mapping, free, failing = _solve(equations, unknowns)
    if mapping is None:
        log.warning(f"Symbolic realization matching is inconsistent at {failing.slot}")
        return AlphaSolution(False, failing=failing, equations=equations)

    table = {key: sympy.expand(expr.subs(mapping)) for key, expr in recipe.items()}
    return AlphaSolution(True, table, free, None, equations, mapping)


def alpha_residuals(
    order_max: int, target: TargetRule, left: BilinearCurrent, right: BilinearCurrent,
    samples: Sequence[Tuple[int, int]], table: Mapping[Tuple[int, int], Any],
    poles: Optional[Sequence[int]] = None
) -> List[MatchingEquation]:
    """
    Matching equations left non-zero by a given recipe alpha_{a,b}(q, k),
    such as `w_alpha_table`. Entries missing from `table` are zero.
    """
    return _sample_equations(order_max, target, left, right, samples, table, poles)


@dataclass
class BMatch:
    consistent: bool
    B: Dict[Tuple[int, int], Any] = field(default_factory=dict)
    Btilde: Dict[Tuple[int, int], Any] = field(default_factory=dict)
    free: Tuple[str, ...] = ()
    failing: Optional[MatchingEquation] = None
    equations: List[MatchingEquation] = field(default_factory=list)


def _b_key(symbol: sympy.Symbol) -> Tuple[bool, Tuple[int, int]]:
    name, p, x = str(symbol).split("_")
    return name == "Bt", (int(p), int(x))


def match_B_constants(target: OpeExpansion, template: RawOpeTemplate) -> BMatch:
    """
    Solve the symbolic B, B-tilde of a fermionic template against a target
    expansion, slot by slot in (hol_pole, antihol_pole, dbar_order, target).
    Unknowns that no slot constrains are reported free.
    """
    expansion = canonicalize(template)
    unknowns = sorted(template.unknowns, key=str)

    slots = {}
    for term in expansion:
        slots[term.key] = to_sympy(term.coeff)
    for term in target:
        slots[term.key] = slots.get(term.key, sympy.Integer(0)) - to_sympy(term.coeff)

    equations = []
    for (a, b, d, label), expr in sorted(slots.items(), key=lambda s: (s[0][3].sort_key, s[0][:3])):
        expr = sympy.cancel(sympy.expand(expr))
        if expr == 0:
            continue
        equations.append(MatchingEquation(f"(z-w)^-{a} (zbar-wbar)^-{b} dbar^{d} {label}",
                                          expr, sympy.Integer(0)))

    mapping, free, failing = _solve(equations, unknowns)
    if mapping is None:
        return BMatch(False, failing=failing, equations=equations)

    result = BMatch(True, free=tuple(str(s) for s in free), equations=equations)
    for symbol in unknowns:
        tilde, key = _b_key(symbol)
        value = normalize_scalar(sympy.factor(mapping[symbol]))
        (result.Btilde if tilde else result.B)[key] = value
    return result


def describe_b_table(table: Dict[Tuple[int, int], Any]) -> Dict[str, str]:
    return {f"{p},{x}": format_rational(as_scalar(v)) for (p, x), v in sorted(table.items())}
