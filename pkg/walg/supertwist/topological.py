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
Topological generators V-hat, their brackets, and the rescaled limit.

V-hat^q_m is the BRST variation of G^{q-}_{m+1/2}. Its current is read
off the fermionic template with Q = G^{3/2+}: the zbar contour keeps only
the summands whose zbar derivative order is zero, i.e. x = p.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import sympy

from walg.arith import HalfInt, Scalar, as_scalar, format_rational, normalize_scalar
from walg.exceptions import UnsupportedBracketProblem
from walg.ope import BTable, OpeExpansion, OpeTerm, PoleRule, build_g_ope
from walg.structure import CouplingRegistry, Family, GeneratorLabel, GeneratorMode, ModeCombination
from walg.structure.brackets import Bracket, bracket_with
from walg.structure.coefficients import M, N
from walg.supertwist.fermionic import BRST_LABEL, FermionicMode, brst, g_pairing_zero, gg_anticommutator

log = logging.getLogger("walg.supertwist")

GhatKey = Tuple[Fraction, Fraction, Fraction, Fraction, int]


def _value(x: Any) -> Scalar:
    if isinstance(x, sympy.Basic):
        return x
    return as_scalar(x)


class GhatTable:
    """
    Structure constants ghat(q1, q2, m, n, p) of the V-hat bracket.

    Only p = 1 has a closed form, m(q2 - 1) - n(q1 - 1). Other entries are
    taken from `entries` or returned as named symbols. `orders` are the
    grades summed by `vhat_bracket`.
    """

    def __init__(self, entries: Optional[Mapping[Tuple, Any]] = None, orders: Iterable[int] = (1,)):
        self.entries: Dict[GhatKey, Scalar] = {}
        for (q1, q2, m, n, p), value in (entries or {}).items():
            self.entries[self._key(q1, q2, m, n, p)] = as_scalar(value)
        self.orders = tuple(sorted(set(int(p) for p in orders)))

    @staticmethod
    def _key(q1, q2, m, n, p) -> GhatKey:
        return (as_scalar(q1), as_scalar(q2), as_scalar(m), as_scalar(n), int(p))

    def is_known(self, q1, q2, m, n, p) -> bool:
        return int(p) == 1 or self._key(q1, q2, m, n, p) in self.entries

    def value(self, q1: Any, q2: Any, m: Any, n: Any, p: int) -> Scalar:
        if int(p) == 1:
            q1, q2, m, n = (_value(x) for x in (q1, q2, m, n))
            return normalize_scalar(m * (q2 - 1) - n * (q1 - 1))
        key = self._key(q1, q2, m, n, p)
        if key in self.entries:
            return self.entries[key]
        name = ",".join(format_rational(x) for x in key[:4])
        return sympy.Symbol(f"ghat({name},{p})")


def vhat_bracket(q1: Any, m: Any, q2: Any, n: Any, ghat: Optional[GhatTable] = None) -> ModeCombination:
    """[V^{q1}_m, V^{q2}_n] = sum_p ghat(q1, q2, m, n, p) V^{q1+q2-p-1}_{m+n}."""
    ghat = ghat if ghat is not None else GhatTable()
    q1, q2, m, n = HalfInt.of(q1), HalfInt.of(q2), HalfInt.of(m), HalfInt.of(n)
    entries = []
    for p in ghat.orders:
        entries.append((ghat.value(q1, q2, m, n, p), Family.VHAT, q1 + q2 - p - 1, None, m + n))
    return ModeCombination.collect(entries)


@dataclass(frozen=True)
class VhatExpression:
    """
    Local current V-hat^q(w, wbar) as canonical terms with no pole, each
    recorded with the template summands (p, x) it came from.
    """
    q: HalfInt
    expansion: OpeExpansion
    origins: Tuple[Tuple[Tuple[int, GeneratorLabel], Tuple[Tuple[int, int], ...]], ...]

    def origin_of(self, dbar_order: int, target: GeneratorLabel) -> Tuple[Tuple[int, int], ...]:
        for key, origins in self.origins:
            if key == (dbar_order, target):
                return origins
        return ()

    @property
    def all_origins(self) -> List[Tuple[int, int]]:
        return [o for _, origins in self.origins for o in origins]


def vhat_expression(
    q: Any, B: Optional[BTable] = None, Btilde: Optional[BTable] = None,
    reg: Optional[CouplingRegistry] = None, pole_rule: PoleRule = PoleRule.PRINTED,
    p_max: int = 1, coupling_offset: int = 2
) -> VhatExpression:
    """
    oint dzbar of the fermionic template between Q and G^{q-}.

    A summand dbar_zbar^{p-x} dbar_wbar^x [T / (zbar - wbar)] is a total
    zbar derivative unless x = p, and then integrates to dbar^p T. The
    holomorphic contour has already been taken, so the result is local.
    """
    label = GeneratorLabel(Family.GMINUS, q)
    template = build_g_ope(
        BRST_LABEL.q, label.q, B, Btilde, reg, p_max, pole_rule, coupling_offset=coupling_offset
    )

    terms, origins = [], {}
    for raw in template:
        if raw.zbar_order != 0 or raw.pole != 1:
            continue
        d = raw.wbar_order + raw.dbar_order
        terms.append(OpeTerm(raw.coeff, 0, 0, d, raw.target))
        origins.setdefault((d, raw.target), []).append(raw.origin)

    expansion = OpeExpansion(terms, Family.VHAT)
    kept = {(t.dbar_order, t.target) for t in expansion}
    recorded = tuple(
        (key, tuple(value)) for key, value in sorted(origins.items(), key=lambda o: (o[0][0], o[0][1].sort_key))
        if key in kept
    )
    return VhatExpression(label.q, expansion, recorded)


def _unsupported(a: GeneratorMode, b: GeneratorMode) -> ModeCombination:
    raise UnsupportedBracketProblem(a, b)


def brst_variation(q: Any, m: Any, bracket: Bracket = _unsupported) -> ModeCombination:
    """
    [Q, V-hat^q_m] = 1/2 [{Q, Q}, G^{q-}_{m+1/2}].

    {Q, Q} comes from `gg_anticommutator`; `bracket` expands its terms
    against the G^{q-} mode and is only called if {Q, Q} is non-empty.
    """
    g = FermionicMode.of(Family.GMINUS, q, HalfInt.of(m) + Fraction(1, 2))
    q_ = brst()
    anticommutator = gg_anticommutator(q_, q_)
    if not anticommutator.is_empty:
        log.warning(f"{{Q, Q}} = {anticommutator} is not zero")
    return bracket_with(anticommutator, g, bracket).scale(Fraction(1, 2))


def rescale_exponent(p: int) -> int:
    """Power of lambda carried by grade p once v^q = lambda^{q-2} V^q."""
    return int(p) - 1


@dataclass(frozen=True)
class ReducedBracket:
    """
    Grade-p bracket of the rescaled algebra, [X^{q1}_m, Y^{q2}_n] =
    ghat(q1, q2, m, n', p) Y^{q1+q2-p-1}_{m+n} with n' = n - 1/2 for G-hat.
    """
    left: Family
    right: Family
    p: int = 1
    ghat: GhatTable = field(default_factory=GhatTable, compare=False)

    def __call__(self, a: GeneratorMode, b: GeneratorMode) -> ModeCombination:
        if a.family is not self.left or b.family is not self.right:
            raise UnsupportedBracketProblem(a, b)
        if rescale_exponent(self.p) > 0:
            return ModeCombination()
        n = b.m - Fraction(1, 2) if self.right.is_fermionic else b.m
        coeff = self.ghat.value(a.q, b.q, a.m, n, self.p)
        return ModeCombination.collect([(coeff, self.right, a.q + b.q - self.p - 1, None, a.m + b.m)])


@dataclass(frozen=True)
class RescaledAlgebra:
    """
    lambda -> 0 limit of the topological algebra in v = Family.W and
    G-hat = Family.GHAT generators.
    """
    p: int
    vv: ReducedBracket
    vg: ReducedBracket

    def bracket(self, a: GeneratorMode, b: GeneratorMode) -> ModeCombination:
        pair = (a.family, b.family)
        if pair == (Family.W, Family.W):
            return self.vv(a, b)
        if pair == (Family.W, Family.GHAT):
            return self.vg(a, b)
        if pair == (Family.GHAT, Family.W):
            return -self.vg(b, a)
        if pair == (Family.GHAT, Family.GHAT):
            return g_pairing_zero(a, b)
        raise UnsupportedBracketProblem(a, b)

    def __call__(self, a: GeneratorMode, b: GeneratorMode) -> ModeCombination:
        return self.bracket(a, b)

    def table(self, q_max: Any) -> List[Tuple[str, int, int, int, sympy.Expr]]:
        """Symbolic coefficients in (m, n) of every bracket with weights up to q_max."""
        q_max = int(HalfInt.of(q_max))
        rows = []
        for name, reduced in (("v,v", self.vv), ("v,Ghat", self.vg)):
            for q1 in range(2, q_max + 1):
                for q2 in range(2, q_max + 1):
                    if rescale_exponent(self.p) > 0:
                        coeff = sympy.Integer(0)
                    else:
                        coeff = sympy.expand(sympy.sympify(reduced.ghat.value(q1, q2, M, N, self.p)))
                    rows.append((name, q1, q2, q1 + q2 - self.p - 1, coeff))
        return rows


def rescale_limit(ghat: Optional[GhatTable] = None, p_keep: int = 1) -> RescaledAlgebra:
    """
    Rescale v^q = lambda^{q-2} V^q and G^q = lambda^{q-2} G-hat^q, keep grade
    `p_keep`, and let lambda go to zero.

    Raises
    ------
    ValueError
        If grade `p_keep` diverges in the limit.
    """
    exponent = rescale_exponent(p_keep)
    if exponent < 0:
        raise ValueError(f"Grade p={p_keep} scales as lambda^{exponent} and diverges")
    if exponent > 0:
        log.info(f"Grade p={p_keep} scales as lambda^{exponent}; the reduced bracket vanishes")
    ghat = ghat if ghat is not None else GhatTable(orders=(p_keep,))
    return RescaledAlgebra(
        p_keep,
        ReducedBracket(Family.W, Family.W, p_keep, ghat),
        ReducedBracket(Family.W, Family.GHAT, p_keep, ghat),
    )
