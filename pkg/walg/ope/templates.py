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
OPE templates of the bosonic and fermionic currents.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple

import sympy

from walg.arith import (
    HalfInt, Scalar, as_scalar, binomial, factorial, format_rational, is_symbolic, is_zero,
    normalize_scalar, pochhammer_falling, pochhammer_rising, sign
)
from walg.exceptions import CouplingNotFoundProblem
from walg.ope.expansion import OpeExpansion, OpeTerm, PoleRule, RawOpeTemplate, RawTerm
from walg.structure import CouplingKey, CouplingRegistry, Family, GeneratorLabel, p_range
from walg.structure.labels import label_violation

log = logging.getLogger("walg.ope")

BTable = Mapping[Tuple[int, int], Any]


def template_coefficient(q1: Any, q2: Any, p: int, x: int) -> Scalar:
    """(-1)^x binom(p, x) (2q1-1-p)_x [2q2-2-x]_{p-x}, the weight of one (p, x) summand."""
    q1, q2 = as_scalar(q1), as_scalar(q2)
    value = (
        sign(x) * binomial(p, x)
        * pochhammer_rising(2 * q1 - 1 - p, x)
        * pochhammer_falling(2 * q2 - 2 - x, p - x)
    )
    return normalize_scalar(value)


def _grades(s1, s2, truncate_p: Optional[int]):
    return [p for p in p_range(s1, s2) if truncate_p is None or p <= truncate_p]


def _target_weight(q1: Any, q2: Any, p: int) -> Any:
    q1, q2 = as_scalar(q1), as_scalar(q2)
    weight = normalize_scalar(q1 + q2 - 1 - p)
    return weight if is_symbolic(weight) else HalfInt.of(weight)


def build_wtilde_ope(
    q1: Any, s1: Any, q2: Any, s2: Any, reg: CouplingRegistry,
    truncate_p: Optional[int] = None
) -> RawOpeTemplate:
    """
    OPE template of W^{q1,s1}(z, zbar) W^{q2,s2}(w, wbar).

    sum_p kappa/2 (z-w)^-1 sum_x (-1)^x binom(p,x) (2q1-1-p)_x [2q2-2-x]_{p-x}
    dbar_zbar^{p-x} dbar_wbar^x [ W^{q1+q2-1-p, s1+s2-1-p} / (zbar - wbar) ]

    Summands with a vanishing combinatorial weight are omitted; grades
    whose target is not a valid label are listed in `dropped`.
    """
    terms, dropped = [], []
    for p in _grades(s1, s2, truncate_p):
        q3 = _target_weight(q1, q2, p)
        s3 = HalfInt.of(s1) + HalfInt.of(s2) - p - 1
        reason = label_violation(Family.WTILDE, q3, s3)
        if reason is not None:
            dropped.append(f"p={p}: {reason}")
            continue
        target = GeneratorLabel(Family.WTILDE, q3, s3)
        kappa = None
        for x in range(p + 1):
            weight = template_coefficient(q1, q2, p, x)
            if is_zero(weight):
                continue
            if kappa is None:
                kappa = reg.lookup(CouplingKey.for_bracket(s1, s2, p))
            terms.append(RawTerm(kappa / 2 * weight, 1, p - x, x, target, origin=(p, x)))
    return RawOpeTemplate(tuple(terms), PoleRule.CALCULUS, Family.WTILDE, tuple(dropped))


def build_soft_ope(
    k1: Any, s1: Any, k2: Any, s2: Any, reg: CouplingRegistry, alpha_max: int,
    truncate_p: Optional[int] = None
) -> OpeExpansion:
    """
    Soft-current OPE H^{k1,s1}(z, zbar) H^{k2,s2}(w, wbar), truncated at
    dbar^alpha_max.

    Each term is -kappa/2 (z-w)^-1 (zbar-wbar)^{alpha+p} / alpha!
    binom(-2h1-2h2-2p-alpha, -2h2-p) dbar^alpha H^{k1+k2+p-1, s1+s2-p-1},
    stored with antihol_pole -(alpha + p). Grades whose target is not a
    valid label are listed in `dropped`.
    """
    if alpha_max < 0:
        raise ValueError(f"alpha_max must be non-negative, got {alpha_max}")
    left, right = GeneratorLabel.soft(k1, s1), GeneratorLabel.soft(k2, s2)
    h1, h2 = left.hbar.value, right.hbar.value

    terms, dropped = [], []
    for p in _grades(left.s, right.s, truncate_p):
        q3 = left.q + right.q - p - 1
        s3 = left.s + right.s - p - 1
        reason = label_violation(Family.H, q3, s3)
        if reason is not None:
            dropped.append(f"p={p}: {reason}")
            continue
        target = GeneratorLabel(Family.H, q3, s3)
        kappa = None
        for alpha in range(alpha_max + 1):
            weight = binomial(-2 * h1 - 2 * h2 - 2 * p - alpha, -2 * h2 - p)
            if weight == 0:
                continue
            if kappa is None:
                kappa = reg.lookup(CouplingKey.for_bracket(left.s, right.s, p))
            coeff = -kappa / 2 * weight / factorial(alpha)
            terms.append(OpeTerm(coeff, 1, -(alpha + p), alpha, target))
    if dropped:
        log.debug(f"Soft OPE dropped grades: {dropped}")
    return OpeExpansion(terms, Family.H, dropped=dropped)


def b_symbol(p: int, x: int, tilde: bool = False) -> sympy.Symbol:
    return sympy.Symbol(f"{'Bt' if tilde else 'B'}_{p}_{x}")


def known_b_constants(q1: Any, q2: Any) -> Tuple[Dict[Tuple[int, int], Scalar], Dict[Tuple[int, int], Scalar]]:
    """
    B and B-tilde at grades p <= 1 as they reproduce the G-G realization
    under the printed pole rule.
    """
    q1, q2 = as_scalar(q1), as_scalar(q2)
    b = {(0, 0): Fraction(4), (1, 0): Fraction(0), (1, 1): Fraction(0)}
    bt = {
        (0, 0): Fraction(0),
        (1, 0): normalize_scalar(-2 * (2 * q1 + q2 - 3) / (q2 - 1)),
        (1, 1): Fraction(-2),
    }
    return b, bt


def fermionic_coupling(
    reg: CouplingRegistry, s1: Any = None, s2: Any = None, offset: int = 2
) -> Scalar:
    """
    Coupling of the fermionic OPE. Spins are usually suppressed, in which
    case the registry default is used; otherwise the key is
    (s1, s2, -(s1 + s2 - offset)).
    """
    if s1 is None or s2 is None:
        if reg.default is None:
            raise CouplingNotFoundProblem("fermionic coupling (no spins, no default)")
        return reg.default
    s1, s2 = HalfInt.of(s1), HalfInt.of(s2)
    return reg.lookup(CouplingKey(s1, s2, -(s1 + s2 - offset)))


def build_g_ope(
    q1: Any, q2: Any, B: Optional[BTable] = None, Btilde: Optional[BTable] = None,
    reg: Optional[CouplingRegistry] = None, p_max: int = 1,
    pole_rule: PoleRule = PoleRule.PRINTED,
    s1: Any = None, s2: Any = None, coupling_offset: int = 2
) -> RawOpeTemplate:
    """
    OPE template of G^{q1-}(z, zbar) G^{q2+}(w, wbar).

    Same (p, x) weights as the bosonic template, each split over a W-tilde
    target scaled by B^{p,x} and a doubly-tilde target scaled by
    (-1)^p B-tilde^{p,x}. Entries absent from `B`, `Btilde` become the
    symbols B_p_x and Bt_p_x, so the template stays linear in them.
    """
    B, Btilde = dict(B or {}), dict(Btilde or {})
    reg = reg if reg is not None else CouplingRegistry.uniform(1)
    kappa = fermionic_coupling(reg, s1, s2, coupling_offset)

    terms, dropped = [], []
    for p in range(p_max + 1):
        q3 = _target_weight(q1, q2, p)
        reason = label_violation(Family.WTILDE, q3, None)
        if reason is not None:
            dropped.append(f"p={p}: {reason}")
            continue
        plain = GeneratorLabel(Family.WTILDE, q3)
        double = GeneratorLabel(Family.WTILDE2, q3)
        for x in range(p + 1):
            weight = template_coefficient(q1, q2, p, x)
            if is_zero(weight):
                continue
            b = B.get((p, x), b_symbol(p, x))
            bt = Btilde.get((p, x), b_symbol(p, x, tilde=True))
            base = kappa / 2 * weight
            for coeff, target in ((base * b, plain), (base * sign(p) * bt, double)):
                coeff = normalize_scalar(as_scalar(coeff))
                if not is_zero(coeff):
                    terms.append(RawTerm(coeff, 1, p - x, x, target, origin=(p, x)))
    return RawOpeTemplate(tuple(terms), PoleRule(pole_rule), Family.GMINUS, tuple(dropped))


def gg_realization_ope(q1: Any, q2: Any, kappa: Any = 1) -> OpeExpansion:
    """
    G-G product of the explicit realization, as data:

    2 kappa W^{q1+q2-1} / (zbar-wbar) - 2 kappa (q1+q2-2) WW^{q1+q2-2} / (zbar-wbar)^2
    - 2 kappa (q1-1) dbar WW^{q1+q2-2} / (zbar-wbar),

    each with one holomorphic pole. Doubly-tilde targets carry the grade-1
    weight of the template.
    """
    kappa = as_scalar(kappa)
    q1s, q2s = as_scalar(q1), as_scalar(q2)
    leading = GeneratorLabel(Family.WTILDE, _target_weight(q1, q2, 0))
    double = GeneratorLabel(Family.WTILDE2, _target_weight(q1, q2, 1))
    return OpeExpansion([
        OpeTerm(2 * kappa, 1, 1, 0, leading),
        OpeTerm(-2 * kappa * (q1s + q2s - 2), 1, 2, 0, double),
        OpeTerm(-2 * kappa * (q1s - 1), 1, 1, 1, double),
    ], Family.GMINUS)


def describe_template(template: RawOpeTemplate) -> str:
    lines = []
    for t in template.terms:
        lines.append(
            f"({format_rational(t.coeff)}) dz^{t.zbar_order} dw^{t.wbar_order} "
            f"[{t.target} / (zbar-wbar)^{t.pole}]"
        )
    return "\n".join(lines)
