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
OPE values.

An `OpeTerm` is coeff * (z-w)^-a * (zbar-wbar)^-b * dbar^j T(w, wbar). The
antiholomorphic order b may be zero or negative, which encodes a regular
factor (zbar-wbar)^|b|. A `RawOpeTemplate` still has derivatives acting
on the pole and must go through `canonicalize` first.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Set, Tuple

import sympy

from walg.arith import Scalar, as_scalar, format_rational, is_zero, normalize_scalar
from walg.structure import Family, GeneratorLabel

TermKey = Tuple[int, int, int, GeneratorLabel]


def _substitute(value: Scalar, mapping: Mapping) -> Scalar:
    if isinstance(value, sympy.Basic):
        return normalize_scalar(value.subs(mapping))
    return value


def _free_symbols(value: Scalar) -> Set[sympy.Symbol]:
    if isinstance(value, sympy.Basic):
        return set(value.free_symbols)
    return set()


@dataclass(frozen=True)
class OpeTerm:
    coeff: Scalar
    hol_pole: int
    antihol_pole: int
    dbar_order: int
    target: GeneratorLabel

    @property
    def key(self) -> TermKey:
        return self.hol_pole, self.antihol_pole, self.dbar_order, self.target

    @property
    def sort_key(self) -> Tuple:
        return self.target.sort_key + (-self.hol_pole, -self.antihol_pole, self.dbar_order)

    def __str__(self):
        return (
            f"({format_rational(self.coeff)}) (z-w)^-{self.hol_pole} "
            f"(zbar-wbar)^{-self.antihol_pole} dbar^{self.dbar_order} {self.target}"
        )


class OpeExpansion:
    """
    Canonical finite sum of OPE terms.

    Terms sharing (hol_pole, antihol_pole, dbar_order, target) are merged
    and zero terms removed. `source` is the family of the two currents whose
    product this is; it selects the antiholomorphic weight convention of
    `mode_extract`. `residuals` holds pieces a producer could not express as
    terms and `dropped` names grades whose target is not a valid label;
    neither takes part in equality.
    """

    def __init__(
        self,
        terms: Iterable[OpeTerm] = (),
        source: Family = Family.WTILDE,
        residuals: Iterable[Any] = (),
        dropped: Iterable[str] = ()
    ):
        merged: Dict[TermKey, Scalar] = {}
        for term in terms:
            merged[term.key] = merged.get(term.key, Fraction(0)) + as_scalar(term.coeff)
        canonical = []
        for (a, b, j, target), c in merged.items():
            c = normalize_scalar(c)
            if not is_zero(c):
                canonical.append(OpeTerm(c, a, b, j, target))
        self._terms = tuple(sorted(canonical, key=lambda t: t.sort_key))
        self.source = Family(source)
        self.residuals = tuple(residuals)
        self.dropped = tuple(dropped)

    @property
    def terms(self) -> Tuple[OpeTerm, ...]:
        return self._terms

    @property
    def is_empty(self) -> bool:
        return not self._terms

    def coefficient(self, hol_pole: int, antihol_pole: int, dbar_order: int,
                    target: GeneratorLabel) -> Scalar:
        for term in self._terms:
            if term.key == (hol_pole, antihol_pole, dbar_order, target):
                return term.coeff
        return Fraction(0)

    def targets(self) -> Tuple[GeneratorLabel, ...]:
        seen = []
        for term in self._terms:
            if term.target not in seen:
                seen.append(term.target)
        return tuple(seen)

    @property
    def unknowns(self) -> Set[sympy.Symbol]:
        symbols = set()
        for term in self._terms:
            symbols |= _free_symbols(term.coeff)
        return symbols

    def substitute(self, mapping: Mapping) -> "OpeExpansion":
        return OpeExpansion(
            (OpeTerm(_substitute(t.coeff, mapping), t.hol_pole, t.antihol_pole,
                     t.dbar_order, t.target) for t in self._terms),
            self.source, self.residuals, self.dropped
        )

    def scale(self, factor: Any) -> "OpeExpansion":
        factor = as_scalar(factor)
        return OpeExpansion(
            (OpeTerm(factor * t.coeff, t.hol_pole, t.antihol_pole, t.dbar_order, t.target)
             for t in self._terms),
            self.source, self.residuals, self.dropped
        )

    def __add__(self, other: "OpeExpansion") -> "OpeExpansion":
        if not isinstance(other, OpeExpansion):
            return NotImplemented
        return OpeExpansion(self._terms + other._terms, self.source,
                            self.residuals + other.residuals, self.dropped + other.dropped)

    def __sub__(self, other: "OpeExpansion") -> "OpeExpansion":
        if not isinstance(other, OpeExpansion):
            return NotImplemented
        return self + other.scale(-1)

    def __iter__(self) -> Iterator[OpeTerm]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, OpeExpansion):
            return NotImplemented
        return (self - other).is_empty

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(str(t) for t in self._terms)

    def __repr__(self):
        return f"OpeExpansion({self})"


class PoleRule(str, Enum):
    """
    How dbar_wbar acts on (zbar - wbar)^-b.

    `calculus` is ordinary differentiation, +b (zbar - wbar)^-(b+1).
    `printed` carries the opposite sign; it is the convention under which
    the fermionic template reproduces the printed B-tilde^{1,0}.
    """
    CALCULUS = "calculus"
    PRINTED = "printed"

    @property
    def wbar_sign(self) -> int:
        return 1 if self is PoleRule.CALCULUS else -1


@dataclass(frozen=True)
class RawTerm:
    """
    coeff * (z-w)^-hol_pole * dbar_zbar^zbar_order dbar_wbar^wbar_order
    [ dbar^dbar_order target / (zbar - wbar)^pole ].

    `origin` records the (p, x) summand of the template that produced it.
    """
    coeff: Scalar
    hol_pole: int
    zbar_order: int
    wbar_order: int
    target: GeneratorLabel
    pole: int = 1
    dbar_order: int = 0
    origin: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class RawOpeTemplate:
    terms: Tuple[RawTerm, ...]
    pole_rule: PoleRule = PoleRule.CALCULUS
    source: Family = Family.WTILDE
    dropped: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def unknowns(self) -> Set[sympy.Symbol]:
        symbols = set()
        for term in self.terms:
            symbols |= _free_symbols(term.coeff)
        return symbols

    def substitute(self, mapping: Mapping) -> "RawOpeTemplate":
        return RawOpeTemplate(
            tuple(RawTerm(_substitute(t.coeff, mapping), t.hol_pole, t.zbar_order,
                          t.wbar_order, t.target, t.pole, t.dbar_order, t.origin)
                  for t in self.terms),
            self.pole_rule, self.source, self.dropped
        )

    def __iter__(self) -> Iterator[RawTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)
