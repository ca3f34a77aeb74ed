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
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Optional, Tuple

from walg.arith import HalfInt, Scalar, as_scalar, format_rational, is_zero, normalize_scalar
from walg.structure.labels import (
    Family, GeneratorLabel, GeneratorMode, label_violation, wedge_violation
)

log = logging.getLogger("walg.structure")


@dataclass(frozen=True)
class DroppedTerm:
    """A bracket term whose target is not an admissible generator mode."""
    coeff: Scalar
    family: Family
    q: Any
    s: Optional[HalfInt]
    m: HalfInt
    reason: str

    def __str__(self):
        spin = "" if self.s is None else f",s={self.s}"
        return (
            f"{format_rational(self.coeff)} * {self.family.value}"
            f"[q={format_rational(self.q)}{spin},m={self.m}] ({self.reason})"
        )


def target_mode(
    family: Family, q: Any, m: Any, s: Any = None
) -> Tuple[Optional[GeneratorMode], Optional[str]]:
    """
    Build a target mode if it is admissible.

    Returns
    -------
    (mode, None) for admissible targets, (None, reason) otherwise.
    """
    m = HalfInt.of(m)
    reason = label_violation(family, q, s)
    if reason is not None:
        return None, reason
    label = GeneratorLabel(family, q, s)
    reason = wedge_violation(label, m)
    if reason is not None:
        return None, reason
    return GeneratorMode(label, m), None


class ModeCombination:
    """
    Finite linear combination of generator modes.

    Terms are merged by mode, zero coefficients are removed and the
    remaining terms are kept in canonical order. `dropped` lists terms
    whose targets were not admissible; it does not take part in equality.
    """

    def __init__(
        self,
        terms: Iterable[Tuple[Scalar, GeneratorMode]] = (),
        dropped: Iterable[DroppedTerm] = ()
    ):
        merged: Dict[GeneratorMode, Scalar] = {}
        for coeff, mode in terms:
            merged[mode] = merged.get(mode, Fraction(0)) + as_scalar(coeff)

        normalized = ((normalize_scalar(c), mode) for mode, c in merged.items())
        self._terms = tuple(sorted(
            ((c, mode) for c, mode in normalized if not is_zero(c)),
            key=lambda term: term[1].sort_key
        ))
        self.dropped = tuple(dropped)

    @classmethod
    def collect(
        cls, entries: Iterable[Tuple[Scalar, Family, Any, Any, Any]]
    ) -> "ModeCombination":
        """
        Build from (coeff, family, q, s, m) entries, dropping inadmissible
        targets with a non-zero coefficient into the diagnostics.
        """
        terms, dropped = [], []
        for coeff, family, q, s, m in entries:
            coeff = normalize_scalar(as_scalar(coeff))
            if is_zero(coeff):
                continue
            mode, reason = target_mode(family, q, m, s)
            if mode is None:
                log.debug(f"Dropping {format_rational(coeff)} {family.value}^{q} mode {m}: {reason}")
                dropped.append(DroppedTerm(
                    coeff, family, q, None if s is None else HalfInt.of(s), HalfInt.of(m), reason
                ))
            else:
                terms.append((coeff, mode))
        return cls(terms, dropped)

    @property
    def terms(self) -> Tuple[Tuple[Scalar, GeneratorMode], ...]:
        return self._terms

    @property
    def is_empty(self) -> bool:
        return len(self._terms) == 0

    def modes(self) -> Tuple[GeneratorMode, ...]:
        return tuple(mode for _, mode in self._terms)

    def coefficient(self, mode: GeneratorMode) -> Scalar:
        for c, m in self._terms:
            if m == mode:
                return c
        return Fraction(0)

    def scale(self, factor: Any) -> "ModeCombination":
        factor = as_scalar(factor)
        return ModeCombination(
            ((factor * c, mode) for c, mode in self._terms),
            (DroppedTerm(normalize_scalar(factor * d.coeff), d.family, d.q, d.s, d.m, d.reason)
             for d in self.dropped)
        )

    def __add__(self, other: "ModeCombination") -> "ModeCombination":
        if not isinstance(other, ModeCombination):
            return NotImplemented
        return ModeCombination(self._terms + other._terms, self.dropped + other.dropped)

    def __neg__(self) -> "ModeCombination":
        return self.scale(-1)

    def __sub__(self, other: "ModeCombination") -> "ModeCombination":
        if not isinstance(other, ModeCombination):
            return NotImplemented
        return self + (-other)

    def __iter__(self) -> Iterator[Tuple[Scalar, GeneratorMode]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ModeCombination):
            return NotImplemented
        return (self - other).is_empty

    __hash__ = None

    def __str__(self):
        if self.is_empty:
            return "0"
        return " + ".join(f"({format_rational(c)}) {mode}" for c, mode in self._terms)

    def __repr__(self):
        return f"ModeCombination({self})"
