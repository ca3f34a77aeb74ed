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
Generator labels and modes.

A label names a current family with its weight `q` and optional spin `s`.
Soft currents H^{k,s} are stored by the same weight, q = 1 - (k - s)/2,
so that their mode range (k-s)/2 <= m <= (s-k)/2 is the usual wedge.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Tuple

import sympy

from walg.arith import HalfInt, format_rational, is_symbolic
from walg.exceptions import InvalidLabelProblem, WedgeViolationProblem


class Family(str, Enum):
    H = "h"
    W = "w"
    WTILDE = "wtilde"
    WTILDE2 = "wtilde2"
    GPLUS = "gplus"
    GMINUS = "gminus"
    VHAT = "vhat"
    GHAT = "ghat"

    @property
    def is_fermionic(self) -> bool:
        return self in (Family.GPLUS, Family.GMINUS, Family.GHAT)

    @property
    def min_weight(self) -> HalfInt:
        return HalfInt(3) if self.is_fermionic else HalfInt(2)

    @property
    def mode_name(self) -> str:
        return "r" if self.is_fermionic else "m"

    def antiholomorphic_weight(self, q: Any) -> Any:
        """
        Exponent used in antiholomorphic mode expansions.

        Soft currents carry h = 1 - q; every other family uses h = q.
        """
        if self is Family.H:
            return 1 - q
        return q


FAMILY_ORDER = {family: i for i, family in enumerate(Family)}

# Text tokens of the generator grammar, e.g. "Wt[q=2,s=2,m=1]".
FAMILY_TOKENS = {
    Family.H: "H",
    Family.W: "w",
    Family.WTILDE: "Wt",
    Family.WTILDE2: "Wtt",
    Family.GPLUS: "G+",
    Family.GMINUS: "G-",
    Family.VHAT: "Vhat",
    Family.GHAT: "Ghat",
}


def _coerce_weight(value: Any) -> Any:
    if is_symbolic(value):
        return value
    return HalfInt.of(value)


def _weight_key(value: Any) -> Tuple:
    if value is None:
        return (-1, 0, "")
    if isinstance(value, HalfInt):
        return (0, value.doubled, "")
    return (1, 0, sympy.srepr(value))


def label_violation(family: Family, q: Any, s: Optional[Any]) -> Optional[str]:
    """Why (family, q, s) is not a valid label, or None."""
    if not is_symbolic(q) and HalfInt.of(q) < family.min_weight.value:
        return f"q = {format_rational(q)} is below {family.min_weight}"
    if s is not None and HalfInt.of(s) <= 0:
        return f"s = {format_rational(s)} must be positive"
    return None


@dataclass(frozen=True)
class GeneratorLabel:
    family: Family
    q: Any
    s: Optional[HalfInt] = None

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))
        object.__setattr__(self, 'q', _coerce_weight(self.q))
        if self.s is not None:
            object.__setattr__(self, 's', HalfInt.of(self.s))

        reason = label_violation(self.family, self.q, self.s)
        if reason is not None:
            raise InvalidLabelProblem(self.family.value, reason)
        if self.family is Family.H and self.s is None:
            raise InvalidLabelProblem(self.family.value, "soft currents need a spin")

    @classmethod
    def soft(cls, k: Any, s: Any) -> "GeneratorLabel":
        """Label of H^{k,s}."""
        k, s = HalfInt.of(k), HalfInt.of(s)
        offset = k.doubled - s.doubled
        if offset % 2:
            raise InvalidLabelProblem(Family.H.value, f"k - s = {k - s} is not an integer")
        return cls(Family.H, HalfInt(2 - offset // 2), s)

    @property
    def k(self) -> HalfInt:
        """Soft-current dimension, k = s + 2(1 - q)."""
        return self.s + 2 - self.q - self.q

    @property
    def hbar(self) -> Any:
        return self.family.antiholomorphic_weight(self.q)

    @property
    def is_symbolic(self) -> bool:
        return not isinstance(self.q, HalfInt)

    @property
    def sort_key(self) -> Tuple:
        return (FAMILY_ORDER[self.family], _weight_key(self.q), _weight_key(self.s))

    def fields(self) -> Tuple[Tuple[str, Any], ...]:
        if self.family is Family.H:
            return (("k", self.k), ("s", self.s))
        if self.s is None:
            return (("q", self.q),)
        return (("q", self.q), ("s", self.s))

    def __str__(self):
        inner = ",".join(f"{name}={format_rational(value)}" for name, value in self.fields())
        return f"{FAMILY_TOKENS[self.family]}[{inner}]"


def wedge_violation(label: GeneratorLabel, m: HalfInt) -> Optional[str]:
    """
    Why `m` is not an allowed mode of `label`, or None.

    Bosonic currents need |m| <= q - 1 with an integer gap; fermionic modes
    sit on Z + 1/2 with |r| <= q - 1. V-hat modes are unrestricted.
    """
    if label.family is Family.VHAT or label.is_symbolic:
        return None
    gap = label.q - 1 - abs(m)
    if gap < 0:
        return "wedge"
    if label.family.is_fermionic:
        return None if not m.is_integer else "fermionic modes lie on Z + 1/2"
    return None if gap.is_integer else "wedge"


@dataclass(frozen=True)
class GeneratorMode:
    label: GeneratorLabel
    m: HalfInt

    def __post_init__(self):
        object.__setattr__(self, 'm', HalfInt.of(self.m))
        if wedge_violation(self.label, self.m) is not None:
            raise WedgeViolationProblem(self.label, self.m)

    @property
    def family(self) -> Family:
        return self.label.family

    @property
    def q(self) -> Any:
        return self.label.q

    @property
    def s(self) -> Optional[HalfInt]:
        return self.label.s

    @property
    def sort_key(self) -> Tuple:
        return self.label.sort_key + (self.m.doubled,)

    def __str__(self):
        label = str(self.label)
        return f"{label[:-1]},{self.family.mode_name}={self.m}]"


def make_mode(family: Family, q: Any, m: Any, s: Any = None) -> GeneratorMode:
    return GeneratorMode(GeneratorLabel(family, q, s), m)
