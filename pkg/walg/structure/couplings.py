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
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from walg.arith import HalfInt, format_rational, parse_rational
from walg.exceptions import CouplingNotFoundProblem


@dataclass(frozen=True)
class CouplingKey:
    """Literal subscript triple (s1, s2, -s_I) of a coupling."""
    s1: HalfInt
    s2: HalfInt
    s3: HalfInt

    def __post_init__(self):
        for name in ('s1', 's2', 's3'):
            object.__setattr__(self, name, HalfInt.of(getattr(self, name)))

    @classmethod
    def for_bracket(cls, s1: Any, s2: Any, p: int) -> "CouplingKey":
        """Key of the grade-p term between spins s1 and s2: s_I = s1 + s2 - p - 1."""
        s1, s2 = HalfInt.of(s1), HalfInt.of(s2)
        return cls(s1, s2, -(s1 + s2 - p - 1))

    @classmethod
    def of(cls, triple: Any) -> "CouplingKey":
        if isinstance(triple, CouplingKey):
            return triple
        s1, s2, s3 = triple
        return cls(s1, s2, s3)

    def as_tuple(self) -> Tuple[HalfInt, HalfInt, HalfInt]:
        return self.s1, self.s2, self.s3

    def __str__(self):
        return f"kappa({self.s1},{self.s2},{self.s3})"


class CouplingRegistry:
    """
    Table of couplings kappa_{s1,s2,-s_I}.

    Keys are looked up literally; (s1, s2) is never symmetrized. The
    optional default answers `lookup` for absent keys but never `explicit`.
    """

    def __init__(self, entries: Optional[Mapping[Any, Any]] = None, default: Any = None):
        self._entries: Dict[CouplingKey, Fraction] = {
            CouplingKey.of(key): parse_rational(value)
            for key, value in (entries or {}).items()
        }
        self.default: Optional[Fraction] = None if default is None else parse_rational(default)

    @classmethod
    def uniform(cls, value: Any = 1) -> "CouplingRegistry":
        return cls(default=value)

    def lookup(self, key: Any) -> Fraction:
        key = CouplingKey.of(key)
        if key in self._entries:
            return self._entries[key]
        if self.default is not None:
            return self.default
        raise CouplingNotFoundProblem(key)

    def explicit(self, key: Any) -> Fraction:
        key = CouplingKey.of(key)
        if key not in self._entries:
            raise CouplingNotFoundProblem(key)
        return self._entries[key]

    def __contains__(self, key) -> bool:
        return CouplingKey.of(key) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[CouplingKey]:
        return iter(sorted(self._entries, key=lambda k: (k.s1, k.s2, k.s3)))

    def items(self) -> List[Tuple[CouplingKey, Fraction]]:
        return [(key, self._entries[key]) for key in self]

    def __repr__(self):
        default = None if self.default is None else format_rational(self.default)
        return f"CouplingRegistry({len(self)} entries, default={default})"


@dataclass(frozen=True)
class CouplingRatio:
    """factor * prod(numerator) / prod(denominator) over explicit couplings."""
    factor: Fraction
    numerator: Tuple[CouplingKey, ...]
    denominator: Tuple[CouplingKey, ...] = ()

    def evaluate(self, registry: CouplingRegistry) -> Fraction:
        value = Fraction(self.factor)
        for key in self.numerator:
            value *= registry.explicit(key)
        for key in self.denominator:
            divisor = registry.explicit(key)
            if divisor == 0:
                raise ZeroDivisionError(str(key))
            value /= divisor
        return value

    def keys(self) -> Tuple[CouplingKey, ...]:
        return self.numerator + self.denominator


@dataclass(frozen=True)
class KappaConstraint:
    name: str
    lhs: CouplingRatio
    rhs: CouplingRatio

    def keys(self) -> Tuple[CouplingKey, ...]:
        return self.lhs.keys() + self.rhs.keys()


class ViolationKind(str, Enum):
    UNEQUAL = "unequal"
    ZERO_DENOMINATOR = "zero_denominator"


@dataclass(frozen=True)
class ConstraintViolation:
    constraint: KappaConstraint
    kind: ViolationKind
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    key: Optional[CouplingKey] = None

    def __str__(self):
        if self.kind is ViolationKind.ZERO_DENOMINATOR:
            return f"{self.constraint.name}: zero coupling {self.key} in a denominator"
        return (
            f"{self.constraint.name}: "
            f"{format_rational(self.lhs)} != {format_rational(self.rhs)}"
        )


def _k(s1, s2, s3) -> CouplingKey:
    return CouplingKey(s1, s2, s3)


KAPPA_CONSTRAINTS = (
    KappaConstraint(
        "kappa(0,1,1)/kappa(-2,2,2) = kappa(1,1,2)/kappa(0,2,2)",
        CouplingRatio(Fraction(1), (_k(0, 1, 1),), (_k(-2, 2, 2),)),
        CouplingRatio(Fraction(1), (_k(1, 1, 2),), (_k(0, 2, 2),)),
    ),
    KappaConstraint(
        "kappa(-1,1,1)/kappa(-1,1,2) = kappa(1,1,1)/(3 kappa(1,1,2))",
        CouplingRatio(Fraction(1), (_k(-1, 1, 1),), (_k(-1, 1, 2),)),
        CouplingRatio(Fraction(1, 3), (_k(1, 1, 1),), (_k(1, 1, 2),)),
    ),
    KappaConstraint(
        "kappa(-1,1,1) = kappa(0,0,1)",
        CouplingRatio(Fraction(1), (_k(-1, 1, 1),)),
        CouplingRatio(Fraction(1), (_k(0, 0, 1),)),
    ),
    KappaConstraint(
        "kappa(0,1,1)^2 = 2 kappa(1,1,1) kappa(-1,1,1)",
        CouplingRatio(Fraction(1), (_k(0, 1, 1), _k(0, 1, 1))),
        CouplingRatio(Fraction(2), (_k(1, 1, 1), _k(-1, 1, 1))),
    ),
)


def kappa_conditions(registry: CouplingRegistry) -> List[ConstraintViolation]:
    """
    Check the four coupling constraints required by the Jacobi identity.

    Only explicit registry entries are used; a missing key raises
    `CouplingNotFoundProblem`.

    Returns
    -------
    list of ConstraintViolation
        Empty when every constraint holds.
    """
    violations = []
    for constraint in KAPPA_CONSTRAINTS:
        for key in constraint.keys():
            registry.explicit(key)

        try:
            lhs = constraint.lhs.evaluate(registry)
            rhs = constraint.rhs.evaluate(registry)
        except ZeroDivisionError:
            zero = next(
                key for key in constraint.lhs.denominator + constraint.rhs.denominator
                if registry.explicit(key) == 0
            )
            violations.append(ConstraintViolation(
                constraint, ViolationKind.ZERO_DENOMINATOR, key=zero
            ))
            continue

        if lhs != rhs:
            violations.append(ConstraintViolation(constraint, ViolationKind.UNEQUAL, lhs, rhs))
    return violations
