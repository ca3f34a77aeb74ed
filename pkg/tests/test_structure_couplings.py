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

from fractions import Fraction

import pytest

from walg.arith import HalfInt
from walg.exceptions import CouplingNotFoundProblem
from walg.structure import (
    CouplingKey, CouplingRegistry, KAPPA_CONSTRAINTS, ViolationKind, kappa_conditions
)
from tests.conftest import COMPLIANT, CONSTRAINT_KEYS, HALVES_COMPLIANT


def test_coupling_key():
    key = CouplingKey.for_bracket(2, 2, 1)
    assert key == CouplingKey(2, 2, -2)
    assert key.as_tuple() == (HalfInt.of(2), HalfInt.of(2), HalfInt.of(-2))
    assert str(key) == "kappa(2,2,-2)"
    assert CouplingKey.of((2, 2, -2)) == key
    assert CouplingKey.of(key) is key


def test_registry_lookup_is_literal():
    reg = CouplingRegistry({(1, 2, -1): "1/3"})
    assert reg.lookup((1, 2, -1)) == Fraction(1, 3)
    assert (1, 2, -1) in reg
    assert (2, 1, -1) not in reg

    with pytest.raises(CouplingNotFoundProblem):
        reg.lookup((2, 1, -1))


def test_registry_default():
    reg = CouplingRegistry({(1, 1, 1): 5}, default="1/2")
    assert reg.lookup((3, 3, -3)) == Fraction(1, 2)
    assert reg.lookup((1, 1, 1)) == 5
    assert reg.explicit((1, 1, 1)) == 5

    with pytest.raises(CouplingNotFoundProblem):
        reg.explicit((3, 3, -3))

    assert CouplingRegistry.uniform(2).lookup((9, 9, 9)) == 2
    assert len(reg) == 1


def test_constraint_keys_are_covered():
    keys = {key for constraint in KAPPA_CONSTRAINTS for key in constraint.keys()}
    assert keys == {CouplingKey(*k) for k in CONSTRAINT_KEYS}
    assert len(KAPPA_CONSTRAINTS) == 4


def test_kappa_conditions_all_ones(ones_registry):
    violations = kappa_conditions(ones_registry)
    assert [v.constraint for v in violations] == [KAPPA_CONSTRAINTS[1], KAPPA_CONSTRAINTS[3]]
    assert all(v.kind is ViolationKind.UNEQUAL for v in violations)
    assert (violations[0].lhs, violations[0].rhs) == (1, Fraction(1, 3))
    assert (violations[1].lhs, violations[1].rhs) == (1, 2)


@pytest.mark.parametrize("entries", [COMPLIANT, HALVES_COMPLIANT])
def test_kappa_conditions_compliant(entries):
    assert kappa_conditions(CouplingRegistry(entries)) == []


def test_kappa_conditions_zero_denominator():
    entries = dict(COMPLIANT)
    entries[(-2, 2, 2)] = 0
    violations = kappa_conditions(CouplingRegistry(entries))
    assert len(violations) == 1
    assert violations[0].kind is ViolationKind.ZERO_DENOMINATOR
    assert violations[0].key == CouplingKey(-2, 2, 2)
    assert "zero coupling" in str(violations[0])


def test_kappa_conditions_missing_key():
    entries = dict(COMPLIANT)
    del entries[(0, 0, 1)]
    with pytest.raises(CouplingNotFoundProblem):
        kappa_conditions(CouplingRegistry(entries, default=1))
