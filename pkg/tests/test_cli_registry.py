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

from tests.conftest import COMPLIANT, not_raises
from walg.cli.registry import load_registry, parse_registry, resolve_registry
from walg.exceptions import RegistryNotFoundProblem, RegistrySchemaProblem
from walg.structure import CouplingKey


def test_parse_registry():
    document = {
        "default": "1/2",
        "entries": [{"s1": 2, "s2": 2, "s3": -2, "kappa": "1/3"},
                    {"s1": "3/2", "s2": "3/2", "s3": 1, "kappa": 4}],
    }
    reg = parse_registry(document)
    assert len(reg) == 2
    assert reg.lookup(CouplingKey.of((2, 2, -2))) == Fraction(1, 3)
    assert reg.lookup(CouplingKey.of(("3/2", "3/2", 1))) == 4
    assert reg.lookup(CouplingKey.of((5, 5, 5))) == Fraction(1, 2)


def test_parse_registry_spin_list():
    reg = parse_registry({"default": "1", "entries": [{"s": ["2", "2", "-2"], "kappa": "1"}]})
    assert reg.lookup(CouplingKey.of((2, 2, -2))) == 1
    assert len(reg) == 1


@pytest.mark.parametrize("document, pointer", [
    ({"entries": [{"s1": 2.5, "s2": 2, "s3": 1, "kappa": "1"}]}, "/entries/0/s1"),
    ({"entries": [{"s1": "1/3", "s2": 2, "s3": 1, "kappa": "1"}]}, "/entries/0/s1"),
    ({"entries": [{"s1": 2, "s2": 2, "s3": 1, "kappa": 0.5}]}, "/entries/0/kappa"),
    ({"entries": [{"s1": 2, "s2": 2, "s3": 1, "kappa": "x"}]}, "/entries/0/kappa"),
    ({"entries": [{"s1": 2, "s2": 2, "s3": 1}]}, "/entries/0/kappa"),
    ({"entries": [{"s1": 2, "s2": 2, "s3": 1, "kappa": 1, "extra": 1}]}, "/entries/0/extra"),
    ({"entries": [{"s1": 2, "s2": 2, "s3": 1, "kappa": 1},
                  {"s1": 2, "s2": 2, "s3": 1, "kappa": 2}]}, "/entries/1"),
    ({"default": 1.5}, "/default"),
    ({"entries": [{"s": [2, 2], "kappa": 1}]}, "/entries/0"),
    ({"entries": [{"s": [2, 2, 0.5], "kappa": 1}]}, "/entries/0/s3"),
])
def test_parse_registry_pointer(document, pointer):
    with pytest.raises(RegistrySchemaProblem) as e:
        parse_registry(document)
    assert e.value.ext["pointer"] == pointer
    assert e.value.status == 1


def test_load_registry(registry_file, tmp_path):
    path = registry_file(COMPLIANT)
    with not_raises(RegistrySchemaProblem):
        reg = load_registry(path)
    assert len(reg) == len(COMPLIANT)
    assert reg.lookup(CouplingKey.of((-1, 1, 2))) == 3

    with pytest.raises(RegistryNotFoundProblem):
        load_registry(str(tmp_path / "missing.json"))

    broken = tmp_path / "broken.json"
    broken.write_text("{entries: ")
    with pytest.raises(RegistrySchemaProblem):
        load_registry(str(broken))


def test_resolve_registry(settings, registry_file):
    reg = resolve_registry(None, settings)
    assert reg.lookup(CouplingKey.of((7, 7, 7))) == 1

    path = registry_file({(2, 2, -2): "1/3"}, default=2)
    reg = resolve_registry(path, settings)
    assert reg.lookup(CouplingKey.of((2, 2, -2))) == Fraction(1, 3)
    assert reg.lookup(CouplingKey.of((2, 2, 0))) == 2

    settings = settings.copy(update={"registry": path})
    assert resolve_registry(None, settings).lookup(CouplingKey.of((2, 2, -2))) == Fraction(1, 3)
