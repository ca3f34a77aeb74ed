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

import os
from contextlib import contextmanager
from fractions import Fraction

import orjson
import pytest

from walg.config import Settings
from walg.structure import CouplingRegistry

os.environ['CONFIG_FILE'] = "./walg-config.env"

# Couplings entering the four Jacobi constraints.
CONSTRAINT_KEYS = [
    (0, 1, 1), (-2, 2, 2), (1, 1, 2), (0, 2, 2),
    (-1, 1, 1), (-1, 1, 2), (1, 1, 1), (0, 0, 1),
]

COMPLIANT = {
    (0, 1, 1): 2, (-2, 2, 2): 1, (1, 1, 2): 2, (0, 2, 2): 1,
    (-1, 1, 1): 1, (-1, 1, 2): 3, (1, 1, 1): 2, (0, 0, 1): 1,
}

HALVES_COMPLIANT = {
    (0, 1, 1): 1, (-2, 2, 2): 1, (1, 1, 2): 1, (0, 2, 2): 1,
    (-1, 1, 1): Fraction(1, 2), (-1, 1, 2): Fraction(3, 2), (1, 1, 1): 1, (0, 0, 1): Fraction(1, 2),
}


def get_settings():
    return Settings(
        _env_file=os.getenv("CONFIG_FILE")
    )


@pytest.fixture
def settings():
    return get_settings()


@pytest.fixture
def unit_registry():
    return CouplingRegistry.uniform(1)


@pytest.fixture
def ones_registry():
    return CouplingRegistry({key: 1 for key in CONSTRAINT_KEYS})


def registry_document(entries, default=None):
    document = {
        "entries": [
            {"s1": s1, "s2": s2, "s3": s3, "kappa": str(kappa)}
            for (s1, s2, s3), kappa in entries.items()
        ]
    }
    if default is not None:
        document["default"] = str(default)
    return document


@pytest.fixture
def registry_file(tmp_path):
    def write(entries, default=None, name="registry.json"):
        path = tmp_path / name
        path.write_bytes(orjson.dumps(registry_document(entries, default)))
        return str(path)
    return write


@contextmanager
def not_raises(expected_exc):
    try:
        yield

    except expected_exc as err:
        raise AssertionError(
            f"Did raise exception {repr(expected_exc)} when it should not!"
        )

    except Exception as err:
        raise AssertionError(
            f"An unexpected exception {repr(err)} raised."
        )
