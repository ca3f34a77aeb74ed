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
Coupling registry files.

    {"default": "1", "entries": [{"s1": 2, "s2": 2, "s3": -2, "kappa": "1/3"}]}

`"s": ["2", "2", "-2"]` is accepted in place of the three spin fields.

Numbers are integers or exact rational strings; floats are rejected.
"""
import logging
import os
from typing import List, Optional, Union

import orjson
from pydantic import BaseModel, Extra, StrictInt, StrictStr, ValidationError, root_validator, validator

from walg.arith import parse_rational
from walg.config import Settings
from walg.exceptions import RegistryNotFoundProblem, RegistrySchemaProblem
from walg.structure import CouplingKey, CouplingRegistry

log = logging.getLogger("walg.cli")

Rational = Union[StrictInt, StrictStr]


def _rational(value):
    if parse_rational(value, raise_exc=False) is None:
        raise ValueError(f"{value!r} is not an exact rational")
    return value


def _half_integer(value):
    parsed = parse_rational(value, raise_exc=False)
    if parsed is None or parsed.denominator not in (1, 2):
        raise ValueError(f"{value!r} is not an integer or half-integer")
    return value


class CouplingEntry(BaseModel):
    s1: Rational
    s2: Rational
    s3: Rational
    kappa: Rational

    class Config:
        extra = Extra.forbid

    @root_validator(pre=True)
    def spread_spins(cls, values):
        if 's' not in values:
            return values
        values = dict(values)
        spins = values.pop('s')
        if not isinstance(spins, list) or len(spins) != 3:
            raise ValueError("s must list exactly three spins")
        values.update(zip(('s1', 's2', 's3'), spins))
        return values

    _spins = validator('s1', 's2', 's3', allow_reuse=True)(_half_integer)
    _kappa = validator('kappa', allow_reuse=True)(_rational)

    @property
    def key(self) -> CouplingKey:
        return CouplingKey(parse_rational(self.s1), parse_rational(self.s2), parse_rational(self.s3))


class RegistryDocument(BaseModel):
    default: Optional[Rational] = None
    entries: List[CouplingEntry] = []

    class Config:
        extra = Extra.forbid

    @validator('default')
    def default_is_rational(cls, value):
        return None if value is None else _rational(value)


def _pointer(loc) -> str:
    return "/" + "/".join(str(part) for part in loc if part != "__root__")


def parse_registry(document) -> CouplingRegistry:
    """
    Build a registry from a decoded JSON document.

    Raises
    ------
    RegistrySchemaProblem
        With the JSON pointer of the first offending value, or of the
        second occurrence of a duplicated key.
    """
    try:
        parsed = RegistryDocument.parse_obj(document)
    except ValidationError as e:
        error = e.errors()[0]
        raise RegistrySchemaProblem(_pointer(error['loc']), error['msg'])

    entries = {}
    for i, entry in enumerate(parsed.entries):
        key = entry.key
        if key in entries:
            raise RegistrySchemaProblem(f"/entries/{i}", f"duplicate key {key}")
        entries[key] = parse_rational(entry.kappa)
    return CouplingRegistry(entries, parsed.default)


def load_registry(path: Union[str, os.PathLike]) -> CouplingRegistry:
    if not os.path.isfile(path):
        raise RegistryNotFoundProblem(str(path))
    with open(path, 'rb') as f:
        content = f.read()
    try:
        document = orjson.loads(content)
    except orjson.JSONDecodeError as e:
        raise RegistrySchemaProblem("", f"invalid JSON: {e}")
    registry = parse_registry(document)
    log.debug(f"Loaded {registry!r} from {path}")
    return registry


def resolve_registry(path: Optional[str], settings: Settings) -> CouplingRegistry:
    """Registry from `path`, else from the configured path, else uniform."""
    path = path or settings.registry
    if path:
        return load_registry(path)
    return CouplingRegistry.uniform(settings.default_kappa)
