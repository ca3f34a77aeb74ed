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
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, conint, validator

from walg.utils.range_parameter import is_range


class OutputFormat(str, Enum):
    JSON = "json"
    LATEX = "latex"
    TEXT = "text"


class TableKind(str, Enum):
    N_COEFF = "n-coeff"
    BRACKET = "bracket"
    VANISHING = "vanishing"


class JobConfig(BaseModel):
    """
    A table sweep. Every bound is finite and non-negative.
    """
    command: TableKind
    q_range: str = Field(..., description="Inclusive weight range, e.g. 2:4")
    q_step: str = Field("1/2", description="Step of the weight range, 1/2 or 1")
    p_max: conint(ge=0) = 8
    truncate_p: Optional[conint(ge=0)] = None
    s: str = Field("2", description="Spin used by bracket and vanishing tables")
    registry: Optional[str] = None
    output_format: OutputFormat = OutputFormat.TEXT
    output: Optional[str] = None
    max_workers: conint(ge=1) = 4

    @validator('q_range')
    def q_range_is_range(cls, value):
        if not is_range(value) or value.strip().startswith(':') or value.strip().endswith(':'):
            raise ValueError(f"{value!r} is not a finite range LOW:HIGH")
        return value
