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
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseSettings, Extra

logger = logging.getLogger("walg.app")


class Settings(BaseSettings):
    registry: Optional[str] = None
    default_kappa: str = "1"
    output_format: str = "text"

    max_workers: int = 4
    alpha_max: int = 8

    # Fermionic couplings are looked up at s0 = s1 + s2 - offset.
    g_coupling_offset: int = 2

    class Config:
        env_prefix = "walg_"
        env_file = "walg-config.env"
        env_file_encoding = "utf-8"
        extra = Extra.ignore


@lru_cache()
def get_settings():
    env_file = os.getenv("CONFIG_FILE", "walg-config.env")
    logger.debug(f"[green]Loading config from {env_file}")
    return Settings(_env_file=env_file)
