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
import logging.config
import os
import re
from logging import LogRecord
from pathlib import Path
from typing import Optional

import yaml
from rich.console import Console
from rich.logging import RichHandler

RICH_FORMAT_REGEX = re.compile(r"\[/?[a-z ._#-]*\]")

DEFAULT_LOG_CONFIG = "logging.yml"
DEBUG_LOG_CONFIG = "logging-debug.yml"
TRUTHY = ("1", "true", "yes", "on")


class WalgHandler(RichHandler):
    """Rich console handler writing to stderr, so that emitted artifacts on
    stdout stay clean."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("console", Console(stderr=True))
        super().__init__(*args, **kwargs)


class StdoutFormatter(logging.Formatter):
    """Plain formatter dropping rich markup from messages."""

    def format(self, record: LogRecord) -> str:
        plain = logging.makeLogRecord(record.__dict__)
        plain.msg = RICH_FORMAT_REGEX.sub("", record.getMessage())
        plain.args = None
        return super().format(plain)


def configure_logging(debug: Optional[bool] = None) -> str:
    """
    Configure logging from a YAML dictConfig file.

    `LOG_CONFIG_FILE` wins over everything; otherwise `DEBUG` (or the
    `debug` argument) selects the debug configuration. A missing file
    falls back to a plain stderr setup.

    Returns
    -------
    str
        The configuration file actually used, or "basic".
    """
    if debug is None:
        debug = os.getenv("DEBUG", "false").lower() in TRUTHY
    default = DEBUG_LOG_CONFIG if debug else DEFAULT_LOG_CONFIG
    log_config_file = os.getenv('LOG_CONFIG_FILE', default)

    path = Path(log_config_file)
    if not path.is_file():
        logging.basicConfig(
            level=logging.DEBUG if debug else logging.WARNING,
            format="[%(levelname)s] %(name)s - %(message)s"
        )
        return "basic"

    with open(path, "r") as f:
        logging.config.dictConfig(yaml.safe_load(f))
    return log_config_file
