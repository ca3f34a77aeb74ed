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
from typing import Any, List, Optional

from walg.arith import HalfInt, parse_rational


def _bound(value: str) -> Optional[HalfInt]:
    value = value.strip()
    if value == '':
        return None
    parsed = parse_rational(value, raise_exc=False)
    if parsed is None or parsed.denominator not in (1, 2):
        raise ValueError(f'Invalid range bound: {value}')
    return HalfInt.of(parsed)


def is_range(value: Any) -> bool:
    """
    Whether a value is a half-integer range or not.
    Valid range examples: "2:4", "3/2:5", ":4", "2:"

    Parameters
    ----------
    value
        Value expected to be formatted as a range.

    Returns
    -------
    bool
        Whether it is a range.
    """
    if not isinstance(value, str):
        return False
    split = value.split(':')
    if len(split) != 2:
        return False
    try:
        for bound in split:
            _bound(bound)
    except ValueError:
        return False
    return True


def parse_range(
    walg_range: Any, mini: Any = None, maxi: Any = None, step: Any = "1/2"
) -> List[HalfInt]:
    """
    Expand a range to the list of its values. Both bounds are inclusive;
    implicit low and high bounds are replaced by `mini` and `maxi`.

    Parameters
    ----------
    walg_range
        Range to expand, e.g. "2:4".
    mini
        Value replacing implicit low bound.
    maxi
        Value replacing implicit high bound.
    step
        Either 1/2 or 1.

    Returns
    -------
    list of HalfInt
        Values, always in ascending order.

    Raises
    ------
    ValueError
        If `walg_range` is not a range or a needed bound is missing.
    """
    if not is_range(walg_range):
        raise ValueError(f'Invalid literal for Range(): {walg_range}')

    low, high = [_bound(v) for v in walg_range.split(':')]
    low = HalfInt.of(mini) if low is None and mini is not None else low
    high = HalfInt.of(maxi) if high is None and maxi is not None else high
    if low is None or high is None:
        raise ValueError(f'Range {walg_range} has an implicit bound and no default')

    step = HalfInt.of(step)
    if step.doubled not in (1, 2):
        raise ValueError(f'Range step must be 1/2 or 1, got {step}')

    low, high = min(low, high), max(low, high)
    values = []
    current = low
    while current <= high:
        values.append(current)
        current = current + step
    return values
