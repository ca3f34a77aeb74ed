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
Table sweeps over weight ranges.

Each (q1, q2) pair is an independent work item; items run on a process
pool and rows are merged in item order, so output does not depend on
scheduling.
"""
import logging
from functools import partial
from multiprocessing import Pool
from typing import Any, Callable, List, Sequence, Tuple

from walg.arith import HalfInt, format_rational
from walg.structure import (
    CouplingRegistry, Family, Representation, make_mode, n_coeff, vanishing_p_report, wtilde_bracket
)
from walg.utils.range_parameter import parse_range

log = logging.getLogger("walg.cli")

Row = Tuple[str, ...]


def wedge_modes(q: Any) -> List[HalfInt]:
    """Modes m with |m| <= q - 1 and an integer gap."""
    q = HalfInt.of(q)
    top = q - 1
    return [-top + i for i in range(int((top + top).value) + 1)] if top >= 0 else []


def weight_pairs(q_range: str, step: Any = "1/2") -> List[Tuple[HalfInt, HalfInt]]:
    weights = parse_range(q_range, step=step)
    return [(q1, q2) for q1 in weights for q2 in weights]


def n_coeff_rows(pair: Tuple[HalfInt, HalfInt], p_max: int) -> List[Row]:
    q1, q2 = pair
    rows = []
    for m in wedge_modes(q1):
        for n in wedge_modes(q2):
            for p in range(p_max + 1):
                value = n_coeff(q1, q2, m, n, p, Representation.DEF)
                rows.append(tuple(str(x) for x in (q1, q2, m, n, p)) + (format_rational(value),))
    return rows


def bracket_rows(pair: Tuple[HalfInt, HalfInt], s: Any, reg: CouplingRegistry, truncate_p) -> List[Row]:
    q1, q2 = pair
    rows = []
    for m in wedge_modes(q1):
        for n in wedge_modes(q2):
            a = make_mode(Family.WTILDE, q1, m, s)
            b = make_mode(Family.WTILDE, q2, n, s)
            rows.append((str(a), str(b), str(wtilde_bracket(a, b, reg, truncate_p))))
    return rows


def vanishing_rows(pair: Tuple[HalfInt, HalfInt], s: Any) -> List[Row]:
    q1, q2 = pair
    return [
        (str(q1), str(q2), str(p), "vanishes" if vanishes else "survives")
        for p, vanishes in vanishing_p_report(q1, q2, s, s)
    ]


def run_sweep(work: Callable[[Any], List[Row]], items: Sequence[Any], max_workers: int = 1) -> List[Row]:
    """Map `work` over `items`, on a process pool when more than one worker is allowed."""
    log.info(f"Sweeping {len(items)} items with {max_workers} worker(s)")
    if max_workers <= 1 or len(items) <= 1:
        chunks = [work(item) for item in items]
    else:
        with Pool(processes=min(max_workers, len(items))) as pool:
            chunks = pool.map(work, items)
    return [row for chunk in chunks for row in chunk]


def n_coeff_table(q_range: str, p_max: int, step: Any = "1/2", max_workers: int = 1) -> List[Row]:
    return run_sweep(partial(n_coeff_rows, p_max=p_max), weight_pairs(q_range, step), max_workers)


def bracket_table(
    q_range: str, s: Any, reg: CouplingRegistry, truncate_p=None, step: Any = "1/2",
    max_workers: int = 1
) -> List[Row]:
    work = partial(bracket_rows, s=s, reg=reg, truncate_p=truncate_p)
    return run_sweep(work, weight_pairs(q_range, step), max_workers)


def vanishing_table(q_range: str, s: Any, step: Any = "1/2", max_workers: int = 1) -> List[Row]:
    return run_sweep(partial(vanishing_rows, s=s), weight_pairs(q_range, step), max_workers)
