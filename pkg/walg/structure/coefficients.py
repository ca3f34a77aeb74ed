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
Structure-constant functions of the deformed algebra.

`n_coeff` evaluates the bracket coefficient N(q1, q2, m, n, p) either from
its defining sum or from the rewritten form used to build the OPE, and
`m_poly` is its top-degree part in the modes.
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Tuple

import sympy

from walg.arith import (
    HalfInt, Scalar, as_scalar, binomial, format_rational, normalize_scalar,
    pochhammer_falling, pochhammer_rising, sign
)
from walg.exceptions import UndefinedPRangeProblem

M, N = sympy.symbols("m n")


class Representation(str, Enum):
    DEF = "def"
    LEMMA = "lemma"


def p_range(s1: Any, s2: Any) -> List[int]:
    """
    Grades p contributing to the bracket of spins s1 and s2.

    Returns
    -------
    list of int
        Max(s1+s2-3, 0) ... Max(s1+s2+1, 0), inclusive.

    Raises
    ------
    UndefinedPRangeProblem
        If s1 + s2 is not an integer.
    """
    total = HalfInt.of(s1) + HalfInt.of(s2)
    if not total.is_integer:
        raise UndefinedPRangeProblem(s1, s2)
    total = int(total)
    return list(range(max(total - 3, 0), max(total + 1, 0) + 1))


def _check_grade(p: Any) -> int:
    if int(p) != p or p < 0:
        raise ValueError(f"Grade p must be a non-negative integer, got {p}")
    return int(p)


def _n_def(q1, q2, m, n, p: int) -> Scalar:
    total = Fraction(0)
    for x in range(p + 1):
        total += (
            sign(p - x) * binomial(p, x)
            * pochhammer_falling(m + q1 - 1, p - x)
            * pochhammer_falling(-m + q1 - 1, x)
            * pochhammer_falling(n + q2 - 1, x)
            * pochhammer_falling(-n + q2 - 1, p - x)
        )
    return total


def _n_lemma(q1, q2, m, n, p: int) -> Scalar:
    total = Fraction(0)
    for x in range(p + 1):
        total += (
            sign(p - x) * binomial(p, x)
            * pochhammer_falling(2 * q2 - 2 - x, p - x)
            * pochhammer_rising(2 * q1 - 1 - p, x)
            * pochhammer_falling(m + q1 - 1, p - x)
            * pochhammer_falling(n + q2 - 1, x)
        )
    return total


def n_coeff(
    q1: Any, q2: Any, m: Any, n: Any, p: int,
    rep: Representation = Representation.DEF
) -> Scalar:
    """
    Bracket coefficient N(q1, q2, m, n, p).

    Parameters
    ----------
    q1, q2
        Weights, half-integers or sympy expressions.
    m, n
        Modes, half-integers or sympy symbols for a polynomial answer.
    p
        Non-negative grade.
    rep
        `def` for the defining sum, `lemma` for the rewritten sum. Both
        agree identically.

    Returns
    -------
    Scalar
        Exact value; a sympy polynomial when any argument is symbolic.
    """
    p = _check_grade(p)
    q1, q2, m, n = (as_scalar(v) for v in (q1, q2, m, n))
    if Representation(rep) is Representation.DEF:
        value = _n_def(q1, q2, m, n, p)
    else:
        value = _n_lemma(q1, q2, m, n, p)
    if isinstance(value, sympy.Basic):
        return normalize_scalar(sympy.expand(value))
    return value


def n_closed_form_p1(q1: Any, q2: Any, m: Any, n: Any) -> Scalar:
    """N at p = 1: 2[n(q1 - 1) - m(q2 - 1)]."""
    q1, q2, m, n = (as_scalar(v) for v in (q1, q2, m, n))
    return normalize_scalar(2 * (n * (q1 - 1) - m * (q2 - 1)))


class BivariatePolynomial:
    """Polynomial in the formal mode variables m and n."""

    def __init__(self, monomials: Dict[Tuple[int, int], Any] = None):
        self._monomials = {}
        for degrees, c in (monomials or {}).items():
            c = normalize_scalar(as_scalar(c))
            if c != 0:
                self._monomials[tuple(degrees)] = c

    @classmethod
    def from_expr(cls, expr: Any) -> "BivariatePolynomial":
        poly = sympy.Poly(sympy.expand(sympy.sympify(expr)), M, N)
        return cls({degrees: c for degrees, c in poly.terms()})

    @property
    def monomials(self) -> Dict[Tuple[int, int], Scalar]:
        return dict(self._monomials)

    @property
    def expr(self) -> sympy.Expr:
        return sympy.Add(*[
            sympy.sympify(c) * M ** i * N ** j for (i, j), c in self._monomials.items()
        ])

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._monomials), default=0)

    def homogeneous_part(self, degree: int) -> "BivariatePolynomial":
        return BivariatePolynomial({
            (i, j): c for (i, j), c in self._monomials.items() if i + j == degree
        })

    def scale(self, factor: Any) -> "BivariatePolynomial":
        factor = as_scalar(factor)
        return BivariatePolynomial({k: factor * c for k, c in self._monomials.items()})

    def evaluate(self, m: Any, n: Any) -> Scalar:
        m, n = as_scalar(m), as_scalar(n)
        total = Fraction(0)
        for (i, j), c in self._monomials.items():
            total += c * m ** i * n ** j
        return normalize_scalar(total)

    def is_zero(self) -> bool:
        return not self._monomials

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int], Scalar]]:
        return iter(sorted(self._monomials.items(), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return sympy.expand(self.expr - other.expr) == 0

    __hash__ = None

    def __str__(self):
        if not self._monomials:
            return "0"
        return str(sympy.expand(self.expr))


def m_poly(q1: Any, q2: Any, p: int) -> BivariatePolynomial:
    """
    Top-degree generator M(q1, q2, m, n, p).

    The sum is (-1)^x binom(p, x) [2q2-2-x]_{p-x} (2q1-1-p)_x m^{p-x} n^x
    over x = 0..p. Its m, n -> d/dzbar, d/dwbar substitution yields the
    OPE template.
    """
    p = _check_grade(p)
    q1, q2 = as_scalar(q1), as_scalar(q2)
    monomials = {}
    for x in range(p + 1):
        monomials[(p - x, x)] = (
            sign(x) * binomial(p, x)
            * pochhammer_falling(2 * q2 - 2 - x, p - x)
            * pochhammer_rising(2 * q1 - 1 - p, x)
        )
    return BivariatePolynomial(monomials)


def n_poly(q1: Any, q2: Any, p: int, rep: Representation = Representation.DEF) -> BivariatePolynomial:
    """N(q1, q2, m, n, p) as a polynomial in m and n."""
    return BivariatePolynomial.from_expr(n_coeff(q1, q2, M, N, p, rep))


def vanishing_p_report(q1: Any, q2: Any, s1: Any, s2: Any) -> List[Tuple[int, bool]]:
    """
    For each grade of `p_range(s1, s2)`, whether N(q1, q2, m, n, p) is the
    zero polynomial in (m, n).
    """
    report = []
    for p in p_range(s1, s2):
        report.append((p, n_poly(q1, q2, p).is_zero()))
    return report


def describe_vanishing(report: List[Tuple[int, bool]]) -> str:
    return ", ".join(f"p={p}: {'vanishes' if v else 'survives'}" for p, v in report)


def format_polynomial_coefficients(poly: BivariatePolynomial) -> List[Tuple[str, str]]:
    return [(f"m^{i} n^{j}", format_rational(c)) for (i, j), c in poly]
