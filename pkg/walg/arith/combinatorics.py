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

import math
from fractions import Fraction
from typing import Any

import sympy

from walg.arith.rational import Scalar, as_scalar


def _check_length(n: Any) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise ValueError(f"Pochhammer length must be an integer, got {n}")
    n = int(n)
    if n < 0:
        raise ValueError(f"Pochhammer length must be non-negative, got {n}")
    return n


def _product(a: Scalar, n: int, step: int) -> Scalar:
    if isinstance(a, Fraction):
        numerator, denominator = a.numerator, a.denominator
        product = 1
        for i in range(n):
            product *= numerator + step * i * denominator
        return Fraction(product, denominator ** n)

    product = sympy.Integer(1)
    for i in range(n):
        product *= a + step * i
    return sympy.expand(product)


def pochhammer_rising(a: Any, n: int) -> Scalar:
    """
    Ascending Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).

    Parameters
    ----------
    a
        Rational base, or a sympy expression.
    n
        Non-negative length. (a)_0 = 1.

    Returns
    -------
    Scalar
        Exact value.
    """
    return _product(as_scalar(a), _check_length(n), 1)


def pochhammer_falling(a: Any, n: int) -> Scalar:
    """
    Descending Pochhammer symbol [a]_n = a (a-1) ... (a-n+1).
    """
    return _product(as_scalar(a), _check_length(n), -1)


def factorial(n: Any) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ValueError(f"Factorial is only evaluated on non-negative integers, got {n}")
    return math.factorial(int(n))


def binomial(a: Any, k: Any) -> Scalar:
    """
    Generalized binomial [a]_k / k!, zero for negative k.

    The lower argument must be an integer; the upper one may be any
    rational or symbolic value.
    """
    if isinstance(k, bool) or int(k) != k:
        raise ValueError(f"Binomial lower argument must be an integer, got {k}")
    k = int(k)
    if k < 0:
        return Fraction(0)
    value = pochhammer_falling(a, k)
    if isinstance(value, Fraction):
        return value / math.factorial(k)
    return value / sympy.Integer(math.factorial(k))


def sign(exponent: Any) -> int:
    """(-1)^exponent for an integer exponent."""
    if int(exponent) != exponent:
        raise ValueError(f"Sign exponent must be an integer, got {exponent}")
    return -1 if int(exponent) % 2 else 1
