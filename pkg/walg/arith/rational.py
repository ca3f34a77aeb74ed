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
Exact scalars.

Numeric values are `fractions.Fraction`; anything that carries an unknown
(structure constants still to be solved, symbolic weights or modes) is a
sympy expression. `HalfInt` holds weights, spins and mode indices.
"""
import numbers
import re
from fractions import Fraction
from functools import total_ordering
from typing import Any, Union

import sympy

Scalar = Union[Fraction, sympy.Expr]

RATIONAL_REGEX = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value: Any, raise_exc: bool = True) -> Fraction:
    """
    Parse an exact rational from "p/q", "p" or an int.

    Parameters
    ----------
    value
        Value to parse. Floats are refused.
    raise_exc
        Whether to raise on invalid input, or return None.

    Returns
    -------
    Fraction
        The value in lowest terms.

    Raises
    ------
    ValueError
        If `value` is not an exact rational literal.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, HalfInt):
        return value.value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        match = RATIONAL_REGEX.match(value.replace("−", "-"))
        if match is not None:
            numerator, denominator = match.groups()
            if denominator is None or int(denominator) != 0:
                return Fraction(int(numerator), int(denominator or 1))
    if raise_exc:
        raise ValueError(f"Invalid literal for Rational(): {value}")
    return None


def format_rational(value: Any) -> str:
    """Exact string form: "3", "-1/2". Symbolic values use sympy's printer."""
    if isinstance(value, sympy.Basic):
        value = normalize_scalar(value)
        if isinstance(value, sympy.Basic):
            return str(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@total_ordering
class HalfInt:
    """An exact multiple of 1/2, stored as twice its value."""
    __slots__ = ("_doubled",)

    def __init__(self, doubled: int):
        if isinstance(doubled, bool) or not isinstance(doubled, int):
            raise TypeError(f"HalfInt expects an int, got {doubled!r}")
        self._doubled = doubled

    @classmethod
    def of(cls, value: Any) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        fraction = parse_rational(value)
        if fraction.denominator not in (1, 2):
            raise ValueError(f"{value} is not a half-integer")
        return cls(fraction.numerator * (2 // fraction.denominator))

    @property
    def doubled(self) -> int:
        return self._doubled

    @property
    def numerator(self) -> int:
        return self._doubled if self._doubled % 2 else self._doubled // 2

    @property
    def denominator(self) -> int:
        return 2 if self._doubled % 2 else 1

    @property
    def value(self) -> Fraction:
        return Fraction(self._doubled, 2)

    @property
    def is_integer(self) -> bool:
        return self._doubled % 2 == 0

    def _sympy_(self):
        return sympy.Rational(self._doubled, 2)

    def __int__(self):
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self._doubled // 2

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self._doubled + other._doubled)
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self._doubled + 2 * other)
        if isinstance(other, Fraction):
            return self.value + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return HalfInt(-self._doubled)

    def __abs__(self):
        return HalfInt(abs(self._doubled))

    def __sub__(self, other):
        if isinstance(other, (HalfInt, int, Fraction)) and not isinstance(other, bool):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (HalfInt, int, Fraction)) and not isinstance(other, bool):
            return self.value * Fraction(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self._doubled == other._doubled
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self._doubled < other._doubled
        if isinstance(other, (int, Fraction)):
            return self.value < other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return format_rational(self.value)

    def __repr__(self):
        return f"HalfInt({self})"


numbers.Rational.register(HalfInt)


def as_scalar(value: Any) -> Scalar:
    """Coerce ints, HalfInts, literals and sympy numbers to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Basic):
        return normalize_scalar(value)
    return parse_rational(value)


def normalize_scalar(value: Scalar) -> Scalar:
    if isinstance(value, sympy.Basic):
        value = sympy.cancel(sympy.sympify(value))
        if value.is_Rational:
            return Fraction(int(value.p), int(value.q))
        return value
    return value


def is_zero(value: Scalar) -> bool:
    if isinstance(value, sympy.Basic):
        return normalize_scalar(value) == 0
    return value == 0


def is_symbolic(value: Any) -> bool:
    return isinstance(value, sympy.Basic) and not value.is_Rational


def to_sympy(value: Any) -> sympy.Expr:
    if isinstance(value, sympy.Basic):
        return value
    value = as_scalar(value)
    return sympy.Rational(value.numerator, value.denominator)


def exact_sqrt(value: Any) -> Fraction:
    """
    Exact rational square root.

    Raises
    ------
    ValueError
        If `value` is negative or not the square of a rational.
    """
    value = parse_rational(value)
    if value < 0:
        raise ValueError(f"{value} has no real square root")
    numerator = sympy.integer_nthroot(value.numerator, 2)
    denominator = sympy.integer_nthroot(value.denominator, 2)
    if not (numerator[1] and denominator[1]):
        raise ValueError(f"{value} is not a perfect square")
    return Fraction(int(numerator[0]), int(denominator[0]))
