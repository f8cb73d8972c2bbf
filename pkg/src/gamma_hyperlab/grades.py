"""Exact truth values in [0, 1].

A grade is a rational number in the unit interval.  The lattice operations
are ``join = max`` and ``meet = min``; the empty join is 0 and the empty
meet is 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

GradeLike = Union["Grade", Fraction, int, str]


class Grade(Fraction):
    """A :class:`~fractions.Fraction` constrained to ``0 <= g <= 1``.

    Fractions are always stored reduced, so equality is value equality and
    ``Grade(2, 6) == Grade(1, 3)`` with identical numerator/denominator.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ValueError(f"grade {Fraction(self)} is outside [0, 1]")
        return self

    def __repr__(self):
        return f"Grade({self.numerator}, {self.denominator})"

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __reduce__(self):
        return (Grade, (self.numerator, self.denominator))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


ZERO = Grade(0)
ONE = Grade(1)


def as_grade(value: GradeLike) -> Grade:
    if isinstance(value, Grade):
        return value
    if isinstance(value, float):
        raise TypeError("grades are exact; pass a Fraction, int or 'p/q' string")
    return Grade(value)


def meet(a: Grade, b: Grade) -> Grade:
    return a if a <= b else b


def join(a: Grade, b: Grade) -> Grade:
    return a if a >= b else b


def join_all(values: Iterable[Grade]) -> Grade:
    """Supremum of a finite collection; 0 when the collection is empty."""
    return max(values, default=ZERO)


def meet_all(values: Iterable[Grade]) -> Grade:
    """Infimum of a finite collection; 1 when the collection is empty."""
    return min(values, default=ONE)
