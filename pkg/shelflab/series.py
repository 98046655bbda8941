"""Truncated formal power series with exact rational coefficients."""
from __future__ import annotations

import dataclasses as dcl
from fractions import Fraction
import math


Number = int | Fraction


@dcl.dataclass(frozen=True)
class PowerSeries:
    """Coefficients of x^0 .. x^(precision-1)."""

    coefficients: tuple[Fraction, ...]

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    @classmethod
    def polynomial(cls, coefficients: list[Number], precision: int) -> PowerSeries:
        padded = list(coefficients[:precision]) + [0] * (precision - len(coefficients))
        return cls(tuple(Fraction(c) for c in padded))

    @classmethod
    def exp(cls, precision: int) -> PowerSeries:
        """e^x."""
        return cls(tuple(Fraction(1, math.factorial(k)) for k in range(precision)))

    @classmethod
    def geometric(cls, precision: int) -> PowerSeries:
        """1/(1-x)."""
        return cls((Fraction(1),) * precision)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        size = min(self.precision, other.precision)
        return PowerSeries(tuple(
            a + b for a, b in zip(self.coefficients[:size], other.coefficients[:size])
        ))

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return self + (-other)

    def __mul__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(c * other for c in self.coefficients))
        size = min(self.precision, other.precision)
        return PowerSeries(tuple(
            sum(
                (self.coefficients[i] * other.coefficients[k - i]
                 for i in range(k + 1)),
                Fraction(0),
            )
            for k in range(size)
        ))

    __rmul__ = __mul__

    def egf_terms(self) -> list[int]:
        """n! times the coefficient of x^n; these must all be integers."""
        terms = []
        for n, coefficient in enumerate(self.coefficients):
            value = coefficient * math.factorial(n)
            if value.denominator != 1:
                raise ValueError(f"Term {n} is not an integer: {value}")
            terms.append(int(value))
        return terms
