"""Exact numbers of the form a + b*sqrt(5) with rational a, b.

Comparisons against integers (and rationals) are decided exactly by
sign-cased squaring, never through floating point.  The golden mean
theta = (1+sqrt(5))/2 is represented with a = p + q/2, b = q/2 for a
value q*theta + p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class ExactBound:
    rational_part: Fraction
    surd_coeff: Fraction

    @classmethod
    def of(cls, a: Rat, b: Rat = 0) -> "ExactBound":
        return cls(Fraction(a), Fraction(b))

    @classmethod
    def theta(cls, q: Rat, p: Rat = 0) -> "ExactBound":
        """The value q*theta + p, theta the golden mean."""
        half = Fraction(q, 2)
        return cls(Fraction(p) + half, half)

    @property
    def is_rational(self) -> bool:
        return self.surd_coeff == 0

    @property
    def is_integer(self) -> bool:
        return self.surd_coeff == 0 and self.rational_part.denominator == 1

    def __add__(self, other: Union["ExactBound", Rat]) -> "ExactBound":
        if isinstance(other, ExactBound):
            return ExactBound(self.rational_part + other.rational_part,
                              self.surd_coeff + other.surd_coeff)
        return ExactBound(self.rational_part + other, self.surd_coeff)

    __radd__ = __add__

    def __sub__(self, other: Union["ExactBound", Rat]) -> "ExactBound":
        if isinstance(other, ExactBound):
            return ExactBound(self.rational_part - other.rational_part,
                              self.surd_coeff - other.surd_coeff)
        return ExactBound(self.rational_part - other, self.surd_coeff)

    def compare(self, x: Rat) -> int:
        """Exact sign of (self - x): -1, 0, or +1."""
        t = self.rational_part - x
        b = self.surd_coeff
        if b == 0:
            return (t > 0) - (t < 0)
        # self - x = t + b*sqrt(5), b != 0; zero is impossible (sqrt(5)
        # irrational), so decide by squaring on the correct sign branch.
        if b > 0:
            if t >= 0:
                return 1
            return 1 if 5 * b * b > t * t else -1
        if t <= 0:
            return -1
        return 1 if t * t > 5 * b * b else -1

    # Comparisons against plain numbers (the measured cardinalities).
    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactBound):
            return (self.rational_part == other.rational_part
                    and self.surd_coeff == other.surd_coeff)
        if isinstance(other, (int, Fraction)):
            return self.compare(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.rational_part, self.surd_coeff))

    def __lt__(self, other: Rat) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Rat) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Rat) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Rat) -> bool:
        return self.compare(other) >= 0

    def __float__(self) -> float:
        return float(self.rational_part) + float(self.surd_coeff) * 5 ** 0.5

    def exact_str(self) -> str:
        """Render as 'p' or 'q θ + p' with exact rational coefficients."""
        if self.surd_coeff == 0:
            return str(self.rational_part)
        q = 2 * self.surd_coeff
        p = self.rational_part - self.surd_coeff
        s = f"{q}θ"
        if p > 0:
            s += f"+{p}"
        elif p < 0:
            s += str(p)
        return s

    def decimal_str(self, digits: int = 15) -> str:
        """Decimal rendering with `digits` significant digits (exact
        integer arithmetic underneath, no binary float roundoff)."""
        import decimal

        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            root = decimal.Decimal(5).sqrt()
            a = (decimal.Decimal(self.rational_part.numerator)
                 / self.rational_part.denominator)
            b = (decimal.Decimal(self.surd_coeff.numerator)
                 / self.surd_coeff.denominator)
            val = a + b * root
            ctx.prec = digits
            return str(+val)

    def __str__(self) -> str:
        if self.surd_coeff == 0:
            return self.exact_str()
        return f"{self.exact_str()} ≈ {self.decimal_str()}"


def observed_meets(bound: ExactBound, observed: int) -> bool:
    """Exact test observed >= bound."""
    return bound.compare(observed) <= 0
