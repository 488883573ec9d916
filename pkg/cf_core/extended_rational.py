from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
import math

@total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    """reduced rational num/den with den >= 0.

    the point at infinity is stored exactly as 1/0. any pair (a, b) that is not (0, 0)
    is accepted and normalized, so ExtendedRational(2, -4) == ExtendedRational(-1, 2)
    and ExtendedRational(-3, 0) == ExtendedRational(1, 0).
    """
    num: int
    den: int = 1

    def __post_init__(self) -> None:
        num: int = int(self.num)
        den: int = int(self.den)
        if num == 0 and den == 0:
            raise ValueError("0/0 is not an extended rational.")
        if den == 0:
            num = 1
        else:
            g: int = math.gcd(num, den)
            num, den = num // g, den // g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def infinity(cls) -> ExtendedRational:
        return cls(1, 0)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> ExtendedRational:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no Fraction representation.")
        return Fraction(self.num, self.den)

    def __lt__(self, other: ExtendedRational) -> bool:
        # infinity sorts above every finite value.
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        if other.is_infinite:
            return not self.is_infinite
        if self.is_infinite:
            return False
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self.num}/{self.den}"

    def label(self) -> str:
        """short label: integers without denominator, infinity as the symbol."""
        if self.is_infinite:
            return "∞"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

INFINITY: ExtendedRational = ExtendedRational.infinity()
