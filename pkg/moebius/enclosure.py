from cf_core import AccessBudget
from cf_core import CoefficientStream
from cf_core import ExtendedRational
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
import math
from .convergents import iter_continuants
from typing import Iterator
from typing import Literal
from typing import Optional

@dataclass(frozen=True)
class Enclosure:
    """closed interval [lo, hi] that contains the value of a continued fraction.

    Args:
        lo (ExtendedRational): S_n(1).
        hi (ExtendedRational): S_n(-1).
        depth (int): index n of the last coefficient used.
    """
    lo: ExtendedRational
    hi: ExtendedRational
    depth: int

    @property
    def width(self) -> Fraction:
        return self.hi.to_fraction() - self.lo.to_fraction()

    def contains(self, value: ExtendedRational | Fraction) -> bool:
        if isinstance(value, ExtendedRational):
            if value.is_infinite:
                return False
            value = value.to_fraction()
        return self.lo.to_fraction() <= value <= self.hi.to_fraction()

    def contains_enclosure(self, other: "Enclosure") -> bool:
        return self.contains(other.lo) and self.contains(other.hi)

    def decimal_bounds(self, digits: int) -> tuple[str, str]:
        """lo rounded down and hi rounded up to digits decimals."""
        return (
            format_decimal(self.lo.to_fraction(), digits, "floor"),
            format_decimal(self.hi.to_fraction(), digits, "ceiling"),
        )

    def decimal(self, digits: int) -> str:
        lo_str, hi_str = self.decimal_bounds(digits)
        return f"[{lo_str}, {hi_str}]"

def format_decimal(
    value: Fraction,
    digits: int,
    rounding: Literal["floor", "ceiling"]
) -> str:
    """exact directed rounding of a rational to digits decimals."""
    if digits < 0:
        raise ValueError(f"digits must be nonnegative. got {digits}.")
    scaled: Fraction = value * 10**digits
    rounded: int = math.floor(scaled) if rounding == "floor" else math.ceil(scaled)
    return f"{Decimal(rounded).scaleb(-digits):f}"

def _check_good(b: int, index: int) -> None:
    if abs(b) < 2:
        raise ValueError(
            f"enclosure needs |b_i| >= 2 for i >= 1, but b_{index} = {b}."
        )

def iter_enclosures(
    stream: CoefficientStream,
    budget: Optional[AccessBudget] = None
) -> Iterator[Enclosure]:
    """nested enclosures for depth 0, 1, ...

    with S_n(z) = (c_n z - c_{n-1}) / (d_n z - d_{n-1}) the endpoints are
    S_n(1) = (c_n - c_{n-1}) / (d_n - d_{n-1}) and S_n(-1) = (c_n + c_{n-1}) / (d_n + d_{n-1}).
    S_n is order preserving on the images of [-1, 1], so S_n(1) <= S_n(-1).
    """
    for depth, (c_n, d_n, c_prev, d_prev) in enumerate(iter_continuants(stream, budget)):
        if 1 <= depth:
            _check_good(stream.coefficient_at(depth, budget), depth)
        yield Enclosure(
            lo=ExtendedRational(c_n - c_prev, d_n - d_prev),
            hi=ExtendedRational(c_n + c_prev, d_n + d_prev),
            depth=depth,
        )

def enclose_value(
    stream: CoefficientStream,
    n: int,
    budget: Optional[AccessBudget] = None
) -> Enclosure:
    """enclosure [S_n(1), S_n(-1)] of the value, valid when |b_i| >= 2 for 1 <= i <= n.

    the enclosure at depth 0 is [b_0 - 1, b_0 + 1].
    """
    if n < 0:
        raise ValueError(f"depth must be nonnegative. got {n}.")
    enclosure: Optional[Enclosure] = None
    for enclosure in iter_enclosures(stream, budget):
        if enclosure.depth == n:
            return enclosure
    raise ValueError(
        f"stream exhausted before depth {n}. last depth: {None if enclosure is None else enclosure.depth}."
    )

def enclose_to_digits(
    stream: CoefficientStream,
    digits: int,
    max_depth: int,
    budget: Optional[AccessBudget] = None
) -> Enclosure:
    """shallowest enclosure narrower than 10^-digits, or the one at max_depth."""
    target: Fraction = Fraction(1, 10**digits)
    enclosure: Optional[Enclosure] = None
    for enclosure in iter_enclosures(stream, budget):
        if enclosure.width < target or max_depth <= enclosure.depth:
            return enclosure
    if enclosure is None:
        raise ValueError("cannot enclose the value of an empty stream.")
    return enclosure
