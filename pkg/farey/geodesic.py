from cf_core import ExtendedRational
from dataclasses import dataclass
from fractions import Fraction

@dataclass(frozen=True)
class Semicircle:
    """upper half of the circle with the given center on the real axis."""
    center: Fraction
    radius: Fraction

    def __post_init__(self) -> None:
        assert 0 < self.radius, f"radius must be positive. got {self.radius}."

    @property
    def endpoints(self) -> tuple[Fraction, Fraction]:
        return self.center - self.radius, self.center + self.radius

@dataclass(frozen=True)
class VerticalRay:
    """half-line from x on the real axis up to ∞."""
    x: Fraction

GeodesicArc = Semicircle | VerticalRay

def geodesic(u: ExtendedRational, v: ExtendedRational) -> GeodesicArc:
    """hyperbolic line in the upper half-plane between two boundary points."""
    if u == v:
        raise ValueError(f"a geodesic needs two distinct endpoints. got {u} twice.")
    if u.is_infinite:
        return VerticalRay(v.to_fraction())
    if v.is_infinite:
        return VerticalRay(u.to_fraction())
    a: Fraction = u.to_fraction()
    b: Fraction = v.to_fraction()
    return Semicircle((a + b) / 2, abs(a - b) / 2)
