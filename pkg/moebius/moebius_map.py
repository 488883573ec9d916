from __future__ import annotations
from cf_core import ExtendedRational
from dataclasses import dataclass

@dataclass(frozen=True)
class MoebiusMap:
    """z -> (az + b) / (cz + d) with integer entries and ad - bc = 1 (modular group)."""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        assert self.a * self.d - self.b * self.c == 1, \
            f"determinant of {self} is not 1."

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1, 0, 0, 1)

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def compose(self, other: MoebiusMap) -> MoebiusMap:
        """self ∘ other, i.e. the matrix product self @ other."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> MoebiusMap:
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, x: ExtendedRational) -> ExtendedRational:
        # x = num/den in homogeneous coordinates, infinity being (1 : 0).
        return ExtendedRational(
            self.a * x.num + self.b * x.den,
            self.c * x.num + self.d * x.den,
        )

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return self.compose(other)

    def __call__(self, x: ExtendedRational) -> ExtendedRational:
        return self.apply(x)

def s_map(b: int) -> MoebiusMap:
    """s(z) = b - 1/z."""
    return MoebiusMap(b, -1, 1, 0)

def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    return f.compose(g)

def apply(f: MoebiusMap, x: ExtendedRational) -> ExtendedRational:
    return f.apply(x)

def composite_map(coeffs: list[int] | tuple[int, ...]) -> MoebiusMap:
    """S = s_0 ∘ s_1 ∘ ... ∘ s_n for the given coefficients (identity when empty)."""
    result: MoebiusMap = MoebiusMap.identity()
    for b in coeffs:
        result = result.compose(s_map(b))
    return result
