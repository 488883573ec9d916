from cf_core import Generator
import math

def example1_coefficient(i: int) -> int:
    """blocks [k, 1, 2, ..., 2, 3] of length k for k = 3, 4, ..., starting at k(k-1)/2 - 3."""
    k: int = (1 + math.isqrt(1 + 8 * (i + 3))) // 2
    while i + 3 < k * (k - 1) // 2:
        k -= 1
    while k * (k + 1) // 2 <= i + 3:
        k += 1
    r: int = i - (k * (k - 1) // 2 - 3)
    if r == 0:
        return k
    if r == 1:
        return 1
    if r == k - 1:
        return 3
    return 2

def example2_coefficient(i: int) -> int:
    """[1, 2, 1, 3, 1, 4, ...]."""
    if i % 2 == 1:
        return (i + 3) // 2
    return 1

def example3_coefficient(i: int) -> int:
    """[1, 0, 2, 0, 3, 0, ...]."""
    if i % 2 == 0:
        return i // 2 + 1
    return 0

def example4_coefficient(i: int) -> int:
    """blocks [3]*k + [0] + [-3]*k for k = 1, 2, ..., starting at k^2 - 1."""
    k: int = math.isqrt(i + 1)
    r: int = i - (k * k - 1)
    if r < k:
        return 3
    if r == k:
        return 0
    return -3

BUILTINS: dict[str, Generator] = {
    "@example1": Generator(example1_coefficient, name="@example1"),
    "@example2": Generator(example2_coefficient, name="@example2"),
    "@example3": Generator(example3_coefficient, name="@example3"),
    "@example4": Generator(example4_coefficient, name="@example4"),
}
