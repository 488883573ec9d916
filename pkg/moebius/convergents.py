from cf_core import AccessBudget
from cf_core import CoefficientStream
from cf_core import ExtendedRational
from cf_core import Finite
from cf_core import INFINITY
from dataclasses import dataclass
from itertools import islice
from typing import Iterator
from typing import Optional

@dataclass(frozen=True)
class ConvergentSeq:
    """convergents v_0, v_1, ... with the companion numerators c_n and denominators d_n.

    S_n(z) = (c_n z - c_{n-1}) / (d_n z - d_{n-1}), so v_n = S_n(∞) = c_n / d_n.
    d_n may be negative; the entries are normalized extended rationals.
    """
    entries: tuple[ExtendedRational, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def is_unimodular(self) -> bool:
        """c_{n-1} d_n - c_n d_{n-1} = 1 for every n, seeds c_{-1} = 1, d_{-1} = 0 included."""
        c_prev, d_prev = 1, 0
        for c_n, d_n in zip(self.c, self.d):
            if c_prev * d_n - c_n * d_prev != 1:
                return False
            c_prev, d_prev = c_n, d_n
        return True

def iter_continuants(
    stream: CoefficientStream,
    budget: Optional[AccessBudget] = None
) -> Iterator[tuple[int, int, int, int]]:
    """yield (c_n, d_n, c_{n-1}, d_{n-1}) for n = 0, 1, ... while the stream lasts."""
    c_prev, c_n = 0, 1
    d_prev, d_n = -1, 0
    index: int = 0
    while stream.length is None or index < stream.length:
        b: int = stream.coefficient_at(index, budget)
        c_prev, c_n = c_n, b * c_n - c_prev
        d_prev, d_n = d_n, b * d_n - d_prev
        yield c_n, d_n, c_prev, d_prev
        index += 1

def convergents(
    stream: CoefficientStream,
    n: int,
    budget: Optional[AccessBudget] = None
) -> ConvergentSeq:
    """first n convergents through c_n = b_n c_{n-1} - c_{n-2}, d_n = b_n d_{n-1} - d_{n-2}.

    Args:
        stream (CoefficientStream): coefficients b_0, b_1, ...
        n (int): number of convergents.

    Returns:
        ConvergentSeq: entries[k] = [b_0, ..., b_k].
    """
    if n < 0:
        raise ValueError(f"number of convergents must be nonnegative. got {n}.")
    if stream.length is not None and stream.length < n:
        raise ValueError(
            f"stream exhausted: {n} convergents requested from {stream.length} coefficients."
        )
    entries: list[ExtendedRational] = []
    cs: list[int] = []
    ds: list[int] = []
    for c_n, d_n, _, _ in islice(iter_continuants(stream, budget), n):
        entries.append(ExtendedRational(c_n, d_n))
        cs.append(c_n)
        ds.append(d_n)
    return ConvergentSeq(tuple(entries), tuple(cs), tuple(ds))

def evaluate_finite(stream: Finite) -> ExtendedRational:
    """exact value of [b_0, ..., b_n]. the empty continued fraction is ∞."""
    value: ExtendedRational = INFINITY
    for c_n, d_n, _, _ in iter_continuants(stream):
        value = ExtendedRational(c_n, d_n)
    return value
