from __future__ import annotations
from abc import ABC
from abc import abstractmethod
from .budget import AccessBudget
from dataclasses import dataclass
from typing import Callable
from typing import Optional

class CoefficientStream(ABC):
    """integer coefficient sequence b_0, b_1, ... of a negative continued fraction.

    three concrete forms exist: Finite, EventuallyPeriodic and Generator.
    all of them are immutable values.
    """
    @abstractmethod
    def coefficient_at(
        self,
        index: int,
        budget: Optional[AccessBudget] = None
    ) -> int:
        """return b_index.

        Args:
            index (int): nonnegative position.
            budget (Optional[AccessBudget]): charged once per generator call.
        """
        pass

    @property
    def length(self) -> Optional[int]:
        """number of coefficients, None for infinite streams."""
        return None

    def coefficients(
        self,
        count: int,
        budget: Optional[AccessBudget] = None
    ) -> list[int]:
        """first count coefficients (fewer if the stream is finite and shorter)."""
        if self.length is not None:
            count = min(count, self.length)
        return [self.coefficient_at(i, budget) for i in range(count)]

@dataclass(frozen=True)
class Finite(CoefficientStream):
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(b) for b in self.coeffs))

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def coefficient_at(
        self,
        index: int,
        budget: Optional[AccessBudget] = None
    ) -> int:
        if index < 0 or len(self.coeffs) <= index:
            raise IndexError(
                f"index {index} out of range for a finite stream of length {len(self.coeffs)}."
            )
        return self.coeffs[index]

@dataclass(frozen=True)
class EventuallyPeriodic(CoefficientStream):
    """prefix followed by period repeated forever."""
    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(int(b) for b in self.prefix))
        object.__setattr__(self, "period", tuple(int(b) for b in self.period))
        if len(self.period) == 0:
            raise ValueError("period of an eventually periodic stream must be nonempty.")

    def coefficient_at(
        self,
        index: int,
        budget: Optional[AccessBudget] = None
    ) -> int:
        if index < 0:
            raise IndexError(f"negative index {index}.")
        if index < len(self.prefix):
            return self.prefix[index]
        return self.period[(index - len(self.prefix)) % len(self.period)]

    def suffix_from(self, start: int) -> EventuallyPeriodic:
        """canonical stream b_start, b_start+1, ..."""
        if start <= len(self.prefix):
            return canonicalize(EventuallyPeriodic(self.prefix[start:], self.period))
        shift: int = (start - len(self.prefix)) % len(self.period)
        return canonicalize(
            EventuallyPeriodic((), self.period[shift:] + self.period[:shift])
        )

    def scan_end(self, start: int) -> int:
        """exclusive end of a scan from start that meets every distinct coefficient."""
        return max(start, len(self.prefix)) + len(self.period)

@dataclass(frozen=True)
class Generator(CoefficientStream):
    """stream defined by a pure function of the index.

    Φ images of a generator stream are again Generator values: a materialized head
    followed by gen(offset), gen(offset + 1), ...

    Args:
        gen (Callable[[int], int]): pure, total function index -> coefficient.
        horizon_hint (Optional[int]): how far analyses may scan.
        head (tuple[int, ...]): explicit leading coefficients.
        offset (int): generator index read at position len(head).
        name (Optional[str]): display name, e.g. "@example1".
    """
    gen: Callable[[int], int]
    horizon_hint: Optional[int] = None
    head: tuple[int, ...] = ()
    offset: int = 0
    name: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", tuple(int(b) for b in self.head))
        if self.horizon_hint is not None and self.horizon_hint < 1:
            raise ValueError(f"horizon_hint must be positive. got {self.horizon_hint}.")

    def coefficient_at(
        self,
        index: int,
        budget: Optional[AccessBudget] = None
    ) -> int:
        if index < 0:
            raise IndexError(f"negative index {index}.")
        if index < len(self.head):
            return self.head[index]
        if budget is not None:
            budget.charge()
        return int(self.gen(self.offset + index - len(self.head)))

    def with_head(self, head: tuple[int, ...], offset: int) -> Generator:
        return Generator(
            gen=self.gen,
            horizon_hint=self.horizon_hint,
            head=head,
            offset=offset,
            name=self.name,
        )

def coefficient_at(stream: CoefficientStream, index: int) -> int:
    return stream.coefficient_at(index)

def _minimal_period(period: tuple[int, ...]) -> tuple[int, ...]:
    size: int = len(period)
    for d in range(1, size + 1):
        if size % d == 0 and period[:d] * (size // d) == period:
            return period[:d]
    return period

def canonicalize(stream: EventuallyPeriodic) -> EventuallyPeriodic:
    """minimal period first, then absorb prefix entries that continue the period backwards.

    two streams with the same expansion canonicalize identically.
    """
    period: tuple[int, ...] = _minimal_period(stream.period)
    prefix: tuple[int, ...] = stream.prefix
    while 0 < len(prefix) and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1:] + period[:-1]
    if prefix == stream.prefix and period == stream.period:
        return stream
    return EventuallyPeriodic(prefix, period)
