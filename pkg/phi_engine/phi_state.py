from __future__ import annotations
from cf_core import CoefficientStream
from dataclasses import dataclass
from enum import Enum
from typing import Optional

class Rule(Enum):
    """rewrite applied by one Φ step."""
    ZERO = "zero"
    PLUS_ONE = "plus-one"
    MINUS_ONE = "minus-one"
    FIXED = "fixed"

    @classmethod
    def for_coefficient(cls, b: int) -> Rule:
        if b == 0:
            return cls.ZERO
        if b == 1:
            return cls.PLUS_ONE
        if b == -1:
            return cls.MINUS_ONE
        raise ValueError(f"coefficient {b} is not in {{0, 1, -1}}.")

@dataclass(frozen=True)
class StepInfo:
    """what one Φ step removed.

    Args:
        rule (Rule): rewrite that was applied.
        m (Optional[int]): position of the removed coefficient. None when FIXED.
        deleted_convergent_positions (tuple[int, ...]): positions of the convergents
            that disappear from the convergent sequence.
    """
    rule: Rule
    m: Optional[int] = None
    deleted_convergent_positions: tuple[int, ...] = ()

    @classmethod
    def fixed(cls) -> StepInfo:
        return cls(Rule.FIXED)

    @classmethod
    def removed(cls, rule: Rule, m: int) -> StepInfo:
        deleted: tuple[int, ...] = (m - 1, m) if rule == Rule.ZERO else (m - 1,)
        return cls(rule, m, deleted)

    @property
    def is_fixed(self) -> bool:
        return self.rule == Rule.FIXED

@dataclass(frozen=True)
class PhiState:
    """Φ^step applied to the original stream.

    positions 1, ..., stable_upto - 1 of stream all hold coefficients with |b| >= 2,
    so the next first-bad scan may start at stable_upto.
    """
    stream: CoefficientStream
    step: int = 0
    stable_upto: int = 1
