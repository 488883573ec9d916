from __future__ import annotations
from dataclasses import dataclass
from dataclasses import fields
from dataclasses import replace
import json
from pathlib import Path
from typing import Any
from typing import Optional

class BudgetExhaustedError(RuntimeError):
    """raised when a generator stream is read beyond the allowed work."""

@dataclass(frozen=True)
class StepBudget:
    """limits and thresholds shared by tracing and classification.

    Args:
        max_steps (int): maximum number of Φ applications.
        access_budget (int): maximum number of generator calls per trace.
        history_cap (int): maximum number of canonical states kept for cycle lookup.
        drift_lookback (int): how many earlier states of the same shape are compared
            when looking for a drifting coefficient.
        horizon (int): scan horizon for generators without a horizon hint.
        max_enclosure_depth (int): deepest convergent used to narrow an enclosure.
        converge_min_position (int): empirical mode. first-bad position that counts as escaping.
        converge_window (int): empirical mode. number of trailing steps that must be monotone.
        diverge_recurrences (int): empirical mode. recurrences of a head window that count as divergence.
        extended_recurrences (int): empirical mode. strictly increasing q values that count as escape to an extended rational.
    """
    max_steps: int = 10_000
    access_budget: int = 1_000_000
    history_cap: int = 50_000
    drift_lookback: int = 64
    horizon: int = 10_000
    max_enclosure_depth: int = 5_000
    converge_min_position: int = 50
    converge_window: int = 100
    diverge_recurrences: int = 5
    extended_recurrences: int = 20

    def __post_init__(self) -> None:
        for field in fields(self):
            value: int = getattr(self, field.name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"{field.name} must be a nonnegative integer. got {value}."
                )

    def updated(self, **overrides: Optional[int]) -> StepBudget:
        """copy with every non-None override applied."""
        given: dict[str, int] = {
            key: value for key, value in overrides.items() if value is not None
        }
        return replace(self, **given)

    @classmethod
    def from_config_dic(cls, config_dic: dict[str, Any]) -> StepBudget:
        names: set[str] = {field.name for field in fields(cls)}
        for key in config_dic.keys():
            if key not in names:
                raise ValueError(
                    f"unknown budget key '{key}'. choose from {sorted(names)}."
                )
        return cls(**config_dic)

    @classmethod
    def from_json(cls, config_json_path: Path) -> StepBudget:
        if not config_json_path.exists():
            raise ValueError(f"{str(config_json_path)} not found.")
        config_dic: dict[str, Any] = json.loads(config_json_path.read_text())
        if not isinstance(config_dic, dict):
            raise ValueError(
                f"{str(config_json_path)} must contain a JSON object."
            )
        return cls.from_config_dic(config_dic)

class AccessBudget:
    """mutable counter of generator calls. one instance per trace."""
    def __init__(self, limit: int) -> None:
        self.limit: int = limit
        self.used: int = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def charge(self, count: int = 1) -> None:
        if self.remaining < count:
            raise BudgetExhaustedError(
                f"coefficient access budget of {self.limit} exhausted."
            )
        self.used += count
