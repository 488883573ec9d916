from cf_core import AccessBudget
from cf_core import BudgetExhaustedError
from cf_core import canonicalize
from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import Finite
from cf_core import Generator
from cf_core import StepBudget
from .phi_state import PhiState
from .phi_state import Rule
from .phi_state import StepInfo
from typing import Optional

BAD_COEFFICIENTS: frozenset[int] = frozenset({-1, 0, 1})

def scan_horizon(stream: CoefficientStream, horizon: Optional[int] = None) -> Optional[int]:
    """exclusive scan end for generator streams. None for the other forms."""
    if not isinstance(stream, Generator):
        return None
    if horizon is not None:
        return horizon
    if stream.horizon_hint is not None:
        return stream.horizon_hint
    return StepBudget().horizon

def _scan_end(
    stream: CoefficientStream,
    start: int,
    horizon: Optional[int]
) -> int:
    if isinstance(stream, Finite):
        return stream.length
    if isinstance(stream, EventuallyPeriodic):
        return stream.scan_end(start)
    limit: Optional[int] = scan_horizon(stream, horizon)
    assert limit is not None
    return limit

def first_bad_position(
    state: PhiState,
    horizon: Optional[int] = None,
    budget: Optional[AccessBudget] = None
) -> Optional[int]:
    """least m >= 1 with b_m in {0, 1, -1}, b_0 ignored.

    exact for Finite and EventuallyPeriodic streams: a periodic stream is scanned
    through its prefix and one full period. a Generator is scanned up to the horizon,
    so None only means that no bad coefficient exists below it.

    Args:
        state (PhiState): state whose stream is scanned from state.stable_upto on.
        horizon (Optional[int]): generator scan horizon. the stream's hint is used if None.
        budget (Optional[AccessBudget]): charged for generator calls.
    """
    if horizon is not None and horizon < 1:
        raise ValueError(f"horizon must be positive. got {horizon}.")
    stream: CoefficientStream = state.stream
    start: int = max(1, state.stable_upto)
    for index in range(start, _scan_end(stream, start, horizon)):
        if stream.coefficient_at(index, budget) in BAD_COEFFICIENTS:
            return index
    return None

def _rewrite(coeffs: list[int], m: int) -> list[int]:
    """apply the rule for b_m to an explicit coefficient list.

    when b_m is the last coefficient there is no right neighbour: [.., a, ±1] becomes
    [.., a ∓ 1] and [.., a, 0] becomes [..] since its value is that of [.., a, ∞].
    """
    b_m: int = coeffs[m]
    has_right: bool = m + 1 < len(coeffs)
    if b_m == 0:
        if not has_right:
            return coeffs[:m - 1]
        merged: int = coeffs[m - 1] + coeffs[m + 1]
        return coeffs[:m - 1] + [merged] + coeffs[m + 2:]
    if not has_right:
        return coeffs[:m - 1] + [coeffs[m - 1] - b_m]
    return coeffs[:m - 1] + [coeffs[m - 1] - b_m, coeffs[m + 1] - b_m] + coeffs[m + 2:]

def singularize_at(
    stream: CoefficientStream,
    m: int,
    budget: Optional[AccessBudget] = None,
    horizon: Optional[int] = None
) -> CoefficientStream:
    """remove the bad coefficient b_m (m >= 1) and adjust its neighbours.

    EventuallyPeriodic results are canonical. Generator results carry the touched
    coefficients in their head and read the untouched tail from the generator.
    """
    if m < 1:
        raise ValueError(f"position must be at least 1. got {m}.")
    if isinstance(stream, Finite):
        return Finite(tuple(_rewrite(list(stream.coeffs), m)))
    if isinstance(stream, EventuallyPeriodic):
        size: int = max(len(stream.prefix), m + 2)
        explicit: list[int] = stream.coefficients(size)
        shift: int = (size - len(stream.prefix)) % len(stream.period)
        period: tuple[int, ...] = stream.period[shift:] + stream.period[:shift]
        return canonicalize(EventuallyPeriodic(tuple(_rewrite(explicit, m)), period))
    if isinstance(stream, Generator):
        limit: Optional[int] = scan_horizon(stream, horizon)
        assert limit is not None
        if limit <= m + 1:
            raise BudgetExhaustedError(
                f"rule at position {m} needs b_{m + 1}, beyond the horizon {limit}."
            )
        size = max(len(stream.head), m + 2)
        explicit = list(stream.head) + [
            stream.coefficient_at(i, budget) for i in range(len(stream.head), size)
        ]
        offset: int = stream.offset + size - len(stream.head)
        return stream.with_head(tuple(_rewrite(explicit, m)), offset)
    raise NotImplementedError(f"unsupported stream type {type(stream).__name__}.")

def phi_step(
    state: PhiState,
    budget: Optional[AccessBudget] = None,
    horizon: Optional[int] = None
) -> tuple[PhiState, StepInfo]:
    """one application of Φ. a state without bad coefficients is returned unchanged."""
    m: Optional[int] = first_bad_position(state, horizon, budget)
    if m is None:
        return state, StepInfo.fixed()
    rule: Rule = Rule.for_coefficient(state.stream.coefficient_at(m, budget))
    next_state: PhiState = PhiState(
        stream=singularize_at(state.stream, m, budget, horizon),
        step=state.step + 1,
        stable_upto=max(1, m - 1),
    )
    return next_state, StepInfo.removed(rule, m)
