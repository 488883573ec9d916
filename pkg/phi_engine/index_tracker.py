from .phi_state import Rule
from .phi_state import StepInfo
from typing import Iterable
from typing import Optional

def index_map_step(e: int, info: StepInfo) -> Optional[int]:
    """position after one Φ step of the convergent at position e.

    Returns:
        Optional[int]: None when the step deletes that convergent.
    """
    if e < 0:
        raise ValueError(f"convergent position must be nonnegative. got {e}.")
    if info.is_fixed:
        return e
    m: int = info.m
    if e <= m - 2:
        return e
    if e in info.deleted_convergent_positions:
        return None
    if info.rule == Rule.ZERO:
        return e - 2
    return e - 1

def index_preimage(r: int, info: StepInfo) -> int:
    """unique position before the step whose convergent lands on position r."""
    if r < 0:
        raise ValueError(f"convergent position must be nonnegative. got {r}.")
    if info.is_fixed or r <= info.m - 2:
        return r
    return r + len(info.deleted_convergent_positions)

def track_convergent(k: int, infos: Iterable[StepInfo]) -> list[int]:
    """positions e(0) = k, e(1), ... of one convergent along consecutive steps.

    the list stops at the last position before the convergent is deleted.
    """
    positions: list[int] = [k]
    for info in infos:
        e: Optional[int] = index_map_step(positions[-1], info)
        if e is None:
            break
        positions.append(e)
    return positions
