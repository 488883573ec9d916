from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import ExtendedRational
from cf_core import Finite
from cf_core import Generator
from cf_core import INFINITY
from cf_core import canonicalize
from enum import Enum
from moebius import composite_map
from moebius import evaluate_finite
from phi_engine import PhiTrace
from typing import Optional
from typing import Sequence

class TailTendency(Enum):
    TAIL_PLUS_2 = "tail-plus-2"
    TAIL_MINUS_2 = "tail-minus-2"
    NEITHER = "neither"

    @property
    def tail_value(self) -> int:
        """value of the tail itself: [2, 2, ...] = 1 and [-2, -2, ...] = -1."""
        if self == TailTendency.TAIL_PLUS_2:
            return 1
        if self == TailTendency.TAIL_MINUS_2:
            return -1
        raise ValueError("a tail of neither kind has no fixed value.")

def trailing_run(coeffs: Sequence[int]) -> tuple[Optional[int], int]:
    """(b, start) such that coeffs[start:] is the longest trailing run of b = 2 or b = -2.

    (None, len(coeffs)) when coeffs does not end in 2 or -2.
    """
    if len(coeffs) == 0 or coeffs[-1] not in (2, -2):
        return None, len(coeffs)
    b: int = coeffs[-1]
    start: int = len(coeffs)
    while 0 < start and coeffs[start - 1] == b:
        start -= 1
    return b, start

def tail_tendency(
    stream: CoefficientStream,
    horizon: Optional[int] = None
) -> TailTendency:
    """whether the coefficients are eventually all 2 or all -2.

    exact for EventuallyPeriodic streams. a Finite stream has no infinite tail. a
    Generator is judged on its first horizon coefficients: the trailing run of 2 or -2
    must cover at least half of them.
    """
    if isinstance(stream, Finite):
        return TailTendency.NEITHER
    if isinstance(stream, EventuallyPeriodic):
        stream = canonicalize(stream)
        if any(abs(b) < 2 for b in stream.prefix[1:] + stream.period):
            raise ValueError(f"tail test needs |b_i| >= 2 for i >= 1. got {stream}.")
        if stream.period == (2,):
            return TailTendency.TAIL_PLUS_2
        if stream.period == (-2,):
            return TailTendency.TAIL_MINUS_2
        return TailTendency.NEITHER
    if isinstance(stream, Generator):
        if horizon is None:
            horizon = stream.horizon_hint if stream.horizon_hint is not None else 1_000
        coeffs: list[int] = stream.coefficients(horizon)
        b, start = trailing_run(coeffs)
        if b is not None and 2 * (len(coeffs) - start) >= len(coeffs):
            return TailTendency.TAIL_PLUS_2 if b == 2 else TailTendency.TAIL_MINUS_2
        return TailTendency.NEITHER
    raise NotImplementedError(f"unsupported stream type {type(stream).__name__}.")

def rational_value_from_tail(stream: CoefficientStream, tail_start: int) -> ExtendedRational:
    """S_{tail_start - 1}(1) for a tail of 2s and S_{tail_start - 1}(-1) for a tail of -2s.

    Raises:
        ValueError: the coefficients from tail_start on are not all 2 or all -2.
    """
    if not isinstance(stream, EventuallyPeriodic):
        raise ValueError("a constant tail can only be certified for eventually periodic streams.")
    if tail_start < 0:
        raise ValueError(f"tail_start must be nonnegative. got {tail_start}.")
    tail: EventuallyPeriodic = stream.suffix_from(tail_start)
    if tail.prefix != () or tail.period not in ((2,), (-2,)):
        raise ValueError(f"coefficients from {tail_start} on are not constant 2 or -2 in {stream}.")
    fixed: ExtendedRational = ExtendedRational(tail.period[0] // 2)
    return composite_map(stream.coefficients(tail_start)).apply(fixed)

def extended_rational_value_case2a(trace: PhiTrace, p: int) -> ExtendedRational:
    """v*_{p-2}, the convergent of the stable coefficients b*_0, ..., b*_{p-2}.

    p = 1 gives the empty continued fraction, whose value is ∞.
    """
    if p < 1:
        raise ValueError(f"p must be positive. got {p}.")
    if p == 1:
        return INFINITY
    head: tuple[int, ...] = trace.stable_prefix if trace.committed_p is None \
        else trace.rows[-1][:p - 1]
    if len(head) < p - 1:
        raise ValueError(
            f"only {len(head)} stable coefficients known, {p - 1} needed."
        )
    return evaluate_finite(Finite(head[:p - 1]))
