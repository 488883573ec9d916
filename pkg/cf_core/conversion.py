from .coefficient_stream import canonicalize
from .coefficient_stream import CoefficientStream
from .coefficient_stream import EventuallyPeriodic
from .coefficient_stream import Finite
from .coefficient_stream import Generator
from functools import partial

def _alternating_coefficient(stream: CoefficientStream, index: int) -> int:
    sign: int = -1 if index % 2 == 1 else 1
    return sign * stream.coefficient_at(index)

def _alternate_signs(stream: CoefficientStream) -> CoefficientStream:
    if isinstance(stream, Finite):
        return Finite(
            tuple(_alternating_coefficient(stream, i) for i in range(stream.length))
        )
    if isinstance(stream, EventuallyPeriodic):
        start: int = len(stream.prefix)
        prefix: tuple[int, ...] = tuple(
            _alternating_coefficient(stream, i) for i in range(start)
        )
        # an odd period changes sign on every pass, so two passes make one new period.
        size: int = len(stream.period)
        if size % 2 == 1:
            size *= 2
        period: tuple[int, ...] = tuple(
            _alternating_coefficient(stream, i) for i in range(start, start + size)
        )
        return canonicalize(EventuallyPeriodic(prefix, period))
    if isinstance(stream, Generator):
        return Generator(
            gen=partial(_alternating_coefficient, stream),
            horizon_hint=stream.horizon_hint,
            name=None if stream.name is None else f"alt({stream.name})",
        )
    raise NotImplementedError(f"unsupported stream type {type(stream).__name__}.")

def neg_from_regular(stream: CoefficientStream) -> CoefficientStream:
    """(b0, b1, b2, ...) -> [b0, -b1, b2, ...]. both have the same convergents."""
    return _alternate_signs(stream)

def regular_from_neg(stream: CoefficientStream) -> CoefficientStream:
    """[b0, b1, b2, ...] -> (b0, -b1, b2, ...), inverse of neg_from_regular."""
    return _alternate_signs(stream)
