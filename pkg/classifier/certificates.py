from __future__ import annotations
from cf_core import canonicalize
from cf_core import EventuallyPeriodic
from cf_core import StepBudget
from collections import deque
from dataclasses import dataclass
from enum import Enum
from phi_engine import first_bad_position
from phi_engine import phi_step
from phi_engine import PhiState
from phi_engine import Rule
from phi_engine import StepInfo
from typing import Iterable
from typing import Optional

class CertificateKind(Enum):
    FIXED_POINT = "fixed-point"
    EXACT_CYCLE = "exact-cycle"
    SHIFT_CYCLE = "shift-cycle"
    DRIFT_CYCLE = "drift-cycle"

@dataclass(frozen=True)
class CycleCertificate:
    """finite witness of the long-run behaviour of Φ on an eventually periodic stream.

    Args:
        kind (CertificateKind): which witness.
        n1 (int): step of the anchor state.
        n2 (int): step at which the cycle closes. n1 == n2 for a fixed point.
        anchor (EventuallyPeriodic): canonical state at n1. every check replays from it.
        p (Optional[int]): liminf of the first bad positions. None means infinity.
        drift_delta (Optional[int]): change of the drifting coefficient per cycle.
        drift_position (Optional[int]): position of the drifting coefficient at n1.
        emitted_prefix (tuple[int, ...]): limit coefficients known to be final.
        emitted_period (tuple[int, ...]): repeating part of the limit (shift cycles).
        escapes (bool): drift cycles only. the drifting coefficient sits at position
            p - 1 at every step, so q^(n) grows without bound.
    """
    kind: CertificateKind
    n1: int
    n2: int
    anchor: EventuallyPeriodic
    p: Optional[int] = None
    drift_delta: Optional[int] = None
    drift_position: Optional[int] = None
    emitted_prefix: tuple[int, ...] = ()
    emitted_period: tuple[int, ...] = ()
    escapes: bool = False

    @property
    def cycle_length(self) -> int:
        return self.n2 - self.n1

    def limit_stream(self) -> Optional[EventuallyPeriodic]:
        """limit continued fraction when p^(n) tends to infinity."""
        if self.kind == CertificateKind.FIXED_POINT:
            return self.anchor
        if self.kind == CertificateKind.SHIFT_CYCLE:
            return canonicalize(EventuallyPeriodic(self.emitted_prefix, self.emitted_period))
        return None

    def stable_coefficients(self, step: int) -> tuple[int, ...]:
        """leading coefficients of state step that no later state changes.

        every step after n1 removes a coefficient at position p or beyond, so positions
        below p - 1 are final. a shift cycle moves that bound right by one period per
        completed cycle.
        """
        if self.kind == CertificateKind.FIXED_POINT:
            return self.anchor.prefix + self.anchor.period
        if self.kind == CertificateKind.SHIFT_CYCLE:
            cycles: int = max(0, step - self.n1) // self.cycle_length
            return self.emitted_prefix + self.emitted_period * cycles
        return tuple(self.anchor.coefficients(self.p - 1))

    def to_dic(self) -> dict[str, object]:
        dic: dict[str, object] = {
            "kind": self.kind.value,
            "n1": self.n1,
            "n2": self.n2,
            "p": "inf" if self.p is None else self.p,
        }
        if self.kind == CertificateKind.DRIFT_CYCLE:
            dic["drift_delta"] = self.drift_delta
            dic["drift_position"] = self.drift_position
            dic["escapes"] = self.escapes
        if self.kind == CertificateKind.SHIFT_CYCLE:
            dic["emitted_prefix"] = list(self.emitted_prefix)
            dic["emitted_period"] = list(self.emitted_period)
        return dic

def slot_map_step(j: int, info: StepInfo) -> Optional[int]:
    """position after one step of the coefficient at position j.

    a coefficient merged into a neighbour continues at the merged position.

    Returns:
        Optional[int]: None when the step removes that coefficient.
    """
    if info.is_fixed:
        return j
    m: int = info.m
    if j <= m - 2:
        return j
    if j == m:
        return None
    if info.rule == Rule.ZERO:
        if j in (m - 1, m + 1):
            return m - 1
        return j - 2
    if j == m - 1:
        return m - 1
    return j - 1

def _sign(x: int) -> int:
    return (x > 0) - (x < 0)

def _replay(anchor: EventuallyPeriodic, steps: int) -> Optional[tuple[list[PhiState], list[int]]]:
    """states anchor, ..., after steps applications and their first bad positions.

    None when some state on the way, the last one excluded, is already fixed.
    """
    state: PhiState = PhiState(anchor)
    states: list[PhiState] = [state]
    ps: list[int] = []
    for _ in range(steps):
        p: Optional[int] = first_bad_position(state)
        if p is None:
            return None
        ps.append(p)
        state, _ = phi_step(state)
        states.append(state)
    return states, ps

def verify_fixed_point(certificate: CycleCertificate) -> bool:
    return first_bad_position(PhiState(certificate.anchor)) is None

def verify_exact_cycle(certificate: CycleCertificate) -> bool:
    """replaying the cycle from the anchor reproduces the anchor."""
    if certificate.cycle_length < 1:
        return False
    replayed = _replay(certificate.anchor, certificate.cycle_length)
    if replayed is None:
        return False
    states, ps = replayed
    return states[-1].stream == certificate.anchor and min(ps) == certificate.p

def _replay_shift_cycle(
    anchor: EventuallyPeriodic,
    steps: int
) -> Optional[EventuallyPeriodic]:
    p1: Optional[int] = first_bad_position(PhiState(anchor))
    if p1 is None or steps < 1:
        return None
    h1: int = p1 - 1
    replayed = _replay(anchor, steps)
    if replayed is None:
        return None
    states, ps = replayed
    if min(ps) < p1:
        return None
    # window head at position 0 is never scanned, so it must stay good by itself.
    if h1 == 0 and any(abs(state.stream.coefficient_at(0)) < 2 for state in states):
        return None
    final: EventuallyPeriodic = states[-1].stream
    p2: Optional[int] = first_bad_position(PhiState(final))
    if p2 is None or p2 <= p1:
        return None
    if final.suffix_from(p2 - 1) != anchor.suffix_from(h1):
        return None
    if final.coefficients(h1) != anchor.coefficients(h1):
        return None
    return final

def verify_shift_cycle(certificate: CycleCertificate) -> bool:
    """the window from p - 1 on reappears further right and no step reaches left of it."""
    final = _replay_shift_cycle(certificate.anchor, certificate.cycle_length)
    if final is None:
        return False
    p1: int = first_bad_position(PhiState(certificate.anchor))
    p2: int = first_bad_position(PhiState(final))
    limit: EventuallyPeriodic = canonicalize(EventuallyPeriodic(
        tuple(certificate.anchor.coefficients(p1 - 1)),
        tuple(final.coefficients(p2 - 1)[p1 - 1:]),
    ))
    return certificate.limit_stream() == limit

def _replay_drift_cycle(
    anchor: EventuallyPeriodic,
    steps: int,
    j: int,
    delta: int
) -> Optional[tuple[int, bool]]:
    """(p, escapes) when one cycle shifts slot j by delta and the slot can never turn bad."""
    if delta == 0 or steps < 1 or len(anchor.prefix) <= j:
        return None
    state: PhiState = PhiState(anchor)
    slot: Optional[int] = j
    ps: list[int] = []
    slots: list[int] = []
    for _ in range(steps):
        p: Optional[int] = first_bad_position(state)
        if p is None:
            return None
        value: int = state.stream.coefficient_at(slot)
        if 1 <= slot and (_sign(value) != _sign(delta) or abs(value) < 2):
            return None
        ps.append(p)
        slots.append(slot)
        state, info = phi_step(state)
        slot = slot_map_step(slot, info)
        if slot is None:
            return None
    if slot != j:
        return None
    final_value: int = state.stream.coefficient_at(j)
    if 1 <= j and (_sign(final_value) != _sign(delta) or abs(final_value) < 2):
        return None
    if abs(final_value) <= 1 + abs(delta) * steps:
        return None
    shifted: list[int] = list(anchor.prefix)
    shifted[j] += delta
    if state.stream != canonicalize(EventuallyPeriodic(tuple(shifted), anchor.period)):
        return None
    p_min: int = min(ps)
    return p_min, all(slot == p_min - 1 for slot in slots)

def verify_drift_cycle(certificate: CycleCertificate) -> bool:
    """one replayed cycle moves only the designated coefficient, by drift_delta, away from {0, ±1}."""
    if certificate.drift_position is None or certificate.drift_delta is None:
        return False
    replayed = _replay_drift_cycle(
        certificate.anchor,
        certificate.cycle_length,
        certificate.drift_position,
        certificate.drift_delta,
    )
    if replayed is None:
        return False
    p, escapes = replayed
    return p == certificate.p and escapes == certificate.escapes

def verify_certificate(certificate: CycleCertificate) -> bool:
    if certificate.kind == CertificateKind.FIXED_POINT:
        return verify_fixed_point(certificate)
    if certificate.kind == CertificateKind.EXACT_CYCLE:
        return verify_exact_cycle(certificate)
    if certificate.kind == CertificateKind.SHIFT_CYCLE:
        return verify_shift_cycle(certificate)
    return verify_drift_cycle(certificate)

class CertificateDetector:
    """looks for a certificate among consecutive canonical states of one trace.

    observe() is called once per state in step order. every candidate is checked by
    replay before it is returned; candidates that fail are dropped silently.
    """
    def __init__(self, budget: Optional[StepBudget] = None) -> None:
        self.budget: StepBudget = StepBudget() if budget is None else budget
        self.history: dict[int, EventuallyPeriodic] = {}
        self.seen_states: dict[EventuallyPeriodic, int] = {}
        self.windows: dict[EventuallyPeriodic, tuple[int, int]] = {}
        self.shapes: dict[tuple[int, tuple[int, ...]], deque[int]] = {}

    def _remember(self, n: int, state: EventuallyPeriodic, p: int) -> None:
        if self.budget.history_cap <= len(self.history):
            return
        self.history[n] = state
        self.seen_states.setdefault(state, n)
        self.windows[state.suffix_from(p - 1)] = (n, p)
        shape: tuple[int, tuple[int, ...]] = (len(state.prefix), state.period)
        if shape not in self.shapes:
            self.shapes[shape] = deque(maxlen=self.budget.drift_lookback)
        self.shapes[shape].append(n)

    def _exact_cycle(self, n: int, state: EventuallyPeriodic) -> Optional[CycleCertificate]:
        n1: Optional[int] = self.seen_states.get(state)
        if n1 is None:
            return None
        replayed = _replay(state, n - n1)
        if replayed is None:
            return None
        certificate: CycleCertificate = CycleCertificate(
            kind=CertificateKind.EXACT_CYCLE,
            n1=n1,
            n2=n,
            anchor=state,
            p=min(replayed[1]),
        )
        return certificate if verify_exact_cycle(certificate) else None

    def _shift_cycle(
        self,
        n: int,
        state: EventuallyPeriodic,
        p: int
    ) -> Optional[CycleCertificate]:
        previous: Optional[tuple[int, int]] = self.windows.get(state.suffix_from(p - 1))
        if previous is None:
            return None
        n1, p1 = previous
        if p <= p1 or n1 not in self.history:
            return None
        anchor: EventuallyPeriodic = self.history[n1]
        final = _replay_shift_cycle(anchor, n - n1)
        if final is None:
            return None
        return CycleCertificate(
            kind=CertificateKind.SHIFT_CYCLE,
            n1=n1,
            n2=n,
            anchor=anchor,
            p=None,
            emitted_prefix=tuple(anchor.coefficients(p1 - 1)),
            emitted_period=tuple(final.coefficients(p - 1)[p1 - 1:]),
        )

    def _drift_cycle(self, n: int, state: EventuallyPeriodic) -> Optional[CycleCertificate]:
        shape: tuple[int, tuple[int, ...]] = (len(state.prefix), state.period)
        for n1 in reversed(self.shapes.get(shape, ())):
            anchor: EventuallyPeriodic = self.history[n1]
            diffs: list[int] = [
                i for i, (a, b) in enumerate(zip(anchor.prefix, state.prefix)) if a != b
            ]
            if len(diffs) != 1:
                continue
            j: int = diffs[0]
            delta: int = state.prefix[j] - anchor.prefix[j]
            value: int = state.prefix[j]
            if abs(value) <= 1 + abs(delta) * (n - n1):
                continue
            if 1 <= j and _sign(value) != _sign(delta):
                continue
            replayed = _replay_drift_cycle(anchor, n - n1, j, delta)
            if replayed is None:
                continue
            p, escapes = replayed
            return CycleCertificate(
                kind=CertificateKind.DRIFT_CYCLE,
                n1=n1,
                n2=n,
                anchor=anchor,
                p=p,
                drift_delta=delta,
                drift_position=j,
                emitted_prefix=tuple(anchor.coefficients(p - 1)),
                escapes=escapes,
            )
        return None

    def observe(
        self,
        n: int,
        state: EventuallyPeriodic,
        p: Optional[int]
    ) -> Optional[CycleCertificate]:
        """check state n (canonical, first bad position p) and remember it.

        detection order: fixed point, exact cycle, shift cycle, drift cycle.
        """
        if p is None:
            return CycleCertificate(
                kind=CertificateKind.FIXED_POINT, n1=n, n2=n, anchor=state, p=None
            )
        certificate: Optional[CycleCertificate] = self._exact_cycle(n, state)
        if certificate is None:
            certificate = self._shift_cycle(n, state, p)
        if certificate is None:
            certificate = self._drift_cycle(n, state)
        self._remember(n, state, p)
        return certificate

def detect_certificate(
    states: Iterable[EventuallyPeriodic | PhiState],
    budget: Optional[StepBudget] = None
) -> Optional[CycleCertificate]:
    """first certificate found along consecutive states of one trace."""
    detector: CertificateDetector = CertificateDetector(budget)
    for n, state in enumerate(states):
        stream = state.stream if isinstance(state, PhiState) else state
        stream = canonicalize(stream)
        certificate: Optional[CycleCertificate] = detector.observe(
            n, stream, first_bad_position(PhiState(stream))
        )
        if certificate is not None:
            return certificate
    return None
