from cf_core import AccessBudget
from cf_core import canonicalize
from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import Finite
from cf_core import Generator
from cf_core import StepBudget
from .phi_state import PhiState
from .phi_state import Rule
from .phi_state import StepInfo
from .phi_stepper import first_bad_position
from .phi_stepper import singularize_at
from typing import Optional

class PhiTrace:
    """record of Φ^0, Φ^1, ... applied to one stream.

    p_seq[n] is the first bad position of state n (None when there is none) and
    rows[n] holds the coefficients of state n at positions 0, ..., p_seq[n] plus
    the tracer's lookahead. step_infos[n] describes the step from state n to
    state n + 1, so a trace of N steps has N + 1 recorded states.

    stable_prefix only holds coefficients that no later state can change: the whole
    state once it is fixed, or what a verified certificate pins down.
    provisional_prefix is the guess read off the recent first bad positions.
    """
    def __init__(self, keep_states: bool = False) -> None:
        self.p_seq: list[Optional[int]] = []
        self.rows: list[tuple[int, ...]] = []
        self.step_infos: list[StepInfo] = []
        self.states: Optional[list[PhiState]] = [] if keep_states else None
        self.committed_p: Optional[int] = None
        self.is_fixed: bool = False
        self.stable_prefix: tuple[int, ...] = ()
        self.provisional_prefix: tuple[int, ...] = ()

    def record_state(
        self,
        state: PhiState,
        p: Optional[int],
        row: tuple[int, ...]
    ) -> None:
        self.p_seq.append(p)
        self.rows.append(row)
        if self.states is not None:
            self.states.append(state)
        if p is None:
            self.is_fixed = True

    def record_step(self, info: StepInfo) -> None:
        self.step_infos.append(info)

    @property
    def num_steps(self) -> int:
        return len(self.step_infos)

    @property
    def running_min_p(self) -> Optional[int]:
        observed: list[int] = [p for p in self.p_seq if p is not None]
        if len(observed) == 0:
            return None
        return min(observed)

    @property
    def p_estimate(self) -> Optional[int]:
        """committed p if any, the running minimum of p_seq otherwise."""
        if self.committed_p is not None:
            return self.committed_p
        return self.running_min_p

    def commit(self, p: Optional[int]) -> None:
        """fix p = liminf p^(n), established by a certificate."""
        self.committed_p = p

    def q_seq(self, p: Optional[int] = None) -> list[Optional[int]]:
        """|coefficient at position p - 1| for every recorded state.

        p defaults to the committed value, then to the running minimum. entries are None
        where state n ends before position p - 1 (only possible when p_seq[n] < p - 1).
        """
        if p is None:
            p = self.p_estimate
        if p is None:
            return []
        return [abs(row[p - 1]) if p <= len(row) else None for row in self.rows]

    def finalize(self, proven: tuple[int, ...] = ()) -> None:
        """set stable_prefix and provisional_prefix from the recorded rows.

        Args:
            proven (tuple[int, ...]): coefficients of the last state known to be final,
                e.g. from a verified certificate. ignored once the trace is fixed.
        """
        if len(self.rows) == 0:
            return
        if self.is_fixed:
            self.stable_prefix = self.rows[-1]
            self.provisional_prefix = self.rows[-1]
            return
        self.stable_prefix = tuple(proven)
        tail: list[Optional[int]] = self.p_seq[len(self.p_seq) // 2:]
        length: int = min(p for p in tail if p is not None) - 1
        guess: tuple[int, ...] = self.rows[-1][:max(0, length)]
        self.provisional_prefix = guess if len(self.stable_prefix) < len(guess) \
            else self.stable_prefix

class PhiTracer:
    """applies Φ step by step and records every state into a PhiTrace.

    EventuallyPeriodic inputs are canonicalized first so that equal states compare equal.
    """
    def __init__(
        self,
        stream: CoefficientStream,
        budget: Optional[StepBudget] = None,
        keep_states: bool = False,
        lookahead: int = 0
    ) -> None:
        """initialization.

        Args:
            stream (CoefficientStream): state 0.
            budget (Optional[StepBudget]): limits. Default to StepBudget().
            keep_states (bool): retain every PhiState in the trace.
            lookahead (int): coefficients recorded past the first bad position of each
                state, clipped at the end of a finite stream and at the horizon.
        """
        if lookahead < 0:
            raise ValueError(f"lookahead must be nonnegative. got {lookahead}.")
        self.budget: StepBudget = StepBudget() if budget is None else budget
        self.access_budget: AccessBudget = AccessBudget(self.budget.access_budget)
        self.lookahead: int = lookahead
        self.horizon: Optional[int] = None
        if isinstance(stream, Generator):
            self.horizon = stream.horizon_hint if stream.horizon_hint is not None \
                else self.budget.horizon
        if isinstance(stream, EventuallyPeriodic):
            stream = canonicalize(stream)
        self.trace: PhiTrace = PhiTrace(keep_states)
        self.state: PhiState = PhiState(stream)
        self.current_p: Optional[int] = self._observe(self.state)

    def _fixed_row(self, stream: CoefficientStream) -> tuple[int, ...]:
        if isinstance(stream, Finite):
            return stream.coeffs
        if isinstance(stream, EventuallyPeriodic):
            return stream.prefix + stream.period
        return tuple(stream.coefficients(self.horizon, self.access_budget))

    def _row_length(self, p: int) -> int:
        length: int = p + 1 + self.lookahead
        if self.horizon is not None:
            length = min(length, max(p + 1, self.horizon))
        return length

    def _observe(self, state: PhiState) -> Optional[int]:
        p: Optional[int] = first_bad_position(state, self.horizon, self.access_budget)
        row: tuple[int, ...]
        if p is None:
            row = self._fixed_row(state.stream)
        else:
            row = tuple(state.stream.coefficients(self._row_length(p), self.access_budget))
        self.trace.record_state(state, p, row)
        return p

    @property
    def is_fixed(self) -> bool:
        return self.current_p is None

    def advance(self) -> StepInfo:
        """apply one step. a fixed state is left as it is and nothing is recorded."""
        if self.current_p is None:
            return StepInfo.fixed()
        m: int = self.current_p
        rule: Rule = Rule.for_coefficient(self.trace.rows[-1][m])
        info: StepInfo = StepInfo.removed(rule, m)
        self.state = PhiState(
            stream=singularize_at(self.state.stream, m, self.access_budget, self.horizon),
            step=self.state.step + 1,
            stable_upto=max(1, m - 1),
        )
        self.trace.record_step(info)
        self.current_p = self._observe(self.state)
        return info

def phi_trace(
    stream: CoefficientStream,
    max_steps: int,
    budget: Optional[StepBudget] = None,
    keep_states: bool = False,
    lookahead: int = 0
) -> PhiTrace:
    """apply Φ up to max_steps times, stopping early at a fixed state.

    eventually periodic states are also passed to a CertificateDetector. once it
    returns a verified certificate, the coefficients that certificate pins down
    become the stable_prefix of the trace.

    Raises:
        BudgetExhaustedError: generator stream read beyond the access budget or horizon.
    """
    # classifier imports phi_engine at module level.
    from classifier.certificates import CertificateDetector
    from classifier.certificates import CycleCertificate

    if max_steps < 0:
        raise ValueError(f"max_steps must be nonnegative. got {max_steps}.")
    tracer: PhiTracer = PhiTracer(stream, budget, keep_states, lookahead)
    detector: Optional[CertificateDetector] = None
    if isinstance(tracer.state.stream, EventuallyPeriodic):
        detector = CertificateDetector(tracer.budget)
    certificate: Optional[CycleCertificate] = None
    while True:
        if detector is not None and certificate is None:
            certificate = detector.observe(
                tracer.state.step, tracer.state.stream, tracer.current_p
            )
        if max_steps <= tracer.trace.num_steps or tracer.is_fixed:
            break
        tracer.advance()
    tracer.trace.finalize(
        () if certificate is None else certificate.stable_coefficients(tracer.trace.num_steps)
    )
    return tracer.trace
