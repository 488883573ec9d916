from cf_core import BudgetExhaustedError
from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import Finite
from cf_core import Generator
from cli.builtin_examples import BUILTINS
from hypothesis import given
from hypothesis import settings
from hypothesis.strategies import integers
from moebius import convergents
from moebius import evaluate_finite
from phi_engine import first_bad_position
from phi_engine import index_map_step
from phi_engine import index_preimage
from phi_engine import phi_step
from phi_engine import phi_trace
from phi_engine import PhiState
from phi_engine import Rule
from phi_engine import scan_horizon
from phi_engine import singularize_at
from phi_engine import StepInfo
from phi_engine import track_convergent
import pytest
from tests.strategies import finite_streams
from tests.strategies import periodic_streams

def test_first_bad_position():
    assert first_bad_position(PhiState(BUILTINS["@example1"])) == 1
    assert first_bad_position(PhiState(EventuallyPeriodic((5,), (3, 0)))) == 2
    assert first_bad_position(PhiState(EventuallyPeriodic((9,), (4,)))) is None
    assert first_bad_position(PhiState(Finite((0, 2, -2)))) is None
    assert first_bad_position(PhiState(Finite((0, 2, -1)))) == 2

def test_first_bad_position_respects_horizon():
    stream = Generator(lambda i: 0 if i == 50 else 2, horizon_hint=20)
    assert first_bad_position(PhiState(stream)) is None
    assert first_bad_position(PhiState(stream), horizon=60) == 50
    with pytest.raises(ValueError):
        first_bad_position(PhiState(stream), horizon=0)

def test_scan_horizon():
    assert scan_horizon(Finite((1,))) is None
    assert scan_horizon(Generator(lambda i: 2, horizon_hint=7)) == 7
    assert scan_horizon(Generator(lambda i: 2, horizon_hint=7), 3) == 3
    assert scan_horizon(Generator(lambda i: 2)) == 10_000

def test_rule_for_coefficient():
    assert Rule.for_coefficient(0) == Rule.ZERO
    assert Rule.for_coefficient(-1) == Rule.MINUS_ONE
    with pytest.raises(ValueError):
        Rule.for_coefficient(2)
    assert StepInfo.removed(Rule.ZERO, 4).deleted_convergent_positions == (3, 4)
    assert StepInfo.removed(Rule.PLUS_ONE, 4).deleted_convergent_positions == (3,)

def test_phi_step_on_growing_blocks():
    state, info = phi_step(PhiState(BUILTINS["@example2"]))
    assert info == StepInfo.removed(Rule.PLUS_ONE, 2)
    assert state.stream.coefficients(8) == [1, 1, 2, 1, 4, 1, 5, 1]
    assert state.step == 1

def test_phi_step_merges_around_zero():
    state, info = phi_step(PhiState(BUILTINS["@example3"]))
    assert info.rule == Rule.ZERO
    assert state.stream.coefficients(8) == [3, 0, 3, 0, 4, 0, 5, 0]

def test_phi_step_fixed_state_is_unchanged():
    start = PhiState(EventuallyPeriodic((9,), (4,)))
    state, info = phi_step(start)
    assert state is start
    assert info.is_fixed

def test_singularize_periodic_stays_canonical():
    once = singularize_at(EventuallyPeriodic((1,), (1, 5)), 1)
    assert once == EventuallyPeriodic((0, 4), (1, 5))
    assert singularize_at(once, 2) == EventuallyPeriodic((0, 3, 4), (1, 5))
    assert singularize_at(EventuallyPeriodic((2,), (0,)), 1) == EventuallyPeriodic((2,), (0,))

def test_singularize_finite_end():
    assert singularize_at(Finite((4, 1)), 1) == Finite((3,))
    assert singularize_at(Finite((4, 7, -1)), 2) == Finite((4, 8))
    assert singularize_at(Finite((4, 7, 0)), 2) == Finite((4,))
    with pytest.raises(ValueError):
        singularize_at(Finite((0, 2)), 0)

def test_singularize_generator_beyond_horizon():
    with pytest.raises(BudgetExhaustedError):
        singularize_at(Generator(lambda i: 1, horizon_hint=3), 2)

def test_trace_leading_coefficients_are_triangular():
    trace = phi_trace(BUILTINS["@example3"], 20)
    assert trace.p_seq[:3] == [1, 1, 1]
    assert [row[0] for row in trace.rows[1:4]] == [3, 6, 10]
    for n in range(1, 21):
        assert trace.rows[n][0] == (n + 1) * (n + 2) // 2
    assert trace.q_seq(1)[:4] == [1, 3, 6, 10]

def test_trace_rows_of_growing_blocks():
    trace = phi_trace(BUILTINS["@example2"], 3)
    assert trace.rows[1] == (1, 1)
    assert trace.rows[2] == (0, 1)
    assert trace.rows[3] == (-1, 0)
    assert trace.p_seq == [2, 1, 1, 1]

def test_trace_provisional_prefix_of_twos():
    trace = phi_trace(BUILTINS["@example1"], 100)
    assert not trace.is_fixed
    assert trace.stable_prefix == ()
    assert 3 <= len(trace.provisional_prefix)
    assert set(trace.provisional_prefix) == {2}

def test_trace_falling_first_bad_position_emits_nothing_stable():
    stream = EventuallyPeriodic((5,) + (2,) * 10 + (1,), (7,))
    short = phi_trace(stream, 4)
    assert short.p_seq == [11, 10, 9, 8, 7]
    assert short.stable_prefix == ()
    assert short.provisional_prefix == (5, 2, 2, 2, 2, 2)
    full = phi_trace(stream, 12)
    assert full.is_fixed
    assert full.num_steps == 11
    assert full.rows[-1] == (4, -4, 7)
    assert full.stable_prefix == (4, -4, 7)

def test_trace_stable_prefix_from_shift_cycle():
    trace = phi_trace(EventuallyPeriodic((1,), (1, 5)), 10)
    assert trace.stable_prefix == (0,) + (3,) * 9
    assert trace.rows[-1][:10] == trace.stable_prefix

def test_trace_lookahead_rows():
    trace = phi_trace(BUILTINS["@example2"], 1, lookahead=4)
    assert trace.rows == [(1, 2, 1, 3, 1, 4, 1), (1, 1, 2, 1, 4, 1)]
    assert phi_trace(Finite((1, 1, 1)), 0, lookahead=4).rows == [(1, 1, 1)]
    with pytest.raises(ValueError):
        phi_trace(Finite((2,)), 1, lookahead=-1)

def test_trace_of_fixed_stream():
    trace = phi_trace(EventuallyPeriodic((5,), (9,)), 10, keep_states=True)
    assert trace.is_fixed
    assert trace.num_steps == 0
    assert trace.p_seq == [None]
    assert trace.stable_prefix == (5, 9)
    assert len(trace.states) == 1

def test_trace_of_finite_stream_reaches_empty():
    trace = phi_trace(Finite((1, 1, 1)), 10)
    assert trace.p_seq == [1, 1, None]
    assert trace.is_fixed
    assert trace.stable_prefix == ()

def test_trace_rejects_negative_steps():
    with pytest.raises(ValueError):
        phi_trace(Finite((2,)), -1)

def _assert_deletion_equivalence(stream: CoefficientStream, size: int) -> None:
    state, info = phi_step(PhiState(stream))
    if info.is_fixed:
        return
    before = convergents(stream, size).entries
    after = convergents(state.stream, size - len(info.deleted_convergent_positions)).entries
    kept = [v for e, v in enumerate(before) if e not in info.deleted_convergent_positions]
    assert list(after) == kept
    for e, v in enumerate(before):
        r = index_map_step(e, info)
        if r is None:
            assert e in info.deleted_convergent_positions
        else:
            assert after[r] == v
    for r in range(len(after)):
        preimages = [e for e in range(size) if index_map_step(e, info) == r]
        assert preimages == [index_preimage(r, info)]

@settings(max_examples=1000)
@given(finite_streams(min_size=1))
def test_phi_step_deletes_convergents_of_finite_streams(stream):
    _assert_deletion_equivalence(stream, stream.length)

@settings(max_examples=500)
@given(finite_streams(min_size=1))
def test_phi_step_keeps_finite_value(stream):
    state, _ = phi_step(PhiState(stream))
    assert evaluate_finite(state.stream) == evaluate_finite(stream)

@settings(max_examples=500)
@given(periodic_streams(min_value=-6, max_value=6))
def test_phi_step_deletes_convergents_of_periodic_streams(stream):
    _assert_deletion_equivalence(stream, 40)

def test_index_map_step():
    zero = StepInfo.removed(Rule.ZERO, 5)
    plus = StepInfo.removed(Rule.PLUS_ONE, 5)
    assert index_map_step(3, zero) == 3
    assert index_map_step(3, plus) == 3
    assert index_map_step(4, zero) is None
    assert index_map_step(5, zero) is None
    assert index_map_step(8, zero) == 6
    assert index_map_step(4, plus) is None
    assert index_map_step(5, plus) == 4
    assert index_map_step(7, StepInfo.fixed()) == 7
    with pytest.raises(ValueError):
        index_map_step(-1, plus)

def test_index_preimage():
    assert index_preimage(3, StepInfo.removed(Rule.ZERO, 5)) == 3
    assert index_preimage(4, StepInfo.removed(Rule.ZERO, 5)) == 6
    assert index_preimage(4, StepInfo.removed(Rule.MINUS_ONE, 5)) == 5

def test_track_convergent():
    infos = [
        StepInfo.removed(Rule.ZERO, 5),
        StepInfo.removed(Rule.PLUS_ONE, 2),
        StepInfo.removed(Rule.ZERO, 3),
    ]
    assert track_convergent(6, infos) == [6, 4, 3]
    assert track_convergent(0, infos) == [0, 0, 0, 0]

@settings(max_examples=300, deadline=None)
@given(periodic_streams(), integers(0, 30))
def test_stable_prefix_never_changes_later(stream, steps):
    short = phi_trace(stream, steps)
    stable = short.stable_prefix
    longer = phi_trace(stream, steps + 40, keep_states=True)
    for state in longer.states[short.num_steps:]:
        assert tuple(state.stream.coefficients(len(stable))) == stable
