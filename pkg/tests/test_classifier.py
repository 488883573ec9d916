from classifier import CertificateKind
from classifier import CfClassifier
from classifier import classify
from classifier import ClassificationReport
from classifier import detect_certificate
from classifier import extended_rational_value_case2a
from classifier import Mode
from classifier import rational_value_from_tail
from classifier import slot_map_step
from classifier import Status
from classifier import tail_tendency
from classifier import TailTendency
from classifier import trailing_run
from classifier import verify_certificate
from cf_core import canonicalize
from cf_core import EventuallyPeriodic
from cf_core import ExtendedRational
from cf_core import Finite
from cf_core import Generator
from cf_core import INFINITY
from cf_core import StepBudget
from cli.builtin_examples import BUILTINS
from collections import Counter
from dataclasses import replace
from farey import path_from_stream
from farey import revisit_histogram
from fractions import Fraction
from hypothesis import assume
from hypothesis import given
from hypothesis import settings
from moebius import enclose_value
from phi_engine import phi_step
from phi_engine import phi_trace
from phi_engine import PhiState
from phi_engine import PhiTrace
from phi_engine import Rule
from phi_engine import StepInfo
import pytest
from tests.strategies import good_periodic_streams
from tests.strategies import periodic_streams

def _certificate(stream: EventuallyPeriodic, steps: int = 10):
    return detect_certificate(phi_trace(stream, steps, keep_states=True).states)

def test_growing_blocks_converge_to_one():
    with pytest.warns(UserWarning):
        report = classify(BUILTINS["@example1"])
    assert report.status == Status.CONVERGES_RATIONAL
    assert report.mode == Mode.EMPIRICAL
    assert report.value == ExtendedRational(1)

def test_rising_pairs_converge_to_irrational():
    with pytest.warns(UserWarning):
        report = classify(BUILTINS["@example2"])
    assert report.status == Status.CONVERGES_IRRATIONAL
    assert report.value is None
    assert report.enclosure is not None

def test_merged_zeros_escape_to_infinity():
    with pytest.warns(UserWarning):
        report = classify(BUILTINS["@example3"])
    assert report.status == Status.CONVERGES_EXTENDED_RATIONAL
    assert report.value == INFINITY
    assert report.p_liminf == 1

def test_alternating_blocks_diverge():
    with pytest.warns(UserWarning):
        report = classify(BUILTINS["@example4"])
    assert report.status == Status.DIVERGES
    assert report.p_liminf == 1

def test_oscillating_triple_diverges_with_witness():
    report = classify(EventuallyPeriodic((1,), (1,)))
    assert report.status == Status.DIVERGES
    assert report.mode == Mode.EXACT
    assert report.certificate.kind == CertificateKind.EXACT_CYCLE
    assert (report.certificate.n1, report.certificate.n2) == (0, 2)
    assert report.p_liminf == 1
    assert [vertex for vertex, _ in report.divergence_witness] == [INFINITY, ExtendedRational(1)]
    assert all(10 <= count for _, count in report.divergence_witness)

def test_quadratic_irrational():
    report = classify(EventuallyPeriodic((0,), (3,)))
    assert report.status == Status.CONVERGES_IRRATIONAL
    assert report.certificate.kind == CertificateKind.FIXED_POINT
    assert report.p_liminf is None
    assert report.enclosure.width < Fraction(1, 10**12)
    assert report.enclosure.decimal(6) == "[-0.381967, -0.381966]"

def test_drifting_head_escapes_to_infinity():
    report = classify(EventuallyPeriodic((1,), (0, 3)))
    assert report.status == Status.CONVERGES_EXTENDED_RATIONAL
    assert report.value == INFINITY
    assert report.certificate.kind == CertificateKind.DRIFT_CYCLE
    assert report.certificate.escapes
    assert report.certificate.drift_delta == 3

def test_shifting_window_converges_to_limit():
    report = classify(EventuallyPeriodic((1,), (1, 5)))
    assert report.status == Status.CONVERGES_IRRATIONAL
    assert report.certificate.kind == CertificateKind.SHIFT_CYCLE
    assert report.limit_stream == EventuallyPeriodic((0,), (3,))
    assert report.p_liminf is None

def test_constant_tail_gives_rational():
    report = classify(EventuallyPeriodic((5, 3), (2,)))
    assert report.status == Status.CONVERGES_RATIONAL
    assert report.value == ExtendedRational(9, 2)

def test_finite_input():
    report = classify(Finite((3, 2)))
    assert report.mode == Mode.FINITE_INPUT
    assert report.status == Status.CONVERGES_RATIONAL
    assert report.value == ExtendedRational(5, 2)
    assert classify(Finite((1, 0))).status == Status.CONVERGES_EXTENDED_RATIONAL

def test_unknown_when_out_of_steps():
    with pytest.warns(UserWarning):
        report = classify(EventuallyPeriodic((), (1,)), StepBudget(max_steps=0))
    assert report.status == Status.UNKNOWN
    assert not report.is_definite
    assert report.certificate is None

def test_unknown_when_out_of_accesses():
    with pytest.warns(UserWarning):
        report = classify(BUILTINS["@example1"], StepBudget(access_budget=10))
    assert report.status == Status.UNKNOWN
    assert report.mode == Mode.EMPIRICAL

def test_verbose_classifier_prints(capsys):
    CfClassifier(verbose=True).classify(EventuallyPeriodic((1,), (1,)))
    assert "exact-cycle" in capsys.readouterr().out

def test_report_invariants():
    with pytest.raises(AssertionError):
        ClassificationReport(
            status=Status.CONVERGES_IRRATIONAL, mode=Mode.EXACT, value=ExtendedRational(1)
        )
    with pytest.raises(AssertionError):
        ClassificationReport(status=Status.CONVERGES_RATIONAL, mode=Mode.EXACT)

def test_tail_tendency():
    assert tail_tendency(EventuallyPeriodic((7, 3), (2,))) == TailTendency.TAIL_PLUS_2
    assert tail_tendency(EventuallyPeriodic((0,), (-2,))) == TailTendency.TAIL_MINUS_2
    assert tail_tendency(EventuallyPeriodic((0,), (3,))) == TailTendency.NEITHER
    assert tail_tendency(EventuallyPeriodic((0,), (2, 2))) == TailTendency.TAIL_PLUS_2
    assert tail_tendency(Finite((2, 2))) == TailTendency.NEITHER
    assert tail_tendency(Generator(lambda i: 2)) == TailTendency.TAIL_PLUS_2
    with pytest.raises(ValueError):
        tail_tendency(EventuallyPeriodic((0,), (3, 1)))

def test_trailing_run():
    assert trailing_run([5, 2, 2]) == (2, 1)
    assert trailing_run([-2, -2]) == (-2, 0)
    assert trailing_run([2, 3]) == (None, 2)
    assert trailing_run([]) == (None, 0)

def test_rational_value_from_tail():
    assert rational_value_from_tail(EventuallyPeriodic((0,), (2,)), 1) == ExtendedRational(-1)
    assert rational_value_from_tail(EventuallyPeriodic((2,), (2,)), 0) == ExtendedRational(1)
    assert rational_value_from_tail(EventuallyPeriodic((5, 3), (2,)), 2) == ExtendedRational(9, 2)
    assert rational_value_from_tail(EventuallyPeriodic((0,), (-2,)), 1) == ExtendedRational(1)
    with pytest.raises(ValueError):
        rational_value_from_tail(EventuallyPeriodic((0,), (3,)), 1)
    with pytest.raises(ValueError):
        rational_value_from_tail(EventuallyPeriodic((5, 3), (2,)), 1)

def test_extended_rational_value_case2a():
    trace = PhiTrace()
    assert extended_rational_value_case2a(trace, 1) == INFINITY
    trace.stable_prefix = (4,)
    assert extended_rational_value_case2a(trace, 2) == ExtendedRational(4)
    with pytest.raises(ValueError):
        extended_rational_value_case2a(trace, 3)
    committed = PhiTrace()
    committed.rows = [(4, 5, 1)]
    committed.commit(2)
    assert extended_rational_value_case2a(committed, 2) == ExtendedRational(4)

def test_detect_fixed_point():
    certificate = _certificate(EventuallyPeriodic((9,), (4,)))
    assert certificate.kind == CertificateKind.FIXED_POINT
    assert certificate.n1 == 0
    assert verify_certificate(certificate)

def test_detect_exact_cycle_of_zeros():
    certificate = _certificate(EventuallyPeriodic((2,), (0,)))
    assert certificate.kind == CertificateKind.EXACT_CYCLE
    assert (certificate.n1, certificate.n2) == (0, 1)
    assert certificate.p == 1
    assert verify_certificate(certificate)
    assert not verify_certificate(replace(certificate, n2=certificate.n1))

def test_detect_shift_cycle():
    certificate = _certificate(EventuallyPeriodic((1,), (1, 5)))
    assert certificate.kind == CertificateKind.SHIFT_CYCLE
    assert (certificate.n1, certificate.n2) == (1, 2)
    assert certificate.limit_stream() == EventuallyPeriodic((0,), (3,))
    assert verify_certificate(certificate)
    assert not verify_certificate(replace(certificate, emitted_period=(4,)))

def test_detect_drift_cycle():
    certificate = _certificate(EventuallyPeriodic((1,), (0, 3)))
    assert certificate.kind == CertificateKind.DRIFT_CYCLE
    assert (certificate.n1, certificate.n2) == (1, 2)
    assert certificate.drift_position == 0
    assert verify_certificate(certificate)
    assert not verify_certificate(replace(certificate, drift_delta=2))
    assert certificate.to_dic()["escapes"] is True

def test_slot_map_step():
    zero = StepInfo.removed(Rule.ZERO, 3)
    plus = StepInfo.removed(Rule.PLUS_ONE, 3)
    assert slot_map_step(1, zero) == 1
    assert slot_map_step(2, zero) == 2
    assert slot_map_step(3, zero) is None
    assert slot_map_step(4, zero) == 2
    assert slot_map_step(6, zero) == 4
    assert slot_map_step(2, plus) == 2
    assert slot_map_step(3, plus) is None
    assert slot_map_step(4, plus) == 3
    assert slot_map_step(5, StepInfo.fixed()) == 5

@settings(max_examples=500, deadline=None)
@given(good_periodic_streams())
def test_good_coefficients_converge(stream):
    report = classify(stream)
    tail = canonicalize(stream).period
    if tail in ((2,), (-2,)):
        assert report.status == Status.CONVERGES_RATIONAL
        assert enclose_value(stream, 50).contains(report.value)
    else:
        assert report.status == Status.CONVERGES_IRRATIONAL

@settings(max_examples=300, deadline=None)
@given(periodic_streams())
def test_certificates_replay(stream):
    report = classify(stream, StepBudget(max_steps=2_000))
    assume(report.is_definite)
    assert verify_certificate(report.certificate)

@settings(max_examples=300, deadline=None)
@given(periodic_streams())
def test_classification_is_phi_invariant(stream):
    budget = StepBudget(max_steps=2_000)
    state, _ = phi_step(PhiState(canonicalize(stream)))
    before = classify(stream, budget)
    after = classify(state.stream, budget)
    assume(before.is_definite and after.is_definite)
    assert before.status == after.status
    if before.value is not None and after.value is not None:
        assert before.value == after.value

@settings(max_examples=300, deadline=None)
@given(periodic_streams())
def test_divergent_streams_revisit_two_vertices(stream):
    report = classify(stream, StepBudget(max_steps=2_000))
    if report.status != Status.DIVERGES or report.mode != Mode.EXACT:
        return
    histogram = revisit_histogram(path_from_stream(stream, 500))
    assert 2 <= len(histogram.revisited(10))
    assert all(10 <= count for _, count in report.divergence_witness)

@settings(max_examples=300, deadline=None)
@given(periodic_streams())
def test_exact_values_are_consistent(stream):
    report = classify(stream, StepBudget(max_steps=2_000))
    if report.value is None or report.certificate is None:
        return
    certificate = report.certificate
    if certificate.kind == CertificateKind.DRIFT_CYCLE:
        # each step deletes at most two convergents, so the stable one sits early.
        depth = report.p_liminf + 2 * certificate.n1
        assert report.value in path_from_stream(stream, depth).vertices
    else:
        assert enclose_value(report.limit_stream, 50).contains(report.value)

def test_shift_cycle_value_lies_in_enclosure():
    report = classify(EventuallyPeriodic((1,), (1, 4)))
    assert report.certificate.kind == CertificateKind.SHIFT_CYCLE
    assert report.limit_stream == EventuallyPeriodic((0,), (2,))
    assert report.value == ExtendedRational(-1)
    assert enclose_value(report.limit_stream, 50).contains(report.value)

@pytest.mark.parametrize("stream", [
    EventuallyPeriodic((1,), (0, 3)),
    EventuallyPeriodic((1,), (1, 5)),
    EventuallyPeriodic((0,), (3,)),
    EventuallyPeriodic((5, 3), (2,)),
])
def test_convergent_paths_stop_revisiting(stream):
    report = classify(stream)
    assert report.status != Status.DIVERGES
    counts = Counter(path_from_stream(stream, 200).vertices[101:])
    assert all(count <= 2 for vertex, count in counts.items() if vertex != report.value)

@settings(max_examples=200, deadline=None)
@given(good_periodic_streams())
def test_good_convergent_paths_never_revisit(stream):
    counts = Counter(path_from_stream(stream, 200).vertices[101:])
    assert max(counts.values()) == 1
