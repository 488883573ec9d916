from .certificates import CertificateDetector
from .certificates import CertificateKind
from .certificates import CycleCertificate
from cf_core import AccessBudget
from cf_core import BudgetExhaustedError
from cf_core import canonicalize
from cf_core import CoefficientStream
from cf_core import EventuallyPeriodic
from cf_core import ExtendedRational
from cf_core import Finite
from cf_core import Generator
from cf_core import StepBudget
from collections import Counter
from farey import FareyPath
from farey import path_from_stream
from farey import revisit_histogram
from moebius import enclose_to_digits
from moebius import Enclosure
from moebius import evaluate_finite
from phi_engine import PhiTrace
from phi_engine import PhiTracer
from .report import ClassificationReport
from .report import Mode
from .report import Status
from rich import print
from rich.markup import escape
from .tail_values import extended_rational_value_case2a
from .tail_values import rational_value_from_tail
from .tail_values import tail_tendency
from .tail_values import TailTendency
from .tail_values import trailing_run
from typing import Optional
import warnings

class CfClassifier:
    """decides how a negative continued fraction behaves by running Φ.

    Finite inputs are evaluated directly. EventuallyPeriodic inputs are traced until a
    certificate settles the case (EXACT mode). Generator inputs are traced until the
    recorded first bad positions and coefficients meet one of the empirical thresholds
    in StepBudget (EMPIRICAL mode). Running out of steps or coefficient accesses gives
    an UNKNOWN report instead of an error.
    """
    def __init__(
        self,
        budget: Optional[StepBudget] = None,
        digits: int = 12,
        witness_depth: int = 500,
        verbose: bool = False
    ) -> None:
        """initialization.

        Args:
            budget (Optional[StepBudget]): limits and thresholds. Default to StepBudget().
            digits (int): decimal digits an irrational enclosure is narrowed to.
            witness_depth (int): number of convergents scanned for revisited vertices
                when the input diverges.
            verbose (bool): print progress.
        """
        self.budget: StepBudget = StepBudget() if budget is None else budget
        self.digits: int = digits
        self.witness_depth: int = witness_depth
        self.verbose: bool = verbose

    def classify(self, stream: CoefficientStream) -> ClassificationReport:
        if isinstance(stream, Finite):
            return self._classify_finite(stream)
        if isinstance(stream, EventuallyPeriodic):
            return self._classify_exact(stream)
        if isinstance(stream, Generator):
            return self._classify_empirical(stream)
        raise NotImplementedError(f"unsupported stream type {type(stream).__name__}.")

    def _log(self, message: str) -> None:
        if self.verbose:
            print(escape(message))

    def _enclose(self, stream: CoefficientStream) -> Enclosure:
        return enclose_to_digits(
            stream, self.digits, self.budget.max_enclosure_depth,
            AccessBudget(self.budget.access_budget)
        )

    def _divergence_witness(
        self,
        stream: CoefficientStream
    ) -> tuple[tuple[ExtendedRational, int], ...]:
        try:
            path: FareyPath = path_from_stream(
                stream, self.witness_depth, AccessBudget(self.budget.access_budget)
            )
        except BudgetExhaustedError:
            return ()
        return revisit_histogram(path).top_two

    def _classify_finite(self, stream: Finite) -> ClassificationReport:
        value: ExtendedRational = evaluate_finite(stream)
        status: Status = Status.CONVERGES_EXTENDED_RATIONAL if value.is_infinite \
            else Status.CONVERGES_RATIONAL
        return ClassificationReport(status=status, mode=Mode.FINITE_INPUT, value=value)

    def _classify_exact(self, stream: EventuallyPeriodic) -> ClassificationReport:
        tracer: PhiTracer = PhiTracer(stream, self.budget)
        detector: CertificateDetector = CertificateDetector(self.budget)
        self._log(f"classify {stream} exactly, at most {self.budget.max_steps} steps")
        certificate: Optional[CycleCertificate] = None
        while True:
            certificate = detector.observe(
                tracer.state.step, tracer.state.stream, tracer.current_p
            )
            if certificate is not None or self.budget.max_steps <= tracer.trace.num_steps:
                break
            tracer.advance()
        trace: PhiTrace = tracer.trace
        trace.finalize(
            () if certificate is None else certificate.stable_coefficients(trace.num_steps)
        )
        if certificate is None:
            warnings.warn(
                f"no certificate for {stream} within {self.budget.max_steps} steps."
            )
            return ClassificationReport(
                status=Status.UNKNOWN,
                mode=Mode.EXACT,
                p_liminf=trace.running_min_p,
                steps_used=trace.num_steps,
                trace=trace,
                evidence=f"no certificate within {self.budget.max_steps} steps",
            )
        self._log(
            f"{certificate.kind.value} certificate between steps {certificate.n1} and {certificate.n2}"
        )
        return self._report_from_certificate(stream, certificate, trace)

    def _report_from_certificate(
        self,
        stream: EventuallyPeriodic,
        certificate: CycleCertificate,
        trace: PhiTrace
    ) -> ClassificationReport:
        trace.commit(certificate.p)
        common: dict = {
            "mode": Mode.EXACT,
            "p_liminf": certificate.p,
            "certificate": certificate,
            "steps_used": trace.num_steps,
            "trace": trace,
        }
        if certificate.kind in (CertificateKind.FIXED_POINT, CertificateKind.SHIFT_CYCLE):
            limit: EventuallyPeriodic = certificate.limit_stream()
            if tail_tendency(limit) != TailTendency.NEITHER:
                return ClassificationReport(
                    status=Status.CONVERGES_RATIONAL,
                    value=rational_value_from_tail(limit, len(limit.prefix)),
                    limit_stream=limit,
                    **common,
                )
            return ClassificationReport(
                status=Status.CONVERGES_IRRATIONAL,
                enclosure=self._enclose(limit),
                limit_stream=limit,
                **common,
            )
        if certificate.kind == CertificateKind.DRIFT_CYCLE and certificate.escapes:
            return ClassificationReport(
                status=Status.CONVERGES_EXTENDED_RATIONAL,
                value=extended_rational_value_case2a(trace, certificate.p),
                **common,
            )
        return ClassificationReport(
            status=Status.DIVERGES,
            divergence_witness=self._divergence_witness(stream),
            **common,
        )

    def _classify_empirical(self, stream: Generator) -> ClassificationReport:
        name: str = stream.name if stream.name is not None else "generator"
        self._log(f"classify {name} empirically, at most {self.budget.max_steps} steps")
        try:
            tracer: PhiTracer = PhiTracer(stream, self.budget)
            while True:
                report: Optional[ClassificationReport] = self._empirical_verdict(
                    stream, tracer
                )
                if report is not None:
                    warnings.warn(
                        f"{name}: {report.status.value} is supported by a finite trace only."
                    )
                    return report
                if self.budget.max_steps <= tracer.trace.num_steps:
                    break
                tracer.advance()
        except BudgetExhaustedError as e:
            warnings.warn(f"{name}: {e}")
            return ClassificationReport(
                status=Status.UNKNOWN, mode=Mode.EMPIRICAL, evidence=str(e)
            )
        trace: PhiTrace = tracer.trace
        trace.finalize()
        warnings.warn(f"{name}: no empirical verdict within {self.budget.max_steps} steps.")
        return ClassificationReport(
            status=Status.UNKNOWN,
            mode=Mode.EMPIRICAL,
            p_liminf=trace.running_min_p,
            steps_used=trace.num_steps,
            trace=trace,
            evidence=f"no empirical verdict within {self.budget.max_steps} steps",
        )

    def _empirical_converges(
        self,
        trace: PhiTrace,
        stable: tuple[int, ...],
        evidence: str
    ) -> Optional[ClassificationReport]:
        if len(stable) == 0:
            return None
        common: dict = {
            "mode": Mode.EMPIRICAL,
            "steps_used": trace.num_steps,
            "trace": trace,
            "evidence": evidence,
        }
        b, start = trailing_run(stable)
        if b is not None and len(stable) <= 2 * (len(stable) - start):
            limit: EventuallyPeriodic = canonicalize(EventuallyPeriodic(stable[:start], (b,)))
            return ClassificationReport(
                status=Status.CONVERGES_RATIONAL,
                value=rational_value_from_tail(limit, len(limit.prefix)),
                limit_stream=limit,
                **common,
            )
        observed: Finite = Finite(stable)
        return ClassificationReport(
            status=Status.CONVERGES_IRRATIONAL,
            enclosure=self._enclose(observed),
            limit_stream=observed,
            **common,
        )

    def _empirical_verdict(
        self,
        stream: Generator,
        tracer: PhiTracer
    ) -> Optional[ClassificationReport]:
        """checked in order: p^(n) escaping, q^(n) escaping, a head window recurring."""
        trace: PhiTrace = tracer.trace
        budget: StepBudget = self.budget
        if tracer.is_fixed:
            trace.finalize()
            return self._empirical_converges(
                trace, trace.provisional_prefix,
                f"no bad coefficient below position {tracer.horizon}"
            )
        if trace.num_steps < budget.converge_window:
            return None
        window: list[int] = trace.p_seq[-budget.converge_window:]
        if all(a <= b for a, b in zip(window, window[1:])) \
                and budget.converge_min_position < window[-1]:
            trace.finalize()
            report = self._empirical_converges(
                trace, trace.provisional_prefix,
                f"first bad position nondecreasing over {budget.converge_window} steps, "
                f"now {window[-1]}"
            )
            if report is not None:
                return report
        p_min: int = trace.running_min_p
        visits: list[int] = [n for n, p in enumerate(trace.p_seq) if p == p_min]
        q_seq: list[Optional[int]] = trace.q_seq(p_min)
        recent: list[int] = [q_seq[n] for n in visits[-budget.extended_recurrences:]]
        if len(recent) == budget.extended_recurrences \
                and all(a < b for a, b in zip(recent, recent[1:])):
            trace.finalize()
            trace.commit(p_min)
            return ClassificationReport(
                status=Status.CONVERGES_EXTENDED_RATIONAL,
                mode=Mode.EMPIRICAL,
                p_liminf=p_min,
                value=extended_rational_value_case2a(trace, p_min),
                steps_used=trace.num_steps,
                trace=trace,
                evidence=f"q increased over the last {budget.extended_recurrences} visits of p = {p_min}",
            )
        heads: Counter[tuple[int, ...]] = Counter(trace.rows[n][:p_min] for n in visits)
        if budget.diverge_recurrences <= max(heads.values()):
            trace.finalize()
            trace.commit(p_min)
            return ClassificationReport(
                status=Status.DIVERGES,
                mode=Mode.EMPIRICAL,
                p_liminf=p_min,
                steps_used=trace.num_steps,
                trace=trace,
                divergence_witness=self._divergence_witness(stream),
                evidence=f"coefficients 0..{p_min - 1} recurred {max(heads.values())} times at p = {p_min}",
            )
        return None

def classify(
    stream: CoefficientStream,
    budget: Optional[StepBudget] = None
) -> ClassificationReport:
    return CfClassifier(budget).classify(stream)
