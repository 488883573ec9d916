from __future__ import annotations
from .certificates import CycleCertificate
from cf_core import CoefficientStream
from cf_core import ExtendedRational
from dataclasses import dataclass
from enum import Enum
from moebius import Enclosure
from phi_engine import PhiTrace
from typing import Optional

class Status(Enum):
    CONVERGES_RATIONAL = "converges-rational"
    CONVERGES_IRRATIONAL = "converges-irrational"
    CONVERGES_EXTENDED_RATIONAL = "converges-extended-rational"
    DIVERGES = "diverges"
    UNKNOWN = "unknown"

class Mode(Enum):
    EXACT = "exact"
    EMPIRICAL = "empirical"
    FINITE_INPUT = "finite-input"

@dataclass(frozen=True)
class ClassificationReport:
    """verdict on one continued fraction.

    Args:
        status (Status): which case of the classification applies.
        mode (Mode): EXACT verdicts are backed by a certificate, EMPIRICAL ones by a
            finite trace only.
        p_liminf (Optional[int]): liminf of the first bad positions. None means infinity
            or not determined.
        value (Optional[ExtendedRational]): exact limit.
        enclosure (Optional[Enclosure]): interval around an irrational (or empirically
            located) limit.
        certificate (Optional[CycleCertificate]): witness of an exact verdict.
        steps_used (int): number of Φ steps applied.
        limit_stream (Optional[CoefficientStream]): limit continued fraction b* when
            p^(n) tends to infinity.
        trace (Optional[PhiTrace]): recorded trace.
        divergence_witness (tuple[tuple[ExtendedRational, int], ...]): the two most
            revisited convergents and their counts, for divergent inputs.
        evidence (str): short explanation of an empirical or unknown verdict.
    """
    status: Status
    mode: Mode
    p_liminf: Optional[int] = None
    value: Optional[ExtendedRational] = None
    enclosure: Optional[Enclosure] = None
    certificate: Optional[CycleCertificate] = None
    steps_used: int = 0
    limit_stream: Optional[CoefficientStream] = None
    trace: Optional[PhiTrace] = None
    divergence_witness: tuple[tuple[ExtendedRational, int], ...] = ()
    evidence: str = ""

    def __post_init__(self) -> None:
        assert self.value is None or self.enclosure is None, \
            "a report carries an exact value or an enclosure, never both."
        if self.mode == Mode.EXACT and self.status in (
            Status.CONVERGES_RATIONAL, Status.CONVERGES_EXTENDED_RATIONAL
        ):
            assert self.value is not None, f"exact {self.status.value} verdict without value."
        if self.status == Status.CONVERGES_IRRATIONAL:
            assert self.value is None, "irrational limits are reported as enclosures."
        if self.status == Status.UNKNOWN:
            assert self.certificate is None, "unknown verdicts carry no certificate."

    @property
    def is_definite(self) -> bool:
        return self.status != Status.UNKNOWN
