from __future__ import annotations
from cf_core import ExtendedRational
from classifier import ClassificationReport
from dataclasses import dataclass
from dataclasses import field
from farey import FareyPath
import json
from moebius import ConvergentSeq
from moebius import Enclosure
from phi_engine import PhiTrace
from typing import Any
from typing import Optional

SCHEMA_VERSION: str = "1"
COMMANDS: tuple[str, ...] = ("analyze", "convergents", "phi", "farey", "value")

def rational_str(value: ExtendedRational) -> str:
    return str(value)

def value_dic(
    value: Optional[ExtendedRational] = None,
    enclosure: Optional[Enclosure] = None,
    digits: int = 12
) -> Optional[dict[str, Any]]:
    """{"exact": "num/den" | "inf"} or {"enclosure": {"lo", "hi", "decimal"}}."""
    assert value is None or enclosure is None, "exact value and enclosure are exclusive."
    if value is not None:
        return {"exact": rational_str(value)}
    if enclosure is not None:
        return {
            "enclosure": {
                "lo": rational_str(enclosure.lo),
                "hi": rational_str(enclosure.hi),
                "decimal": enclosure.decimal(digits),
                "depth": enclosure.depth,
            }
        }
    return None

def p_str(p: Optional[int]) -> Any:
    return "inf" if p is None else p

@dataclass
class ReportDocument:
    """JSON document written by every subcommand."""
    command: str
    input: str
    body: dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dic(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "input": self.input,
            **self.body,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dic())

    @classmethod
    def from_report(
        cls,
        source: str,
        report: ClassificationReport,
        digits: int = 12,
        trace_excerpt: int = 20,
        command: str = "analyze"
    ) -> ReportDocument:
        body: dict[str, Any] = {
            "status": report.status.value,
            "mode": report.mode.value,
            "p_liminf": p_str(report.p_liminf),
            "steps_used": report.steps_used,
            "value": value_dic(report.value, report.enclosure, digits),
            "certificate": None if report.certificate is None else report.certificate.to_dic(),
            "evidence": report.evidence,
        }
        if 0 < len(report.divergence_witness):
            body["divergence_witness"] = [
                {"vertex": rational_str(vertex), "count": count}
                for vertex, count in report.divergence_witness
            ]
        if report.trace is not None and 0 < trace_excerpt:
            body["trace"] = {
                "p_seq": [p_str(p) for p in report.trace.p_seq[:trace_excerpt]],
                "q_seq": report.trace.q_seq()[:trace_excerpt],
                "stable_prefix": list(report.trace.stable_prefix[:trace_excerpt]),
                "provisional_prefix": list(report.trace.provisional_prefix[:trace_excerpt]),
            }
        return cls(command, source, body)

    @classmethod
    def from_convergents(cls, source: str, seq: ConvergentSeq) -> ReportDocument:
        return cls("convergents", source, {
            "convergents": [rational_str(v) for v in seq.entries],
        })

    @classmethod
    def from_trace(cls, source: str, trace: PhiTrace) -> ReportDocument:
        committed: bool = trace.committed_p is not None
        return cls("phi", source, {
            "rows": [list(row) for row in trace.rows],
            "p_seq": [p_str(p) for p in trace.p_seq],
            "q_seq": trace.q_seq(),
            "q_committed": committed,
        })

    @classmethod
    def from_path(cls, source: str, path: FareyPath) -> ReportDocument:
        return cls("farey", source, path.to_dic())

    @classmethod
    def from_value(
        cls,
        source: str,
        report: ClassificationReport,
        digits: int
    ) -> ReportDocument:
        return cls("value", source, {
            "status": report.status.value,
            "mode": report.mode.value,
            "value": value_dic(report.value, report.enclosure, digits),
        })

def error_dic(message: str, position: Optional[int] = None) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "error": message, "position": position}

def validate_document(dic: dict[str, Any]) -> None:
    """check the published layout of a document.

    Raises:
        ValueError: a required key is missing or has the wrong type.
    """
    if dic.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"schema_version must be {SCHEMA_VERSION}. got {dic.get('schema_version')}.")
    if "error" in dic:
        if not isinstance(dic["error"], str):
            raise ValueError("error must be a string.")
        return
    if dic.get("command") not in COMMANDS:
        raise ValueError(f"command must be one of {COMMANDS}. got {dic.get('command')}.")
    if not isinstance(dic.get("input"), str):
        raise ValueError("input must be a string.")
    value: Optional[dict[str, Any]] = dic.get("value")
    if value is not None:
        if len(value) != 1 or not ("exact" in value or "enclosure" in value):
            raise ValueError(f"value must hold exactly one of exact and enclosure. got {value}.")
        if "enclosure" in value and not {"lo", "hi", "decimal"} <= set(value["enclosure"]):
            raise ValueError(f"enclosure needs lo, hi and decimal. got {value['enclosure']}.")
    if dic["command"] in ("analyze", "value"):
        for key in ("status", "mode"):
            if not isinstance(dic.get(key), str):
                raise ValueError(f"{key} must be a string.")
    if dic["command"] == "farey":
        for vertex in dic.get("vertices", []):
            if not (isinstance(vertex.get("num"), str) and isinstance(vertex.get("den"), str)):
                raise ValueError(f"vertex must carry num and den as strings. got {vertex}.")
