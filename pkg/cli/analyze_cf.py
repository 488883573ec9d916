import argparse
from cf_core import StepBudget
from classifier import CfClassifier
from classifier import ClassificationReport
from classifier import Status
from .cf_parser import CfExpression
from .cf_parser import CfSyntaxError
from .cf_parser import parse_cf
from .config import get_config
from .config import load_budget
from farey import FareySvgRenderer
from farey import FareyPath
from farey import path_from_stream
from farey import Viewport
from fractions import Fraction
import json
from moebius import convergents
from moebius import ConvergentSeq
from pathlib import Path
from phi_engine import phi_trace
from phi_engine import PhiTrace
from .report_document import error_dic
from .report_document import ReportDocument
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.tree import Tree
import sys
from typing import Optional

EXIT_DEFINITE: int = 0
EXIT_ERROR: int = 1
EXIT_UNKNOWN: int = 2
PHI_LOOKAHEAD: int = 4

console: Console = Console(soft_wrap=True)
error_console: Console = Console(stderr=True, soft_wrap=True)

def _write_json(dic: dict) -> None:
    sys.stdout.write(json.dumps(dic) + "\n")

def _exit_code(report: ClassificationReport) -> int:
    return EXIT_UNKNOWN if report.status == Status.UNKNOWN else EXIT_DEFINITE

def _print_report(source: str, report: ClassificationReport, digits: int) -> None:
    table: Table = Table(title=escape(source))
    table.add_column("field")
    table.add_column("value")
    table.add_row("status", report.status.value)
    table.add_row("mode", report.mode.value)
    table.add_row("p", "inf" if report.p_liminf is None else str(report.p_liminf))
    table.add_row("steps", str(report.steps_used))
    if report.value is not None:
        table.add_row("value", escape(report.value.label()))
    if report.enclosure is not None:
        table.add_row("enclosure", escape(report.enclosure.decimal(digits)))
    if report.certificate is not None:
        certificate = report.certificate
        table.add_row(
            "certificate",
            f"{certificate.kind.value} n1={certificate.n1} n2={certificate.n2}",
        )
    if 0 < len(report.divergence_witness):
        table.add_row("revisited", ", ".join(
            f"{vertex.label()} x{count}" for vertex, count in report.divergence_witness
        ))
    if report.evidence != "":
        table.add_row("evidence", escape(report.evidence))
    console.print(table)

def analyze(args: argparse.Namespace, expression: CfExpression, budget: StepBudget) -> int:
    report: ClassificationReport = CfClassifier(
        budget, digits=args.digits, verbose=args.verbose
    ).classify(expression.stream)
    if args.json:
        _write_json(ReportDocument.from_report(args.expr, report, args.digits).to_dic())
    else:
        _print_report(args.expr, report, args.digits)
    return _exit_code(report)

def show_convergents(args: argparse.Namespace, expression: CfExpression) -> int:
    seq: ConvergentSeq = convergents(expression.stream, args.n)
    if args.json:
        _write_json(ReportDocument.from_convergents(args.expr, seq).to_dic())
    else:
        for k, v in enumerate(seq.entries):
            console.print(f"v_{k} = {escape(v.label())}")
    return EXIT_DEFINITE

def show_phi(args: argparse.Namespace, expression: CfExpression, budget: StepBudget) -> int:
    trace: PhiTrace = phi_trace(expression.stream, args.n, budget, lookahead=PHI_LOOKAHEAD)
    if args.json:
        _write_json(ReportDocument.from_trace(args.expr, trace).to_dic())
        return EXIT_DEFINITE
    q_seq: list[Optional[int]] = trace.q_seq()
    q_header: str = "q" if trace.committed_p is not None else "q (provisional)"
    table: Table = Table(title=escape(args.expr))
    for column in ("n", "p", q_header, f"coefficients 0..p+{PHI_LOOKAHEAD}"):
        table.add_column(column)
    for n, (p, row) in enumerate(zip(trace.p_seq, trace.rows)):
        table.add_row(
            str(n),
            "inf" if p is None else str(p),
            "" if q_seq[n] is None else str(q_seq[n]),
            escape("[" + ", ".join(str(b) for b in row) + "]"),
        )
    console.print(table)
    return EXIT_DEFINITE

def show_farey(args: argparse.Namespace, expression: CfExpression) -> int:
    path: FareyPath = path_from_stream(expression.stream, args.n)
    viewport: Viewport = Viewport(
        xmin=Fraction(args.xmin),
        xmax=Fraction(args.xmax),
        height=Fraction(args.height),
        labels=args.labels,
        tessellation_depth=args.tessellation_depth,
    )
    tree: Tree = Tree(escape(args.expr))
    tree.add(escape(" -> ".join(vertex.label() for vertex in path.vertices)))
    if args.svg is not None:
        svg_path: Path = Path(args.svg).resolve()
        FareySvgRenderer(viewport).save(path, svg_path)
        tree.add(f"svg: {escape(str(svg_path))}")
    if args.json is not None:
        json_path: Path = Path(args.json).resolve()
        json_path.write_text(ReportDocument.from_path(args.expr, path).to_json())
        tree.add(f"json: {escape(str(json_path))}")
    console.print(tree)
    return EXIT_DEFINITE

def show_value(args: argparse.Namespace, expression: CfExpression, budget: StepBudget) -> int:
    report: ClassificationReport = CfClassifier(budget, digits=args.digits).classify(
        expression.stream
    )
    if args.json:
        _write_json(ReportDocument.from_value(args.expr, report, args.digits).to_dic())
    elif report.value is not None:
        console.print(escape(report.value.label()))
    elif report.enclosure is not None:
        console.print(escape(report.enclosure.decimal(args.digits)))
    else:
        console.print(f"no value: {report.status.value}")
    return _exit_code(report)

def main(args: list[str]) -> int:
    json_errors: bool = "--json" in args
    try:
        parser: argparse.ArgumentParser = get_config()
        all_args: argparse.Namespace = parser.parse_args(args)
        if all_args.command == "farey":
            json_errors = False
        expression: CfExpression = parse_cf(all_args.expr)
        if all_args.command == "convergents":
            return show_convergents(all_args, expression)
        if all_args.command == "farey":
            return show_farey(all_args, expression)
        budget: StepBudget = load_budget(
            all_args.config_json, all_args.max_steps, all_args.access_budget
        )
        if all_args.command == "analyze":
            return analyze(all_args, expression, budget)
        if all_args.command == "phi":
            return show_phi(all_args, expression, budget)
        return show_value(all_args, expression, budget)
    except Exception as e:
        position: Optional[int] = e.position if isinstance(e, CfSyntaxError) else None
        if json_errors:
            sys.stderr.write(json.dumps(error_dic(str(e), position)) + "\n")
        else:
            error_console.print(f"error: {escape(str(e))}")
        return EXIT_ERROR

def entry_point() -> None:
    sys.exit(main(sys.argv[1:]))

if __name__ == "__main__":
    entry_point()
