import argparse
from cf_core import StepBudget
from pathlib import Path
from typing import Optional

class CliUsageError(ValueError):
    """bad command line."""

class _RaisingArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise CliUsageError(message)

def _add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-steps", type=int, default=None,
                        help="maximum number of Φ steps. Default to 10000.")
    parser.add_argument("--access-budget", type=int, default=None,
                        help="maximum number of generator calls. Default to 1000000.")
    parser.add_argument("--config-json", type=str, default=None,
                        help="JSON object overriding StepBudget fields.")

def get_config() -> argparse.ArgumentParser:
    parser = _RaisingArgumentParser(
        prog="analyze_cf", description="negative continued fractions under Φ."
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=_RaisingArgumentParser
    )
    analyze = subparsers.add_parser("analyze", help="classify a continued fraction.")
    analyze.add_argument("expr", type=str)
    _add_budget_arguments(analyze)
    output = analyze.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true")
    output.add_argument("--text", action="store_true")
    analyze.add_argument("--digits", type=int, default=12)
    analyze.add_argument("--verbose", action="store_true")
    convergents = subparsers.add_parser("convergents", help="first n convergents.")
    convergents.add_argument("expr", type=str)
    convergents.add_argument("-n", type=int, required=True)
    convergents.add_argument("--json", action="store_true")
    phi = subparsers.add_parser("phi", help="coefficient rows of Φ^0, ..., Φ^n.")
    phi.add_argument("expr", type=str)
    phi.add_argument("-n", type=int, required=True)
    phi.add_argument("--json", action="store_true")
    _add_budget_arguments(phi)
    farey = subparsers.add_parser("farey", help="convergent path in the Farey graph.")
    farey.add_argument("expr", type=str)
    farey.add_argument("-n", type=int, required=True)
    farey.add_argument("--svg", type=str, default=None, help="SVG file to write.")
    farey.add_argument("--json", type=str, default=None, help="path JSON file to write.")
    farey.add_argument("--labels", action="store_true")
    farey.add_argument("--tessellation-depth", type=int, default=None)
    farey.add_argument("--xmin", type=str, default="-1")
    farey.add_argument("--xmax", type=str, default="3")
    farey.add_argument("--height", type=str, default="2")
    value = subparsers.add_parser("value", help="exact value or certified enclosure.")
    value.add_argument("expr", type=str)
    value.add_argument("--digits", type=int, default=12)
    value.add_argument("--json", action="store_true")
    _add_budget_arguments(value)
    return parser

def load_budget(
    config_json: Optional[str],
    max_steps: Optional[int] = None,
    access_budget: Optional[int] = None
) -> StepBudget:
    """StepBudget from an optional JSON file. explicit flags win over the file."""
    budget: StepBudget = StepBudget()
    if config_json is not None:
        budget = StepBudget.from_json(Path(config_json).resolve())
    return budget.updated(max_steps=max_steps, access_budget=access_budget)
