import argparse
from cf_core import EventuallyPeriodic
from cf_core import StepBudget
from classifier import CfClassifier
from classifier import ClassificationReport
from classifier import Mode
from classifier import Status
from classifier import verify_certificate
from .cf_parser import format_cf
from .config import load_budget
import numpy as np
from numpy.random import Generator as RandomGenerator
import pandas as pd
from pandas import DataFrame
from pathlib import Path
from rich import print
from rich.table import Table
import sys
from tqdm import tqdm
from typing import Any
from typing import Optional
import warnings

def get_config() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="classify a random corpus of eventually periodic continued fractions."
    )
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--num-streams", type=int, default=2000)
    parser.add_argument("--max-coefficient", type=int, default=4)
    parser.add_argument("--max-prefix", type=int, default=6)
    parser.add_argument("--max-period", type=int, default=6)
    parser.add_argument("--witness-min-count", type=int, default=10)
    parser.add_argument("--max-steps", type=int, default=None)
    parser.add_argument("--access-budget", type=int, default=None)
    parser.add_argument("--config-json", type=str, default=None)
    parser.add_argument("--results-csv", type=str, default=None,
                        help="CSV file to write one row per stream into.")
    return parser

def random_stream(
    rng: RandomGenerator,
    max_coefficient: int,
    max_prefix: int,
    max_period: int
) -> EventuallyPeriodic:
    prefix_size: int = int(rng.integers(0, max_prefix + 1))
    period_size: int = int(rng.integers(1, max_period + 1))
    coeffs: list[int] = rng.integers(
        -max_coefficient, max_coefficient + 1, size=prefix_size + period_size
    ).tolist()
    return EventuallyPeriodic(tuple(coeffs[:prefix_size]), tuple(coeffs[prefix_size:]))

def check_stream(
    classifier: CfClassifier,
    stream: EventuallyPeriodic,
    witness_min_count: int
) -> dict[str, Any]:
    """classify one stream and re-check its certificate and divergence witness."""
    report: ClassificationReport = classifier.classify(stream)
    certificate_ok: Optional[bool] = None
    if report.certificate is not None:
        certificate_ok = verify_certificate(report.certificate)
    witness_ok: Optional[bool] = None
    if report.status == Status.DIVERGES and report.mode == Mode.EXACT:
        witness_ok = len(report.divergence_witness) == 2 and all(
            witness_min_count <= count for _, count in report.divergence_witness
        )
    return {
        "stream": format_cf(stream),
        "status": report.status.value,
        "certificate": None if report.certificate is None else report.certificate.kind.value,
        "steps_used": report.steps_used,
        "value": None if report.value is None else str(report.value),
        "certificate_ok": certificate_ok,
        "witness_ok": witness_ok,
    }

def summarize(results_df: DataFrame) -> Table:
    table: Table = Table(title="corpus summary")
    table.add_column("status")
    table.add_column("count", justify="right")
    table.add_column("rate", justify="right")
    total: int = len(results_df)
    for status, count in results_df["status"].value_counts().items():
        table.add_row(str(status), str(count), f"{count / total:.2%}")
    failed_certificates: int = int((results_df["certificate_ok"] == False).sum())
    failed_witnesses: int = int((results_df["witness_ok"] == False).sum())
    table.add_row("certificate replay failures", str(failed_certificates), "")
    table.add_row("divergence witness failures", str(failed_witnesses), "")
    return table

def corpus_passed(results_df: DataFrame) -> bool:
    """no certificate failed its replay and no divergent stream lacks its revisit witness."""
    return bool(
        (results_df["certificate_ok"] != False).all()
        and (results_df["witness_ok"] != False).all()
    )

def main(args: list[str]) -> int:
    parser = get_config()
    all_args = parser.parse_known_args(args)[0]
    budget: StepBudget = load_budget(
        all_args.config_json, all_args.max_steps, all_args.access_budget
    )
    rng: RandomGenerator = np.random.default_rng(all_args.seed)
    classifier: CfClassifier = CfClassifier(budget)
    print(f"seed: {all_args.seed} num_streams: {all_args.num_streams} budget: {budget}")
    rows: list[dict[str, Any]] = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in tqdm(range(all_args.num_streams)):
            stream: EventuallyPeriodic = random_stream(
                rng, all_args.max_coefficient, all_args.max_prefix, all_args.max_period
            )
            rows.append(check_stream(classifier, stream, all_args.witness_min_count))
    results_df: DataFrame = pd.DataFrame(rows)
    print(summarize(results_df))
    if all_args.results_csv is not None:
        results_path: Path = Path(all_args.results_csv).resolve()
        results_df.to_csv(results_path, index=False)
        print(f"results saved to {results_path}")
    unknown_rate: float = float((results_df["status"] == Status.UNKNOWN.value).mean())
    print(f"unknown rate: {unknown_rate:.2%}")
    return 0 if corpus_passed(results_df) else 1

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
