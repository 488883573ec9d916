from cf_core import canonicalize
from cf_core import EventuallyPeriodic
from cf_core import Finite
from cf_core import StepBudget
from cli import BUILTINS
from cli import CfSyntaxError
from cli import Convention
from cli import format_cf
from cli import parse_cf
from cli import validate_document
from cli.analyze_cf import main
from cli.config import CliUsageError
from cli.config import get_config
from cli.config import load_budget
from hypothesis import given
from hypothesis import settings
import json
import pandas as pd
import pytest
from tests.strategies import finite_streams
from tests.strategies import periodic_streams

def _run_json(capsys, args: list[str]) -> tuple[int, dict]:
    code = main(args)
    out = capsys.readouterr().out
    dic = json.loads(out)
    validate_document(dic)
    return code, dic

def test_parse_periodic():
    expression = parse_cf("[3,0,-3;(3,-3)]")
    assert expression.stream == EventuallyPeriodic((3, 0, -3), (3, -3))
    assert expression.convention == Convention.NEGATIVE

def test_parse_forms():
    assert parse_cf("[]").stream == Finite(())
    assert parse_cf("[ 7 , -3 ]").stream == Finite((7, -3))
    assert parse_cf("[(1)]").stream == EventuallyPeriodic((), (1,))
    assert parse_cf("[;(1)]").stream == EventuallyPeriodic((), (1,))
    assert parse_cf("[2,(3)]").stream == EventuallyPeriodic((2,), (3,))

def test_parse_regular_oscillation():
    expression = parse_cf("reg:[1;(-1,1)]")
    assert expression.convention == Convention.REGULAR
    assert canonicalize(expression.stream) == EventuallyPeriodic((), (1,))

def test_parse_builtin():
    stream = parse_cf("@example3").stream
    assert stream is BUILTINS["@example3"]
    assert stream.coefficients(8) == [1, 0, 2, 0, 3, 0, 4, 0]
    assert stream.coefficient_at(4) == 3

@pytest.mark.parametrize(
    "text, position", [
        ("[1,x]", 3),
        ("[1;()]", 4),
        ("[1,2", 4),
        ("@nope", 0),
        ("[1] x", 4),
    ]
)
def test_parse_errors(text, position):
    with pytest.raises(CfSyntaxError) as e:
        parse_cf(text)
    assert e.value.position == position

def test_parse_empty_period_message():
    with pytest.raises(CfSyntaxError, match="empty period"):
        parse_cf("[1;()]")

def test_format_cf():
    assert format_cf(Finite((3, 2))) == "[3,2]"
    assert format_cf(EventuallyPeriodic((2, 3), (3,))) == "[2;(3)]"
    assert format_cf(EventuallyPeriodic((), (1, -1))) == "[(1,-1)]"
    assert format_cf(BUILTINS["@example1"]) == "@example1"

@settings(max_examples=1000)
@given(periodic_streams(min_value=-9, max_value=9))
def test_periodic_text_round_trip(stream):
    assert canonicalize(parse_cf(format_cf(stream)).stream) == canonicalize(stream)

@settings(max_examples=300)
@given(finite_streams())
def test_finite_text_round_trip(stream):
    assert parse_cf(format_cf(stream)).stream == stream

def test_analyze_rational(capsys):
    code, dic = _run_json(capsys, ["analyze", "@example1", "--json"])
    assert code == 0
    assert dic["status"] == "converges-rational"
    assert dic["value"] == {"exact": "1/1"}

def test_analyze_diverges(capsys):
    code, dic = _run_json(capsys, ["analyze", "@example4", "--json"])
    assert code == 0
    assert dic["status"] == "diverges"

def test_analyze_certificate(capsys):
    code, dic = _run_json(capsys, ["analyze", "[1;(0,3)]", "--json"])
    assert code == 0
    assert dic["status"] == "converges-extended-rational"
    assert dic["value"] == {"exact": "inf"}
    assert dic["certificate"]["kind"] == "drift-cycle"
    assert dic["mode"] == "exact"

def test_analyze_unknown_exit_code(capsys):
    code, dic = _run_json(capsys, ["analyze", "[(1)]", "--max-steps", "0", "--json"])
    assert code == 2
    assert dic["status"] == "unknown"

def test_analyze_text(capsys):
    assert main(["analyze", "[0;(3)]", "--text"]) == 0
    out = capsys.readouterr().out
    assert "converges-irrational" in out
    assert "fixed-point" in out

def test_phi_rows(capsys):
    code, dic = _run_json(capsys, ["phi", "@example2", "-n", "3", "--json"])
    assert code == 0
    assert dic["rows"] == [
        [1, 2, 1, 3, 1, 4, 1],
        [1, 1, 2, 1, 4, 1],
        [0, 1, 1, 4, 1, 5],
        [-1, 0, 4, 1, 5, 1],
    ]
    assert dic["p_seq"] == [2, 1, 1, 1]
    assert dic["q_committed"] is False

def test_phi_triangular_leading_coefficients(capsys):
    _, dic = _run_json(capsys, ["phi", "@example3", "-n", "20", "--json"])
    assert [row[0] for row in dic["rows"][1:]] == [(n + 1) * (n + 2) // 2 for n in range(1, 21)]

def test_phi_text_marks_provisional_q(capsys):
    assert main(["phi", "@example3", "-n", "3"]) == 0
    assert "q (provisional)" in capsys.readouterr().out

def test_convergents_oscillate(capsys):
    code, dic = _run_json(capsys, ["convergents", "reg:[1;(-1,1)]", "-n", "9", "--json"])
    assert code == 0
    assert dic["convergents"] == ["1/1", "0/1", "inf"] * 3

def test_value_enclosure(capsys):
    assert main(["value", "[0;(3)]"]) == 0
    assert capsys.readouterr().out.startswith("[-0.38196601125")
    code, dic = _run_json(capsys, ["value", "[5,3;(2)]", "--json"])
    assert code == 0
    assert dic["value"] == {"exact": "9/2"}

def test_farey_files(capsys, tmp_path):
    svg_path = tmp_path / "path.svg"
    json_path = tmp_path / "path.json"
    code = main([
        "farey", "[1;(1)]", "-n", "6", "--svg", str(svg_path), "--json", str(json_path), "--labels",
    ])
    assert code == 0
    assert svg_path.read_text().count('<path class="edge"') == 6
    assert svg_path.read_text().count("<text") == 3
    dic = json.loads(json_path.read_text())
    validate_document(dic)
    assert len(dic["vertices"]) == 7

def test_syntax_error_as_json(capsys):
    assert main(["analyze", "[1,x]", "--json"]) == 1
    dic = json.loads(capsys.readouterr().err)
    validate_document(dic)
    assert dic["position"] == 3

def test_usage_errors(capsys):
    assert main(["bogus"]) == 1
    assert "error" in capsys.readouterr().err
    assert main(["convergents", "[1,2]"]) == 1
    assert main(["convergents", "[1,2]", "-n", "3"]) == 1
    with pytest.raises(CliUsageError):
        get_config().parse_args(["phi"])

def test_validate_document():
    validate_document({"schema_version": "1", "error": "boom", "position": None})
    with pytest.raises(ValueError):
        validate_document({"schema_version": "2", "command": "phi", "input": "[]"})
    with pytest.raises(ValueError):
        validate_document({"schema_version": "1", "command": "nope", "input": "[]"})
    with pytest.raises(ValueError):
        validate_document({
            "schema_version": "1", "command": "value", "input": "[]",
            "status": "unknown", "mode": "exact", "value": {"exact": "1/1", "enclosure": {}},
        })

def test_load_budget(tmp_path):
    config_path = tmp_path / "budget.json"
    config_path.write_text(json.dumps({"max_steps": 5, "history_cap": 7}))
    budget = load_budget(str(config_path))
    assert budget.max_steps == 5
    assert budget.history_cap == 7
    assert load_budget(str(config_path), max_steps=9).max_steps == 9
    assert load_budget(None) == StepBudget()

def test_run_corpus(tmp_path):
    from cli.run_corpus import main as run_corpus
    csv_path = tmp_path / "corpus.csv"
    assert run_corpus(["--num-streams", "30", "--seed", "1", "--results-csv", str(csv_path)]) == 0
    results_df = pd.read_csv(csv_path)
    assert len(results_df) == 30
    assert set(results_df["status"]) <= {
        "converges-rational", "converges-irrational", "converges-extended-rational",
        "diverges", "unknown",
    }
    assert (results_df["certificate_ok"] != False).all()
    assert (results_df["witness_ok"] != False).all()
    diverging = results_df[results_df["status"] == "diverges"]
    assert (diverging["witness_ok"] == True).all()

def test_corpus_fails_on_missing_witness():
    from cli.run_corpus import corpus_passed
    passing = pd.DataFrame({
        "certificate_ok": [True, None, True],
        "witness_ok": [None, None, True],
    })
    assert corpus_passed(passing)
    assert not corpus_passed(passing.assign(witness_ok=[None, None, False]))
    assert not corpus_passed(passing.assign(certificate_ok=[True, None, False]))
