import json
import subprocess
import sys

import pytest

from subgames.cli import RunConfig, cmd_cold, cmd_experiment, cmd_nim, entrypoint


def run_cli(capsys, *argv):
    code = entrypoint(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = []
    fit = None
    lines = text.strip().splitlines()
    for line in lines[1:]:
        if line.startswith("#fit,"):
            fields = dict(part.split("=", 1) for part in line[len("#fit,") :].split(","))
            fit = (float(fields["c"]), float(fields["e"]))
        else:
            rows.append([int(v) for v in line.split(",")])
    return lines[0].split(","), rows, fit


def test_nim_squares_prefix(capsys):
    code, out, _ = run_cli(capsys, "nim", "--game", "squares", "--limit", "5")
    assert code == 0
    assert out == "position,nim_value\n0,0\n1,1\n2,0\n3,1\n4,2\n"


def test_nim_moser_formula(capsys):
    code, out, _ = run_cli(
        capsys, "nim", "--game", "moser", "--limit", "3", "--algo", "formula"
    )
    assert code == 0
    assert out == "position,nim_value\n0,0\n1,1\n2,0\n"


def test_nim_algorithms_agree(capsys):
    outputs = []
    for algo in ("dp", "layered"):
        code, out, _ = run_cli(
            capsys, "nim", "--game", "squares", "--limit", "60", "--algo", algo
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_cold_squares(capsys):
    code, out, _ = run_cli(
        capsys, "cold", "--game", "squares", "--limit", "25", "--algo", "sieve"
    )
    assert code == 0
    _, rows, _ = parse_csv(out)
    assert [r[0] for r in rows] == [0, 2, 5, 7, 10, 12, 15, 17, 20, 22]


def test_cold_explicit_dandc(capsys):
    code, out, _ = run_cli(
        capsys, "cold", "--game", "explicit:1", "--limit", "5", "--algo", "dandc"
    )
    assert code == 0
    assert out == "position\n0\n2\n4\n"


def test_cold_algorithms_agree_byte_for_byte(capsys):
    outputs = set()
    for algo in ("sieve", "dp", "dandc"):
        code, out, _ = run_cli(
            capsys, "cold", "--game", "squares", "--limit", "300", "--algo", algo
        )
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_limit_zero_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "nim", "--game", "squares", "--limit", "0")
    assert code == 2
    assert "error" in err


def test_unknown_game_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "cold", "--game", "fibonacci", "--limit", "5")
    assert code == 2
    assert "fibonacci" in err


def test_bad_explicit_list_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "nim", "--game", "explicit:1,x", "--limit", "5")
    assert code == 2
    assert "error" in err


def test_formula_requires_moser(capsys):
    code, _, err = run_cli(
        capsys, "nim", "--game", "squares", "--limit", "5", "--algo", "formula"
    )
    assert code == 2
    assert "moser" in err


def test_formula_rejected_for_cold_queries():
    # argparse restricts cold --algo to sieve/dp/dandc
    with pytest.raises(SystemExit) as exc:
        entrypoint(["cold", "--game", "squares", "--limit", "5", "--algo", "formula"])
    assert exc.value.code == 2


def test_density_experiment_fixture(capsys):
    code, out, _ = run_cli(
        capsys,
        "experiment", "--experiment", "density",
        "--game", "squares", "--limit", "27",
    )
    assert code == 0
    columns, rows, fit = parse_csv(out)
    assert columns == ["n", "cold_count"]
    assert rows == [[1, 1], [8, 4], [27, 10]]
    assert fit is not None


def test_max_nim_experiment(capsys):
    code, out, _ = run_cli(
        capsys,
        "experiment", "--experiment", "max-nim",
        "--game", "squares", "--limit", "40",
    )
    assert code == 0
    _, rows, fit = parse_csv(out)
    assert rows == [[1, 1], [4, 2], [25, 3], [28, 4], [29, 5]]
    assert fit is not None


def test_fit_omitted_with_warning_when_too_few_points(capsys):
    code, out, err = run_cli(
        capsys,
        "experiment", "--experiment", "max-nim",
        "--game", "explicit:1", "--limit", "10",
    )
    assert code == 0
    assert "warning" in err
    _, rows, fit = parse_csv(out)
    assert rows == [[1, 1]]
    assert fit is None


def test_digits_experiment(capsys):
    code, out, _ = run_cli(
        capsys,
        "experiment", "--experiment", "digits",
        "--game", "squares", "--limit", "100",
        "--base", "5", "--positions", "2",
    )
    assert code == 0
    columns, rows, _ = parse_csv(out)
    assert columns == ["base", "position", "digit", "count"]
    assert len(rows) == 10
    # ones digit of {0,2,5,7,...,95}: every cold position ends in 0, 2, 5, or 7
    ones = {digit: count for _, pos, digit, count in rows if pos == 0}
    assert ones[1] == 0 and ones[3] == 0
    assert sum(ones.values()) == 21


def test_digits_validation(capsys):
    code, _, err = run_cli(
        capsys,
        "experiment", "--experiment", "digits",
        "--game", "squares", "--limit", "50", "--base", "1",
    )
    assert code == 2
    assert "base" in err
    code, _, err = run_cli(
        capsys,
        "experiment", "--experiment", "digits",
        "--game", "squares", "--limit", "50", "--positions", "0",
    )
    assert code == 2


def test_csv_json_parity(capsys):
    argv = ["experiment", "--experiment", "density", "--game", "squares", "--limit", "64"]
    code, csv_out, _ = run_cli(capsys, *argv, "--format", "csv")
    assert code == 0
    code, json_out, _ = run_cli(capsys, *argv, "--format", "json")
    assert code == 0
    columns, rows, fit = parse_csv(csv_out)
    payload = json.loads(json_out)
    assert payload["columns"] == columns
    assert payload["rows"] == rows
    assert payload["fit"] is not None and fit is not None
    assert payload["fit"]["c"] == fit[0] and payload["fit"]["e"] == fit[1]


def test_json_metadata_carries_algorithm(capsys):
    argv = ["cold", "--game", "squares", "--limit", "40", "--format", "json"]
    payloads = []
    for algo in ("sieve", "dandc"):
        code, out, _ = run_cli(capsys, *argv, "--algo", algo)
        assert code == 0
        payloads.append(json.loads(out))
    assert payloads[0]["algorithm"] == "sieve"
    assert payloads[1]["algorithm"] == "dandc"
    for key in ("command", "game", "limit", "columns", "rows"):
        assert payloads[0][key] == payloads[1][key]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "cold.csv"
    code, out, _ = run_cli(
        capsys,
        "cold", "--game", "squares", "--limit", "10", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "position\n0\n2\n5\n7\n"


def test_unwritable_out_reports_failure(tmp_path, capsys):
    target = tmp_path / "missing" / "cold.csv"
    code, _, err = run_cli(
        capsys,
        "cold", "--game", "squares", "--limit", "10", "--out", str(target),
    )
    assert code == 1
    assert "cannot write" in err


def test_direct_command_functions():
    cfg = RunConfig(game="squares", limit=5, out="/dev/null")
    assert cmd_nim(cfg) == 0
    assert cmd_cold(cfg) == 0
    cfg = RunConfig(game="squares", limit=30, experiment="density", out="/dev/null")
    assert cmd_experiment(cfg) == 0
    cfg = RunConfig(game="squares", limit=30, experiment="nope", out="/dev/null")
    assert cmd_experiment(cfg) == 2


def test_module_invocation_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "subgames", "nim", "--game", "squares", "--limit", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "position,nim_value\n0,0\n1,1\n2,0\n"
