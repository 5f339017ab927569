import json

import pytest

from cyclotome.cli import main
from cyclotome.codes import WeightDist


def test_field_ok(capsys):
    assert main(["field", "--p", "3", "--m", "3", "--k", "1", "--prim-poly", "1,2,0,1"]) == 0
    out = capsys.readouterr().out
    assert "pairwise distinct: yes" in out
    assert "[26, 9]" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["field", "--m", "2"],
        ["field", "--k", "3"],
        ["field", "--p", "4"],
        ["field", "--prim-poly", "1,1,0,1"],
        ["weights", "--m", "7", "--method", "bruteforce"],
    ],
)
def test_bad_parameters_exit_2(argv, capsys):
    assert main(argv) == 2


def test_weights_text(capsys):
    assert main(["weights"]) == 0
    out = capsys.readouterr().out
    assert "agreement: OK" in out
    assert "1 + 52z^9 + 936z^12 + 5616z^15 + 10036z^18 + 2808z^21 + 234z^24" in out


def test_weights_csv_sum(tmp_path):
    path = tmp_path / "w.csv"
    assert main(["weights", "--m", "5", "--k", "2", "--method", "closedform", "--format", "csv", "--output", str(path)]) == 0
    rows = path.read_text().splitlines()
    assert rows[0] == "weight,frequency"
    assert sum(int(r.split(",")[1]) for r in rows[1:]) == 3**15


def test_weights_json_round_trip(tmp_path):
    path = tmp_path / "w.json"
    assert main(["weights", "--method", "charsum", "--format", "json", "--output", str(path)]) == 0
    text = path.read_text().strip()
    assert WeightDist.from_json(text).to_json() == text


def test_weights_json_all(capsys):
    assert main(["weights", "--format", "json", "--threads", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["agree"] is True
    assert set(payload["methods"]) == {"bruteforce", "charsum", "closedform"}


def _verdicts(out):
    return [line.split()[0] + line[4:].split("  ")[0] for line in out.splitlines()[:-1]]


def test_verify_deterministic_across_seeds(capsys):
    code7 = main(["verify", "--seed", "7", "--skip-large"])
    out7 = capsys.readouterr().out
    code8 = main(["verify", "--seed", "8", "--skip-large"])
    out8 = capsys.readouterr().out
    assert code7 == code8 == 0
    assert _verdicts(out7) == _verdicts(out8)
    assert "WARN" in out7 and "3828360" in out7
    assert sum(line.startswith("PASS") for line in out7.splitlines()) >= 12
