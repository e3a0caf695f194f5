import json
import subprocess
import sys
from datetime import date
from importlib import resources

import pytest

from knotmarket import cli
from knotmarket.market import load_sample_prices, parse_price_table
from knotmarket.report import SCHEMA_VERSION, PipelineError, run_pipeline, windowed_report

SAMPLE = str(resources.files("knotmarket.data") / "djia_2013_4.csv")


def test_full_window_report():
    rep = run_pipeline(load_sample_prices())
    data = rep.to_json()
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["window"] == {"start": "2013-05-15", "end": "2013-06-07"}
    assert data["tickers"] == ["AXP", "HD", "WMT", "PG"]
    assert len(data["crossing_events"]) == 12
    assert data["writhe"] == 2
    assert data["component_count"] == 2
    assert data["classification"] == ["L2a1 / positive Hopf link"]
    assert data["warnings"] == []


def test_window_selection():
    rep = run_pipeline(load_sample_prices(), date(2013, 5, 15), date(2013, 5, 22))
    assert rep.braid_word.render() == "s2 s3"
    assert rep.classification == ["0_1^2 / 2-component unlink"]


def test_short_window_is_an_error():
    with pytest.raises(PipelineError):
        run_pipeline(load_sample_prices(), date(2013, 5, 15), date(2013, 5, 15))


def test_refusal_keeps_the_crossing_data():
    rep = run_pipeline(load_sample_prices(), reduce=False, max_crossings=4)
    assert rep.refused
    assert rep.jones is None and rep.alexander is None
    assert len(rep.crossing_events) == 12
    assert any("refused" in w for w in rep.warnings)
    assert rep.to_json()["jones"] is None


def test_tie_warning_is_reported():
    t = parse_price_table("date,A,B\n2020-01-02,10.00,10.50\n2020-01-03,11.00,9.50\n")
    rep = run_pipeline(t)
    assert any("equal moves" in w for w in rep.warnings)


def test_windowed_summary():
    res = windowed_report(load_sample_prices(), 6, 3)
    assert [r["window_start"] for r in res.summary] == ["2013-05-15", "2013-05-20", "2013-05-23", "2013-05-29"]
    assert all(r["status"] == "ok" for r in res.summary)
    lines = res.summary_csv().splitlines()
    assert lines[0].startswith("window_start,window_end,crossings,writhe")
    assert len(lines) == 5


@pytest.mark.parametrize("length,stride", [(1, 1), (5, 0), (40, 1)])
def test_windowed_argument_errors(length, stride):
    with pytest.raises(PipelineError):
        windowed_report(load_sample_prices(), length, stride)


def test_text_report_mentions_classification():
    text = run_pipeline(load_sample_prices()).render_text()
    assert "L2a1 / positive Hopf link" in text
    assert "HD x WMT" in text


def test_cli_analyze_json(capsys):
    assert cli.main(["analyze", "--input", SAMPLE, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classification"] == ["L2a1 / positive Hopf link"]


def test_cli_ticker_subset(capsys):
    assert cli.main(["analyze", "--input", SAMPLE, "--tickers", "HD,WMT", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["tickers"] == ["HD", "WMT"]


def test_cli_invariant(capsys):
    assert cli.main(["invariant", "--word", "s1 s1 s1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classification"] == ["3_1 / right-handed trefoil"]
    assert data["alexander"] == "t - 1 + t^(-1)"


def test_cli_windows_csv(capsys):
    assert cli.main(["windows", "--input", SAMPLE, "--length", "6", "--stride", "3"]) == 0
    assert capsys.readouterr().out.startswith("window_start,")


def test_cli_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("date,A\n2020-01-02,-3\n")
    assert cli.main(["analyze", "--input", str(bad)]) == 2
    assert cli.main(["analyze", "--input", str(tmp_path / "missing.csv")]) == 2
    assert cli.main(["invariant", "--word", "q7"]) == 2
    assert cli.main(["windows", "--input", SAMPLE, "--length", "99", "--stride", "1"]) == 2
    assert cli.main(["bogus"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_refusal_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("KNOTMARKET_MAX_CROSSINGS", "3")
    assert cli.main(["invariant", "--word", "s1 s2' s1 s2'"]) == 3
    assert cli.main(["analyze", "--input", SAMPLE]) == 3


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "knotmarket", "invariant", "--word", "s1 s1"],
                         capture_output=True, text=True, check=True).stdout
    assert "L2a1" in out
