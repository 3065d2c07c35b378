"""Command-line behavior: output formats, exit codes, and reduction round trips."""

import json
import math

import pytest

from likelihood_gambles.cli import main

TWO_COINS = {
    "prospects": [
        {"likelihood": 1.0, "reward": {"constant": 0.5}},
        {"likelihood": 0.8, "reward": {"constant": 0.4}},
    ]
}

NESTED = {
    "prospects": [
        {
            "likelihood": 1.0,
            "reward": {
                "prospects": [
                    {"likelihood": 1.0, "reward": {"constant": 1.0}},
                    {"likelihood": 0.5, "reward": {"constant": 0.0}},
                ]
            },
        },
        {"likelihood": 0.2, "reward": {"constant": 0.0}},
    ]
}

LIKELIHOOD_COLUMN = [
    "0.0373", "0.1476", "0.2489", "0.3494", "0.4498", "0.5000",
    "0.5502", "0.6506", "0.7511", "0.8524", "0.9627",
]


@pytest.fixture
def gamble_file(tmp_path):
    def write(obj, name="g.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding="utf-8")
        return str(path)

    return write


class TestPrice:
    def test_text_rounds_to_four_decimals(self, gamble_file, capsys):
        assert main(["price", "-c", "0", gamble_file(TWO_COINS)]) == 0
        assert capsys.readouterr().out.strip() == "0.5000"

    def test_json_full_precision(self, gamble_file, capsys):
        assert main(["price", "-c", "0.3", "-f", "json", gamble_file({"constant": 0.7})]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(0.7, abs=1e-9)

    def test_rho_flag_is_logit_converted(self, gamble_file, capsys):
        path = gamble_file({"prospects": [
            {"likelihood": 1.0, "reward": {"constant": 1.0}},
            {"likelihood": 1.0, "reward": {"constant": 0.0}},
        ]})
        assert main(["price", "--rho", "0.6", "-f", "json", path]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(0.6, abs=1e-12)

    def test_premium_and_rho_are_exclusive(self, gamble_file):
        with pytest.raises(SystemExit) as exc:
            main(["price", "-c", "0", "--rho", "0.5", gamble_file(TWO_COINS)])
        assert exc.value.code == 2


class TestReduce:
    def test_flattens_and_merges(self, gamble_file, capsys):
        assert main(["reduce", gamble_file(NESTED)]) == 0
        obj = json.loads(capsys.readouterr().out)
        pairs = {(p["likelihood"], p["reward"]["constant"]) for p in obj["prospects"]}
        assert pairs == {(1.0, 1.0), (0.5, 0.0)}

    def test_output_is_a_fixpoint(self, gamble_file, capsys):
        assert main(["reduce", gamble_file(NESTED)]) == 0
        once = capsys.readouterr().out
        assert main(["reduce", gamble_file(json.loads(once), "again.json")]) == 0
        assert capsys.readouterr().out == once


class TestCanonical:
    def test_two_coin_gamble_collapses_to_fair(self, gamble_file, capsys):
        assert main(["canonical", "-c", "0", gamble_file(TWO_COINS)]) == 0
        obj = json.loads(capsys.readouterr().out)
        pairs = {(p["likelihood"], p["reward"]["constant"]) for p in obj["prospects"]}
        assert pairs == {(1.0, 1.0), (1.0, 0.0)}


class TestCompare:
    def test_equal(self, gamble_file, capsys):
        a = gamble_file({"prospects": [
            {"likelihood": 1.0, "reward": {"constant": 1.0}},
            {"likelihood": 0.5, "reward": {"constant": 0.0}},
        ]}, "a.json")
        b = gamble_file({"prospects": [
            {"likelihood": 1.0, "reward": {"constant": 1.0}},
            {"likelihood": 0.5, "reward": {"constant": 0.0}},
        ]}, "b.json")
        assert main(["compare", "-c", "0", a, b]) == 0
        assert capsys.readouterr().out.strip() == "="

    def test_strict_orderings(self, gamble_file, capsys):
        better = gamble_file({"prospects": [
            {"likelihood": 1.0, "reward": {"constant": 1.0}},
            {"likelihood": 0.1, "reward": {"constant": 0.0}},
        ]}, "better.json")
        worse = gamble_file({"prospects": [
            {"likelihood": 0.1, "reward": {"constant": 1.0}},
            {"likelihood": 1.0, "reward": {"constant": 0.0}},
        ]}, "worse.json")
        assert main(["compare", "-c", "0", better, worse]) == 0
        assert capsys.readouterr().out.strip() == ">"
        assert main(["compare", "-c", "0", worse, better]) == 0
        assert capsys.readouterr().out.strip() == "<"

    def test_price_agrees_between_original_and_reduction(self, gamble_file, capsys):
        original = gamble_file(NESTED)
        assert main(["price", "-c", "0.4", "-f", "json", original]) == 0
        p_original = float(capsys.readouterr().out)
        assert main(["reduce", original]) == 0
        reduced = gamble_file(json.loads(capsys.readouterr().out), "reduced.json")
        assert main(["price", "-c", "0.4", "-f", "json", reduced]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(p_original, abs=1e-12)


class TestDemoBinomial:
    def test_full_table_text(self, capsys):
        assert main(["demo-binomial", "-m", "10", "-c", "0"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 12
        for line, expected in zip(lines[1:], LIKELIHOOD_COLUMN):
            assert line.split()[1] == expected

    def test_single_row(self, capsys):
        assert main(["demo-binomial", "-m", "10", "-x", "3", "-c", "0"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        assert lines[1].split() == ["3", "0.3494", "0.3333", "0.3182", "0.3000"]

    def test_csv_format(self, capsys):
        assert main(["demo-binomial", "-m", "2", "-c", "0", "-f", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "x,likelihood,uniform,jeffreys,novick_hall"
        assert len(lines) == 4

    def test_json_format(self, capsys):
        assert main(["demo-binomial", "-m", "10", "-x", "5", "-f", "json", "-c", "0"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert rows == [{
            "x": 5,
            "likelihood": pytest.approx(0.5, abs=1e-9),
            "uniform": 0.5,
            "jeffreys": 0.5,
            "novick_hall": 0.5,
        }]

    def test_invalid_count_is_an_input_error(self, capsys):
        assert main(["demo-binomial", "-m", "10", "-x", "11"]) == 2
        assert "error" in capsys.readouterr().err


class TestConformanceCommand:
    def test_passing_run_exits_zero(self, capsys):
        code = main(["conformance", "--samples", "25", "--seed", "4", "-c", "0"])
        assert code == 0
        out = capsys.readouterr().out
        assert "pass" in out and "FAIL" not in out

    def test_json_report(self, capsys):
        code = main(["conformance", "--samples", "10", "--seed", "4", "-f", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert all(entry["failures"] == 0 for entry in payload)

    def test_failing_run_exits_one(self, capsys, monkeypatch):
        from likelihood_gambles.conformance import ConformanceReport, GenConfig, PropertyResult

        def fake_run(config, c, properties=None, utility_fn=None):
            result = PropertyResult("bounds", samples=5, failures=2, seed=1, counterexample=None)
            return ConformanceReport(premium=c, config=config, results=(result,))

        monkeypatch.setattr("likelihood_gambles.cli.run_conformance", fake_run)
        assert main(["conformance", "--samples", "5"]) == 1
        assert "FAIL" in capsys.readouterr().out


class TestErrorHandling:
    def test_missing_file(self, capsys):
        assert main(["price", "/nonexistent/gamble.json"]) == 2
        assert "error" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["price", str(path)]) == 2

    def test_invalid_gamble_payload(self, gamble_file, capsys):
        assert main(["price", gamble_file({"constant": 2.0})]) == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
