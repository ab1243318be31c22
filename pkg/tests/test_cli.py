"""
End-to-end tests of the command-line front end and the report exporter
"""
import gzip
import json

import pytest

import main
from infrastructure.exporters.json_exporter import JsonExporter
from infrastructure.settings.config_service import ENV_JOBS, ENV_LOG_LEVEL


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(ENV_JOBS, raising=False)
    monkeypatch.delenv(ENV_LOG_LEVEL, raising=False)


def read_report(path):
    return json.loads(path.read_text(encoding="utf-8"))


class TestJsonExporter:

    def test_stable_serialization(self):
        exporter = JsonExporter(indent=2)
        text = exporter.serialize({"b": [1, 2], "a": "x"})
        assert text.endswith("\n")
        assert json.loads(text) == {"b": [1, 2], "a": "x"}
        assert text == exporter.serialize({"b": [1, 2], "a": "x"})

    def test_stdout(self, capsys):
        JsonExporter().export({"ok": True})
        assert json.loads(capsys.readouterr().out) == {"ok": True}

    def test_gzip(self, tmp_path):
        path = tmp_path / "nested" / "report.json.gz"
        text = JsonExporter().export({"ok": True}, str(path))
        with gzip.open(path, "rt", encoding="utf-8") as f:
            assert f.read() == text


class TestCommandLine:

    def test_verify_all(self, tmp_path):
        output = tmp_path / "report.json"
        code = main.run_with_error_handling([
            "verify-all", "--n", "3", "--lambda", "3,1,0", "--samples", "2", "--seed", "7",
            "--output", str(output)])
        assert code == 0
        report = read_report(output)
        assert {c["name"] for c in report["checks"]} == {
            "roundtrip", "cocycle", "equivariance", "overlap", "pullback"}
        assert report["summary"]["failed"] == 0

    def test_reports_do_not_depend_on_jobs(self, tmp_path):
        outputs = []
        for jobs in ("1", "4"):
            output = tmp_path / f"jobs{jobs}.json"
            main.run_with_error_handling([
                "action", "--lambda", "2,2,-1,-1", "--samples", "2", "--seed", "3",
                "--jobs", jobs, "--output", str(output)])
            outputs.append(output.read_bytes())
        assert outputs[0] == outputs[1]

    def test_mu_at_point_to_stdout(self, capsys):
        code = main.run_with_error_handling([
            "mu", "--lambda", "1,-1", "--point", '{"z": {"0,1": "1/2"}, "xi": {"0,1": "3"}}'])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["result"]["mu"]["F"]["n"] == 2

    def test_orbit_point_round_trip(self, capsys):
        point = '{"z": {"0,1": "1/2"}, "xi": {"0,1": "3"}}'
        assert main.run_with_error_handling(["mu", "--lambda", "1,-1", "--point", point]) == 0
        forward = json.loads(capsys.readouterr().out)
        code = main.run_with_error_handling([
            "mu", "--lambda", "1,-1", "--orbit-point", json.dumps(forward["result"]["mu"])])
        assert code == 0
        backward = json.loads(capsys.readouterr().out)
        assert backward["result"]["point"] == forward["result"]["point"]

    def test_unsorted_lambda_is_regrouped(self, tmp_path):
        output = tmp_path / "regrouped.json"
        code = main.run_with_error_handling([
            "mu", "--lambda", "1,0,1", "--samples", "2", "--output", str(output)])
        assert code == 0
        report = read_report(output)
        assert report["config"]["lambda"] == ["1", "1", "0"]
        assert report["config"]["lambda_permutation"] == [0, 2, 1]
        assert report["config"]["parabolic"]["blocks"] == [2, 1]

    def test_coverage_in_summary(self, tmp_path):
        output = tmp_path / "coverage.json"
        main.run_with_error_handling([
            "transition", "--lambda", "1,-1", "--samples", "2", "--min-in-chart-rate", "0.5",
            "--output", str(output)])
        coverage = read_report(output)["summary"]["coverage"]
        assert [entry["name"] for entry in coverage] == ["overlap", "transported_form"]
        assert all(entry["meets_threshold"] for entry in coverage)

    def test_examples_compressed(self, tmp_path):
        output = tmp_path / "sl2.json.gz"
        code = main.run_with_error_handling([
            "examples", "--case", "sl2", "--samples", "2", "--output", str(output)])
        assert code == 0
        with gzip.open(output, "rt", encoding="utf-8") as f:
            report = json.load(f)
        assert report["checks"][0]["name"] == "sl2.mu_formula"
        assert "detail" in report["checks"][0]

    def test_scale_flag(self, tmp_path):
        output = tmp_path / "scale.json"
        code = main.run_with_error_handling([
            "verify-all", "--lambda", "1,-1", "--samples", "1", "--scale", "5/2", "--output", str(output)])
        assert code == 0
        report = read_report(output)
        assert report["config"]["scale"] == "5/2"
        assert "scale" in {c["name"] for c in report["checks"]}

    @pytest.mark.parametrize("argv", [
        ["verify-all", "--lambda", "1,1"],
        ["verify-all", "--n", "4", "--lambda", "3,1,0"],
        ["transition", "--lambda", "1,0", "--point", "{}"],
        ["examples"],
        ["mu", "--lambda", "1,-1", "--orbit-point", "{\"F\": 3}"],
        ["mu", "--lambda", "1,-1", "--min-in-chart-rate", "2"],
    ])
    def test_configuration_errors(self, argv, capsys):
        assert main.run_with_error_handling(argv) == 2
        assert "Configuration error" in capsys.readouterr().err

    def test_interrupt(self, monkeypatch):
        def interrupted(argv=None):
            raise KeyboardInterrupt
        monkeypatch.setattr(main, "main", interrupted)
        assert main.run_with_error_handling([]) == 130
