"""
Tests for settings resolution and run configuration validation
"""
import json

import pytest

from domain.enums import LogLevel, RepresentativeKind, Suite, WorkedExample
from domain.errors import ConfigError
from domain.lie import WeightLambda
from domain.run_config import RunConfig
from infrastructure.settings.config_service import ENV_JOBS, ENV_LOG_LEVEL, ConfigService
from tests.conftest import gr

SETTINGS = {
    "sampling": {"max_numerator": 7, "max_denominator": 3, "complex": False, "samples": 4, "seed": 9},
    "processing": {"default_jobs": 2, "max_resample_factor": 3},
    "logging": {"level": "WARNING"},
}


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps(SETTINGS), encoding="utf-8")
    return path


@pytest.fixture
def service(settings_file, monkeypatch):
    monkeypatch.delenv(ENV_JOBS, raising=False)
    monkeypatch.delenv(ENV_LOG_LEVEL, raising=False)
    return ConfigService(str(settings_file), load_env=False)


class TestSettings:

    def test_get_setting(self, service):
        assert service.get_setting("sampling.seed") == 9
        assert service.get_setting("sampling.missing", "fallback") == "fallback"
        assert service.get_setting("logging.level.deeper") is None

    def test_default_settings_file(self, monkeypatch):
        monkeypatch.delenv(ENV_JOBS, raising=False)
        service = ConfigService(load_env=False)
        assert service.get_setting("report.indent") == 2
        assert service.get_setting("processing.default_jobs") == 1
        assert service.get_setting("processing.min_in_chart_rate") == 0.8
        assert service.get_setting("app.name") == "OrbitKit"

    def test_environment_overrides(self, settings_file, monkeypatch):
        monkeypatch.setenv(ENV_JOBS, "6")
        monkeypatch.setenv(ENV_LOG_LEVEL, "debug")
        service = ConfigService(str(settings_file), load_env=False)
        assert service.get_setting("processing.default_jobs") == 6
        assert service.get_setting("logging.level") == "DEBUG"

    def test_bad_environment_jobs(self, settings_file, monkeypatch):
        monkeypatch.setenv(ENV_JOBS, "many")
        with pytest.raises(ConfigError):
            ConfigService(str(settings_file), load_env=False)

    def test_missing_settings(self, tmp_path):
        with pytest.raises(ConfigError):
            ConfigService(str(tmp_path / "absent.json"), load_env=False)


class TestBuildRunConfig:

    def test_settings_fill_unset_flags(self, service):
        config = service.build_run_config({"suite": "verify-all", "lambda": "3,1,0"})
        assert config.n == 3
        assert config.samples == 4
        assert config.seed == 9
        assert config.jobs == 2
        assert (config.max_numerator, config.max_denominator) == (7, 3)
        assert config.max_resample_factor == 3
        assert config.min_in_chart_rate == 0.8
        assert config.lambda_permutation is None
        assert config.log_level == LogLevel.WARNING

    def test_flag_beats_file(self, service, tmp_path):
        config_file = tmp_path / "run.json"
        config_file.write_text(json.dumps({"samples": 12, "seed": 1, "lambda": [2, 0]}), encoding="utf-8")
        config = service.build_run_config({"suite": "mu", "seed": 5, "config_file": str(config_file)})
        assert config.samples == 12
        assert config.seed == 5
        assert config.weight == WeightLambda((gr(2), gr(0)))

    def test_parsed_options(self, service):
        config = service.build_run_config({
            "suite": "transition", "lambda": "1/2,-1/2", "range": "50,9", "scale": "-3",
            "representatives": "tits", "point": '{"z": {"0,1": "2"}}', "from": "0,1", "to": "1,0",
            "complex": True,
        })
        assert (config.max_numerator, config.max_denominator) == (50, 9)
        assert config.scale == gr(-3)
        assert config.representatives == RepresentativeKind.TITS
        assert config.point == {"z": {"0,1": "2"}}
        assert config.from_sigma == (0, 1) and config.to_sigma == (1, 0)
        assert config.complex_sampling

    def test_unsorted_lambda_is_regrouped(self, service):
        config = service.build_run_config({"suite": "verify-all", "lambda": "1,0,1,2"})
        assert config.weight == WeightLambda.parse("1,1,0,2")
        assert config.lambda_permutation == (0, 2, 1, 3)
        assert config.to_dict()["lambda"] == ["1", "1", "0", "2"]
        assert config.to_dict()["lambda_permutation"] == [0, 2, 1, 3]

    def test_regrouping_from_config_file_list(self, service, tmp_path):
        config_file = tmp_path / "run.json"
        config_file.write_text(json.dumps({"lambda": [0, 3, 0]}), encoding="utf-8")
        config = service.build_run_config({"suite": "mu", "config_file": str(config_file)})
        assert config.weight == WeightLambda.parse("0,0,3")
        assert config.lambda_permutation == (0, 2, 1)

    def test_orbit_point_and_threshold(self, service):
        config = service.build_run_config({
            "suite": "mu", "lambda": "1,-1", "orbit_point": '{"F": {"n": 2, "entries": []}}',
            "min_in_chart_rate": 0.5,
        })
        assert config.orbit_point == {"F": {"n": 2, "entries": []}}
        assert config.min_in_chart_rate == 0.5

    def test_examples_case(self, service):
        config = service.build_run_config({"suite": "examples", "case": "sl2"})
        assert config.suite == Suite.EXAMPLES
        assert config.case == WorkedExample.SL2

    @pytest.mark.parametrize("flags", [
        {"suite": "everything", "lambda": "1,0"},
        {"suite": "mu", "lambda": "1,x"},
        {"suite": "mu", "lambda": "1,0", "range": "10"},
        {"suite": "mu", "lambda": "1,0", "point": "[1, 2]"},
        {"suite": "mu", "lambda": "1,0", "point": "{not json"},
        {"suite": "mu", "lambda": "1,0", "from": "a,b"},
        {"suite": "mu", "lambda": "1,0", "representatives": "signed"},
        {"suite": "mu", "lambda": "1,0", "samples": 0},
        {"suite": "mu", "lambda": "1,0", "orbit_point": "[]"},
        {"suite": "mu", "lambda": "1,0", "min_in_chart_rate": 1.5},
        {"suite": "mu", "lambda": "1,0", "min_in_chart_rate": "most"},
        {"suite": "mu", "lambda": "2,2,2"},
        {"suite": "examples"},
    ])
    def test_rejected(self, service, flags):
        with pytest.raises(ConfigError):
            service.build_run_config(flags)

    def test_unreadable_config_file(self, service, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError):
            service.build_run_config({"suite": "mu", "lambda": "1,0", "config_file": str(path)})


class TestRunConfig:

    @pytest.mark.parametrize("kwargs", [
        {"weight": WeightLambda.parse("1,1")},
        {"weight": WeightLambda.parse("1,0,1")},
        {"weight": WeightLambda.parse("1,0"), "n": 3},
        {"weight": WeightLambda.parse("1,0"), "jobs": 0},
        {"weight": WeightLambda.parse("1,0"), "scale": gr(0)},
        {"weight": WeightLambda.parse("1,0"), "max_denominator": 0},
        {"weight": WeightLambda.parse("1,0"), "to_sigma": (0, 0)},
        {"weight": WeightLambda.parse("1,0"), "min_in_chart_rate": -0.1},
        {},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            RunConfig(suite=Suite.MU, **kwargs)

    def test_to_dict(self):
        config = RunConfig(suite=Suite.VERIFY_ALL, weight=WeightLambda.parse("2,0,0"), scale=gr("1/2"),
                           output="/tmp/report.json")
        assert config.to_dict() == {
            "suite": "verify-all", "n": 3, "lambda": ["2", "0", "0"], "samples": 10, "seed": 0,
            "range": [20, 10], "complex": False, "representatives": "permutation", "scale": "1/2",
        }
