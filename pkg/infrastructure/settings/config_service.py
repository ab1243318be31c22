#!/usr/bin/env python3
"""
Configuration Service - Merge default settings, environment, config file and flags
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from domain.enums import LogLevel, RepresentativeKind, Suite, WorkedExample
from domain.errors import ConfigError, InvalidEncoding
from domain.lie import WeightLambda
from domain.run_config import RunConfig
from domain.scalar import GaussianRational
from infrastructure.flag.parabolic import sort_lambda

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(__file__).parent.parent.parent / "config" / "default_settings.json"

ENV_JOBS = "ORBITKIT_JOBS"
ENV_LOG_LEVEL = "ORBITKIT_LOG_LEVEL"


class ConfigService:
    """
    Service for resolving run configurations
    Precedence: command-line flag > config file > environment > default settings
    """

    def __init__(self, settings_path: Optional[str] = None, load_env: bool = True):
        self.settings_path = Path(settings_path) if settings_path else DEFAULT_SETTINGS_PATH
        if load_env:
            load_dotenv()
        self.settings = self._load_settings()

    def _load_settings(self) -> Dict[str, Any]:
        """
        Load default settings and apply environment overrides
        Returns:
            Dict with the settings tree
        """
        try:
            with open(self.settings_path, 'r', encoding='utf-8') as f:
                settings = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read settings {self.settings_path}: {e}") from e

        settings = copy.deepcopy(settings)
        jobs = os.environ.get(ENV_JOBS)
        if jobs:
            try:
                settings.setdefault("processing", {})["default_jobs"] = int(jobs)
            except ValueError as e:
                raise ConfigError(f"{ENV_JOBS} must be an integer, got {jobs!r}") from e
        level = os.environ.get(ENV_LOG_LEVEL)
        if level:
            settings.setdefault("logging", {})["level"] = level.upper()
        return settings

    def get_setting(self, key: str, default: Any = None) -> Any:
        """
        Get a setting by dotted key
        Args:
            key: Key such as "sampling.max_numerator"
            default: Value when the key is absent
        Returns:
            Setting value
        """
        node: Any = self.settings
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    @staticmethod
    def load_config_file(path: str) -> Dict[str, Any]:
        """
        Read a JSON config file mirroring RunConfig
        Args:
            path: File path
        Returns:
            Dict of option values
        """
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must contain a JSON object")
        return data

    def build_run_config(self, flags: Dict[str, Any]) -> RunConfig:
        """
        Resolve command-line values against config file and settings
        Args:
            flags: Parsed flags; None means "not given"
        Returns:
            RunConfig: Validated configuration
        """
        file_values: Dict[str, Any] = {}
        if flags.get("config_file"):
            file_values = self.load_config_file(flags["config_file"])

        def pick(name: str, setting: Optional[str] = None, default: Any = None) -> Any:
            if flags.get(name) is not None:
                return flags[name]
            if file_values.get(name) is not None:
                return file_values[name]
            if setting is not None:
                return self.get_setting(setting, default)
            return default

        suite_name = pick("suite")
        try:
            suite = Suite(suite_name)
        except ValueError as e:
            choices = ", ".join(s.value for s in Suite)
            raise ConfigError(f"unknown suite {suite_name!r} (choose from {choices})") from e

        weight = None
        raw_lambda = pick("lambda")
        if raw_lambda is not None:
            try:
                if isinstance(raw_lambda, str):
                    weight = WeightLambda.parse(raw_lambda)
                else:
                    weight = WeightLambda(tuple(GaussianRational.of(str(v)) for v in raw_lambda))
            except (InvalidEncoding, ValueError, TypeError) as e:
                raise ConfigError(f"cannot parse lambda {raw_lambda!r}: {e}") from e

        lambda_permutation = None
        if weight is not None and not weight.is_block_sorted():
            weight, lambda_permutation = sort_lambda(weight.values)
            logger.debug(f"Regrouped lambda with permutation {list(lambda_permutation)}")

        max_numerator, max_denominator = self._parse_range(
            pick("range"),
            self.get_setting("sampling.max_numerator", 20),
            self.get_setting("sampling.max_denominator", 10))

        try:
            return RunConfig(
                suite=suite,
                n=pick("n"),
                weight=weight,
                samples=int(pick("samples", "sampling.samples", 10)),
                seed=int(pick("seed", "sampling.seed", 0)),
                output=pick("output"),
                jobs=int(pick("jobs", "processing.default_jobs", 1)),
                max_numerator=max_numerator,
                max_denominator=max_denominator,
                complex_sampling=bool(pick("complex", "sampling.complex", False)),
                scale=self._parse_scalar(pick("scale"), "scale"),
                representatives=RepresentativeKind(pick("representatives", default="permutation")),
                point=self._parse_json(pick("point"), "point"),
                orbit_point=self._parse_json(pick("orbit_point"), "orbit-point"),
                from_sigma=self._parse_permutation(pick("from")),
                to_sigma=self._parse_permutation(pick("to")),
                g=self._parse_json(pick("g"), "g"),
                case=WorkedExample(pick("case")) if pick("case") else None,
                max_resample_factor=int(pick("max_resample_factor", "processing.max_resample_factor", 5)),
                min_in_chart_rate=float(pick("min_in_chart_rate", "processing.min_in_chart_rate", 0.8)),
                lambda_permutation=lambda_permutation,
                log_level=LogLevel(str(pick("log_level", "logging.level", "INFO")).upper()),
            )
        except ConfigError:
            raise
        except (ValueError, TypeError) as e:
            raise ConfigError(str(e)) from e

    @staticmethod
    def _parse_range(value: Any, numerator: int, denominator: int):
        if value is None:
            return int(numerator), int(denominator)
        try:
            if isinstance(value, str):
                num, den = (int(part) for part in value.split(","))
            else:
                num, den = (int(part) for part in value)
        except (ValueError, TypeError) as e:
            raise ConfigError(f"--range expects NUM,DEN, got {value!r}") from e
        return num, den

    @staticmethod
    def _parse_scalar(value: Any, name: str) -> Optional[GaussianRational]:
        if value is None:
            return None
        try:
            return GaussianRational.of(str(value))
        except (InvalidEncoding, TypeError) as e:
            raise ConfigError(f"cannot parse {name} {value!r}") from e

    @staticmethod
    def _parse_json(value: Any, name: str) -> Optional[Dict[str, Any]]:
        if value is None or isinstance(value, dict):
            return value
        try:
            parsed = json.loads(value)
        except (json.JSONDecodeError, TypeError) as e:
            raise ConfigError(f"--{name} is not valid JSON: {e}") from e
        if not isinstance(parsed, dict):
            raise ConfigError(f"--{name} must be a JSON object")
        return parsed

    @staticmethod
    def _parse_permutation(value: Any):
        if value is None:
            return None
        try:
            if isinstance(value, str):
                return tuple(int(part) for part in value.split(","))
            return tuple(int(part) for part in value)
        except (ValueError, TypeError) as e:
            raise ConfigError(f"cannot parse permutation {value!r}") from e
