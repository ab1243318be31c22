"""
Run Service - Execute one configured run and assemble its report
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from domain.chart import ChartPoint, OrbitPoint
from domain.enums import CheckStatus, Suite
from domain.errors import (
    ConfigError, IndexOutOfRange, InvalidEncoding, MissingWitness, OrbitKitError, OutsideChart,
)
from domain.lie import ParabolicData, WeylCoset
from domain.matrix import SquareMatrix
from domain.run_config import RunConfig
from domain.scalar import GaussianRational
from infrastructure.flag.parabolic import build_parabolic, weyl_cosets
from infrastructure.lie.algebra import coadjoint
from infrastructure.twisted.affine_action import psi_global, transition
from infrastructure.twisted.moment_map import mu_global, mu_inverse
from application.resource_monitor import ResourceMonitor
from application.sampler import Sampler
from application.task_dispatcher import TaskDispatcher
from application.verification_suite import VerificationContext, build_checks
from application.worked_examples import build_example_checks

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "1"


def parse_matrix(data: Any, n: int) -> SquareMatrix:
    """
    Read a matrix from JSON
    Args:
        data: {"n", "entries"} with scalar objects or strings, or a bare list of rows
        n: Expected size
    Returns:
        SquareMatrix
    """
    try:
        rows = data['entries'] if isinstance(data, dict) else data
        parsed = [[GaussianRational.from_dict(e) if isinstance(e, dict) else GaussianRational.of(str(e))
                   for e in row] for row in rows]
        matrix = SquareMatrix.from_rows(parsed)
    except (InvalidEncoding, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"cannot parse matrix: {e}") from e
    if matrix.n != n:
        raise ConfigError(f"matrix is {matrix.n}x{matrix.n}, expected {n}x{n}")
    return matrix


class RunService:
    """
    Executes a RunConfig: single-point computations or sampled check suites
    """

    def __init__(self, report_schema: str = REPORT_SCHEMA):
        self.report_schema = report_schema
        self.resource_monitor = ResourceMonitor()

    def run(self, config: RunConfig) -> Tuple[int, Dict[str, Any]]:
        """
        Run the configured suite
        Args:
            config: Validated configuration
        Returns:
            (exit code, report); the exit code is 1 iff some check failed, errored or
            landed in a chart on fewer samples than min_in_chart_rate asks for
        """
        self.resource_monitor.start_monitoring()
        sampler = Sampler(config.seed, config.max_numerator, config.max_denominator, config.complex_sampling)
        result: Optional[Dict[str, Any]] = None
        geometry: Optional[Dict[str, Any]] = None

        if config.suite == Suite.EXAMPLES:
            checks = build_example_checks(config.case, sampler)
        else:
            parabolic = self._parabolic(config)
            atlas = weyl_cosets(parabolic, config.representatives)
            geometry = parabolic.to_dict(atlas)
            context = VerificationContext(weight=config.weight, parabolic=parabolic, atlas=atlas,
                                          sampler=sampler, max_attempts=config.max_resample_factor,
                                          scale=config.scale)
            single_point = config.point is not None or config.orbit_point is not None
            if single_point and config.suite != Suite.VERIFY_ALL:
                result = self._single_point(config, parabolic, atlas)
                checks = []
            else:
                checks = build_checks(config.suite, context)

        logger.info(f"Running suite {config.suite.value}: {len(checks)} checks x {config.samples} samples")
        outcome = TaskDispatcher(config.jobs).run_checks(checks, config.samples) if checks else {
            "results": [], "summary": {status.value: 0 for status in CheckStatus}, "coverage": []}
        coverage = self._apply_threshold(outcome["coverage"], config.min_in_chart_rate)

        report: Dict[str, Any] = {
            "schema": self.report_schema,
            "suite": config.suite.value,
            "config": config.to_dict(),
        }
        if geometry is not None:
            report["config"]["parabolic"] = geometry
        if result is not None:
            report["result"] = result
        report["checks"] = [r.to_dict() for r in outcome["results"]]
        report["summary"] = {**outcome["summary"], "coverage": coverage}

        self.resource_monitor.log_usage(f"suite {config.suite.value}")
        summary = outcome["summary"]
        under_covered = any(not entry["meets_threshold"] for entry in coverage)
        broken = summary[CheckStatus.FAILED.value] or summary[CheckStatus.ERRORED.value]
        exit_code = 1 if broken or under_covered else 0
        return exit_code, report

    @staticmethod
    def _apply_threshold(coverage: List[Dict[str, Any]], min_rate: float) -> List[Dict[str, Any]]:
        """Mark each check's coverage entry with whether enough samples were in chart"""
        marked = []
        for entry in coverage:
            meets = entry["in_chart_rate"] >= min_rate
            if not meets:
                logger.warning(f"{entry['name']}: only {entry['samples'] - entry['skipped']}/{entry['samples']} "
                               f"samples landed in a chart (need {min_rate:.0%})")
            marked.append({**entry, "meets_threshold": meets})
        return marked

    @staticmethod
    def _pull_back(config: RunConfig, parabolic: ParabolicData, atlas: List[WeylCoset]) -> Dict[str, Any]:
        """
        Chart point over an orbit point given with its witness g, F = Ad(g) lambda
        """
        try:
            orbit_point = OrbitPoint.from_dict(config.orbit_point)
        except InvalidEncoding as e:
            raise ConfigError(f"invalid --orbit-point: {e}") from e
        if orbit_point.F.n != parabolic.n:
            raise ConfigError(f"--orbit-point is {orbit_point.F.n}x{orbit_point.F.n}, expected n = {parabolic.n}")
        try:
            point = mu_inverse(config.weight, parabolic, atlas, orbit_point)
        except (MissingWitness, OutsideChart) as e:
            raise ConfigError(f"cannot pull back --orbit-point: {e}") from e
        image = mu_global(config.weight, parabolic, atlas, point)
        if image.F != orbit_point.F:
            raise ConfigError("--orbit-point witness does not conjugate lambda to F")
        return {'orbit_point': orbit_point.to_dict(), 'point': point.to_dict(parabolic)}

    @staticmethod
    def _parabolic(config: RunConfig) -> ParabolicData:
        try:
            return build_parabolic(config.weight)
        except OrbitKitError as e:
            raise ConfigError(str(e)) from e

    @staticmethod
    def _coset(atlas: List[WeylCoset], permutation) -> WeylCoset:
        coset = next((c for c in atlas if c.permutation == tuple(permutation)), None)
        if coset is None:
            raise ConfigError(f"{list(permutation)} is not a minimal coset representative")
        return coset

    def _single_point(self, config: RunConfig, parabolic: ParabolicData,
                      atlas: List[WeylCoset]) -> Dict[str, Any]:
        """
        Evaluate mu, a transition or an action at the --point, or pull an --orbit-point back
        """
        if config.orbit_point is not None:
            if config.suite != Suite.MU or config.point is not None:
                raise ConfigError("--orbit-point is only accepted by the mu suite, without --point")
            return self._pull_back(config, parabolic, atlas)
        data = dict(config.point)
        if config.from_sigma is not None:
            data['sigma'] = list(config.from_sigma)
        try:
            point = ChartPoint.from_dict(data, parabolic, atlas)
        except (InvalidEncoding, IndexOutOfRange, ValueError) as e:
            raise ConfigError(f"invalid --point: {e}") from e
        weight = config.weight
        result: Dict[str, Any] = {'point': point.to_dict(parabolic)}

        if config.suite == Suite.MU:
            result['mu'] = mu_global(weight, parabolic, atlas, point).to_dict()
        elif config.suite == Suite.TRANSITION:
            if config.to_sigma is None:
                raise ConfigError("transition needs --to")
            image = transition(weight, parabolic, point, self._coset(atlas, config.to_sigma))
            result['image'] = image.to_dict(parabolic)
        elif config.suite == Suite.ACTION:
            if config.g is None:
                raise ConfigError("action needs --g")
            g = parse_matrix(config.g, parabolic.n)
            image = psi_global(weight, parabolic, atlas, g, point)
            moved_mu = mu_global(weight, parabolic, atlas, image)
            result['g'] = g.to_dict()
            result['image'] = image.to_dict(parabolic)
            result['mu'] = moved_mu.to_dict()
            result['equivariant'] = moved_mu.F == coadjoint(g, mu_global(weight, parabolic, atlas, point).F)
        return result
