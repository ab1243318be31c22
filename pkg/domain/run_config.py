"""
Run configuration for the batch front end
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from .enums import LogLevel, RepresentativeKind, Suite, WorkedExample
from .errors import ConfigError
from .lie import WeightLambda
from .scalar import GaussianRational


@dataclass
class RunConfig:
    """
    Everything one invocation needs

    Attributes:
        suite: What to run
        n: Matrix size
        weight: The weight lambda (optional for the examples suite)
        samples: Samples per check
        seed: Seed for all random draws
        output: Report path, or None for stdout
        jobs: Worker threads
        max_numerator: Bound on |numerator| of sampled rationals
        max_denominator: Bound on sampled denominators
        complex_sampling: Draw Gaussian rationals instead of real ones
        scale: Optional factor for the rescaling check
        representatives: Lift of Weyl coset representatives
        point: Chart point JSON for single-point suites
        orbit_point: Orbit point JSON to pull back to a chart (mu suite)
        from_sigma: Source chart permutation
        to_sigma: Target chart permutation
        g: Group element JSON for the action suite
        case: Worked example for the examples suite
        max_resample_factor: Extra draws allowed per out-of-chart sample
        min_in_chart_rate: Smallest share of samples per check that must land in a chart
        lambda_permutation: Regrouping p applied to the input weight, weight[k] = input[p[k]]
        log_level: Logging level
    """
    suite: Suite
    n: Optional[int] = None
    weight: Optional[WeightLambda] = None
    samples: int = 10
    seed: int = 0
    output: Optional[str] = None
    jobs: int = 1
    max_numerator: int = 20
    max_denominator: int = 10
    complex_sampling: bool = False
    scale: Optional[GaussianRational] = None
    representatives: RepresentativeKind = RepresentativeKind.PERMUTATION
    point: Optional[Dict[str, Any]] = None
    orbit_point: Optional[Dict[str, Any]] = None
    from_sigma: Optional[Tuple[int, ...]] = None
    to_sigma: Optional[Tuple[int, ...]] = None
    g: Optional[Dict[str, Any]] = None
    case: Optional[WorkedExample] = None
    max_resample_factor: int = 5
    min_in_chart_rate: float = 0.8
    lambda_permutation: Optional[Tuple[int, ...]] = None
    log_level: LogLevel = LogLevel.INFO

    def __post_init__(self):
        if self.samples < 1:
            raise ConfigError(f"samples must be at least 1, got {self.samples}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")
        if self.max_numerator < 1 or self.max_denominator < 1:
            raise ConfigError("sampling range bounds must be positive")
        if self.max_resample_factor < 1:
            raise ConfigError("max_resample_factor must be at least 1")
        if not 0 <= self.min_in_chart_rate <= 1:
            raise ConfigError(f"min_in_chart_rate must lie in [0, 1], got {self.min_in_chart_rate}")
        if self.scale is not None and self.scale.is_zero():
            raise ConfigError("scale factor must be nonzero")

        if self.suite == Suite.EXAMPLES:
            if self.case is None:
                raise ConfigError("examples suite needs --case")
            return

        if self.weight is None:
            raise ConfigError(f"suite {self.suite.value} needs --lambda")
        if self.n is None:
            self.n = self.weight.n
        if self.weight.n != self.n:
            raise ConfigError(f"--n {self.n} does not match lambda of length {self.weight.n}")
        if self.weight.is_constant():
            raise ConfigError("lambda must not be constant")
        if not self.weight.is_block_sorted():
            raise ConfigError("equal entries of lambda must be contiguous")
        for name in ('from_sigma', 'to_sigma'):
            perm = getattr(self, name)
            if perm is not None and sorted(perm) != list(range(self.n)):
                raise ConfigError(f"{name} {list(perm)} is not a permutation of 0..{self.n - 1}")

    def to_dict(self) -> Dict[str, Any]:
        """Echo of the configuration for reports (no paths, so reports stay comparable)"""
        result: Dict[str, Any] = {
            'suite': self.suite.value,
            'n': self.n,
            'lambda': self.weight.to_list() if self.weight else None,
            'samples': self.samples,
            'seed': self.seed,
            'range': [self.max_numerator, self.max_denominator],
            'complex': self.complex_sampling,
            'representatives': self.representatives.value,
        }
        if self.lambda_permutation is not None:
            result['lambda_permutation'] = list(self.lambda_permutation)
        if self.scale is not None:
            result['scale'] = str(self.scale)
        if self.case is not None:
            result['case'] = self.case.value
        return result
