"""
Application Layer - Sampling, verification suites and run orchestration
Coordinates domain types and infrastructure engines
"""
from .sampler import Sampler
from .verification_suite import VerificationContext, build_checks
from .worked_examples import build_example_checks
from .task_dispatcher import TaskDispatcher
from .resource_monitor import ResourceMonitor
from .run_service import RunService

__all__ = [
    'Sampler',
    'VerificationContext',
    'build_checks',
    'build_example_checks',
    'TaskDispatcher',
    'ResourceMonitor',
    'RunService'
]
