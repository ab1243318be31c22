"""
Domain Layer - Exact scalars, matrices and the value types of the theory
Nothing in this layer depends on external libraries
"""

# Enums
from .enums import LogLevel, Suite, RepresentativeKind, CheckStatus, WorkedExample

# Scalars and matrices
from .scalar import GaussianRational, Jet, scalar_arith, jet_lift, lift_vector
from .matrix import SquareMatrix

# Lie data
from .lie import Root, WeightLambda, WeylCoset, ParabolicData, UULFactorization

# Chart and orbit points
from .chart import ChartPoint, WCoordinates, OrbitPoint, ChartTangent, OrbitTangent

# Runs and reports
from .run_config import RunConfig
from .report import CheckResult, PullbackReport

# Interfaces
from .interfaces import IVerificationCheck, IReportExporter

__all__ = [
    # Enums
    'LogLevel',
    'Suite',
    'RepresentativeKind',
    'CheckStatus',
    'WorkedExample',

    # Scalars and matrices
    'GaussianRational',
    'Jet',
    'scalar_arith',
    'jet_lift',
    'lift_vector',
    'SquareMatrix',

    # Lie data
    'Root',
    'WeightLambda',
    'WeylCoset',
    'ParabolicData',
    'UULFactorization',

    # Chart and orbit points
    'ChartPoint',
    'WCoordinates',
    'OrbitPoint',
    'ChartTangent',
    'OrbitTangent',

    # Runs and reports
    'RunConfig',
    'CheckResult',
    'PullbackReport',

    # Interfaces
    'IVerificationCheck',
    'IReportExporter'
]
