import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List

import pytest
from hypothesis import strategies as st

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from application.sampler import Sampler
from domain.enums import RepresentativeKind
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.scalar import GaussianRational
from infrastructure.flag.parabolic import build_parabolic, weyl_cosets


@dataclass
class Configuration:
    """A weight with its parabolic data and chart atlas"""
    name: str
    weight: WeightLambda
    parabolic: ParabolicData
    atlas: List[WeylCoset]


def make_configuration(name: str, values: str,
                       kind: RepresentativeKind = RepresentativeKind.PERMUTATION) -> Configuration:
    weight = WeightLambda.parse(values)
    parabolic = build_parabolic(weight)
    return Configuration(name, weight, parabolic, weyl_cosets(parabolic, kind))


CONFIGURATIONS = {
    "gl2": "1,-1",
    "gl3": "3,1,0",
    "gl4_22": "2,2,-1,-1",
    "gl4_121": "3,1,1,0",
    "gl5_23": "3,3,-2,-2,-2",
}

# configurations used by the heavier identity checks
CORE = ["gl2", "gl3", "gl4_22", "gl4_121"]


@pytest.fixture(params=CORE)
def configuration(request) -> Configuration:
    return make_configuration(request.param, CONFIGURATIONS[request.param])


@pytest.fixture(params=CORE)
def tits_configuration(request) -> Configuration:
    return make_configuration(request.param, CONFIGURATIONS[request.param], RepresentativeKind.TITS)


@pytest.fixture
def gl2() -> Configuration:
    return make_configuration("gl2", CONFIGURATIONS["gl2"])


@pytest.fixture
def gl3() -> Configuration:
    return make_configuration("gl3", CONFIGURATIONS["gl3"])


@pytest.fixture
def gl4_22() -> Configuration:
    return make_configuration("gl4_22", CONFIGURATIONS["gl4_22"])


@pytest.fixture
def gl4_121() -> Configuration:
    return make_configuration("gl4_121", CONFIGURATIONS["gl4_121"])


@pytest.fixture
def gl5_23() -> Configuration:
    return make_configuration("gl5_23", CONFIGURATIONS["gl5_23"])


@pytest.fixture
def sampler() -> Sampler:
    return Sampler(seed=7)


# Hypothesis strategies

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=10)
gaussian_rationals = st.builds(GaussianRational, fractions, fractions)
nonzero_gaussian_rationals = gaussian_rationals.filter(lambda x: not x.is_zero())


def gr(value) -> GaussianRational:
    """Shorthand for exact scalars in tests"""
    if isinstance(value, (int, Fraction, GaussianRational)):
        return GaussianRational.of(value)
    return GaussianRational.parse(value)
