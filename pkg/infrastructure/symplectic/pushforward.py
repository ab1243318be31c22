"""
Pushforward of chart tangent vectors by mu and the symplectic pullback check
"""
import logging
from typing import List

from domain.chart import ChartPoint, ChartTangent, OrbitTangent
from domain.errors import DimensionMismatch
from domain.lie import ParabolicData, WeightLambda
from domain.matrix import SquareMatrix
from domain.report import PullbackReport
from domain.scalar import GaussianRational, lift_vector
from infrastructure.symplectic.forms import omega_chart, omega_orbit_from_generators, solve_generator
from infrastructure.twisted.moment_map import mu_matrix

logger = logging.getLogger(__name__)


def jacobian_mu(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint) -> List[SquareMatrix]:
    """
    Partial derivatives of mu along the 2d chart coordinates

    Returns:
        [dmu/dz^0, ..., dmu/dz^{d-1}, dmu/dxi_0, ..., dmu/dxi_{d-1}]
    """
    d = point.dim
    seeded = lift_vector(list(point.z) + list(point.xi))
    tag = seeded[0].tag
    f = mu_matrix(weight, parabolic, point.sigma, seeded[:d], seeded[d:])
    return [f.partial_at(k, tag) for k in range(2 * d)]


def pushforward_mu(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint,
                   tangent: ChartTangent) -> OrbitTangent:
    """
    d mu applied to a chart tangent vector

    Args:
        weight: The weight lambda
        parabolic: Parabolic data
        point: Base point
        tangent: Tangent vector (dz, dxi)

    Returns:
        Tangent vector to the orbit at mu(point)
    """
    vector = tangent.as_vector()
    if len(vector) != 2 * point.dim:
        raise DimensionMismatch(f"tangent has {len(vector)} components, expected {2 * point.dim}")
    n = parabolic.n
    result = SquareMatrix.zeros(n)
    for coefficient, partial in zip(vector, jacobian_mu(weight, parabolic, point)):
        if not GaussianRational.of(coefficient).is_zero():
            result = result + partial * coefficient
    return OrbitTangent(V=result)


def verify_pullback(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint) -> PullbackReport:
    """
    Check mu^* omega_orbit = omega_chart on every pair of basis vectors

    Returns:
        Report with C(2d, 2) pairs and any failures
    """
    d = point.dim
    jacobian = jacobian_mu(weight, parabolic, point)
    f = mu_matrix(weight, parabolic, point.sigma, point.z, point.xi)
    generators = [solve_generator(f, v) for v in jacobian]
    basis = [ChartTangent.basis(k, d) for k in range(2 * d)]
    report = PullbackReport()
    for a in range(2 * d):
        for b in range(a + 1, 2 * d):
            lhs = omega_orbit_from_generators(f, generators[a], generators[b])
            rhs = omega_chart(basis[a], basis[b])
            report.pairs_checked += 1
            if lhs != rhs:
                report.failures.append({'a': a, 'b': b, 'lhs': str(lhs), 'rhs': str(rhs)})
    if report.failures:
        logger.warning(f"Pullback mismatch on {len(report.failures)} of {report.pairs_checked} pairs")
    return report
