"""
The twisted moment map mu_lambda on chart cotangent bundles
"""
import logging
from dataclasses import replace
from typing import Any, Dict, Sequence, Tuple

from domain.chart import ChartPoint, OrbitPoint
from domain.errors import InvalidEncoding, MissingWitness
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix
from infrastructure.flag.factorization import locate_chart, u_from_z, w_from_u_minus, z_from_u
from infrastructure.lie.algebra import inverse_unipotent
from infrastructure.twisted.key_relation import solve_u_minus, solve_w, xi_from_w

logger = logging.getLogger(__name__)


def _mu_parts(weight: WeightLambda, parabolic: ParabolicData, sigma: WeylCoset,
              z: Sequence[Any], xi: Sequence[Any]) -> Tuple[SquareMatrix, SquareMatrix]:
    u = u_from_z(parabolic, z)
    u_minus = solve_u_minus(weight, parabolic, z, xi)
    a = sigma.representative @ u @ u_minus
    a_inv = inverse_unipotent(u_minus) @ inverse_unipotent(u) @ sigma.inverse_representative
    return a, a @ weight.matrix() @ a_inv


def mu_matrix(weight: WeightLambda, parabolic: ParabolicData, sigma: WeylCoset,
              z: Sequence[Any], xi: Sequence[Any]) -> SquareMatrix:
    """Ad(sigma-dot u_z u_minus_w) lambda for coordinates in any exact ring"""
    return _mu_parts(weight, parabolic, sigma, z, xi)[1]


def mu_local(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint) -> OrbitPoint:
    """
    Moment map on one chart

    Args:
        weight: The weight lambda
        parabolic: Parabolic data
        point: Chart point (sigma, z, xi)

    Returns:
        Orbit point F with witness sigma-dot u_z u_minus_w
    """
    witness, f = _mu_parts(weight, parabolic, point.sigma, point.z, point.xi)
    return OrbitPoint(F=f, witness=witness)


def mu_global(weight: WeightLambda, parabolic: ParabolicData, atlas: Sequence[WeylCoset],
              point: ChartPoint) -> OrbitPoint:
    """Moment map on the glued bundle: dispatch on the chart label"""
    if point.sigma not in atlas:
        raise InvalidEncoding(f"chart {point.sigma.label()} is not part of the atlas")
    return mu_local(weight, parabolic, point)


def mu_inverse(weight: WeightLambda, parabolic: ParabolicData, atlas: Sequence[WeylCoset],
               point: OrbitPoint) -> ChartPoint:
    """
    Chart point mapping to F, recovered from the witness g

    Writes sigma-dot^-1 g = u u_minus t in the first chart that admits it;
    t commutes with lambda, so F = Ad(sigma-dot u u_minus) lambda.

    Raises:
        MissingWitness: if the orbit point carries no witness
    """
    if point.witness is None:
        raise MissingWitness("orbit point has no witness g with F = Ad(g) lambda")
    sigma, factors = locate_chart(point.witness, atlas, parabolic)
    z = z_from_u(parabolic, factors.u)
    w = w_from_u_minus(parabolic, factors.u_minus).w
    xi = xi_from_w(weight, parabolic, sigma, z, w)
    logger.debug(f"Recovered chart point on chart {sigma.label()}")
    return ChartPoint(sigma=sigma, z=tuple(z), xi=tuple(xi))


def scale_check(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint,
                c: Any) -> Dict[str, bool]:
    """
    How the construction responds to lambda -> c lambda

    Returns:
        xi_scales: at fixed (z, w), xi is multiplied by c
        mu_scales: mu at the rescaled fibre point is multiplied by c
        w_inverse: w at c lambda over xi equals w at lambda over xi / c
        w_linear: w scales by 1/c (only reported for two blocks, where w is linear in xi)
    """
    scaled = weight.scaled(c)
    scaled_parabolic = replace(parabolic, weight=scaled)
    w = solve_w(weight, parabolic, point.sigma, point.z, point.xi).w
    xi_scaled = tuple(xi_from_w(scaled, scaled_parabolic, point.sigma, point.z, w))
    mu = mu_matrix(weight, parabolic, point.sigma, point.z, point.xi)
    mu_scaled = mu_matrix(scaled, scaled_parabolic, point.sigma, point.z, xi_scaled)
    w_scaled = solve_w(scaled, scaled_parabolic, point.sigma, point.z, point.xi).w
    w_shrunk = solve_w(weight, parabolic, point.sigma, point.z, tuple(x / c for x in point.xi)).w
    result = {
        'xi_scales': xi_scaled == tuple(x * c for x in point.xi),
        'mu_scales': mu_scaled == mu * c,
        'w_inverse': w_scaled == w_shrunk,
    }
    if len(parabolic.block_sizes) == 2:
        result['w_linear'] = w_scaled == tuple(x / c for x in w)
    return result
