"""
Affine action of GL_n on the twisted cotangent bundle and chart transitions
"""
import logging
from typing import Any, Optional, Sequence, Tuple

from domain.chart import ChartPoint
from domain.errors import OutsideBigCell, OutsideChart, OutsideOverlap
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix
from infrastructure.flag.factorization import factor_uul, locate_chart, u_from_z, w_from_u_minus, z_from_u
from infrastructure.twisted.key_relation import solve_u_minus, xi_from_w

logger = logging.getLogger(__name__)


def psi_coordinates(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
                    sigma: WeylCoset, z: Sequence[Any], xi: Sequence[Any],
                    tau: WeylCoset) -> Tuple[Tuple[Any, ...], Tuple[Any, ...]]:
    """
    Coordinates (z', xi') on chart tau of g acting on (z, xi) at chart sigma

    Factors tau-dot^-1 g sigma-dot u_z u_minus_w = u' u_minus' t' and reads
    z' from u' and xi' from the key relation at (z', w(u_minus')). Generic
    over the coordinate ring.

    Raises:
        OutsideChart: if the image leaves chart tau
    """
    u_minus = solve_u_minus(weight, parabolic, z, xi)
    m = tau.inverse_representative @ g @ sigma.representative @ u_from_z(parabolic, z) @ u_minus
    try:
        factors = factor_uul(m, parabolic)
    except OutsideBigCell as e:
        raise OutsideChart(f"image does not lie in chart {tau.label()}") from e
    z_new = z_from_u(parabolic, factors.u)
    w_new = w_from_u_minus(parabolic, factors.u_minus).w
    xi_new = xi_from_w(weight, parabolic, tau, z_new, w_new)
    return tuple(z_new), tuple(xi_new)


def psi_affine(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
               point: ChartPoint, tau: Optional[WeylCoset] = None) -> ChartPoint:
    """
    Affine action psi(g) landing on chart tau

    Args:
        weight: The weight lambda
        parabolic: Parabolic data
        g: Group element
        point: Source point
        tau: Target chart; defaults to the source chart

    Returns:
        Image point on chart tau
    """
    tau = point.sigma if tau is None else tau
    z, xi = psi_coordinates(weight, parabolic, g, point.sigma, point.z, point.xi, tau)
    return ChartPoint(sigma=tau, z=z, xi=xi)


def psi_global(weight: WeightLambda, parabolic: ParabolicData, atlas: Sequence[WeylCoset],
               g: SquareMatrix, point: ChartPoint) -> ChartPoint:
    """Affine action with the target chart located from g sigma-dot u_z"""
    base = g @ point.sigma.representative @ u_from_z(parabolic, point.z)
    tau, _ = locate_chart(base, atlas, parabolic)
    return psi_affine(weight, parabolic, g, point, tau)


def psi_cocycle_check(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
                      h: SquareMatrix, point: ChartPoint, middle: Optional[WeylCoset] = None,
                      target: Optional[WeylCoset] = None) -> bool:
    """
    Compare psi(g) psi(h) with psi(gh)

    Args:
        middle: Chart for the image under h (default: source chart)
        target: Chart for the final image (default: source chart)

    Returns:
        True when both routes give the same chart point

    Raises:
        OutsideChart: if an image leaves its designated chart
    """
    middle = point.sigma if middle is None else middle
    target = point.sigma if target is None else target
    step = psi_affine(weight, parabolic, h, point, middle)
    composed = psi_affine(weight, parabolic, g, step, target)
    direct = psi_affine(weight, parabolic, g @ h, point, target)
    return composed == direct


def transition(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint,
               tau: WeylCoset) -> ChartPoint:
    """
    Re-express a point in chart tau

    Raises:
        OutsideOverlap: if the point is not in chart tau
    """
    identity = SquareMatrix.identity(parabolic.n)
    try:
        return psi_affine(weight, parabolic, identity, point, tau)
    except OutsideChart as e:
        raise OutsideOverlap(f"point is outside the overlap of charts "
                             f"{point.sigma.label()} and {tau.label()}") from e
