"""
The key relation between fibre coordinates xi and group coordinates w

On every chart, xi_alpha = -tr(Ad(u_minus_w) lambda * u_z^-1 du_z/dz^alpha).
Both directions are solved exactly by induction on root height.
"""
import logging
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

from domain.chart import WCoordinates
from domain.errors import DimensionMismatch, DivisionByZero
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO, GaussianRational
from infrastructure.flag.factorization import u_minus_from_w, w_from_u_minus
from infrastructure.lie.algebra import inverse_unipotent, maurer_cartan_coeffs

logger = logging.getLogger(__name__)


def _check_lengths(parabolic: ParabolicData, *vectors: Sequence[Any]):
    for vector in vectors:
        if len(vector) != parabolic.dim:
            raise DimensionMismatch(f"expected {parabolic.dim} coordinates, got {len(vector)}")


def lower_components(parabolic: ParabolicData, z: Sequence[Any], xi: Sequence[Any]) -> List[Any]:
    """
    Components y_beta = tr(F0 E_beta) of F0 = Ad(u_minus_w) lambda on the nilradical roots

    Solves C^T y = -xi where C is unitriangular for the height order.
    """
    c = maurer_cartan_coeffs(parabolic, z)
    d = parabolic.dim
    y: List[Any] = [ZERO] * d
    for alpha in reversed(range(d)):
        acc = -xi[alpha]
        for beta in range(alpha + 1, d):
            acc = acc - c[beta][alpha] * y[beta]
        y[alpha] = acc
    return y


def solve_u_minus(weight: WeightLambda, parabolic: ParabolicData,
                  z: Sequence[Any], xi: Sequence[Any]) -> SquareMatrix:
    """
    The unique u_minus with u_minus lambda u_minus^-1 = lambda + Y

    Y carries y_beta at the transposed root position. Entries are filled in
    increasing distance from the diagonal from
    (lambda_c - lambda_r) u_rc = Y_rc + sum_k Y_rk u_kc.
    """
    _check_lengths(parabolic, z, xi)
    if all(isinstance(v, GaussianRational) for v in (*z, *xi)):
        return _exact_u_minus(weight, parabolic, tuple(z), tuple(xi))
    return _u_minus(weight, parabolic, z, xi)


@lru_cache(maxsize=4096)
def _exact_u_minus(weight: WeightLambda, parabolic: ParabolicData,
                   z: Tuple[GaussianRational, ...], xi: Tuple[GaussianRational, ...]) -> SquareMatrix:
    return _u_minus(weight, parabolic, z, xi)


def _u_minus(weight: WeightLambda, parabolic: ParabolicData,
             z: Sequence[Any], xi: Sequence[Any]) -> SquareMatrix:
    n = parabolic.n
    block = parabolic.block_of
    y = lower_components(parabolic, z, xi)
    big_y = [[ZERO] * n for _ in range(n)]
    for root, value in zip(parabolic.delta_u, y):
        big_y[root.j][root.i] = value

    u = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for distance in range(1, n):
        for c in range(n - distance):
            r = c + distance
            if block[r] <= block[c]:
                continue
            acc = big_y[r][c]
            for k in range(c + 1, r):
                if block[c] < block[k] < block[r]:
                    acc = acc + big_y[r][k] * u[k][c]
            gap = weight.values[c] - weight.values[r]
            if gap.is_zero():
                raise DivisionByZero(f"lambda_{c} equals lambda_{r} across blocks")
            u[r][c] = acc / gap
    return SquareMatrix.from_rows(u)


def solve_w(weight: WeightLambda, parabolic: ParabolicData, sigma: Optional[WeylCoset],
            z: Sequence[Any], xi: Sequence[Any]) -> WCoordinates:
    """
    Solve the key relation for w given (z, xi)

    Args:
        weight: The weight lambda
        parabolic: Parabolic data
        sigma: Chart label (the relation has the same form on every chart)
        z: Base coordinates
        xi: Fibre coordinates

    Returns:
        The unique w
    """
    return w_from_u_minus(parabolic, solve_u_minus(weight, parabolic, z, xi))


def xi_from_w(weight: WeightLambda, parabolic: ParabolicData, sigma: Optional[WeylCoset],
              z: Sequence[Any], w: Sequence[Any]) -> List[Any]:
    """
    Evaluate the key relation in the forward direction

    Returns:
        xi_alpha = -sum_beta C[beta][alpha] tr(F0 E_beta)
    """
    _check_lengths(parabolic, z, w)
    u_minus = u_minus_from_w(parabolic, w)
    f0 = u_minus @ weight.matrix() @ inverse_unipotent(u_minus)
    c = maurer_cartan_coeffs(parabolic, z)
    d = parabolic.dim
    xi = []
    for alpha in range(d):
        acc = ZERO
        for beta, root in enumerate(parabolic.delta_u):
            acc = acc - c[beta][alpha] * f0.rows[root.j][root.i]
        xi.append(acc)
    return xi
