"""
Fundamental vector fields on a chart and the untwisted moment map
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple

from domain.chart import ChartPoint
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO, Jet
from infrastructure.flag.factorization import factor_uul, u_from_z, z_from_u
from infrastructure.lie.algebra import inverse_unipotent
from infrastructure.twisted.moment_map import mu_matrix

_TAG = 1


def vector_field_chart(x: SquareMatrix, parabolic: ParabolicData, z: Sequence[Any],
                       sigma: Optional[WeylCoset] = None) -> Tuple[Any, ...]:
    """
    Components of X_M(z) = d/dt z(exp(-tX) . z) at t = 0

    The curve is differentiated to first order with a jet in t:
    (I - tX) sigma-dot u_z is factored in chart sigma and its coordinates read off.

    Args:
        x: Lie algebra element
        parabolic: Parabolic data
        z: Chart coordinates
        sigma: Chart label (identity chart when omitted)

    Returns:
        One dz-component per nilradical root
    """
    n = parabolic.n
    curve = SquareMatrix.from_function(
        n, lambda i, j: Jet(ONE if i == j else ZERO, (-x.rows[i][j],), _TAG))
    base = u_from_z(parabolic, z)
    if sigma is not None:
        curve = sigma.inverse_representative @ curve @ sigma.representative
    factors = factor_uul(curve @ base, parabolic)
    moved = z_from_u(parabolic, factors.u)
    return tuple(c.partial(0) if isinstance(c, Jet) else ZERO for c in moved)


def classical_moment(parabolic: ParabolicData, point: ChartPoint) -> SquareMatrix:
    """
    Canonical moment map of the cotangent lift: the M with tr(M X) = xi(X_M)

    Returns:
        sum_ab xi(X_M(e_ab)) e_ba
    """
    n = parabolic.n
    sigma = None if point.sigma.is_identity() else point.sigma
    entries: List[List[Any]] = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            field = vector_field_chart(SquareMatrix.elementary(n, a, b), parabolic, point.z, sigma)
            acc = ZERO
            for xi_k, component in zip(point.xi, field):
                acc = acc + xi_k * component
            entries[b][a] = acc
    return SquareMatrix.from_rows(entries)


def hermitian_relations(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint) -> Dict[str, bool]:
    """
    Two identities of the two-block (Grassmannian) case on the identity chart

    Returns:
        translation: Ad(u_z^-1) mu(z, xi) == mu(0, xi)
        classical: mu(z, xi) - Ad(u_z) lambda == classical moment at (z, xi)
    """
    u = u_from_z(parabolic, point.z)
    u_inv = inverse_unipotent(u)
    mu = mu_matrix(weight, parabolic, point.sigma, point.z, point.xi)
    origin = mu_matrix(weight, parabolic, point.sigma, tuple(ZERO for _ in point.z), point.xi)
    shifted_lambda = u @ weight.matrix() @ u_inv
    return {
        'translation': u_inv @ mu @ u == origin,
        'classical': mu - shifted_lambda == classical_moment(parabolic, point),
    }
