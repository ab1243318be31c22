"""
The twisting one-form of the affine action and related identities
"""
import logging
from typing import Any, List, Optional, Sequence, Tuple

from domain.chart import ChartPoint, ChartTangent
from domain.errors import DimensionMismatch
from domain.lie import ParabolicData, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix, invert_rows
from domain.scalar import ZERO, lift_vector, partial_at
from infrastructure.flag.factorization import factor_uul, u_from_z, z_from_u
from infrastructure.lie.algebra import trace_form
from infrastructure.symplectic.forms import omega_chart
from infrastructure.twisted.affine_action import psi_affine, psi_coordinates

logger = logging.getLogger(__name__)


def _moved_factors(parabolic: ParabolicData, g: SquareMatrix, z: Sequence[Any],
                   sigma: Optional[WeylCoset], tau: Optional[WeylCoset]):
    m = u_from_z(parabolic, z)
    if sigma is not None:
        m = sigma.representative @ m
    m = g @ m
    if tau is not None:
        m = tau.inverse_representative @ m
    return factor_uul(m, parabolic)


def twist_one_form(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
                   z: Sequence[Any], sigma: Optional[WeylCoset] = None,
                   tau: Optional[WeylCoset] = None) -> Tuple[Any, ...]:
    """
    dz-components of <lambda, dt t^-1> where t is the L-factor of tau^-1 g sigma u_z

    Args:
        weight: The weight lambda
        parabolic: Parabolic data
        g: Group element
        z: Source coordinates (scalars or jets)
        sigma: Source chart (identity when omitted)
        tau: Target chart (identity when omitted)

    Returns:
        tr(lambda dt/dz^m t^-1) for each coordinate m
    """
    seeded = lift_vector(list(z))
    tag = seeded[0].tag
    t = _moved_factors(parabolic, g, seeded, sigma, tau).t
    t_value = t.value_at(tag)
    t_inv = SquareMatrix.from_rows(invert_rows(t_value.rows))
    lam = weight.matrix()
    return tuple(trace_form(lam, t.partial_at(m, tag) @ t_inv) for m in range(parabolic.dim))


def twist_closedness(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
                     z: Sequence[Any]) -> bool:
    """True when the mixed partials of the twisting form agree (the form is closed)"""
    outer = lift_vector(list(z))
    tag = outer[0].tag
    form = twist_one_form(weight, parabolic, g, outer)
    d = parabolic.dim
    return all(partial_at(form[m], k, tag) == partial_at(form[k], m, tag)
               for k in range(d) for m in range(k + 1, d))


def log_det_correction(parabolic: ParabolicData, g: SquareMatrix, z: Sequence[Any]) -> Tuple[Any, ...]:
    """
    Closed form -s d log det(cz + d) of the twisting form for two blocks

    g = [[a, b], [c, d]] in blocks of sizes p and q, and s = lambda_1 - lambda_n.
    """
    if len(parabolic.block_sizes) != 2:
        raise DimensionMismatch("closed form requires exactly two blocks")
    p, _ = parabolic.block_sizes
    n = parabolic.n
    s = parabolic.weight.values[0] - parabolic.weight.values[-1]
    rows = g.rows
    # cz + d, with z the p x q block of coordinates
    z_block = [[ZERO] * (n - p) for _ in range(p)]
    for root, value in zip(parabolic.delta_u, z):
        z_block[root.i][root.j - p] = value
    czd = [[rows[p + r][p + c] + sum((rows[p + r][k] * z_block[k][c] for k in range(p)), ZERO)
            for c in range(n - p)] for r in range(n - p)]
    czd_inv = invert_rows(czd)
    # ((cz + d)^-1 c)_{ji}
    product = [[sum((czd_inv[r][k] * rows[p + k][c] for k in range(n - p)), ZERO)
                for c in range(p)] for r in range(n - p)]
    return tuple(-s * product[root.j - p][root.i] for root in parabolic.delta_u)


def verify_affine_decomposition(weight: WeightLambda, parabolic: ParabolicData, g: SquareMatrix,
                                point: ChartPoint, tau: Optional[WeylCoset] = None) -> bool:
    """
    Check that psi(g) xi, pulled back along z -> g.z, equals xi plus the twisting form

    With J the Jacobian of z -> g.z this is J^T xi' = xi + <lambda, dt t^-1>.
    """
    tau = point.sigma if tau is None else tau
    image = psi_affine(weight, parabolic, g, point, tau)
    seeded = lift_vector(list(point.z))
    tag = seeded[0].tag
    sigma = None if point.sigma.is_identity() else point.sigma
    target = None if tau.is_identity() else tau
    moved = z_from_u(parabolic, _moved_factors(parabolic, g, seeded, sigma, target).u)
    form = twist_one_form(weight, parabolic, g, point.z, sigma, target)
    d = parabolic.dim
    for m in range(d):
        lhs = ZERO
        for k in range(d):
            lhs = lhs + partial_at(moved[k], m, tag) * image.xi[k]
        if lhs != point.xi[m] + form[m]:
            return False
    return True


def transported_form_check(weight: WeightLambda, parabolic: ParabolicData, point: ChartPoint,
                           tau: WeylCoset, g: Optional[SquareMatrix] = None) -> bool:
    """
    Check that psi(g) (a chart transition when g is omitted) preserves the chart form

    Compares omega_chart(J e_a, J e_b) with omega_chart(e_a, e_b) for every basis pair,
    J being the Jacobian in (z, xi).
    """
    d = point.dim
    g = SquareMatrix.identity(parabolic.n) if g is None else g
    seeded = lift_vector(list(point.z) + list(point.xi))
    tag = seeded[0].tag
    z_new, xi_new = psi_coordinates(weight, parabolic, g, point.sigma, seeded[:d], seeded[d:], tau)
    outputs = list(z_new) + list(xi_new)
    columns: List[ChartTangent] = []
    for a in range(2 * d):
        column = [partial_at(value, a, tag) for value in outputs]
        columns.append(ChartTangent(tuple(column[:d]), tuple(column[d:])))
    basis = [ChartTangent.basis(k, d) for k in range(2 * d)]
    return all(omega_chart(columns[a], columns[b]) == omega_chart(basis[a], basis[b])
               for a in range(2 * d) for b in range(a + 1, 2 * d))
