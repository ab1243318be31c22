"""
Big-cell factorization g = u * u_minus * t and chart coordinates
"""
import logging
from typing import Any, List, Sequence, Tuple

from domain.chart import WCoordinates
from domain.errors import OutsideBigCell, OutsideChart, SingularMatrix, WrongSupport
from domain.lie import ParabolicData, UULFactorization, WeylCoset
from domain.matrix import SquareMatrix, invert_rows, matmul_rows
from domain.scalar import ONE, ZERO, is_exact_zero
from infrastructure.lie.algebra import exp_nilpotent, log_unipotent, nilradical_element

logger = logging.getLogger(__name__)


def _block(rows: Sequence[Sequence[Any]], r: Tuple[int, int], c: Tuple[int, int]) -> List[List[Any]]:
    return [list(rows[i][c[0]:c[1]]) for i in range(r[0], r[1])]


def factor_uul(g: SquareMatrix, parabolic: ParabolicData) -> UULFactorization:
    """
    Factor g = u * u_minus * t with u in U, u_minus in U_minus, t in L

    Block row reduction from the last block upwards: the trailing diagonal
    blocks of the partially reduced matrix serve as pivots. Entries may be
    jets; pivots are tested on their innermost values.

    Args:
        g: Matrix to factor
        parabolic: Parabolic data fixing the blocks

    Returns:
        The unique factorization

    Raises:
        OutsideBigCell: if a pivot block is singular
    """
    n = parabolic.n
    bounds = parabolic.block_bounds()
    work = g.to_lists()
    u = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    pivot_inverses = [None] * len(bounds)

    for k in reversed(range(len(bounds))):
        kb = bounds[k]
        try:
            pivot_inv = invert_rows(_block(work, kb, kb))
        except SingularMatrix as e:
            raise OutsideBigCell(f"pivot block {k} is singular") from e
        pivot_inverses[k] = pivot_inv
        pivot_rows = [work[r] for r in range(kb[0], kb[1])]
        for i in range(k):
            ib = bounds[i]
            multipliers = matmul_rows(_block(work, ib, kb), pivot_inv)
            for r, row_multipliers in enumerate(multipliers):
                row = ib[0] + r
                for c, m in enumerate(row_multipliers):
                    u[row][kb[0] + c] = m
                update = matmul_rows([row_multipliers], pivot_rows)[0]
                work[row] = [a - b for a, b in zip(work[row], update)]

    t = [[ZERO] * n for _ in range(n)]
    u_minus = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for k, kb in enumerate(bounds):
        for r in range(kb[0], kb[1]):
            for c in range(kb[0], kb[1]):
                t[r][c] = work[r][c]
        for i in range(k + 1, len(bounds)):
            ib = bounds[i]
            block = matmul_rows(_block(work, ib, kb), pivot_inverses[k])
            for r, row in enumerate(block):
                for c, entry in enumerate(row):
                    u_minus[ib[0] + r][kb[0] + c] = entry

    return UULFactorization(u=SquareMatrix.from_rows(u),
                            u_minus=SquareMatrix.from_rows(u_minus),
                            t=SquareMatrix.from_rows(t))


def _check_support(matrix: SquareMatrix, parabolic: ParabolicData, upper: bool):
    for i in range(parabolic.n):
        for j in range(parabolic.n):
            entry = matrix.rows[i][j]
            if i == j:
                if not is_exact_zero(entry - ONE):
                    raise WrongSupport(f"diagonal entry ({i}, {j}) is not 1")
                continue
            allowed = parabolic.in_nilradical(i, j) if upper else parabolic.in_nilradical(j, i)
            if not allowed and not is_exact_zero(entry):
                raise WrongSupport(f"entry ({i}, {j}) outside the expected support")


def u_from_z(parabolic: ParabolicData, z: Sequence[Any]) -> SquareMatrix:
    """u_z = exp(sum z^alpha E_alpha)"""
    return exp_nilpotent(nilradical_element(parabolic, z))


def z_from_u(parabolic: ParabolicData, u: SquareMatrix) -> Tuple[Any, ...]:
    """
    Chart coordinates of a block upper unipotent matrix

    Raises:
        WrongSupport: if u is not in U
    """
    _check_support(u, parabolic, upper=True)
    log = log_unipotent(u)
    return tuple(log.rows[root.i][root.j] for root in parabolic.delta_u)


def u_minus_from_w(parabolic: ParabolicData, w: Sequence[Any]) -> SquareMatrix:
    """u_minus_w = exp(sum w_alpha E_-alpha)"""
    return exp_nilpotent(nilradical_element(parabolic, w, negative=True))


def w_from_u_minus(parabolic: ParabolicData, u_minus: SquareMatrix) -> WCoordinates:
    """
    Logarithmic coordinates of a block lower unipotent matrix

    Raises:
        WrongSupport: if u_minus is not in U_minus
    """
    _check_support(u_minus, parabolic, upper=False)
    log = log_unipotent(u_minus)
    return WCoordinates(tuple(log.rows[root.j][root.i] for root in parabolic.delta_u))


def locate_chart(g: SquareMatrix, atlas: Sequence[WeylCoset],
                 parabolic: ParabolicData) -> Tuple[WeylCoset, UULFactorization]:
    """
    First chart sigma (atlas order) with sigma-dot^-1 g in the big cell

    Args:
        g: Invertible matrix
        atlas: Charts to try
        parabolic: Parabolic data

    Returns:
        The chart and the factorization of sigma-dot^-1 g

    Raises:
        OutsideChart: if no chart contains g (g singular)
    """
    for sigma in atlas:
        try:
            return sigma, factor_uul(sigma.inverse_representative @ g, parabolic)
        except OutsideBigCell:
            continue
    raise OutsideChart("no chart of the atlas contains the element")
