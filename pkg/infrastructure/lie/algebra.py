"""
Matrix Lie algebra operations on gl_n over exact rings
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, List, Sequence, Tuple, Union

from domain.chart import OrbitPoint
from domain.errors import DimensionMismatch, NotNilpotent, NotUnipotent
from domain.lie import ParabolicData
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO, GaussianRational, lift_vector

logger = logging.getLogger(__name__)


def bracket(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    """Commutator [A, B] = AB - BA"""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot bracket {a.n}x{a.n} with {b.n}x{b.n}")
    return a @ b - b @ a


def trace_form(a: SquareMatrix, b: SquareMatrix) -> Any:
    """Invariant pairing tr(AB)"""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot pair {a.n}x{a.n} with {b.n}x{b.n}")
    acc = ZERO
    for i in range(a.n):
        for k in range(a.n):
            acc = acc + a.rows[i][k] * b.rows[k][i]
    return acc


def exp_nilpotent(n_matrix: SquareMatrix) -> SquareMatrix:
    """
    Exponential of a nilpotent matrix as the finite sum over k < n

    Args:
        n_matrix: Matrix N with N^n = 0

    Returns:
        exp(N)

    Raises:
        NotNilpotent: if N^n != 0
    """
    n = n_matrix.n
    powers = [SquareMatrix.identity(n)]
    for _ in range(n):
        powers.append(powers[-1] @ n_matrix)
    if not powers[n].is_zero():
        raise NotNilpotent("matrix is not nilpotent")
    result = powers[0]
    for k in range(1, n):
        result = result + powers[k] * Fraction(1, factorial(k))
    return result


def log_unipotent(u: SquareMatrix) -> SquareMatrix:
    """
    Logarithm of a unipotent matrix as the finite series in N = U - I

    Raises:
        NotUnipotent: if (U - I)^n != 0
    """
    n = u.n
    nil = u - SquareMatrix.identity(n)
    powers = [nil]
    for _ in range(n - 1):
        powers.append(powers[-1] @ nil)
    if not powers[n - 1].is_zero():
        raise NotUnipotent("matrix is not unipotent")
    result = SquareMatrix.zeros(n)
    for k in range(1, n):
        result = result + powers[k - 1] * Fraction((-1) ** (k + 1), k)
    return result


def inverse_unipotent(u: SquareMatrix) -> SquareMatrix:
    """Inverse of a unipotent matrix by the finite Neumann series"""
    n = u.n
    neg = SquareMatrix.identity(n) - u
    result = SquareMatrix.identity(n)
    term = SquareMatrix.identity(n)
    for _ in range(n - 1):
        term = term @ neg
        result = result + term
    if not (term @ neg).is_zero():
        raise NotUnipotent("matrix is not unipotent")
    return result


def coadjoint(g: SquareMatrix, f: Union[OrbitPoint, SquareMatrix]) -> Union[OrbitPoint, SquareMatrix]:
    """
    Coadjoint action F -> g F g^-1

    Args:
        g: Invertible matrix
        f: Orbit point or bare matrix

    Returns:
        Transformed point of the same kind; a witness h becomes g h
    """
    if isinstance(f, OrbitPoint):
        witness = g @ f.witness if f.witness is not None else None
        return OrbitPoint(F=coadjoint(g, f.F), witness=witness)
    if g.n != f.n:
        raise DimensionMismatch(f"cannot act by {g.n}x{g.n} on {f.n}x{f.n}")
    return g @ f @ g.inverse()


def nilradical_element(parabolic: ParabolicData, coords: Sequence[Any], negative: bool = False) -> SquareMatrix:
    """Sum of coords[a] * E_alpha (or E_-alpha) over the nilradical roots"""
    n = parabolic.n
    entries = [[ZERO] * n for _ in range(n)]
    for root, c in zip(parabolic.delta_u, coords):
        if negative:
            entries[root.j][root.i] = c
        else:
            entries[root.i][root.j] = c
    return SquareMatrix.from_rows(entries)


def _coefficients(parabolic: ParabolicData, matrix: SquareMatrix) -> List[Any]:
    return [matrix.rows[root.i][root.j] for root in parabolic.delta_u]


def maurer_cartan_coeffs(parabolic: ParabolicData, z: Sequence[Any]) -> Tuple[Tuple[Any, ...], ...]:
    """
    Coefficients of u_z^-1 du_z in the basis dz

    Args:
        parabolic: Parabolic data
        z: Chart coordinates (scalars or jets)

    Returns:
        C with C[beta][alpha] the E_beta component of u_z^-1 du_z/dz^alpha
    """
    if all(isinstance(v, GaussianRational) for v in z):
        return _exact_maurer_cartan_coeffs(parabolic, tuple(z))
    return _maurer_cartan_coeffs(parabolic, z)


@lru_cache(maxsize=4096)
def _exact_maurer_cartan_coeffs(parabolic: ParabolicData,
                                z: Tuple[GaussianRational, ...]) -> Tuple[Tuple[Any, ...], ...]:
    return _maurer_cartan_coeffs(parabolic, z)


def _maurer_cartan_coeffs(parabolic: ParabolicData, z: Sequence[Any]) -> Tuple[Tuple[Any, ...], ...]:
    seeded = lift_vector(list(z))
    tag = seeded[0].tag if seeded else 1
    u = exp_nilpotent(nilradical_element(parabolic, seeded))
    u_inv = inverse_unipotent(u.value_at(tag))
    columns = []
    for alpha in range(parabolic.dim):
        columns.append(_coefficients(parabolic, u_inv @ u.partial_at(alpha, tag)))
    return tuple(tuple(columns[alpha][beta] for alpha in range(parabolic.dim))
                 for beta in range(parabolic.dim))


def dexp_coeffs(parabolic: ParabolicData, z: Sequence[Any]) -> Tuple[Tuple[Any, ...], ...]:
    """
    Same coefficients as maurer_cartan_coeffs, from the series
    sum_k (-ad Z)^k E_alpha / (k+1)!
    """
    n = parabolic.n
    big_z = nilradical_element(parabolic, z)
    columns = []
    for alpha in parabolic.delta_u:
        term = alpha.vector(n)
        total = term
        for k in range(1, n - 1):
            term = -bracket(big_z, term)
            total = total + term * Fraction(1, factorial(k + 1))
        columns.append(_coefficients(parabolic, total))
    return tuple(tuple(columns[a][b] for a in range(parabolic.dim)) for b in range(parabolic.dim))


def characteristic_polynomial(a: SquareMatrix) -> List[Any]:
    """
    Coefficients c_0..c_n of det(x I - A) by Faddeev-LeVerrier

    Returns:
        List with c_k the coefficient of x^k (c_n = 1)
    """
    n = a.n
    coeffs: List[Any] = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = SquareMatrix.zeros(n)
    identity = SquareMatrix.identity(n)
    for k in range(1, n + 1):
        m = a @ m + identity * coeffs[n - k + 1]
        coeffs[n - k] = -(a @ m).trace() * Fraction(1, k)
    return coeffs


def orbit_invariant(f: Union[OrbitPoint, SquareMatrix]) -> List[Any]:
    """Characteristic polynomial, constant along a coadjoint orbit"""
    matrix = f.F if isinstance(f, OrbitPoint) else f
    return characteristic_polynomial(matrix)
