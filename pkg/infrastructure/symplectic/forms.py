"""
Symplectic forms on charts and on the coadjoint orbit
"""
from typing import Any, List, Union

from domain.chart import ChartTangent, OrbitPoint, OrbitTangent
from domain.errors import DimensionMismatch, NotTangent
from domain.matrix import SquareMatrix, solve_linear_system
from domain.scalar import ZERO
from infrastructure.lie.algebra import bracket, trace_form


def omega_chart(t1: ChartTangent, t2: ChartTangent) -> Any:
    """Canonical form sum_alpha dz^alpha ^ dxi_alpha"""
    if len(t1.dz) != len(t2.dz):
        raise DimensionMismatch("tangent vectors of different dimension")
    acc = ZERO
    for a in range(len(t1.dz)):
        acc = acc + t1.dz[a] * t2.dxi[a] - t2.dz[a] * t1.dxi[a]
    return acc


def _matrix(value: Union[OrbitPoint, OrbitTangent, SquareMatrix]) -> SquareMatrix:
    if isinstance(value, OrbitPoint):
        return value.F
    if isinstance(value, OrbitTangent):
        return value.V
    return value


def solve_generator(f: Union[OrbitPoint, SquareMatrix], v: Union[OrbitTangent, SquareMatrix]) -> SquareMatrix:
    """
    Some X in gl_n with -[X, F] = V

    Solves FX - XF = V entrywise as n^2 linear equations; free unknowns are
    set to zero.

    Raises:
        NotTangent: if V is not in the image of ad at F
    """
    fm, vm = _matrix(f), _matrix(v)
    n = fm.n
    if vm.n != n:
        raise DimensionMismatch("orbit point and tangent vector differ in size")
    rows: List[List[Any]] = []
    rhs: List[Any] = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            for k in range(n):
                row[k * n + j] = row[k * n + j] + fm.rows[i][k]
                row[i * n + k] = row[i * n + k] - fm.rows[k][j]
            rows.append(row)
            rhs.append(vm.rows[i][j])
    solution = solve_linear_system(rows, rhs)
    if solution is None:
        raise NotTangent("matrix is not tangent to the orbit")
    return SquareMatrix.from_function(n, lambda a, b: solution[a * n + b])


def omega_orbit_from_generators(f: Union[OrbitPoint, SquareMatrix], x1: SquareMatrix, x2: SquareMatrix) -> Any:
    """Kirillov-Kostant-Souriau form -tr(F [X1, X2])"""
    return -trace_form(_matrix(f), bracket(x1, x2))


def omega_orbit(f: Union[OrbitPoint, SquareMatrix], v1: Union[OrbitTangent, SquareMatrix],
                v2: Union[OrbitTangent, SquareMatrix]) -> Any:
    """
    Orbit form on tangent vectors V_i = -[X_i, F]

    Independent of the generators chosen: they differ by elements commuting with F.
    """
    x1 = solve_generator(f, v1)
    x2 = solve_generator(f, v2)
    return omega_orbit_from_generators(f, x1, x2)


def omega_orbit_invariance(f: Union[OrbitPoint, SquareMatrix], v1: SquareMatrix, v2: SquareMatrix,
                          g: SquareMatrix) -> bool:
    """True when omega_orbit is unchanged by transporting F, V1, V2 with Ad(g)"""
    fm = _matrix(f)
    g_inv = g.inverse()
    moved = omega_orbit(g @ fm @ g_inv, g @ v1 @ g_inv, g @ v2 @ g_inv)
    return moved == omega_orbit(fm, v1, v2)
