"""
Square matrices over an exact ring (Gaussian rationals or jets)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, IndexOutOfRange, InvalidEncoding, SingularMatrix
from .scalar import ONE, ZERO, GaussianRational, as_ring, base_value, is_exact_zero, partial_at, value_at

Rows = List[List[Any]]


def matmul_rows(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Rows:
    """Product of two rectangular row-lists"""
    if a and len(a[0]) != len(b):
        raise DimensionMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    cols = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(cols):
            acc = ZERO
            for k, entry in enumerate(row):
                if is_exact_zero(entry):
                    continue
                acc = acc + entry * b[k][j]
            out.append(acc)
        result.append(out)
    return result


def invert_rows(rows: Sequence[Sequence[Any]]) -> Rows:
    """
    Gauss-Jordan inverse over any exact ring

    Pivots are chosen among entries whose innermost value is nonzero, so
    the routine works for jet entries as well.

    Args:
        rows: Square matrix as a list of rows

    Returns:
        Inverse as a list of rows

    Raises:
        SingularMatrix: if no invertible pivot exists in some column
    """
    n = len(rows)
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not base_value(work[r][col]).is_zero()), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular (column {col})")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [entry * inv for entry in work[col]]
        for r in range(n):
            if r == col or is_exact_zero(work[r][col]):
                continue
            factor = work[r][col]
            work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


def determinant_rows(rows: Sequence[Sequence[Any]]) -> Any:
    """Determinant by exact elimination with row swaps"""
    work = [list(row) for row in rows]
    n = len(work)
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not base_value(work[r][col]).is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if not is_exact_zero(work[r][col]):
                factor = work[r][col] * inv
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return det


def solve_linear_system(matrix: Sequence[Sequence[GaussianRational]],
                        rhs: Sequence[GaussianRational]) -> Optional[List[GaussianRational]]:
    """
    Particular solution of A x = b with free variables set to zero

    Args:
        matrix: Coefficient rows (m x k)
        rhs: Right-hand side (length m)

    Returns:
        Solution vector, or None when the system is inconsistent
    """
    m = len(matrix)
    k = len(matrix[0]) if m else 0
    work = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivot_cols = []
    r = 0
    for col in range(k):
        pivot = next((i for i in range(r, m) if not base_value(work[i][col]).is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        work[r] = [entry * inv for entry in work[r]]
        for i in range(m):
            if i != r and not is_exact_zero(work[i][col]):
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    if any(not is_exact_zero(work[i][k]) for i in range(r, m)):
        return None
    solution = [ZERO] * k
    for row_index, col in enumerate(pivot_cols):
        solution[col] = work[row_index][k]
    return solution


@dataclass(frozen=True)
class SquareMatrix:
    """
    Immutable n x n matrix over an exact ring

    Attributes:
        rows: Entries as a tuple of row tuples
    """
    rows: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_ring(entry) for entry in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("matrix must have at least one row")
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix rows must all have length n")
        object.__setattr__(self, 'rows', rows)

    # Constructors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "SquareMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], Any]) -> "SquareMatrix":
        return cls(tuple(tuple(entry(i, j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "SquareMatrix":
        return cls.from_function(n, lambda i, j: ZERO)

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls.from_function(n, lambda i, j: ONE if i == j else ZERO)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "SquareMatrix":
        """Matrix unit e_ij"""
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"({i}, {j}) outside a {n}x{n} matrix")
        return cls.from_function(n, lambda a, b: ONE if (a, b) == (i, j) else ZERO)

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "SquareMatrix":
        return cls.from_function(len(values), lambda i, j: values[i] if i == j else ZERO)

    # Access

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexOutOfRange(f"({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i][j]

    def to_lists(self) -> Rows:
        return [list(row) for row in self.rows]

    def map(self, f: Callable[[Any], Any]) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(f(entry) for entry in row) for row in self.rows))

    def value_at(self, tag: int) -> "SquareMatrix":
        """Strip one jet level from every entry"""
        return self.map(lambda entry: value_at(entry, tag))

    def partial_at(self, k: int, tag: int) -> "SquareMatrix":
        """Entrywise partial derivative k at the given jet tag"""
        return self.map(lambda entry: partial_at(entry, k, tag))

    # Arithmetic

    def _check(self, other: "SquareMatrix"):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        return SquareMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        return SquareMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "SquareMatrix":
        return self.map(lambda entry: -entry)

    def __mul__(self, scalar: Any) -> "SquareMatrix":
        if isinstance(scalar, SquareMatrix):
            return NotImplemented
        return self.map(lambda entry: entry * scalar)

    def __rmul__(self, scalar: Any) -> "SquareMatrix":
        return self.map(lambda entry: scalar * entry)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        return SquareMatrix.from_rows(matmul_rows(self.rows, other.rows))

    def power(self, k: int) -> "SquareMatrix":
        result = SquareMatrix.identity(self.n)
        for _ in range(k):
            result = result @ self
        return result

    def trace(self) -> Any:
        acc = ZERO
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def determinant(self) -> Any:
        return determinant_rows(self.rows)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix.from_function(self.n, lambda i, j: self.rows[j][i])

    def inverse(self) -> "SquareMatrix":
        return SquareMatrix.from_rows(invert_rows(self.rows))

    def is_zero(self) -> bool:
        return all(is_exact_zero(entry) for row in self.rows for entry in row)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'entries': [[GaussianRational.of(e).to_dict() for e in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SquareMatrix":
        try:
            n = int(data['n'])
            rows = [[GaussianRational.from_dict(e) for e in row] for row in data['entries']]
        except (KeyError, TypeError) as e:
            raise InvalidEncoding(f"malformed matrix: {e}") from e
        if len(rows) != n:
            raise InvalidEncoding(f"expected {n} rows, got {len(rows)}")
        return cls.from_rows(rows)
