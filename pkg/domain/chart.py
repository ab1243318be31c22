"""
Points and tangent vectors on chart cotangent bundles and on the orbit
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from .errors import DimensionMismatch, IndexOutOfRange, InvalidEncoding
from .lie import ParabolicData, WeylCoset, coordinates_from_dict, coordinates_to_dict
from .matrix import SquareMatrix
from .scalar import ONE, ZERO, GaussianRational


@dataclass(frozen=True)
class ChartPoint:
    """
    Point (z, xi) of the cotangent bundle over the chart at sigma

    Attributes:
        sigma: Chart label
        z: Base coordinates, one per root of the nilradical
        xi: Fibre coordinates, dual to dz
    """
    sigma: WeylCoset
    z: Tuple[GaussianRational, ...]
    xi: Tuple[GaussianRational, ...]

    def __post_init__(self):
        z = tuple(GaussianRational.of(v) for v in self.z)
        xi = tuple(GaussianRational.of(v) for v in self.xi)
        if len(z) != len(xi):
            raise DimensionMismatch(f"z has {len(z)} coordinates, xi has {len(xi)}")
        object.__setattr__(self, 'z', z)
        object.__setattr__(self, 'xi', xi)

    @property
    def dim(self) -> int:
        return len(self.z)

    def to_dict(self, parabolic: ParabolicData) -> Dict[str, Any]:
        return {
            'sigma': list(self.sigma.permutation),
            'z': coordinates_to_dict(parabolic, self.z),
            'xi': coordinates_to_dict(parabolic, self.xi),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], parabolic: ParabolicData,
                  atlas: Sequence[WeylCoset]) -> "ChartPoint":
        """
        Create from the JSON encoding

        Args:
            data: Object with sigma, z and xi
            parabolic: Parabolic data fixing the coordinate order
            atlas: Cosets to resolve sigma against

        Returns:
            ChartPoint
        """
        try:
            permutation = tuple(int(k) for k in data.get('sigma', range(parabolic.n)))
            sigma = next(c for c in atlas if c.permutation == permutation)
        except StopIteration as e:
            raise InvalidEncoding(f"sigma {data.get('sigma')} is not an atlas coset") from e
        except (TypeError, ValueError) as e:
            raise InvalidEncoding(f"malformed sigma: {e}") from e
        return cls(sigma=sigma,
                   z=coordinates_from_dict(parabolic, data.get('z', {})),
                   xi=coordinates_from_dict(parabolic, data.get('xi', {})))


@dataclass(frozen=True)
class WCoordinates:
    """Coordinates of u_minus = exp(sum w_alpha E_-alpha)"""
    w: Tuple[Any, ...]

    def to_dict(self, parabolic: ParabolicData) -> Dict[str, Any]:
        return coordinates_to_dict(parabolic, self.w)


@dataclass(frozen=True)
class OrbitPoint:
    """
    Element F of the coadjoint orbit through lambda

    Attributes:
        F: The matrix
        witness: Optional g with F = Ad(g) lambda
    """
    F: SquareMatrix
    witness: Optional[SquareMatrix] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {'F': self.F.to_dict()}
        if self.witness is not None:
            result['witness'] = self.witness.to_dict()
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OrbitPoint":
        try:
            F = SquareMatrix.from_dict(data['F'])
            witness = data.get('witness')
        except (KeyError, TypeError, AttributeError) as e:
            raise InvalidEncoding(f"malformed orbit point: {e}") from e
        witness_matrix = SquareMatrix.from_dict(witness) if witness else None
        if witness_matrix is not None and witness_matrix.n != F.n:
            raise InvalidEncoding(f"witness is {witness_matrix.n}x{witness_matrix.n}, F is {F.n}x{F.n}")
        return cls(F=F, witness=witness_matrix)


@dataclass(frozen=True)
class ChartTangent:
    """Tangent vector (dz, dxi) at a chart point"""
    dz: Tuple[Any, ...]
    dxi: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.dz) != len(self.dxi):
            raise DimensionMismatch("dz and dxi must have equal length")

    @classmethod
    def basis(cls, k: int, dim: int) -> "ChartTangent":
        """k-th vector of the basis (e_z^0, ..., e_z^{d-1}, e_xi_0, ..., e_xi_{d-1})"""
        if not 0 <= k < 2 * dim:
            raise IndexOutOfRange(f"basis index {k} outside 0..{2 * dim - 1}")
        vector = [ONE if m == k else ZERO for m in range(2 * dim)]
        return cls(tuple(vector[:dim]), tuple(vector[dim:]))

    def as_vector(self) -> Tuple[Any, ...]:
        return tuple(self.dz) + tuple(self.dxi)


@dataclass(frozen=True)
class OrbitTangent:
    """Tangent vector V to the orbit at F"""
    V: SquareMatrix
