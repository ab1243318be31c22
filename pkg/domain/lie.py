"""
Root data, weights and parabolic structure for type A
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from .enums import RepresentativeKind
from .errors import IndexOutOfRange, InvalidEncoding
from .matrix import SquareMatrix
from .scalar import GaussianRational


@dataclass(frozen=True, order=True)
class Root:
    """
    Root e_i - e_j of gl_n, written as the index pair (i, j), 0-based

    Positive roots have i < j; their root vector is the matrix unit e_ij.
    """
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or self.i < 0 or self.j < 0:
            raise ValueError(f"invalid root ({self.i}, {self.j})")

    @property
    def height(self) -> int:
        return abs(self.j - self.i)

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def negative(self) -> "Root":
        return Root(self.j, self.i)

    def vector(self, n: int) -> SquareMatrix:
        """Root vector e_ij"""
        return SquareMatrix.elementary(n, self.i, self.j)

    @property
    def key(self) -> str:
        return f"{self.i},{self.j}"

    @classmethod
    def from_key(cls, key: str) -> "Root":
        try:
            i, j = (int(part) for part in key.split(","))
        except ValueError as e:
            raise InvalidEncoding(f"malformed root key {key!r}") from e
        return cls(i, j)


@dataclass(frozen=True)
class WeightLambda:
    """
    Diagonal weight lambda = (lambda_1, ..., lambda_n)

    Attributes:
        values: Diagonal entries as exact scalars
    """
    values: Tuple[GaussianRational, ...]

    def __post_init__(self):
        values = tuple(GaussianRational.of(v) for v in self.values)
        if not values:
            raise ValueError("weight must have at least one entry")
        object.__setattr__(self, 'values', values)

    @classmethod
    def parse(cls, text: str) -> "WeightLambda":
        """Parse a comma-separated list such as "3,1/2,-1" """
        return cls(tuple(GaussianRational.parse(part) for part in text.split(",") if part.strip()))

    @property
    def n(self) -> int:
        return len(self.values)

    def is_constant(self) -> bool:
        return all(v == self.values[0] for v in self.values)

    def is_block_sorted(self) -> bool:
        seen = []
        for v in self.values:
            if seen and seen[-1] == v:
                continue
            if v in seen:
                return False
            seen.append(v)
        return True

    def block_sizes(self) -> Tuple[int, ...]:
        sizes: List[int] = []
        previous = None
        for k, v in enumerate(self.values):
            if k > 0 and v == previous:
                sizes[-1] += 1
            else:
                sizes.append(1)
            previous = v
        return tuple(sizes)

    def matrix(self) -> SquareMatrix:
        """lambda-check = diag(lambda)"""
        return SquareMatrix.diagonal(self.values)

    def scaled(self, c: Any) -> "WeightLambda":
        return WeightLambda(tuple(v * c for v in self.values))

    def to_list(self) -> List[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class WeylCoset:
    """
    Minimal-length representative of a coset in W / W_lambda

    Attributes:
        permutation: Images of 0..n-1; the representative sends e_k to +-e_permutation[k]
        representative: Monomial lift sigma-dot in GL_n
        index: Position in the atlas enumeration
        kind: How the lift was chosen
    """
    permutation: Tuple[int, ...]
    representative: SquareMatrix
    index: int = 0
    kind: RepresentativeKind = RepresentativeKind.PERMUTATION

    @property
    def inverse_representative(self) -> SquareMatrix:
        # monomial with entries +-1
        return self.representative.transpose()

    def is_identity(self) -> bool:
        return all(k == image for k, image in enumerate(self.permutation))

    def label(self) -> str:
        return "".join(str(k) for k in self.permutation)


@dataclass(frozen=True)
class ParabolicData:
    """
    Parabolic structure attached to a block-sorted weight

    Attributes:
        weight: The weight lambda
        block_sizes: Sizes of the blocks of equal entries
        delta_u: Roots of the block upper nilradical, sorted by (height, i, j)
    """
    weight: WeightLambda
    block_sizes: Tuple[int, ...]
    delta_u: Tuple[Root, ...]
    block_of: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.block_of:
            blocks: List[int] = []
            for b, size in enumerate(self.block_sizes):
                blocks.extend([b] * size)
            object.__setattr__(self, 'block_of', tuple(blocks))

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def dim(self) -> int:
        """Complex dimension of G/Q"""
        return len(self.delta_u)

    def block_bounds(self) -> List[Tuple[int, int]]:
        bounds = []
        start = 0
        for size in self.block_sizes:
            bounds.append((start, start + size))
            start += size
        return bounds

    def index_of(self, root: Root) -> int:
        try:
            return self.delta_u.index(root)
        except ValueError as e:
            raise IndexOutOfRange(f"root {root.key} not in the nilradical") from e

    def in_nilradical(self, i: int, j: int) -> bool:
        return self.block_of[i] < self.block_of[j]

    def lambda_at(self, k: int) -> GaussianRational:
        return self.weight.values[k]

    def to_dict(self, atlas: Sequence[WeylCoset] = ()) -> Dict[str, Any]:
        """
        Flag geometry as JSON

        Args:
            atlas: Chart labels to list under "cosets", in atlas order

        Returns:
            {"lambda", "blocks", "delta_u": [[i, j], ...], "cosets": [[perm], ...]}
        """
        return {
            'lambda': self.weight.to_list(),
            'blocks': list(self.block_sizes),
            'delta_u': [[root.i, root.j] for root in self.delta_u],
            'cosets': [list(coset.permutation) for coset in atlas],
        }


@dataclass(frozen=True)
class UULFactorization:
    """
    Factorization g = u * u_minus * t

    Attributes:
        u: Block upper unipotent factor
        u_minus: Block lower unipotent factor
        t: Block diagonal factor
    """
    u: SquareMatrix
    u_minus: SquareMatrix
    t: SquareMatrix

    def product(self) -> SquareMatrix:
        return self.u @ self.u_minus @ self.t


def coordinates_from_dict(parabolic: ParabolicData, data: Dict[str, Any]) -> Tuple[GaussianRational, ...]:
    """Read a root-keyed coordinate map, defaulting missing roots to zero"""
    values = [GaussianRational(0)] * parabolic.dim
    for key, raw in data.items():
        root = Root.from_key(key)
        value = GaussianRational.from_dict(raw) if isinstance(raw, dict) else GaussianRational.of(raw)
        values[parabolic.index_of(root)] = value
    return tuple(values)


def coordinates_to_dict(parabolic: ParabolicData, values: Sequence[Any]) -> Dict[str, Any]:
    return {root.key: GaussianRational.of(v).to_dict() for root, v in zip(parabolic.delta_u, values)}
