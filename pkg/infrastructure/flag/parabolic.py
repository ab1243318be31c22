"""
Parabolic data and Weyl coset atlases from a weight
"""
import logging
from itertools import permutations
from typing import List, Sequence, Tuple, Union

from domain.enums import RepresentativeKind
from domain.errors import ConstantLambda, NotBlockSorted
from domain.lie import ParabolicData, Root, WeightLambda, WeylCoset
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO, GaussianRational

logger = logging.getLogger(__name__)


def build_parabolic(weight: WeightLambda) -> ParabolicData:
    """
    Block sizes and nilradical roots of the isotropy parabolic of lambda

    Args:
        weight: Block-sorted, non-constant weight

    Returns:
        ParabolicData with delta_u sorted by (height, i, j)

    Raises:
        ConstantLambda: if all entries are equal
        NotBlockSorted: if equal entries are not contiguous
    """
    if weight.is_constant():
        raise ConstantLambda("weight has all entries equal")
    if not weight.is_block_sorted():
        raise NotBlockSorted(f"equal entries of {weight.to_list()} are not contiguous")
    sizes = weight.block_sizes()
    block_of: List[int] = []
    for b, size in enumerate(sizes):
        block_of.extend([b] * size)
    roots = [Root(i, j) for i in range(weight.n) for j in range(i + 1, weight.n)
             if block_of[i] < block_of[j]]
    roots.sort(key=lambda r: (r.height, r.i, r.j))
    parabolic = ParabolicData(weight=weight, block_sizes=sizes, delta_u=tuple(roots),
                              block_of=tuple(block_of))
    logger.debug(f"Parabolic data: blocks {sizes}, dim {parabolic.dim}")
    return parabolic


def sort_lambda(values: Sequence[Union[GaussianRational, int, str]]) -> Tuple[WeightLambda, Tuple[int, ...]]:
    """
    Bring equal entries together, keeping first-occurrence order

    Args:
        values: Weight entries in any order

    Returns:
        Block-sorted weight and the permutation p with sorted[k] = values[p[k]]
    """
    scalars = [GaussianRational.of(v) for v in values]
    distinct: List[GaussianRational] = []
    for v in scalars:
        if v not in distinct:
            distinct.append(v)
    order = [k for value in distinct for k, v in enumerate(scalars) if v == value]
    return WeightLambda(tuple(scalars[k] for k in order)), tuple(order)


def reduced_word(permutation: Sequence[int]) -> List[int]:
    """
    Reduced word (a_1, ..., a_m) with P = S_a1 ... S_am for the permutation matrix P

    S_a is the adjacent transposition of a and a + 1.
    """
    arr = list(permutation)
    word: List[int] = []
    while True:
        descent = next((k for k in range(len(arr) - 1) if arr[k] > arr[k + 1]), None)
        if descent is None:
            return word
        arr[descent], arr[descent + 1] = arr[descent + 1], arr[descent]
        word.insert(0, descent)


def permutation_matrix(permutation: Sequence[int]) -> SquareMatrix:
    """Matrix sending e_k to e_permutation[k]"""
    n = len(permutation)
    return SquareMatrix.from_function(n, lambda i, j: ONE if permutation[j] == i else ZERO)


def tits_lift(permutation: Sequence[int]) -> SquareMatrix:
    """Product of the lifts [[0, 1], [-1, 0]] of simple reflections along a reduced word"""
    n = len(permutation)
    result = SquareMatrix.identity(n)
    for a in reduced_word(permutation):
        def simple(i: int, j: int, a: int = a) -> GaussianRational:
            if (i, j) == (a, a + 1):
                return ONE
            if (i, j) == (a + 1, a):
                return -ONE
            if i == j and i not in (a, a + 1):
                return ONE
            return ZERO
        result = result @ SquareMatrix.from_function(n, simple)
    return result


def weyl_cosets(parabolic: ParabolicData,
                kind: RepresentativeKind = RepresentativeKind.PERMUTATION) -> List[WeylCoset]:
    """
    Minimal-length representatives of W / W_lambda, one chart each

    A permutation is minimal in its coset when it is increasing on every block.

    Args:
        parabolic: Parabolic data
        kind: Lift of representatives to GL_n

    Returns:
        Cosets in lexicographic order of permutations; the identity comes first
    """
    bounds = parabolic.block_bounds()
    cosets = []
    for perm in permutations(range(parabolic.n)):
        if any(perm[k] > perm[k + 1] for start, end in bounds for k in range(start, end - 1)):
            continue
        if kind == RepresentativeKind.TITS:
            representative = tits_lift(perm)
        else:
            representative = permutation_matrix(perm)
        cosets.append(WeylCoset(permutation=perm, representative=representative,
                                index=len(cosets), kind=kind))
    logger.debug(f"Atlas with {len(cosets)} charts ({kind.value} representatives)")
    return cosets
