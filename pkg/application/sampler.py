"""
Seeded sampling of exact rationals, chart points and group elements
"""
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from domain.chart import ChartPoint
from domain.errors import OutsideBigCell, SingularMatrix
from domain.lie import ParabolicData, WeylCoset
from domain.matrix import SquareMatrix
from domain.scalar import GaussianRational
from infrastructure.flag.factorization import factor_uul


class Sampler:
    """
    Deterministic source of random exact data

    Every draw derives its own generator from (seed, stream, index), so the
    data of a sample does not depend on which thread runs it or in what order.

    Attributes:
        seed: Run seed
        max_numerator: Bound on |numerator|
        max_denominator: Bound on denominators
        complex_sampling: Draw Gaussian rationals
    """

    def __init__(self, seed: int = 0, max_numerator: int = 20, max_denominator: int = 10,
                 complex_sampling: bool = False):
        self.seed = seed
        self.max_numerator = max_numerator
        self.max_denominator = max_denominator
        self.complex_sampling = complex_sampling

    def stream(self, name: str, index: int, attempt: int = 0) -> "SampleStream":
        """
        Generator for one sample of one check
        Args:
            name: Check name
            index: Sample index
            attempt: Redraw counter for out-of-chart samples
        Returns:
            SampleStream
        """
        rng = random.Random(f"{self.seed}/{name}/{index}/{attempt}")
        return SampleStream(rng, self)


class SampleStream:
    """Random draws backed by one seeded generator"""

    def __init__(self, rng: random.Random, sampler: Sampler):
        self.rng = rng
        self.sampler = sampler

    def rational(self) -> Fraction:
        num = self.rng.randint(-self.sampler.max_numerator, self.sampler.max_numerator)
        den = self.rng.randint(1, self.sampler.max_denominator)
        return Fraction(num, den)

    def scalar(self) -> GaussianRational:
        if self.sampler.complex_sampling:
            return GaussianRational(self.rational(), self.rational())
        return GaussianRational(self.rational())

    def nonzero_scalar(self) -> GaussianRational:
        while True:
            value = self.scalar()
            if not value.is_zero():
                return value

    def vector(self, size: int) -> List[GaussianRational]:
        return [self.scalar() for _ in range(size)]

    def choice(self, items: Sequence):
        return items[self.rng.randrange(len(items))]

    def chart_point(self, parabolic: ParabolicData, sigma: WeylCoset) -> ChartPoint:
        return ChartPoint(sigma=sigma, z=tuple(self.vector(parabolic.dim)),
                          xi=tuple(self.vector(parabolic.dim)))

    def matrix(self, n: int) -> SquareMatrix:
        return SquareMatrix.from_function(n, lambda i, j: self.scalar())

    def invertible_matrix(self, n: int) -> SquareMatrix:
        while True:
            g = self.matrix(n)
            try:
                g.inverse()
                return g
            except SingularMatrix:
                continue

    def big_cell_matrix(self, parabolic: ParabolicData, unimodular: bool = False) -> SquareMatrix:
        """
        Invertible matrix admitting the factorization u * u_minus * t

        Args:
            parabolic: Parabolic data
            unimodular: Rescale the first column so that det g = 1
        """
        while True:
            g = self.invertible_matrix(parabolic.n)
            if unimodular:
                g = self._unimodular(g)
                if g is None:
                    continue
            try:
                factor_uul(g, parabolic)
                return g
            except OutsideBigCell:
                continue

    @staticmethod
    def _unimodular(g: SquareMatrix) -> Optional[SquareMatrix]:
        # divide the first column by det g
        det = g.determinant()
        if det.is_zero():
            return None
        rows = g.to_lists()
        for row in rows:
            row[0] = row[0] / det
        return SquareMatrix.from_rows(rows)

