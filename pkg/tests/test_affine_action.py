"""
Tests for the affine action, the cocycle identity and chart transitions
"""
import pytest

from application.worked_examples import sl2_mobius, sl2_weight
from domain.chart import ChartPoint
from domain.enums import RepresentativeKind
from domain.errors import OutsideChart, OutsideOverlap
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO
from infrastructure.flag.parabolic import build_parabolic, weyl_cosets
from infrastructure.lie.algebra import coadjoint
from infrastructure.twisted.affine_action import psi_affine, psi_cocycle_check, psi_global, transition
from infrastructure.twisted.moment_map import mu_global
from tests.conftest import gr

SL2_S = gr(3)


@pytest.fixture
def sl2():
    weight = sl2_weight(SL2_S)
    parabolic = build_parabolic(weight)
    return weight, parabolic, weyl_cosets(parabolic, RepresentativeKind.TITS)


def retry_in_chart(evaluate, attempts=10):
    """Evaluate on fresh draws until every image stays in its chart"""
    for attempt in range(attempts):
        try:
            return evaluate(attempt)
        except OutsideChart:
            continue
    pytest.fail("no in-chart draw found")


def upper_unipotent(stream, n):
    return SquareMatrix.from_function(n, lambda i, j: ONE if i == j else (stream.scalar() if i < j else ZERO))


class TestPsiAffine:

    def test_identity_acts_trivially(self, configuration, sampler):
        point = sampler.stream("identity", 0).chart_point(configuration.parabolic, configuration.atlas[0])
        identity = SquareMatrix.identity(configuration.parabolic.n)
        assert psi_affine(configuration.weight, configuration.parabolic, identity, point) == point

    @pytest.mark.parametrize("g,z,xi", [
        ([[2, 1], [3, 2]], "1/2", "5"),
        ([[1, 0], [-4, 1]], "-3", "2/7"),
        ([["1/2", 3], [0, 2]], "1", "-1"),
        ([[0, -1], [1, 5]], "2/3", "1+i"),
    ])
    def test_sl2_mobius(self, sl2, g, z, xi):
        weight, parabolic, atlas = sl2
        g = SquareMatrix.from_rows([[gr(e) for e in row] for row in g])
        point = ChartPoint(sigma=atlas[0], z=(gr(z),), xi=(gr(xi),))
        image = psi_affine(weight, parabolic, g, point)
        z_new, xi_new = sl2_mobius(SL2_S, g, gr(z), gr(xi))
        assert image.z == (z_new,)
        assert image.xi == (xi_new,)

    def test_leaves_chart(self, sl2):
        weight, parabolic, atlas = sl2
        g = SquareMatrix.from_rows([[gr(1), gr(0)], [gr(-1), gr(1)]])
        point = ChartPoint(sigma=atlas[0], z=(gr(1),), xi=(gr(2),))
        with pytest.raises(OutsideChart):
            psi_affine(weight, parabolic, g, point)

    def test_parabolic_elements_keep_chart(self, gl4_121, sampler):
        stream = sampler.stream("parabolic", 0)
        point = stream.chart_point(gl4_121.parabolic, gl4_121.atlas[0])
        g = upper_unipotent(stream, 4) @ SquareMatrix.diagonal([gr(2), gr(-1), gr("1/3"), gr(5)])
        image = psi_affine(gl4_121.weight, gl4_121.parabolic, g, point)
        assert image.sigma == gl4_121.atlas[0]


class TestCocycle:

    def test_inverse_pair(self, configuration, sampler):
        def evaluate(attempt):
            stream = sampler.stream("inverse_pair", 0, attempt)
            point = stream.chart_point(configuration.parabolic, stream.choice(configuration.atlas))
            g = stream.invertible_matrix(configuration.parabolic.n)
            back = psi_affine(configuration.weight, configuration.parabolic, g.inverse(),
                              psi_affine(configuration.weight, configuration.parabolic, g, point))
            return back == point and psi_cocycle_check(configuration.weight, configuration.parabolic,
                                                       g.inverse(), g, point)
        assert retry_in_chart(evaluate)

    @pytest.mark.parametrize("index", range(3))
    def test_upper_unipotent(self, configuration, sampler, index):
        stream = sampler.stream("unipotent", index)
        n = configuration.parabolic.n
        point = stream.chart_point(configuration.parabolic, configuration.atlas[0])
        g, h = upper_unipotent(stream, n), upper_unipotent(stream, n)
        assert psi_cocycle_check(configuration.weight, configuration.parabolic, g, h, point)

    @pytest.mark.parametrize("index", range(3))
    def test_generic(self, configuration, sampler, index):
        def evaluate(attempt):
            stream = sampler.stream("generic", index, attempt)
            point = stream.chart_point(configuration.parabolic, stream.choice(configuration.atlas))
            n = configuration.parabolic.n
            g, h = stream.invertible_matrix(n), stream.invertible_matrix(n)
            middle = stream.choice(configuration.atlas)
            return psi_cocycle_check(configuration.weight, configuration.parabolic, g, h, point, middle=middle)
        assert retry_in_chart(evaluate)

    def test_sl2_mobius_composition(self, sl2):
        weight, parabolic, atlas = sl2
        g = SquareMatrix.from_rows([[gr(2), gr(1)], [gr(1), gr(1)]])
        h = SquareMatrix.from_rows([[gr(1), gr(-2)], [gr(3), gr(-5)]])
        point = ChartPoint(sigma=atlas[0], z=(gr("1/3"),), xi=(gr(4),))
        assert psi_cocycle_check(weight, parabolic, g, h, point)


class TestTransition:

    def test_same_chart(self, configuration, sampler):
        point = sampler.stream("same", 0).chart_point(configuration.parabolic, configuration.atlas[-1])
        assert transition(configuration.weight, configuration.parabolic, point, point.sigma) == point

    def test_sl2_swap(self, sl2):
        weight, parabolic, atlas = sl2
        z, xi = gr("2/3"), gr(-5)
        moved = transition(weight, parabolic, ChartPoint(sigma=atlas[0], z=(z,), xi=(xi,)), atlas[1])
        assert moved.z == (-1 / z,)
        assert moved.xi == (z * z * xi - SL2_S * z,)

    def test_outside_overlap(self, sl2):
        weight, parabolic, atlas = sl2
        with pytest.raises(OutsideOverlap):
            transition(weight, parabolic, ChartPoint(sigma=atlas[0], z=(ZERO,), xi=(ONE,)), atlas[1])

    @pytest.mark.parametrize("index", range(2))
    def test_involutive(self, configuration, sampler, index):
        stream = sampler.stream("involutive", index)
        point = stream.chart_point(configuration.parabolic, configuration.atlas[0])
        for tau in configuration.atlas:
            try:
                moved = transition(configuration.weight, configuration.parabolic, point, tau)
            except OutsideOverlap:
                continue
            assert transition(configuration.weight, configuration.parabolic, moved, point.sigma) == point

    def test_gl3_composition(self, gl3, sampler):
        point = sampler.stream("composition", 0).chart_point(gl3.parabolic, gl3.atlas[0])
        checked = 0
        for sigma in gl3.atlas:
            for tau in gl3.atlas:
                try:
                    via = transition(gl3.weight, gl3.parabolic,
                                     transition(gl3.weight, gl3.parabolic, point, sigma), tau)
                    direct = transition(gl3.weight, gl3.parabolic, point, tau)
                except OutsideOverlap:
                    continue
                assert via == direct
                checked += 1
        assert checked > 0


class TestEquivariance:

    @pytest.mark.parametrize("index", range(3))
    def test_mu_intertwines_actions(self, configuration, sampler, index):
        stream = sampler.stream("equivariance", index)
        point = stream.chart_point(configuration.parabolic, stream.choice(configuration.atlas))
        g = stream.invertible_matrix(configuration.parabolic.n)
        moved = psi_global(configuration.weight, configuration.parabolic, configuration.atlas, g, point)
        lhs = mu_global(configuration.weight, configuration.parabolic, configuration.atlas, moved)
        rhs = coadjoint(g, mu_global(configuration.weight, configuration.parabolic, configuration.atlas, point))
        assert lhs.F == rhs.F
        assert moved.sigma in configuration.atlas

    def test_tits_atlas(self, tits_configuration, sampler):
        config = tits_configuration
        stream = sampler.stream("tits", 0)
        point = stream.chart_point(config.parabolic, config.atlas[-1])
        g = stream.invertible_matrix(config.parabolic.n)
        moved = psi_global(config.weight, config.parabolic, config.atlas, g, point)
        assert mu_global(config.weight, config.parabolic, config.atlas, moved).F == coadjoint(
            g, mu_global(config.weight, config.parabolic, config.atlas, point).F)
