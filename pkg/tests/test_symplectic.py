"""
Tests for the chart and orbit symplectic forms and the pullback identity
"""
import pytest

from application.worked_examples import sl2_weight
from domain.chart import ChartPoint, ChartTangent, OrbitTangent
from domain.enums import RepresentativeKind
from domain.errors import DimensionMismatch, NotTangent
from domain.matrix import SquareMatrix
from domain.scalar import ONE, ZERO
from infrastructure.flag.parabolic import build_parabolic, weyl_cosets
from infrastructure.lie.algebra import bracket, coadjoint
from infrastructure.symplectic.classical import classical_moment, hermitian_relations, vector_field_chart
from infrastructure.symplectic.forms import (
    omega_chart, omega_orbit, omega_orbit_from_generators, omega_orbit_invariance, solve_generator,
)
from infrastructure.symplectic.pushforward import jacobian_mu, pushforward_mu, verify_pullback
from infrastructure.twisted.moment_map import mu_local
from tests.conftest import CONFIGURATIONS, gr, make_configuration


def e(n, i, j):
    return SquareMatrix.elementary(n, i, j)


def tangent(dz, dxi):
    return ChartTangent(tuple(gr(v) for v in dz), tuple(gr(v) for v in dxi))


class TestOmegaChart:

    def test_canonical_pairing(self):
        assert omega_chart(ChartTangent.basis(1, 3), ChartTangent.basis(4, 3)) == 1
        assert omega_chart(ChartTangent.basis(4, 3), ChartTangent.basis(1, 3)) == -1

    def test_antisymmetric(self):
        t = tangent(["1/2", 3], [-1, "2i"])
        assert omega_chart(t, t) == 0

    def test_lagrangian_planes(self):
        assert omega_chart(ChartTangent.basis(0, 2), ChartTangent.basis(1, 2)) == 0
        assert omega_chart(ChartTangent.basis(2, 2), ChartTangent.basis(3, 2)) == 0

    def test_bilinear(self):
        t1, t2 = tangent([1, 2], [3, 4]), tangent([5, 6], [7, 8])
        assert omega_chart(t1, t2) == (1 * 7 - 5 * 3) + (2 * 8 - 6 * 4)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            omega_chart(ChartTangent.basis(0, 1), ChartTangent.basis(0, 2))


class TestSolveGenerator:

    def test_zero_tangent(self, gl3):
        x = solve_generator(gl3.weight.matrix(), SquareMatrix.zeros(3))
        assert x.is_zero()

    @pytest.mark.parametrize("i,j", [(0, 1), (2, 0), (1, 2)])
    def test_root_vector(self, gl3, i, j):
        lam = gl3.weight.values
        v = e(3, i, j) * (lam[i] - lam[j])
        assert solve_generator(gl3.weight.matrix(), v) == e(3, i, j)
        assert -bracket(e(3, i, j), gl3.weight.matrix()) == v

    @pytest.mark.parametrize("index", range(3))
    def test_recovers_generator(self, configuration, sampler, index):
        stream = sampler.stream("generator", index)
        point = stream.chart_point(configuration.parabolic, stream.choice(configuration.atlas))
        f = mu_local(configuration.weight, configuration.parabolic, point)
        x0 = stream.matrix(configuration.parabolic.n)
        v = -bracket(x0, f.F)
        x = solve_generator(f, OrbitTangent(v))
        assert -bracket(x, f.F) == v

    def test_not_tangent(self, gl3):
        with pytest.raises(NotTangent):
            solve_generator(gl3.weight.matrix(), e(3, 0, 0))


class TestOmegaOrbit:

    def test_equal_vectors(self, gl3):
        v = -bracket(e(3, 0, 2), gl3.weight.matrix())
        assert omega_orbit(gl3.weight.matrix(), v, v) == 0

    def test_gl2_root_pair(self, gl2):
        f = gl2.weight.matrix()
        lam = gl2.weight.values
        v1, v2 = -bracket(e(2, 0, 1), f), -bracket(e(2, 1, 0), f)
        assert omega_orbit(f, v1, v2) == -(lam[0] - lam[1])

    def test_centralizer_shift(self, gl3, sampler):
        stream = sampler.stream("centralizer", 0)
        f = gl3.weight.matrix()
        x1, x2 = stream.matrix(3), stream.matrix(3)
        shift = SquareMatrix.diagonal(stream.vector(3))
        assert omega_orbit_from_generators(f, x1 + shift, x2) == omega_orbit_from_generators(f, x1, x2)

    def test_invariance(self, gl4_121, sampler):
        stream = sampler.stream("invariance", 0)
        point = stream.chart_point(gl4_121.parabolic, gl4_121.atlas[0])
        f = mu_local(gl4_121.weight, gl4_121.parabolic, point)
        v1 = -bracket(stream.matrix(4), f.F)
        v2 = -bracket(stream.matrix(4), f.F)
        assert omega_orbit_invariance(f, v1, v2, stream.invertible_matrix(4))


class TestPushforward:

    def test_zero_tangent(self, gl3, sampler):
        point = sampler.stream("push", 0).chart_point(gl3.parabolic, gl3.atlas[0])
        assert pushforward_mu(gl3.weight, gl3.parabolic, point, tangent([0] * 3, [0] * 3)).V.is_zero()

    @pytest.mark.parametrize("s", ["2", "3", "1/2"])
    def test_sl2_fibre_direction(self, s):
        weight = sl2_weight(gr(s))
        parabolic = build_parabolic(weight)
        atlas = weyl_cosets(parabolic, RepresentativeKind.TITS)
        point = ChartPoint(sigma=atlas[0], z=(ZERO,), xi=(gr(7),))
        image = pushforward_mu(weight, parabolic, point, ChartTangent.basis(1, 1))
        assert image.V == -e(2, 1, 0)

    def test_linear(self, gl4_22, sampler):
        stream = sampler.stream("push_linear", 0)
        point = stream.chart_point(gl4_22.parabolic, gl4_22.atlas[2])
        d = gl4_22.parabolic.dim
        t1 = ChartTangent(tuple(stream.vector(d)), tuple(stream.vector(d)))
        t2 = ChartTangent(tuple(stream.vector(d)), tuple(stream.vector(d)))
        c = stream.nonzero_scalar()
        combined = ChartTangent(tuple(a * c + b for a, b in zip(t1.dz, t2.dz)),
                                tuple(a * c + b for a, b in zip(t1.dxi, t2.dxi)))
        v1 = pushforward_mu(gl4_22.weight, gl4_22.parabolic, point, t1).V
        v2 = pushforward_mu(gl4_22.weight, gl4_22.parabolic, point, t2).V
        assert pushforward_mu(gl4_22.weight, gl4_22.parabolic, point, combined).V == v1 * c + v2

    def test_tangent_to_orbit(self, gl3, sampler):
        point = sampler.stream("push_tangent", 0).chart_point(gl3.parabolic, gl3.atlas[3])
        f = mu_local(gl3.weight, gl3.parabolic, point)
        for partial in jacobian_mu(gl3.weight, gl3.parabolic, point):
            x = solve_generator(f, partial)
            assert -bracket(x, f.F) == partial

    def test_wrong_tangent_size(self, gl3, sampler):
        point = sampler.stream("push", 1).chart_point(gl3.parabolic, gl3.atlas[0])
        with pytest.raises(DimensionMismatch):
            pushforward_mu(gl3.weight, gl3.parabolic, point, ChartTangent.basis(0, 2))


class TestVerifyPullback:

    def test_sl2(self, sampler):
        weight = sl2_weight(gr(3))
        parabolic = build_parabolic(weight)
        atlas = weyl_cosets(parabolic, RepresentativeKind.TITS)
        for sigma in atlas:
            point = sampler.stream("sl2", sigma.index).chart_point(parabolic, sigma)
            report = verify_pullback(weight, parabolic, point)
            assert report.pairs_checked == 1
            assert report.passed

    def test_gl3_all_pairs(self, gl3, sampler):
        point = sampler.stream("gl3", 0).chart_point(gl3.parabolic, gl3.atlas[4])
        report = verify_pullback(gl3.weight, gl3.parabolic, point)
        assert report.pairs_checked == 15
        assert report.failures == []

    def test_base_point(self, configuration):
        d = configuration.parabolic.dim
        point = ChartPoint(sigma=configuration.atlas[0], z=(ZERO,) * d, xi=(ZERO,) * d)
        assert verify_pullback(configuration.weight, configuration.parabolic, point).passed

    @pytest.mark.parametrize("index", range(2))
    def test_random_charts(self, configuration, sampler, index):
        stream = sampler.stream("pullback", index)
        point = stream.chart_point(configuration.parabolic, stream.choice(configuration.atlas))
        report = verify_pullback(configuration.weight, configuration.parabolic, point)
        assert report.pairs_checked == configuration.parabolic.dim * (2 * configuration.parabolic.dim - 1)
        assert report.passed


class TestClassicalMoment:

    def test_zero_covector(self, gl3, sampler):
        z = sampler.stream("classical", 0).vector(3)
        point = ChartPoint(sigma=gl3.atlas[0], z=tuple(z), xi=(ZERO,) * 3)
        assert classical_moment(gl3.parabolic, point).is_zero()

    def test_vector_field_of_nilradical(self, gl3):
        # exp(-t e_12) moves z^{12} with unit speed in the negative direction at the origin
        field = vector_field_chart(e(3, 0, 1), gl3.parabolic, [ZERO] * 3)
        assert field == (-ONE, ZERO, ZERO)

    def test_vector_field_of_levi(self, gl2):
        z = gr("3/4")
        lam = SquareMatrix.diagonal([ONE, ZERO])
        # diag(e^-t, 1) . z = e^-t z
        assert vector_field_chart(lam, gl2.parabolic, [z]) == (-z,)

    def test_pairing(self, gl4_22, sampler):
        point = sampler.stream("classical", 1).chart_point(gl4_22.parabolic, gl4_22.atlas[0])
        m = classical_moment(gl4_22.parabolic, point)
        x = e(4, 3, 1)
        field = vector_field_chart(x, gl4_22.parabolic, point.z)
        expected = sum((a * b for a, b in zip(point.xi, field)), ZERO)
        assert (m @ x).trace() == expected


class TestHermitianRelations:

    @pytest.mark.parametrize("name", ["gl2", "gl4_22", "gl5_23"])
    def test_two_block_relations(self, name, sampler):
        config = make_configuration(name, CONFIGURATIONS[name])
        point = sampler.stream("hermitian", 0).chart_point(config.parabolic, config.atlas[0])
        relations = hermitian_relations(config.weight, config.parabolic, point)
        assert relations == {'translation': True, 'classical': True}

    def test_origin_moment(self, gl4_22, sampler):
        point = sampler.stream("hermitian", 1).chart_point(gl4_22.parabolic, gl4_22.atlas[0])
        mu = mu_local(gl4_22.weight, gl4_22.parabolic, point).F
        shifted = coadjoint(mu_local(gl4_22.weight, gl4_22.parabolic,
                                     ChartPoint(sigma=point.sigma, z=point.z, xi=(ZERO,) * 4)).witness,
                            gl4_22.weight.matrix())
        assert mu - shifted == classical_moment(gl4_22.parabolic, point)
