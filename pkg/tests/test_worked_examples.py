"""
Tests for the worked examples and their closed forms
"""
import pytest

from application.sampler import Sampler
from application.worked_examples import (
    SL2_S, build_example_checks, grassmannian_mu_at_origin, grassmannian_weight, sl2_mobius,
    sl2_transition_formula, sl2_weight,
)
from domain.chart import ChartPoint
from domain.enums import CheckStatus, RepresentativeKind, WorkedExample
from domain.matrix import SquareMatrix
from domain.scalar import ZERO
from infrastructure.flag.parabolic import build_parabolic, weyl_cosets
from infrastructure.twisted.affine_action import transition
from infrastructure.twisted.key_relation import solve_w
from tests.conftest import gr


class TestClosedForms:

    def test_sl2_weight(self):
        assert sl2_weight(gr(3)).values == (gr("3/2"), gr("-3/2"))

    def test_sl2_transition(self):
        weight = sl2_weight(SL2_S)
        parabolic = build_parabolic(weight)
        identity, sigma = weyl_cosets(parabolic, RepresentativeKind.TITS)
        z, xi = gr(-2), gr("5/3")
        w = -xi / SL2_S
        z_sigma, w_sigma, xi_sigma = sl2_transition_formula(SL2_S, z, w, xi)
        moved = transition(weight, parabolic, ChartPoint(sigma=identity, z=(z,), xi=(xi,)), sigma)
        assert moved.z == (z_sigma,) and moved.xi == (xi_sigma,)
        assert solve_w(weight, parabolic, sigma, moved.z, moved.xi).w == (w_sigma,)
        assert w_sigma == z + z * z * w

    def test_sl2_mobius_identity(self):
        z, xi = gr("1/4"), gr(6)
        assert sl2_mobius(SL2_S, SquareMatrix.identity(2), z, xi) == (z, xi)

    @pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (2, 2)])
    def test_grassmannian_weight(self, p, q):
        weight = grassmannian_weight(p, q)
        assert weight.values[0] - weight.values[-1] == p + q
        assert build_parabolic(weight).block_sizes == (p, q)

    def test_grassmannian_origin(self):
        parabolic = build_parabolic(grassmannian_weight(1, 1))
        assert grassmannian_mu_at_origin(1, 1, parabolic, [gr(5)]) == SquareMatrix.from_rows(
            [[gr(1), ZERO], [gr(-5), gr(-1)]])


class TestExampleChecks:

    @pytest.mark.parametrize("case", list(WorkedExample))
    def test_all_samples_pass(self, case):
        checks = build_example_checks(case, Sampler(seed=3))
        assert checks
        for check in checks:
            for sample in range(3):
                result = check.run(sample)
                assert result.status == CheckStatus.PASSED, (check.name, sample, result.detail)

    def test_first_sample_is_a_fixture(self):
        check = build_example_checks(WorkedExample.SL2, Sampler(seed=0))[0]
        assert check.name == "sl2.mu_formula"
        assert "mu" in check.run(0).detail
        assert check.run(1).detail is None

    def test_check_names(self):
        names = [c.name for c in build_example_checks(WorkedExample.GRASSMANNIAN, Sampler())]
        assert "grassmannian(2,1).log_det" in names
        assert len(names) == 12
