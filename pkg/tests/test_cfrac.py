import random

import pytest

from qfraclab.cfrac import backward_convergent, convergent, eval_backward, hirschhorn_cf
from qfraclab.errors import DomainError, PoleError
from qfraclab.recurrence import Params, b0_family, entry16_family, hirschhorn_family, run_jfraction

P_STD = Params(0.4, 0.3, -0.25, 0.2)


class TestEvalBackward:
    def test_degenerate_all_numerators_zero(self):
        assert eval_backward([0.0, 0.0], [2.5, 1.0, 3.0], 2) == 2.5

    def test_entry16_depth_one_tail(self):
        # 1/1 + (lam q)/1 evaluated backward: two levels
        lam, q = 0.7, 0.5
        value = eval_backward([1.0, lam * q], [0.0, 1.0, 1.0], 2)
        assert value == pytest.approx(1 / (1 + lam * q), rel=1e-15)

    def test_pole_reports_level(self):
        with pytest.raises(PoleError) as err:
            eval_backward([1.0, 1.0], [0.0, 1.0, 0.0], 2)
        assert err.value.level == 2

    def test_input_validation(self):
        with pytest.raises(DomainError):
            eval_backward([1.0], [0.0, 1.0], 0)
        with pytest.raises(DomainError):
            eval_backward([1.0], [0.0], 1)


class TestConvergent:
    def test_entry16_index_convention(self):
        lam, q = 1.0, 0.5
        fam = entry16_family(lam, q)
        assert convergent(fam, 1.0, 0) == pytest.approx(1.0)
        expected = (1 + lam * q**2) / (1 + lam * q + lam * q**2)
        assert convergent(fam, 1.0, 2) == pytest.approx(expected, rel=1e-14)
        assert backward_convergent(fam, 1.0, 2) == pytest.approx(expected, rel=1e-14)

    def test_pole_propagates(self):
        p = P_STD
        fam = hirschhorn_family(p)
        x = -p.a / (1 - p.b)  # D_1(x) = 0
        with pytest.raises(PoleError):
            convergent(fam, x, 1)

    @pytest.mark.parametrize("depth", [1, 2, 5, 20, 100, 200])
    def test_backward_equals_recurrence_every_family(self, depth):
        rng = random.Random(depth)
        families = [
            hirschhorn_family(Params(0.4, 0.3, -0.25, 0.2)),
            b0_family(Params(0.5, -0.4, 0.0, 0.3)),
            entry16_family(0.8, 0.45),
        ]
        for fam in families:
            x = rng.uniform(0.5, 2.0)
            fwd = convergent(fam, x, depth)
            bwd = backward_convergent(fam, x, depth)
            assert abs(fwd - bwd) <= 1e-11 * (1 + abs(fwd))


class TestHirschhornCF:
    def test_all_zero_parameters_collapse_to_one(self):
        p = Params(0.5, 0.0, 0.0, 0.0)
        assert hirschhorn_cf(p, 50) == pytest.approx(1.0)

    def test_b_zero_matches_b0_family_at_one(self):
        p = Params(0.4, 0.3, 0.0, 0.2)
        fam = b0_family(p)
        for depth in (3, 10, 60):
            assert hirschhorn_cf(p, depth) == pytest.approx(
                backward_convergent(fam, 1.0, depth), rel=1e-13
            )

    def test_self_convergence(self):
        v200 = hirschhorn_cf(P_STD, 200)
        v400 = hirschhorn_cf(P_STD, 400)
        assert abs(v200 - v400) <= 1e-12 * (1 + abs(v400))

    def test_depth_doubling_cauchy(self):
        # geometric convergence for |b| < 1: successive doublings settle fast
        p = Params(0.6, -0.2, 0.35, 0.7)
        vals = [hirschhorn_cf(p, d) for d in (50, 100, 200, 400)]
        assert abs(vals[-2] - vals[-1]) <= 1e-10 * (1 + abs(vals[-1]))

    def test_lambda_zero_matches_deep_closed_ratio(self):
        # with lam = 0 the tail is constant-coefficient; the recurrence route
        # at large depth supplies the limit
        p = Params(0.4, 0.3, -0.25, 0.0)
        seq = run_jfraction(hirschhorn_family(p), 1.0, 400)
        limit = seq.ratio(400) / (1 - p.b)
        assert hirschhorn_cf(p, 300) == pytest.approx(limit, rel=1e-10)

    def test_matches_recurrence_normalization(self):
        for depth in (1, 2, 7, 33):
            seq = run_jfraction(hirschhorn_family(P_STD), 1.0, depth)
            assert hirschhorn_cf(P_STD, depth) == pytest.approx(
                seq.ratio(depth) / (1 - P_STD.b), rel=1e-13
            )
