import math
import random
from fractions import Fraction

import pytest

from qfraclab.errors import DomainError, PoleError
from qfraclab.qseries import qpochhammer
from qfraclab.recurrence import (
    Params,
    b0_coeffs,
    b0_family,
    entry16_family,
    hirschhorn_coeffs,
    hirschhorn_family,
    monic_beta,
    monic_ratio,
    run_jfraction,
    run_monic,
    run_monic_scaled,
)

P_STD = Params(0.4, 0.3, -0.25, 0.2)


def finite_diff_leading(values_at_ints, deg):
    """Leading coefficient of a degree-deg polynomial from its values at 0..deg."""
    diffs = list(values_at_ints)
    for _ in range(deg):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    return diffs[0] / math.factorial(deg)


class TestParams:
    def test_q_range_enforced(self):
        with pytest.raises(DomainError):
            Params(1.0, 0.1, -0.2, 0.1)
        with pytest.raises(DomainError):
            Params(0.0, 0.1, -0.2, 0.1)

    def test_b_equal_one_rejected(self):
        with pytest.raises(DomainError):
            Params(0.4, 0.1, 1.0, 0.1)

    def test_derived_constants(self):
        p = P_STD
        assert p.c == pytest.approx(0.3)
        assert p.gamma**2 == pytest.approx(-4 * p.b / (1 - p.b) ** 2, rel=1e-15)

    def test_derived_constants_need_negative_b(self):
        p = Params(0.4, 0.3, 0.0, 0.2)
        with pytest.raises(DomainError):
            p.gamma
        with pytest.raises(DomainError):
            p.c

    def test_require_monic_rejects_nonpositive_beta(self):
        # 1 + lam q / b = 1 - 2.5 < 0
        with pytest.raises(DomainError):
            Params(0.5, 0.1, -0.1, 0.5).require_monic()

    def test_negative_q_allowed(self):
        Params(-0.4, 0.3, -0.25, 0.2).require_monic()


class TestJFraction:
    def test_seed_values_all_families(self):
        x = 0.731
        for fam in (hirschhorn_family(P_STD), b0_family(Params(0.4, 0.3, 0.0, 0.2))):
            c0 = fam.coeffs(0)
            seq = run_jfraction(fam, x, 1)
            assert seq.N[0] == 0 and seq.D[0] == 1
            assert seq.N[1] == c0.A
            assert seq.D[1] == pytest.approx(c0.A * x + c0.B)

    def test_hirschhorn_coeff_values(self):
        p = P_STD
        c0 = hirschhorn_coeffs(p, 0)
        assert (c0.A, c0.B) == (1 - p.b, p.a)
        assert hirschhorn_coeffs(p, 1).C == pytest.approx(-(p.b + p.lam * p.q))

    def test_b0_reduction_of_hirschhorn(self):
        p = Params(0.4, 0.3, 0.0, 0.2)
        c2 = b0_coeffs(p, 2)
        assert c2.A == 1
        assert c2.B == pytest.approx(p.a * p.q**2)
        assert c2.C == pytest.approx(-p.lam * p.q**2)
        h2 = hirschhorn_coeffs(p, 2)
        assert (h2.A, h2.B, h2.C) == (c2.A, c2.B, c2.C)

    def test_hirschhorn_d2_hand_unrolled(self):
        p = Params(0.3, 0.2, 0.4, 0.5)
        x = 1.37
        seq = run_jfraction(hirschhorn_family(p), x, 2)
        expected = (x * (1 - p.b) + p.a * p.q) * (x * (1 - p.b) + p.a) + (p.b + p.lam * p.q)
        assert seq.D[2] == pytest.approx(expected, rel=1e-14)

    def test_casoratian_n2(self):
        p = Params(0.3, 0.2, 0.4, 0.5)
        seq = run_jfraction(hirschhorn_family(p), 0.9, 2)
        w1 = seq.N[2] * seq.D[1] - seq.N[1] * seq.D[2]
        assert w1 == pytest.approx((1 - p.b) * (-(p.b + p.lam * p.q)), rel=1e-13)

    @pytest.mark.parametrize("which", ["hirschhorn", "b0", "entry16"])
    def test_casoratian_telescopes(self, which):
        rng = random.Random(42 + len(which))
        for _ in range(5):
            q = rng.uniform(0.1, 0.8) * rng.choice([1, -1])
            a, b, lam = rng.uniform(-1, 1), rng.uniform(-0.8, 0.8), rng.uniform(-1, 1)
            if which == "hirschhorn":
                fam = hirschhorn_family(Params(q, a, b, lam))
            elif which == "b0":
                fam = b0_family(Params(q, a, 0.0, lam))
            else:
                fam = entry16_family(lam, q)
            x = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
            seq = run_jfraction(fam, x, 31)
            prod = fam.coeffs(0).A
            for k in range(0, 30):
                w = seq.N[k + 1] * seq.D[k] - seq.N[k] * seq.D[k + 1]
                # the telescoped value is a difference of two geometrically
                # growing products; relative means relative to those
                scale = max(1.0, abs(seq.N[k + 1] * seq.D[k]), abs(seq.N[k] * seq.D[k + 1]))
                assert abs(w - prod) <= 1e-10 * scale
                prod *= fam.coeffs(k + 1).C

    def test_degree_and_leading_coefficients(self):
        p = Params(0.3, 0.2, 0.4, 0.5)
        fam = hirschhorn_family(p)
        for k in (2, 4, 6):
            dvals = [run_jfraction(fam, float(i), k).D[k] for i in range(k + 1)]
            assert finite_diff_leading(dvals, k) == pytest.approx((1 - p.b) ** k, rel=1e-8)
            nvals = [run_jfraction(fam, float(i), k).N[k] for i in range(k)]
            assert finite_diff_leading(nvals, k - 1) == pytest.approx((1 - p.b) ** k, rel=1e-8)

    def test_ratio_pole_reported(self):
        # D_1(x) = 0 at x = -B_0 / A_0
        p = P_STD
        x = -hirschhorn_coeffs(p, 0).B / hirschhorn_coeffs(p, 0).A
        seq = run_jfraction(hirschhorn_family(p), x, 1)
        with pytest.raises(PoleError):
            seq.ratio(1)

    def test_depth_validation(self):
        with pytest.raises(DomainError):
            run_jfraction(hirschhorn_family(P_STD), 1.0, 0)


class TestMonic:
    def test_p2_hand_unrolled(self):
        p = P_STD
        x = 0.41
        vals = run_monic(p, x, 2, "P")
        expected = (x - p.c * p.q) * (x - p.c) - (1 + p.lam * p.q / p.b) / 4
        assert vals[2] == pytest.approx(expected, rel=1e-14)

    def test_pstar_seeds(self):
        vals = run_monic(P_STD, 0.3, 2, "Pstar")
        assert vals[0] == 0 and vals[1] == 1
        assert vals[2] == pytest.approx(0.3 - P_STD.c * P_STD.q)

    def test_monic_leading_coefficient_is_one(self):
        for k in (3, 5, 7):
            vals = [run_monic(P_STD, float(i), k, "P")[k] for i in range(k + 1)]
            assert finite_diff_leading(vals, k) == pytest.approx(1.0, rel=1e-8)

    def test_rescaling_relation(self):
        rng = random.Random(7)
        for _ in range(6):
            q = rng.uniform(0.1, 0.8) * rng.choice([1, -1])
            a = rng.uniform(-1, 1)
            b = rng.uniform(-0.9, -0.05)
            lam = rng.uniform(-0.5, 0.5)
            p = Params(q, a, b, lam)
            try:
                p.require_monic()
            except DomainError:
                continue
            x = rng.uniform(-1.5, 1.5)
            Pv = run_monic(p, x, 10, "P")
            seq = run_jfraction(hirschhorn_family(p), p.gamma * x, 10)
            for k in range(11):
                scaled = seq.D[k] / (p.gamma**k * (1 - p.b) ** k)
                assert abs(Pv[k] - scaled) <= 1e-11 * max(1.0, abs(Pv[k]))

    def test_parity_when_a_zero(self):
        p = Params(0.4, 0.0, -0.25, 0.2)
        x = 0.63
        plus = run_monic(p, x, 10, "P")
        minus = run_monic(p, -x, 10, "P")
        for k in range(11):
            assert minus[k] == pytest.approx((-1) ** k * plus[k], rel=1e-13, abs=1e-15)

    def test_beta_product_identity(self):
        p = P_STD
        prod = 1.0
        for n in range(1, 21):
            prod *= monic_beta(p, n)
            closed = qpochhammer(-p.lam * p.q / p.b, p.q, n) / 4**n
            assert abs(prod - closed) <= 1e-12 * abs(closed)

    def test_invalid_seed_rejected(self):
        with pytest.raises(DomainError):
            run_monic(P_STD, 0.3, 5, "Q")


class TestB0Norms:
    def test_norm_product_closed_form(self):
        q, lam = 0.4, -0.5
        prod = 1.0
        for n in range(1, 16):
            prod *= -lam * q**n
            assert prod == pytest.approx((-lam) ** n * q ** (n * (n + 1) // 2), rel=1e-13)

    def test_b0_family_requires_b_zero(self):
        with pytest.raises(DomainError):
            b0_coeffs(P_STD, 1)


class TestScaledRun:
    def test_matches_plain_run(self):
        mant, exps = run_monic_scaled(P_STD, 2.0, 300, "P")
        plain = run_monic(P_STD, 2.0, 300, "P")
        for k in (10, 100, 250, 300):
            assert mant[k] * 2.0 ** exps[k] == pytest.approx(plain[k], rel=1e-12)

    def test_survives_depth_past_overflow(self):
        # plain doubles overflow near depth ~1100 at x = 2
        mant, exps = run_monic_scaled(P_STD, 2.0, 2000, "P")
        assert math.isfinite(mant[2000])
        assert exps[2000] > 0

    def test_monic_ratio_matches_direct(self):
        direct = run_monic(P_STD, 2.0, 200, "Pstar")[200] / run_monic(P_STD, 2.0, 200, "P")[200]
        assert monic_ratio(P_STD, 2.0, 200) == pytest.approx(direct, rel=1e-13)


def test_exact_rational_recurrence():
    q, a, b, lam = Fraction(2, 5), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 7)
    p = Params(q, a, b, lam)
    seq = run_jfraction(hirschhorn_family(p), Fraction(1), 6)
    # Casoratian holds exactly
    prod = 1 - b
    for k in range(0, 5):
        assert seq.N[k + 1] * seq.D[k] - seq.N[k] * seq.D[k + 1] == prod
        prod *= hirschhorn_coeffs(p, k + 1).C
