import cmath
import math
import random

import pytest

from qfraclab.errors import DomainError
from qfraclab.genfun import gf_eval, gf_radius
from qfraclab.recurrence import Params, b0_family, hirschhorn_family, run_jfraction, run_monic

P_STD = Params(0.4, 0.3, -0.25, 0.2)
P_B0 = Params(0.4, 0.3, 0.0, -0.2)


@pytest.mark.parametrize(
    "kind,expected",
    [("P", 1), ("Pstar", 0), ("D", 1), ("N", 0), ("Q", 1), ("Qstar", 0)],
)
def test_value_at_origin_is_seed(kind, expected):
    p = P_B0 if kind in ("Q", "Qstar") else P_STD
    assert gf_eval(kind, 0.0, 0.7, p) == pytest.approx(expected)


def test_q_kind_coefficient_oracle():
    # sum of recurrence values against the closed form at t = 0.1, x = 1
    p = P_B0
    seq = run_jfraction(b0_family(p), 1.0, 62)
    t = 0.1
    oracle = sum(seq.D[k] * t**k for k in range(61))
    assert gf_eval("Q", t, 1.0, p) == pytest.approx(oracle, abs=1e-12)


def test_p_kind_coefficient_oracle():
    p = P_STD
    x = math.cos(1.0)
    Pv = run_monic(p, x, 82, "P")
    t = 0.2
    oracle = sum(Pv[k] * t**k for k in range(81))
    assert gf_eval("P", t, x, p) == pytest.approx(oracle, abs=1e-12)


@pytest.mark.parametrize("kind", ["P", "Pstar", "D", "N", "Q", "Qstar"])
def test_coefficient_agreement_inside_third_of_radius(kind):
    rng = random.Random(hash(kind) % 1000)
    p = P_B0 if kind in ("Q", "Qstar") else P_STD
    for _ in range(3):
        x = rng.uniform(-0.9, 0.9) if kind in ("P", "Pstar") else rng.uniform(0.6, 1.4)
        radius = gf_radius(kind, x, p)
        t = cmath.rect(0.3 * radius * rng.uniform(0.3, 1.0), rng.uniform(0, 2 * math.pi))
        if kind in ("P", "Pstar"):
            vals = run_monic(p, x, 130, "P" if kind == "P" else "Pstar")
        elif kind in ("D", "N"):
            seq = run_jfraction(hirschhorn_family(p), x, 130)
            vals = seq.D if kind == "D" else seq.N
        else:
            seq = run_jfraction(b0_family(p), x, 130)
            vals = seq.D if kind == "Q" else seq.N
        oracle = sum(vals[k] * t**k for k in range(126))
        assert abs(gf_eval(kind, t, x, p) - oracle) <= 1e-11 * (1 + abs(oracle))


def test_p_q_difference_equation():
    p = P_STD
    theta = 1.0
    x = math.cos(theta)
    u, v = cmath.exp(1j * theta), cmath.exp(-1j * theta)
    rng = random.Random(5)
    for _ in range(20):
        t = cmath.rect(rng.uniform(0.02, 1.7), rng.uniform(0, 2 * math.pi))
        ft = (1 - u * t / 2) * (1 - v * t / 2)
        lhs = gf_eval("P", t, x, p)
        rhs = 1 / ft - p.c * t * (1 + p.lam * t * p.q / (4 * p.b * p.c)) / ft * gf_eval("P", t * p.q, x, p)
        assert abs(lhs - rhs) <= 1e-11 * (1 + abs(lhs))


def test_d_q_difference_equation():
    p = Params(0.4, 0.3, -0.25, 0.2)
    x = 0.8
    rng = random.Random(6)
    radius = gf_radius("D", x, p)
    for _ in range(20):
        t = cmath.rect(rng.uniform(0.05, 0.85) * radius, rng.uniform(0, 2 * math.pi))
        gt = 1 - x * (1 - p.b) * t - p.b * t * t
        lhs = gf_eval("D", t, x, p)
        rhs = 1 / gt + p.a * t * (1 + p.lam * t * p.q / p.a) / gt * gf_eval("D", t * p.q, x, p)
        assert abs(lhs - rhs) <= 1e-11 * (1 + abs(lhs))


def test_radius_guard():
    with pytest.raises(DomainError):
        gf_eval("P", 1.81, 0.3, P_STD)  # radius 2 for x inside (-1, 1)
    with pytest.raises(DomainError):
        gf_eval("Q", 0.95, 1.0, P_B0)  # radius 1/x = 1


def test_unknown_kind_rejected():
    with pytest.raises(DomainError):
        gf_eval("Z", 0.1, 0.5, P_STD)


def test_q_kinds_require_b_zero():
    with pytest.raises(DomainError):
        gf_eval("Q", 0.1, 1.0, P_STD)


def test_a_zero_limit_of_p_kind():
    # regrouped factors keep the c -> 0 limit of the generating function exact
    p = Params(0.4, 0.0, -0.25, 0.2)
    x = math.cos(1.0)
    Pv = run_monic(p, x, 82, "P")
    t = 0.2
    oracle = sum(Pv[k] * t**k for k in range(81))
    assert gf_eval("P", t, x, p) == pytest.approx(oracle, abs=1e-12)
