"""Coefficient asymptotics from dominant singularities, and the b = 0
Stieltjes transform built from them.

On the oscillatory region x = cos theta the monic polynomials obey

    P_k(x) ~ (|R| / 2^k) sin((k+1) theta - phi + pi/2),   R = |R| e^{i phi},

the two conjugate singularities of the generating function contributing a
single real sinusoid.  For the b = 0 family the growth is governed by the
pole at t = 1/x, giving ratios of 0-phi-1 sums whose quotient is the
Stieltjes transform of the (purely discrete) measure.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError
from .qseries import DEFAULT_CONTROL, PhiSpec, SeriesControl, phi, qpochhammer_inf
from .measure import series_R
from .recurrence import Params

__all__ = [
    "asymptotic_P",
    "asymptotic_Q",
    "asymptotic_Qstar",
    "b0_support_bound",
    "stieltjes_b0",
]


def asymptotic_P(k: int, x: float, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Leading asymptotic value (|R|/2^k) sin((k+1) theta - phi + pi/2) at x = cos theta."""
    if not -1 < x < 1:
        raise DomainError("asymptotic_P requires x in (-1, 1)")
    theta = math.acos(x)
    R = series_R(theta, p, ctrl)
    return abs(R) / 2**k * math.sin((k + 1) * theta - cmath.phase(R) + math.pi / 2)


def _b0_params(p: Params):
    if p.b != 0:
        raise DomainError("this routine is for the b = 0 family")
    return p.q, p.a, p.lam


def asymptotic_Q(n: int, x, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Large-n form of the b = 0 denominators:
    x^n (-a/x; q)_inf 0phi1[-; -a/x; q, lam q / x^2]."""
    q, a, lam = _b0_params(p)
    if x == 0:
        raise DomainError("asymptotic_Q requires x != 0")
    spec = PhiSpec((), (-a / x,), q, lam * q / (x * x))
    return x**n * qpochhammer_inf(-a / x, q, ctrl) * phi(spec, ctrl)


def asymptotic_Qstar(n: int, x, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Large-n form of the b = 0 numerators:
    x^(n-1) (-aq/x; q)_inf 0phi1[-; -aq/x; q, lam q^2 / x^2]."""
    q, a, lam = _b0_params(p)
    if x == 0:
        raise DomainError("asymptotic_Qstar requires x != 0")
    spec = PhiSpec((), (-a * q / x,), q, lam * q * q / (x * x))
    return x ** (n - 1) * qpochhammer_inf(-a * q / x, q, ctrl) * phi(spec, ctrl)


def b0_support_bound(p: Params) -> float:
    """Outer radius beyond which x is certainly off the b = 0 support.

    Chain-sequence style bound from the monic coefficients alpha_k = -a q^k
    (k >= 0) and beta_k = -lam q^k (k >= 1):
    2 * (max_k |a q^k| + 2 max_k sqrt(-lam q^k)).
    """
    q, a, lam = _b0_params(p)
    if not (lam < 0 and 0 < q < 1):
        raise DomainError("b = 0 measure theory requires lam < 0 and 0 < q < 1")
    return 2.0 * (abs(a) + 2.0 * math.sqrt(-lam * q))


def stieltjes_b0(x: float, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Stieltjes transform of the b = 0 measure at real x off the support:

        (1/(x+a)) 0phi1[-; -aq/x; q, lam q^2/x^2] / 0phi1[-; -a/x; q, lam q/x^2].

    The off-support condition is enforced via :func:`b0_support_bound`.
    """
    q, a, lam = _b0_params(p)
    bound = b0_support_bound(p)
    if abs(x) < bound:
        raise DomainError(f"|x| = {abs(x):.6g} is inside the support exclusion radius {bound:.6g}")
    num = phi(PhiSpec((), (-a * q / x,), q, lam * q * q / (x * x)), ctrl)
    den = phi(PhiSpec((), (-a / x,), q, lam * q / (x * x)), ctrl)
    if abs(den) <= 1e-14 * max(1.0, abs(num)):
        raise PoleError(f"denominator 0phi1 ~ 0 at x = {x}: candidate mass point")
    return num / ((x + a) * den)
