"""The spectral side: F/G series, phase-amplitude series R, the two density
formulas, the Stieltjes transform, and orthogonality quadrature.

For the monic Nevai-class family the absolutely continuous part of the
orthogonality measure on (-1, 1) is

    mu'(x) = (2/pi) (-lam q/b; q)_inf / (|R|^2 sqrt(1 - x^2)),  x = cos theta,

and the same density is recovered independently by inverting the Stieltjes
transform X(x) = 2 rho F(rho)/G(rho) across the cut.  Agreement of the two
routes is the central cross-check of the package.

Root selection: rho(x) is the root of t^2 - 2xt + 1 = 0 with |rho| <= 1,
computed stably as 1/(x + sqrt(x-1) sqrt(x+1)).  On the cut x in (-1, 1)
this returns the upper-half-plane limit e^{-i theta}.

Convention at c = 0 (a = 0): the series F, G, R are read verbatim, i.e. the
``(-2 c rho)^m`` factor kills every m >= 1 term, so F = G = 1 and
R = -1/(i sin theta).  The analytic c -> 0 limit of the full expressions
differs (the Pochhammer numerator diverges at the same rate); tests
therefore cross-validate the two density routes only at c != 0 or lam = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .qseries import DEFAULT_CONTROL, SeriesControl, qpochhammer, qpochhammer_inf, sum_series
from .recurrence import Params, run_monic

__all__ = [
    "Rho",
    "DensitySample",
    "rho_select",
    "series_F",
    "series_G",
    "series_R",
    "density_nevai",
    "density_inversion",
    "stieltjes_transform",
    "norm_squared",
    "orthogonality_integral",
    "gram_matrix",
]


@dataclass(frozen=True)
class Rho:
    """A root pair of t^2 - 2xt + 1 = 0: ``value`` has |value| <= 1 and
    ``conj_pair`` is its reciprocal, so value * conj_pair = 1 exactly."""

    value: complex
    conj_pair: complex


def rho_select(x) -> Rho:
    """Select the modulus-<=1 root of t^2 - 2xt + 1 = 0.

    The branch of sqrt(x^2 - 1) behaves like x at infinity, so the value is
    analytic off [-1, 1]; at x = +-1 it is +-1, and for real x in (-1, 1)
    it is the upper-half-plane limit e^{-i theta} with theta = arccos x.
    The reciprocal form 1/(x + s) avoids cancellation for large |x|.
    """
    xc = complex(x)
    s = cmath.sqrt(xc - 1) * cmath.sqrt(xc + 1)
    big = xc + s
    return Rho(1 / big, big)


def _fg_terms(rho: complex, p: Params, qpow_shift: int, ctrl: SeriesControl):
    """Terms of the F (qpow_shift=1) or G (qpow_shift=0) series at rho.

    The m-th term is the regrouped product
    prod_{j=1}^{m} (-2 c rho - (lam/b) q^j rho^2) times
    q^(binom(m + qpow_shift, 2)) / ((q; q)_m (q rho^2; q)_m).
    """
    q, b, lam, c = p.q, p.b, p.lam, p.c
    rho2 = rho * rho
    t = 1.0 + 0j
    m = 0
    while True:
        yield t
        qm = q ** (m + 1)
        d2 = 1 - qm * rho2
        if abs(d2) < 1e-14:
            raise DomainError(f"(q rho^2; q) factor vanishes at m = {m + 1}: rho^2 = q^-{m + 1}")
        t *= (-2 * c * rho - (lam / b) * qm * rho2) * q ** (m + qpow_shift) / ((1 - qm) * d2)
        m += 1


def series_F(rho, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """F(rho): the q^(binom(m+1,2)) member of the series pair behind X(x)."""
    p.require_monic()
    if p.a == 0:
        return 1.0 + 0j  # only the m = 0 term survives the (-2 c rho)^m factor
    return sum_series(_fg_terms(complex(rho), p, 1, ctrl), ctrl, "F series")


def series_G(rho, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """G(rho): the q^(binom(m,2)) member; its zeros are the candidate poles of X."""
    p.require_monic()
    if p.a == 0:
        return 1.0 + 0j
    return sum_series(_fg_terms(complex(rho), p, 0, ctrl), ctrl, "G series")


def series_R(theta: float, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Phase-amplitude series R(theta) = |R| e^{i phi} for theta in (0, pi).

    R = (-1/(i sin theta)) * sum_m (-lam q e^{i theta}/2bc; q)_m /
        ((q; q)_m (q e^{2 i theta}; q)_m) * (-2c)^m e^{i m theta} q^(binom(m,2)).

    Accumulated verbatim (Pochhammer, power, and q-power tracked separately)
    so it stays an independent route from :func:`series_G`; the re-indexing
    identity |R| sin theta = |G(e^{i theta})| is a test, not an assumption.
    Use ``abs()`` and ``cmath.phase()`` on the result for |R| and phi.
    """
    if not 0 < theta < math.pi:
        raise DomainError("series_R requires theta in (0, pi)")
    p.require_monic()
    sin_t = math.sin(theta)
    if p.a == 0:
        return -1 / (1j * sin_t)
    q, b, lam, c = p.q, p.b, p.lam, p.c
    eit = cmath.exp(1j * theta)
    e2it = eit * eit
    parg = -lam * q * eit / (2 * b * c)

    def terms():
        poch = 1.0 + 0j  # (-lam q e^{it}/2bc; q)_m
        pw = 1.0 + 0j  # (-2c)^m e^{i m t} q^(binom(m,2))
        den = 1.0 + 0j  # (q; q)_m (q e^{2it}; q)_m
        qm = 1.0  # q^m
        while True:
            yield poch * pw / den
            poch *= 1 - parg * qm
            pw *= -2 * c * eit * qm
            den *= (1 - q * qm) * (1 - q * qm * e2it)
            if den == 0:
                raise DomainError("R series denominator vanished")
            qm *= q

    return -sum_series(terms(), ctrl, "R series") / (1j * sin_t)


@dataclass(frozen=True)
class DensitySample:
    """One sample (x, mu'(x)) of the absolutely continuous density."""

    x: float
    density: float


def _weight_prefactor(p: Params, ctrl: SeriesControl) -> float:
    return qpochhammer_inf(-p.lam * p.q / p.b, p.q, ctrl)


def density_nevai(x: float, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> DensitySample:
    """Density on (-1, 1) via the phase-amplitude route:
    (2/pi) (-lam q/b; q)_inf / (|R|^2 sqrt(1 - x^2))."""
    if not -1 < x < 1:
        raise DomainError("density is defined for x in (-1, 1)")
    p.require_monic()
    theta = math.acos(x)
    R = series_R(theta, p, ctrl)
    val = 2.0 * _weight_prefactor(p, ctrl) / (math.pi * abs(R) ** 2 * math.sqrt(1 - x * x))
    return DensitySample(x, val)


def _inversion_value(x: float, p: Params, ctrl: SeriesControl) -> complex:
    """Jump of X across the cut, before discarding the imaginary residual."""
    theta = math.acos(x)
    r1 = cmath.exp(-1j * theta)
    r2 = cmath.exp(1j * theta)
    g1 = series_G(r1, p, ctrl)
    g2 = series_G(r2, p, ctrl)
    if g1 == 0 or g2 == 0:
        raise PoleError(f"G vanishes on the unit circle at x = {x}")
    w1 = r1 * series_F(r1, p, ctrl) / g1
    w2 = r2 * series_F(r2, p, ctrl) / g2
    return (w2 - w1) / (math.pi * 1j)


def density_inversion(x: float, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> DensitySample:
    """Density on (-1, 1) via Stieltjes inversion:
    (1/pi i) (rho2 F(rho2)/G(rho2) - rho1 F(rho1)/G(rho1)) with rho_{1,2} = e^{-+i theta}.

    The value is real up to rounding (conjugate-symmetric series); the real
    part is returned.
    """
    if not -1 < x < 1:
        raise DomainError("density is defined for x in (-1, 1)")
    p.require_monic()
    return DensitySample(x, _inversion_value(x, p, ctrl).real)


def stieltjes_transform(x, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """X(x) = 2 rho F(rho)/G(rho) for x off the open interval (-1, 1).

    A vanishing G(rho) raises PoleError: real poles outside [-1, 1] are
    candidate mass points of the discrete part of the measure.
    """
    xc = complex(x)
    if xc.imag == 0 and -1 < xc.real < 1:
        raise DomainError("x lies inside (-1, 1); use the density routines there")
    p.require_monic()
    rho = rho_select(xc).value
    f = series_F(rho, p, ctrl)
    g = series_G(rho, p, ctrl)
    if abs(g) <= 1e-14 * max(1.0, abs(f)):
        raise PoleError(f"G(rho) ~ 0 at x = {x}: candidate discrete mass point")
    return 2 * rho * f / g


def norm_squared(n: int, p: Params) -> float:
    """Squared norm h_n = 4^(-n) (-lam q/b; q)_n of the monic polynomials."""
    if n < 0:
        raise DomainError("norm_squared requires n >= 0")
    p.require_monic()
    return qpochhammer(-p.lam * p.q / p.b, p.q, n) / 4**n


def gram_matrix(p: Params, nmax: int, nodes: int = 512, ctrl: SeriesControl = DEFAULT_CONTROL) -> np.ndarray:
    """Matrix of inner products over the absolutely continuous part.

    Entry (n, m) is (2 (-lam q/b; q)_inf / pi) *
    integral_0^pi P_n(cos theta) P_m(cos theta) / |R(theta)|^2 d theta,
    by Gauss-Legendre quadrature in theta (the 1/sqrt(1-x^2) singularity is
    absorbed by the substitution, so the integrand is smooth).

    If the measure carries discrete mass outside (-1, 1) the (0, 0) entry
    falls short of 1 by exactly that mass.
    """
    if nodes < 64:
        raise DomainError("use at least 64 quadrature nodes")
    if nmax < 0:
        raise DomainError("nmax must be >= 0")
    p.require_monic()
    tnodes, weights = np.polynomial.legendre.leggauss(nodes)
    pref = 2.0 * _weight_prefactor(p, ctrl) / math.pi
    out = np.zeros((nmax + 1, nmax + 1))
    half_pi = math.pi / 2
    for tj, wj in zip(tnodes, weights):
        theta = (tj + 1.0) * half_pi
        xj = math.cos(theta)
        pv = np.array(run_monic(p, xj, max(nmax, 1), "P")[: nmax + 1])
        Rj = series_R(theta, p, ctrl)
        out += (wj * half_pi / abs(Rj) ** 2) * np.outer(pv, pv)
    return pref * out


def orthogonality_integral(n: int, m: int, p: Params, nodes: int = 512,
                           ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Single weighted inner product <P_n, P_m> over the a.c. part."""
    g = gram_matrix(p, max(n, m), nodes, ctrl)
    return float(g[n, m])
