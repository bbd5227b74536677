"""Three-term recurrence engine for the continued-fraction polynomial families.

A J-fraction

    A_0 / (A_0 x + B_0) - C_1 / (A_1 x + B_1) - C_2 / (A_2 x + B_2) - ...

has numerator and denominator polynomials ``N_k(x)``, ``D_k(x)`` that both
satisfy ``y_{k+1} = (A_k x + B_k) y_k - C_k y_{k-1}`` with seeds
``D_0 = 1, D_1 = A_0 x + B_0`` and ``N_0 = 0, N_1 = A_0``.  Three families
live here:

* the base family ``A_k = 1 - b, B_k = a q^k, C_k = -(b + lam q^k)``,
* its ``b = 0`` specialization ``A_k = 1, B_k = a q^k, C_k = -lam q^k``
  (denominators Q_k, numerators Q*_k), and
* the Rogers-Ramanujan-type family (``a = 0`` inside the b = 0 one), whose
  conventional convergent index counts tail terms and is one less than the
  recurrence index.

The monic rescaling ``P_k(x) = D_k(gamma x) / (gamma^k (1 - b)^k)`` with
``gamma^2 = -4b / (1 - b)^2`` turns the base family into

    x P_k = P_{k+1} + alpha_k P_k + beta_k P_{k-1},
    alpha_k = c q^k,  beta_k = (1 + lam q^k / b) / 4,  c = a / (2 sqrt(-b)),

which is a Nevai-class recurrence (alpha_k -> 0, beta_k -> 1/4) whenever
``b < 0`` and every ``beta_k`` is positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, PoleError

__all__ = [
    "Params",
    "JCoeffs",
    "JFamily",
    "ConvergentSeq",
    "hirschhorn_coeffs",
    "b0_coeffs",
    "hirschhorn_family",
    "b0_family",
    "entry16_family",
    "run_jfraction",
    "monic_alpha",
    "monic_beta",
    "run_monic",
    "run_monic_scaled",
    "monic_ratio",
]


@dataclass(frozen=True)
class Params:
    """Parameter quadruple (q, a, b, lam) plus the derived constants.

    ``gamma`` and ``c`` require ``b < 0``.  Only ``gamma^2 = -4b/(1-b)^2``
    is forced; with ``c = a / (2 sqrt(-b))`` taken positive, the sign of
    ``gamma`` is pinned by requiring the rescaling
    ``P_k(x) = D_k(gamma x) / (gamma^k (1-b)^k)`` to land on the
    ``alpha_k = +c q^k`` monic family (seeds 1, x - c), which needs the
    negative square root.  The opposite sign merely reflects the family,
    ``P_k -> (-1)^k P_k(-x)``.
    """

    q: float
    a: float
    b: float
    lam: float

    def __post_init__(self):
        if not 0 < abs(self.q) < 1:
            raise DomainError("Params require 0 < |q| < 1")
        if self.b == 1:
            raise DomainError("b = 1 zeroes every linear coefficient A_k")

    @property
    def gamma(self) -> float:
        if not self.b < 0:
            raise DomainError("gamma is real only for b < 0")
        return -2.0 * math.sqrt(-self.b) / (1.0 - self.b)

    @property
    def c(self) -> float:
        if not self.b < 0:
            raise DomainError("c is real only for b < 0")
        return self.a / (2.0 * math.sqrt(-self.b))

    def require_monic(self, max_check: int = 10_000) -> "Params":
        """Validate the monic-family hypotheses: b < 0 and beta_k > 0 for all k >= 1.

        Positivity is checked index by index until ``|lam q^k / b| < 1``,
        beyond which every remaining beta_k is positive automatically.
        """
        if not self.b < 0:
            raise DomainError("monic family requires b < 0")
        ratio = self.lam * self.q / self.b
        for k in range(1, max_check + 1):
            if 1 + ratio <= 0:
                raise DomainError(f"beta_{k} <= 0: 1 + lam q^{k}/b = {1 + ratio}")
            if abs(ratio) < 1:
                return self
            ratio *= self.q
        raise DomainError("could not certify beta_k > 0 within max_check indices")


@dataclass(frozen=True)
class JCoeffs:
    """Level-k coefficient triple of a J-fraction.  C is unused at k = 0."""

    A: complex
    B: complex
    C: complex


@dataclass(frozen=True)
class JFamily:
    """A J-fraction family given by its level-coefficient function.

    ``index_shift`` maps the family's conventional convergent index onto the
    recurrence index (1 for the Rogers-Ramanujan-type family, whose n-th
    convergent ends at the ``lam q^n`` tail term and equals
    ``N_{n+1}/D_{n+1}`` of the recurrence).
    """

    name: str
    coeffs: Callable[[int], JCoeffs]
    index_shift: int = 0


def hirschhorn_coeffs(p: Params, k: int) -> JCoeffs:
    """Base-family coefficients A_k = 1-b, B_k = a q^k, C_k = -(b + lam q^k)."""
    qk = p.q**k
    return JCoeffs(1 - p.b, p.a * qk, -(p.b + p.lam * qk))


def b0_coeffs(p: Params, k: int) -> JCoeffs:
    """b = 0 family: A_k = 1, B_k = a q^k, C_k = -lam q^k.

    Seeds follow the J-fraction convention: denominators Q_0 = 1,
    Q_1 = x + a; numerators Q*_0 = 0, Q*_1 = 1.
    """
    if p.b != 0:
        raise DomainError("b0 family requires b = 0")
    qk = p.q**k
    return JCoeffs(1, p.a * qk, -p.lam * qk)


def hirschhorn_family(p: Params) -> JFamily:
    return JFamily("hirschhorn", lambda k: hirschhorn_coeffs(p, k))


def b0_family(p: Params) -> JFamily:
    return JFamily("b0", lambda k: b0_coeffs(p, k))


def entry16_family(lam, q) -> JFamily:
    """Rogers-Ramanujan-type family (a = 0, b = 0), used at x = 1."""
    p = Params(q, 0, 0, lam)
    return JFamily("entry16", lambda k: b0_coeffs(p, k), index_shift=1)


@dataclass
class ConvergentSeq:
    """Paired numerator/denominator value sequences of a J-fraction at x.

    ``N[k] / D[k]`` is the k-th convergent; the Casoratian
    ``N_{k+1} D_k - N_k D_{k+1}`` telescopes to ``A_0 prod_{j<=k} C_j``.
    """

    N: list
    D: list
    x: complex

    def ratio(self, k: int):
        if self.D[k] == 0:
            raise PoleError(f"D_{k}(x) = 0 at x = {self.x}", level=k)
        return self.N[k] / self.D[k]


def run_jfraction(family, x, depth: int) -> ConvergentSeq:
    """Unroll the J-fraction recurrence to ``depth``, seeding both solutions.

    ``family`` may be a :class:`JFamily` or a bare ``k -> JCoeffs`` callable.
    Exact for Fraction-valued coefficients and evaluation points.
    """
    if depth < 1:
        raise DomainError("run_jfraction requires depth >= 1")
    coeffs = family.coeffs if isinstance(family, JFamily) else family
    c0 = coeffs(0)
    N = [0, c0.A]
    D = [1, c0.A * x + c0.B]
    for k in range(1, depth):
        ck = coeffs(k)
        lin = ck.A * x + ck.B
        N.append(lin * N[k] - ck.C * N[k - 1])
        D.append(lin * D[k] - ck.C * D[k - 1])
    return ConvergentSeq(N, D, x)


def monic_alpha(p: Params, k: int) -> float:
    return p.c * p.q**k


def monic_beta(p: Params, k: int) -> float:
    return (1 + p.lam * p.q**k / p.b) / 4


_SEED_NAMES = ("P", "Pstar")


def run_monic(p: Params, x, depth: int, seed: str = "P") -> list:
    """Unroll ``x y_k = y_{k+1} + alpha_k y_k + beta_k y_{k-1}`` to ``depth``.

    ``seed="P"`` gives the monic orthogonal polynomials (P_0 = 1,
    P_1 = x - c); ``seed="Pstar"`` the numerator solution (0, 1).
    """
    if depth < 1:
        raise DomainError("run_monic requires depth >= 1")
    if seed not in _SEED_NAMES:
        raise DomainError(f"unknown seed {seed!r}; use 'P' or 'Pstar'")
    p.require_monic()
    y0, y1 = (1, x - p.c) if seed == "P" else (0, 1)
    out = [y0, y1]
    for k in range(1, depth):
        out.append((x - monic_alpha(p, k)) * out[k] - monic_beta(p, k) * out[k - 1])
    return out


_RESCALE = 2.0**512


def run_monic_scaled(p: Params, x, depth: int, seed: str = "P"):
    """Like :func:`run_monic` but with a shared power-of-two exponent ledger.

    Returns ``(mantissas, exponents)`` with ``y_k = mantissas[k] * 2.0**exponents[k]``,
    so depths well past the double-precision overflow point stay finite.
    """
    if depth < 1:
        raise DomainError("run_monic_scaled requires depth >= 1")
    if seed not in _SEED_NAMES:
        raise DomainError(f"unknown seed {seed!r}; use 'P' or 'Pstar'")
    p.require_monic()
    y_prev, y_cur = (1.0, x - p.c) if seed == "P" else (0.0, 1.0 + 0 * x)
    mant = [y_prev, y_cur]
    exps = [0, 0]
    e = 0  # shared exponent of the sliding pair
    for k in range(1, depth):
        y_next = (x - monic_alpha(p, k)) * y_cur - monic_beta(p, k) * y_prev
        if max(abs(y_next), abs(y_cur)) > _RESCALE:
            y_next /= _RESCALE
            y_cur /= _RESCALE
            e += 512
        mant.append(y_next)
        exps.append(e)
        y_prev, y_cur = y_cur, y_next
    return mant, exps


def monic_ratio(p: Params, x, depth: int):
    """Markov-limit ratio ``Pstar_depth(x) / P_depth(x)`` using the scaled runs."""
    mn, en = run_monic_scaled(p, x, depth, "Pstar")
    md, ed = run_monic_scaled(p, x, depth, "P")
    if md[depth] == 0:
        raise PoleError(f"P_{depth}(x) = 0 at x = {x}", level=depth)
    return (mn[depth] / md[depth]) * 2.0 ** (en[depth] - ed[depth])
