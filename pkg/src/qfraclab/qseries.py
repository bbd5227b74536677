"""q-calculus kernel: Pochhammer symbols, q-binomial/multinomial coefficients,
theta products, and basic hypergeometric partial sums.

Everything here is scalar and polymorphic over the numeric type of its
inputs: float/complex for the usual double-precision paths, and
``fractions.Fraction`` wherever the routine is a finite product or sum
(which is what the exact-rational checks in :mod:`qfraclab.convergents`
rely on).  Infinite sums and products are truncated under an explicit
:class:`SeriesControl` policy and never silently: exhausting the term
budget raises :class:`~qfraclab.errors.TruncationError`.

Conventions:

* ``(a; q)_n`` is the n-factor product ``prod_{j=0}^{n-1} (1 - a q^j)``,
  with the empty product equal to 1.
* Gaussian binomials vanish whenever ``k < 0`` or ``n < k`` (hence for all
  negative ``n``), multinomials whenever some part is negative or the parts
  exceed ``n``.
* Negative real bases ``q`` are permitted wherever ``0 < |q| < 1`` is; all
  convergence bounds use ``|q|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, TruncationError

__all__ = [
    "SeriesControl",
    "DEFAULT_CONTROL",
    "PhiSpec",
    "sum_series",
    "qpochhammer",
    "qpochhammer_inf",
    "qbinomial",
    "qmultinomial",
    "theta",
    "phi",
]


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite sums and products.

    A sum stops once ``consecutive_small`` successive terms ``t`` satisfy
    ``|t| <= rel_tol * (1 + |partial sum|)``; requiring several successive
    small terms makes the rule robust against isolated zero terms produced
    by alternating ``q^(k choose 2)`` powers.  An infinite product
    ``(a; q)_inf`` stops once ``|a q^k| < rel_tol`` for ``consecutive_small``
    successive ``k``.  Exceeding ``max_terms`` raises TruncationError.
    """

    rel_tol: float = 1e-15
    consecutive_small: int = 3
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.consecutive_small < 1:
            raise DomainError("consecutive_small must be at least 1")
        if self.max_terms < self.consecutive_small:
            raise DomainError("max_terms must be at least consecutive_small")


DEFAULT_CONTROL = SeriesControl()


def sum_series(terms: Iterator, ctrl: SeriesControl = DEFAULT_CONTROL, what: str = "series"):
    """Sum an iterable of terms under the truncation policy of ``ctrl``.

    Terminating series may simply exhaust the iterator; infinite ones must
    meet the smallness criterion within ``ctrl.max_terms`` terms.
    """
    total = 0
    small = 0
    count = 0
    inf = float("inf")
    for term in terms:
        count += 1
        at = abs(term)
        if at != at or at == inf:  # overflow masquerades as convergence otherwise
            raise TruncationError(f"{what} diverged (nonfinite term at index {count - 1})")
        total += term
        if at <= ctrl.rel_tol * (1.0 + abs(total)):
            small += 1
            if small >= ctrl.consecutive_small:
                return total
        else:
            small = 0
        if count >= ctrl.max_terms:
            raise TruncationError(f"{what} did not converge within {ctrl.max_terms} terms")
    return total


def qpochhammer(a, q, n: int):
    """Finite q-shifted factorial ``(a; q)_n = prod_{j=0}^{n-1} (1 - a q^j)``.

    ``n = 0`` returns 1.  Exact for Fraction inputs.
    """
    if n < 0:
        raise DomainError("qpochhammer requires n >= 0")
    out = 1
    pw = 1  # q^j
    for _ in range(n):
        out *= 1 - a * pw
        pw *= q
    return out


def qpochhammer_inf(a, q, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Infinite product ``(a; q)_inf`` for ``0 < |q| < 1``.

    The partial product is truncated once ``|a q^k| < ctrl.rel_tol`` for
    ``ctrl.consecutive_small`` successive ``k``.
    """
    if not 0 < abs(q) < 1:
        raise DomainError("qpochhammer_inf requires 0 < |q| < 1")
    out = 1
    term = a  # a q^k
    small = 0
    for _ in range(ctrl.max_terms):
        out *= 1 - term
        if abs(term) < ctrl.rel_tol:
            small += 1
            if small >= ctrl.consecutive_small:
                return out
        else:
            small = 0
        term *= q
    raise TruncationError(f"(a; q)_inf did not converge within {ctrl.max_terms} factors")


def qbinomial(n: int, k: int, q):
    """Gaussian binomial coefficient in cancellation-safe product form.

    Computes ``prod_{j=1}^{k} (1 - q^(n-k+j)) / (1 - q^j)``, never a ratio
    of precomputed factorials, so it stays accurate for complex ``q``.
    Returns 0 when ``k < 0`` or ``n < k`` (hence for all negative ``n``).
    If ``q`` is a root of unity that zeroes a denominator factor the value
    is undefined and a DomainError is raised.
    """
    if k < 0 or n < k:
        return 0
    inexact = isinstance(q, (float, complex))
    out = 1
    for j in range(1, k + 1):
        den = 1 - q**j
        if den == 0 or (inexact and abs(den) < 1e-13):
            raise DomainError(f"q-binomial undefined: q^{j} = 1 zeroes a denominator factor")
        out = out * (1 - q ** (n - k + j)) / den
    return out


def qmultinomial(n: int, ks: Sequence[int], q):
    """q-multinomial coefficient ``[n; k_1, ..., k_r]_q``.

    Vanishes when any part is negative or ``n < sum(ks)``; reduces to the
    q-binomial for a single part.  Evaluated as a telescoping product of
    q-binomials so every factor stays in product form.
    """
    if any(k < 0 for k in ks):
        return 0
    if n < sum(ks):
        return 0
    out = 1
    rem = n
    for k in ks:
        out *= qbinomial(rem, k, q)
        rem -= k
    return out


def theta(z, q, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Theta factorial ``<z; q> = (z; q)_inf (q/z; q)_inf`` for ``z != 0``.

    Satisfies the quasiperiodicity ``<z; q> / <zq; q> = -z``.
    """
    if z == 0:
        raise DomainError("theta requires z != 0")
    if not 0 < abs(q) < 1:
        raise DomainError("theta requires 0 < |q| < 1")
    return qpochhammer_inf(z, q, ctrl) * qpochhammer_inf(q / z, q, ctrl)


def _is_nonneg_q_power(value, q, rtol: float = 1e-12) -> bool:
    """True when ``value == q**(-m)`` for some integer m >= 0, within rtol."""
    target = abs(value)
    if target == 0:
        return False
    p = 1.0
    for _ in range(10_000):
        if abs(value - p) <= rtol * abs(p):
            return True
        if abs(p) > target * (1 + 1e-9):
            return False
        p /= q
    return False


@dataclass(frozen=True)
class PhiSpec:
    """Description of an r-phi-s basic hypergeometric sum.

    ``upper`` holds the numerator parameters ``a_1..a_r``, ``lower`` the
    denominator parameters ``b_1..b_s``; the series in ``argument`` z is

        sum_k  (a_1..a_r; q)_k / ((q; q)_k (b_1..b_s; q)_k)
               * ((-1)^k q^(k choose 2))^(1 + s - r) * z^k.

    No lower parameter may be of the form ``q^(-m)`` with m >= 0, which
    would zero a denominator factor.
    """

    upper: tuple
    lower: tuple
    base: float
    argument: complex

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if not 0 < abs(self.base) < 1:
            raise DomainError("PhiSpec requires 0 < |q| < 1")
        for b in self.lower:
            if _is_nonneg_q_power(b, self.base):
                raise DomainError(f"lower parameter {b!r} is q^(-m); denominator would vanish")


def phi(spec: PhiSpec, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Partial sum of the basic hypergeometric series described by ``spec``.

    Terminating series (an upper parameter of the form ``q^(-n)``) finish on
    their own; otherwise the series must converge under the truncation
    policy, which covers ``r <= s`` always and ``r = s + 1`` for ``|z| < 1``.
    """
    q = spec.base
    z = spec.argument
    extra = 1 + len(spec.lower) - len(spec.upper)

    def terms():
        t = 1
        qk = 1  # q^k
        k = 0
        while True:
            yield t
            ratio = z
            for a in spec.upper:
                ratio *= 1 - a * qk
            den = 1 - q * qk  # (q; q)_{k+1} factor
            for b in spec.lower:
                den *= 1 - b * qk
            if den == 0:
                raise DomainError(f"phi denominator vanished at term {k + 1}")
            if extra:
                ratio *= ((-1) * qk) ** extra
            t = t * ratio / den
            qk *= q
            k += 1

    return sum_series(terms(), ctrl, "basic hypergeometric series")
