"""Explicit closed-form convergents and the related limit identities.

Every formula here is a finite sum in the q-binomial calculus and is
verified elsewhere against the recurrence and backward-evaluation routes.
All functions are polymorphic over the scalar type: pass floats/complex for
double precision or ``fractions.Fraction`` for exact rational arithmetic
(the formulas are polynomial identities, so small-n checks deserve an exact
backend).

Summation bounds always come from the vanishing conventions of the
q-binomials, never from guessed cutoffs; internally the sums share a prefix
table of (q; q)_m to keep the triple sums fast.
"""

from __future__ import annotations

from .errors import DomainError
from .qseries import DEFAULT_CONTROL, SeriesControl, sum_series

__all__ = [
    "entry16",
    "hirschhorn_closed",
    "a0_closed",
    "ram_Q",
    "ram_Qstar",
    "entry15",
    "g_function",
]


def _c2(k: int) -> int:
    return k * (k - 1) // 2


def _qfac_table(q, n: int) -> list:
    """Prefix products (q; q)_m for m = 0..n; exact for Fraction q."""
    out = [q**0] * (n + 1)  # q**0 keeps the scalar type (Fraction stays Fraction)
    pw = q
    for m in range(1, n + 1):
        out[m] = out[m - 1] * (1 - pw)
        pw *= q
    return out


def _qbin(tab, n: int, k: int):
    """q-binomial from a (q; q) prefix table; 0 outside 0 <= k <= n."""
    if k < 0 or n < k:
        return 0
    den = tab[k] * tab[n - k]
    if den == 0:
        raise DomainError("q-binomial undefined: (q; q) factor vanished")
    return tab[n] / den


def entry16(n: int, lam, q):
    """Closed-form convergent pair (N_n, D_n) of the Rogers-Ramanujan-type
    fraction 1/1 + lam q/1 + lam q^2/1 + ... + lam q^n/1:

        N_n = sum_k q^(k^2+k) lam^k [n-k choose k]_q,
        D_n = sum_k q^(k^2)   lam^k [n-k+1 choose k]_q.
    """
    if n < 0:
        raise DomainError("entry16 requires n >= 0")
    tab = _qfac_table(q, n + 1)
    N = 0
    for k in range(0, n // 2 + 1):
        N += q ** (k * k + k) * lam**k * _qbin(tab, n - k, k)
    D = 0
    for k in range(0, (n + 1) // 2 + 1):
        D += q ** (k * k) * lam**k * _qbin(tab, n - k + 1, k)
    return N, D


def hirschhorn_closed(n: int, q, a, b, lam):
    """Triple-sum convergent pair (N_n(1), D_n(1)) of the base fraction.

        D_n(1) = sum_{j,k,l} [k+l; j,l]_q [n-j-l choose k]_q
                 a^(k-j) (-b)^l lam^j q^(C(k,2)+C(j,2)+j),

    N_n(1) carries an extra factor (1-b) and an extra q^k in the power.
    The ratio N_{n+1}(1) / ((1-b) D_{n+1}(1)) is the depth-(n+1) truncation
    of the fraction.
    """
    if n < 0:
        raise DomainError("hirschhorn_closed requires n >= 0")
    tab = _qfac_table(q, n + 1)
    N = 0
    D = 0
    for l in range(0, n + 1):
        for j in range(0, n - l + 1):
            for k in range(j, n - j - l + 1):
                mult = tab[k + l] / (tab[j] * tab[l] * tab[k - j])  # [k+l; j, l]_q
                base = mult * a ** (k - j) * (-b) ** l * lam**j * q ** (_c2(k) + _c2(j) + j)
                D += base * _qbin(tab, n - j - l, k)
                if k <= n - 1 - j - l:
                    N += base * q**k * _qbin(tab, n - 1 - j - l, k)
    return (1 - b) * N, D


def a0_closed(n: int, b, lam, q):
    """Double-sum convergent pair (N'_n, D'_n) of the a = 0 fraction
    1/(1-b) + (b+lam q)/(1-b) + ... + (b+lam q^n)/(1-b):

        N'_n = sum_{k,j} q^(k^2+k) lam^k [k+j choose k]_q [n-k-j   choose k]_q (-b)^j,
        D'_n = sum_{k,j} q^(k^2)   lam^k [k+j choose k]_q [n-k-j+1 choose k]_q (-b)^j.
    """
    if n < 0:
        raise DomainError("a0_closed requires n >= 0")
    tab = _qfac_table(q, n + 2)
    N = 0
    D = 0
    for k in range(0, (n + 1) // 2 + 1):
        qk = q ** (k * k) * lam**k
        for j in range(0, n + 1 - 2 * k + 1):
            common = qk * _qbin(tab, k + j, k) * (-b) ** j
            N += common * q**k * _qbin(tab, n - k - j, k)
            D += common * _qbin(tab, n - k - j + 1, k)
    return N, D


def ram_Q(n: int, x, a, lam, q):
    """Denominator polynomial Q_n(x) of the b = 0 family by its closed j-sum,

        Q_n(x) = sum_j [n-j choose j]_q lam^j q^(j^2) prod_{i=j}^{n-j-1} (x + a q^i),

    i.e. the Pochhammer-ratio form with the x powers absorbed into the
    product, which removes the removable singularities at x = 0 and at
    -a/x = q^(-j).
    """
    if n < 0:
        raise DomainError("ram_Q requires n >= 0")
    tab = _qfac_table(q, n)
    total = 0
    for j in range(0, n // 2 + 1):
        prod = 1
        for i in range(j, n - j):
            prod *= x + a * q**i
        total += _qbin(tab, n - j, j) * lam**j * q ** (j * j) * prod
    return total


def ram_Qstar(n: int, x, a, lam, q):
    """Numerator polynomial Q*_n(x) of the b = 0 family:

        Q*_n(x) = sum_j [n-j-1 choose j]_q lam^j q^(j^2+j) prod_{i=j+1}^{n-j-1} (x + a q^i).
    """
    if n < 0:
        raise DomainError("ram_Qstar requires n >= 0")
    if n == 0:
        return 0
    tab = _qfac_table(q, n)
    total = 0
    for j in range(0, (n - 1) // 2 + 1):
        prod = 1
        for i in range(j + 1, n - j):
            prod *= x + a * q**i
        total += _qbin(tab, n - j - 1, j) * lam**j * q ** (j * j + j) * prod
    return total


def entry15(n: int, a, lam, q):
    """Convergent pair (Nhat_n, Dhat_n) of the fraction
    1 + a + lam q/(1+aq) + lam q^2/(1+aq^2) + ... + lam q^n/(1+aq^n),
    whose value is (1+a) Nhat_n / Dhat_n:

        Nhat_n = sum_j q^(j^2)   lam^j [n+1-j choose j]_q (-aq; q)_{n-j} / (-a; q)_j,
        Dhat_n = sum_j q^(j^2+j) lam^j [n-j   choose j]_q (-aq; q)_{n-j} / (-aq; q)_j.

    The Pochhammer quotients are reduced to bare products before dividing,
    so only the single factor (1 + a) is ever divided by; a = -1 is the one
    genuinely singular point and raises DomainError.
    """
    if n < 1:
        raise DomainError("entry15 requires n >= 1")
    if 1 + a == 0:
        raise DomainError("a = -1 zeroes the (-a; q)_j factors")
    tab = _qfac_table(q, n + 1)
    Nh = 0
    for j in range(0, (n + 1) // 2 + 1):
        prod = 1
        for i in range(j, n - j + 1):
            prod *= 1 + a * q**i
        Nh += q ** (j * j) * lam**j * _qbin(tab, n + 1 - j, j) * prod / (1 + a)
    Dh = 0
    for j in range(0, n // 2 + 1):
        prod = 1
        for i in range(j + 1, n - j + 1):
            prod *= 1 + a * q**i
        Dh += q ** (j * j + j) * lam**j * _qbin(tab, n - j, j) * prod
    return Nh, Dh


def g_function(b, lam, q, ctrl: SeriesControl = DEFAULT_CONTROL):
    """g(b, lam) = sum_k lam^k q^(k^2) / ((q; q)_k (-bq; q)_k).

    The q^(k^2) factor forces rapid convergence for any fixed arguments;
    -bq of the form q^(-j) zeroes a denominator and raises DomainError.
    The fraction of :func:`a0_closed` converges to g(b, lam q)/g(b, lam)
    for |b| < 1, and N'_n -> g(b, lam q)/(1 + b).
    """
    if not 0 < abs(q) < 1:
        raise DomainError("g_function requires 0 < |q| < 1")

    def terms():
        t = 1
        k = 0
        while True:
            yield t
            den = (1 - q ** (k + 1)) * (1 + b * q ** (k + 1))
            if den == 0:
                raise DomainError(f"(-bq; q) factor vanishes at k = {k + 1}")
            t = t * lam * q ** (2 * k + 1) / den
            k += 1

    return sum_series(terms(), ctrl, "g series")
