"""Closed-form generating functions, evaluated as convergent k-sums.

Each generating function is an outer sum over k of closed rational factors
(finite q-Pochhammer products in t); the outer sum is truncated per the
SeriesControl policy.  Coefficient sequences of these functions are exactly
the recurrence families, which gives an independent oracle for both sides.

Term products are accumulated in regrouped form, e.g.

    (-lam t q / 4bc; q)_k (-c t)^k  =  prod_{j=1}^{k} (-c t - lam t^2 q^j / (4b)),

which is identical for c != 0 and remains the correct analytic limit when
a = 0 makes c (or the analogous factor a) vanish.

Supported kinds:

* ``P`` / ``Pstar``: monic family denominators/numerators; the second
  argument is the spectral variable x (x = cos theta on the support).
* ``D`` / ``N``: base-family denominators/numerators at a general x.
* ``Q`` / ``Qstar``: the b = 0 family.
"""

from __future__ import annotations

import cmath

from .errors import DomainError
from .qseries import DEFAULT_CONTROL, SeriesControl, sum_series
from .recurrence import Params

__all__ = ["KINDS", "gf_radius", "gf_eval"]

KINDS = ("P", "Pstar", "D", "N", "Q", "Qstar")

_RADIUS_SAFETY = 0.9


def _half_roots(x):
    """u, v with 1 - x t + t^2/4 = (1 - u t/2)(1 - v t/2); u v = 1, u + v = 2x."""
    xc = complex(x)
    s = cmath.sqrt(xc - 1) * cmath.sqrt(xc + 1)
    u = xc + s
    return u, 1 / u


def _base_roots(x, b):
    """alpha, beta with 1 - (1-b) x t - b t^2 = (1 - alpha t)(1 - beta t)."""
    xc = complex(x)
    s = cmath.sqrt((1 - b) ** 2 * xc * xc + 4 * b)
    r1 = ((1 - b) * xc + s) / 2
    r2 = ((1 - b) * xc - s) / 2
    alpha = r1 if abs(r1) >= abs(r2) else r2
    if alpha == 0:
        return 0j, 0j
    return alpha, -b / alpha


def gf_radius(kind: str, x, p: Params) -> float:
    """Distance from t = 0 to the nearest singularity of the generating function."""
    if kind in ("P", "Pstar"):
        u, v = _half_roots(x)
        return 2 / max(abs(u), abs(v))
    if kind in ("D", "N"):
        alpha, beta = _base_roots(x, p.b)
        m = max(abs(alpha), abs(beta))
        return float("inf") if m == 0 else 1 / m
    if kind in ("Q", "Qstar"):
        return float("inf") if x == 0 else 1 / abs(x)
    raise DomainError(f"unknown generating-function kind {kind!r}")


def gf_eval(kind: str, t, x, p: Params, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Evaluate the ``kind`` generating function at the point ``t``.

    ``x`` is the spectral/evaluation variable of the coefficient family.
    ``t`` must satisfy ``|t| < 0.9 * radius`` of the nearest singularity,
    else a DomainError is raised.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown generating-function kind {kind!r}")
    radius = gf_radius(kind, x, p)
    tc = complex(t)
    if abs(tc) >= _RADIUS_SAFETY * radius:
        raise DomainError(
            f"|t| = {abs(tc):.6g} is at or beyond {_RADIUS_SAFETY} * radius = "
            f"{_RADIUS_SAFETY * radius:.6g} for kind {kind!r}"
        )
    q = p.q
    lam = p.lam

    if kind in ("P", "Pstar"):
        p.require_monic()
        c = p.c
        u, v = _half_roots(x)

        def new_factor(j):  # j-th regrouped factor of (-lam t q/4bc; q)_j (-c t)^j
            return -c * tc - lam * tc * tc * q**j / (4 * p.b)

        if kind == "P":

            def terms():
                tk = 1 / ((1 - u * tc / 2) * (1 - v * tc / 2))
                k = 0
                while True:
                    yield tk
                    tk *= new_factor(k + 1) * q**k / ((1 - u * tc * q ** (k + 1) / 2) * (1 - v * tc * q ** (k + 1) / 2))
                    k += 1

            return sum_series(terms(), ctrl, "P generating function")

        def terms():
            tk = 1.0 + 0j
            k = 0
            while True:
                yield tk
                tk *= new_factor(k + 1) * q ** (k + 1) / ((1 - u * tc * q ** (k + 1) / 2) * (1 - v * tc * q ** (k + 1) / 2))
                k += 1

        pref = tc / ((1 - u * tc / 2) * (1 - v * tc / 2))
        return pref * sum_series(terms(), ctrl, "Pstar generating function")

    if kind in ("D", "N"):
        alpha, beta = _base_roots(x, p.b)
        a = p.a

        def terms():
            shift = 0 if kind == "D" else 1
            tk = 1 / ((1 - alpha * tc) * (1 - beta * tc))
            k = 0
            while True:
                yield tk
                tk *= (a * tc + lam * tc * tc * q ** (k + 1)) * q ** (k + shift) / (
                    (1 - alpha * tc * q ** (k + 1)) * (1 - beta * tc * q ** (k + 1))
                )
                k += 1

        total = sum_series(terms(), ctrl, f"{kind} generating function")
        return total if kind == "D" else tc * (1 - p.b) * total

    # Q / Qstar
    if p.b != 0:
        raise DomainError("kinds Q and Qstar require b = 0")
    a = p.a

    def terms():
        shift = 0 if kind == "Q" else 1
        tk = 1 / (1 - x * tc)
        k = 0
        while True:
            yield tk
            tk *= (a * tc + lam * tc * tc * q ** (k + 1)) * q ** (k + shift) / (1 - x * tc * q ** (k + 1))
            k += 1

    total = sum_series(terms(), ctrl, f"{kind} generating function")
    return total if kind == "Q" else tc * total
