"""Continued-fraction evaluation.

Two independent routes to the same convergent: the forward three-term
recurrence (ratio ``N_n / D_n`` from :mod:`qfraclab.recurrence`) and
backward evaluation of the truncated fraction from its innermost level.
They must agree to rounding, which is the main cross-check used throughout
the test suite.
"""

from __future__ import annotations

from .errors import DomainError, PoleError
from .recurrence import JFamily, Params, run_jfraction

__all__ = ["eval_backward", "backward_convergent", "convergent", "hirschhorn_cf"]


def eval_backward(partial_numers, partial_denoms, depth: int):
    """Evaluate ``b_0 + a_1/(b_1 + a_2/(b_2 + ... + a_depth/b_depth))``.

    ``partial_denoms`` holds ``b_0..b_depth`` and ``partial_numers`` holds
    ``a_1..a_depth``.  Evaluation runs from the innermost level outward; a
    vanishing intermediate denominator raises PoleError carrying the level
    at which the division failed.
    """
    if depth < 1:
        raise DomainError("eval_backward requires depth >= 1")
    if len(partial_denoms) < depth + 1:
        raise DomainError("need partial denominators b_0..b_depth")
    if len(partial_numers) < depth:
        raise DomainError("need partial numerators a_1..a_depth")
    t = partial_denoms[depth]
    for lvl in range(depth, 0, -1):
        if t == 0:
            raise PoleError(f"zero denominator at level {lvl}", level=lvl)
        t = partial_denoms[lvl - 1] + partial_numers[lvl - 1] / t
    return t


def _jfraction_levels(family: JFamily, x, m: int):
    coeffs = [family.coeffs(k) for k in range(m)]
    dens = [0] + [ck.A * x + ck.B for ck in coeffs]
    nums = [coeffs[0].A] + [-ck.C for ck in coeffs[1:]]
    return nums, dens


def backward_convergent(family: JFamily, x, n: int):
    """n-th convergent of ``family`` at ``x`` by backward evaluation.

    Independent of the recurrence route in :func:`convergent`; the family's
    ``index_shift`` maps its conventional convergent index onto the number
    of fraction levels.
    """
    m = n + family.index_shift
    if m == 0:
        return 0
    nums, dens = _jfraction_levels(family, x, m)
    return eval_backward(nums, dens, m)


def convergent(family: JFamily, x, n: int):
    """n-th convergent of ``family`` at ``x`` via the recurrence: N_m(x)/D_m(x)."""
    m = n + family.index_shift
    if m == 0:
        return 0
    seq = run_jfraction(family, x, m)
    return seq.ratio(m)


def hirschhorn_cf(p: Params, depth: int):
    """Base continued fraction, truncated at ``depth`` levels.

    This is the x = 1 J-fraction divided by ``1 - b``:

        1/(1-b+a) + (b+lam q)/(1-b+aq) + (b+lam q^2)/(1-b+aq^2) + ...

    read with an implicit leading term 0.  At ``b = 0`` it reduces to the
    x = 1 value of the fraction R(x) of the b = 0 family.  Pole errors from
    vanishing intermediate denominators propagate.
    """
    if depth < 1:
        raise DomainError("hirschhorn_cf requires depth >= 1")
    dens = [0] + [1 - p.b + p.a * p.q**k for k in range(depth)]
    nums = [1] + [p.b + p.lam * p.q**k for k in range(1, depth)]
    return eval_backward(nums, dens, depth)
