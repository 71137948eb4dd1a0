"""Closed-form anti-Ramsey values for matchings and the P4/P2 forest family.

For a matching of t disjoint edges in K_n, AR(n, tP2) has a two-branch closed
form, valid for t >= 2 once n >= 2t+1.  For the forest kP4 union tP2 the value
reduces to the matching value AR(n, (2k+t)P2) on two parameter regions:

  THEOREM1:  t >= k+1 >= 2  and  n >= 8k+2t-4
  THEOREM2:  k >= t >= 2    and  g(k,t) <= n <= f(k,t)

with g(k,t) = 8k+2t-4 and f(k,t) = (7k^2+8kt-t^2+23k-t-18)/(2k-2t+2).

Everything is exact: integers throughout, Fraction for f, no floats.  Outside
the regions above (including the perfect-matching order n = 2t, where the
matching value is known but has no closed form here) the functions refuse
rather than guess.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt

from .errors import OutOfRegionError


class RegionTag(enum.Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    OUTSIDE = "outside"


def _check_nonneg(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int):
            raise TypeError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def ar_matching(n: int, t: int) -> int:
    """AR(n, tP2) for t >= 2 and n >= 2t+1.

    Small hosts take (t-2)(2t-3)+1; once 2n >= 5t-7 the value grows linearly
    as (t-2)(n-(t-1)/2)+1, computed by doubling so the arithmetic stays in
    integers.  The two branches agree at 2n = 5t-7.
    """
    _check_nonneg(n=n, t=t)
    if t < 2:
        raise OutOfRegionError(f"ar_matching needs t >= 2, got t={t}")
    if n < 2 * t + 1:
        raise OutOfRegionError(
            f"ar_matching needs n >= 2t+1 = {2 * t + 1}, got n={n}"
            + (" (the perfect-matching order n = 2t has no closed form here)"
               if n == 2 * t else "")
        )
    if 2 * n <= 5 * t - 7:
        return (t - 2) * (2 * t - 3) + 1
    twice = (t - 2) * (2 * n - t + 1)
    assert twice % 2 == 0  # t-2 and 2n-t+1 have opposite parity
    return twice // 2 + 1


def interval_lower(k: int, t: int) -> int:
    """Left endpoint g of the host-order interval; defined for any k, t >= 0."""
    _check_nonneg(k=k, t=t)
    return 8 * k + 2 * t - 4


def interval_bounds(k: int, t: int) -> tuple[int, Fraction]:
    """The (g, f) endpoints of the THEOREM2 host-order interval.

    Requires k >= t so the denominator 2k-2t+2 is positive.
    """
    if k < t:
        raise OutOfRegionError(f"interval_bounds needs k >= t, got k={k}, t={t}")
    g = interval_lower(k, t)
    f = Fraction(7 * k * k + 8 * k * t - t * t + 23 * k - t - 18, 2 * k - 2 * t + 2)
    return g, f


def floor_f(k: int, t: int) -> int:
    """Largest integer n not exceeding f(k,t)."""
    _, f = interval_bounds(k, t)
    return f.numerator // f.denominator


def interval_nonempty(k: int, t: int) -> bool:
    """Whether g(k,t) <= f(k,t), decided by the cross-multiplied integer form.

    g <= f is equivalent (for k >= t, positive denominator) to
    9k^2 - 20kt - 15k - 3t^2 + 13t + 10 <= 0; no rationals needed.
    """
    _check_nonneg(k=k, t=t)
    if k < t:
        raise OutOfRegionError(f"interval_nonempty needs k >= t, got k={k}, t={t}")
    if t < 2:
        raise OutOfRegionError(f"interval_nonempty needs t >= 2, got t={t}")
    return 9 * k * k - 20 * k * t - 15 * k - 3 * t * t + 13 * t + 10 <= 0


def largest_k_with_nonempty_interval(t: int) -> int:
    """The largest k >= t for which the THEOREM2 interval is nonempty.

    The quadratic in the nonemptiness predicate opens upward, so the feasible
    k form a contiguous range [t, K]; K is floor((20t+15+sqrt(D))/18) with
    D = 508t^2+132t-135.  isqrt keeps this exact: no integer can sit strictly
    between sqrt(D) and isqrt(D), so flooring commutes with the division.
    """
    _check_nonneg(t=t)
    if t < 2:
        raise OutOfRegionError(f"needs t >= 2, got t={t}")
    d = 508 * t * t + 132 * t - 135
    return (20 * t + 15 + isqrt(d)) // 18


def classify_region(k: int, t: int, n: int) -> RegionTag:
    """Which parameter family, if any, pins down AR(n, kP4 union tP2).

    THEOREM1 is checked first; the two families are disjoint anyway, since
    one requires t >= k+1 and the other k >= t.
    """
    _check_nonneg(k=k, t=t, n=n)
    if t >= k + 1 >= 2 and n >= 8 * k + 2 * t - 4:
        return RegionTag.THEOREM1
    if k >= t >= 2:
        g, f = interval_bounds(k, t)
        if g <= n and n <= f:
            return RegionTag.THEOREM2
    return RegionTag.OUTSIDE


def ar_linear_forest(k: int, t: int, n: int) -> int:
    """AR(n, kP4 union tP2) on the two covered regions.

    On both regions the forest value equals the matching value for 2k+t
    edges, so this delegates to ar_matching, which picks the right branch.
    The single in-region host order where that value has no closed form is
    n = 2(2k+t) (reachable only at k = 1, the left edge of THEOREM1); that
    point raises rather than returning a guess.
    """
    region = classify_region(k, t, n)
    if region is RegionTag.OUTSIDE:
        raise OutOfRegionError(_outside_reason(k, t, n))
    m = 2 * k + t
    if n == 2 * m:
        raise OutOfRegionError(
            f"n={n} = 2(2k+t): the forest value equals the matching value "
            f"AR({n}, {m}P2) there, but that perfect-matching order has no "
            f"closed form here"
        )
    if region is RegionTag.THEOREM2:
        # always the linear branch there: n >= 8k+2t-4 forces 2n >= 5m-7
        assert n >= 2 * m + 1 and 2 * n >= 5 * m - 7
    return ar_matching(n, m)


def _outside_reason(k: int, t: int, n: int) -> str:
    if t >= k + 1 >= 2:
        return (f"t >= k+1 holds but n={n} < 8k+2t-4 = {8 * k + 2 * t - 4}")
    if k >= t >= 2:
        g, f = interval_bounds(k, t)
        if not interval_nonempty(k, t):
            return (f"k >= t holds but the interval is empty: g={g} > f={f}")
        if n < g:
            return f"k >= t holds but n={n} < g = {g}"
        return f"k >= t holds but n={n} > f = {f}"
    if k == 0:
        return "k=0 leaves a pure matching; use ar_matching"
    return (f"neither t >= k+1 >= 2 nor k >= t >= 2 holds for k={k}, t={t}")


def mu_beta(k: int, t: int, n: int) -> tuple[int, int, int]:
    """The proof-ledger triple (mu, beta1, beta2), exactly.

    mu is the color-count target, one more than the closed-form value when
    the latter is defined; beta1 and beta2 are the two case bounds it must
    exceed.  All three are integers for every integer input (each doubled
    numerator is even), computed by doubling.
    """
    _check_nonneg(k=k, t=t, n=n)
    mu2 = (2 * k + t - 2) * (2 * n - 2 * k - t + 1) + 4
    b12 = 6 * k * n + 6 * t + 18 - 11 * k * k - 12 * k * t - 19 * k - 2 * n
    b22 = 4 * k * n + 12 - 3 * k * k - 6 * k * t - 21 * k
    assert mu2 % 2 == 0 and b12 % 2 == 0 and b22 % 2 == 0
    return mu2 // 2, b12 // 2, b22 // 2
