"""Exact verification of the counting arguments behind the closed forms.

The contradiction at the heart of the region theorems compares a color
count target mu against two case bounds beta1, beta2 over the host-order
interval [g, f].  This module recomputes every ingredient with exact
integer and rational arithmetic and scans the full parameter boxes, so a
single sign slip anywhere in the ledger would surface as a report row.

Checks covered:

* the layer objective Omega(S) is maximized by the all-ones layer vector,
  by brute force over every composition (Claim 8's statement);
* the candidate-edge bounds x <= 2n-8k-3t+2 and the y bound built from
  (13k-14)(k-1)/2 plus a per-layer maximum recombine into beta1 exactly
  when the maximum resolves to 3|V'|; in the other branch the difference
  against beta2 is reported, not asserted, since the bound as printed
  does not reduce to beta2 term by term;
* mu > max{beta1, beta2} on every integer point of [g, f], along with the
  exact gap identity mu - beta1 = (k-t+1)(f+1-n), which pins the cutoff:
  positive at floor(f), nonpositive once n reaches ceil(f)+1;
* endpoint bookkeeping: g(k,t) - g(k-l, t+2l) equals 4l for the displayed
  g (the prose says 2l; the formulas decide), f(k,t) <= f(k-1, t+2)
  whenever k >= t+3, and the implication that any n <= 4k+3t+3 inside the
  interval forces 4k <= t+7.

No floating point, no symbolic algebra: polynomial identities of degree
two are confirmed by dense evaluation over integer boxes wider than the
degree, which is a complete proof for polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formulas import (interval_bounds, interval_lower, interval_nonempty,
                       mu_beta)


@dataclass(frozen=True)
class OmegaInput:
    """Layer sizes S, the outside-vertex count, and the matching size t."""

    s: tuple[int, ...]
    vprime: int
    t: int

    def __post_init__(self) -> None:
        if len(self.s) < 1:
            raise ValueError("need at least one layer")
        if any(x < 1 for x in self.s):
            raise ValueError("layer sizes must be positive")
        if self.vprime < 0:
            raise ValueError("vprime must be nonnegative")
        if self.t < 2:
            raise ValueError("need t >= 2")

    @property
    def k(self) -> int:
        return 1 + sum(self.s)

    @property
    def h1_size(self) -> int:
        return 4 * (self.k - 1)


def alpha(fi: int, vprime: int, t: int) -> int:
    """Per-layer color allowance, split on the layer size."""
    if fi < 1:
        raise ValueError(f"layer size must be positive, got {fi}")
    if fi >= 3:
        return max(3 * vprime, 2 * (vprime + t + 2))
    if fi == 2:
        return max(5 * vprime, 2 * (vprime + t + 2))
    return max(3 * vprime, 2 * (vprime + t + 3))


def omega(inp: OmegaInput) -> int:
    """Sum of the layer allowances plus the positional weight 3*fi*(i-1)."""
    total = 0
    for i, fi in enumerate(inp.s):
        total += alpha(fi, inp.vprime, inp.t) + 3 * fi * i
    return total


def _compositions(m: int):
    # ordered tuples of positive integers summing to m, lexicographic
    def rec(rest: int, prefix: list):
        if rest == 0:
            yield tuple(prefix)
            return
        for first in range(1, rest + 1):
            prefix.append(first)
            yield from rec(rest - first, prefix)
            prefix.pop()

    yield from rec(m, [])


@dataclass(frozen=True)
class Claim8Row:
    k: int
    t: int
    vprime_lo: int
    vprime_hi: int
    compositions: int
    ok: bool
    witness: str  # empty on pass


@dataclass(frozen=True)
class Claim8Report:
    k_max: int
    t_max: int
    vprime_extra: int
    rows: tuple[Claim8Row, ...]
    checked: int

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def violations(self) -> int:
        return sum(not row.ok for row in self.rows)

    def tsv_rows(self) -> list[str]:
        out = ["k\tt\tvprime\tcompositions\tstatus\twitness"]
        for r in self.rows:
            status = "pass" if r.ok else "FAIL"
            out.append(f"{r.k}\t{r.t}\t{r.vprime_lo}..{r.vprime_hi}\t"
                       f"{r.compositions}\t{status}\t{r.witness}")
        return out


def verify_claim8(k_max: int, t_max: int, vprime_extra: int) -> Claim8Report:
    """Brute-force the all-ones maximality of Omega over every composition.

    For each k <= k_max, t <= t_max and every vprime from 4(k-1) (the
    stated lower boundary) through 4(k-1)+vprime_extra, compares the
    all-ones layer vector against all 2^(k-2) compositions of k-1.
    """
    if k_max < 2:
        raise ValueError("need k_max >= 2")
    if t_max < 2:
        raise ValueError("need t_max >= 2")
    if vprime_extra < 0:
        raise ValueError("need vprime_extra >= 0")
    rows = []
    checked = 0
    for k in range(2, k_max + 1):
        comps = list(_compositions(k - 1))
        ones = (1,) * (k - 1)
        for t in range(2, t_max + 1):
            lo = 4 * (k - 1)
            hi = lo + vprime_extra
            witness = ""
            for vprime in range(lo, hi + 1):
                best = omega(OmegaInput(ones, vprime, t))
                for s in comps:
                    checked += 1
                    if omega(OmegaInput(s, vprime, t)) > best:
                        witness = f"S={s} vprime={vprime}"
                        break
                if witness:
                    break
            rows.append(Claim8Row(k, t, lo, hi, len(comps),
                                  not witness, witness))
    return Claim8Report(k_max, t_max, vprime_extra, tuple(rows), checked)


@dataclass(frozen=True)
class BoundsCheck:
    """The two candidate-edge bounds at one (k, t, n), with the recombination
    against beta1/beta2."""

    k: int
    t: int
    n: int
    vprime: int
    x_bound: int
    y_bound: int
    uses_3vprime: bool  # which branch the y maximum resolved to
    beta1: int
    beta2: int
    identity_holds: bool | None  # x+y == beta1; None when the branch differs
    residual_beta2: int | None  # x+y - beta2 in the other branch


def bounds_ledger(k: int, t: int, n: int) -> BoundsCheck:
    if k < 1:
        raise ValueError("need k >= 1")
    vprime = n - 4 * k - 2 * t
    x = 2 * n - 8 * k - 3 * t + 2
    half = (13 * k - 14) * (k - 1)
    assert half % 2 == 0
    branch3 = 3 * vprime
    branch2 = 2 * (vprime + t + 3)
    y = half // 2 + (k - 1) * max(branch3, branch2)
    _, b1, b2 = mu_beta(k, t, n)
    uses3 = branch3 >= branch2
    if uses3:
        return BoundsCheck(k, t, n, vprime, x, y, True, b1, b2,
                           identity_holds=(x + y == b1), residual_beta2=None)
    return BoundsCheck(k, t, n, vprime, x, y, False, b1, b2,
                       identity_holds=None, residual_beta2=x + y - b2)


@dataclass(frozen=True)
class RegionRow:
    k: int
    t: int
    g: int
    f: Fraction
    n_count: int  # integer points scanned in [g, floor(f)]
    gap_at_floor: int | None  # mu - beta1 at n = floor(f)
    gap_beyond: int | None  # mu - beta1 at n = ceil(f) + 1
    ok: bool
    detail: str  # empty on pass


@dataclass(frozen=True)
class RegionReport:
    k_max: int
    t_max: int
    rows: tuple[RegionRow, ...]
    triples: int

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def violations(self) -> int:
        return sum(not row.ok for row in self.rows)

    def row(self, k: int, t: int) -> RegionRow:
        for r in self.rows:
            if r.k == k and r.t == t:
                return r
        raise KeyError(f"(k={k}, t={t}) not scanned")

    def tsv_rows(self) -> list[str]:
        out = ["k\tt\tg\tf\tn_points\tgap_at_floor\tgap_beyond\tstatus"
               "\tdetail"]
        for r in self.rows:
            status = "pass" if r.ok else "FAIL"
            gaf = "" if r.gap_at_floor is None else str(r.gap_at_floor)
            gb = "" if r.gap_beyond is None else str(r.gap_beyond)
            out.append(f"{r.k}\t{r.t}\t{r.g}\t{r.f}\t{r.n_count}\t{gaf}\t"
                       f"{gb}\t{status}\t{r.detail}")
        return out


def verify_region(k_max: int, t_max: int) -> RegionReport:
    """Exact scan of mu > max{beta1, beta2} over the whole integer region.

    For every 2 <= t <= k <= k_max with a nonempty interval, checks each
    integer n in [g, floor(f)], the exact gap identity
    mu - beta1 = (k-t+1)(f+1-n), and the sharpness of the cutoff.  The
    endpoint identities (g difference, f monotonicity, the 4k <= t+7
    implication) run for every scanned (k, t) pair.
    """
    if k_max < t_max or t_max < 2:
        raise ValueError("need k_max >= t_max >= 2")
    rows = []
    triples = 0
    for t in range(2, t_max + 1):
        for k in range(t, k_max + 1):
            g, f = interval_bounds(k, t)
            problems = []

            for l in range(1, k - t + 2):
                lhs = g - interval_lower(k - l, t + 2 * l)
                if lhs != 4 * l:
                    problems.append(f"g difference at l={l}: {lhs} != {4*l}")
            if k >= t + 3:
                f_next = interval_bounds(k - 1, t + 2)[1]
                if not f <= f_next:
                    problems.append(f"f not monotone: {f} > {f_next}")

            n_count = 0
            gap_floor = None
            gap_beyond = None
            if interval_nonempty(k, t):
                lo, hi = g, f.numerator // f.denominator
                if lo <= min(hi, 4 * k + 3 * t + 3) and 4 * k > t + 7:
                    problems.append(
                        f"n <= 4k+3t+3 admitted but 4k={4*k} > t+7={t+7}")
                for n in range(lo, hi + 1):
                    triples += 1
                    n_count += 1
                    mu, b1, b2 = mu_beta(k, t, n)
                    if not (mu > b1 and mu > b2):
                        problems.append(
                            f"mu <= max(beta1, beta2) at n={n}: "
                            f"{mu} vs {b1}, {b2}")
                        break
                    if Fraction(mu - b1) != (k - t + 1) * (f + 1 - n):
                        problems.append(f"gap identity fails at n={n}")
                        break
                if not problems:
                    mu, b1, _ = mu_beta(k, t, hi)
                    gap_floor = mu - b1
                    beyond = -(-f.numerator // f.denominator) + 1  # ceil(f)+1
                    mu, b1, _ = mu_beta(k, t, beyond)
                    gap_beyond = mu - b1
                    if gap_floor <= 0:
                        problems.append(
                            f"gap not positive at floor(f)={hi}: {gap_floor}")
                    if gap_beyond > 0:
                        problems.append(
                            f"gap still positive at n={beyond}: {gap_beyond}")
            rows.append(RegionRow(k, t, g, f, n_count, gap_floor, gap_beyond,
                                  not problems, "; ".join(problems)))
    return RegionReport(k_max, t_max, tuple(rows), triples)


@dataclass(frozen=True)
class BetaIdentityReport:
    max: int
    points: int
    ok: bool
    first_failure: str  # empty when ok

    def tsv_rows(self) -> list[str]:
        status = "pass" if self.ok else "FAIL"
        return ["max\tpoints\tstatus\tdetail",
                f"{self.max}\t{self.points}\t{status}\t{self.first_failure}"]


def verify_beta_identity(max: int = 60) -> BetaIdentityReport:
    """Dense polynomial check of both recombinations.

    Over every 1 <= k <= max, 2 <= t <= max, 0 <= n <= max (far more
    points than the degree, so agreement proves the polynomial identity):
    x + y with the 3|V'| branch equals beta1, and x + y with the other
    branch leaves exactly kt + 3k - t - 3 over beta2.
    """
    if max < 3:
        raise ValueError("need max >= 3 to exceed the polynomial degree")
    points = 0
    for k in range(1, max + 1):
        half = (13 * k - 14) * (k - 1)
        assert half % 2 == 0
        base = half // 2
        for t in range(2, max + 1):
            for n in range(0, max + 1):
                points += 1
                vprime = n - 4 * k - 2 * t
                x = 2 * n - 8 * k - 3 * t + 2
                y3 = base + (k - 1) * 3 * vprime
                y2 = base + (k - 1) * 2 * (vprime + t + 3)
                _, b1, b2 = mu_beta(k, t, n)
                if x + y3 != b1:
                    return BetaIdentityReport(
                        max, points, False,
                        f"x+y(3v') != beta1 at k={k} t={t} n={n}")
                if x + y2 - b2 != k * t + 3 * k - t - 3:
                    return BetaIdentityReport(
                        max, points, False,
                        f"beta2 residual differs at k={k} t={t} n={n}")
    return BetaIdentityReport(max, points, True, "")
