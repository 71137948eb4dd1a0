"""Desk-check the arithmetic backbone: counts, bounds, and sharpness.

Three exhaustive scans over exact rationals:
  * the worst-case color count omega stays at or under the budget that
    the surviving-vertex bound provides, for every composition;
  * recombining the two count contributions lands exactly on the first
    benchmark (and misses the second by a fixed surplus);
  * on every host order in [g, floor(f)] the new bound exceeds both
    benchmarks, with the documented gap identity, and the gap dies
    right after f.

Run: python3 demos/proof_ledger.py
"""

from antiramsey.claimcheck import (bounds_ledger, verify_beta_identity,
                                   verify_claim8, verify_region)
from antiramsey.formulas import mu_beta


def main():
    report = verify_claim8(5, 4, 8)
    print(f"omega budget scan: {report.checked} compositions, "
          f"ok = {report.ok}")
    for row in report.rows[:4]:
        print(f"  k={row.k} t={row.t} vprime in "
              f"[{row.vprime_lo}, {row.vprime_hi}]: "
              f"{row.compositions} compositions, ok = {row.ok}")
    print()

    print("recombination at sample points (x + y against the benchmarks):")
    for k, t, n in [(2, 2, 20), (2, 2, 30), (3, 2, 28), (4, 3, 40)]:
        row = bounds_ledger(k, t, n)
        if row.uses_3vprime:
            print(f"  k={k} t={t} n={n}: 3v' branch, "
                  f"x + y = beta1 = {row.beta1} exactly")
        else:
            print(f"  k={k} t={t} n={n}: 2(v'+t+3) branch, "
                  f"x + y - beta2 = {row.residual_beta2} "
                  f"(= kt + 3k - t - 3)")
    print()

    identity = verify_beta_identity(30)
    print(f"dense identity scan: {identity.points} points, "
          f"ok = {identity.ok}")
    print()

    region = verify_region(12, 12)
    print(f"region scan: {region.triples} host orders, ok = {region.ok}")
    print("sample rows (gap at floor(f), gap just past f):")
    for k, t in [(2, 2), (4, 3), (5, 2), (12, 9)]:
        row = region.row(k, t)
        print(f"  k={k} t={t}: g={row.g} f={row.f} "
              f"n_points={row.n_count} gap_at_floor={row.gap_at_floor} "
              f"gap_beyond={row.gap_beyond}")
    print()

    mu, b1, b2 = mu_beta(2, 2, 41)
    print(f"the cutoff in numbers: mu(2,2,41) = {mu}, "
          f"beta1 = {b1} (gap 1), and at n = 42 the gap closes:")
    mu, b1, _ = mu_beta(2, 2, 42)
    print(f"  mu(2,2,42) = {mu}, beta1 = {b1} (gap {mu - b1})")


if __name__ == "__main__":
    main()
