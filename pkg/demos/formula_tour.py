"""Walk through the closed forms: matchings, linear forests, intervals.

Run: python3 demos/formula_tour.py
"""

from antiramsey.errors import OutOfRegionError
from antiramsey.formulas import (ar_linear_forest, ar_matching,
                                 classify_region, interval_bounds,
                                 interval_nonempty,
                                 largest_k_with_nonempty_interval)


def main():
    print("anti-Ramsey numbers of matchings, t = 4")
    print("  n   AR(n, 4xP2)   branch")
    for n in range(9, 18):
        value = ar_matching(n, 4)
        # 2n <= 5t - 7 picks the flat branch
        branch = "flat" if 2 * n <= 5 * 4 - 7 else "linear"
        print(f"  {n:2d}   {value:6d}        {branch}")
    print()

    print("the flat branch is live for larger t, e.g. t = 9:")
    for n in range(19, 24):
        branch = "flat" if 2 * n <= 5 * 9 - 7 else "linear"
        print(f"  AR({n}, 9xP2) = {ar_matching(n, 9):3d}  ({branch})")
    print()

    print("linear forests reduce to the matching at 2k + t edges:")
    for k, t, n in [(1, 2, 12), (2, 2, 16), (2, 2, 20), (3, 2, 28)]:
        value = ar_linear_forest(k, t, n)
        shadow = ar_matching(n, 2 * k + t)
        print(f"  AR({n}, {k}xP4+{t}xP2) = {value}  "
              f"(= AR({n}, {2 * k + t}xP2) = {shadow})")
    print()

    print("the formula refuses the perfect-matching order n = 2(2k+t):")
    try:
        ar_linear_forest(1, 2, 8)
    except OutOfRegionError as exc:
        print(f"  AR(8, P4+2xP2): {exc}")
    print()

    print("host-order intervals [g, f] and where they stay nonempty:")
    for k, t in [(2, 2), (4, 3), (5, 2), (8, 6)]:
        if not interval_nonempty(k, t):
            print(f"  k={k} t={t}: empty")
            continue
        g, f = interval_bounds(k, t)
        tag = classify_region(k, t, g)
        print(f"  k={k} t={t}: [{g}, {f}]  n={g} lies in {tag.value}")
    tag = classify_region(1, 8, 21)
    print(f"  k=1 t=8 n=21 lies in {tag.value} (flat-branch territory)")
    print()

    print("largest k with a nonempty interval, by t:")
    for t in (2, 5, 10, 50, 200):
        print(f"  t={t:3d}: k_max = {largest_k_with_nonempty_interval(t)}")


if __name__ == "__main__":
    main()
