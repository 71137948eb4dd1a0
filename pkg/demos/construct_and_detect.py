"""Build an extremal coloring, check it is rainbow-free, then break it.

The two-layer construction at (k, t, n) = (1, 2, 12) realizes the formula
value of 22 colors with no rainbow P4+2xP2.  Splitting any color class
pushes the count to 23 > AR, so a rainbow copy must appear; the detector
finds one.

Run: python3 demos/construct_and_detect.py
"""

from antiramsey.construct import construct_forest_avoider
from antiramsey.detect import find_rainbow
from antiramsey.formulas import ar_linear_forest
from antiramsey.model import (coloring_from_raw, parse_forest,
                              validate_embedding)


def main():
    k, t, n = 1, 2, 12
    forest = parse_forest("P4+2xP2")
    coloring = construct_forest_avoider(k, t, n)
    print(f"construction at n={n} for {forest}: "
          f"{coloring.color_count} colors")
    print(f"formula value: {ar_linear_forest(k, t, n)}")

    copy = find_rainbow(coloring, forest)
    print(f"rainbow copy in the construction: {copy}")
    assert copy is None

    # split one class: recolor a single edge with a fresh color
    raw = list(coloring.colors)
    fresh = coloring.color_count
    victim = max(range(len(raw)), key=lambda e: raw.count(raw[e]))
    raw[victim] = fresh
    broken = coloring_from_raw(n, raw)
    print(f"\nafter splitting one class: {broken.color_count} colors")
    copy = find_rainbow(broken, forest)
    assert copy is not None
    validate_embedding(copy, broken, forest)
    for path in copy.paths:
        colors = [broken.color_of(u, v) for u, v in zip(path, path[1:])]
        print(f"  rainbow path {path} uses colors {colors}")


if __name__ == "__main__":
    main()
