"""Extremal colorings: as many colors as possible with no rainbow matching.

Two classical families cover both branches of the matching formula:

  star cover    a small vertex set S gets a fresh color on every edge it
                touches; all edges avoiding S share one color.  A matching of
                t edges has at most |S| edges meeting S (disjoint edges need
                distinct S-vertices), so with |S| = t-2 at least two of its
                edges land in the shared class.

  rainbow clique  all edges inside a K_{2t-3} are fresh; the rest share one
                color.  A clique that small holds at most t-2 disjoint edges,
                so again two matching edges share the outside color.

Neither family is taken on faith: the test suite re-verifies rainbow-freeness
with the detector and the color counts against the closed form.
"""

from __future__ import annotations

from .errors import OutOfRegionError
from .formulas import RegionTag, classify_region, _outside_reason
from .model import EdgeColoring, coloring_from_raw, edge_count, edge_index


def star_cover_coloring(n: int, s: int) -> EdgeColoring:
    """Fresh colors on all edges meeting {0..s-1}; one shared color elsewhere.

    Needs s <= n-2 so the shared class is nonempty (colors must be used).
    Color count: s(n-s) + s(s-1)/2 + 1.
    """
    if not (0 <= s <= n - 2):
        raise ValueError(f"need 0 <= s <= n-2, got s={s}, n={n}")
    raw = [0] * edge_count(n)
    nxt = 1
    for u in range(s):
        for v in range(u + 1, n):
            raw[edge_index(n, u, v)] = nxt
            nxt += 1
    return coloring_from_raw(n, raw)


def rainbow_clique_coloring(n: int, r: int) -> EdgeColoring:
    """Fresh colors inside the clique {0..r-1}; one shared color elsewhere.

    Needs r <= n-1 so at least one edge leaves the clique.
    Color count: r(r-1)/2 + 1.
    """
    if not (0 <= r <= n - 1):
        raise ValueError(f"need 0 <= r <= n-1, got r={r}, n={n}")
    raw = [0] * edge_count(n)
    nxt = 1
    for u in range(r):
        for v in range(u + 1, r):
            raw[edge_index(n, u, v)] = nxt
            nxt += 1
    return coloring_from_raw(n, raw)


def construct_matching(n: int, t: int) -> EdgeColoring:
    """An extremal coloring of K_n with no rainbow tP2.

    Valid for t >= 2, n >= 2t+1, matching the closed form's region.  Large
    hosts (2n >= 5t-7) get the star cover on t-2 vertices; small hosts the
    rainbow K_{2t-3}.  At the branch threshold both counts agree and the
    star cover is returned.
    """
    if t < 2:
        raise OutOfRegionError(f"construct_matching needs t >= 2, got t={t}")
    if n < 2 * t + 1:
        raise OutOfRegionError(
            f"construct_matching needs n >= 2t+1 = {2 * t + 1}, got n={n}"
        )
    if 2 * n >= 5 * t - 7:
        return star_cover_coloring(n, t - 2)
    return rainbow_clique_coloring(n, 2 * t - 3)


def construct_forest_avoider(k: int, t: int, n: int) -> EdgeColoring:
    """An extremal coloring of K_n with no rainbow kP4 union tP2.

    Any rainbow copy of the forest contains a rainbow (2k+t)P2, so a coloring
    free of that matching is free of the forest; on the covered regions the
    color counts coincide, making this a tight witness.  The one in-region
    host order the matching constructor refuses, n = 2(2k+t), still admits
    the star cover (the freeness argument needs only n >= 2t); its count is a
    lower-bound certificate there, with no closed form to compare against.
    """
    region = classify_region(k, t, n)
    if region is RegionTag.OUTSIDE:
        raise OutOfRegionError(_outside_reason(k, t, n))
    m = 2 * k + t
    if n == 2 * m:
        return star_cover_coloring(n, m - 2)
    return construct_matching(n, m)
