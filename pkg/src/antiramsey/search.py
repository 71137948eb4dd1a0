"""Randomized lower-bound search and a probe for the matching conjecture.

``search_lower_bound`` looks for colorings of K_n with many colors and no
rainbow copy of a target forest.  Every answer ships as a ``Certificate``
that re-runs the detector on construction, so a returned bound is proven,
not merely sampled.

The walk starts from the best valid member of a fixed candidate list
(monochromatic, star covers, rainbow cliques, and the closed-form
constructions when they apply) and then climbs by color splits: recolor
one edge with a brand-new color and keep the change when no rainbow copy
appears through that edge.  Copies elsewhere kept their colors, so the
anchored check is complete.  Merging two classes can never create a
rainbow copy, which makes merges a free stagnation escape.

``conjecture_probe`` compares lower bounds for k paths P4 plus t edges
against those for the matching with the same edge count, in the region
where the two anti-Ramsey values are conjectured to agree, and flags any
certificate that would separate them.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .construct import (construct_forest_avoider, construct_matching,
                        rainbow_clique_coloring, star_cover_coloring)
from .detect import DetectBudget, find_rainbow, has_rainbow_using_edge
from .errors import BudgetExceededError, OutOfRegionError
from .formulas import ar_linear_forest, ar_matching
from .model import (EdgeColoring, LinearForest, coloring_from_raw,
                    edge_count, edge_endpoints, linear_forest)


@dataclass(frozen=True)
class SearchConfig:
    seed: int
    restarts: int = 8
    moves_per_restart: int = 400
    detect_nodes: int | None = None

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.moves_per_restart < 0:
            raise ValueError("moves_per_restart must be nonnegative")
        if self.detect_nodes is not None and self.detect_nodes < 1:
            raise ValueError("detect_nodes must be at least 1")


@dataclass(frozen=True)
class Certificate:
    """A validated lower bound: the coloring is re-checked on construction."""

    coloring: EdgeColoring
    forest: LinearForest
    colors: int

    def __post_init__(self) -> None:
        if self.colors != self.coloring.color_count:
            raise ValueError("claimed color count disagrees with coloring")
        if find_rainbow(self.coloring, self.forest) is not None:
            raise ValueError("coloring contains a rainbow copy of the forest")


def _candidate_colorings(n: int, forest: LinearForest):
    yield EdgeColoring(n, (0,) * edge_count(n))
    for s in range(1, min(n - 2, 8) + 1):
        yield star_cover_coloring(n, s)
    for r in range(2, min(n - 1, 12) + 1):
        yield rainbow_clique_coloring(n, r)
    parts = forest.components()
    if all(m == 2 for m in parts):
        try:
            yield construct_matching(n, len(parts))
        except (OutOfRegionError, ValueError):
            pass
    if set(parts) <= {2, 4} and 4 in parts:
        k = parts.count(4)
        t = parts.count(2)
        try:
            yield construct_forest_avoider(k, t, n)
        except (OutOfRegionError, ValueError):
            pass


def _best_start(n: int, forest: LinearForest,
                detect_nodes: int | None) -> EdgeColoring:
    budget = None if detect_nodes is None else DetectBudget(detect_nodes)
    best = None
    for cand in _candidate_colorings(n, forest):
        if best is not None and cand.color_count <= best.color_count:
            continue
        try:
            if find_rainbow(cand, forest, budget) is None:
                best = cand
        except BudgetExceededError:
            pass  # cannot validate within budget, so do not trust it
    assert best is not None  # the monochromatic coloring always qualifies
    return best


def _climb(n: int, forest: LinearForest, start: tuple[int, ...],
           rng: random.Random, moves: int) -> tuple[int, tuple[int, ...]]:
    """One random walk; returns the best (color count, normalized colors)."""
    total = edge_count(n)
    raw = list(start)
    count = len(set(raw))
    nxt = max(raw) + 1
    best_count = count
    best = coloring_from_raw(n, raw).colors
    stall = max(1, moves // 10)
    rejects = 0
    for _ in range(moves):
        if rejects >= stall and count >= 2:
            # merge two classes; fewer distinctions cannot create a
            # rainbow copy, so no check is needed
            a, b = rng.sample(sorted(set(raw)), 2)
            for e in range(total):
                if raw[e] == b:
                    raw[e] = a
            count -= 1
            rejects = 0
            continue
        e = rng.randrange(total)
        old = raw[e]
        if sum(1 for x in raw if x == old) < 2:
            rejects += 1
            continue
        u, v = edge_endpoints(n, e)
        raw[e] = nxt
        if has_rainbow_using_edge(n, raw, forest, u, v):
            raw[e] = old
            rejects += 1
            continue
        nxt += 1
        count += 1
        rejects = 0
        if count > best_count:
            best_count = count
            best = coloring_from_raw(n, raw).colors
    return best_count, best


def search_lower_bound(n: int, forest: LinearForest, config: SearchConfig,
                       threads: int = 1) -> Certificate:
    """Best rainbow-free coloring found; deterministic for a given seed.

    The result never depends on the thread count: restarts are reduced by
    color count first, then by restart index, then lexicographically.
    """
    if forest.total_vertices > n:
        raise ValueError(
            f"forest needs {forest.total_vertices} vertices, K_{n} has {n}")
    if forest.total_edges < 2:
        raise ValueError("forest must have at least two edges; a lone edge "
                         "is rainbow in every coloring")
    start = _best_start(n, forest, config.detect_nodes)

    def one(r: int) -> tuple[int, tuple[int, ...]]:
        rng = random.Random(config.seed * 1000003 + r)
        return _climb(n, forest, start.colors, rng, config.moves_per_restart)

    if threads <= 1:
        outcomes = [one(r) for r in range(config.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(one, range(config.restarts)))

    best_count, best = start.color_count, start.colors
    for count, colors in outcomes:
        if count > best_count or (count == best_count and colors < best):
            best_count, best = count, colors
    return Certificate(EdgeColoring(n, best), forest, best_count)


@dataclass(frozen=True)
class ProbeReport:
    k: int
    t: int
    n: int
    forest_certificate: Certificate
    matching_certificate: Certificate
    forest_formula: int | None
    matching_formula: int | None
    exceeds: bool


def conjecture_probe(k: int, t: int, n: int, config: SearchConfig,
                     threads: int = 1) -> ProbeReport:
    """Search both k paths P4 plus t edges and the matching (2k+t) edges.

    Valid in the region where the two values are conjectured equal:
    n >= 4k + 2t with k >= 1 (t may be zero).  A forest certificate above
    the exact matching value would separate the two and is flagged.
    """
    if k < 1 or t < 0:
        raise ValueError("need k >= 1 and t >= 0")
    if n < 4 * k + 2 * t:
        raise OutOfRegionError(
            f"n={n} < 4k+2t = {4 * k + 2 * t}: outside the conjectured "
            f"agreement region")
    forest = linear_forest(k, t)
    matching = linear_forest(0, 2 * k + t)
    fcert = search_lower_bound(n, forest, config, threads)
    mcert = search_lower_bound(n, matching, config, threads)
    try:
        fform = ar_linear_forest(k, t, n)
    except (OutOfRegionError, ValueError):
        fform = None
    try:
        mform = ar_matching(n, 2 * k + t)
    except (OutOfRegionError, ValueError):
        mform = None
    exceeds = mform is not None and fcert.colors > mform
    return ProbeReport(k=k, t=t, n=n, forest_certificate=fcert,
                       matching_certificate=mcert, forest_formula=fform,
                       matching_formula=mform, exceeds=exceeds)
