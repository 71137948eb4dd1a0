"""Exact anti-Ramsey values by exhaustive search over edge colorings.

The core question is a decision problem: does K_n admit a surjective
c-coloring of its edges with no rainbow copy of a given linear forest?
Colorings are enumerated as restricted-growth strings over the edges in
index order, which picks exactly one representative per color-relabeling
class.  Two further reductions keep the tree small:

* every time an edge receives a color we look for a rainbow copy through
  that edge only.  A prefix that was rainbow-free can only have gained a
  copy through its newest edge, so the check is complete, and anchored
  searches are far cheaper than whole-prefix scans;
* the colors along the star at vertex 0 may be assumed non-decreasing.
  Relabeling the other n-1 vertices sorts that star and maps colorings
  onto colorings, so nothing is lost.

``ar_exact`` climbs from a constructive rainbow-free seed: if some
surjective c-coloring avoids the forest, merging two of its classes gives
an avoiding (c-1)-coloring, so the feasible c form an interval and the
first failure settles the value.

Node budgets count color-assignment attempts.  With more than one worker
the tree is split at a fixed prefix depth and subtrees run concurrently;
the witness reported is the one from the lexicographically least subtree,
so results do not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from threading import Lock

from .detect import find_rainbow, has_rainbow_using_edge
from .errors import BudgetExceededError
from .construct import star_cover_coloring
from .model import EdgeColoring, LinearForest, edge_count, edge_endpoints

_FLUSH = 256


@dataclass(frozen=True)
class ExactBudget:
    """Resource limits for one exact computation."""

    max_nodes: int = 10 ** 9
    wall_secs: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        if self.wall_secs is not None and self.wall_secs <= 0:
            raise ValueError("wall_secs must be positive")


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: EdgeColoring
    nodes: int

    def __post_init__(self) -> None:
        if self.witness.color_count != self.value:
            raise ValueError("witness color count disagrees with value")


class _Cancelled(Exception):
    # unwinds a worker whose subtree can no longer win
    pass


class _SharedBudget:
    """Node and wall-clock accounting shared by all workers of one call."""

    def __init__(self, budget: ExactBudget) -> None:
        self.limit = budget.max_nodes
        self.deadline = None
        if budget.wall_secs is not None:
            self.deadline = time.monotonic() + budget.wall_secs
        self.consumed = 0
        self.winner: int | None = None
        self._lock = Lock()

    def flush(self, batch: int) -> None:
        with self._lock:
            self.consumed += batch
            if self.consumed > self.limit:
                raise BudgetExceededError(
                    f"node budget of {self.limit} exhausted",
                    nodes=self.consumed)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError(
                "wall clock budget exhausted", nodes=self.consumed)

    def claim(self, rank: int) -> None:
        with self._lock:
            if self.winner is None or rank < self.winner:
                self.winner = rank

    def outranked(self, rank: int) -> bool:
        w = self.winner
        return w is not None and w < rank


def _decision_dfs(n: int, forest: LinearForest, c: int,
                  prefix: tuple[int, ...], shared: _SharedBudget,
                  rank: int) -> tuple[int, ...] | None:
    """Extend one restricted-growth prefix to a full avoiding c-coloring.

    Returns the lexicographically least completion, or None.  The prefix is
    assumed rainbow free; the invariant is maintained by checking for
    rainbow copies through each newly colored edge.
    """
    total = edge_count(n)
    ends = [edge_endpoints(n, i) for i in range(total)]
    colors: list[int | None] = [None] * total
    for i, col in enumerate(prefix):
        colors[i] = col
    used0 = (max(prefix) + 1) if prefix else 0
    batch = 0

    def dfs(i: int, used: int) -> tuple[int, ...] | None:
        nonlocal batch
        if i == total:
            return tuple(colors) if used == c else None
        if c - used > total - i:
            return None
        lo = 0
        if 1 <= i < n - 1:
            lo = colors[i - 1]  # star at vertex 0 kept sorted
        u, v = ends[i]
        hi = min(used + 1, c)
        for col in range(lo, hi):
            batch += 1
            if batch >= _FLUSH:
                shared.flush(batch)
                batch = 0
                if shared.outranked(rank):
                    raise _Cancelled
            colors[i] = col
            if not has_rainbow_using_edge(n, colors, forest, u, v):
                found = dfs(i + 1, used + (col == used))
                if found is not None:
                    return found
        colors[i] = None
        return None

    try:
        found = dfs(len(prefix), used0)
    except _Cancelled:
        found = None
    shared.flush(batch)
    if found is not None:
        shared.claim(rank)
    return found


def _prefixes(n: int, forest: LinearForest, c: int,
              depth: int) -> list[tuple[int, ...]]:
    """All viable restricted-growth prefixes of the given depth, in order."""
    total = edge_count(n)
    ends = [edge_endpoints(n, i) for i in range(total)]
    colors: list[int | None] = [None] * total
    out: list[tuple[int, ...]] = []

    def rec(i: int, used: int) -> None:
        if i == depth:
            out.append(tuple(colors[:depth]))
            return
        if c - used > total - i:
            return
        lo = 0
        if 1 <= i < n - 1:
            lo = colors[i - 1]
        u, v = ends[i]
        for col in range(lo, min(used + 1, c)):
            colors[i] = col
            if not has_rainbow_using_edge(n, colors, forest, u, v):
                rec(i + 1, used + (col == used))
        colors[i] = None

    rec(0, 0)
    return out


def _exists(n: int, forest: LinearForest, c: int, shared: _SharedBudget,
            threads: int) -> EdgeColoring | None:
    total = edge_count(n)
    if threads <= 1 or total <= 2:
        found = _decision_dfs(n, forest, c, (), shared, 0)
        return EdgeColoring(n, found) if found is not None else None

    depth = 1
    prefixes = _prefixes(n, forest, c, depth)
    while depth < min(total, 8) and len(prefixes) < 3 * threads:
        depth += 1
        prefixes = _prefixes(n, forest, c, depth)
    if not prefixes:
        return None

    errors: list[BaseException] = []
    results: list[tuple[int, ...] | None] = [None] * len(prefixes)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_decision_dfs, n, forest, c, p, shared, r)
                   for r, p in enumerate(prefixes)]
        for r, fut in enumerate(futures):
            try:
                results[r] = fut.result()
            except BudgetExceededError as exc:
                errors.append(exc)
    for found in results:
        if found is not None:
            return EdgeColoring(n, found)
    if errors:
        raise errors[0]
    return None


def exists_avoiding_coloring(n: int, forest: LinearForest, c: int,
                             budget: ExactBudget | None = None,
                             threads: int = 1) -> EdgeColoring | None:
    """Surjective c-coloring of K_n with no rainbow copy, or None.

    The returned coloring is the lexicographically least normalized witness,
    independent of the thread count.
    """
    if n < 2:
        raise ValueError("need n >= 2 for at least one edge")
    if not 1 <= c <= edge_count(n):
        raise ValueError(f"c={c} out of range for n={n}")
    if forest.total_vertices > n:
        raise ValueError(
            f"forest needs {forest.total_vertices} vertices, K_{n} has {n}")
    shared = _SharedBudget(budget if budget is not None else ExactBudget())
    return _exists(n, forest, c, shared, threads)


def _seed_coloring(n: int, forest: LinearForest) -> EdgeColoring:
    # monochromatic always avoids a forest with >= 2 edges; pure matchings
    # start higher with the star cover, which is optimal for most n
    parts = forest.components()
    if all(m == 2 for m in parts):
        t = len(parts)
        if t >= 2 and n >= 2 * t:
            return star_cover_coloring(n, t - 2)
    return EdgeColoring(n, (0,) * edge_count(n))


def ar_exact(n: int, forest: LinearForest,
             budget: ExactBudget | None = None,
             threads: int = 1) -> ExactResult:
    """Largest c admitting a surjective c-coloring of K_n with no rainbow
    copy of the forest, plus a witness coloring.

    Feasible c form an interval (merging two classes of an avoiding
    coloring keeps it avoiding), so the search climbs from a constructive
    seed until the decision procedure first fails.  Running past the node
    or wall budget raises BudgetExceededError carrying the best proven
    lower bound.
    """
    if forest.total_vertices > n:
        raise ValueError(
            f"forest needs {forest.total_vertices} vertices, K_{n} has {n}")
    if forest.total_edges < 2:
        raise ValueError("forest must have at least two edges; a lone edge "
                         "is rainbow in every coloring")
    seed = _seed_coloring(n, forest)
    if find_rainbow(seed, forest) is not None:
        raise RuntimeError("internal error: seed coloring is not avoiding")
    shared = _SharedBudget(budget if budget is not None else ExactBudget())
    value = seed.color_count
    witness = seed
    total = edge_count(n)
    for c in range(value + 1, total + 1):
        shared.winner = None
        try:
            found = _exists(n, forest, c, shared, threads)
        except BudgetExceededError as exc:
            raise BudgetExceededError(
                f"{exc} (proved lower bound {value}, undecided at {c} "
                f"colors)", nodes=exc.nodes, best=value) from None
        if found is None:
            break
        value, witness = c, found
    return ExactResult(value, witness, shared.consumed)
