"""Rainbow linear-forest detection in edge-colored complete graphs.

find_rainbow is a complete backtracking search: a None answer is a proof of
absence, not a timeout (budget exhaustion raises instead).  Matchings get a
specialized enumerator whose symmetry pruning collapses the near-monochromatic
colorings produced by the extremal constructions; general forests first run
the cheap matching-shadow precheck, since a rainbow forest always contains a
rainbow matching on half its vertices.

find_rainbow_oracle is the deliberately naive cross-check used by the test
suite: injective placement enumeration with the rainbow test at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError
from .model import EdgeColoring, Embedding, LinearForest, edge_index

# interchangeability classes cost O(n^4); past this they stop paying for
# themselves and the plain search takes over
_CLASS_LIMIT = 64


@dataclass(frozen=True)
class DetectBudget:
    """Node cap for the detection search; None means unlimited."""

    max_nodes: int | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError(f"max_nodes must be >= 1, got {self.max_nodes}")


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceededError("detection budget exhausted", nodes=self.nodes)


def matching_shadow(forest: LinearForest) -> LinearForest:
    """The largest matching guaranteed inside any rainbow copy of the forest.

    A rainbow path of order m contains floor(m/2) disjoint edges, all with
    distinct colors, so a rainbow forest contains a rainbow sP2 with s summed
    over components.  Detection uses this as a one-sided precheck.
    """
    s = sum(count * (order // 2) for order, count in forest.parts)
    return LinearForest(((2, s),))


def find_rainbow(coloring: EdgeColoring, forest: LinearForest,
                 budget: DetectBudget | None = None) -> Embedding | None:
    """Search K_n under the coloring for a rainbow copy of the forest.

    Returns a witness Embedding, or None as a proof of absence.  Raises
    BudgetExceededError when the node cap runs out.  Deterministic: equal
    inputs give byte-identical answers.
    """
    n = coloring.n
    if forest.total_vertices > n:
        raise ValueError(
            f"forest needs {forest.total_vertices} vertices, host has {n}"
        )
    limit = budget.max_nodes if budget is not None else None
    counter = _Counter(limit)
    return _search(n, coloring.colors, forest, counter, full=True)


def colored_subset_has_rainbow(n: int, colors, forest: LinearForest,
                               counter_limit: int | None = None) -> bool:
    """Existence-only variant over a partially colored K_n.

    ``colors`` is the flat edge array with None for edges that may not be
    used.  Exact search calls this on prefixes: a rainbow copy among already
    colored edges survives every completion.
    """
    counter = _Counter(counter_limit)
    return _search(n, tuple(colors), forest, counter, full=False) is not None


def _search(n: int, colors, forest: LinearForest, counter: _Counter,
            full: bool) -> Embedding | None:
    distinct = len(set(colors) - {None})
    if forest.parts[0][0] == 2:
        t = forest.parts[0][1]
        classes = _interchange_classes(n, colors) if full and n <= _CLASS_LIMIT \
            else list(range(n))
        edges = _matching_dfs(n, colors, t, distinct, classes, counter)
        if edges is None:
            return None
        return Embedding(tuple(edges))

    shadow = matching_shadow(forest)
    s = shadow.parts[0][1]
    classes = _interchange_classes(n, colors) if full and n <= _CLASS_LIMIT \
        else list(range(n))
    if _matching_dfs(n, colors, s, distinct, classes, counter) is None:
        return None
    paths = _general_dfs(n, colors, forest.components(), distinct, counter)
    if paths is None:
        return None
    return Embedding(tuple(paths))


def _interchange_classes(n: int, colors) -> list[int]:
    """Group vertices whose transposition permutes the color classes.

    Two vertices v < w are interchangeable when the map sending each edge's
    color to its transposed edge's color is single-valued; by symmetry of the
    constraints it is then an involution, hence a color bijection.  Swapping
    two interchangeable vertices maps rainbow copies to rainbow copies, so
    the matching search needs only one partner attempt per class.  Closure
    under composition makes it safe to union transitively.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for v in range(n):
        for w in range(v + 1, n):
            if find(v) == find(w):
                continue
            swap = {v: w, w: v}
            mapping: dict[int, int] = {}
            ok = True
            for a, b in all_pairs:
                sa = swap.get(a, a)
                sb = swap.get(b, b)
                if sa > sb:
                    sa, sb = sb, sa
                c1 = colors[edge_index(n, a, b)]
                c2 = colors[edge_index(n, sa, sb)]
                prev = mapping.get(c1)
                if prev is None:
                    mapping[c1] = c2
                elif prev != c2:
                    ok = False
                    break
            if ok:
                parent[find(v)] = find(w)
    return [find(v) for v in range(n)]


def _matching_dfs(n: int, colors, t: int, distinct: int, classes,
                  counter: _Counter) -> list[tuple[int, int]] | None:
    """Enumerate t-matchings with pairwise distinct colors.

    Vertices are decided in increasing order: the least undecided vertex is
    either matched to some later vertex or skipped for good, so every
    matching is generated exactly once, edges sorted by lower endpoint.
    """
    if t == 0:
        return []
    if 2 * t > n:
        return None
    used = bytearray(n)
    used_colors: set = set()
    edges: list[tuple[int, int]] = []

    def rec(start: int, placed: int) -> bool:
        if placed == t:
            return True
        u = start
        while u < n and used[u]:
            u += 1
        if u == n:
            return False
        need = t - placed
        if distinct - len(used_colors) < need:
            return False
        seen_classes = set()
        for w in range(u + 1, n):
            if used[w]:
                continue
            counter.tick()
            cls = classes[w]
            if cls in seen_classes:
                continue
            seen_classes.add(cls)
            c = colors[edge_index(n, u, w)]
            if c is None or c in used_colors:
                continue
            used[u] = used[w] = 1
            used_colors.add(c)
            edges.append((u, w))
            if rec(u + 1, placed + 1):
                return True
            edges.pop()
            used_colors.discard(c)
            used[u] = used[w] = 0
        # leave u unmatched, if enough vertices remain above it
        counter.tick()
        avail_above = (n - u - 1) - sum(used[u + 1:])
        if avail_above >= 2 * need and rec(u + 1, placed):
            return True
        return False

    return edges if rec(0, 0) else None


def _general_dfs(n: int, colors, comps: tuple[int, ...], distinct: int,
                 counter: _Counter) -> list[tuple[int, ...]] | None:
    """Place path components in order, longest first.

    Each path is generated once: its endpoints satisfy first < last, and
    equal-order components start at strictly increasing vertices.  Colors
    are tracked in one running set, so every placed edge is fresh.
    """
    used = bytearray(n)
    used_colors: set = set()
    paths: list[list[int]] = []
    edges_left = sum(m - 1 for m in comps)

    def place(ci: int) -> bool:
        nonlocal edges_left
        if ci == len(comps):
            return True
        m = comps[ci]
        lo = 0
        if ci > 0 and comps[ci - 1] == m:
            lo = paths[-1][0] + 1
        for v0 in range(lo, n):
            if used[v0]:
                continue
            counter.tick()
            used[v0] = 1
            paths.append([v0])
            if extend(ci, m):
                return True
            paths.pop()
            used[v0] = 0
        return False

    def extend(ci: int, m: int) -> bool:
        nonlocal edges_left
        path = paths[-1]
        if len(path) == m:
            return place(ci + 1)
        if distinct - len(used_colors) < edges_left:
            return False
        tail = path[-1]
        # the final vertex must beat the first, killing the reversed copy
        first_ok = path[0] + 1 if len(path) == m - 1 else 0
        for w in range(first_ok, n):
            if used[w]:
                continue
            counter.tick()
            c = colors[edge_index(n, min(tail, w), max(tail, w))]
            if c is None or c in used_colors:
                continue
            used[w] = 1
            used_colors.add(c)
            path.append(w)
            edges_left -= 1
            if extend(ci, m):
                return True
            edges_left += 1
            path.pop()
            used_colors.discard(c)
            used[w] = 0
        return False

    if place(0):
        return [tuple(p) for p in paths]
    return None


def has_rainbow_using_edge(n: int, colors, forest: LinearForest,
                           u: int, v: int) -> bool:
    """Is there a rainbow copy of the forest whose edge set includes (u, v)?

    ``colors`` is a flat edge array, None marking unusable edges.  Incremental
    searches lean on this: coloring one more edge can only create rainbow
    copies through that edge, so checking here at every step keeps a running
    no-rainbow invariant without ever rescanning the whole prefix.
    """
    if u > v:
        u, v = v, u
    c0 = colors[edge_index(n, u, v)]
    if c0 is None:
        return False
    comps = forest.components()
    used = bytearray(n)
    used_colors = {c0}

    def chain(anchor: int, steps: int, then) -> bool:
        # extend a path <steps> more vertices beyond <anchor>
        if steps == 0:
            return then()
        for w in range(n):
            if used[w]:
                continue
            c = colors[edge_index(n, min(anchor, w), max(anchor, w))]
            if c is None or c in used_colors:
                continue
            used[w] = 1
            used_colors.add(c)
            if chain(w, steps - 1, then):
                return True
            used_colors.discard(c)
            used[w] = 0
        return False

    def place_rest(rest: tuple[int, ...], ri: int, lo: int) -> bool:
        if ri == len(rest):
            return True
        m = rest[ri]
        start = lo if ri > 0 and rest[ri - 1] == m else 0
        for v0 in range(start, n):
            if used[v0]:
                continue
            used[v0] = 1
            if grow([v0], m, rest, ri):
                return True
            used[v0] = 0
        return False

    def grow(path: list, m: int, rest: tuple, ri: int) -> bool:
        if len(path) == m:
            if path[0] > path[-1]:
                return False
            return place_rest(rest, ri + 1, path[0] + 1)
        tail = path[-1]
        for w in range(n):
            if used[w]:
                continue
            c = colors[edge_index(n, min(tail, w), max(tail, w))]
            if c is None or c in used_colors:
                continue
            used[w] = 1
            used_colors.add(c)
            path.append(w)
            if grow(path, m, rest, ri):
                return True
            path.pop()
            used_colors.discard(c)
            used[w] = 0
        return False

    tried: set[int] = set()
    for idx, m in enumerate(comps):
        if m in tried:
            continue
        tried.add(m)
        rest = comps[:idx] + comps[idx + 1:]
        ends = ((u, v),) if m == 2 else ((u, v), (v, u))
        for p in range(m - 1):
            for a, b in ends:
                used[u] = used[v] = 1

                def after_left(a=a, b=b, p=p, m=m, rest=rest) -> bool:
                    return chain(b, m - 2 - p, lambda: place_rest(rest, 0, 0))

                if chain(a, p, after_left):
                    return True
                used[u] = used[v] = 0
    return False


def find_rainbow_oracle(coloring: EdgeColoring,
                        forest: LinearForest) -> Embedding | None:
    """Brute-force reference: every injective placement, rainbow test last.

    No pruning beyond injectivity, so disagreement with find_rainbow points
    at the clever code.  Guarded to n <= 12; this is test equipment.
    """
    n = coloring.n
    if n > 12:
        raise ValueError(f"oracle supports n <= 12 only, got n={n}")
    if forest.total_vertices > n:
        raise ValueError(
            f"forest needs {forest.total_vertices} vertices, host has {n}"
        )
    comps = forest.components()

    def rec(ci: int, used: set, acc: list) -> Embedding | None:
        if ci == len(comps):
            seen = set()
            for path in acc:
                for a, b in zip(path, path[1:]):
                    c = coloring.color_of(a, b)
                    if c in seen:
                        return None
                    seen.add(c)
            return Embedding(tuple(acc))
        free = [v for v in range(n) if v not in used]
        for perm in itertools.permutations(free, comps[ci]):
            hit = rec(ci + 1, used | set(perm), acc + [perm])
            if hit is not None:
                return hit
        return None

    return rec(0, set(), [])
