"""Data model: edge-colored complete graphs, linear forests, and their file formats.

Hosts are always complete graphs K_n on vertices 0..n-1.  Edges are identified
by a dense index in lexicographic order of (u, v) with u < v, so a coloring is
just a flat tuple of color ids.  A linear forest is a disjoint union of paths,
written in specs like ``2xP4+3xP2``.

Everything here is immutable; functions that "modify" return new values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError

COLORING_MAGIC = "antiramsey-coloring v1"


def edge_count(n: int) -> int:
    """Number of edges of K_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n * (n - 1) // 2


def edge_index(n: int, u: int, v: int) -> int:
    """Index of edge (u, v), u < v, in lexicographic order.

    Row u starts at u*n - u*(u+1)/2; within the row, (u, v) sits at v-u-1.
    """
    if not (0 <= u < v < n):
        raise ValueError(f"need 0 <= u < v < n, got u={u}, v={v}, n={n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def edge_endpoints(n: int, index: int) -> tuple[int, int]:
    """Inverse of edge_index: recover (u, v) from the flat index."""
    if not (0 <= index < edge_count(n)):
        raise ValueError(f"edge index {index} out of range for n={n}")
    # Largest u whose row starts at or before index; row starts are increasing.
    lo, hi = 0, n - 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * n - mid * (mid + 1) // 2 <= index:
            lo = mid
        else:
            hi = mid - 1
    u = lo
    v = index - (u * n - u * (u + 1) // 2) + u + 1
    return u, v


@dataclass(frozen=True)
class EdgeColoring:
    """A surjective edge coloring of K_n.

    ``colors[i]`` is the color id of the edge with index i.  ``color_count``
    is the number of distinct ids in use; it is derived, never declared.  Ids
    need not be dense: ``normalize`` relabels them by first occurrence, which
    is the canonical form produced by every constructor in this package.
    """

    n: int
    colors: tuple[int, ...]
    color_count: int = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got n={self.n}")
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        expected = edge_count(self.n)
        if len(colors) != expected:
            raise ValueError(
                f"K_{self.n} has {expected} edges, got {len(colors)} colors"
            )
        for i, c in enumerate(colors):
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"edge {i}: color ids must be ints >= 0, got {c!r}")
        object.__setattr__(self, "color_count", len(set(colors)))

    def color_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.colors[edge_index(self.n, u, v)]

    def is_normalized(self) -> bool:
        """True when ids are 0..color_count-1 in order of first occurrence."""
        seen = 0
        for c in self.colors:
            if c > seen:
                return False
            if c == seen:
                seen += 1
        return True

    def classes(self) -> list[list[int]]:
        """Edge indices grouped by color id, ascending; requires normalized ids."""
        if not self.is_normalized():
            raise ValueError("classes() expects a normalized coloring")
        out: list[list[int]] = [[] for _ in range(self.color_count)]
        for i, c in enumerate(self.colors):
            out[c].append(i)
        return out


def normalize(coloring: EdgeColoring) -> EdgeColoring:
    """Relabel color ids by first occurrence along the edge order.

    Preserves the partition of edges into classes; idempotent.
    """
    relabel: dict[int, int] = {}
    out = []
    for c in coloring.colors:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return EdgeColoring(coloring.n, tuple(out))


def coloring_from_raw(n: int, raw: list[int] | tuple[int, ...]) -> EdgeColoring:
    """Build a normalized coloring from arbitrary nonnegative ids."""
    return normalize(EdgeColoring(n, tuple(raw)))


# ---------------------------------------------------------------------------
# coloring file format
#
#   antiramsey-coloring v1
#   n 5
#   c 2
#   e 0 1 0
#   ...                      <- one line per edge, strictly in index order
# ---------------------------------------------------------------------------

def write_coloring(coloring: EdgeColoring, stream) -> None:
    """Write the text format.  The coloring must be normalized, since the
    header's color count doubles as the id range."""
    if not coloring.is_normalized():
        raise ValueError("write_coloring requires a normalized coloring")
    n = coloring.n
    stream.write(f"{COLORING_MAGIC}\n")
    stream.write(f"n {n}\n")
    stream.write(f"c {coloring.color_count}\n")
    for i, c in enumerate(coloring.colors):
        u, v = edge_endpoints(n, i)
        stream.write(f"e {u} {v} {c}\n")


def read_coloring(stream) -> EdgeColoring:
    """Parse the text format, validating every invariant it promises.

    Errors name the offending 1-based line; a structurally missing edge is
    reported as e.g. "edge (1, 2) absent" and an unused declared color as
    "color 2 unused".
    """
    lines = stream.read().splitlines()

    def need(idx: int, what: str) -> str:
        if idx >= len(lines):
            raise ParseError(f"{what} missing (file truncated)", line=idx + 1)
        return lines[idx]

    if need(0, "header") != COLORING_MAGIC:
        raise ParseError(f"expected header {COLORING_MAGIC!r}", line=1)

    m = re.fullmatch(r"n (\d+)", need(1, "vertex count"))
    if not m:
        raise ParseError("expected 'n <count>'", line=2)
    n = int(m.group(1))
    if n < 1:
        raise ParseError("need n >= 1", line=2)

    m = re.fullmatch(r"c (\d+)", need(2, "color count"))
    if not m:
        raise ParseError("expected 'c <count>'", line=3)
    declared = int(m.group(1))

    total = edge_count(n)
    colors = []
    for i in range(total):
        u, v = edge_endpoints(n, i)
        lineno = 4 + i
        if 3 + i >= len(lines):
            raise ParseError(f"edge ({u}, {v}) absent", line=lineno)
        m = re.fullmatch(r"e (\d+) (\d+) (\d+)", lines[3 + i])
        if not m:
            raise ParseError("expected 'e <u> <v> <color>'", line=lineno)
        eu, ev, c = (int(m.group(j)) for j in (1, 2, 3))
        if (eu, ev) != (u, v):
            raise ParseError(f"edge ({u}, {v}) absent", line=lineno)
        if c >= declared:
            raise ParseError(f"color {c} out of range (declared c {declared})", line=lineno)
        colors.append(c)
    for extra in range(3 + total, len(lines)):
        if lines[extra].strip():
            raise ParseError("unexpected trailing content", line=extra + 1)

    used = set(colors)
    for c in range(declared):
        if c not in used:
            raise ParseError(f"color {c} unused", line=3)
    return EdgeColoring(n, tuple(colors))


# ---------------------------------------------------------------------------
# linear forests
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"(?:(\d+)x)?P(\d+)")


@dataclass(frozen=True)
class LinearForest:
    """A disjoint union of paths, as a multiset of path orders.

    ``parts`` holds (order, count) pairs with orders >= 2, strictly descending,
    so equal forests compare equal no matter how they were written.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        orders = [o for o, _ in self.parts]
        if not self.parts:
            raise ValueError("a linear forest needs at least one path")
        if orders != sorted(set(orders), reverse=True):
            raise ValueError("parts must have strictly descending, distinct orders")
        for order, count in self.parts:
            if order < 2:
                raise ValueError(f"path order must be >= 2, got P{order}")
            if count < 1:
                raise ValueError(f"path count must be >= 1, got {count}")

    @classmethod
    def from_parts(cls, pairs) -> "LinearForest":
        merged: dict[int, int] = {}
        for order, count in pairs:
            merged[order] = merged.get(order, 0) + count
        return cls(tuple(sorted(merged.items(), reverse=True)))

    @property
    def total_vertices(self) -> int:
        return sum(order * count for order, count in self.parts)

    @property
    def total_edges(self) -> int:
        return sum((order - 1) * count for order, count in self.parts)

    def components(self) -> tuple[int, ...]:
        """Path orders expanded one entry per component, descending."""
        out: list[int] = []
        for order, count in self.parts:
            out.extend([order] * count)
        return tuple(out)

    def spec_string(self) -> str:
        terms = []
        for order, count in self.parts:
            terms.append(f"{count}x" if count > 1 else "")
            terms[-1] += f"P{order}"
        return "+".join(terms)

    def __str__(self) -> str:
        return self.spec_string()


def parse_forest(spec: str) -> LinearForest:
    """Parse a forest spec: '+'-joined terms, each ``[COUNT x] P ORDER``.

    ``"2xP4+3xP2"`` is two paths on 4 vertices plus three on 2.  Duplicate
    orders merge, so ``"P4+P4"`` equals ``"2xP4"``.
    """
    pairs = []
    for term in spec.split("+"):
        term = term.strip()
        m = _TERM_RE.fullmatch(term)
        if not m:
            raise ParseError(f"bad forest term {term!r} (expected like '2xP4' or 'P2')")
        count = int(m.group(1)) if m.group(1) else 1
        order = int(m.group(2))
        if count < 1:
            raise ParseError(f"bad forest term {term!r}: count must be >= 1")
        if order < 2:
            raise ParseError(f"bad forest term {term!r}: path order must be >= 2")
        pairs.append((order, count))
    return LinearForest.from_parts(pairs)


def linear_forest(p4_count: int, p2_count: int) -> LinearForest:
    """The two-part family: p4_count paths P4 plus p2_count paths P2."""
    pairs = []
    if p4_count:
        pairs.append((4, p4_count))
    if p2_count:
        pairs.append((2, p2_count))
    if not pairs:
        raise ValueError("need at least one path")
    return LinearForest.from_parts(pairs)


# ---------------------------------------------------------------------------
# embeddings and plain graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """A placement of a linear forest: one vertex sequence per path."""

    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for path in self.paths:
            for a, b in zip(path, path[1:]):
                out.append((min(a, b), max(a, b)))
        return out

    def to_json_dict(self) -> dict:
        return {"paths": [list(p) for p in self.paths]}


def validate_embedding(embedding: Embedding, coloring: EdgeColoring,
                       forest: LinearForest) -> None:
    """Raise ValueError unless the embedding is a rainbow copy of the forest.

    Checks component orders (as a multiset), vertex range and disjointness,
    and that the implied edge colors are pairwise distinct.
    """
    orders = sorted((len(p) for p in embedding.paths), reverse=True)
    if orders != sorted(forest.components(), reverse=True):
        raise ValueError(
            f"embedding path orders {orders} do not match forest {forest}"
        )
    seen: set[int] = set()
    for path in embedding.paths:
        for v in path:
            if not (0 <= v < coloring.n):
                raise ValueError(f"vertex {v} out of range for n={coloring.n}")
            if v in seen:
                raise ValueError(f"vertex {v} reused across the embedding")
            seen.add(v)
    edge_colors = [coloring.color_of(u, v) for u, v in embedding.edges()]
    if len(set(edge_colors)) != len(edge_colors):
        raise ValueError("embedding is not rainbow: a color repeats")


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected graph on 0..n-1 given by a set of (u, v) pairs, u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")


def representative_subgraph(coloring: EdgeColoring) -> SimpleGraph:
    """One edge per color class: the lexicographically least (= least index).

    The result is rainbow by construction and spans every color, so any
    rainbow subgraph found inside it certifies color distinctness for free.
    """
    least: dict[int, int] = {}
    for i, c in enumerate(coloring.colors):
        if c not in least:  # edge order is index order, so first hit is least
            least[c] = i
    edges = frozenset(edge_endpoints(coloring.n, i) for i in least.values())
    return SimpleGraph(coloring.n, edges)
