"""Detector correctness: oracle agreement, witnesses, shadows, budgets."""

import random

import pytest

from antiramsey.detect import (
    DetectBudget,
    find_rainbow,
    find_rainbow_oracle,
    matching_shadow,
)
from antiramsey.errors import BudgetExceededError
from antiramsey.model import (
    EdgeColoring,
    coloring_from_raw,
    edge_count,
    parse_forest,
    validate_embedding,
)


def all_rainbow(n):
    return coloring_from_raw(n, list(range(edge_count(n))))


def mono(n):
    return coloring_from_raw(n, [0] * edge_count(n))


def test_matching_shadow():
    assert matching_shadow(parse_forest("2xP4+3xP2")) == parse_forest("7xP2")
    assert matching_shadow(parse_forest("P2")) == parse_forest("P2")
    assert matching_shadow(parse_forest("P5")) == parse_forest("2xP2")
    assert matching_shadow(parse_forest("P4+2xP2")) == parse_forest("4xP2")


def test_find_rainbow_trivial_cases():
    emb = find_rainbow(all_rainbow(4), parse_forest("P4"))
    assert emb is not None
    validate_embedding(emb, all_rainbow(4), parse_forest("P4"))

    assert find_rainbow(mono(5), parse_forest("2xP2")) is None

    with pytest.raises(ValueError):
        find_rainbow(mono(4), parse_forest("3xP2"))  # needs 6 vertices


def test_witnesses_always_validate():
    rng = random.Random(101)
    forests = [parse_forest(s) for s in ["2xP2", "3xP2", "P4", "P4+P2", "P3+P2"]]
    for _ in range(300):
        n = rng.randrange(4, 8)
        col = coloring_from_raw(n, [rng.randrange(0, 6) for _ in range(edge_count(n))])
        for forest in forests:
            if forest.total_vertices > n:
                continue
            emb = find_rainbow(col, forest)
            if emb is not None:
                validate_embedding(emb, col, forest)


def test_oracle_agreement_seeded():
    # smaller companion of the acceptance sweep
    rng = random.Random(7)
    forests = [parse_forest(s) for s in ["2xP2", "3xP2", "P4", "P4+P2"]]
    for _ in range(120):
        n = rng.randrange(4, 8)
        col = coloring_from_raw(n, [rng.randrange(0, 5) for _ in range(edge_count(n))])
        for forest in forests:
            if forest.total_vertices > n:
                continue
            fast = find_rainbow(col, forest)
            slow = find_rainbow_oracle(col, forest)
            assert (fast is None) == (slow is None)


def test_shadow_of_witness_is_rainbow():
    # extract the shadow matching directly from any returned forest witness
    rng = random.Random(31)
    forest = parse_forest("P4+P2")
    for _ in range(200):
        n = 7
        col = coloring_from_raw(n, [rng.randrange(0, 8) for _ in range(edge_count(n))])
        emb = find_rainbow(col, forest)
        if emb is None:
            continue
        shadow_edges = []
        for path in emb.paths:
            for i in range(0, len(path) - 1, 2):
                shadow_edges.append((path[i], path[i + 1]))
        cols = [col.color_of(u, v) for u, v in shadow_edges]
        assert len(set(cols)) == len(cols)
        assert find_rainbow(col, matching_shadow(forest)) is not None


def test_determinism():
    rng = random.Random(13)
    for _ in range(50):
        n = 7
        col = coloring_from_raw(n, [rng.randrange(0, 6) for _ in range(edge_count(n))])
        for spec in ["3xP2", "P4+P2"]:
            forest = parse_forest(spec)
            a = find_rainbow(col, forest)
            b = find_rainbow(col, forest)
            assert a == b


def test_budget_exhaustion_is_loud():
    # a rainbow-rich coloring with a 1-node cap cannot finish silently
    col = all_rainbow(8)
    with pytest.raises(BudgetExceededError) as info:
        find_rainbow(col, parse_forest("4xP2"), DetectBudget(max_nodes=1))
    assert info.value.nodes == 2
    with pytest.raises(ValueError):
        DetectBudget(max_nodes=0)


def test_oracle_refuses_large_hosts():
    with pytest.raises(ValueError):
        find_rainbow_oracle(mono(13), parse_forest("2xP2"))


def test_interchange_pruning_matches_oracle_on_structured_colorings():
    # star covers and near-monochromatic colorings exercise the class merge
    from antiramsey.model import edge_index

    for n in range(6, 11):
        raw = [0] * edge_count(n)
        nxt = 1
        for v in range(1, n):
            raw[edge_index(n, 0, v)] = nxt
            nxt += 1
        col = coloring_from_raw(n, raw)
        for t in (2, 3, n // 2):
            forest = parse_forest(f"{t}xP2")
            fast = find_rainbow(col, forest)
            slow = find_rainbow_oracle(col, forest)
            assert (fast is None) == (slow is None)
            if fast is not None:
                validate_embedding(fast, col, forest)


def test_larger_rainbow_matching_found():
    # fully rainbow K_10 contains any 5 disjoint edges
    emb = find_rainbow(all_rainbow(10), parse_forest("5xP2"))
    assert emb is not None
    assert len(emb.paths) == 5


def test_edge_anchored_search_matches_embedding_truth():
    # has_rainbow_using_edge must say yes exactly when some rainbow copy
    # uses the given edge; permutations give the ground truth
    from itertools import permutations

    from antiramsey.detect import has_rainbow_using_edge
    from antiramsey.model import edge_endpoints, edge_index

    def truth(n, colors, forest, u, v):
        orders = forest.components()
        total = forest.total_vertices
        want = edge_index(n, u, v)
        for perm in permutations(range(n), total):
            pos = 0
            edges = []
            ok = True
            for m in orders:
                path = perm[pos:pos + m]
                pos += m
                for a, b in zip(path, path[1:]):
                    edges.append(edge_index(n, min(a, b), max(a, b)))
            if want not in edges:
                continue
            seen = set()
            for e in edges:
                c = colors[e]
                if c is None or c in seen:
                    ok = False
                    break
                seen.add(c)
            if ok:
                return True
        return False

    rng = random.Random(20260816)
    forests = [parse_forest(s) for s in ("2xP2", "3xP2", "P3+P2", "P4")]
    for trial in range(15):
        n = rng.randrange(5, 7)
        total = edge_count(n)
        colors = [rng.randrange(5) if rng.random() < 0.8 else None
                  for _ in range(total)]
        for forest in forests:
            for e in range(total):
                u, v = edge_endpoints(n, e)
                assert has_rainbow_using_edge(n, colors, forest, u, v) == \
                    truth(n, colors, forest, u, v), (n, colors, forest, e)
