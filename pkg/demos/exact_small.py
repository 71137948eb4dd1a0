"""Exact values by exhaustive color-class enumeration, with budgets.

The solver walks restricted-growth strings over the edge list, checking
after every assignment that the newest edge closes no rainbow copy.  A
monotone climb over the color count turns repeated existence questions
into the exact value.

Run: python3 demos/exact_small.py
"""

import time

from antiramsey.errors import BudgetExceededError
from antiramsey.exact import ExactBudget, ar_exact
from antiramsey.model import parse_forest


def timed(n, spec, **kwargs):
    forest = parse_forest(spec)
    t0 = time.perf_counter()
    result = ar_exact(n, forest, **kwargs)
    dt = time.perf_counter() - t0
    print(f"  AR({n}, {spec}) = {result.value}  "
          f"({result.nodes} nodes, {dt:.2f}s)")
    return result


def main():
    print("small exact values:")
    timed(5, "2xP2")
    timed(5, "P3+P2")
    timed(6, "P3+P2")
    result = timed(6, "3xP2", threads=2)
    print(f"  witness coloring: {result.witness.colors}")
    print()

    print("a starved budget stops honestly with the best proven bound:")
    try:
        ar_exact(7, parse_forest("P3+2xP2"),
                 budget=ExactBudget(max_nodes=20000))
    except BudgetExceededError as exc:
        print(f"  {exc}")
        print(f"  proven lower bound: {exc.best}, nodes spent: {exc.nodes}")


if __name__ == "__main__":
    main()
