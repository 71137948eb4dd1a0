"""Command line front end.

One subcommand per module capability.  Every leaf accepts --json (exactly
one JSON document on standard output) and --threads; without --json the
same fields print as readable lines, and the verify subcommands print
their TSV report.  Exit codes: 0 success, 1 a verify report with
violations, 2 usage or domain errors, 3 exhausted node or wall budgets.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .claimcheck import verify_beta_identity, verify_claim8, verify_region
from .construct import construct_forest_avoider, construct_matching
from .detect import DetectBudget, find_rainbow, find_rainbow_oracle
from .errors import BudgetExceededError, OutOfRegionError, ParseError
from .exact import ExactBudget, ar_exact
from .formulas import (ar_linear_forest, ar_matching, classify_region,
                       interval_bounds, interval_nonempty)
from .model import (linear_forest, parse_forest, read_coloring,
                    write_coloring)
from .search import SearchConfig, conjecture_probe, search_lower_bound


def _frac_str(f) -> str:
    return f"{f.numerator}/{f.denominator}"


def _write_file(coloring, path: str) -> None:
    with open(path, "w", encoding="ascii") as stream:
        write_coloring(coloring, stream)


def _lines(doc: dict) -> list[str]:
    return [f"{key}: {value}" for key, value in doc.items()]


# each handler returns (exit_code, json_doc, human_lines)

def _cmd_formula_matching(args):
    ar = ar_matching(args.n, args.t)
    doc = {"ar": ar}
    return 0, doc, [f"AR({args.n}, {args.t}xP2) = {ar}"]


def _cmd_formula_forest(args):
    ar = ar_linear_forest(args.k, args.t, args.n)
    doc = {"ar": ar}
    spec = linear_forest(args.k, args.t).spec_string()
    return 0, doc, [f"AR({args.n}, {spec}) = {ar}"]


def _cmd_interval(args):
    g, f = interval_bounds(args.k, args.t)
    doc = {"g": g, "f": _frac_str(f),
           "nonempty": interval_nonempty(args.k, args.t)}
    return 0, doc, _lines(doc)


def _cmd_classify(args):
    tag = classify_region(args.k, args.t, args.n)
    doc = {"region": tag.value}
    return 0, doc, _lines(doc)


def _cmd_construct_matching(args):
    coloring = construct_matching(args.n, args.t)
    _write_file(coloring, args.out)
    doc = {"n": args.n, "colors": coloring.color_count, "path": args.out}
    return 0, doc, [f"wrote {coloring.color_count}-coloring of K_{args.n} "
                    f"to {args.out}"]


def _cmd_construct_forest(args):
    coloring = construct_forest_avoider(args.k, args.t, args.n)
    _write_file(coloring, args.out)
    doc = {"n": args.n, "colors": coloring.color_count, "path": args.out}
    return 0, doc, [f"wrote {coloring.color_count}-coloring of K_{args.n} "
                    f"to {args.out}"]


def _cmd_detect(args):
    with open(args.coloring, encoding="ascii") as stream:
        coloring = read_coloring(stream)
    forest = parse_forest(args.forest)
    if args.oracle:
        emb = find_rainbow_oracle(coloring, forest)
    else:
        budget = None
        if args.max_nodes is not None:
            budget = DetectBudget(args.max_nodes)
        emb = find_rainbow(coloring, forest, budget)
    if emb is None:
        return 0, {"found": False}, ["no rainbow copy"]
    doc = {"found": True}
    doc.update(emb.to_json_dict())
    human = ["rainbow copy found:"]
    human += ["  " + "-".join(map(str, p)) for p in emb.paths]
    return 0, doc, human


def _cmd_exact(args):
    forest = parse_forest(args.forest)
    kwargs = {}
    if args.max_nodes is not None:
        kwargs["max_nodes"] = args.max_nodes
    if args.wall_secs is not None:
        kwargs["wall_secs"] = args.wall_secs
    budget = ExactBudget(**kwargs)
    try:
        result = ar_exact(args.n, forest, budget, threads=args.threads)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        doc = {"status": "lower-bound-only", "lower_bound": exc.best,
               "nodes": exc.nodes}
        return 3, doc, _lines(doc)
    doc = {"status": "exact", "ar": result.value, "nodes": result.nodes}
    return 0, doc, [f"AR({args.n}, {args.forest}) = {result.value} "
                    f"({result.nodes} nodes)"]


def _cmd_search(args):
    forest = parse_forest(args.forest)
    config = SearchConfig(seed=args.seed, restarts=args.restarts,
                          moves_per_restart=args.moves)
    cert = search_lower_bound(args.n, forest, config, threads=args.threads)
    doc = {"n": args.n, "forest": args.forest, "seed": args.seed,
           "colors": cert.colors, "coloring": list(cert.coloring.colors)}
    human = [f"certified: AR({args.n}, {args.forest}) >= {cert.colors}"]
    if args.out:
        _write_file(cert.coloring, args.out)
        doc["path"] = args.out
        human.append(f"wrote certificate to {args.out}")
    return 0, doc, human


def _cmd_probe(args):
    config = SearchConfig(seed=args.seed)
    report = conjecture_probe(args.k, args.t, args.n, config,
                              threads=args.threads)
    doc = {"k": args.k, "t": args.t, "n": args.n,
           "forest_colors": report.forest_certificate.colors,
           "matching_colors": report.matching_certificate.colors,
           "forest_formula": report.forest_formula,
           "matching_formula": report.matching_formula,
           "exceeds": report.exceeds}
    return 0, doc, _lines(doc)


def _verify_outcome(report, counts: dict):
    doc = {"ok": report.ok}
    doc.update(counts)
    return (0 if report.ok else 1), doc, report.tsv_rows()


def _cmd_verify_claim8(args):
    report = verify_claim8(args.k_max, args.t_max, args.vprime_extra)
    return _verify_outcome(report, {"violations": report.violations,
                                    "checked": report.checked})


def _cmd_verify_region(args):
    report = verify_region(args.k_max, args.t_max)
    return _verify_outcome(report, {"violations": report.violations,
                                    "triples": report.triples})


def _cmd_verify_beta(args):
    report = verify_beta_identity(args.max)
    doc = {"ok": report.ok, "points": report.points}
    return (0 if report.ok else 1), doc, report.tsv_rows()


def _leaf(sub, name, handler, **kwargs):
    p = sub.add_parser(name, **kwargs)
    p.set_defaults(handler=handler)
    p.add_argument("--json", action="store_true",
                   help="emit one JSON document on stdout")
    p.add_argument("--threads", type=int, default=1, metavar="T",
                   help="worker threads where supported (default 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiramsey",
        description="anti-Ramsey numbers of linear forests: formulas, "
                    "constructions, detection, exact search, verification")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    formula = sub.add_parser("formula", help="closed-form values")
    fsub = formula.add_subparsers(dest="which", required=True)
    p = _leaf(fsub, "matching", _cmd_formula_matching,
              help="AR(n, t disjoint edges)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p = _leaf(fsub, "forest", _cmd_formula_forest,
              help="AR(n, k paths P4 plus t edges)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = _leaf(sub, "interval", _cmd_interval,
              help="host-order interval [g, f] and emptiness")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = _leaf(sub, "classify", _cmd_classify,
              help="which hypothesis region covers (k, t, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    construct = sub.add_parser("construct", help="extremal colorings")
    csub = construct.add_subparsers(dest="which", required=True)
    p = _leaf(csub, "matching", _cmd_construct_matching,
              help="rainbow-free coloring meeting the matching value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("-o", dest="out", required=True, metavar="FILE")
    p = _leaf(csub, "forest", _cmd_construct_forest,
              help="rainbow-free coloring meeting the forest value")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", dest="out", required=True, metavar="FILE")

    p = _leaf(sub, "detect", _cmd_detect,
              help="find a rainbow copy in a coloring file")
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.add_argument("--forest", required=True, metavar="SPEC")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the permutation oracle (small n)")
    p.add_argument("--max-nodes", type=int, default=None, metavar="M")

    p = _leaf(sub, "exact", _cmd_exact,
              help="exact value by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forest", required=True, metavar="SPEC")
    p.add_argument("--max-nodes", type=int, default=None, metavar="M")
    p.add_argument("--wall-secs", type=float, default=None, metavar="W")

    p = _leaf(sub, "search", _cmd_search,
              help="certified lower bound by randomized climbing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forest", required=True, metavar="SPEC")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--moves", type=int, default=400)
    p.add_argument("-o", dest="out", default=None, metavar="FILE")

    p = _leaf(sub, "probe", _cmd_probe,
              help="compare forest and matching lower bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    verify = sub.add_parser("verify", help="proof-ledger scans")
    vsub = verify.add_subparsers(dest="which", required=True)
    p = _leaf(vsub, "claim8", _cmd_verify_claim8,
              help="all-ones maximality of the layer objective")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--vprime-extra", type=int, required=True)
    p = _leaf(vsub, "region", _cmd_verify_region,
              help="mu > max(beta1, beta2) over the whole region")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p = _leaf(vsub, "beta-identity", _cmd_verify_beta,
              help="dense polynomial recombination check")
    p.add_argument("--max", type=int, default=60)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else 2
    try:
        code, doc, human = args.handler(args)
    except (OutOfRegionError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(doc))
    else:
        print("\n".join(human))
    return code


def console_main() -> None:
    sys.exit(main())
