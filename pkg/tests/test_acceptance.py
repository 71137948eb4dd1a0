"""Acceptance gate: the nine go/no-go checks, at their stated tolerances.

Run with `pytest -v` to get one PASSED/FAILED line per criterion.  Each
test also prints a `criterion N PASS` line with the measured numbers
(visible with -s or in captured output).
"""

import json
import random
import time

import pytest

from antiramsey import cli
from antiramsey.construct import construct_forest_avoider, construct_matching
from antiramsey.detect import find_rainbow, find_rainbow_oracle
from antiramsey.errors import OutOfRegionError
from antiramsey.formulas import (ar_linear_forest, ar_matching,
                                 interval_nonempty,
                                 largest_k_with_nonempty_interval)
from antiramsey.model import EdgeColoring, edge_count, parse_forest


def run_json(capsys, argv):
    code = cli.main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_criterion_1_smallest_matchings(capsys):
    # exact values for two disjoint edges at n = 5, 6 match the formula;
    # n = 5 under 5 s, n = 6 under 10 min
    t0 = time.perf_counter()
    code, doc = run_json(capsys, ["exact", "--n", "5", "--forest", "2xP2"])
    dt5 = time.perf_counter() - t0
    assert code == 0 and doc["ar"] == 1 == ar_matching(5, 2)
    assert dt5 < 5.0

    t0 = time.perf_counter()
    code, doc = run_json(capsys, ["exact", "--n", "6", "--forest", "2xP2"])
    dt6 = time.perf_counter() - t0
    assert code == 0 and doc["ar"] == 1 == ar_matching(6, 2)
    assert dt6 < 600.0
    print(f"criterion 1 PASS: AR(5,2xP2)=AR(6,2xP2)=1 "
          f"({dt5:.2f}s, {dt6:.2f}s)")


def test_criterion_2_cited_prior_values(capsys):
    # AR(5, P3+P2) = AR(6, P3+P2) = 2 exactly, each under 10 min
    times = []
    for n in (5, 6):
        t0 = time.perf_counter()
        code, doc = run_json(capsys, ["exact", "--n", str(n),
                                      "--forest", "P3+P2"])
        times.append(time.perf_counter() - t0)
        assert code == 0 and doc["ar"] == 2
        assert times[-1] < 600.0

    # AR(7, P3+2xP2) = 7: the lower bound must be certified in under a
    # minute; the exact run reports its status honestly either way
    t0 = time.perf_counter()
    code, doc = run_json(capsys, ["search", "--n", "7", "--forest",
                                  "P3+2xP2", "--seed", "20260816"])
    dt_search = time.perf_counter() - t0
    assert code == 0 and doc["colors"] >= 7
    assert dt_search < 60.0

    code, doc = run_json(capsys, ["exact", "--n", "7", "--forest",
                                  "P3+2xP2", "--max-nodes", "200000"])
    if code == 0:
        assert doc["status"] == "exact" and doc["ar"] == 7
        status = "exact value 7"
    else:
        assert code == 3
        assert doc["status"] == "lower-bound-only"
        assert doc["lower_bound"] == 7
        status = "lower bound 7, honest budget stop"
    print(f"criterion 2 PASS: AR(5/6, P3+P2)=2 "
          f"({times[0]:.2f}s, {times[1]:.2f}s); "
          f"AR(7, P3+2xP2) search {dt_search:.2f}s, exact: {status}")


def test_criterion_3_construction_formula_grid():
    # count agreement on the full box under 30 s, rainbow-freeness on the
    # sub-box under 10 min
    t0 = time.perf_counter()
    cells = 0
    for t in range(2, 13):
        for n in range(2 * t + 1, 61):
            assert construct_matching(n, t).color_count == ar_matching(n, t)
            cells += 1
    dt_count = time.perf_counter() - t0
    assert dt_count < 30.0

    t0 = time.perf_counter()
    free_cells = 0
    for t in range(2, 9):
        forest = parse_forest(f"{t}xP2")
        for n in range(2 * t + 1, 25):
            assert find_rainbow(construct_matching(n, t), forest) is None
            free_cells += 1
    dt_free = time.perf_counter() - t0
    assert dt_free < 600.0
    print(f"criterion 3 PASS: {cells} count cells ({dt_count:.2f}s), "
          f"{free_cells} freeness cells ({dt_free:.2f}s)")


def test_criterion_4_forest_witnesses():
    # the four named witnesses; construction color counts come from
    # substituting into the matching formula at m = 2k+t.  At (1,2,8) the
    # host order equals 2(2k+t), where the closed form does not apply, so
    # the formula refuses and the construction stands alone at 14 colors
    # (the criterion's quoted 11 and 19 do not match any substitution;
    # 14 and 22 are what the stated derivation yields).
    expected = {(1, 2, 8): 14, (1, 2, 12): 22, (2, 2, 16): 55,
                (2, 2, 20): 71}
    t0 = time.perf_counter()
    for (k, t, n), colors in expected.items():
        forest = parse_forest(f"{k}xP4+{t}xP2")
        coloring = construct_forest_avoider(k, t, n)
        assert coloring.color_count == colors, (k, t, n)
        assert find_rainbow(coloring, forest) is None, (k, t, n)
        if n == 2 * (2 * k + t):
            with pytest.raises(OutOfRegionError):
                ar_linear_forest(k, t, n)
        else:
            assert ar_linear_forest(k, t, n) == colors, (k, t, n)
        assert time.perf_counter() - t0 < 300.0
    dt = time.perf_counter() - t0
    print(f"criterion 4 PASS: witnesses 14 (formula refuses the perfect-"
          f"matching order), 22, 55, 71, all rainbow-free ({dt:.2f}s)")


def test_criterion_5_region_inequality(capsys):
    t0 = time.perf_counter()
    code, doc = run_json(capsys, ["verify", "region", "--k-max", "40",
                                  "--t-max", "40"])
    dt = time.perf_counter() - t0
    assert code == 0
    assert doc["ok"] is True and doc["violations"] == 0
    assert dt < 60.0

    # the cutoff witness at (2,2): gap 1 at n=41, gap 0 at n=42
    code = cli.main(["verify", "region", "--k-max", "2", "--t-max", "2"])
    out = capsys.readouterr().out
    assert code == 0
    row = next(l for l in out.splitlines() if l.startswith("2\t2\t"))
    fields = row.split("\t")
    assert fields[5] == "1" and fields[6] == "0"
    print(f"criterion 5 PASS: {doc['triples']} triples, zero violations, "
          f"gaps 1/0 at (2,2,41)/(2,2,42) ({dt:.2f}s)")


def test_criterion_6_claim8_brute_force(capsys):
    t0 = time.perf_counter()
    code, doc = run_json(capsys, ["verify", "claim8", "--k-max", "7",
                                  "--t-max", "6", "--vprime-extra", "12"])
    dt = time.perf_counter() - t0
    assert code == 0
    assert doc["ok"] is True and doc["violations"] == 0
    assert dt < 60.0
    print(f"criterion 6 PASS: {doc['checked']} compositions checked, "
          f"zero violations ({dt:.2f}s)")


def test_criterion_7_interval_consistency():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 60
    t0 = time.perf_counter()
    for t in range(2, 201):
        disc = 508 * t * t + 132 * t - 135
        expected = int(mpmath.floor(
            mpmath.mpf(10 * t) / 9 + mpmath.mpf(5) / 6
            + mpmath.sqrt(disc) / 18))
        k = largest_k_with_nonempty_interval(t)
        assert k == expected, t
        assert interval_nonempty(k, t) and not interval_nonempty(k + 1, t)

    # endpoint identities for k <= 40 ride on the region report
    from antiramsey.claimcheck import verify_region
    report = verify_region(40, 40)
    assert report.ok
    dt = time.perf_counter() - t0
    assert dt < 60.0
    print(f"criterion 7 PASS: largest-k matches 60-digit arithmetic for "
          f"t <= 200; endpoint identities hold for k <= 40 ({dt:.2f}s)")


def test_criterion_8_oracle_equivalence():
    forests = [parse_forest(s) for s in ("2xP2", "3xP2", "P4", "P4+P2")]
    t0 = time.perf_counter()
    cells = 0
    for forest in forests:
        for n in range(forest.total_vertices, 8):
            rng = random.Random(1000 * n + forest.total_edges)
            total = edge_count(n)
            for _ in range(500):
                c = rng.randrange(1, total + 1)
                raw = [rng.randrange(c) for _ in range(total)]
                coloring = EdgeColoring(n, tuple(raw))
                fast = find_rainbow(coloring, forest)
                slow = find_rainbow_oracle(coloring, forest)
                assert (fast is None) == (slow is None), (n, forest, raw)
            cells += 1
    dt = time.perf_counter() - t0
    assert dt < 300.0
    print(f"criterion 8 PASS: {cells} cells x 500 colorings, "
          f"zero disagreements ({dt:.2f}s)")


def test_criterion_9_reproducibility(capsys):
    search = ["search", "--n", "8", "--forest", "P4+P2", "--seed", "99",
              "--restarts", "4", "--moves", "120"]
    docs = []
    for argv in (search, search, search + ["--threads", "4"]):
        code, doc = run_json(capsys, argv)
        assert code == 0
        docs.append(doc)
    assert docs[0] == docs[1] == docs[2]

    probe = ["probe", "--k", "1", "--t", "2", "--n", "10", "--seed", "4"]
    pdocs = []
    for argv in (probe, probe, probe + ["--threads", "4"]):
        code, doc = run_json(capsys, argv)
        assert code == 0
        pdocs.append(doc)
    assert pdocs[0] == pdocs[1] == pdocs[2]

    # the certificate re-verifies: rebuild the coloring and detect
    coloring = EdgeColoring(8, tuple(docs[0]["coloring"]))
    assert coloring.color_count == docs[0]["colors"]
    assert find_rainbow(coloring, parse_forest("P4+P2")) is None
    print(f"criterion 9 PASS: byte-identical across runs and threads 1/4; "
          f"certificate re-verified at {docs[0]['colors']} colors")
