"""Counting-skeleton checks: alpha/omega, bounds, region scan."""

from fractions import Fraction

import pytest

from antiramsey.claimcheck import (OmegaInput, alpha, bounds_ledger, omega,
                                   verify_beta_identity, verify_claim8,
                                   verify_region)


def test_alpha_piecewise_values():
    assert alpha(1, 10, 2) == 30  # max{30, 30}
    assert alpha(2, 10, 2) == 50  # max{50, 30}
    assert alpha(3, 0, 2) == 8  # max{0, 8}
    assert alpha(5, 10, 2) == 30  # fi >= 3 same as fi = 3
    assert alpha(1, 0, 3) == 12  # max{0, 12}
    with pytest.raises(ValueError):
        alpha(0, 10, 2)


def test_omega_values():
    assert omega(OmegaInput((1,), 10, 2)) == 30
    assert omega(OmegaInput((1, 1), 10, 2)) == 63  # 30 + 30 + 3
    assert omega(OmegaInput((2,), 10, 2)) == 50
    # the pair witnesses the split-is-better direction: 63 > 50
    assert omega(OmegaInput((1, 1, 1), 0, 2)) == 3 * 10 + 3 * (0 + 1 + 2)


def test_omega_input_validation():
    with pytest.raises(ValueError):
        OmegaInput((), 4, 2)
    with pytest.raises(ValueError):
        OmegaInput((1, 0), 4, 2)
    with pytest.raises(ValueError):
        OmegaInput((1,), -1, 2)
    with pytest.raises(ValueError):
        OmegaInput((1,), 4, 1)
    inp = OmegaInput((2, 1, 1), 16, 3)
    assert inp.k == 5
    assert inp.h1_size == 16


def test_claim8_brute_force():
    report = verify_claim8(7, 6, 12)
    assert report.ok
    assert report.violations == 0
    # 63 compositions across k = 2..7, each at 13 vprime values, 5 t values
    assert report.checked == 63 * 13 * 5
    assert len(report.rows) == 30
    assert all(row.witness == "" for row in report.rows)
    header = report.tsv_rows()[0]
    assert header.startswith("k\tt\t")
    with pytest.raises(ValueError):
        verify_claim8(1, 6, 12)


def test_bounds_ledger_branches():
    # low n: the 2(v'+t+3) branch; the recombination misses beta2 by
    # exactly kt + 3k - t - 3
    b = bounds_ledger(2, 2, 20)
    assert (b.x_bound, b.y_bound) == (20, 32)
    assert not b.uses_3vprime
    assert b.identity_holds is None
    assert b.residual_beta2 == 2 * 2 + 3 * 2 - 2 - 3

    # higher n: the 3v' branch, where x + y recombines into beta1 exactly
    b = bounds_ledger(2, 2, 30)
    assert b.uses_3vprime
    assert b.identity_holds is True
    assert b.x_bound + b.y_bound == b.beta1

    # k = 1 kills the whole y bound
    assert bounds_ledger(1, 5, 40).y_bound == 0
    with pytest.raises(ValueError):
        bounds_ledger(0, 2, 10)


def test_region_scan_small_box():
    report = verify_region(10, 10)
    assert report.ok
    assert report.violations == 0

    row = report.row(2, 2)
    assert (row.g, row.f) == (16, Fraction(41))
    assert row.n_count == 26
    assert row.gap_at_floor == 1  # mu - beta1 at n = 41
    assert row.gap_beyond == 0  # and 0 at n = 42: the cutoff is exact

    # non-integral f: the gap is (k-t+1)(f+1-n), so 2 * 1.5 = 3 at floor(f)
    # and the first nonpositive value sits at ceil(f) + 1
    row = report.row(4, 3)
    assert row.f == Fraction(135, 2)
    assert row.gap_at_floor == 3
    assert row.gap_beyond == -1

    assert report.row(5, 2).g == 40
    with pytest.raises(KeyError):
        report.row(11, 2)
    with pytest.raises(ValueError):
        verify_region(3, 4)


def test_region_tsv_shape():
    report = verify_region(4, 3)
    rows = report.tsv_rows()
    assert rows[0].split("\t")[:4] == ["k", "t", "g", "f"]
    assert all(r.split("\t")[7] == "pass" for r in rows[1:])


def test_beta_identity_dense():
    report = verify_beta_identity(20)
    assert report.ok
    assert report.points == 20 * 19 * 21
    assert report.first_failure == ""
    with pytest.raises(ValueError):
        verify_beta_identity(2)
