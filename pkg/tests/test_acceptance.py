"""Acceptance gate: every shipped claim, one test per criterion.

Each test drives the same criterion function the `selftest` command runs,
asserts it passed, and echoes its one-line summary (visible with -v -s or in
any failure report).  Time budgets are part of the pass condition inside the
criterion functions themselves.
"""

from qident import selftest


def _check(criterion):
    r = criterion()
    mark = "PASS" if r.passed else "FAIL"
    print(f"[{mark}] criterion {r.index:2d} {r.name}: {r.detail} "
          f"({r.runtime_ms} ms)")
    assert r.passed, f"criterion {r.index} {r.name}: {r.detail}"


def test_criterion_01_divisor_formulas_match_oracle_to_2000():
    _check(selftest.criterion_1)


def test_criterion_02_lambert_identity_suite_to_order_200():
    _check(selftest.criterion_2)


def test_criterion_03_multiple_sums_match_oracle():
    _check(selftest.criterion_3)


def test_criterion_04_symmetrization_lemma():
    _check(selftest.criterion_4)


def test_criterion_05_determinant_formulas_to_order_150():
    _check(selftest.criterion_5)


def test_criterion_06_24th_power_identities():
    _check(selftest.criterion_6)


def test_criterion_07_bilinear_solver_unique_solutions():
    _check(selftest.criterion_7)


def test_criterion_08_stated_coefficient_audit_records_mismatch():
    _check(selftest.criterion_8)


def test_criterion_09_t_recurrence():
    _check(selftest.criterion_9)


def test_criterion_10_elliptic_suite():
    _check(selftest.criterion_10)


def test_criterion_11_numeric_residuals_below_1e9():
    _check(selftest.criterion_11)


def test_criterion_12_property_suites():
    _check(selftest.criterion_12)


def test_selftest_runs_everything_and_is_deterministic():
    results = selftest.run_selftest(jobs=2)
    assert len(results) == 12
    assert all(r.passed for r in results)
    again = selftest.run_selftest(jobs=1)
    assert [(r.index, r.name, r.passed, r.detail) for r in results] == \
        [(r.index, r.name, r.passed, r.detail) for r in again]
