"""The full verification battery, one criterion per function.

Each criterion returns a CriterionResult with a pass flag, a short detail
string, and its runtime; stated time budgets are part of the pass condition.
Criteria are independent and pure, so the runner can spread them over a
thread pool (QIDENT_JOBS overrides the worker count).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import chan_chua, counts, determinants, elliptic, kw, numeric
from .generators import gen_eta_f
from .rings import KPoly
from .series import QSeries, dump_series, load_series


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    runtime_ms: int
    detail: str


def _result(index: int, name: str, started: float, ok: bool, detail: str,
            budget_s: float | None = None) -> CriterionResult:
    elapsed = time.perf_counter() - started
    if budget_s is not None and elapsed > budget_s:
        ok = False
        detail += f"; exceeded {budget_s:g} s budget ({elapsed:.1f} s)"
    return CriterionResult(index, name, ok, int(round(elapsed * 1000)), detail)


def criterion_1() -> CriterionResult:
    """Divisor formulas against theta-power oracle, n <= 2000."""
    started = time.perf_counter()
    limit = 2000
    r2 = counts.oracle_counts("squares", 2, limit)
    r4 = counts.oracle_counts("squares", 4, limit)
    bad = next((n for n in range(1, limit + 1)
                if r2[n] != counts.r2_divisor(n)
                or r4[n] != counts.r4_divisor(n)), None)
    return _result(1, "divisor-formulas", started, bad is None,
                   f"r2/r4 match oracle for 1..{limit}" if bad is None
                   else f"first disagreement at n={bad}", budget_s=5.0)


def criterion_2() -> CriterionResult:
    """Lambert-series identity suite to order 200."""
    started = time.perf_counter()
    reports = [counts.verify_jacobi(w, 200) for w in (2, 4, 6, 8)]
    reports.append(counts.verify_liouville10(200))
    reports.append(counts.verify_milne24(200))
    bad = [r.task for r in reports if r.status != "pass"]
    return _result(2, "lambert-suite", started, not bad,
                   "jacobi2/4/6/8, liouville10, milne24 all pass at order 200"
                   if not bad else f"failed: {bad}", budget_s=30.0)


def criterion_3() -> CriterionResult:
    """Multiple-sum evaluators against oracle counts."""
    started = time.perf_counter()
    checks: list[tuple[str, bool]] = []
    for s, n_max in ((1, 40), (2, 40), (3, 15)):
        oracle = counts.oracle_counts("triangular", 4 * s * s, n_max)
        for n in range(n_max + 1):
            v = kw.eval_kw_4s2(s, n)
            c = kw.eval_cc(s, n)
            checks.append((f"4s2 s={s} n={n}",
                           v == oracle[n] and v.denominator == 1 and c == v))
    for s in (1, 2):
        oracle = counts.oracle_counts("triangular", 4 * s * (s + 1), 40)
        for n in range(41):
            v = kw.eval_kw_4ss1(s, n)
            checks.append((f"4ss1 s={s} n={n}",
                           v == oracle[n] and v.denominator == 1))
    bad = [name for name, ok in checks if not ok]
    return _result(3, "kw-sums", started, not bad,
                   f"{len(checks)} oracle comparisons, all exact"
                   if not bad else f"failed: {bad[:4]}", budget_s=60.0)


def criterion_4() -> CriterionResult:
    """Symmetrization lemma for s in {2,3}, admissible m <= 25."""
    started = time.perf_counter()
    bad = []
    for s in (2, 3):
        for m in range(s * s, 26):
            if m % 2 != (s * s) % 2:
                continue
            if kw.symmetrize_check(s, m).status != "pass":
                bad.append((s, m))
    return _result(4, "symmetrization", started, not bad,
                   "both weight orders agree up to the sign and s! factor"
                   if not bad else f"failed at {bad}")


def criterion_5() -> CriterionResult:
    """Determinant formulas to order 150."""
    started = time.perf_counter()
    reports = [determinants.verify_milne_4s2(s, 150) for s in (1, 2, 3)]
    reports += [determinants.verify_milne_4ss1(s, 150) for s in (1, 2)]
    bad = [f"{r.task} s={r.parameters['s']}" for r in reports if r.status != "pass"]
    return _result(5, "determinant-formulas", started, not bad,
                   "4s^2 for s<=3 and 4s(s+1) for s<=2 at order 150"
                   if not bad else f"failed: {bad}", budget_s=60.0)


def criterion_6() -> CriterionResult:
    """24th-power identities to order 200, with the tau(2) spot value."""
    started = time.perf_counter()
    r_psi = determinants.verify_psi24(200)
    r_eta = determinants.verify_eta24(200)
    tau_q2 = ((gen_eta_f(3) ** 24).shift(1))[2]
    ok = (r_psi.status == "pass" and r_eta.status == "pass"
          and tau_q2 == -24)
    return _result(6, "24th-powers", started, ok,
                   f"psi24 {r_psi.status}, eta24 {r_eta.status}, "
                   f"q^2 coefficient {tau_q2}")


def criterion_7() -> CriterionResult:
    """Bilinear solver for s = 2..6."""
    started = time.perf_counter()
    bad = []
    for s in range(2, 7):
        sol = chan_chua.solve_cc(s, 4 * s + 80)
        if not (sol.unique and sol.residual_ok and sol.consistent):
            bad.append(f"s={s} not solved cleanly")
            continue
        if s == 2 and sol.values != [Fraction(1)]:
            bad.append(f"s=2 values {sol.values}")
        if s == 3 and sol.values != [Fraction(1, 72), Fraction(-1, 72)]:
            bad.append(f"s=3 values {sol.values}")
    return _result(7, "bilinear-solver", started, not bad,
                   "unique zero-residual solutions for s=2..6; pinned "
                   "values at s=2,3 match" if not bad else "; ".join(bad))


def criterion_8() -> CriterionResult:
    """Audit of the stated 32-fold identity."""
    started = time.perf_counter()
    r = chan_chua.verify_identity32(120)
    fm = r.first_mismatch
    ok = (r.status == "mismatch-recorded" and fm is not None
          and fm.exponent == 8 and fm.lhs_value == "1" and fm.rhs_value == "-1"
          and r.parameters.get("solver_residual_ok") == "true")
    detail = ("stated coefficients first fail at q^8 (lhs 1, rhs -1); "
              "solver's own set has zero residual")
    if not ok:
        detail = f"unexpected report: status={r.status}, mismatch={fm}"
    return _result(8, "identity32-audit", started, ok, detail)


def criterion_9() -> CriterionResult:
    """T-recurrence for n = 0..6 to order 200."""
    started = time.perf_counter()
    r = chan_chua.verify_t_recurrence(6, 200)
    return _result(9, "t-recurrence", started, r.status == "pass",
                   "n = 0..6 at order 200" if r.status == "pass"
                   else f"failed: {r.parameters}")


def criterion_10() -> CriterionResult:
    """Elliptic suite: Hankel, Fourier bridge, continued fraction, parity."""
    started = time.perf_counter()
    bad = []
    for n in range(1, 5):
        if elliptic.hankel_check(n).status != "pass":
            bad.append(f"hankel n={n}")
    cs = elliptic.sncd_coeffs(3)
    if cs[1] != KPoly([-4, 2]):
        bad.append("c_2 != 2 kappa - 4")
    if elliptic.hankel_expected(2) != KPoly.monomial(2, 12):
        bad.append("n=2 expected value not 12 kappa^2")
    if elliptic.hankel_expected(3) != KPoly.monomial(6, 34560):
        bad.append("n=3 expected value not 34560 kappa^6")
    if elliptic.verify_fourier(6, 100).status != "pass":
        bad.append("fourier m<=6 order 100")
    if elliptic.cf_expand(10, 8).status != "pass":
        bad.append("continued fraction to t^16")
    if elliptic.pythagorean_check(13).status != "pass":
        bad.append("pythagorean order 13")
    return _result(10, "elliptic-suite", started, not bad,
                   "hankel n<=4, fourier m<=6, cf to t^16, parity to u^13"
                   if not bad else f"failed: {bad}")


def criterion_11() -> CriterionResult:
    """Numeric modular identities at three sample points."""
    started = time.perf_counter()
    eps = 1e-9
    taus = [1j, 2j, 0.3 + 0.8j]
    bad = []
    for tau in taus:
        for rep in (numeric.verify_ts(tau, eps),
                    numeric.verify_e4_modular(tau, eps),
                    numeric.verify_8t(tau, eps)):
            if not rep.ok:
                bad.append(f"{rep.task} at {tau}: {rep.residual:.2e}")
    return _result(11, "numeric-suite", started, not bad,
                   "ts, E4-modularity, 8t below 1e-9 at i, 2i, 0.3+0.8i"
                   if not bad else f"failed: {bad}", budget_s=1.0)


def criterion_12() -> CriterionResult:
    """Property suites: ring axioms, involution, inversion, Hankel scaling."""
    started = time.perf_counter()
    rng = random.Random(118)
    bad = []

    def rand_series(order: int) -> QSeries:
        return QSeries([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(order + 1)])

    for _ in range(25):
        order = rng.randint(0, 64)
        a, b, c = (rand_series(order) for _ in range(3))
        if (a + b) * c != a * c + b * c:
            bad.append("distributivity")
        if a * (b * c) != (a * b) * c:
            bad.append("associativity")
        if a * b != b * a:
            bad.append("commutativity")
        if a.alternate_sign().alternate_sign() != a:
            bad.append("involution")
        if a.substitute_power(2).substitute_power(3) != a.substitute_power(6):
            bad.append("substitution composition")
        u = a + (1 - a[0])  # force unit constant term
        if (u * u.invert()).coeffs != (Fraction(1),) + (Fraction(0),) * order:
            bad.append("inversion")
        e = rng.randint(0, 8)
        small = a.truncate(min(order, 8))
        p = QSeries([Fraction(1)] + [Fraction(0)] * small.order)
        for _ in range(e):
            p = p * small
        if small ** e != p:
            bad.append("power")
        if load_series(dump_series(a)) != a:
            bad.append("dump round-trip")
    if elliptic.hankel_scaling_check(3, 100).status != "pass":
        bad.append("hankel scaling")
    bad = sorted(set(bad))
    return _result(12, "property-suites", started, not bad,
                   "ring axioms, involution, inversion, power, round-trip, "
                   "hankel scaling (100 trials)" if not bad else f"failed: {bad}")


ALL_CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
                criterion_5, criterion_6, criterion_7, criterion_8,
                criterion_9, criterion_10, criterion_11, criterion_12]


def run_selftest(jobs: int | None = None) -> list[CriterionResult]:
    if jobs is None:
        env = os.environ.get("QIDENT_JOBS")
        jobs = int(env) if env else (os.cpu_count() or 1)
    jobs = max(1, jobs)
    if jobs == 1:
        results = [fn() for fn in ALL_CRITERIA]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda fn: fn(), ALL_CRITERIA))
    return sorted(results, key=lambda r: r.index)
