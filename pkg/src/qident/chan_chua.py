"""Exact solver expressing q^(2s) psi^(8s)(q^2) in the quadratic T-products,
the recorded audit of the stated 32-fold identity, and the T-recurrence.

The solver samples even q-exponents of an overdetermined linear system and
eliminates over exact rationals; uniqueness comes from full column rank, and
the solution is then re-verified coefficientwise against the whole series,
far beyond the sampled rows.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from . import report as rp
from .generators import gen_psi, t2_series, t_series
from .series import QSeries, first_difference

EXTRA_ROWS = 10


@dataclass
class CoeffSolution:
    s: int
    basis: list[tuple[int, int]]
    values: list[Fraction]
    unique: bool
    order_used: int
    residual_ok: bool
    consistent: bool = True


def basis_pairs(s: int) -> list[tuple[int, int]]:
    """(m, n) with m + n = 2s, m >= n >= 2, largest spread first."""
    return [(m, 2 * s - m) for m in range(2 * s - 2, s - 1, -1)]


def _row_echelon(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """In-place forward elimination; returns pivot column list."""
    rows, cols = len(matrix), len(matrix[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if matrix[i][c]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        inv = Fraction(1) / matrix[r][c]
        matrix[r] = [x * inv for x in matrix[r]]
        rhs[r] = rhs[r] * inv
        for i in range(rows):
            if i != r and matrix[i][c]:
                f = matrix[i][c]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def solve_cc(s: int, order: int) -> CoeffSolution:
    """Solve q^(2s) psi^(8s)(q^2) = sum a_{m,n} T_{2m} T_{2n} over the basis
    pairs, then check the solution against every coefficient up to the
    working order."""
    if s < 2:
        raise ValueError("need s >= 2")
    pairs = basis_pairs(s)
    nvars = len(pairs)
    rows = nvars + EXTRA_ROWS
    max_exp = 2 * (rows + 1)
    if order < max_exp:
        raise ValueError(f"order {order} too small; need at least {max_exp}")

    psi2 = gen_psi(order).substitute_power(2)
    lhs = (psi2 ** (8 * s)).shift(2 * s)
    products = [t_series(m, order) * t_series(n, order) for m, n in pairs]

    exponents = [2 * j for j in range(2, rows + 2)]
    matrix = [[products[c][e] for c in range(nvars)] for e in exponents]
    vector = [lhs[e] for e in exponents]
    pivots = _row_echelon(matrix, vector)

    unique = len(pivots) == nvars
    consistent = all(any(matrix[i]) or vector[i] == 0 for i in range(len(matrix)))
    if not (unique and consistent):
        return CoeffSolution(s, pairs, [], unique, order, False, consistent)

    values = [Fraction(0)] * nvars
    for r, c in enumerate(pivots):
        values[c] = vector[r]

    combo = QSeries([Fraction(0)] * (order + 1))
    for a, p in zip(values, products):
        combo = combo + p * a
    residual_ok = first_difference(lhs, combo, order) is None
    return CoeffSolution(s, pairs, values, unique, order, residual_ok)


def solution_to_json(sol: CoeffSolution) -> str:
    return json.dumps({
        "s": sol.s,
        "basis": [list(p) for p in sol.basis],
        "values": [str(v) for v in sol.values],
        "unique": sol.unique,
        "order_used": sol.order_used,
        "residual_ok": sol.residual_ok,
        "consistent": sol.consistent,
    }, indent=2)


def stated_rhs_32(order: int) -> QSeries:
    """The 32-fold right side as stated: (25/4 T10 T6 - 21/4 T8^2 - T4 T12)/75600."""
    t = {k: t_series(k, order) for k in (2, 3, 4, 5, 6)}
    return (t[5] * t[3] * Fraction(25, 4) - (t[4] ** 2) * Fraction(21, 4)
            - t[2] * t[6]) * Fraction(1, 75600)


def verify_identity32(order: int) -> rp.VerificationReport:
    """Audit of the stated identity q^8 psi^32(q^2) = (25/4 T10 T6
    - 21/4 T8^2 - T4 T12)/75600.  The stated coefficients do not reproduce
    the left side; the first disagreement is recorded as a witness and the
    solver's own coefficient set (which does, with zero residual) is
    attached for reference."""
    started = time.perf_counter()
    psi2 = gen_psi(order).substitute_power(2)
    lhs = (psi2 ** 32).shift(8)
    rhs = stated_rhs_32(order)
    diff = first_difference(lhs, rhs, order)

    sol = solve_cc(4, order)
    params = {"order": str(order), "solver_residual_ok": str(sol.residual_ok).lower(),
              "solver_unique": str(sol.unique).lower()}
    for (m, n), v in zip(sol.basis, sol.values):
        params[f"solver_a_{m}_{n}"] = str(v)

    notes = []
    negated = first_difference(lhs, -rhs, order) is None
    if negated:
        notes.append("the stated right side equals the negated left side: "
                     "a global sign flip on the stated coefficient set")
    notes.append("solver coefficients above reproduce the left side exactly "
                 f"through q^{order}")

    if diff is None:
        return rp.VerificationReport("eq32", params, rp.PASS, None,
                                     rp.elapsed_ms(started), notes)
    n, a, b = diff
    return rp.VerificationReport("eq32", params, rp.MISMATCH_RECORDED,
                                 rp.Mismatch(n, str(a), str(b)),
                                 rp.elapsed_ms(started), notes)


def verify_t_recurrence(n_max: int, order: int) -> rp.VerificationReport:
    """T_{2n+8} = T_2 T_{2n+6} + 12 sum_{j=0}^n binom(2n+4, 2j+2)
    T_{2j+4} T_{2n-2j+4}, checked for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("need n_max >= 0")
    started = time.perf_counter()
    t2 = t2_series(order)
    cache = {k: t_series(k, order) for k in range(2, n_max + 5)}
    for n in range(n_max + 1):
        lhs = cache[n + 4]
        rhs = t2 * cache[n + 3]
        for j in range(n + 1):
            rhs = rhs + cache[j + 2] * cache[n - j + 2] * (
                12 * math.comb(2 * n + 4, 2 * j + 2))
        diff = first_difference(lhs, rhs, order)
        if diff is not None:
            e, a, b = diff
            return rp.VerificationReport(
                "t-recurrence", {"n_max": str(n_max), "order": str(order),
                                 "failed_at_n": str(n)},
                rp.FAIL, rp.Mismatch(e, str(a), str(b)), rp.elapsed_ms(started))
    return rp.VerificationReport("t-recurrence",
                                 {"n_max": str(n_max), "order": str(order)},
                                 rp.PASS, None, rp.elapsed_ms(started))
