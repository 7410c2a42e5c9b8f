"""Determinant identities for powers of q psi^4(q^2), plus the 24th-power
consistency checks that tie the Lambert families together.

Determinants are computed division-free by cofactor expansion, which works
uniformly for series, polynomial, and rational entries; the matrices here
never exceed a handful of rows.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

from . import report as rp
from .generators import (c_series, d_series, e4_series, e6_series, e8_series,
                         gen_eta_f, gen_psi, t_series)
from .series import QSeries


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion; entries need only
    +, * and unary -."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def series_det(rows: list[list[QSeries]]) -> QSeries:
    orders = {e.order for r in rows for e in r}
    if len(orders) != 1:
        raise ValueError("matrix entries must share one truncation order")
    return cofactor_det(rows)


def _factorial_product(upto: int) -> int:
    return math.prod(math.factorial(j) for j in range(1, upto + 1))


def _psi4_q2_power(order: int, e: int) -> QSeries:
    """(q psi^4(q^2))^e, exact through q^(order + e)."""
    psi2 = gen_psi(order).substitute_power(2)
    return ((psi2 ** 4) ** e).shift(e)


def verify_milne_4s2(s: int, order: int) -> rp.VerificationReport:
    """(q psi^4(q^2))^(s^2) = det(C_{2(u+v-1)-1}) / (4^(s(s-1)) prod_{j<2s} j!)."""
    if s < 1:
        raise ValueError("need s >= 1")
    started = time.perf_counter()
    lhs = _psi4_q2_power(order, s * s)
    cs = {j: c_series(j, order) for j in range(1, 2 * s)}
    det = series_det([[cs[u + v - 1] for v in range(1, s + 1)]
                      for u in range(1, s + 1)])
    rhs = det * Fraction(1, 4 ** (s * (s - 1)) * _factorial_product(2 * s - 1))
    return rp.compare_series("milne-4s2", {"s": str(s), "order": str(order)},
                             lhs, rhs, order, started)


def verify_milne_4ss1(s: int, order: int) -> rp.VerificationReport:
    """(16 q psi^4(q^2))^(s(s+1)) = 2^(s(4s+5)) det(D_{2(u+v-1)+1}) / prod_{j<=2s} j!."""
    if s < 1:
        raise ValueError("need s >= 1")
    started = time.perf_counter()
    e = s * (s + 1)
    lhs = _psi4_q2_power(order, e) * 16 ** e
    ds = {j: d_series(j, order) for j in range(1, 2 * s)}
    det = series_det([[ds[u + v - 1] for v in range(1, s + 1)]
                      for u in range(1, s + 1)])
    rhs = det * Fraction(2 ** (s * (4 * s + 5)), _factorial_product(2 * s))
    return rp.compare_series("milne-4ss1", {"s": str(s), "order": str(order)},
                             lhs, rhs, order, started)


def psi24_rhs(order: int) -> QSeries:
    """(T_8 T_4 - T_6^2) / 72."""
    return (t_series(4, order) * t_series(2, order)
            - t_series(3, order) ** 2) * Fraction(1, 72)


def verify_psi24(order: int) -> rp.VerificationReport:
    """q^6 psi^24(q^2) = (T_8 T_4 - T_6^2) / 72."""
    started = time.perf_counter()
    psi2 = gen_psi(order).substitute_power(2)
    lhs = (psi2 ** 24).shift(6)
    return rp.compare_series("psi24", {"order": str(order)},
                             lhs, psi24_rhs(order), order, started)


def verify_eta24(order: int) -> rp.VerificationReport:
    """q f(-q)^24 = (E4 E8 - E6^2) / 1728."""
    started = time.perf_counter()
    lhs = (gen_eta_f(order) ** 24).shift(1)
    rhs = (e4_series(order) * e8_series(order)
           - e6_series(order) ** 2) * Fraction(1, 1728)
    return rp.compare_series("eta24", {"order": str(order)},
                             lhs, rhs, order, started)
