"""Multiple-sum formulas for triangular-number counts.

Each evaluator enumerates ordered tuples (a_1..a_s, r_1..r_s) with
a_1 r_1 + ... + a_s r_s equal to a fixed target, applies a polynomial
weight in the a_i, and scales by an exact rational prefactor.  For s >= 2
every weight here contains a factor that vanishes when two a_i coincide,
so tuples with repeated a-values are skipped outright.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import report as rp


def _vandermonde_sq(a: Sequence[int]) -> int:
    v = 1
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            v *= a[i] * a[i] - a[j] * a[j]
    return v


def weight_plain(a: Sequence[int]) -> int:
    """a_1 ... a_s * prod_{i<j} (a_i^2 - a_j^2)^2"""
    v = _vandermonde_sq(a)
    return math.prod(a) * v * v


def weight_cubed(a: Sequence[int]) -> int:
    """(a_1 ... a_s)^3 * prod_{i<j} (a_i^2 - a_j^2)^2"""
    v = _vandermonde_sq(a)
    return math.prod(a) ** 3 * v * v


def weight_staircase(a: Sequence[int]) -> int:
    """a_1 a_2^3 ... a_s^(2s-1) * prod_{i<j} (a_i^2 - a_j^2)"""
    w = 1
    for i, ai in enumerate(a):
        w *= ai ** (2 * i + 1)
    return w * _vandermonde_sq(a)


def _count_r_tuples(a: Sequence[int], total: int) -> int:
    """Number of tuples of odd positive r_i with sum a_i r_i = total."""
    s = len(a)
    suffix_min = [0] * (s + 1)
    for i in range(s - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + a[i]

    def rec(i: int, rem: int) -> int:
        if i == s - 1:
            if rem >= a[i] and rem % a[i] == 0 and (rem // a[i]) % 2 == 1:
                return 1
            return 0
        count = 0
        r = 1
        while a[i] * r + suffix_min[i + 1] <= rem:
            count += rec(i + 1, rem - a[i] * r)
            r += 2
        return count

    return rec(0, total)


@dataclass(frozen=True)
class TupleSum:
    """A constrained weighted sum over tuples (a_1..a_s, r_1..r_s) of
    positive integers with sum a_i r_i = target.  The r_i are always odd
    here; odd_a restricts the a_i as well.  The weight is a polynomial in
    the a_i; each admissible a-tuple contributes weight(a) once per valid
    r-tuple."""

    s: int
    target: int
    odd_a: bool
    weight: Callable[[Sequence[int]], int]

    def evaluate(self) -> int:
        """Enumerate a-tuples with sum a_i <= target (each r_i >= 1), then
        count r-completions.  Tuples with a repeated a-value are skipped for
        s >= 2 since every weight used here vanishes on them."""
        if self.s < 1 or self.target < 0:
            raise ValueError("need s >= 1 and a non-negative target")
        s, target = self.s, self.target
        step = 2 if self.odd_a else 1
        acc = 0
        chosen: list[int] = []

        def rec(pos: int, budget: int):
            nonlocal acc
            if pos == s:
                w = self.weight(chosen)
                if w:
                    acc += w * _count_r_tuples(chosen, target)
                return
            remaining_min = s - pos - 1
            v = 1
            while v + remaining_min <= budget:
                if s == 1 or v not in chosen:
                    chosen.append(v)
                    rec(pos + 1, budget - v)
                    chosen.pop()
                v += step

        rec(0, target)
        return acc


def weighted_tuple_sum(s: int, target: int, odd_a: bool,
                       weight: Callable[[Sequence[int]], int]) -> int:
    return TupleSum(s, target, odd_a, weight).evaluate()


def _factorial_product(upto: int) -> int:
    return math.prod(math.factorial(j) for j in range(1, upto + 1))


def eval_kw_4s2(s: int, n: int) -> Fraction:
    """t_{4s^2}(n) as the odd-odd multiple sum with weight
    a_1...a_s prod (a_i^2-a_j^2)^2, prefactor 1/(s! 4^(s(s-1)) prod_{j<2s} j!)."""
    if s < 1 or n < 0:
        raise ValueError("need s >= 1 and n >= 0")
    target = 2 * n + s * s
    total = weighted_tuple_sum(s, target, True, weight_plain)
    denom = math.factorial(s) * 4 ** (s * (s - 1)) * _factorial_product(2 * s - 1)
    return Fraction(total, denom)


def eval_kw_4ss1(s: int, n: int) -> Fraction:
    """t_{4s(s+1)}(n): a_i unrestricted, r_i odd, weight (a_1...a_s)^3
    prod (a_i^2-a_j^2)^2, prefactor 2^s/(s! prod_{j<=2s} j!)."""
    if s < 1 or n < 0:
        raise ValueError("need s >= 1 and n >= 0")
    target = n + s * (s + 1) // 2
    total = weighted_tuple_sum(s, target, False, weight_cubed)
    return Fraction(2 ** s * total,
                    math.factorial(s) * _factorial_product(2 * s))


def eval_cc(s: int, n: int) -> Fraction:
    """t_{4s^2}(n) via the staircase-weight variant: weight
    a_1 a_2^3 ... a_s^(2s-1) prod (a_i^2-a_j^2), prefactor
    (-1)^(s(s-1)/2) / (4^(s(s-1)) prod_{j<2s} j!); no 1/s! here."""
    if s < 1 or n < 0:
        raise ValueError("need s >= 1 and n >= 0")
    target = 2 * n + s * s
    total = weighted_tuple_sum(s, target, True, weight_staircase)
    sign = -1 if (s * (s - 1) // 2) % 2 else 1
    denom = 4 ** (s * (s - 1)) * _factorial_product(2 * s - 1)
    return Fraction(sign * total, denom)


def symmetrize_check(s: int, m: int) -> rp.VerificationReport:
    """R_s(m, P_s) = (-1)^(s(s-1)/2) s! R_s(m, P'_s), where R_s sums the
    weight over odd a, r tuples with sum a_i r_i = m.  Each side is
    enumerated independently."""
    started = time.perf_counter()
    r_plain = weighted_tuple_sum(s, m, True, weight_plain)
    r_stair = weighted_tuple_sum(s, m, True, weight_staircase)
    sign = -1 if (s * (s - 1) // 2) % 2 else 1
    expect = sign * math.factorial(s) * r_stair
    params = {"s": str(s), "m": str(m),
              "plain_sum": str(r_plain), "staircase_sum": str(r_stair)}
    if r_plain == expect:
        return rp.VerificationReport("symmetrize", params, rp.PASS, None,
                                     rp.elapsed_ms(started))
    return rp.VerificationReport("symmetrize", params, rp.FAIL,
                                 rp.Mismatch(m, str(r_plain), str(expect)),
                                 rp.elapsed_ms(started))
