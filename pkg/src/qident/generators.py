"""Named q-series generators: theta functions, an eta-type product, and the
divisor-style Lambert families the identity checks are built from.

All generators return exact QSeries of the requested order.  The Lambert
families are produced by walking geometric progressions of exponents, one
per summation index, which costs O(N log N) coefficient updates at order N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import QSeries

INDEX_MAPS = {
    "all": lambda k: k,
    "odd": lambda k: 2 * k - 1,
    "even": lambda k: 2 * k,
}

TERM_SIGNS = {
    "plus": lambda k: 1,
    "minus": lambda k: -1,
    "alternating": lambda k: -1 if k & 1 else 1,        # (-1)^k
    "alternating1": lambda k: 1 if k & 1 else -1,       # (-1)^(k-1)
}


@dataclass(frozen=True)
class LambertSpec:
    """One summand family  sum_k sign(k) * g(k)^weight * q^(a*g(k)) / (1 -+ q^(b*g(k)))
    with g the index map, a the numerator stride, b the denominator stride.
    den_sign +1 means denominator 1 - q^(b*g(k)), -1 means 1 + q^(b*g(k))."""

    weight: int
    num_stride: int
    den_stride: int
    den_sign: int = 1
    index_map: str = "all"
    term_sign: str = "plus"

    def __post_init__(self):
        if self.weight < 0 or self.num_stride < 1 or self.den_stride < 1:
            raise ValueError("lambert parameters out of range")
        if self.den_sign not in (1, -1):
            raise ValueError("denominator sign must be +1 or -1")
        if self.index_map not in INDEX_MAPS or self.term_sign not in TERM_SIGNS:
            raise ValueError("unknown index map or term sign")


def gen_lambert(spec: LambertSpec, order: int) -> QSeries:
    """Expand the Lambert family: each index k contributes
    sign(k)*g(k)^weight * (q^(a g) + s q^(a g + b g) + s^2 q^(a g + 2 b g) + ...)
    where s is the denominator sign."""
    gmap = INDEX_MAPS[spec.index_map]
    tsign = TERM_SIGNS[spec.term_sign]
    out = [0] * (order + 1)
    k = 1
    while True:
        g = gmap(k)
        e = spec.num_stride * g
        if e > order:
            break
        val = tsign(k) * g ** spec.weight
        step = spec.den_stride * g
        while e <= order:
            out[e] += val
            val *= spec.den_sign
            e += step
        k += 1
    return QSeries(out)


def gen_phi(order: int) -> QSeries:
    """phi(q) = sum over all integers of q^(k^2) = 1 + 2q + 2q^4 + 2q^9 + ..."""
    out = [0] * (order + 1)
    out[0] = 1
    k = 1
    while k * k <= order:
        out[k * k] = 2
        k += 1
    return QSeries(out)


def gen_psi(order: int) -> QSeries:
    """psi(q) = sum_{k>=0} q^(k(k+1)/2) = 1 + q + q^3 + q^6 + ..."""
    out = [0] * (order + 1)
    k = 0
    while k * (k + 1) // 2 <= order:
        out[k * (k + 1) // 2] = 1
        k += 1
    return QSeries(out)


def gen_eta_f(order: int) -> QSeries:
    """f(-q) = product_{n>=1} (1 - q^n), expanded incrementally."""
    out = [0] * (order + 1)
    out[0] = 1
    for n in range(1, order + 1):
        for e in range(order, n - 1, -1):
            out[e] -= out[e - n]
    return QSeries(out)


def c_series(j: int, order: int) -> QSeries:
    """C_{2j-1} = sum_{r>=1} (2r-1)^(2j-1) q^(2r-1) / (1 - q^(2(2r-1)))."""
    if j < 1:
        raise ValueError("need j >= 1")
    return gen_lambert(LambertSpec(2 * j - 1, 1, 2, index_map="odd"), order)


def d_series(j: int, order: int) -> QSeries:
    """D_{2j+1} = sum_{r>=1} r^(2j+1) q^(2r) / (1 - q^(4r))."""
    if j < 1:
        raise ValueError("need j >= 1")
    return gen_lambert(LambertSpec(2 * j + 1, 2, 4), order)


def t_series(k: int, order: int) -> QSeries:
    """T_{2k} = sum_{r>=1} r^(2k-1) q^(2r) / (1 - q^(4r)), for k >= 2."""
    if k < 2:
        raise ValueError("need k >= 2; the weight-1 member has its own constructor")
    return gen_lambert(LambertSpec(2 * k - 1, 2, 4), order)


def t2_series(order: int) -> QSeries:
    """T_2 = 1 + 24 sum_{j>=1} j q^(2j) / (1 + q^(2j))."""
    return gen_lambert(LambertSpec(1, 2, 2, den_sign=-1), order) * 24 + 1


def _mixed_parity_lambert(weight: int, order: int, odd_sign: int) -> QSeries:
    """sum_k k^weight q^k / (1 -+ (-q)^k), split by parity of k.

    For odd k the denominator 1 - (-q)^k is 1 + q^k when odd_sign is -1
    (and 1 - q^k for the 1 + (-q)^k variant); even k is the plain case.
    """
    odd = gen_lambert(LambertSpec(weight, 1, 1, den_sign=odd_sign, index_map="odd"), order)
    even = gen_lambert(LambertSpec(weight, 1, 1, den_sign=-odd_sign, index_map="even"), order)
    return odd + even


def s4_series(order: int) -> QSeries:
    """S4 = 1 + 16 sum_{k>=1} k^3 q^k / (1 - (-q)^k)."""
    return _mixed_parity_lambert(3, order, -1) * 16 + 1


def s6_series(order: int) -> QSeries:
    """S6 = 1 - 8 sum_{k>=1} k^5 q^k / (1 - (-q)^k)."""
    return _mixed_parity_lambert(5, order, -1) * -8 + 1


def s8_series(order: int) -> QSeries:
    """S8 = 17 + 32 sum_{k>=1} k^7 q^k / (1 - (-q)^k)."""
    return _mixed_parity_lambert(7, order, -1) * 32 + 17


def e4_series(order: int) -> QSeries:
    """E4 = 1 + 240 sum_{k>=1} k^3 q^k / (1 - q^k)."""
    return gen_lambert(LambertSpec(3, 1, 1), order) * 240 + 1


def e6_series(order: int) -> QSeries:
    """E6 = 1 - 504 sum_{k>=1} k^5 q^k / (1 - q^k)."""
    return gen_lambert(LambertSpec(5, 1, 1), order) * -504 + 1


def e8_series(order: int) -> QSeries:
    """E8 = 1 + 480 sum_{k>=1} k^7 q^k / (1 - q^k)."""
    return gen_lambert(LambertSpec(7, 1, 1), order) * 480 + 1


def series_by_key(key: str, order: int) -> QSeries:
    """Resolve a series name as used by the command line.

    Plain names: phi, psi, eta_f, T2, S4, S6, S8, E4, E6, E8.
    Indexed families use the subscript after a colon: C:1, C:3, ... (odd),
    D:3, D:5, ... (odd, >= 3), T:4, T:6, ... (even, >= 4).
    """
    plain = {
        "phi": gen_phi,
        "psi": gen_psi,
        "eta_f": gen_eta_f,
        "T2": t2_series,
        "S4": s4_series,
        "S6": s6_series,
        "S8": s8_series,
        "E4": e4_series,
        "E6": e6_series,
        "E8": e8_series,
    }
    if key in plain:
        return plain[key](order)
    if ":" in key:
        fam, _, sub = key.partition(":")
        try:
            idx = int(sub)
        except ValueError:
            raise KeyError(f"bad series subscript in {key!r}") from None
        if fam == "C" and idx >= 1 and idx % 2 == 1:
            return c_series((idx + 1) // 2, order)
        if fam == "D" and idx >= 3 and idx % 2 == 1:
            return d_series((idx - 1) // 2, order)
        if fam == "T" and idx >= 4 and idx % 2 == 0:
            return t_series(idx // 2, order)
    raise KeyError(f"unknown series key {key!r}")
