"""Truncated formal power series in q with exact rational coefficients.

A QSeries of order N stores the coefficients of q^0 .. q^N exactly, as
``fractions.Fraction`` values.  Binary operations truncate to the smaller
operand's order; coefficients beyond the stored order are unknown, never
assumed zero.  Truncation is always explicit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction

_SCALARS = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _packed_convolve(xs: Sequence[int], ys: Sequence[int], n_out: int) -> list[int]:
    """Convolution of integer sequences via big-integer packing.

    Coefficients are packed into fixed-width byte digits so one large
    multiplication computes the whole convolution.  Negative entries are
    handled by splitting each sequence into its positive and negative
    parts (digits must stay non-negative for carry-free unpacking).
    """
    xs = xs[:n_out]
    ys = ys[:n_out]
    ax = max(map(abs, xs), default=0)
    ay = max(map(abs, ys), default=0)
    if ax == 0 or ay == 0:
        return [0] * n_out
    # max |sum of products landing on one digit|, also bounds the +/+ and +/- digit sums
    bound = min(len(xs), len(ys)) * ax * ay
    width = (bound.bit_length() + 8) // 8  # bytes per digit, with headroom

    def pack(vs: Sequence[int], positive: bool) -> int:
        buf = bytearray(len(vs) * width)
        for i, c in enumerate(vs):
            if (c > 0) == positive and c != 0:
                buf[i * width:(i + 1) * width] = abs(c).to_bytes(width, "little")
        return int.from_bytes(buf, "little")

    xp, xn = pack(xs, True), pack(xs, False)
    yp, yn = pack(ys, True), pack(ys, False)
    plus = xp * yp + xn * yn
    minus = xp * yn + xn * yp
    nbytes = n_out * width
    pb = plus.to_bytes(max(nbytes, (plus.bit_length() + 7) // 8), "little")[:nbytes]
    mb = minus.to_bytes(max(nbytes, (minus.bit_length() + 7) // 8), "little")[:nbytes]
    out = []
    for k in range(n_out):
        seg = slice(k * width, (k + 1) * width)
        out.append(int.from_bytes(pb[seg], "little") - int.from_bytes(mb[seg], "little"))
    return out


class QSeries:
    """q-expansion truncated at a fixed order, exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} outside stored order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"QSeries(order={self.order}, [{head}{tail}])"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return QSeries(cs)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return QSeries([Fraction(0)] * (self.order + 1))
            return QSeries([c * other for c in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if all(c.denominator == 1 for c in a[:n + 1]) and all(
                c.denominator == 1 for c in b[:n + 1]):
            ints = _packed_convolve([c.numerator for c in a[:n + 1]],
                                    [c.numerator for c in b[:n + 1]], n + 1)
            return QSeries(ints)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return QSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("series powers take non-negative integer exponents")
        result = one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = Fraction(1) / a[0]
        out = [inv0] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if a[k]:
                    acc += a[k] * out[n - k]
            out[n] = -inv0 * acc
        return QSeries(out)

    def substitute_power(self, m: int, order: int | None = None) -> "QSeries":
        """Replace q by q^m.  Result order defaults to this series' order."""
        if m < 1:
            raise ValueError("substitution exponent must be >= 1")
        target = self.order if order is None else min(order, self.order * m)
        out = [Fraction(0)] * (target + 1)
        for k, c in enumerate(self.coeffs):
            e = k * m
            if e > target:
                break
            out[e] = c
        return QSeries(out)

    def alternate_sign(self) -> "QSeries":
        """Replace q by -q."""
        return QSeries([-c if n & 1 else c for n, c in enumerate(self.coeffs)])

    def shift(self, j: int) -> "QSeries":
        """Multiply by q^j (j >= 0).  Order grows by j; no information is lost."""
        if j < 0:
            raise ValueError("shift takes a non-negative exponent")
        return QSeries((Fraction(0),) * j + self.coeffs)

    def truncate(self, n: int) -> "QSeries":
        """Drop coefficients above q^n.  Never extends: n must be <= order."""
        if not 0 <= n <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} series at {n}")
        return QSeries(self.coeffs[:n + 1])


def zero(order: int) -> QSeries:
    return QSeries([Fraction(0)] * (order + 1))


def one(order: int) -> QSeries:
    return QSeries([Fraction(1)] + [Fraction(0)] * order)


def constant(c, order: int) -> QSeries:
    return QSeries([_as_fraction(c)] + [Fraction(0)] * order)


def from_terms(terms: Mapping[int, Fraction | int], order: int) -> QSeries:
    cs = [Fraction(0)] * (order + 1)
    for n, c in terms.items():
        if not 0 <= n <= order:
            raise ValueError(f"exponent {n} outside order {order}")
        cs[n] = _as_fraction(c)
    return QSeries(cs)


def divide(num: QSeries, den: QSeries) -> QSeries:
    """Exact series quotient.  The denominator's valuation must not exceed
    the numerator's; the result order drops by that valuation."""
    v = den.valuation()
    if v is None:
        raise ZeroDivisionError("division by the zero series")
    if v:
        if any(num.coeffs[:v]):
            raise ValueError("quotient would have negative powers of q")
        num = QSeries(num.coeffs[v:])
        den = QSeries(den.coeffs[v:])
    return num * den.invert()


def first_difference(lhs: QSeries, rhs: QSeries, upto: int) -> tuple[int, Fraction, Fraction] | None:
    """First exponent <= upto where the two series disagree, or None."""
    if upto > min(lhs.order, rhs.order):
        raise ValueError("comparison range exceeds a stored order")
    for n in range(upto + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return n, lhs.coeffs[n], rhs.coeffs[n]
    return None


# -- text dump format -------------------------------------------------------

_HEADER = re.compile(r"^qseries order=(\d+)$")


def dump_series(s: QSeries) -> str:
    """Render as: header line ``qseries order=N``, then N+1 lines ``n c``
    with c the exact coefficient in lowest terms (p/q, or p when q = 1)."""
    lines = [f"qseries order={s.order}"]
    lines.extend(f"{n} {c}" for n, c in enumerate(s.coeffs))
    return "\n".join(lines) + "\n"


def load_series(text: str) -> QSeries:
    lines = text.strip().splitlines()
    if not lines:
        raise ValueError("empty series dump")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise ValueError(f"bad series header: {lines[0]!r}")
    order = int(m.group(1))
    if len(lines) != order + 2:
        raise ValueError(f"expected {order + 1} coefficient lines, got {len(lines) - 1}")
    cs = [Fraction(0)] * (order + 1)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad coefficient line: {line!r}")
        n = int(parts[0])
        if n != i:
            raise ValueError(f"coefficient lines out of order at {line!r}")
        cs[n] = Fraction(parts[1])
    return QSeries(cs)
