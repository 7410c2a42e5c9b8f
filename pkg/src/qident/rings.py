"""Exact polynomials in the elliptic modulus parameter, and truncated series
in u over a declared coefficient ring.

KPoly is a dense polynomial in kappa (kappa stands for k^2, the square of the
elliptic modulus) with Fraction coefficients, kept canonical with no trailing
zeros; the zero polynomial is the empty coefficient tuple.

USeries mirrors QSeries but is generic over its coefficient ring: Fraction,
KPoly, or QSeries all work, since they share +, -, * and an explicit notion
of inverting a unit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .series import QSeries, _as_fraction
from . import series as qs

_SCALARS = (int, Fraction)


class KPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "KPoly":
        return cls(())

    @classmethod
    def one(cls) -> "KPoly":
        return cls((1,))

    @classmethod
    def const(cls, c) -> "KPoly":
        return cls((c,))

    @classmethod
    def kappa(cls) -> "KPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "KPoly":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int | None:
        """None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coeff(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = KPoly.const(other)
        if not isinstance(other, KPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = KPoly.const(other)
        if not isinstance(other, KPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return KPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return KPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return KPoly([c * other for c in self.coeffs])
        if not isinstance(other, KPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return KPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return KPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = KPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_series(self, s: QSeries) -> QSeries:
        """Substitute a q-series for kappa (Horner)."""
        acc = qs.zero(s.order)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                mono = "kappa" if d == 1 else f"kappa^{d}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__


class RingSpec:
    """The little a USeries needs to know about its coefficient ring beyond
    the arithmetic the elements themselves provide."""

    def __init__(self, name: str, zero, one, invert: Callable):
        self.name = name
        self.zero = zero
        self.one = one
        self.invert = invert


def _invert_kpoly_unit(p: KPoly) -> KPoly:
    if p.degree != 0:
        raise ZeroDivisionError("only nonzero constants are units among these polynomials")
    return KPoly.const(Fraction(1) / p.coeffs[0])


RATIONALS = RingSpec("rationals", Fraction(0), Fraction(1), lambda x: Fraction(1) / x)
KPOLYS = RingSpec("kappa-polynomials", KPoly.zero(), KPoly.one(), _invert_kpoly_unit)


def qseries_ring(order: int) -> RingSpec:
    return RingSpec(f"qseries(order={order})", qs.zero(order), qs.one(order),
                    QSeries.invert)


class USeries:
    """Series in u truncated at a fixed order, coefficients in a declared ring."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: RingSpec):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = cs
        self.ring = ring

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient u^{n} outside stored order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"USeries(order={self.order}, ring={self.ring.name})"

    def __add__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        n = min(self.order, other.order)
        return USeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.ring)

    def __sub__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        n = min(self.order, other.order)
        return USeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], self.ring)

    def __neg__(self):
        return USeries([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        n = min(self.order, other.order)
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != zero:
                    out[i + j] = out[i + j] + a * b
        return USeries(out, self.ring)

    def scale(self, c) -> "USeries":
        """Multiply every coefficient by a ring element or exact scalar."""
        return USeries([x * c for x in self.coeffs], self.ring)

    def shift(self, j: int) -> "USeries":
        """Multiply by u^j; order grows by j."""
        if j < 0:
            raise ValueError("shift takes a non-negative exponent")
        return USeries((self.ring.zero,) * j + self.coeffs, self.ring)

    def divide(self, den: "USeries") -> "USeries":
        """Long division; the divisor's constant term must be a unit."""
        inv0 = self.ring.invert(den.coeffs[0])
        n = min(self.order, den.order)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                if i <= den.order:
                    acc = acc - den.coeffs[i] * out[k - i]
            out.append(acc * inv0)
        return USeries(out, self.ring)

    def invert(self) -> "USeries":
        return USeries([self.ring.one] + [self.ring.zero] * self.order,
                       self.ring).divide(self)


def u_zero(order: int, ring: RingSpec) -> USeries:
    return USeries([ring.zero] * (order + 1), ring)


def u_one(order: int, ring: RingSpec) -> USeries:
    return USeries([ring.one] + [ring.zero] * order, ring)
