"""Jacobi elliptic functions as exact Taylor series in u over polynomials in
kappa (the squared modulus), and the identities tying their odd part to the
q-series world: the Fourier-coefficient bridge, the Hankel determinant
evaluation, and the continued-fraction expansion of the formal Laplace
transform of sn*cn/dn.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import report as rp
from .determinants import cofactor_det
from .generators import c_series, gen_phi, gen_psi
from .rings import KPOLYS, KPoly, USeries, u_one
from .series import QSeries, divide, first_difference


@dataclass
class JacobiTriple:
    sn: USeries
    cn: USeries
    dn: USeries


def jacobi_taylor(order: int) -> JacobiTriple:
    """Taylor coefficients of sn, cn, dn through u^order, solved term by
    term from sn' = cn dn, cn' = -sn dn, dn' = -kappa sn cn with
    sn(0) = 0, cn(0) = dn(0) = 1."""
    if order < 0:
        raise ValueError("need a non-negative order")
    kappa = KPoly.kappa()
    sn = [KPoly.zero()]
    cn = [KPoly.one()]
    dn = [KPoly.one()]
    for j in range(order):
        inv = Fraction(1, j + 1)
        s_next = sum((cn[i] * dn[j - i] for i in range(j + 1)), KPoly.zero())
        c_next = sum((sn[i] * dn[j - i] for i in range(j + 1)), KPoly.zero())
        d_next = sum((sn[i] * cn[j - i] for i in range(j + 1)), KPoly.zero())
        sn.append(s_next * inv)
        cn.append(-c_next * inv)
        dn.append(-(d_next * kappa) * inv)
    return JacobiTriple(USeries(sn, KPOLYS), USeries(cn, KPOLYS),
                        USeries(dn, KPOLYS))


def pythagorean_check(order: int) -> rp.VerificationReport:
    """sn^2 + cn^2 = 1 and dn^2 + kappa sn^2 = 1, exactly in kappa."""
    started = time.perf_counter()
    t = jacobi_taylor(order)
    one = u_one(order, KPOLYS)
    kappa = KPoly.kappa()
    first = t.sn * t.sn + t.cn * t.cn
    second = t.dn * t.dn + (t.sn * t.sn).scale(kappa)
    params = {"order": str(order)}
    for name, got in (("sn^2+cn^2", first), ("dn^2+kappa*sn^2", second)):
        if got != one:
            bad = next(i for i in range(order + 1) if got.coeffs[i] != one.coeffs[i])
            return rp.VerificationReport(
                "pythagorean", params, rp.FAIL,
                rp.Mismatch(bad, str(got.coeffs[bad]), str(one.coeffs[bad])),
                rp.elapsed_ms(started), [f"failed for {name}"])
    return rp.VerificationReport("pythagorean", params, rp.PASS, None,
                                 rp.elapsed_ms(started))


def sncd_coeffs(m_max: int) -> list[KPoly]:
    """c_1 .. c_{m_max} with sn cn / dn = sum_m c_m u^(2m-1)/(2m-1)!.

    The ratio is odd in u; the even-position coefficients are checked to
    vanish rather than assumed to.
    """
    if m_max < 1:
        raise ValueError("need m_max >= 1")
    order = 2 * m_max - 1
    t = jacobi_taylor(order)
    ratio = (t.sn * t.cn).divide(t.dn)
    for i in range(0, order + 1, 2):
        if ratio.coeffs[i]:
            raise ArithmeticError(f"sn*cn/dn has an even-order term at u^{i}")
    return [ratio.coeffs[2 * m - 1] * Fraction(math.factorial(2 * m - 1))
            for m in range(1, m_max + 1)]


@dataclass
class EllipticParams:
    """z = phi^2(q) and ksq = 16 q psi^4(q^2) / phi^4(q), exact q-series."""
    z: QSeries
    ksq: QSeries

    def __post_init__(self):
        if self.z[0] != 1 or self.ksq[0] != 0:
            raise ValueError("z must start at 1 and ksq at 0")


def modulus_series(order: int) -> EllipticParams:
    phi = gen_phi(order)
    psi2 = gen_psi(order).substitute_power(2)
    z = phi ** 2
    ksq = divide(((psi2 ** 4) * 16).shift(1), phi ** 4)
    return EllipticParams(z, ksq)


def verify_fourier(m_max: int, order: int) -> rp.VerificationReport:
    """c_m with kappa evaluated at ksq equals
    2^(2m+2) (-1)^(m-1) C_{2m-1} / (ksq z^(2m)), for m = 1..m_max."""
    started = time.perf_counter()
    work = order + 1  # dividing by ksq (valuation 1) costs one order
    params_zx = modulus_series(work)
    z, ksq = params_zx.z, params_zx.ksq
    zinv2 = (z ** 2).invert()
    cs = sncd_coeffs(m_max)
    params = {"m_max": str(m_max), "order": str(order)}
    for m in range(1, m_max + 1):
        lhs = cs[m - 1].eval_series(ksq)
        scale = Fraction(2 ** (2 * m + 2) * (-1) ** (m - 1))
        rhs = divide(c_series(m, work) * (zinv2 ** m) * scale, ksq)
        diff = first_difference(lhs, rhs, order)
        if diff is not None:
            n, a, b = diff
            return rp.VerificationReport(
                "fourier", {**params, "failed_at_m": str(m)}, rp.FAIL,
                rp.Mismatch(n, str(a), str(b)), rp.elapsed_ms(started))
    return rp.VerificationReport("fourier", params, rp.PASS, None,
                                 rp.elapsed_ms(started))


def hankel_expected(n: int) -> KPoly:
    return KPoly.monomial(n * (n - 1),
                          math.prod(math.factorial(r) for r in range(1, 2 * n)))


def hankel_check(n: int) -> rp.VerificationReport:
    """det(c_{u+v-1})_{1<=u,v<=n} = kappa^(n(n-1)) prod_{r=1}^{2n-1} r!."""
    if n < 1:
        raise ValueError("need n >= 1")
    started = time.perf_counter()
    cs = sncd_coeffs(2 * n - 1)
    det = cofactor_det([[cs[u + v] for v in range(n)] for u in range(n)])
    expected = hankel_expected(n)
    params = {"n": str(n), "determinant": str(det)}
    if det == expected:
        return rp.VerificationReport("hankel", params, rp.PASS, None,
                                     rp.elapsed_ms(started))
    deg = 0 if det.degree is None else det.degree
    bad = next(d for d in range(max(deg, n * (n - 1)) + 1)
               if det.coeff(d) != expected.coeff(d))
    return rp.VerificationReport("hankel", params, rp.FAIL,
                                 rp.Mismatch(bad, str(det.coeff(bad)),
                                             str(expected.coeff(bad))),
                                 rp.elapsed_ms(started))


def hankel_scaling_check(n: int, trials: int, seed: int = 20260815) -> rp.VerificationReport:
    """det over rationals satisfies H_n({t^m a_m}) = t^(n^2) H_n({a_m}) for
    random integer sequences a and random nonzero rational t."""
    if n < 1 or trials < 1:
        raise ValueError("need n >= 1 and trials >= 1")
    started = time.perf_counter()
    rng = random.Random(seed)
    for trial in range(trials):
        a = [Fraction(rng.randint(-9, 9)) for _ in range(2 * n - 1)]
        t = Fraction(0)
        while t == 0:
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        scaled = [a[m - 1] * t ** m for m in range(1, 2 * n)]
        h_plain = cofactor_det([[a[u + v] for v in range(n)] for u in range(n)])
        h_scaled = cofactor_det([[scaled[u + v] for v in range(n)] for u in range(n)])
        if h_scaled != t ** (n * n) * h_plain:
            return rp.VerificationReport(
                "hankel-scaling", {"n": str(n), "trials": str(trials)},
                rp.FAIL, rp.Mismatch(trial, str(h_scaled),
                                     str(t ** (n * n) * h_plain)),
                rp.elapsed_ms(started))
    return rp.VerificationReport("hankel-scaling",
                                 {"n": str(n), "trials": str(trials)},
                                 rp.PASS, None, rp.elapsed_ms(started))


@dataclass(frozen=True)
class CFracSpec:
    """Partial numerators and denominators of the fraction under the formal
    Laplace transform: a_n = -(2n-1)(2n-2)^2(2n-3) kappa^2 t^4 and
    b_n = 1 + (2n-1)^2 (4 - 2 kappa) t^2, evaluated to a fixed t-order."""
    depth: int
    torder: int

    def __post_init__(self):
        if self.depth < 1 or self.torder < 0:
            raise ValueError("need depth >= 1 and a non-negative t-order")

    def b_term(self, nn: int) -> USeries:
        cs = [KPoly.zero()] * (self.torder + 1)
        cs[0] = KPoly.one()
        if self.torder >= 2:
            cs[2] = (KPoly.const(4) - KPoly.kappa() * 2) * (2 * nn - 1) ** 2
        return USeries(cs, KPOLYS)

    def a_term(self, nn: int) -> USeries:
        cs = [KPoly.zero()] * (self.torder + 1)
        if self.torder >= 4:
            coef = -(2 * nn - 1) * (2 * nn - 2) ** 2 * (2 * nn - 3)
            kappa = KPoly.kappa()
            cs[4] = (kappa * kappa) * coef
        return USeries(cs, KPOLYS)

    def expand(self) -> USeries:
        """t^2 / (b_1 + K_{n=2}^depth (a_n / b_n)), bottom-up with zero tail."""
        x = self.b_term(self.depth)
        for nn in range(self.depth - 1, 0, -1):
            x = self.b_term(nn) + self.a_term(nn + 1).divide(x)
        if x.coeffs[0] != KPoly.one():
            raise ArithmeticError("fraction denominator lost its unit constant")
        return x.invert().shift(2)


def _cf_bottom_up(depth: int, torder: int) -> USeries:
    return CFracSpec(depth, torder).expand()


def cf_expand(depth: int, m_max: int) -> rp.VerificationReport:
    """The continued fraction's t-expansion matches sum_m c_m t^(2m) through
    t^(2 m_max), and is stable against one extra level of depth."""
    if depth < m_max + 1:
        raise ValueError("depth must exceed the comparison order: need depth >= m_max + 1")
    started = time.perf_counter()
    torder = 2 * m_max
    cf = _cf_bottom_up(depth, torder)
    deeper = _cf_bottom_up(depth + 1, torder)
    cs = sncd_coeffs(m_max)
    params = {"depth": str(depth), "m_max": str(m_max)}
    for i in range(torder + 1):
        if cf.coeffs[i] != deeper.coeffs[i]:
            return rp.VerificationReport(
                "cf", params, rp.FAIL,
                rp.Mismatch(i, str(cf.coeffs[i]), str(deeper.coeffs[i])),
                rp.elapsed_ms(started), ["expansion not stable in depth"])
        expected = cs[i // 2 - 1] if (i >= 2 and i % 2 == 0) else KPoly.zero()
        if cf.coeffs[i] != expected:
            return rp.VerificationReport(
                "cf", params, rp.FAIL,
                rp.Mismatch(i, str(cf.coeffs[i]), str(expected)),
                rp.elapsed_ms(started))
    return rp.VerificationReport("cf", params, rp.PASS, None,
                                 rp.elapsed_ms(started))
