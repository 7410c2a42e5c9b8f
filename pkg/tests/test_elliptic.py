"""Elliptic-function Taylor machinery: the ODE recursion, the odd-ratio
coefficients, their Hankel determinants, the nome substitution, and the
continued-fraction expansion.

Independent oracles: at kappa = 0 the ratio sn*cn/dn degenerates to
sin(2u)/2, at kappa = 1 to tanh u, so the coefficient polynomials are pinned
at both endpoints by classical Taylor series."""

import math
from fractions import Fraction

import pytest

from qident import elliptic as el
from qident.determinants import cofactor_det
from qident.generators import c_series, gen_phi, gen_psi
from qident.report import PASS
from qident.rings import KPoly
from qident.series import first_difference

# (2m-1)! [u^(2m-1)] tanh u  for m = 1..6
TANH_PINS = [1, -2, 16, -272, 7936, -353792]


def test_jacobi_taylor_leading_terms():
    tr = el.jacobi_taylor(7)
    sixth = Fraction(1, 6)
    assert tr.sn.coeff(1) == KPoly.one()
    assert tr.sn.coeff(2) == KPoly.zero()
    assert tr.sn.coeff(3) == KPoly([-sixth, -sixth])
    assert tr.sn.coeff(5) == KPoly([Fraction(1, 120), Fraction(7, 60),
                                    Fraction(1, 120)])
    assert tr.cn.coeff(0) == KPoly.one()
    assert tr.cn.coeff(2) == KPoly([Fraction(-1, 2)])
    assert tr.cn.coeff(4) == KPoly([Fraction(1, 24), sixth])
    assert tr.dn.coeff(2) == KPoly([0, Fraction(-1, 2)])
    assert tr.dn.coeff(4) == KPoly([0, sixth, Fraction(1, 24)])


def test_cn_dn_mirror_symmetry():
    # dn's u^(2j) polynomial is cn's with kappa-degrees reversed (times kappa^j)
    tr = el.jacobi_taylor(12)
    for j in range(0, 13, 2):
        cn_c = [tr.cn.coeff(j).coeff(d) for d in range(j // 2 + 1)]
        dn_c = [tr.dn.coeff(j).coeff(d) for d in range(j // 2 + 1)]
        assert dn_c == cn_c[::-1], j


def test_pythagorean_invariants():
    assert el.pythagorean_check(13).status == PASS


def test_sncd_coeffs_small():
    cs = el.sncd_coeffs(3)
    assert cs[0] == KPoly.one()
    assert cs[1] == KPoly([-4, 2])
    assert cs[2] == KPoly([16, -16, 16])


def test_sncd_coeffs_endpoint_oracles():
    cs = el.sncd_coeffs(6)
    for m, c in enumerate(cs, start=1):
        assert c.evaluate(Fraction(0)) == (-4) ** (m - 1), m  # sin(2u)/2
        assert c.evaluate(Fraction(1)) == TANH_PINS[m - 1], m  # tanh u


def test_hankel_expected_and_check():
    assert el.hankel_expected(2) == KPoly.monomial(2, 12)
    assert el.hankel_expected(3) == KPoly.monomial(6, 34560)
    assert el.hankel_expected(4) == KPoly.monomial(12, 125411328000)
    assert el.hankel_expected(3).coeff(6) == math.prod(
        math.factorial(r) for r in range(1, 6))
    for n in (1, 2, 3, 4):
        assert el.hankel_check(n).status == PASS


def test_hankel_scaling_identity():
    # H_n of (t^m a_m) is t^(n^2) H_n of (a_m): with a = (1,2,5) and t = 3
    # the 2x2 determinant goes from 1 to 81
    a = [Fraction(1), Fraction(2), Fraction(5)]
    h = cofactor_det([[a[0], a[1]], [a[1], a[2]]])
    assert h == 1
    b = [Fraction(3) ** (m + 1) * a[m] for m in range(3)]
    assert cofactor_det([[b[0], b[1]], [b[1], b[2]]]) == 81 * h
    assert el.hankel_scaling_check(3, 50).status == PASS
    assert el.hankel_scaling_check(4, 10).status == PASS


def test_modulus_series_invariants():
    p = el.modulus_series(20)
    assert p.z == (gen_phi(20) ** 2)
    expect = (gen_psi(20) ** 4).substitute_power(2, 20).shift(1) * 16
    ksq_num = expect.truncate(20)
    assert first_difference(p.ksq * (gen_phi(20) ** 4), ksq_num, 20) is None
    assert p.ksq[0] == 0 and p.ksq[1] == 16 and p.ksq[2] == -128
    with pytest.raises(ValueError):
        el.EllipticParams(p.z.truncate(5) * 2, p.ksq.truncate(5))  # z(0) != 1
    with pytest.raises(ValueError):
        el.EllipticParams(p.z.truncate(5), p.ksq.truncate(5) + 1)  # ksq(0) != 0


def test_fourier_bridge():
    for r in (el.verify_fourier(1, 60), el.verify_fourier(6, 80)):
        assert r.status == PASS
    # the m = 1 case in series form: C1 = q psi^4(q^2)
    n = 60
    lhs = c_series(1, n)
    rhs = (gen_psi(n) ** 4).substitute_power(2, n).shift(1).truncate(n)
    assert first_difference(lhs, rhs, n) is None


def test_substitution_compatibility_with_hankel():
    # 12 ksq^4 z^8 = 4096 (C1 C5 - C3^2): the n = 2 Hankel value 12 kappa^2
    # transported through the nome substitution
    n = 60
    p = el.modulus_series(n)
    lhs = (p.ksq ** 4) * (p.z ** 8) * 12
    rhs = (c_series(1, n) * c_series(3, n) - c_series(2, n) ** 2) * 4096
    assert first_difference(lhs, rhs, n) is None


def test_cf_spec_validation():
    with pytest.raises(ValueError):
        el.CFracSpec(0, 10)
    with pytest.raises(ValueError):
        el.cf_expand(5, 8)  # depth must exceed m_max


def test_cf_expansion_matches_moments():
    r = el.cf_expand(9, 8)
    assert r.status == PASS
    x = el._cf_bottom_up(6, 10)
    cs = el.sncd_coeffs(5)
    assert x.coeff(0) == KPoly.zero() and x.coeff(1) == KPoly.zero()
    for m in range(1, 6):
        assert x.coeff(2 * m) == cs[m - 1], m
