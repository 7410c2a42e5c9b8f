"""Double-precision verifiers: direct partial sums with geometric tail bounds,
the modular-transformation residuals, and the formal/numeric cross-check."""

import cmath

import pytest

from qident import numeric as nm
from qident.generators import LambertSpec, gen_lambert, gen_psi

TAUS = (1j, 2j, 0.3 + 0.8j)


def test_num_eval_psi_matches_direct_partial_sum():
    w = 0.1
    got = nm.num_eval("psi", w, 1e-9)
    expect = 1 + w + w ** 3 + w ** 6 + w ** 10 + w ** 15
    assert abs(got.value - expect) < 1e-12
    assert got.tail_bound <= 1e-10


def test_num_eval_at_zero():
    for name in ("phi", "psi", "E4"):
        assert nm.num_eval(name, 0.0, 1e-9).value == 1 if name != "psi" \
            else abs(nm.num_eval(name, 0.0, 1e-9).value - 1) == 0


def test_num_eval_domain_errors():
    with pytest.raises(ValueError):
        nm.num_eval("phi", 1.0, 1e-9)
    with pytest.raises(ValueError):
        nm.num_eval("psi", -2.0, 1e-9)
    with pytest.raises(KeyError):
        nm.num_eval("E6", 0.1, 1e-9)


def test_phi_num_known_value():
    # phi(0.5) = 1 + 2(0.5 + 0.5^4 + 0.5^9 + ...)
    got = nm.num_eval("phi", 0.5, 1e-12).value
    expect = 1 + 2 * sum(0.5 ** (k * k) for k in range(1, 12))
    assert abs(got - expect) < 1e-12


def test_verify_ts():
    for tau in TAUS:
        r = nm.verify_ts(tau, 1e-9)
        assert r.ok, (tau, r.residuals)
        assert r.notes  # the sign-of-exponent correction is documented


def test_verify_e4_modular():
    for tau in TAUS + (0.5 + 1.2j,):
        assert nm.verify_e4_modular(tau, 1e-9).ok, tau
    # tau = i is a fixed point of tau -> -1/tau, so the residual is pure noise
    assert nm.verify_e4_modular(1j, 1e-9).residual < 1e-12


def test_verify_8t():
    for tau in TAUS + (1.5j,):
        r = nm.verify_8t(tau, 1e-9)
        assert r.ok, tau
        assert set(r.residuals) == {"theta_vs_lambert",
                                    "lambert_vs_eisenstein"}


def test_domain_errors_on_lower_half_plane():
    for fn in (nm.verify_ts, nm.verify_e4_modular, nm.verify_8t):
        with pytest.raises(ValueError):
            fn(0.3 - 0.8j, 1e-9)
        with pytest.raises(ValueError):
            fn(0.5, 1e-9)


def test_residuals_monotone_in_eps():
    for tau in TAUS:
        loose = nm.verify_8t(tau, 1e-6).residual
        tight = nm.verify_8t(tau, 1e-12).residual
        assert tight <= loose + 1e-13, tau


def test_truncated_expansion_consistent_with_direct_sum():
    # evaluate the order-40 q-expansion of 256 q psi^8(q) at the nome for
    # tau = 1.5i and compare with the direct Lambert sum; the gap must sit
    # inside the combined tail bounds
    order = 40
    tau = 1.5j
    x = cmath.exp(2j * cmath.pi * tau)
    series = (gen_psi(order) ** 8).shift(1).truncate(order) * 256
    poly_val = sum(complex(series[n]) * x ** n for n in range(order + 1))
    direct = nm.lambert8_num(x, 1e-9)
    # coefficients are 256 * (odd-quotient divisor power sums) <= 256 (n+2)^4;
    # the extra 1e-15 absorbs double-precision noise on top of the exact-sum
    # tail bounds
    bound = nm.poly_tail_bound(256, 4, order, abs(x)) + direct.tail_bound \
        + 1e-15
    assert abs(poly_val - direct.value) <= bound
    # same series evaluated against the Eisenstein side
    eis = (16 / 15) * (nm.e4_num(x, 1e-9).value - nm.e4_num(x * x, 1e-9).value)
    assert abs(poly_val - eis) <= bound + 1e-9


def test_poly_tail_bound_guards():
    with pytest.raises(ValueError):
        nm.poly_tail_bound(1.0, 3, 10, 1.5)
    assert nm.poly_tail_bound(1.0, 3, 10, 0.99) == float("inf") or \
        nm.poly_tail_bound(1.0, 3, 10, 0.99) > 0
    assert nm.poly_tail_bound(1.0, 0, 10, 0.5) < 0.001


def test_lambert8_matches_formal_coefficients():
    # partial sums of the k-indexed Lambert form reproduce the q-expansion
    order = 12
    s = gen_lambert(LambertSpec(3, 1, 2), order) * 256
    x = 0.02
    direct = nm.lambert8_num(x, 1e-13).value
    poly = sum(complex(s[n]) * x ** n for n in range(order + 1))
    assert abs(direct - poly) < nm.poly_tail_bound(256, 4, order, x) + 1e-13
