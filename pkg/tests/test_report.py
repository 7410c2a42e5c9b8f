from fractions import Fraction

import pytest

from qident import report as rp
from qident.series import QSeries


def test_status_requires_witness():
    with pytest.raises(ValueError):
        rp.VerificationReport("t", {}, rp.FAIL, None, 1)
    with pytest.raises(ValueError):
        rp.VerificationReport("t", {}, rp.MISMATCH_RECORDED, None, 1)
    with pytest.raises(ValueError):
        rp.VerificationReport("t", {}, "maybe", None, 1)
    r = rp.VerificationReport("t", {}, rp.PASS, None, 1)
    assert r.ok


def test_ok_semantics():
    m = rp.Mismatch(3, "1", "-1")
    assert not rp.VerificationReport("t", {}, rp.FAIL, m, 1).ok
    assert rp.VerificationReport("t", {}, rp.MISMATCH_RECORDED, m, 1).ok


def test_json_round_trip():
    m = rp.Mismatch(8, "1/3", "-2")
    for r in (
        rp.VerificationReport("alpha", {"order": "60"}, rp.PASS, None, 12),
        rp.VerificationReport("beta", {"s": "4"}, rp.FAIL, m, 3, ["note"]),
        rp.VerificationReport("gamma", {}, rp.MISMATCH_RECORDED, m, 0,
                              ["a", "b"]),
    ):
        assert rp.parse_report(rp.emit_report(r)) == r


def test_compare_series():
    import time
    a, b = QSeries([1, 2, 3]), QSeries([1, 2, 4])
    r = rp.compare_series("cmp", {}, a, a, 2, time.perf_counter())
    assert r.status == rp.PASS
    r = rp.compare_series("cmp", {}, a, b, 2, time.perf_counter())
    assert r.status == rp.FAIL
    assert r.first_mismatch == rp.Mismatch(2, "3", "4")


def test_frac_str():
    assert rp.frac_str(Fraction(3)) == "3"
    assert rp.frac_str(Fraction(-1, 72)) == "-1/72"
    assert rp.parse_frac("-1/72") == Fraction(-1, 72)
    assert rp.parse_frac("5") == Fraction(5)
