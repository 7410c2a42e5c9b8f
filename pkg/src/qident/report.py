"""Verification reports and their JSON wire format.

Every exact value crossing the JSON boundary travels as a string in lowest
terms (``p/q``, or ``p`` for integers) so nothing is ever rounded.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .series import QSeries, first_difference

PASS = "pass"
FAIL = "fail"
MISMATCH_RECORDED = "mismatch-recorded"


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs_value: str
    rhs_value: str


@dataclass
class VerificationReport:
    task: str
    parameters: dict[str, str]
    status: str
    first_mismatch: Mismatch | None
    runtime_ms: int
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, MISMATCH_RECORDED):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status in (FAIL, MISMATCH_RECORDED) and self.first_mismatch is None:
            raise ValueError(f"status {self.status!r} needs a mismatch witness")

    @property
    def ok(self) -> bool:
        """True unless the check failed outright; a recorded, expected
        mismatch still counts as a completed verification."""
        return self.status != FAIL


def elapsed_ms(started: float) -> int:
    return int(round((time.perf_counter() - started) * 1000))


def compare_series(task: str, parameters: dict[str, str], lhs: QSeries,
                   rhs: QSeries, upto: int, started: float,
                   notes: list[str] | None = None) -> VerificationReport:
    """Coefficientwise comparison through q^upto, reported with the first
    disagreement as witness if there is one."""
    diff = first_difference(lhs, rhs, upto)
    if diff is None:
        return VerificationReport(task, parameters, PASS, None,
                                  elapsed_ms(started), notes or [])
    n, a, b = diff
    return VerificationReport(task, parameters, FAIL,
                              Mismatch(n, str(a), str(b)),
                              elapsed_ms(started), notes or [])


def emit_report(r: VerificationReport) -> str:
    doc = {
        "task": r.task,
        "parameters": r.parameters,
        "status": r.status,
        "first_mismatch": None if r.first_mismatch is None else {
            "exponent": r.first_mismatch.exponent,
            "lhs_value": r.first_mismatch.lhs_value,
            "rhs_value": r.first_mismatch.rhs_value,
        },
        "runtime_ms": r.runtime_ms,
        "notes": r.notes,
    }
    return json.dumps(doc, indent=2)


def parse_report(text: str) -> VerificationReport:
    doc = json.loads(text)
    fm = doc["first_mismatch"]
    return VerificationReport(
        task=doc["task"],
        parameters=dict(doc["parameters"]),
        status=doc["status"],
        first_mismatch=None if fm is None else Mismatch(
            int(fm["exponent"]), fm["lhs_value"], fm["rhs_value"]),
        runtime_ms=int(doc["runtime_ms"]),
        notes=list(doc["notes"]),
    )


def frac_str(x: Fraction) -> str:
    return str(x)


def parse_frac(s: str) -> Fraction:
    return Fraction(s)
