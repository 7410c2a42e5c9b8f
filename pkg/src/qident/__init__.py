"""Exact q-series engine for classical representation-count identities:
sums of squares and triangular numbers, their Lambert/Eisenstein series
forms, determinant and continued-fraction evaluations, and numeric checks
of the underlying modular transformations."""

from .series import QSeries, divide, dump_series, first_difference, load_series
from .rings import KPoly, USeries
from .generators import (LambertSpec, c_series, d_series, e4_series,
                         e6_series, e8_series, gen_eta_f, gen_lambert,
                         gen_phi, gen_psi, s4_series, s6_series, s8_series,
                         series_by_key, t2_series, t_series)
from .report import VerificationReport, emit_report, parse_report

__version__ = "0.1.0"

__all__ = [
    "QSeries", "KPoly", "USeries", "LambertSpec", "VerificationReport",
    "divide", "dump_series", "load_series", "first_difference",
    "gen_phi", "gen_psi", "gen_eta_f", "gen_lambert", "series_by_key",
    "c_series", "d_series", "t_series", "t2_series",
    "s4_series", "s6_series", "s8_series",
    "e4_series", "e6_series", "e8_series",
    "emit_report", "parse_report",
    "__version__",
]
