"""Figure rendering for the report paths.

Everything draws through the Agg backend so files can be written headless;
figures accompany the text output, they never replace it.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .series import QSeries  # noqa: E402


def save_series_plot(s: QSeries, label: str, path: str) -> None:
    """Coefficient magnitudes against the exponent, log-scaled since the
    families here grow polynomially to exponentially."""
    ns = list(range(s.order + 1))
    vals = [float(c) for c in s.coeffs]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, vals, lw=0.9, color="#28537b")
    markers = [(n, v) for n, v in zip(ns, vals) if v]
    if markers and len(markers) <= 120:
        ax.plot(*zip(*markers), "o", ms=3, color="#28537b")
    ax.set_yscale("symlog")
    ax.set_xlabel("exponent of q")
    ax.set_ylabel("coefficient")
    ax.set_title(f"{label}, order {s.order}")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_selftest_plot(results, path: str) -> None:
    """One horizontal bar per criterion, runtime-scaled, pass/fail colored."""
    names = [f"{r.index}. {r.name}" for r in results]
    times = [max(r.runtime_ms, 1) for r in results]
    colors = ["#2e7d32" if r.passed else "#c62828" for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.4 * len(results) + 1.2))
    ax.barh(names, times, color=colors)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("runtime (ms)")
    ax.set_title("verification criteria")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
