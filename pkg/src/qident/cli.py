"""Command line front end.

Exit codes: 0 when every requested check passes (a recorded, documented
mismatch counts as completed), 1 when an identity check fails, 2 for usage
errors.  JSON output carries every exact value as a p/q string.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import chan_chua, counts, determinants, elliptic, numeric, selftest
from . import report as rp
from .generators import series_by_key
from .kw import eval_cc, eval_kw_4s2, eval_kw_4ss1
from .series import dump_series

_VERIFIERS = {
    "jacobi2": lambda a: counts.verify_jacobi(2, a.order or 200),
    "jacobi4": lambda a: counts.verify_jacobi(4, a.order or 200),
    "jacobi6": lambda a: counts.verify_jacobi(6, a.order or 200),
    "jacobi8": lambda a: counts.verify_jacobi(8, a.order or 200),
    "liouville10": lambda a: counts.verify_liouville10(a.order or 200),
    "milne24": lambda a: counts.verify_milne24(a.order or 200),
    "milne-4s2": lambda a: determinants.verify_milne_4s2(a.s or 2, a.order or 150),
    "milne-4ss1": lambda a: determinants.verify_milne_4ss1(a.s or 2, a.order or 150),
    "psi24": lambda a: determinants.verify_psi24(a.order or 200),
    "eta24": lambda a: determinants.verify_eta24(a.order or 200),
    "fourier": lambda a: elliptic.verify_fourier(a.m or 6, a.order or 100),
    "eq32": lambda a: chan_chua.verify_identity32(a.order or 120),
    "t-recurrence": lambda a: chan_chua.verify_t_recurrence(a.n if a.n is not None else 6,
                                                            a.order or 200),
}


def _parse_tau(text: str) -> complex:
    try:
        tau = complex(text.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as a complex number")
    return tau


def _print_report(r: rp.VerificationReport, as_json: bool) -> None:
    if as_json:
        print(rp.emit_report(r))
        return
    print(f"{r.task}: {r.status} ({r.runtime_ms} ms)")
    for k, v in r.parameters.items():
        print(f"  {k} = {v}")
    if r.first_mismatch:
        fm = r.first_mismatch
        print(f"  first mismatch at q^{fm.exponent}: "
              f"lhs {fm.lhs_value}, rhs {fm.rhs_value}")
    for note in r.notes:
        print(f"  note: {note}")


def _cmd_generate(args) -> int:
    try:
        s = series_by_key(args.key, args.order)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dump_series(s)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import save_series_plot
        save_series_plot(s, args.key, args.plot)
    return 0


def _cmd_count(args) -> int:
    try:
        record = counts.count_record(args.kind, args.s, args.n, args.method)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        print(record["value"])
    return 0


def _cmd_verify(args) -> int:
    r = _VERIFIERS[args.identity](args)
    _print_report(r, args.json)
    return 0 if r.ok else 1


def _cmd_kw(args) -> int:
    evals = {"4s2": (eval_kw_4s2, 4 * args.s * args.s),
             "4ss1": (eval_kw_4ss1, 4 * args.s * (args.s + 1)),
             "cc": (eval_cc, 4 * args.s * args.s)}
    fn, weight = evals[args.variant]
    try:
        value = fn(args.s, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    oracle = counts.oracle_counts("triangular", weight, args.n)[args.n]
    match = value == oracle
    print(f"{args.variant} s={args.s} n={args.n}: value {value}, "
          f"oracle {oracle} ({'match' if match else 'MISMATCH'})")
    return 0 if match else 1


def _cmd_chan_chua(args) -> int:
    try:
        sol = chan_chua.solve_cc(args.s, args.order)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(chan_chua.solution_to_json(sol))
    else:
        for (m, n), v in zip(sol.basis, sol.values):
            print(f"a[{m},{n}] = {v}")
        print(f"unique: {sol.unique}; residual zero to order "
              f"{sol.order_used}: {sol.residual_ok}")
    return 0 if (sol.unique and sol.residual_ok and sol.consistent) else 1


def _cmd_hankel(args) -> int:
    r = elliptic.hankel_check(args.n)
    _print_report(r, args.json)
    if args.trials:
        r2 = elliptic.hankel_scaling_check(args.n, args.trials)
        _print_report(r2, args.json)
        return 0 if (r.ok and r2.ok) else 1
    return 0 if r.ok else 1


def _cmd_cf(args) -> int:
    if args.torder % 2:
        print("error: --torder must be even (expansions hold even powers)",
              file=sys.stderr)
        return 2
    try:
        r = elliptic.cf_expand(args.depth, args.torder // 2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_report(r, args.json)
    return 0 if r.ok else 1


def _cmd_numeric(args) -> int:
    checks = {"ts": numeric.verify_ts, "e4-modular": numeric.verify_e4_modular,
              "8t": numeric.verify_8t}
    try:
        rep = checks[args.identity](args.tau, args.eps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{rep.task} at tau={args.tau}: max residual {rep.residual:.3e} "
          f"(eps {rep.eps:g}) -> {'ok' if rep.ok else 'FAIL'}")
    for name, val in rep.residuals.items():
        print(f"  {name}: {val:.3e}")
    return 0 if rep.ok else 1


def _cmd_selftest(args) -> int:
    results = selftest.run_selftest(args.jobs)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"[{mark}] criterion {r.index:2d} {r.name}: {r.detail} "
              f"({r.runtime_ms} ms)")
    total_ms = sum(r.runtime_ms for r in results)
    failed = [r.index for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed "
          f"in {total_ms} ms")
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        csv_path = os.path.join(args.report_dir, "selftest.csv")
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["criterion", "name", "status", "runtime_ms", "detail"])
            for r in results:
                writer.writerow([r.index, r.name,
                                 "pass" if r.passed else "fail",
                                 r.runtime_ms, r.detail])
        from .plotting import save_selftest_plot
        save_selftest_plot(results, os.path.join(args.report_dir, "selftest.png"))
        print(f"report written to {csv_path} (+ selftest.png)")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qident",
        description="Exact q-series verification of classical representation-count identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="expand a named series and dump its coefficients")
    p.add_argument("key", help="series name, e.g. phi, psi, eta_f, C:1, D:3, T:4, T2, S4, E4")
    p.add_argument("--order", type=int, default=50)
    p.add_argument("--out", help="write the dump to a file instead of stdout")
    p.add_argument("--plot", help="also render the coefficients to this image file")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("count", help="one representation count")
    p.add_argument("--kind", choices=["squares", "triangular"], required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["oracle", "divisor", "milne24"],
                   default="oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("verify", help="run one identity verification")
    p.add_argument("--identity", choices=sorted(_VERIFIERS), required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("kw", help="evaluate a multiple-sum formula against the oracle")
    p.add_argument("--variant", choices=["4s2", "4ss1", "cc"], required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_kw)

    p = sub.add_parser("chan-chua", help="solve for the bilinear T-product coefficients")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--order", type=int, default=120)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_chan_chua)

    p = sub.add_parser("hankel", help="Hankel determinant identity (and optional scaling trials)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_hankel)

    p = sub.add_parser("cf", help="continued-fraction expansion check")
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--torder", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_cf)

    p = sub.add_parser("numeric", help="floating-point modular identity check")
    p.add_argument("--identity", choices=["ts", "e4-modular", "8t"], required=True)
    p.add_argument("--tau", type=_parse_tau, required=True,
                   help="upper-half-plane point, e.g. i, 2i, 0.3+0.8i")
    p.add_argument("--eps", type=float, default=1e-9)
    p.set_defaults(fn=_cmd_numeric)

    p = sub.add_parser("selftest", help="run the full verification battery")
    p.add_argument("--jobs", type=int)
    p.add_argument("--report-dir", help="write selftest.csv and selftest.png here")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
