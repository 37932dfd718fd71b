"""Command-line interface.

Seven subcommands: theta (coefficient tables), pmf and moments (adjacency
statistic laws), verify (named self-check suites), limits (distance scans),
partitions (bounded-part counting series), and export (any of the above to
a JSON or CSV file).

Output is deterministic: the same flags produce byte-identical bytes.
Rationals render as "p/q" strings and floats at a fixed decimal precision,
in JSON as well, so files diff cleanly across runs.

Exit codes: 0 success, 1 verification failure or I/O failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import distributions as dist
from . import oracle, theta, verify
from .exact import format_rational, parse_rational
from .oracle import BudgetExceededError
from .weights import (
    WeightConfigError,
    WeightSequence,
    builtin_weights,
    load_weight_config,
)

__all__ = ["main"]


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit code 2."""


def parse_range(text) -> list[int]:
    """Parse '3' or '2..10' into a list of integers."""
    if text is None:
        raise UsageError("--n and --k are required for this table")
    parts = str(text).split("..")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from exc
    raise UsageError(f"bad range {text!r}; expected N or LO..HI")


def resolve_weights(name_or_path: str) -> WeightSequence:
    if "/" in name_or_path or name_or_path.endswith(".json"):
        return load_weight_config(name_or_path)
    return builtin_weights(name_or_path)


def _check_index_range(seq: WeightSequence, n_values) -> None:
    upper = seq.upper_index()
    if upper is not None and max(n_values) > upper:
        raise UsageError(
            f"weight sequence provides {upper} terms but n up to "
            f"{max(n_values)} was requested"
        )


def _resolve_budget(args) -> int:
    flag = getattr(args, "budget", None)
    return flag if flag is not None else oracle.oracle_budget()


def _fmt_float(x: float, precision: int) -> str:
    return f"{x:.{precision}f}"


# ---------------------------------------------------------------------------
# renderers


def _emit_table(columns, rows) -> str:
    widths = [len(c) for c in columns]
    grid = []
    for row in rows:
        cells = [str(row[c]) for c in columns]
        grid.append(cells)
        widths = [max(w, len(s)) for w, s in zip(widths, cells)]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for cells in grid:
        out.append("  ".join(s.ljust(w) for s, w in zip(cells, widths)).rstrip())
    return "\n".join(out) + "\n"


def _emit_json(command: str, config: dict, rows) -> str:
    doc = {"command": command, "config": config, "rows": list(rows)}
    return json.dumps(doc, indent=2) + "\n"


def _emit_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] for c in columns])
    return buf.getvalue()


def _render(fmt: str, command: str, config: dict, columns, rows) -> str:
    if fmt == "json":
        return _emit_json(command, config, rows)
    if fmt == "csv":
        return _emit_csv(columns, rows)
    return _emit_table(columns, rows)


# ---------------------------------------------------------------------------
# row builders (shared between the display commands and export)


def _theta_table(args):
    seq = resolve_weights(args.weights)
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    _check_index_range(seq, ns)
    if any(n < 1 for n in ns) or any(k < 0 for k in ks):
        raise UsageError("need n >= 1 and k >= 0")
    t_values = [parse_rational(t) for t in args.t] if args.t else []
    budget = _resolve_budget(args)

    if args.algo == "all":
        algos = list(theta.ALGORITHMS.items())
    elif args.algo == "oracle":
        algos = [("oracle", None)]
    else:
        algos = [(args.algo, theta.ALGORITHMS[args.algo])]

    def polys_for(n, k):
        out = []
        for name, fn in algos:
            if fn is None:
                out.append((name, oracle.theta_bruteforce(seq, n, k, budget=budget)))
            else:
                out.append((name, fn(seq, n, k).poly))
        return out

    config = {
        "weights": seq.config(),
        "n": args.n,
        "k": args.k,
        "algo": args.algo,
        "t": [format_rational(t) for t in t_values],
        "precision": args.precision,
    }

    if args.format == "csv":
        if args.algo == "all":
            raise UsageError(
                "--algo all has no CSV rendering; the CSV schema is "
                "n,k,coeff_index,value (or n,k,t,value with --t)"
            )
        rows = []
        if t_values:
            columns = ("n", "k", "t", "value")
            for n in ns:
                for k in ks:
                    poly = polys_for(n, k)[0][1]
                    for t0 in t_values:
                        rows.append({"n": n, "k": k, "t": format_rational(t0),
                                     "value": format_rational(poly(t0))})
        else:
            columns = ("n", "k", "coeff_index", "value")
            for n in ns:
                for k in ks:
                    poly = polys_for(n, k)[0][1]
                    for i, c in enumerate(poly.coeffs):
                        rows.append({"n": n, "k": k, "coeff_index": i,
                                     "value": format_rational(c)})
        return config, columns, rows, True

    rows = []
    agree_all = True
    show_agree = args.algo == "all"
    for n in ns:
        for k in ks:
            results = polys_for(n, k)
            agree = all(p == results[0][1] for _, p in results)
            agree_all = agree_all and agree
            for name, poly in results:
                row = {"n": n, "k": k, "algo": name}
                if show_agree:
                    row["agree"] = "yes" if agree else "no"
                if t_values:
                    row["values"] = [format_rational(poly(t0)) for t0 in t_values]
                else:
                    row["coefficients"] = [format_rational(c) for c in poly.coeffs]
                rows.append(row)
    value_col = "values" if t_values else "coefficients"
    columns = ("n", "k", "algo", "agree", value_col) if show_agree else \
              ("n", "k", "algo", value_col)
    return config, columns, rows, agree_all


def cmd_theta(args) -> int:
    config, columns, rows, agree = _theta_table(args)
    if args.format == "table":
        shown = [dict(r) for r in rows]
        for r in shown:
            for key in ("coefficients", "values"):
                if key in r:
                    r[key] = "[" + ", ".join(r[key]) + "]"
        sys.stdout.write(_emit_table(columns, shown))
    else:
        sys.stdout.write(_render(args.format, "theta", config, columns, rows))
    return 0 if agree else 1


def _pmf_table(args):
    seq = resolve_weights(args.weights)
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    _check_index_range(seq, ns)
    config = {
        "weights": seq.config(),
        "n": args.n,
        "k": args.k,
        "precision": args.precision,
    }
    columns = ("n", "k", "j", "probability", "approx")
    rows = []
    for n in ns:
        for k in ks:
            pmf = dist.s_pmf(seq, n, k)
            for j, p in pmf.items():
                rows.append({
                    "n": n, "k": k, "j": j,
                    "probability": format_rational(p),
                    "approx": _fmt_float(float(p), args.precision),
                })
    return config, columns, rows


def cmd_pmf(args) -> int:
    config, columns, rows = _pmf_table(args)
    sys.stdout.write(_render(args.format, "pmf", config, columns, rows))
    return 0


def _moments_table(args):
    seq = resolve_weights(args.weights)
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    _check_index_range(seq, ns)
    if args.smax < 1:
        raise UsageError("--smax must be >= 1")
    config = {
        "weights": seq.config(),
        "n": args.n,
        "k": args.k,
        "smax": args.smax,
        "precision": args.precision,
    }
    fm_cols = tuple(f"fm{s}" for s in range(1, args.smax + 1))
    columns = ("n", "k", "mean", "variance") + fm_cols
    rows = []
    for n in ns:
        for k in ks:
            rep = dist.moments(seq, n, k, args.smax)
            row = {"n": n, "k": k,
                   "mean": format_rational(rep.mean),
                   "variance": format_rational(rep.variance)}
            for s, col in enumerate(fm_cols, start=1):
                row[col] = format_rational(rep.factorial_moments[s - 1])
            rows.append(row)
    return config, columns, rows


def cmd_moments(args) -> int:
    config, columns, rows = _moments_table(args)
    sys.stdout.write(_render(args.format, "moments", config, columns, rows))
    return 0


def cmd_verify(args) -> int:
    budget = _resolve_budget(args)
    results = verify.run_suite(args.suite, max_n=args.max_n, max_k=args.max_k,
                               budget=budget)
    config = {"suite": args.suite, "max_n": args.max_n, "max_k": args.max_k}
    columns = ("check", "result", "detail")
    rows = [{"check": r.name,
             "result": "PASS" if r.passed else "FAIL",
             "detail": r.detail} for r in results]
    passed = sum(r.passed for r in results)
    if args.format == "table":
        for r in rows:
            line = f"{r['result']}  {r['check']}"
            if r["detail"]:
                line += f"  [{r['detail']}]"
            sys.stdout.write(line + "\n")
        sys.stdout.write(f"{passed}/{len(results)} checks passed\n")
    else:
        sys.stdout.write(_render(args.format, "verify", config, columns, rows))
    return 0 if passed == len(results) else 1


def _limits_table(args):
    if args.regime == "all":
        if args.grid:
            raise UsageError("--grid needs a single --regime")
        regimes = sorted(dist.DEFAULT_GRIDS)
        scans = [(r, None) for r in regimes]
    else:
        grid = None
        if args.grid:
            try:
                grid = tuple(int(p) for p in args.grid.split(","))
            except ValueError as exc:
                raise UsageError(f"bad grid {args.grid!r}; expected N,N,...") from exc
        scans = [(args.regime, grid)]
    config = {"regime": args.regime, "grid": args.grid or "",
              "precision": args.precision}
    columns = ("regime", "param", "value", "distance")
    rows = []
    for regime, grid in scans:
        for sr in dist.limit_scan(regime, grid):
            rows.append({
                "regime": sr.regime,
                "param": sr.param,
                "value": _fmt_float(sr.value, args.precision),
                "distance": _fmt_float(sr.distance, args.precision),
            })
    return config, columns, rows


def cmd_limits(args) -> int:
    config, columns, rows = _limits_table(args)
    sys.stdout.write(_render(args.format, "limits", config, columns, rows))
    return 0


def _partitions_table(args):
    try:
        n = int(args.n) if args.n is not None else 0
    except ValueError as exc:
        raise UsageError("partitions needs a single integer --n") from exc
    if n < 1:
        raise UsageError("need n >= 1")
    limit = args.limit if args.limit is not None else n
    if limit < 0:
        raise UsageError("need limit >= 0")
    config = {"n": n, "limit": limit}
    columns = ("index", "count")
    series = theta.partition_series(n, limit)
    rows = [{"index": i, "count": c} for i, c in enumerate(series)]
    return config, columns, rows


def cmd_partitions(args) -> int:
    config, columns, rows = _partitions_table(args)
    sys.stdout.write(_render(args.format, "partitions", config, columns, rows))
    return 0


_EXPORT_BUILDERS = {
    "theta": lambda args: _theta_table(args)[:3],
    "pmf": _pmf_table,
    "moments": _moments_table,
    "limits": _limits_table,
    "partitions": _partitions_table,
}


def cmd_export(args) -> int:
    builder = _EXPORT_BUILDERS[args.table]
    config, columns, rows = builder(args)
    text = _emit_json(args.table, config, rows) if args.format == "json" \
        else _emit_csv(columns, rows)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(f"wrote {len(rows)} rows to {args.out}\n")
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p, *, formats=("table", "json", "csv")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--precision", type=int, default=12,
                   help="decimal digits for float rendering")


def _add_weight_flags(p, *, required: bool = True) -> None:
    p.add_argument("--weights", default="ones",
                   help="builtin name (ones, linear, zeta:<m>) or JSON file path")
    p.add_argument("--n", required=required, help="value or range LO..HI")
    p.add_argument("--k", required=required, help="value or range LO..HI")


def _add_theta_flags(p, *, required: bool = True) -> None:
    _add_weight_flags(p, required=required)
    p.add_argument("--t", action="append", metavar="RATIONAL",
                   help="evaluate at t (repeatable); default prints coefficients")
    p.add_argument("--algo", default="newton",
                   choices=sorted(theta.ALGORITHMS) + ["all", "oracle"])
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration cap for --algo oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ztt",
        description="Exact tables, laws, and limit diagnostics for "
                    "interpolated weighted multiset sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", help="polynomial coefficient tables")
    _add_theta_flags(p)
    _add_common(p)
    p.set_defaults(handler=cmd_theta)

    p = sub.add_parser("pmf", help="law of the adjacency statistic")
    _add_weight_flags(p)
    _add_common(p)
    p.set_defaults(handler=cmd_pmf)

    p = sub.add_parser("moments", help="exact moments of the adjacency statistic")
    _add_weight_flags(p)
    p.add_argument("--smax", type=int, default=2,
                   help="highest factorial moment")
    _add_common(p)
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("verify", help="run a named self-check suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--max-k", type=int, default=8, dest="max_k")
    p.add_argument("--budget", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("limits", help="limit-regime distance scans")
    p.add_argument("--regime", default="all",
                   choices=sorted(dist.DEFAULT_GRIDS) + ["all"])
    p.add_argument("--grid", default=None,
                   help="comma-separated parameter grid (single regime only)")
    _add_common(p)
    p.set_defaults(handler=cmd_limits)

    p = sub.add_parser("partitions", help="partition counts with bounded parts")
    p.add_argument("--n", type=int, required=True, help="largest allowed part")
    p.add_argument("--limit", type=int, default=None,
                   help="highest index of the series (default n)")
    _add_common(p)
    p.set_defaults(handler=cmd_partitions)

    p = sub.add_parser("export", help="write a table to a JSON or CSV file")
    p.add_argument("--table", required=True, choices=sorted(_EXPORT_BUILDERS))
    _add_theta_flags(p, required=False)
    p.add_argument("--smax", type=int, default=2)
    p.add_argument("--regime", default="all",
                   choices=sorted(dist.DEFAULT_GRIDS) + ["all"])
    p.add_argument("--grid", default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", required=True, help="output file path")
    _add_common(p, formats=("json", "csv"))
    p.set_defaults(handler=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    if getattr(args, "precision", 1) < 1:
        print("error: --precision must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (UsageError, WeightConfigError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
