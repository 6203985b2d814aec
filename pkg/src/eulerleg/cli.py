"""``eulerleg`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, DomainError, ToleranceNotReached
from .exactcore import format_poly, poly_eval
from .integrals import e606_legendre_estimate, laplace_negative_estimate, laplace_positive_estimate
from .quadrature import gauss_legendre_rule
from .recurrence import legendre_and_derivative_array, legendre_eval, legendre_poly, primitive_solve
from .trinomial import gf_coefficients, legendre_via_trinomial
from .verify import DEFAULT_TOL, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

METHODS = ("recurrence", "trinomial", "gf-series", "primitive-solve", "laplace-pos", "laplace-neg", "e606")
EXACT_METHODS = frozenset(METHODS[:4])
CSV_FIELDS = ("method", "n", "t", "value", "est_error")
INTEGRAL_TOL = 1e-12


def fmt_real(x: float) -> str:
    return format(float(x), ".17g")


def fmt_rational(q: Fraction) -> str:
    """``p/q``, or just ``p`` for integers."""
    return str(q)


@dataclass
class MethodReport:
    method: str
    n: int
    t: str
    value: str
    est_error: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> MethodReport:
        return cls(str(d["method"]), int(d["n"]), str(d["t"]), str(d["value"]), str(d["est_error"]))

    @property
    def skipped(self) -> bool:
        return self.value.startswith("skipped:")

    @property
    def failed(self) -> bool:
        return self.value.startswith("failed:")

    @property
    def numeric(self) -> float | None:
        if self.skipped or self.failed:
            return None
        return float(self.value)


@dataclass
class ComparisonRow:
    n: int
    t: str
    values: dict
    max_pairwise_deviation: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["max_pairwise_deviation"] = fmt_real(self.max_pairwise_deviation)
        return d


def _exact_value(method: str, n: int, t: Fraction) -> Fraction:
    if method == "recurrence":
        return legendre_eval(n, t)
    if method == "trinomial":
        return poly_eval(legendre_via_trinomial(n), t)
    if method == "gf-series":
        return gf_coefficients(t, 1, n + 1)[n]
    if method == "primitive-solve":
        return primitive_solve(n, t).legendre_value
    raise KeyError(method)


_NUMERIC = {
    "laplace-pos": laplace_positive_estimate,
    "laplace-neg": laplace_negative_estimate,
    "e606": e606_legendre_estimate,
}


def evaluate(n: int, t_text: str, methods=METHODS, tol: float = DEFAULT_TOL) -> tuple[list[MethodReport], ComparisonRow]:
    """One report per method plus the cross-method comparison row."""
    t = Fraction(t_text)
    reports = []
    for m in methods:
        if m in EXACT_METHODS:
            v = _exact_value(m, n, t)
            reports.append(MethodReport(m, n, t_text, fmt_real(v), "exact"))
            continue
        try:
            est = _NUMERIC[m](n, float(t), min(INTEGRAL_TOL, tol / 1000))
        except DomainError as exc:
            reports.append(MethodReport(m, n, t_text, f"skipped: {exc}", "n/a"))
        except (ConsistencyError, ToleranceNotReached) as exc:
            reports.append(MethodReport(m, n, t_text, f"failed: {exc}", "n/a"))
        else:
            reports.append(MethodReport(m, n, t_text, fmt_real(est.value), fmt_real(est.error)))
    vals = {r.method: r.numeric for r in reports if r.numeric is not None}
    dev = max((abs(x - y) for x, y in itertools.combinations(vals.values(), 2)), default=0.0)
    row = ComparisonRow(n, t_text, {k: fmt_real(v) for k, v in vals.items()}, dev)
    return reports, row


def comparison_passes(reports: list[MethodReport], row: ComparisonRow, tol: float) -> bool:
    if any(r.failed for r in reports):
        return False
    scale = max((abs(float(v)) for v in row.values.values()), default=1.0)
    return row.max_pairwise_deviation < tol * max(1.0, scale)


def gram_matrix(max_n: int, nodes: int) -> np.ndarray:
    rule = gauss_legendre_rule(nodes)
    vals = np.array([legendre_and_derivative_array(i, rule.nodes)[0] for i in range(max_n + 1)])
    return (vals * rule.weights) @ vals.T


# -- output helpers ------------------------------------------------------


def _emit_csv(out, fields, rows):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    out.write(buf.getvalue())


def _emit_json(out, obj):
    json.dump(obj, out, indent=2, ensure_ascii=False)
    out.write("\n")


# -- subcommands ---------------------------------------------------------


def cmd_table(args, out) -> int:
    if not 0 <= args.max_n <= 50:
        raise UsageError("--max-n must lie in [0, 50]")
    rows = []
    for n in range(args.max_n + 1):
        p = legendre_poly(n)
        rows.append({"n": n, "polynomial": format_poly(p), "coefficients": [fmt_rational(c) for c in p.coeffs]})
    if args.format == "json":
        _emit_json(out, {"command": "table", "rows": rows})
    elif args.format == "csv":
        _emit_csv(out, ("n", "polynomial", "coefficients"),
                  [dict(r, coefficients=" ".join(r["coefficients"])) for r in rows])
    else:
        for r in rows:
            out.write(f"{r['n']:>3}  {r['polynomial']}\n")
    return EXIT_OK


def cmd_eval(args, out) -> int:
    methods = _parse_methods(args.methods)
    try:
        Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse t={args.t!r} as a rational or decimal literal")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    reports, row = evaluate(args.n, args.t, methods, args.tol)
    ok = comparison_passes(reports, row, args.tol)
    if args.format == "json":
        _emit_json(out, {
            "command": "eval",
            "reports": [r.to_dict() for r in reports],
            "comparison": row.to_dict(),
            "tol": fmt_real(args.tol),
            "passed": ok,
        })
    elif args.format == "csv":
        _emit_csv(out, CSV_FIELDS, [r.to_dict() for r in reports])
    else:
        exact = legendre_eval(args.n, Fraction(args.t))
        out.write(f"P_{args.n}({args.t}) = {fmt_rational(exact)}\n")
        for r in reports:
            out.write(f"  {r.method:<16} {r.value:<26} {r.est_error}\n")
        out.write(f"max pairwise deviation {fmt_real(row.max_pairwise_deviation)}  "
                  f"{'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    checks = run_suite(args.suite, args.tol)
    ok = all(c.passed for c in checks)
    records = [{
        "suite": c.suite,
        "check": c.name,
        "params": c.params_str(),
        "residual": fmt_rational(c.residual) if isinstance(c.residual, Fraction) else fmt_real(c.residual),
        "limit": "exact" if c.limit == 0 else fmt_real(c.limit),
        "passed": c.passed,
    } for c in checks]
    if args.format == "json":
        _emit_json(out, {"command": "verify", "suite": args.suite, "checks": records,
                         "total": len(checks), "failed": sum(not c.passed for c in checks), "passed": ok})
    elif args.format == "csv":
        _emit_csv(out, ("suite", "check", "params", "residual", "limit", "passed"), records)
    else:
        for r in records:
            flag = "ok  " if r["passed"] else "FAIL"
            out.write(f"{flag} {r['suite']:<16}{r['check']:<28}({r['params']})  "
                      f"residual={r['residual']}  limit={r['limit']}\n")
        failed = [r for r in records if not r["passed"]]
        out.write(f"{len(records) - len(failed)}/{len(records)} checks passed\n")
        for r in failed:
            out.write(f"failing tuple: {r['suite']} {r['check']} ({r['params']})\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ortho(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    if args.nodes < args.max_n + 1:
        raise UsageError("--nodes must be at least max-n + 1")
    g = gram_matrix(args.max_n, args.nodes)
    expect = np.diag([2.0 / (2 * i + 1) for i in range(args.max_n + 1)])
    dev = np.abs(g - expect)
    ok = bool(np.all(dev < args.tol))
    if args.format == "json":
        _emit_json(out, {"command": "ortho", "max_n": args.max_n, "nodes": args.nodes,
                         "gram": [[fmt_real(x) for x in row] for row in g],
                         "max_deviation": fmt_real(dev.max()), "tol": fmt_real(args.tol), "passed": ok})
    elif args.format == "csv":
        _emit_csv(out, ("i", "j", "value", "expected", "deviation"),
                  [{"i": i, "j": j, "value": fmt_real(g[i, j]), "expected": fmt_real(expect[i, j]),
                    "deviation": fmt_real(dev[i, j])}
                   for i in range(len(g)) for j in range(len(g))])
    else:
        for row in g:
            out.write("  ".join(f"{x: .17g}" for x in row) + "\n")
        out.write(f"max deviation {fmt_real(dev.max())}  {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gf(args, out) -> int:
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse t={args.t!r}")
    if not 1 <= args.count <= 200:
        raise UsageError("--count must lie in [1, 200]")
    coeffs = gf_coefficients(t, 1, args.count)
    rows = []
    for k, c in enumerate(coeffs):
        ref = legendre_eval(k, t)
        rows.append({"k": k, "gf": fmt_rational(c), "recurrence": fmt_rational(ref), "match": c == ref})
    ok = all(r["match"] for r in rows)
    if args.format == "json":
        _emit_json(out, {"command": "gf", "t": args.t, "rows": rows, "passed": ok})
    elif args.format == "csv":
        _emit_csv(out, ("k", "gf", "recurrence", "match"), rows)
    else:
        for r in rows:
            out.write(f"{r['k']:>4}  {r['gf']:<30} {r['recurrence']:<30} {'=' if r['match'] else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_FAIL


class UsageError(Exception):
    pass


def _parse_methods(text: str) -> tuple[str, ...]:
    if text in ("all", ""):
        return METHODS
    picked = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = [m for m in picked if m not in METHODS]
    if unknown:
        raise UsageError(f"unknown method(s): {', '.join(unknown)}; choose from {', '.join(METHODS)}")
    return picked


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerleg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, func):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("table", "print P_0..P_max-n with exact coefficients", cmd_table)
    p.add_argument("--max-n", type=int, default=7)

    p = add("eval", "evaluate P_n(t) by several representations", cmd_eval)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True, help='rational "p/q" or decimal literal')
    p.add_argument("--methods", default="all", help="comma-separated subset of: " + ", ".join(METHODS))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = add("verify", "run identity and cross-representation grids", cmd_verify)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = add("ortho", "Gram matrix of P_0..P_max-n under Gauss-Legendre", cmd_ortho)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-12)

    p = add("gf", "generating-function coefficients against the recurrence", cmd_gf)
    p.add_argument("--t", required=True)
    p.add_argument("--count", type=int, default=10)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); nothing left to report
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
