"""Evaluate P_n(t) by every method over a grid and write the deviations as CSV.

    python scripts/compare_representations.py --max-n 15 --out deviations.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from eulerleg.cli import METHODS, evaluate
from eulerleg.exactcore import as_rational
from eulerleg.recurrence import legendre_eval

GRID = ("-0.9", "-0.5", "0", "0.5", "0.9", "1.1", "3/2", "2", "3")


@dataclass
class Config:
    max_n: int = 15
    grid: tuple = GRID
    out: str = "-"


def rows(cfg: Config):
    for t in cfg.grid:
        for n in range(cfg.max_n + 1):
            exact = float(legendre_eval(n, as_rational(t)))
            reports, _ = evaluate(n, t, METHODS)
            for r in reports:
                if r.skipped:
                    continue
                dev = abs(float(r.value) - exact) / max(1.0, abs(exact))
                yield {"t": t, "n": n, "method": r.method, "value": r.value,
                       "est_error": r.est_error, "scaled_deviation": f"{dev:.3e}"}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=15)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    cfg = Config(max_n=args.max_n, out=args.out)
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    fields = ["t", "n", "method", "value", "est_error", "scaled_deviation"]
    w = csv.DictWriter(fh, fieldnames=fields)
    w.writeheader()
    worst = 0.0
    for row in rows(cfg):
        worst = max(worst, float(row["scaled_deviation"]))
        w.writerow(row)
    if fh is not sys.stdout:
        fh.close()
    print(f"worst scaled deviation from the recurrence value: {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
