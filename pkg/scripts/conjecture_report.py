"""Compare n^delta(n) / Discr C(n, x) with its conjectured closed form.

    python3 scripts/conjecture_report.py --n-max 200 --csv report.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

from chebfield.minpoly import discriminant_conjecture_check
from chebfield.numthy import factorize


@dataclass(frozen=True)
class ConjectureConfig:
    n_max: int = 100
    csv_path: Path | None = None


def run(cfg: ConjectureConfig) -> int:
    results = [discriminant_conjecture_check(n) for n in range(1, cfg.n_max + 1)]
    agree = sum(r.agrees for r in results)
    print(f"agrees: {agree}/{len(results)}")
    for r in results:
        if not r.agrees:
            print(f"  n = {r.n} {factorize(r.n)}: q = {r.q_value}, conjecture = {r.conjecture_value}")
    if cfg.csv_path:
        with cfg.csv_path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "q", "conjecture", "agrees"])
            for r in results:
                writer.writerow([r.n, r.q_value, r.conjecture_value, r.agrees])
    return len(results) - agree


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=ConjectureConfig.n_max)
    parser.add_argument("--csv", type=Path, dest="csv_path")
    args = parser.parse_args()
    run(ConjectureConfig(args.n_max, args.csv_path))
    sys.exit(0)


if __name__ == "__main__":
    main()
