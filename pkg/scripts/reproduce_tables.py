"""Write every printed table the package reproduces to one directory.

    python3 scripts/reproduce_tables.py --out tables/
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from chebfield import cli, dsr


@dataclass(frozen=True)
class TableConfig:
    out: Path = Path("tables")
    minpoly_max: int = 30
    coeff_max: int = 15
    zeros_max: int = 30
    algebra_max: int = 12
    cycles_max: int = 40
    galois_max: int = 100


def _command(argv: list[str]) -> str:
    code, text, _ = cli.run(argv)
    if code:
        raise RuntimeError(f"{argv} exited with {code}")
    return text


def reproduce(cfg: TableConfig) -> dict[str, Path]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    jobs = {
        "minimal_polynomials.txt": ["minpoly", "--range", f"1..{cfg.minpoly_max}"],
        "coefficient_rows.txt": ["minpoly", "--coeffs", "--range", f"1..{cfg.coeff_max}"],
        "zeros_power_basis.txt": ["zeros", "--range", f"1..{cfg.zeros_max}"],
        "modd_cycles.txt": ["cycles", "--range", f"1..{cfg.cycles_max}"],
        "modd_cycles.dot": ["cycles", "--range", f"1..{cfg.cycles_max}", "--format", "dot"],
        "modn_non_cyclic.txt": ["galois", "modn", "--range", f"1..{cfg.galois_max}"],
        "modd_non_cyclic.txt": ["galois", "modd", "--range", f"1..{cfg.galois_max}"],
    }
    written = {}
    for name, argv in jobs.items():
        path = cfg.out / name
        path.write_text(_command(argv), encoding="utf-8")
        written[name] = path
    lines = []
    for n in range(3, cfg.algebra_max + 1):
        lines += dsr.reduced_algebra_table(n).text_lines() + [""]
    path = cfg.out / "reduced_algebras.txt"
    path.write_text("\n".join(lines), encoding="utf-8")
    written[path.name] = path
    (cfg.out / "config.json").write_text(
        json.dumps({k: str(v) for k, v in asdict(cfg).items()}, indent=2), encoding="utf-8")
    return written


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=TableConfig.out)
    parser.add_argument("--cycles-max", type=int, default=TableConfig.cycles_max)
    parser.add_argument("--galois-max", type=int, default=TableConfig.galois_max)
    args = parser.parse_args()
    cfg = TableConfig(out=args.out, cycles_max=args.cycles_max, galois_max=args.galois_max)
    for name, path in reproduce(cfg).items():
        print(f"{name:28s} {path}")


if __name__ == "__main__":
    main()
