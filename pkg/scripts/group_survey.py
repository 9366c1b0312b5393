"""Survey of the folded and classical unit groups: cyclicity, smallest
primitive roots and abelian types over a range of n.

    python3 scripts/group_survey.py --n-max 300
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from chebfield import modd


@dataclass(frozen=True)
class SurveyConfig:
    n_max: int = 200


def survey(cfg: SurveyConfig) -> None:
    non_cyclic = [row.n for row in modd.non_cyclic_rows(range(1, cfg.n_max + 1))]
    roots = Counter(modd.primitive_root(modd.ModdContext(n)) for n in range(2, cfg.n_max + 1))
    types = Counter(modd.abelian_type(modd.ModdContext(n)).render() for n in non_cyclic)
    print(f"n <= {cfg.n_max}: {len(non_cyclic)} non-cyclic folded groups")
    print("  " + ", ".join(map(str, non_cyclic)))
    print("smallest primitive root histogram (None = non-cyclic):")
    for root, count in sorted(roots.items(), key=lambda kv: (kv[0] is None, kv[0] or 0)):
        print(f"  {root!s:>5}: {count}")
    print("most frequent non-cyclic types:")
    for text, count in types.most_common(8):
        print(f"  {text}: {count}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=SurveyConfig.n_max)
    survey(SurveyConfig(parser.parse_args().n_max))


if __name__ == "__main__":
    main()
