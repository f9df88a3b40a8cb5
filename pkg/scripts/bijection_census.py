"""Census of small rooted maps and their quasi-trees.

For each edge count m, reconstructs every bicolored ordered matching and tallies
the resulting (rooted map, quasi-tree) pairs by genus of map and quasi-tree.
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from math import factorial

from mapwords.chords import bicolored_matchings, reconstruct
from mapwords.maps import genus
from mapwords.quasitree import quasi_tree_genus
from mapwords.sampling import rooted_map_census


@dataclass
class Config:
    max_m: int = 4


def main(cfg: Config) -> None:
    for m in range(1, cfg.max_m + 1):
        tally: Counter[tuple[int, int]] = Counter()
        for d in bicolored_matchings(m):
            r, s = reconstruct(d)
            tally[genus(r.map), quasi_tree_genus(r.map, s)] += 1
        maps = Counter(genus(r.map) for r in rooted_map_census(m))
        total = sum(tally.values())
        print(f"m={m}: {total} pairs ((2m)!/m! = {factorial(2 * m) // factorial(m)}),"
              f" {sum(maps.values())} rooted maps")
        for g in sorted(maps):
            row = ", ".join(f"g_S={k}: {tally[g, k]}" for k in range(g + 1))
            print(f"  genus {g}: {maps[g]} maps; {row}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    main(Config(ap.parse_args().max_m))
