"""Print loopless and planar loopless map counts side by side.

Columns: G(n,0) from the exact recurrence, the same recurrence run in binary64
floats, the planar closed formula, and brute-force P and N word counts.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from mapwords.words import count_G, count_planar_loopless, gen_words, has_N, has_P


@dataclass
class Config:
    max_n: int = 20
    brute_n: int = 6


@lru_cache(maxsize=None)
def g_double(n: int, m: int) -> float:
    if n == 0:
        return 1.0
    total = g_double(n, m - 1) if m else 0.0
    for i in range(n):
        for j in range(n - i):
            total += (factorial(2 * i + j) / factorial(2 * i) * comb(m + j, j)
                      * g_double(i, 0) * g_double(n - 1 - i - j, m + j))
    return total


def main(cfg: Config) -> None:
    print(f"{'n':>3} {'G(n,0) exact':>24} {'G(n,0) in doubles':>24} {'planar':>16}"
          f" {'P words':>8} {'N words':>8}")
    for n in range(1, cfg.max_n + 1):
        p = q = ""
        if n <= cfg.brute_n:
            ws = list(gen_words(n))
            p, q = sum(map(has_P, ws)), sum(map(has_N, ws))
        exact, approx = count_G(n, 0), int(g_double(n, 0))
        flag = "" if exact == approx else "  *"
        print(f"{n:>3} {exact:>24} {approx:>24} {count_planar_loopless(n):>16}"
              f" {p:>8} {q:>8}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--brute-n", type=int, default=Config.brute_n)
    a = ap.parse_args()
    main(Config(a.max_n, a.brute_n))
