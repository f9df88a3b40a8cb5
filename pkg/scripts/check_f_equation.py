"""Tabulate T(n,m) by enumeration and compare both sides of the F equation."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from mapwords.words import verify_F_equation


@dataclass
class Config:
    degree: int = 6


def main(cfg: Config) -> int:
    rep = verify_F_equation(cfg.degree)
    print("T(n,m) from N' words:")
    for n in range(cfg.degree // 2 + 1):
        row = [rep.table[n, m] for m in range(cfg.degree + 1) if (n, m) in rep.table]
        print(f"  n={n}: {row}")
    print(f"coefficients compared up to total degree {rep.degree}")
    if rep.holds:
        print("equation holds")
        return 0
    for (i, j), lhs, rhs in rep.mismatches:
        print(f"  x^{i} y^{j}: lhs {lhs}, rhs {rhs}")
    return 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=Config.degree)
    raise SystemExit(main(Config(ap.parse_args().degree)))
