#!/usr/bin/env python3
"""Derive the closed-form table up to a chosen p and report growth stats.

Prints one row per p: numerator degree, decimal digits of the largest
numerator coefficient, the power of two and the largest shift in the
denominator, and cumulative wall time. Optionally writes the table to a
JSON cache usable by `rayleigh derive --cache` / `rayleigh table --cache`.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rayleigh_sums import SigmaTable, derive_sigma
from rayleigh_sums.cli import save_table


@dataclass(frozen=True)
class Config:
    pmax: int
    cache: str | None
    show_forms: bool


def parse_args(argv: list[str] | None = None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=40, help="largest p to derive")
    parser.add_argument("--cache", help="write the table to this JSON cache file")
    parser.add_argument(
        "--show-forms", action="store_true", help="also print each closed form"
    )
    args = parser.parse_args(argv)
    if args.pmax < 1:
        parser.error("--pmax must be >= 1")
    return Config(pmax=args.pmax, cache=args.cache, show_forms=args.show_forms)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    table = SigmaTable()
    print(f"{'p':>3} {'deg num':>8} {'digits':>7} {'2^a':>5} {'max m':>6} {'cum s':>8}")
    t0 = time.perf_counter()
    for p in range(1, cfg.pmax + 1):
        f = derive_sigma(table, p)
        digits = len(str(max(abs(c) for c in f.numerator.int_coeffs())))
        print(
            f"{p:>3} {f.numerator.degree:>8} {digits:>7} {f.two_exponent:>5} "
            f"{f.shift_factors[-1][0]:>6} {time.perf_counter() - t0:>8.3f}"
        )
        if cfg.show_forms:
            print(f"    sigma({p}) = {f.to_text()}")
    if cfg.cache:
        save_table(cfg.cache, table)
        print(f"table written to {cfg.cache}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
