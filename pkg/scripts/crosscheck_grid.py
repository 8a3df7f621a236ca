#!/usr/bin/env python3
"""Cross-check closed forms against direct zero summation over a (p, nu) grid.

For each order in --nu-list the script computes one batch of zeros and
compares the tail-corrected sums for p = 1..pmax against the exact rational
evaluations, printing the relative residual and the reported tail bound.
Exits nonzero if any point misses --tol.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from rayleigh_sums import SigmaTable, bessel_zeros, derive_sigma, eval_sigma_exact, numeric_sigma


@dataclass(frozen=True)
class Config:
    pmax: int
    nus: tuple[Fraction, ...]
    terms: int
    tol: float


def parse_args(argv: list[str] | None = None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=5)
    parser.add_argument(
        "--nu-list",
        default="0,1/2,1,2.7",
        help="comma-separated rational orders, e.g. '0,1/2,1,2.7'",
    )
    parser.add_argument("--terms", type=int, default=10000, help="zeros per order")
    parser.add_argument("--tol", type=float, default=1e-10, help="relative tolerance")
    args = parser.parse_args(argv)
    if args.pmax < 1:
        parser.error("--pmax must be >= 1")
    try:
        nus = tuple(Fraction(s) for s in args.nu_list.split(","))
    except (ValueError, ZeroDivisionError) as e:
        parser.error(f"bad --nu-list: {e}")
    if any(nu < 0 for nu in nus):
        parser.error("orders must be >= 0")
    return Config(pmax=args.pmax, nus=nus, terms=args.terms, tol=args.tol)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    table = SigmaTable()
    derive_sigma(table, cfg.pmax)
    failures = 0
    print(f"{'nu':>6} {'p':>3} {'exact':>24} {'relative':>12} {'tail bound':>12}")
    for nu in cfg.nus:
        t0 = time.perf_counter()
        zeros = bessel_zeros(float(nu), cfg.terms)
        for p in range(1, cfg.pmax + 1):
            exact = float(eval_sigma_exact(table[p], nu))
            ts = numeric_sigma(float(nu), p, zeros)
            rel = abs(ts.value - exact) / abs(exact)
            flag = "" if rel <= cfg.tol else "  MISS"
            failures += rel > cfg.tol
            print(f"{str(nu):>6} {p:>3} {exact:>24.17g} {rel:>12.3e} {ts.tail_bound:>12.3e}{flag}")
        print(f"       ({cfg.terms} zeros of J_{nu} in {time.perf_counter() - t0:.2f}s)")
    if failures:
        print(f"{failures} grid points missed tol {cfg.tol:g}")
        return 1
    print(f"all points within relative {cfg.tol:g}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
