"""Command-line interface.

Subcommands: derive, eval, verify (residues | ratio | sigma), zeta, zeros,
table. Text output is UTF-8, one result per line; closed forms render with
'v' for nu in text mode and in display math in latex mode. Exit codes:
0 success or verification pass, 1 verification failure, 2 usage error,
3 evaluation at a pole, 4 numeric breakdown (including a cache that fails
its determinism check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bessel_numeric import (
    NumericError,
    bessel_zeros,
    numeric_sigma,
    residue_tail_scale,
    verify_ratio_formula,
    verify_residue_identity,
)
from .exact_algebra import FactoredRationalFn, PoleError
from .rayleigh_core import SigmaTable, derive_sigma, eval_sigma_exact
from .zeta import ZetaValue, zeta_even, zeta_float_str

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_POLE = 3
EXIT_NUMERIC = 4

CACHE_FORMAT_VERSION = 1


class UsageError(Exception):
    """Bad argument values that argparse's type checks cannot catch."""


class CacheError(Exception):
    """Unreadable cache or a cache that disagrees with fresh derivation."""


def _parse_rational(s: str) -> Fraction:
    """Exact rational from 'a/b' or a decimal string (scaled integer, never
    a binary float)."""
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse rational {s!r}: {e}") from None


def _entry_json(f: FactoredRationalFn) -> str:
    return json.dumps(f.to_json_dict(), sort_keys=True, separators=(",", ":"))


def load_table(path: str) -> SigmaTable:
    """Load a cache file, re-deriving its range to confirm determinism.

    Every cached entry must serialize byte-identically to a freshly derived
    one; a mismatch means the file is stale or corrupt and raises CacheError.
    """
    table = SigmaTable()
    if not os.path.exists(path):
        return table
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise CacheError(f"cannot read cache {path}: {e}") from None
    if not isinstance(data, dict) or data.get("format_version") != CACHE_FORMAT_VERSION:
        raise CacheError(f"cache {path}: unsupported or missing format_version")
    entries = data.get("entries")
    if not isinstance(entries, dict):
        raise CacheError(f"cache {path}: missing entries")
    try:
        loaded = {int(k): FactoredRationalFn.from_json_dict(v) for k, v in entries.items()}
    except (KeyError, TypeError, ValueError) as e:
        raise CacheError(f"cache {path}: malformed entry: {e}") from None
    if loaded and sorted(loaded) != list(range(1, max(loaded) + 1)):
        raise CacheError(f"cache {path}: entries are not contiguous from 1")
    if loaded:
        fresh = SigmaTable()
        derive_sigma(fresh, max(loaded))
        for k, f in loaded.items():
            if _entry_json(f) != _entry_json(fresh[k]):
                raise CacheError(f"cache {path}: entry p={k} differs from fresh derivation")
    table.entries.update(loaded)
    return table


def save_table(path: str, table: SigmaTable) -> None:
    data = {
        "format_version": CACHE_FORMAT_VERSION,
        "entries": {str(p): f.to_json_dict() for p, f in sorted(table.entries.items())},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _render(f: FactoredRationalFn, fmt: str) -> str:
    if fmt == "text":
        return f.to_text()
    if fmt == "json":
        return _entry_json(f)
    if fmt == "latex":
        return f.to_latex()
    raise UsageError(f"unknown format {fmt!r}")


def cmd_derive(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError("p must be >= 1")
    table = load_table(args.cache) if args.cache else SigmaTable()
    f = derive_sigma(table, args.p)
    print(_render(f, args.format))
    if args.cache:
        save_table(args.cache, table)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError("p must be >= 1")
    nu = _parse_rational(args.nu)
    if not args.exact and nu < 0:
        raise UsageError("nu must be >= 0 unless --exact is given")
    table = SigmaTable()
    f = derive_sigma(table, args.p)
    value = eval_sigma_exact(f, nu)
    if args.exact:
        print(value)
    else:
        print(repr(float(value)))
    return EXIT_OK


def cmd_verify_sigma(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError("p must be >= 1")
    if args.terms < 2:
        raise UsageError("terms must be >= 2")
    nu = _parse_rational(args.nu)
    if nu < 0:
        raise UsageError("nu must be >= 0")
    table = SigmaTable()
    exact = eval_sigma_exact(derive_sigma(table, args.p), nu)
    zeros = bessel_zeros(float(nu), args.terms)
    ts = numeric_sigma(float(nu), float(args.p), zeros)
    exact_f = float(exact)
    residual = abs(ts.value - exact_f)
    rel = residual / abs(exact_f)
    print(f"lhs = {exact_f!r} (exact {exact})")
    print(f"rhs = {ts.value!r}")
    print(f"residual = {residual:.6e}")
    print(f"tail_bound = {ts.tail_bound:.6e}")
    ok = rel <= args.tol
    print(f"result: {'PASS' if ok else 'FAIL'} (relative {rel:.3e}, tol {args.tol:.3e})")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_verify_residues(args: argparse.Namespace) -> int:
    if args.p <= 0:
        raise UsageError("p must be > 0")
    if args.nu < 0:
        raise UsageError("nu must be >= 0")
    if args.terms < 2:
        raise UsageError("terms must be >= 2")
    report = verify_residue_identity(args.nu, args.p, args.terms)
    scale = residue_tail_scale(args.nu, args.p, args.terms)
    print(f"lhs = {report.lhs!r}")
    print(f"rhs = {report.partial_rhs!r}")
    print(f"residual = {report.residual:.6e}")
    print(f"tail_scale = {scale:.6e}")
    print(f"converging = {report.converging}")
    ok = (args.tol is not None and report.residual <= args.tol) or (
        report.converging and report.residual <= scale
    )
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_verify_ratio(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError("p must be >= 1")
    if args.nu < 0:
        raise UsageError("nu must be >= 0")
    if args.k < 1:
        raise UsageError("k must be >= 1")
    residual = verify_ratio_formula(args.nu, args.p, args.k)
    print(f"residual = {residual:.6e}")
    ok = residual <= args.tol
    print(f"result: {'PASS' if ok else 'FAIL'} (tol {args.tol:.3e})")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _format_zeta(z: ZetaValue) -> str:
    num = z.coefficient.numerator
    pi_part = f"pi^{z.two_p}" if num == 1 else f"{num} * pi^{z.two_p}"
    if z.coefficient.denominator == 1:
        return f"zeta({z.two_p}) = {pi_part}"
    den = " * ".join(
        f"{prime}^{e}" if e > 1 else f"{prime}" for prime, e in z.factored_denominator
    )
    return f"zeta({z.two_p}) = {pi_part} / ({den})"


def cmd_zeta(args: argparse.Namespace) -> int:
    if args.p < 1:
        raise UsageError("p must be >= 1")
    z = zeta_even(args.p, SigmaTable())
    print(_format_zeta(z))
    if args.float:
        print(f"zeta({z.two_p}) ~= {zeta_float_str(z, args.digits)}")
    return EXIT_OK


def cmd_zeros(args: argparse.Namespace) -> int:
    if args.nu < 0:
        raise UsageError("nu must be >= 0")
    if args.count < 1:
        raise UsageError("count must be >= 1")
    if not 1 <= args.digits <= 17:
        raise UsageError("digits must be in 1..17")
    zs = bessel_zeros(args.nu, args.count)
    for z in zs.zeros:
        print(f"{z:.{args.digits}f}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.pmax < 1:
        raise UsageError("pmax must be >= 1")
    table = load_table(args.cache) if args.cache else SigmaTable()
    derive_sigma(table, args.pmax)
    if args.format == "json":
        doc = [
            {"p": p, **table[p].to_json_dict()} for p in range(1, args.pmax + 1)
        ]
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for p in range(1, args.pmax + 1):
            if args.format == "latex":
                print(f"\\sigma({p},\\nu) = {table[p].to_latex()}")
            else:
                print(f"sigma({p}) = {table[p].to_text()}")
    if args.cache:
        save_table(args.cache, table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rayleigh",
        description="Exact closed forms for sums of inverse even powers of "
        "Bessel-function zeros, their numerical verification, and exact "
        "even-argument zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_derive = sub.add_parser("derive", help="derive the closed form of sigma(p, nu)")
    p_derive.add_argument("--p", type=int, required=True)
    p_derive.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_derive.add_argument("--cache", help="JSON cache file to reuse and extend")
    p_derive.set_defaults(func=cmd_derive)

    p_eval = sub.add_parser("eval", help="evaluate sigma(p, nu) at a rational nu")
    p_eval.add_argument("--p", type=int, required=True)
    p_eval.add_argument("--nu", required=True, help="rational 'a/b' or decimal string")
    p_eval.add_argument("--exact", action="store_true", help="print an exact fraction")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="numeric verification of the identities")
    vsub = p_verify.add_subparsers(dest="kind", required=True)

    v_res = vsub.add_parser("residues", help="Gamma constant vs weighted ratio sum")
    v_res.add_argument("--p", type=float, required=True, help="any real p > 0")
    v_res.add_argument("--nu", type=float, required=True)
    v_res.add_argument("--terms", type=int, default=10000)
    v_res.add_argument("--tol", type=float, default=None)
    v_res.set_defaults(func=cmd_verify_residues)

    v_ratio = vsub.add_parser("ratio", help="ratio expansion vs direct evaluation")
    v_ratio.add_argument("--p", type=int, required=True)
    v_ratio.add_argument("--nu", type=float, required=True)
    v_ratio.add_argument("--k", type=int, default=1, help="index of the zero to test")
    v_ratio.add_argument("--tol", type=float, default=1e-8)
    v_ratio.set_defaults(func=cmd_verify_ratio)

    v_sigma = vsub.add_parser("sigma", help="closed form vs direct zero summation")
    v_sigma.add_argument("--p", type=int, required=True)
    v_sigma.add_argument("--nu", required=True, help="rational 'a/b' or decimal string")
    v_sigma.add_argument("--terms", type=int, default=10000)
    v_sigma.add_argument("--tol", type=float, default=1e-10)
    v_sigma.set_defaults(func=cmd_verify_sigma)

    p_zeta = sub.add_parser("zeta", help="exact zeta(2p)")
    p_zeta.add_argument("--p", type=int, required=True)
    p_zeta.add_argument("--float", action="store_true", help="also print a decimal value")
    p_zeta.add_argument("--digits", type=int, default=30)
    p_zeta.set_defaults(func=cmd_zeta)

    p_zeros = sub.add_parser("zeros", help="list the first zeros of J_nu")
    p_zeros.add_argument("--nu", type=float, required=True)
    p_zeros.add_argument("--count", type=int, required=True)
    p_zeros.add_argument("--digits", type=int, default=15, help="decimal places")
    p_zeros.set_defaults(func=cmd_zeros)

    p_table = sub.add_parser("table", help="closed forms for p = 1..pmax")
    p_table.add_argument("--pmax", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_table.add_argument("--cache", help="JSON cache file to reuse and extend")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PoleError as e:
        print(f"pole at nu={e.nu}", file=sys.stderr)
        return EXIT_POLE
    except CacheError as e:
        print(f"cache error: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except NumericError as e:
        print(f"numeric breakdown: {e}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
