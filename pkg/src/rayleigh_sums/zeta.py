"""Exact even-argument Riemann zeta values.

The zeros of J_{1/2} are exactly k*pi, so specializing the closed form at
nu = 1/2 turns the zero sum into zeta(2p)/pi**(2p):

    zeta(2p) = pi**(2p) * sigma(p, 1/2).

The half-integer shift likewise converts sigma into zero sums of the
spherical Bessel functions j_nu, whose zeros are those of J_{nu+1/2}.
Values are kept symbolic as (rational coefficient) * pi**(2p); floating
rendering goes through a fixed 50-digit pi so binary64 pi never enters the
exact pipeline.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import Rational
from .rayleigh_core import SigmaTable, derive_sigma, eval_sigma_exact

PI_50 = "3.14159265358979323846264338327950288419716939937511"

# classical cross-check values kept nowhere: the zeta module has no table of
# its own, every value is computed from the sigma closed forms on demand


def _trial_factor(n: int, bound: int = 10**6) -> tuple[tuple[int, int], ...]:
    """Factor n > 0 by trial division with primes <= bound; any remaining
    cofactor larger than the bound is reported as a single unfactored entry."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: list[tuple[int, int]] = []
    for d in (2, 3):
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
    d = 5
    while d * d <= n and d <= bound:
        for cand in (d, d + 2):
            e = 0
            while n % cand == 0:
                n //= cand
                e += 1
            if e:
                out.append((cand, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class ZetaValue:
    """zeta(two_p) = coefficient * pi**two_p, denominator factored for display."""

    two_p: int
    coefficient: Rational
    factored_denominator: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.coefficient <= 0:
            raise ValueError("zeta coefficient must be positive")
        prod = 1
        for prime, e in self.factored_denominator:
            prod *= prime**e
        if prod != self.coefficient.denominator:
            raise ValueError("factored denominator does not re-multiply")


def zeta_even(p: int, table: SigmaTable) -> ZetaValue:
    """Exact zeta(2p) from the closed form at nu = 1/2."""
    coeff = eval_sigma_exact(derive_sigma(table, p), Fraction(1, 2))
    return ZetaValue(
        two_p=2 * p,
        coefficient=coeff,
        factored_denominator=_trial_factor(coeff.denominator),
    )


def spherical_sigma(p: int, nu: Rational, table: SigmaTable) -> Rational:
    """sum_k of the inverse 2p-th powers of the zeros of the spherical
    Bessel function j_nu, via the shift sigma(p, nu + 1/2)."""
    return eval_sigma_exact(derive_sigma(table, p), Fraction(nu) + Fraction(1, 2))


def zeta_float_str(z: ZetaValue, digits: int = 30) -> str:
    """Decimal rendering of zeta(two_p) using the 50-digit pi constant."""
    if not 1 <= digits <= 45:
        raise ValueError("digits must be in 1..45")
    with decimal.localcontext() as ctx:
        ctx.prec = 50
        pi = decimal.Decimal(PI_50)
        val = (
            decimal.Decimal(z.coefficient.numerator)
            / decimal.Decimal(z.coefficient.denominator)
            * pi**z.two_p
        )
        ctx.prec = digits
        return str(+val)
