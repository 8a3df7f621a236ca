"""Exact rational scalars, dense univariate polynomials in nu, and rational
functions kept in factored-denominator normal form.

Everything here is pure and exact: scalars are arbitrary-precision fractions,
polynomials are dense coefficient tuples over those fractions, and the
rational functions that the sigma solver produces are stored as an
integer-coefficient numerator over a denominator of the shape

    2**a * prod_m (nu + m)**e_m * residual(nu).

The residual factor records any denominator part that does not split into
integer shifts; every value produced by the solver is expected to have
residual == 1, and the test suite checks that rather than assuming it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

# Arbitrary-precision exact scalar. fractions.Fraction already maintains the
# invariants this package needs (positive denominator, gcd-reduced after
# every operation), so it is used directly rather than wrapped.
Rational = Fraction


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a denominator root."""

    def __init__(self, nu: Rational) -> None:
        self.nu = nu
        super().__init__(f"evaluation at pole nu={nu}")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; coeffs[i] is the coefficient of nu**i.

    The zero polynomial is the empty tuple. Trailing zero coefficients are
    stripped on construction, so equal polynomials compare equal.
    """

    coeffs: tuple[Rational, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def constant(cls, c: Rational | int) -> "Poly":
        return cls((c,))

    @classmethod
    def shift(cls, m: int) -> "Poly":
        """The linear factor nu + m."""
        return cls((m, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) == -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Rational:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        return Poly(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        ))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return Poly(tuple(out))

    def scale(self, c: Rational | int) -> "Poly":
        return Poly(tuple(Fraction(c) * x for x in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact rational Euclidean division."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = other.degree, other.leading
        if len(rem) - 1 < dn:
            return Poly.zero(), self
        quot = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i] / dd
            if c:
                quot[i - dn] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - dn + j] -= c * oc
        return Poly(tuple(quot)), Poly(tuple(rem[:dn]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def div_shift(self, m: int) -> tuple["Poly", Rational]:
        """Synthetic division by (nu + m); returns (quotient, remainder)."""
        if self.is_zero:
            return Poly.zero(), Fraction(0)
        q = [Fraction(0)] * (len(self.coeffs) - 1)
        rem = self.coeffs[-1]
        for i in range(len(self.coeffs) - 2, -1, -1):
            q[i] = rem
            rem = self.coeffs[i] - m * rem
        return Poly(tuple(q)), rem

    def evaluate(self, x: Rational | int) -> Rational:
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def evaluate_float(self, x: float) -> float:
        v = 0.0
        for c in reversed(self.coeffs):
            v = v * x + float(c)
        return v

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def content(self) -> int:
        """gcd of the coefficients; valid only for integer coefficients."""
        g = 0
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("content of non-integer polynomial")
            g = math.gcd(g, abs(c.numerator))
        return g

    def int_coeffs(self) -> tuple[int, ...]:
        """Coefficients as plain ints; raises if any is non-integer."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return tuple(out)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Dispatch form of +, -, *; op is one of 'add', 'sub', 'mul'."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via exact rational Euclid."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd undefined for two zero polynomials")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def factor_shifts(
    den: Poly, max_shift: int
) -> tuple[int, tuple[tuple[int, int], ...], Poly]:
    """Split a denominator into (two_exponent, shift_factors, residual).

    Extracts the exact multiplicity of each (nu + m) for 1 <= m <= max_shift
    by repeated synthetic division, then pulls the largest power of 2 out of
    the remaining part when that part is a positive integer constant.
    Whatever is left lands in the residual polynomial, so the call never
    fails on a nonzero input; re-expanding the three parts always reproduces
    the input exactly.
    """
    if den.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    shifts: list[tuple[int, int]] = []
    rem = den
    for m in range(1, max_shift + 1):
        e = 0
        while True:
            q, r = rem.div_shift(m)
            if r != 0:
                break
            rem = q
            e += 1
        if e:
            shifts.append((m, e))
    two = 0
    residual = rem
    if rem.degree == 0:
        c = rem.coeffs[0]
        if c.denominator == 1 and c > 0:
            n = c.numerator
            two = (n & -n).bit_length() - 1
            residual = Poly.constant(n >> two)
    return two, tuple(shifts), residual


def _poly_terms_text(p: Poly, var: str, pow_fmt: str, mul: str) -> str:
    # descending powers; integer coefficients render without denominators
    parts: list[tuple[str, str]] = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mag_s = str(mag.numerator) if mag.denominator == 1 else str(mag)
        if i == 0:
            body = mag_s
        else:
            v = var if i == 1 else var + pow_fmt.format(i)
            body = v if mag == 1 else mag_s + mul + v
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_text(p: Poly) -> str:
    """Plain-text rendering with 'v' for nu, e.g. '21v^3 + 181v^2 + 513v + 473'."""
    return _poly_terms_text(p, "v", "^{}", "")


def poly_latex(p: Poly) -> str:
    """LaTeX rendering with \\nu, braced exponents, no spaces."""
    return _poly_terms_text(p, r"\nu", "^{{{}}}", "").replace(" + ", "+").replace(" - ", "-")


@dataclass(frozen=True)
class FactoredRationalFn:
    """numerator / (2**two_exponent * prod (nu+m)**e_m * residual).

    shift_factors is sorted by m with distinct entries. In the normal form
    emitted by the solver the numerator has integer coefficients with
    content 1 and positive leading coefficient, numerator and denominator
    are coprime, and residual == 1; those are verified properties of the
    outputs, not constructor requirements.
    """

    numerator: Poly
    two_exponent: int
    shift_factors: tuple[tuple[int, int], ...]
    residual: Poly = field(default_factory=Poly.one)

    def __post_init__(self) -> None:
        if self.two_exponent < 0:
            raise ValueError("two_exponent must be non-negative")
        ms = [m for m, _ in self.shift_factors]
        if ms != sorted(set(ms)) or any(m < 1 for m in ms):
            raise ValueError("shift_factors must be distinct positive m, ascending")
        if any(e < 1 for _, e in self.shift_factors):
            raise ValueError("shift multiplicities must be positive")

    def denominator_expanded(self) -> Poly:
        den = Poly.constant(Fraction(2) ** self.two_exponent)
        for m, e in self.shift_factors:
            den = den * (Poly.shift(m) ** e)
        return den * self.residual

    def evaluate(self, nu: Rational | int) -> Rational:
        """Exact value at nu; raises PoleError at a denominator root."""
        nu = Fraction(nu)
        den = Fraction(2) ** self.two_exponent
        for m, e in self.shift_factors:
            den *= (nu + m) ** e
        den *= self.residual.evaluate(nu)
        if den == 0:
            raise PoleError(nu)
        return self.numerator.evaluate(nu) / den

    def evaluate_float(self, nu: float) -> float:
        den = 2.0 ** self.two_exponent
        for m, e in self.shift_factors:
            den *= (nu + m) ** e
        den *= self.residual.evaluate_float(nu)
        if den == 0.0:
            raise PoleError(Fraction(nu))
        return self.numerator.evaluate_float(nu) / den

    def to_json_dict(self) -> dict:
        """JSON form: coefficients as decimal strings, shifts as [m, e] pairs."""
        return {
            "numerator": [str(c) for c in self.numerator.int_coeffs()],
            "two_exponent": self.two_exponent,
            "shift_factors": [[m, e] for m, e in self.shift_factors],
            "residual": [str(c) for c in self.residual.int_coeffs()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "FactoredRationalFn":
        return cls(
            numerator=Poly(tuple(int(s) for s in d["numerator"])),
            two_exponent=int(d["two_exponent"]),
            shift_factors=tuple((int(m), int(e)) for m, e in d["shift_factors"]),
            residual=Poly(tuple(int(s) for s in d["residual"])),
        )

    def _den_parts_text(self) -> list[str]:
        parts: list[str] = []
        if self.two_exponent == 1:
            parts.append("2")
        elif self.two_exponent > 1:
            parts.append(f"2^{self.two_exponent}")
        for m, e in self.shift_factors:
            base = f"(v+{m})"
            parts.append(base if e == 1 else f"{base}^{e}")
        if self.residual != Poly.one():
            parts.append(f"({poly_text(self.residual)})")
        return parts

    def to_text(self) -> str:
        """Plain text, e.g. '1 / (2^2 (v+1))'."""
        num = poly_text(self.numerator)
        if self.numerator.degree >= 1:
            num = f"({num})"
        parts = self._den_parts_text()
        if not parts:
            return num
        return f"{num} / ({' '.join(parts)})"

    def to_latex(self) -> str:
        """LaTeX, e.g. '\\frac{1}{2^{4}(\\nu+1)^{2}(\\nu+2)}'."""
        num = poly_latex(self.numerator)
        parts: list[str] = []
        if self.two_exponent == 1:
            parts.append("2")
        elif self.two_exponent > 1:
            parts.append(f"2^{{{self.two_exponent}}}")
        for m, e in self.shift_factors:
            base = f"(\\nu+{m})"
            parts.append(base if e == 1 else f"{base}^{{{e}}}")
        if self.residual != Poly.one():
            parts.append(f"({poly_latex(self.residual)})")
        if not parts:
            return num
        return f"\\frac{{{num}}}{{{''.join(parts)}}}"
