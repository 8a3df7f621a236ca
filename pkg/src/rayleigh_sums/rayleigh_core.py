"""Closed forms for sigma(p, nu) = sum_k xi_{nu,k}**(-2p) over the positive
zeros xi_{nu,k} of the Bessel function J_nu.

Two exact ingredients combine here. First, at any zero xi of J_nu the ratio
J_{nu+p}(xi)/J_{nu+1}(xi) expands as a polynomial in 2/xi,

    sum_{q=0}^{q_M} (-1)^q [(p-1)-q]! / ([(p-1)-2q]! q!)
                    * prod_{i=q+1}^{p-q-1}(nu+i) * (2/xi)**((p-1)-2q),

with q_M = (p-1)/2 for odd p and (p-2)/2 for even p. Second, summing the
weighted ratios over all zeros ties a linear combination of the sigma(p-q)
to a Gamma-function constant:

    sum_{q=0}^{q_M} (-1)^q 4**(-q) c_q(nu) sigma(p-q, nu)
        = 4**(-p) / prod_{i=1}^{p}(nu+i),
    c_q(nu) = [(p-1)-q]! / ([(p-1)-2q]! q!) * prod_{i=q+1}^{p-q-1}(nu+i).

Each new p introduces exactly one new unknown, so the system is triangular
and solves iteratively; every sigma(p, nu) comes out as a ratio of integer
polynomials in nu whose denominator factors as 2**a * prod (nu+m)**e_m.

The solver works on raw integer coefficient lists (exactness is unaffected,
Python ints are arbitrary precision) and converts to the Poly-based types at
the boundary; profiling showed Fraction normalization dominating otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_algebra import FactoredRationalFn, Poly, Rational

# ---------------------------------------------------------------------------
# integer coefficient-list helpers (dense, trailing nonzero, [] == zero)


def _istrip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _iadd(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return _istrip([
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ])


def _imul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _istrip(out)


def _iscale(a: list[int], c: int) -> list[int]:
    return _istrip([c * x for x in a])


def _isyndiv(a: list[int], m: int) -> list[int] | None:
    """Quotient of a by (nu + m) if the division is exact, else None."""
    q = [0] * (len(a) - 1)
    rem = a[-1]
    for i in range(len(a) - 2, -1, -1):
        q[i] = rem
        rem = a[i] - m * rem
    if rem != 0:
        return None
    return _istrip(q)


def _igamma_ratio(upper: int, lower: int) -> list[int]:
    """prod_{i=lower}^{upper-1}(nu+i) as an integer coefficient list."""
    out = [1]
    for i in range(lower, upper):
        out = _imul(out, [i, 1])
    return out


# ---------------------------------------------------------------------------
# ratio expansion


def q_max(p: int) -> int:
    """Largest q in the ratio expansion: (p-1)/2 for odd p, (p-2)/2 for even."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return (p - 1) // 2 if p % 2 == 1 else (p - 2) // 2


def gamma_ratio_poly(upper_shift: int, lower_shift: int) -> Poly:
    """Gamma(nu+upper_shift)/Gamma(nu+lower_shift) as the exact polynomial
    prod_{i=lower_shift}^{upper_shift-1}(nu+i); the empty product is 1."""
    if lower_shift < 0 or upper_shift < lower_shift:
        raise ValueError("not a polynomial: need upper_shift >= lower_shift >= 0")
    out = Poly.one()
    for i in range(lower_shift, upper_shift):
        out = out * Poly.shift(i)
    return out


def ratio_coefficient(p: int, q: int) -> Poly:
    """Coefficient of (2/xi)**((p-1)-2q) in the ratio expansion, sign included."""
    if not 0 <= q <= q_max(p):
        raise ValueError(f"q={q} out of range 0..{q_max(p)} for p={p}")
    c = (-1) ** q * math.comb((p - 1) - q, q)
    return gamma_ratio_poly(p - q, q + 1).scale(c)


@dataclass(frozen=True)
class RatioExpansion:
    """J_{nu+p}(xi)/J_{nu+1}(xi) at a zero xi of J_nu, as
    sum over terms (q, coeff, power) of coeff(nu) * (2/xi)**power."""

    p: int
    terms: tuple[tuple[int, Poly, int], ...]

    def evaluate_float(self, nu: float, xi: float) -> float:
        u = 2.0 / xi
        return math.fsum(
            coeff.evaluate_float(nu) * u**power for _, coeff, power in self.terms
        )

    def u_coefficients(self) -> tuple[Poly, ...]:
        """Polynomial in u = 1/xi: entry j is the nu-polynomial at u**j."""
        out = [Poly.zero()] * self.p
        for _, coeff, power in self.terms:
            out[power] = coeff.scale(2**power)
        while out and out[-1].is_zero:
            out.pop()
        return tuple(out)


def build_ratio_expansion(p: int) -> RatioExpansion:
    if p < 1:
        raise ValueError("p must be >= 1")
    terms = tuple(
        (q, ratio_coefficient(p, q), (p - 1) - 2 * q) for q in range(q_max(p) + 1)
    )
    return RatioExpansion(p=p, terms=terms)


def ratio_by_recurrence(p: int) -> tuple[Poly, ...]:
    """Independent route to the same ratio: iterate the three-term recurrence
    J_{nu+n+1}(xi) = (2(nu+n)/xi) J_{nu+n}(xi) - J_{nu+n-1}(xi) on ratio
    chains started from r_0 = J_nu/J_{nu+1} = 0 (xi is a zero of J_nu) and
    r_1 = 1. Returns the u-coefficient list matching u_coefficients()."""
    if p < 1:
        raise ValueError("p must be >= 1")
    rprev: list[Poly] = []
    rcur: list[Poly] = [Poly.one()]
    for n in range(1, p):
        two_nu_n = Poly((2 * n, 2))
        shifted = [Poly.zero()] + [c * two_nu_n for c in rcur]
        ln = max(len(shifted), len(rprev))
        nxt = [
            (shifted[i] if i < len(shifted) else Poly.zero())
            - (rprev[i] if i < len(rprev) else Poly.zero())
            for i in range(ln)
        ]
        while nxt and nxt[-1].is_zero:
            nxt.pop()
        rprev, rcur = rcur, nxt
    return tuple(rcur)


# ---------------------------------------------------------------------------
# triangular solve


@dataclass
class SigmaTable:
    """Map p -> closed form of sigma(p, nu), extended on demand.

    Keys stay contiguous 1..p_max because derive_sigma fills every gap it
    needs. Entries, once written, are immutable values safe to share."""

    entries: dict[int, FactoredRationalFn] = field(default_factory=dict)

    def __contains__(self, p: int) -> bool:
        return p in self.entries

    def __getitem__(self, p: int) -> FactoredRationalFn:
        return self.entries[p]

    @property
    def p_max(self) -> int:
        return len(self.entries)


def _entry_parts(f: FactoredRationalFn) -> tuple[list[int], int, dict[int, int]]:
    if f.residual != Poly.one():
        raise ValueError("table entry not in solver normal form")
    return list(f.numerator.int_coeffs()), f.two_exponent, dict(f.shift_factors)


def derive_sigma(table: SigmaTable, p: int) -> FactoredRationalFn:
    """Solve the triangular system up through p and return sigma(p, nu).

    Each step isolates the newest unknown:

        sigma(p) = [ 4**(-p) / prod_{i=1}^{p}(nu+i)
                     - sum_{q=1}^{q_M} (-1)^q 4**(-q) c_q(nu) sigma(p-q) ]
                   / prod_{i=1}^{p-1}(nu+i)

    carried out over a common factored denominator so that the only
    divisions are exact: synthetic division by the shifts (nu+m) and
    cancellation of a shared power of two. The result is fully reduced with
    an integer, content-1, positive-leading numerator; if that normal form
    ever failed to hold the function would raise rather than return.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    for j in range(1, p + 1):
        if j in table:
            continue
        # terms of the identity moved to the right-hand side, each written
        # as (numerator, two_exponent, shift multiplicities)
        terms: list[tuple[list[int], int, dict[int, int]]] = []
        terms.append(([1], 2 * j, {i: 1 for i in range(1, j + 1)}))
        for q in range(1, q_max(j) + 1):
            num_q, a_q, sh_q = _entry_parts(table[j - q])
            c = math.comb((j - 1) - q, q) * (-1) ** (q + 1)
            cpoly = _iscale(_igamma_ratio(j - q, q + 1), c)
            terms.append((_imul(cpoly, num_q), a_q + 2 * q, sh_q))
        # least common denominator: max exponent per factor
        two = max(t[1] for t in terms)
        sh: dict[int, int] = {}
        for _, _, tsh in terms:
            for m, e in tsh.items():
                sh[m] = max(sh.get(m, 0), e)
        num: list[int] = []
        for tnum, ta, tsh in terms:
            mult = [2 ** (two - ta)]
            for m, e in sorted(sh.items()):
                for _ in range(e - tsh.get(m, 0)):
                    mult = _imul(mult, [m, 1])
            num = _iadd(num, _imul(tnum, mult))
        # divide by prod_{i=1}^{j-1}(nu+i): push the factors into the denominator
        for i in range(1, j):
            sh[i] = sh.get(i, 0) + 1
        # reduce shifts that divide the numerator exactly
        for m in sorted(sh):
            while sh[m] > 0:
                qt = _isyndiv(num, m)
                if qt is None:
                    break
                num = qt
                sh[m] -= 1
        sh = {m: e for m, e in sh.items() if e > 0}
        # cancel the shared power of two; leading coefficient must be positive
        if not num or num[-1] < 0:
            raise ArithmeticError(f"normalization failed at p={j}: bad numerator")
        g = 0
        for c in num:
            g = math.gcd(g, c)
        k = min((g & -g).bit_length() - 1, two)
        if k:
            num = [c >> k for c in num]
            two -= k
        table.entries[j] = FactoredRationalFn(
            numerator=Poly(tuple(num)),
            two_exponent=two,
            shift_factors=tuple(sorted(sh.items())),
        )
    return table[p]


def eval_sigma_exact(f: FactoredRationalFn, nu: Rational | int) -> Rational:
    """Exact rational value of a derived closed form at nu (PoleError at poles)."""
    return f.evaluate(nu)


def sums_identity_defect(table: SigmaTable, p: int) -> Poly:
    """Back-substitution check: recombine the identity that defines sigma(p)
    with generic polynomial arithmetic, denominators fully expanded, and
    return the cleared-denominator difference (the zero polynomial iff the
    derived table satisfies the identity exactly).

    Multiplying the identity by 4**p * prod_{i<=p}(nu+i) * prod_q den_q turns
    both sides into integer polynomials:

        sum_q 4**(p-q) c~_q(nu) num_q(nu) R(nu) prod_{q'!=q} den_{q'}(nu)
            = prod_q den_q(nu),

    with c~_q the signed expansion coefficient, num_q/den_q the stored
    sigma(p-q), and R = prod_{i=1}^{p}(nu+i).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    derive_sigma(table, p)
    qm = q_max(p)
    nums: list[list[int]] = []
    dens: list[list[int]] = []
    for q in range(qm + 1):
        num_q, a_q, sh_q = _entry_parts(table[p - q])
        den = [2**a_q]
        for m, e in sorted(sh_q.items()):
            for _ in range(e):
                den = _imul(den, [m, 1])
        c = (-1) ** q * math.comb((p - 1) - q, q)
        cpoly = _iscale(_igamma_ratio(p - q, q + 1), c * 4 ** (p - q))
        nums.append(_imul(cpoly, num_q))
        dens.append(den)
    # prefix/suffix products give prod_{q' != q} den_{q'}
    n = len(dens)
    pre = [[1]] * (n + 1)
    for i in range(n):
        pre[i + 1] = _imul(pre[i], dens[i])
    suf = [[1]] * (n + 1)
    for i in range(n - 1, -1, -1):
        suf[i] = _imul(suf[i + 1], dens[i])
    rpoly = _igamma_ratio(p + 1, 1)
    lhs: list[int] = []
    for q in range(n):
        others = _imul(pre[q], suf[q + 1])
        lhs = _iadd(lhs, _imul(_imul(nums[q], rpoly), others))
    defect = _iadd(lhs, _iscale(pre[n], -1))
    return Poly(tuple(defect))
