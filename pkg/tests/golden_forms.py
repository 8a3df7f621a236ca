"""Frozen reference values used across the test modules.

The closed forms below are transcriptions of independently known printed
results (numerator coefficients ascending in nu, the power of two, and the
(m, multiplicity) shift factors of the denominator). The zeta coefficients
and the reference zeros are classical values; the sigma(9, 0) fraction and
first-zero digits were frozen from an independent high-precision evaluation
before the solver was written.
"""

from fractions import Fraction

from rayleigh_sums import FactoredRationalFn, Poly

# p -> (numerator coeffs ascending, two_exponent, shift_factors)
GOLDEN_SIGMA = {
    1: ((1,), 2, ((1, 1),)),
    2: ((1,), 4, ((1, 2), (2, 1))),
    3: ((1,), 5, ((1, 3), (2, 1), (3, 1))),
    6: ((473, 513, 181, 21), 11, ((1, 6), (2, 3), (3, 2), (4, 1), (5, 1), (6, 1))),
    7: (
        (1145, 1081, 329, 33),
        12,
        ((1, 7), (2, 3), (3, 2), (4, 1), (5, 1), (6, 1), (7, 1)),
    ),
    9: (
        (1893046, 3212847, 2217079, 798074, 158568, 16567, 715),
        17,
        ((1, 9), (2, 4), (3, 3), (4, 2), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1)),
    ),
}


def golden_frf(p: int) -> FactoredRationalFn:
    coeffs, two, shifts = GOLDEN_SIGMA[p]
    return FactoredRationalFn(
        numerator=Poly(coeffs), two_exponent=two, shift_factors=shifts
    )


SIGMA9_AT_0 = Fraction(946523, 6849130659840)

# zeta(2p) = coefficient * pi**(2p)
ZETA_COEFF = {
    1: Fraction(1, 6),
    2: Fraction(1, 90),
    6: Fraction(691, 3**6 * 5**3 * 7**2 * 11 * 13),
    7: Fraction(2, 3**6 * 5**2 * 7 * 11 * 13),
}

ZETA12_FACTORS = ((3, 6), (5, 3), (7, 2), (11, 1), (13, 1))
ZETA14_FACTORS = ((3, 6), (5, 2), (7, 1), (11, 1), (13, 1))

# first zeros of J_0, 16 significant digits
J0_ZEROS = (2.404825557695773, 5.520078110286311, 8.653727912911013)

# measured evaluation-noise floor for binary64 zero finding (see ledger)
ZERO_ABS_TOL = 5e-13
