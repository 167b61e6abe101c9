"""Frozen reference table for the 28 values of omega(t(1, p^a, p^b)).

Each entry maps a signature (b, a, 0) to its monomial-basis decomposition,
encoded as (signature, numerator coefficients descending from the top
power of p, denominator p-exponent).
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import PrimeLaurent

# (sig, numerator coeffs highest power first, denominator exponent)
GOLDEN_OMEGA = {
    (0, 0, 0): [((0, 0, 0), (1,), 0)],
    (1, 0, 0): [((1, 0, 0), (1,), 1)],
    (1, 1, 0): [((1, 1, 0), (1,), 3)],
    (2, 0, 0): [((1, 1, 0), (1, -1), 3), ((2, 0, 0), (1,), 2)],
    (2, 1, 0): [((1, 1, 1), (2, -1, -1), 6), ((2, 1, 0), (1,), 4)],
    (2, 2, 0): [((2, 1, 1), (1, -1), 7), ((2, 2, 0), (1,), 6)],
    (3, 0, 0): [
        ((1, 1, 1), (1, -2, 1), 5),
        ((2, 1, 0), (1, -1, 0), 5),
        ((3, 0, 0), (1,), 3),
    ],
    (3, 1, 0): [
        ((2, 1, 1), (2, -2), 6),
        ((2, 2, 0), (1, -1), 6),
        ((3, 1, 0), (1,), 5),
    ],
    (3, 2, 0): [
        ((2, 2, 1), (2, -2), 8),
        ((3, 1, 1), (1, -1), 8),
        ((3, 2, 0), (1,), 7),
    ],
    (3, 3, 0): [
        ((2, 2, 2), (1, -2, 1), 11),
        ((3, 2, 1), (1, -1, 0), 11),
        ((3, 3, 0), (1,), 9),
    ],
    (4, 0, 0): [
        ((2, 1, 1), (1, -2, 1), 6),
        ((2, 2, 0), (1, -1, 0), 6),
        ((3, 1, 0), (1, -1, 0), 6),
        ((4, 0, 0), (1,), 4),
    ],
    (4, 1, 0): [
        ((2, 2, 1), (2, -3, 1), 8),
        ((3, 1, 1), (2, -2, 0), 8),
        ((3, 2, 0), (1, -1, 0), 8),
        ((4, 1, 0), (1,), 6),
    ],
    (4, 2, 0): [
        ((2, 2, 2), (3, -4, 2, -1), 11),
        ((3, 2, 1), (2, -3, 1, 0), 11),
        ((3, 3, 0), (1, -1, 0, 0), 11),
        ((4, 1, 1), (1, -1, 0, 0), 11),
        ((4, 2, 0), (1,), 8),
    ],
    (4, 3, 0): [
        ((3, 2, 2), (2, -3, 1), 12),
        ((3, 3, 1), (2, -2, 0), 12),
        ((4, 2, 1), (1, -1, 0), 12),
        ((4, 3, 0), (1,), 10),
    ],
    (4, 4, 0): [
        ((3, 3, 2), (1, -2, 1), 14),
        ((4, 2, 2), (1, -1, 0), 14),
        ((4, 3, 1), (1, -1, 0), 14),
        ((4, 4, 0), (1,), 12),
    ],
    (5, 0, 0): [
        ((2, 2, 1), (1, -2, 1), 7),
        ((3, 1, 1), (1, -2, 1), 7),
        ((3, 2, 0), (1, -1, 0), 7),
        ((4, 1, 0), (1, -1, 0), 7),
        ((5, 0, 0), (1,), 5),
    ],
    (5, 1, 0): [
        ((2, 2, 2), (2, -4, 2), 9),
        ((3, 2, 1), (2, -3, 1), 9),
        ((3, 3, 0), (1, -1, 0), 9),
        ((4, 1, 1), (2, -2, 0), 9),
        ((4, 2, 0), (1, -1, 0), 9),
        ((5, 1, 0), (1,), 7),
    ],
    (5, 2, 0): [
        ((3, 2, 2), (3, -5, 3, -1), 12),
        ((3, 3, 1), (2, -4, 2, 0), 12),
        ((4, 2, 1), (2, -3, 1, 0), 12),
        ((4, 3, 0), (1, -1, 0, 0), 12),
        ((5, 1, 1), (1, -1, 0, 0), 12),
        ((5, 2, 0), (1,), 9),
    ],
    (5, 3, 0): [
        ((3, 3, 2), (3, -5, 3, -1), 14),
        ((4, 2, 2), (2, -4, 2, 0), 14),
        ((4, 3, 1), (2, -3, 1, 0), 14),
        ((4, 4, 0), (1, -1, 0, 0), 14),
        ((5, 2, 1), (1, -1, 0, 0), 14),
        ((5, 3, 0), (1,), 11),
    ],
    (5, 4, 0): [
        ((3, 3, 3), (2, -4, 2), 15),
        ((4, 3, 2), (2, -3, 1), 15),
        ((4, 4, 1), (2, -2, 0), 15),
        ((5, 2, 2), (1, -1, 0), 15),
        ((5, 3, 1), (1, -1, 0), 15),
        ((5, 4, 0), (1,), 13),
    ],
    (5, 5, 0): [
        ((4, 3, 3), (1, -2, 1), 17),
        ((4, 4, 2), (1, -2, 1), 17),
        ((5, 3, 2), (1, -1, 0), 17),
        ((5, 4, 1), (1, -1, 0), 17),
        ((5, 5, 0), (1,), 15),
    ],
    (6, 0, 0): [
        ((2, 2, 2), (1, -2, 1), 8),
        ((3, 2, 1), (1, -2, 1), 8),
        ((3, 3, 0), (1, -1, 0), 8),
        ((4, 1, 1), (1, -2, 1), 8),
        ((4, 2, 0), (1, -1, 0), 8),
        ((5, 1, 0), (1, -1, 0), 8),
        ((6, 0, 0), (1,), 6),
    ],
    (6, 1, 0): [
        ((3, 2, 2), (2, -4, 2), 10),
        ((3, 3, 1), (2, -3, 1), 10),
        ((4, 2, 1), (2, -3, 1), 10),
        ((4, 3, 0), (1, -1, 0), 10),
        ((5, 1, 1), (2, -2, 0), 10),
        ((5, 2, 0), (1, -1, 0), 10),
        ((6, 1, 0), (1,), 8),
    ],
    (6, 2, 0): [
        ((3, 3, 2), (3, -6, 4, -1), 13),
        ((4, 2, 2), (3, -5, 3, -1), 13),
        ((4, 3, 1), (2, -4, 2, 0), 13),
        ((4, 4, 0), (1, -1, 0, 0), 13),
        ((5, 2, 1), (2, -3, 1, 0), 13),
        ((5, 3, 0), (1, -1, 0, 0), 13),
        ((6, 1, 1), (1, -1, 0, 0), 13),
        ((6, 2, 0), (1,), 10),
    ],
    (6, 3, 0): [
        ((3, 3, 3), (4, -7, 5, -2), 15),
        ((4, 3, 2), (3, -6, 4, -1), 15),
        ((4, 4, 1), (2, -4, 2, 0), 15),
        ((5, 2, 2), (2, -4, 2, 0), 15),
        ((5, 3, 1), (2, -3, 1, 0), 15),
        ((5, 4, 0), (1, -1, 0, 0), 15),
        ((6, 2, 1), (1, -1, 0, 0), 15),
        ((6, 3, 0), (1,), 12),
    ],
    (6, 4, 0): [
        ((4, 3, 3), (3, -6, 4, -1), 17),
        ((4, 4, 2), (3, -5, 3, -1), 17),
        ((5, 3, 2), (2, -4, 2, 0), 17),
        ((5, 4, 1), (2, -3, 1, 0), 17),
        ((5, 5, 0), (1, -1, 0, 0), 17),
        ((6, 2, 2), (1, -1, 0, 0), 17),
        ((6, 3, 1), (1, -1, 0, 0), 17),
        ((6, 4, 0), (1,), 14),
    ],
    (6, 5, 0): [
        ((4, 4, 3), (2, -4, 2), 18),
        ((5, 3, 3), (2, -3, 1), 18),
        ((5, 4, 2), (2, -3, 1), 18),
        ((5, 5, 1), (2, -2, 0), 18),
        ((6, 3, 2), (1, -1, 0), 18),
        ((6, 4, 1), (1, -1, 0), 18),
        ((6, 5, 0), (1,), 16),
    ],
    (6, 6, 0): [
        ((4, 4, 4), (1, -2, 1), 20),
        ((5, 4, 3), (1, -2, 1), 20),
        ((5, 5, 2), (1, -2, 1), 20),
        ((6, 3, 3), (1, -1, 0), 20),
        ((6, 4, 2), (1, -1, 0), 20),
        ((6, 5, 1), (1, -1, 0), 20),
        ((6, 6, 0), (1,), 18),
    ],
}


def golden_decomposition(lam) -> dict:
    """{signature: PrimeLaurent} decomposition of one table entry."""
    out = {}
    for sig, coeffs, den in GOLDEN_OMEGA[tuple(lam)]:
        deg = len(coeffs) - 1
        out[sig] = PrimeLaurent(
            {deg - i - den: Fraction(c) for i, c in enumerate(coeffs) if c}
        )
    return out


def golden_order():
    """Table entries in the source's order: by larger exponent, then smaller."""
    return sorted(GOLDEN_OMEGA, key=lambda lam: (lam[0], lam[1]))
