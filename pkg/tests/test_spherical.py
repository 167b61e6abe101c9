"""Unit tests for the spherical maps and the coset-enumeration oracle."""

from fractions import Fraction
from itertools import product

import pytest

from heckeseries.algebra import PrimeLaurent, XPoly, p
from heckeseries.errors import (
    EnumerationTooLarge,
    IndexOutOfRange,
    UnsupportedRank,
)
from heckeseries.golden import golden_decomposition, golden_order
from heckeseries.spherical import (
    coset_count,
    omega_cosets,
    omega_hl,
    omega_pi,
    phi,
    sm,
    sp_image_pbracket,
    sp_image_Ti,
    sp_image_Tp,
)
from heckeseries.symmetric import msym, to_msym


class TestPhi:
    def test_base_case(self):
        assert phi(0) == 1

    def test_phi1(self):
        assert phi(1) == p - 1

    def test_phi2(self):
        assert phi(2) == PrimeLaurent({3: 1, 2: -1, 1: -1, 0: 1})

    def test_negative_raises(self):
        with pytest.raises(IndexOutOfRange):
            phi(-1)


def _rank_mod(matrix, q):
    """Row-echelon rank of a small integer matrix over the field with q elements."""
    rows = [list(r) for r in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(rank, len(rows)) if rows[i][col] % q), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(v * inv) % q for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _count_symmetric_ranks(a, q):
    """Brute-force rank distribution of symmetric a x a matrices over F_q."""
    positions = [(i, j) for i in range(a) for j in range(i, a)]
    counts = [0] * (a + 1)
    for values in product(range(q), repeat=len(positions)):
        m = [[0] * a for _ in range(a)]
        for (i, j), v in zip(positions, values):
            m[i][j] = m[j][i] = v
        counts[_rank_mod(m, q)] += 1
    return counts


class TestSm:
    def test_sm_1_3(self):
        assert sm(1, 3) == (p - 1) * PrimeLaurent({2: 1, 1: 1, 0: 1})

    def test_rank_zero(self):
        for a in range(4):
            assert sm(0, a) == 1

    def test_sm_1_2(self):
        assert sm(1, 2) == p**2 - 1

    def test_against_brute_force_count(self):
        for q in (2, 3, 5):
            for a in (1, 2, 3):
                counts = _count_symmetric_ranks(a, q)
                for r in range(min(a, 2) + 1):
                    assert sm(r, a).evaluate(q) == counts[r], (r, a, q)

    def test_unsupported_rank(self):
        with pytest.raises(UnsupportedRank):
            sm(3, 3)

    def test_bad_arguments(self):
        with pytest.raises(IndexOutOfRange):
            sm(2, 1)


class TestOmegaClosedForm:
    def test_trivial_signature(self):
        assert omega_hl((0, 0, 0), 3) == XPoly.constant(4, 1)

    def test_signature_210(self):
        expected = {
            (1, 1, 1): PrimeLaurent({-4: 2, -5: -1, -6: -1}),
            (2, 1, 0): PrimeLaurent.p_power(-4),
        }
        assert to_msym(omega_hl((2, 1, 0), 3)) == expected

    def test_signature_110(self):
        assert omega_hl((1, 1, 0), 3) == msym((1, 1, 0), 3) * PrimeLaurent.p_power(-3)

    def test_full_golden_table(self):
        for lam in golden_order():
            assert to_msym(omega_hl(lam, 3)) == golden_decomposition(lam), lam

    def test_low_rank(self):
        assert omega_hl((1,), 1) == XPoly.monomial(2, (0, 1), PrimeLaurent.p_power(-1))
        assert omega_hl((1, 1), 2) == XPoly.monomial(
            3, (0, 1, 1), PrimeLaurent.p_power(-3)
        )


class TestOmegaPi:
    def test_values(self):
        for i in (1, 2, 3):
            sig = (1,) * i + (0,) * (3 - i)
            expected = msym(sig, 3) * PrimeLaurent.p_power(-i * (i + 1) // 2)
            assert omega_pi(i, 3) == expected

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            omega_pi(0, 3)
        with pytest.raises(IndexOutOfRange):
            omega_pi(4, 3)


class TestCosetOracle:
    def test_determinant_two(self):
        expected = msym((1, 0, 0), 3) * Fraction(1, 2)
        assert omega_cosets((1, 0, 0), 3, 2) == expected

    def test_identity_coset(self):
        for q in (2, 3, 5):
            assert omega_cosets((0, 0, 0), 3, q) == XPoly.constant(4, 1)

    def test_determinant_nine_filtered(self):
        expected = msym((1, 1, 0), 3) * Fraction(1, 27)
        assert omega_cosets((1, 1, 0), 3, 3) == expected

    def test_coset_counts(self):
        for q in (2, 3, 5):
            assert coset_count((1, 0, 0), 3, q) == q * q + q + 1

    def test_scalar_part_is_stripped(self):
        # (k+1, k+1, k+1) differs from (1, 1, 1) only by the scalar prefactor
        a = omega_cosets((2, 2, 2), 3, 2)
        b = omega_cosets((1, 1, 1), 3, 2)
        assert len(a.terms) == len(b.terms) == 1

    def test_matches_closed_form(self):
        for lam in ((2, 1, 0), (2, 2, 1), (3, 1, 0)):
            for q in (2, 3):
                assert omega_hl(lam, 3).specialize_prime(q) == omega_cosets(lam, 3, q)

    def test_enumeration_guard(self):
        with pytest.raises(EnumerationTooLarge):
            omega_cosets((9, 0, 0), 3, 5)


class TestSymplecticImages:
    def test_tp_images(self):
        x = lambda nv, i: XPoly.variable(nv, i)
        assert sp_image_Tp(1) == x(2, 0) * (1 + x(2, 1))
        assert sp_image_Tp(2) == x(3, 0) * (1 + x(3, 1)) * (1 + x(3, 2))
        assert sp_image_Tp(3) == x(4, 0) * (1 + x(4, 1)) * (1 + x(4, 2)) * (1 + x(4, 3))

    def test_t3_image(self):
        assert sp_image_Ti(3, 3) == XPoly.monomial(
            4, (2, 1, 1, 1), PrimeLaurent.p_power(-6)
        )

    def test_t2_image(self):
        x0sq = XPoly.monomial(4, (2, 0, 0, 0))
        expected = x0sq * (
            msym((1, 1, 0), 3) * PrimeLaurent.p_power(-3)
            + msym((2, 1, 1), 3) * PrimeLaurent.p_power(-3)
            + msym((1, 1, 1), 3) * (PrimeLaurent.p_power(-6) * sm(1, 3))
        )
        assert sp_image_Ti(2, 3) == expected

    def test_pbracket_images(self):
        for n in (1, 2, 3):
            exps = (2,) + (1,) * n
            expected = XPoly.monomial(
                n + 1, exps, PrimeLaurent.p_power(-n * (n + 1) // 2)
            )
            assert sp_image_pbracket(n) == expected

    def test_pbracket_equals_last_ti(self):
        assert sp_image_pbracket(3) == sp_image_Ti(3, 3)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            sp_image_Ti(0, 3)
        with pytest.raises(IndexOutOfRange):
            sp_image_Ti(4, 3)
