"""Unit tests for the exact arithmetic layer."""

import random
from fractions import Fraction

import pytest

from heckeseries.algebra import PrimeLaurent, PrimeRat, VSeries, XPoly, p
from heckeseries.errors import (
    DivisionByZero,
    NonUnitConstantTerm,
    NotDivisible,
    NotLaurent,
    UnassignedVariable,
    VarMismatch,
)


def pl(terms):
    return PrimeLaurent(terms)


class TestPrimeLaurent:
    def test_telescoping_product(self):
        assert (p - 1) * pl({2: 1, 1: 1, 0: 1}) == pl({3: 1, 0: -1})

    def test_additive_inverse_is_empty(self):
        a = p + 1
        assert (a + (-1) * a).terms == {}

    def test_phi3_expansion(self):
        prod = (p - 1) * (p**2 - 1) * (p**3 - 1)
        expected = pl({6: 1, 5: -1, 4: -1, 2: 1, 1: 1, 0: -1})
        assert prod == expected

    def test_div_exact_geometric(self):
        assert (p**3 - 1).div_exact(p - 1) == pl({2: 1, 1: 1, 0: 1})

    def test_div_exact_phi_quotient(self):
        phi1 = p - 1
        phi2 = (p - 1) * (p**2 - 1)
        phi3 = phi2 * (p**3 - 1)
        assert phi3.div_exact(phi1 * phi2) == pl({2: 1, 1: 1, 0: 1})

    def test_div_exact_remainder_raises(self):
        with pytest.raises(NotDivisible):
            (p**2 + 1).div_exact(p - 1)

    def test_div_by_zero_raises(self):
        with pytest.raises(DivisionByZero):
            (p - 1).div_exact(PrimeLaurent())

    def test_negative_exponents(self):
        a = PrimeLaurent.p_power(-3)
        assert a * PrimeLaurent.p_power(3) == 1
        assert a.evaluate(2) == Fraction(1, 8)

    def test_evaluate(self):
        assert (p**2 - p - 1).evaluate(3) == 5

    def test_pow(self):
        assert (p - 1) ** 3 == pl({3: 1, 2: -3, 1: 3, 0: -1})
        assert (p - 1) ** 0 == 1

    def test_json_round_trip(self):
        a = pl({3: Fraction(2, 3), -2: -5, 0: 1})
        assert PrimeLaurent.from_json(a.to_json()) == a

    def test_div_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(30):
            a = pl({rng.randint(-4, 4): rng.randint(-6, 6) for _ in range(3)})
            b = pl({rng.randint(-4, 4): rng.randint(-6, 6) for _ in range(3)})
            if b.is_zero():
                continue
            assert (a * b).div_exact(b) == a


class TestPrimeRat:
    def test_inverse_pair(self):
        r = PrimeRat(PrimeLaurent.const(1), p - 1)
        assert r * PrimeRat(p - 1) == PrimeRat(PrimeLaurent.const(1))

    def test_common_denominator(self):
        s = PrimeRat(PrimeLaurent.const(1), p - 1) + PrimeRat(
            PrimeLaurent.const(1), p + 1
        )
        assert s == PrimeRat(2 * p, p**2 - 1)

    def test_multiplicity_normalization_value(self):
        # (1-t)(1-t^2)/(1-t)^2 at t = 1/p collapses to (p+1)/p
        t = PrimeLaurent.p_power(-1)
        one = PrimeLaurent.const(1)
        r = PrimeRat((one - t) * (one - t * t), (one - t) * (one - t))
        assert r.to_laurent() == pl({0: 1, -1: 1})

    def test_to_laurent_raises(self):
        with pytest.raises(NotLaurent):
            PrimeRat(PrimeLaurent.const(1), p - 1).to_laurent()

    def test_zero_denominator_raises(self):
        with pytest.raises(DivisionByZero):
            PrimeRat(p, PrimeLaurent())

    def test_canonical_reduction(self):
        # (p^2-1)/(p-1) reduces to the polynomial p+1
        r = PrimeRat(p**2 - 1, p - 1)
        assert r.den.is_one() and r.num == p + 1


def variables(nv):
    return [XPoly.variable(nv, i) for i in range(nv)]


class TestXPoly:
    def test_difference_of_squares(self):
        _, x1 = variables(2)
        one = XPoly.constant(2, 1)
        assert (one + x1) * (one - x1) == one - x1 * x1

    def test_product_of_linear_factors(self):
        x0, x1, x2, x3 = variables(4)
        one = XPoly.constant(4, 1)
        prod = x0 * (one + x1) * (one + x2) * (one + x3)
        expected = XPoly(
            4,
            {
                (1, 0, 0, 0): 1,
                (1, 1, 0, 0): 1,
                (1, 0, 1, 0): 1,
                (1, 0, 0, 1): 1,
                (1, 1, 1, 0): 1,
                (1, 1, 0, 1): 1,
                (1, 0, 1, 1): 1,
                (1, 1, 1, 1): 1,
            },
        )
        assert prod == expected

    def test_additive_identity_random(self):
        rng = random.Random(11)
        for _ in range(10):
            a = XPoly(
                3,
                {
                    (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5)
                    for _ in range(4)
                },
            )
            assert a + XPoly(3) == a

    def test_div_exact(self):
        _, x1, x2 = variables(3)
        assert (x1 * x1 - x2 * x2).div_exact(x1 - x2) == x1 + x2

    def test_div_exact_self(self):
        x0, x1, x2, x3 = variables(4)
        vdm = (x1 - x2) * (x1 - x3) * (x2 - x3)
        assert vdm.div_exact(vdm) == XPoly.constant(4, 1)

    def test_div_exact_raises(self):
        _, x1, x2 = variables(3)
        with pytest.raises(NotDivisible):
            (x1 * x1 + x2).div_exact(x1 - x2)

    def test_var_mismatch_raises(self):
        with pytest.raises(VarMismatch):
            XPoly.variable(2, 0) + XPoly.variable(3, 0)

    def test_substitute_degree_map(self):
        # sym_{1,1,0} at x_i -> p^i gives p^3 + p^4 + p^5
        a = XPoly(4, {(0, 1, 1, 0): 1, (0, 1, 0, 1): 1, (0, 0, 1, 1): 1})
        nu = {0: 1, 1: p, 2: p**2, 3: p**3}
        assert a.substitute(nu) == XPoly.constant(4, pl({3: 1, 4: 1, 5: 1}))

    def test_substitute_identity(self):
        a = XPoly(3, {(1, 2, 0): pl({-1: 1}), (0, 1, 1): 3})
        ident = {i: XPoly.variable(3, i) for i in range(3)}
        assert a.substitute(ident) == a

    def test_substitute_monomial(self):
        a = XPoly.monomial(4, (2, 1, 1, 1))
        nu = {0: 1, 1: p, 2: p**2, 3: p**3}
        assert a.substitute(nu) == XPoly.constant(4, PrimeLaurent.p_power(6))

    def test_substitute_unassigned_raises(self):
        a = XPoly.monomial(3, (0, 1, 1))
        with pytest.raises(UnassignedVariable):
            a.substitute({1: 1})

    def test_json_round_trip(self):
        a = XPoly(3, {(1, 0, 2): pl({-2: Fraction(1, 3)}), (0, 0, 0): -1})
        assert XPoly.from_json(a.to_json()) == a

    def test_ring_axioms_random(self):
        rng = random.Random(13)

        def rand():
            return XPoly(
                3,
                {
                    tuple(rng.randint(0, 2) for _ in range(3)): pl(
                        {rng.randint(-2, 2): rng.randint(-4, 4)}
                    )
                    for _ in range(3)
                },
            )

        for _ in range(10):
            a, b, c = rand(), rand(), rand()
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_canonical_form_idempotent(self):
        a = XPoly(2, {(1, 1): 2, (0, 0): 0})
        assert XPoly(2, a.terms) == a
        assert (0, 0) not in a.terms


class TestVSeries:
    def test_difference_of_squares(self):
        nv = 2
        x0v = VSeries.from_dict(4, nv, {1: XPoly.variable(nv, 0)})
        one = VSeries.one(4, nv)
        prod = (one + x0v) * (one - x0v)
        assert prod == VSeries.from_dict(
            4, nv, {0: XPoly.constant(nv, 1), 2: -XPoly.monomial(nv, (2, 0))}
        )

    def test_truncation_order_is_min(self):
        a = VSeries.one(3, 2)
        b = VSeries.one(5, 2)
        assert (a * b).order == 3

    def test_recip_geometric(self):
        nv = 2
        s = VSeries.one(3, nv) - VSeries.from_dict(3, nv, {1: XPoly.variable(nv, 0)})
        assert s.recip() == VSeries.from_dict(
            3, nv, {k: XPoly.monomial(nv, (k, 0)) for k in range(4)}
        )

    def test_recip_of_one(self):
        assert VSeries.one(5, 3).recip() == VSeries.one(5, 3)

    def test_recip_requires_unit(self):
        s = VSeries.from_dict(3, 2, {0: XPoly.constant(2, 2)})
        with pytest.raises(NonUnitConstantTerm):
            s.recip()

    def test_recip_times_self(self):
        nv = 3
        s = VSeries.from_dict(
            5,
            nv,
            {
                0: XPoly.constant(nv, 1),
                1: XPoly.monomial(nv, (1, 1, 0), p - 1),
                2: XPoly.monomial(nv, (0, 0, 2), pl({-1: 1})),
            },
        )
        assert s * s.recip() == VSeries.one(5, nv)

    def test_degree(self):
        s = VSeries.from_dict(6, 2, {0: XPoly.constant(2, 1), 4: XPoly.variable(2, 1)})
        assert s.degree() == 4
        assert VSeries.from_dict(3, 2, {}).degree() == -1

    def test_json_round_trip(self):
        s = VSeries.from_dict(
            2, 2, {0: XPoly.constant(2, 1), 2: XPoly.monomial(2, (1, 1), -1)}
        )
        assert VSeries.from_json(s.to_json()) == s
