import random

import pytest

from primdec.polyring import LEX, Polynomial, RingContext
from primdec.groebner import (
    Ideal,
    gb_ideal,
    ideal,
    ideal_contains,
    ideal_equal,
    is_member,
)
from primdec.idealops import (
    eliminate,
    exact_div,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    quotient,
    saturate,
    unit_ideal,
)
from primdec.monomial import (
    MonomialIdeal,
    from_polynomial_ideal,
    mono_intersect,
    mono_quotient_ideal,
    mono_saturate,
)

from conftest import random_monomial_ideal


def eq(I, J):
    return ideal_equal(I, J)


class TestSumProductPower:
    def test_sum(self, ring_xy, xy):
        x, y = xy
        assert eq(ideal_sum(ideal(ring_xy, x), ideal(ring_xy, y)),
                  ideal(ring_xy, x, y))

    def test_square(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x, y)
        assert eq(ideal_product(I, I), ideal(ring_xy, x**2, x * y, y**2))

    def test_power_zero_is_unit(self, ring_xy, xy):
        x, _ = xy
        assert eq(ideal_power(ideal(ring_xy, x), 0), unit_ideal(ring_xy))


class TestIntersect:
    def test_principal(self, ring_xy, xy):
        x, y = xy
        assert eq(intersect(ideal(ring_xy, x), ideal(ring_xy, y)),
                  ideal(ring_xy, x * y))

    def test_unit_neutral(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x**2 - y)
        assert eq(intersect(I, unit_ideal(ring_xy)), I)

    def test_example_a(self, ring_xy, xy):
        # (x) ∩ (x^2, x*y, y^2) = (x^2, x*y) by the monomial lcm oracle
        x, y = xy
        out = intersect(ideal(ring_xy, x), ideal(ring_xy, x**2, x * y, y**2))
        assert eq(out, ideal(ring_xy, x**2, x * y))

    def test_contained_in_both(self, ring_xyz):
        rng = random.Random(23)
        for _ in range(8):
            I = random_monomial_ideal(rng, 3, 4).to_ideal()
            J = random_monomial_ideal(rng, 3, 4).to_ideal()
            H = intersect(I, J)
            for g in H.generators:
                assert is_member(g, I) and is_member(g, J)


class TestQuotient:
    def test_monomial_example(self, ring_xy, xy):
        x, y = xy
        out = quotient(ideal(ring_xy, x**2, x * y), ideal(ring_xy, x))
        assert eq(out, ideal(ring_xy, x, y))

    def test_by_unit(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x**2 + y)
        assert eq(quotient(I, unit_ideal(ring_xy)), I)

    def test_monomial_rule(self, ring_xy, xy):
        x, y = xy
        assert eq(quotient(ideal(ring_xy, x * y), ideal(ring_xy, x)),
                  ideal(ring_xy, y))

    def test_g_times_quotient_inside(self, ring_xy, xy):
        x, y = xy
        rng = random.Random(5)
        for _ in range(6):
            I = random_monomial_ideal(rng, 2, 4).to_ideal()
            g = x + y
            Q = quotient(I, ideal(ring_xy, g))
            assert ideal_contains(I, ideal_product(Q, ideal(ring_xy, g)))


class TestSaturate:
    def test_one_step(self, ring_xy, xy):
        x, y = xy
        S, e = saturate(ideal(ring_xy, x**2 * y), ideal(ring_xy, y))
        assert eq(S, ideal(ring_xy, x**2))
        assert e == 1

    def test_already_saturated(self, ring_xy, xy):
        x, y = xy
        S, e = saturate(ideal(ring_xy, x), ideal(ring_xy, y))
        assert eq(S, ideal(ring_xy, x))
        assert e == 0

    def test_maximal_ideal(self, ring_xy, xy):
        x, y = xy
        S, e = saturate(ideal(ring_xy, x**2, x * y), ideal(ring_xy, x, y))
        assert eq(S, ideal(ring_xy, x))
        assert e == 1  # (I : (x,y)) = (x) is already the fixpoint

    def test_fixpoint_and_monotone(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x**2 * y, x * y**3)
        J = ideal(ring_xy, y)
        S, _ = saturate(I, J)
        assert eq(quotient(S, J), S)
        Q = quotient(I, J)
        assert ideal_contains(Q, I) and ideal_contains(S, Q)


class TestEliminate:
    def test_matches_intersection_trick(self):
        ring = RingContext(["t", "x", "y"])
        t = Polynomial.variable(ring, "t")
        x = Polynomial.variable(ring, "x")
        y = Polynomial.variable(ring, "y")
        out = eliminate(Ideal(ring, [t * x, (1 - t) * y]), {"t"})
        assert eq(out, Ideal(ring, [x * y]))

    def test_empty_is_identity(self, ring_xy, xy):
        x, _ = xy
        I = ideal(ring_xy, x)
        assert eliminate(I, set()) is I

    def test_parabola(self):
        ring = RingContext(["x", "y", "t"])
        x = Polynomial.variable(ring, "x")
        y = Polynomial.variable(ring, "y")
        t = Polynomial.variable(ring, "t")
        out = eliminate(Ideal(ring, [x - t, y - t**2]), {"t"})
        # y = x^2 after substituting t = x
        assert eq(out, Ideal(ring, [y - x**2]))


class TestExactDiv:
    def test_roundtrip(self, ring_xy, xy):
        x, y = xy
        f = (x + y) * (x**2 - y + 3)
        assert exact_div(f, x + y) == x**2 - y + 3

    def test_rejects_nondivisor(self, ring_xy, xy):
        x, y = xy
        with pytest.raises(ValueError):
            exact_div(x**2 + y, x + y)


class TestCrossOracle:
    """Groebner-path operations vs the combinatorial monomial rules."""

    def test_intersect_quotient_saturate(self):
        rng = random.Random(101)
        for _ in range(12):
            A = random_monomial_ideal(rng, 3, 4, max_gens=3)
            B = random_monomial_ideal(rng, 3, 4, max_gens=3)
            got = from_polynomial_ideal(
                gb_ideal(intersect(A.to_ideal(), B.to_ideal()))
            )
            assert got == mono_intersect(A, B)
            gotq = from_polynomial_ideal(
                gb_ideal(quotient(A.to_ideal(), B.to_ideal()))
            )
            assert gotq == mono_quotient_ideal(A, B)
            S, _ = saturate(A.to_ideal(), B.to_ideal())
            assert from_polynomial_ideal(gb_ideal(S)) == mono_saturate(A, B)[0]
