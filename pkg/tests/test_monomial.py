import random

import pytest

from primdec.polyring import RingContext
from primdec.monomial import (
    BelowThresholdError,
    MonomialIdeal,
    MonomialPrime,
    NotAssociatedError,
    associated_primes,
    irreducible_decomposition,
    is_irreducible,
    is_primary,
    lambda_candidates,
    lambda_threshold,
    mono_intersect,
    mono_intersect_many,
    mono_product,
    mono_quotient,
    mono_saturate_vars,
    primary_decomposition,
)

from conftest import member_set, monomials_up_to, random_monomial_ideal


def MI(ring, *gens):
    return MonomialIdeal.from_gens(ring, gens)


def prime(ring, *names):
    return MonomialPrime.of_vars(ring, names)


class TestBasicOps:
    def test_intersect_lcm_rule(self, ring_xy):
        assert mono_intersect(MI(ring_xy, (1, 0)), MI(ring_xy, (0, 1))) == MI(
            ring_xy, (1, 1)
        )

    def test_saturate_vars_zeroes_exponents(self, ring_xy):
        assert mono_saturate_vars(MI(ring_xy, (2, 3)), [1]) == MI(ring_xy, (2, 0))

    def test_quotient_brute_force(self, ring_xy):
        Q = mono_quotient(MI(ring_xy, (2, 0), (1, 1)), (1, 0))
        assert Q == MI(ring_xy, (1, 0), (0, 1))
        # brute-force oracle: x^a in (I : m) iff m*x^a in I
        I = MI(ring_xy, (2, 0), (1, 1))
        for m in monomials_up_to(2, 4):
            shifted = (m[0] + 1, m[1])
            assert Q.contains_monomial(m) == I.contains_monomial(shifted)


class TestIrreducibleDecomposition:
    def test_one_split(self, ring_xy):
        comps = irreducible_decomposition(MI(ring_xy, (2, 0), (1, 1)))
        assert set(comps) == {MI(ring_xy, (1, 0)), MI(ring_xy, (2, 0), (0, 1))}
        # exhaustive membership check up to degree 4
        target = member_set([(2, 0), (1, 1)], 2, 4)
        for m in monomials_up_to(2, 4):
            assert (m in target) == all(c.contains_monomial(m) for c in comps)

    def test_already_irreducible(self, ring_xy):
        I = MI(ring_xy, (2, 0), (0, 3))
        assert irreducible_decomposition(I) == [I]

    def test_single_split(self, ring_xy):
        comps = irreducible_decomposition(MI(ring_xy, (1, 1)))
        assert set(comps) == {MI(ring_xy, (1, 0)), MI(ring_xy, (0, 1))}

    def test_components_are_irreducible_and_irredundant(self):
        rng = random.Random(71)
        for _ in range(20):
            I = random_monomial_ideal(rng, 3, 5)
            comps = irreducible_decomposition(I)
            assert all(is_irreducible(c) for c in comps)
            assert mono_intersect_many(comps) == I
            for i in range(len(comps)):
                rest = comps[:i] + comps[i + 1 :]
                if rest:
                    assert mono_intersect_many(rest) != I


class TestAssociatedPrimes:
    def test_embedded(self, ring_xy):
        assert set(associated_primes(MI(ring_xy, (2, 0), (1, 1)))) == {
            prime(ring_xy, "x"),
            prime(ring_xy, "x", "y"),
        }

    def test_two_minimal(self, ring_xy):
        assert set(associated_primes(MI(ring_xy, (1, 1)))) == {
            prime(ring_xy, "x"),
            prime(ring_xy, "y"),
        }

    def test_principal_prime(self, ring_xy):
        assert associated_primes(MI(ring_xy, (1, 0))) == [prime(ring_xy, "x")]


class TestPrimaryDecomposition:
    def test_embedded_example(self, ring_xy):
        dec = primary_decomposition(MI(ring_xy, (2, 0), (1, 1)))
        got = {(p, q) for p, q in dec.components}
        assert got == {
            (prime(ring_xy, "x"), MI(ring_xy, (1, 0))),
            (prime(ring_xy, "x", "y"), MI(ring_xy, (2, 0), (0, 1))),
        }
        assert dec.irredundant and dec.minimal

    def test_three_primes(self, ring_xy):
        # I = (x^2 y, x y^2): components for (x), (y) and (x, y);
        # expected values frozen from the exhaustive membership oracle
        I = MI(ring_xy, (2, 1), (1, 2))
        dec = primary_decomposition(I)
        assert [p for p, _ in dec.components] == [
            prime(ring_xy, "x"),
            prime(ring_xy, "y"),
            prime(ring_xy, "x", "y"),
        ]
        inter = mono_intersect_many([q for _, q in dec.components])
        assert inter == I
        target = member_set([(2, 1), (1, 2)], 2, 6)
        for m in monomials_up_to(2, 6):
            assert (m in target) == inter.contains_monomial(m)

    def test_primary_input(self, ring_xy):
        dec = primary_decomposition(MI(ring_xy, (3, 0)))
        assert dec.components == (
            (prime(ring_xy, "x"), MI(ring_xy, (3, 0))),
        )

    def test_random_irredundant_exact(self):
        rng = random.Random(37)
        for _ in range(20):
            I = random_monomial_ideal(rng, 3, 5)
            dec = primary_decomposition(I)
            comps = [q for _, q in dec.components]
            assert mono_intersect_many(comps) == I
            for i in range(len(comps)):
                rest = comps[:i] + comps[i + 1 :]
                if rest:
                    assert mono_intersect_many(rest) != I
            # radicals of the components are exactly Ass
            assert {is_primary(q) for q in comps} == set(associated_primes(I))


class TestIsPrimary:
    def test_pure_powers_present(self, ring_xy):
        assert is_primary(MI(ring_xy, (2, 0), (1, 1), (0, 3))) == prime(
            ring_xy, "x", "y"
        )

    def test_missing_pure_power(self, ring_xy):
        assert is_primary(MI(ring_xy, (2, 0), (1, 1))) is None

    def test_variable(self, ring_xy):
        assert is_primary(MI(ring_xy, (1, 0))) == prime(ring_xy, "x")


class TestLambdaCandidates:
    def test_embedded_powers(self, ring_xy):
        I = MI(ring_xy, (2, 0), (1, 1))
        P = prime(ring_xy, "x", "y")
        assert lambda_candidates(I, P, 2) == MI(ring_xy, (2, 0), (1, 1), (0, 2))
        assert lambda_candidates(I, P, 3) == MI(ring_xy, (2, 0), (1, 1), (0, 3))

    def test_minimal_prime_unique(self, ring_xy):
        I = MI(ring_xy, (2, 0), (1, 1))
        P = prime(ring_xy, "x")
        for n in (2, 3, 5):
            assert lambda_candidates(I, P, n) == MI(ring_xy, (1, 0))

    def test_below_threshold(self, ring_xy):
        I = MI(ring_xy, (2, 0), (1, 1))
        with pytest.raises(BelowThresholdError):
            lambda_candidates(I, prime(ring_xy, "x", "y"), 1)

    def test_not_associated(self, ring_xy):
        with pytest.raises(NotAssociatedError):
            lambda_candidates(MI(ring_xy, (1, 0)), prime(ring_xy, "y"), 2)

    def test_contains_ideal_and_prime_power(self):
        rng = random.Random(13)
        for _ in range(15):
            I = random_monomial_ideal(rng, 3, 4)
            for P in associated_primes(I):
                n0 = lambda_threshold(I, P)
                for n in range(n0, n0 + 3):
                    Q = lambda_candidates(I, P, n)
                    assert Q.contains(I)
                    assert Q.contains(P.power(n))

    def test_candidates_are_components(self):
        # swapping any candidate into the standard decomposition still
        # intersects to the ideal
        rng = random.Random(29)
        for _ in range(10):
            I = random_monomial_ideal(rng, 3, 4)
            dec = primary_decomposition(I)
            for P, _ in dec.components:
                n0 = lambda_threshold(I, P)
                Q = lambda_candidates(I, P, n0 + 1)
                others = [q for p, q in dec.components if p != P]
                assert mono_intersect_many([Q] + others) == I
