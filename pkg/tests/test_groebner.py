import itertools
import random

import pytest

from primdec.polyring import GREVLEX, LEX, Polynomial, RingContext
from primdec.groebner import (
    BudgetExceededError,
    Ideal,
    groebner_basis,
    ideal,
    ideal_equal,
    is_member,
    normal_form,
)

from conftest import random_monomial_ideal, random_polynomial


class TestNormalForm:
    def test_multiple_of_generator(self, ring_xy, xy):
        x, y = xy
        assert normal_form(x**2 * y, [x]).is_zero()

    def test_no_reduction(self, ring_xy, xy):
        x, y = xy
        assert normal_form(y + 1, [x]) == y + 1

    def test_hand_division(self, ring_xy, xy):
        # x^2 + x*y = x*(x + y), so the lex remainder is 0
        x, y = xy
        assert normal_form(x**2 + x * y, [x + y], LEX).is_zero()

    def test_idempotent(self, ring_xyz):
        rng = random.Random(11)
        G = [random_polynomial(rng, ring_xyz) for _ in range(3)]
        G = [g for g in G if not g.is_zero()]
        for _ in range(25):
            f = random_polynomial(rng, ring_xyz)
            r = normal_form(f, G)
            assert normal_form(r, G) == r


class TestGroebnerBasis:
    def test_lex_pair(self, ring_xy, xy):
        x, y = xy
        gb = groebner_basis(ideal(ring_xy, x + y, x - y), LEX)
        assert set(gb) == {x, y}

    def test_principal(self, ring_xy, xy):
        x, _ = xy
        assert groebner_basis(ideal(ring_xy, x)) == (x,)

    def test_circle_and_hyperbola(self, ring_xy, xy):
        # golden value confirmed by the hand S-polynomial run:
        # S(x^2+y^2, x*y) = y^3, and all further pairs reduce to zero
        x, y = xy
        gb = groebner_basis(ideal(ring_xy, x**2 + y**2, x * y), GREVLEX)
        assert set(gb) == {x**2 + y**2, x * y, y**3}

    def test_uniqueness_under_permutation(self):
        rng = random.Random(7)
        for trial in range(50):
            nvars = rng.randint(2, 3)
            ring = RingContext(["x", "y", "z"][:nvars])
            gens = [
                random_polynomial(rng, ring, max_degree=3, max_terms=3)
                for _ in range(rng.randint(1, 3))
            ]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            reference = groebner_basis(Ideal(ring, gens), use_cache=False)
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert (
                groebner_basis(Ideal(ring, shuffled), use_cache=False)
                == reference
            )

    def test_cache_transparent(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x**2 - y, x * y - 1)
        with_cache = groebner_basis(I, LEX, use_cache=True)
        again = groebner_basis(I, LEX, use_cache=True)
        fresh = groebner_basis(ideal(ring_xy, x**2 - y, x * y - 1), LEX,
                               use_cache=False)
        assert with_cache == again == fresh

    def test_reduced_basis_properties(self, ring_xyz):
        rng = random.Random(3)
        for _ in range(10):
            gens = [
                random_polynomial(rng, ring_xyz, max_degree=2, max_terms=3)
                for _ in range(2)
            ]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            gb = groebner_basis(Ideal(ring_xyz, gens), use_cache=False)
            for g in gb:
                assert g.leading_term()[1] == 1  # monic
                others = [h for h in gb if h is not g]
                if others:
                    assert normal_form(g, others) == g  # fully reduced

    def test_budget_raises(self, ring_xyz):
        from primdec.polyring import Polynomial

        x = Polynomial.variable(ring_xyz, "x")
        y = Polynomial.variable(ring_xyz, "y")
        z = Polynomial.variable(ring_xyz, "z")
        I = ideal(ring_xyz, x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x * z)
        with pytest.raises(BudgetExceededError):
            groebner_basis(I, use_cache=False, budget=3)


class TestMembership:
    def test_generator(self, ring_xy, xy):
        x, y = xy
        assert is_member(y**2, ideal(ring_xy, x**2, x * y, y**2))

    def test_unit_not_in_proper(self, ring_xy, xy):
        x, _ = xy
        one = Polynomial.one(ring_xy)
        assert not is_member(one, ideal(ring_xy, x))

    def test_factor(self, ring_xy, xy):
        x, y = xy
        assert is_member(x**2 - y**2, ideal(ring_xy, x + y))

    def test_agrees_with_monomial_divisibility(self):
        # cross-oracle: membership of a monomial in a monomial ideal is
        # plain divisibility by some generator
        rng = random.Random(19)
        for _ in range(20):
            M = random_monomial_ideal(rng, 3, 4)
            I = M.to_ideal()
            for m in itertools.product(range(4), repeat=3):
                f = Polynomial.from_monomial(M.ring, m)
                assert is_member(f, I) == M.contains_monomial(m)


class TestIdealEqual:
    def test_different_presentations(self, ring_xy, xy):
        x, y = xy
        assert ideal_equal(
            ideal(ring_xy, x, y), ideal(ring_xy, x + y, x - y)
        )

    def test_strict_containment(self, ring_xy, xy):
        x, _ = xy
        assert not ideal_equal(ideal(ring_xy, x), ideal(ring_xy, x**2))

    def test_reflexive(self, ring_xy, xy):
        x, y = xy
        I = ideal(ring_xy, x * y - 1)
        assert ideal_equal(I, I)
