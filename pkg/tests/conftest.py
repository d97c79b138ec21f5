import itertools
import random

import pytest

from primdec.polyring import Polynomial, RingContext
from primdec.monomial import MonomialIdeal


@pytest.fixture
def ring_xy():
    return RingContext(["x", "y"])


@pytest.fixture
def ring_xyz():
    return RingContext(["x", "y", "z"])


@pytest.fixture
def xy(ring_xy):
    return (
        Polynomial.variable(ring_xy, "x"),
        Polynomial.variable(ring_xy, "y"),
    )


# ---------------------------------------------------------------------------
# brute-force oracles (independent of the library's fast paths)

def monomials_up_to(nvars, degree):
    """All exponent tuples with total degree <= degree."""
    return [
        m
        for m in itertools.product(range(degree + 1), repeat=nvars)
        if sum(m) <= degree
    ]


def in_monomial_ideal(gens, m):
    """Divisibility test straight from the generator list."""
    return any(all(g[i] <= m[i] for i in range(len(m))) for g in gens)


def member_set(gens, nvars, degree):
    """The set of ideal members among all monomials up to the bound."""
    return {
        m for m in monomials_up_to(nvars, degree) if in_monomial_ideal(gens, m)
    }


def random_monomial_ideal(rng, nvars, max_degree, max_gens=4):
    """A proper nonzero monomial ideal with bounded generator degrees."""
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            deg = rng.randint(1, max_degree)
            exps = [0] * nvars
            for _ in range(deg):
                exps[rng.randrange(nvars)] += 1
            gens.append(tuple(exps))
        ring = RingContext(["x", "y", "z", "w"][:nvars])
        I = MonomialIdeal.from_gens(ring, gens)
        if I.is_proper():
            return I


def random_polynomial(rng, ring, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-5, 5)
        if c:
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
    return Polynomial(ring, {m: c for m, c in terms.items() if c})
