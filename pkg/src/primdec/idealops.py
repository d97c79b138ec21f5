"""Ideal-level algebra: sum, product, power, intersection, quotient,
saturation and elimination, all through the Groebner kernel.

Intersection uses the classic trick: eliminate a fresh variable t from
t*I + (1-t)*J.  Saturation iterates colon quotients until the chain
stabilizes, which also yields the saturation exponent.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Set, Tuple

from .polyring import (
    LEX,
    Polynomial,
    RingContext,
    mono_div,
    mono_divides,
    monomial_key,
)
from .groebner import (
    Ideal,
    groebner_basis,
    ideal_equal,
    is_member,
    normal_form,
)


class SelfCheckError(AssertionError):
    """An internal verification of a computed ideal failed."""


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_power(I: Ideal, n: int) -> Ideal:
    if n < 0:
        raise ValueError("power must be nonnegative")
    out = Ideal(I.ring, [Polynomial.one(I.ring)])
    for _ in range(n):
        out = ideal_product(out, I)
    return out


def unit_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring, [Polynomial.one(ring)])


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring.variables != J.ring.variables:
        raise ValueError("ideals live in different rings")


# ---------------------------------------------------------------------------
# elimination

def eliminate(I: Ideal, names: Iterable[str], **kw) -> Ideal:
    """Generators of I intersected with the subring without `names`.

    Computed from a lex basis with the eliminated variables first.
    """
    names = set(names)
    if not names:
        return I
    unknown = names - set(I.ring.variables)
    if unknown:
        raise KeyError("unknown variables %r" % (sorted(unknown),))
    ring = I.ring
    first = [v for v in ring.variables if v in names]
    rest = [v for v in ring.variables if v not in names]
    perm_ring = RingContext(first + rest, LEX)
    src = [ring.var_index(v) for v in perm_ring.variables]

    def to_perm(f: Polynomial) -> Polynomial:
        return Polynomial(
            perm_ring,
            {tuple(m[i] for i in src): c for m, c in f.terms.items()},
        )

    back = [perm_ring.var_index(v) for v in ring.variables]

    def to_orig(f: Polynomial) -> Polynomial:
        return Polynomial(
            ring, {tuple(m[i] for i in back): c for m, c in f.terms.items()}
        )

    gb = groebner_basis(Ideal(perm_ring, [to_perm(f) for f in I.generators]), **kw)
    k = len(first)
    kept = [g for g in gb if all(m[:k] == (0,) * k for m in g.terms)]
    return Ideal(ring, [to_orig(g) for g in kept])


# ---------------------------------------------------------------------------
# intersection

def _fresh_name(ring: RingContext) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def intersect(I: Ideal, J: Ideal, self_check: bool = True, **kw) -> Ideal:
    """Generators of I ∩ J via elimination of one fresh variable."""
    _same_ring(I, J)
    ring = I.ring
    if not I.generators or not J.generators:
        return Ideal(ring, [])
    if any(g.degree() == 0 for g in I.generators):
        return J
    if any(g.degree() == 0 for g in J.generators):
        return I
    t = _fresh_name(ring)
    ext = ring.extend(t)

    def lift(f: Polynomial) -> Polynomial:
        return Polynomial(ext, {m + (0,): c for m, c in f.terms.items()})

    tv = Polynomial.variable(ext, t)
    gens = [tv * lift(f) for f in I.generators]
    gens += [(1 - tv) * lift(g) for g in J.generators]
    elim = eliminate(Ideal(ext, gens), {t}, **kw)

    def drop(f: Polynomial) -> Polynomial:
        return Polynomial(ring, {m[:-1]: c for m, c in f.terms.items()})

    out = Ideal(ring, [drop(g) for g in elim.generators])
    if self_check:
        for g in out.generators:
            if not (is_member(g, I, **kw) and is_member(g, J, **kw)):
                raise SelfCheckError(
                    "intersection output %s not in both inputs" % (g,)
                )
    return out


def intersect_many(ideals: Sequence[Ideal], **kw) -> Ideal:
    if not ideals:
        raise ValueError("need at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J, **kw)
    return out


# ---------------------------------------------------------------------------
# quotients and saturation

def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    order = ring.order
    key = monomial_key(order)
    lm, lc = g.leading_term(order)
    rem = dict(f.terms)
    q: dict = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        if not mono_divides(lm, m):
            raise ValueError("%s does not divide %s" % (g, f))
        fac = mono_div(m, lm)
        scale = c / lc
        q[fac] = scale
        for gm, gc in g.terms.items():
            mm = tuple(a + b for a, b in zip(gm, fac))
            s = rem.get(mm, 0) - scale * gc
            if s == 0:
                rem.pop(mm, None)
            else:
                rem[mm] = s
    return Polynomial(ring, q)


def quotient_by_poly(I: Ideal, g: Polynomial, **kw) -> Ideal:
    """(I : g) for a single nonzero polynomial g."""
    if g.is_zero():
        raise ValueError("colon by zero polynomial")
    H = intersect(I, Ideal(I.ring, [g]), **kw)
    return Ideal(I.ring, [exact_div(h, g) for h in H.generators])


def quotient(I: Ideal, J: Ideal, **kw) -> Ideal:
    """(I : J) = intersection of (I : g) over the generators g of J."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    parts = [quotient_by_poly(I, g, **kw) for g in J.generators]
    return intersect_many(parts, **kw)


def saturate(I: Ideal, J: Ideal, **kw) -> Tuple[Ideal, int]:
    """(I : J^inf) with the saturation exponent.

    Iterates K <- (K : J) until the chain stabilizes; the exponent is
    the number of strict steps, i.e. the least i with
    (I : J^i) = (I : J^(i+1)).
    """
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    K = I
    steps = 0
    while True:
        K2 = quotient(K, J, **kw)
        if ideal_equal(K2, K, **kw):
            return K, steps
        K = K2
        steps += 1
