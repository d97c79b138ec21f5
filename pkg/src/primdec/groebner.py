"""Buchberger's algorithm, normal forms, ideal membership and equality.

The reduced Groebner basis is the decision kernel everything else sits
on: two ideals are equal iff their reduced bases coincide under the
same order.  Bases are cached per (ideal, order); the cache is purely
an optimization and every result must be identical with it disabled.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .polyring import (
    Monomial,
    Polynomial,
    RingContext,
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    monomial_key,
)

#: reduction steps allowed per groebner_basis call before giving up
DEFAULT_STEP_BUDGET = 500_000


class BudgetExceededError(RuntimeError):
    """The step budget ran out; the result is unknown, never wrong."""

    def __init__(self, budget: int):
        super().__init__("Groebner step budget of %d exceeded" % budget)
        self.budget = budget


class Ideal:
    """Generator list in a fixed ring, with cached reduced bases."""

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generator %r is not a Polynomial" % (g,))
            if g.ring.nvars != ring.nvars:
                raise ValueError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb_cache: dict = {}

    def is_zero(self) -> bool:
        return not self.generators

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


def ideal(ring: RingContext, *gens: Polynomial) -> Ideal:
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# division / normal form

class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit: int):
        self.left = limit
        self.limit = limit

    def spend(self, n: int = 1) -> None:
        self.left -= n
        if self.left < 0:
            raise BudgetExceededError(self.limit)


def _nf_dict(terms: dict, lead: list, ring: RingContext, key, budget=None) -> dict:
    """Fully reduce a term dict against [(lt_mono, lt_coeff, gen_terms)]."""
    work = dict(terms)
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, gterms in lead:
            if mono_divides(lm, m):
                if budget is not None:
                    budget.spend()
                factor = mono_div(m, lm)
                scale = c / lc
                for gm, gc in gterms:
                    mm = tuple(a + b for a, b in zip(gm, factor))
                    if mm == m:
                        continue
                    s = work.get(mm, 0) - scale * gc
                    if s == 0:
                        work.pop(mm, None)
                    else:
                        work[mm] = s
                break
        else:
            remainder[m] = c
    return remainder


def _lead_data(G: Sequence[Polynomial], order: str):
    key = monomial_key(order)
    out = []
    for g in G:
        lm, lc = g.leading_term(order)
        out.append((lm, lc, tuple(g.terms.items())))
    return out


def normal_form(
    f: Polynomial,
    G: Sequence[Polynomial],
    order: str | None = None,
    budget: int | None = None,
) -> Polynomial:
    """Remainder of f on division by the listed basis G.

    Deterministic: the order-maximal reducible term is cancelled against
    the first divisor in the listed order of G.  No term of the result
    is divisible by any leading monomial of G.
    """
    if not G:
        raise ValueError("empty basis")
    order = order or f.ring.order
    key = monomial_key(order)
    b = _Budget(budget) if budget is not None else None
    r = _nf_dict(f.terms, _lead_data(G, order), f.ring, key, b)
    return Polynomial(f.ring, r)


def s_polynomial(f: Polynomial, g: Polynomial, order: str) -> Polynomial:
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    l = mono_lcm(mf, mg)
    return f.shift(mono_div(l, mf), Fraction(1) / cf) - g.shift(
        mono_div(l, mg), Fraction(1) / cg
    )


# ---------------------------------------------------------------------------
# Buchberger

def _buchberger(gens: Sequence[Polynomial], order: str, budget: _Budget) -> List[Polynomial]:
    key = monomial_key(order)
    G = [g for g in gens if not g.is_zero()]
    if not G:
        return []
    lead = _lead_data(G, order)

    def pair_key(ij):
        i, j = ij
        l = mono_lcm(lead[i][0], lead[j][0])
        return (mono_degree(l), key(l))

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        # normal strategy: smallest lcm degree first, order tie-break
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li, lj = lead[i][0], lead[j][0]
        if all(e == 0 for e in mono_gcd(li, lj)):
            continue  # coprime leading monomials: S-poly reduces to 0
        budget.spend()
        s = s_polynomial(G[i], G[j], order)
        r = _nf_dict(s.terms, lead, s.ring, key, budget)
        if r:
            G.append(Polynomial(s.ring, r))
            lead = _lead_data(G, order)
            k = len(G) - 1
            pairs.update((i2, k) for i2 in range(k))
    return G


def _reduce_basis(G: Sequence[Polynomial], order: str, budget: _Budget) -> List[Polynomial]:
    key = monomial_key(order)
    # minimal: drop generators whose lead is divisible by another lead
    G = sorted(G, key=lambda g: key(g.leading_term(order)[0]))
    minimal: List[Polynomial] = []
    for i, g in enumerate(G):
        lm = g.leading_term(order)[0]
        keep = True
        for j, h in enumerate(G):
            if i == j:
                continue
            lh = h.leading_term(order)[0]
            if mono_divides(lh, lm) and (lh != lm or j < i):
                keep = False
                break
        if keep:
            minimal.append(g)
    # reduced: each tail fully reduced against the others, monic leads
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        if others:
            r = _nf_dict(g.terms, _lead_data(others, order), g.ring, key, budget)
            g = Polynomial(g.ring, r)
        out.append(g.monic(order))
    out.sort(key=lambda g: key(g.leading_term(order)[0]), reverse=True)
    return out


def groebner_basis(
    I: Ideal,
    order: str | None = None,
    use_cache: bool = True,
    budget: int = DEFAULT_STEP_BUDGET,
) -> Tuple[Polynomial, ...]:
    """The reduced Groebner basis of I under the given order.

    Unique for (ideal, order); independent of the generator list that
    happened to present the ideal.  Raises BudgetExceededError when the
    step budget runs out.
    """
    order = order or I.ring.order
    if use_cache and order in I._gb_cache:
        return I._gb_cache[order]
    if not I.generators:
        gb: Tuple[Polynomial, ...] = ()
    else:
        b = _Budget(budget)
        G = _buchberger(I.generators, order, b)
        gb = tuple(_reduce_basis(G, order, b))
    if use_cache:
        I._gb_cache[order] = gb
    return gb


def is_member(f: Polynomial, I: Ideal, order: str | None = None, **kw) -> bool:
    if f.is_zero():
        return True
    gb = groebner_basis(I, order, **kw)
    if not gb:
        return False
    return normal_form(f, gb, order or I.ring.order).is_zero()


def ideal_contains(I: Ideal, J: Ideal, order: str | None = None, **kw) -> bool:
    """True iff J is a subset of I (every generator of J lies in I)."""
    return all(is_member(g, I, order, **kw) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal, order: str | None = None, **kw) -> bool:
    if I.ring.variables != J.ring.variables:
        raise ValueError("ideals in different rings")
    order = order or I.ring.order
    return groebner_basis(I, order, **kw) == groebner_basis(J, order, **kw)


def gb_ideal(I: Ideal, order: str | None = None, **kw) -> Ideal:
    """I presented by its reduced basis (normalizes the generator list)."""
    return Ideal(I.ring, groebner_basis(I, order, **kw))
