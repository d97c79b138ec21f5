"""Combinatorial fast path for monomial ideals.

Everything here avoids Groebner bases entirely: intersection is
pairwise lcm, colon is exponent subtraction, saturation at a variable
subset zeroes exponents.  Irreducible decomposition splits mixed
generators recursively; primary components come from grouping the
irreducible pieces by radical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .polyring import (
    Monomial,
    Polynomial,
    RingContext,
    mono_degree,
    mono_divides,
    mono_lcm,
)
from .groebner import Ideal


class DecompositionError(RuntimeError):
    """Post-verification of a decomposition failed: algorithm bug."""


class NotAssociatedError(ValueError):
    """The given prime is not associated to the ideal."""


class BelowThresholdError(ValueError):
    """The requested power is below the primary threshold for this prime."""

    def __init__(self, prime, n):
        super().__init__(
            "power %d is below the P-primary threshold for %s" % (n, prime)
        )
        self.prime = prime
        self.n = n


class ThresholdCapError(RuntimeError):
    """No primary component found below the scan cap."""


def _minimalize(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Antichain of minimal generators: drop multiples of other gens."""
    gens = set(gens)
    out = []
    for m in gens:
        if not any(g != m and mono_divides(g, m) for g in gens):
            out.append(m)
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by a subset of the ring variables."""

    ring: RingContext
    indices: Tuple[int, ...]  # sorted variable indices

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if not idx:
            raise ValueError("a monomial prime needs at least one variable")
        if idx[0] < 0 or idx[-1] >= self.ring.nvars:
            raise ValueError("variable index out of range")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of_vars(cls, ring: RingContext, names: Iterable[str]) -> "MonomialPrime":
        return cls(ring, tuple(ring.var_index(v) for v in names))

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.indices)

    def contains(self, other: "MonomialPrime") -> bool:
        return set(other.indices) <= set(self.indices)

    def complement(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.ring.nvars) if i not in self.indices)

    def as_monomial_ideal(self) -> "MonomialIdeal":
        n = self.ring.nvars
        gens = []
        for i in self.indices:
            e = [0] * n
            e[i] = 1
            gens.append(tuple(e))
        return MonomialIdeal(self.ring, tuple(gens))

    def power(self, k: int) -> "MonomialIdeal":
        """All monomials of degree k in the prime's variables."""
        if k < 0:
            raise ValueError("power must be nonnegative")
        if k == 0:
            return unit_monomial_ideal(self.ring)
        n = self.ring.nvars
        gens = []
        for combo in itertools.combinations_with_replacement(self.indices, k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            gens.append(tuple(e))
        return MonomialIdeal.from_gens(self.ring, gens)

    def sort_token(self):
        return (len(self.indices), self.indices)

    def __str__(self):
        return "(" + ", ".join(self.variables) + ")"


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators (an antichain), canonically sorted."""

    ring: RingContext
    min_gens: Tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, ring: RingContext, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars:
                raise ValueError("generator %r has wrong length" % (g,))
            if any(e < 0 for e in g):
                raise ValueError("negative exponent in %r" % (g,))
        return cls(ring, _minimalize(gens))

    def contains_monomial(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.min_gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other.min_gens)

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return any(mono_degree(g) == 0 for g in self.min_gens)

    def is_proper(self) -> bool:
        return bool(self.min_gens) and not self.is_unit()

    def support(self) -> Tuple[int, ...]:
        """Indices of variables occurring in some minimal generator."""
        n = self.ring.nvars
        return tuple(
            i for i in range(n) if any(g[i] > 0 for g in self.min_gens)
        )

    def to_ideal(self) -> Ideal:
        return Ideal(
            self.ring,
            [Polynomial.from_monomial(self.ring, g) for g in self.min_gens],
        )

    def __str__(self):
        from .polyring import format_monomial

        if not self.min_gens:
            return "(0)"
        return "(" + ", ".join(
            format_monomial(self.ring, g) or "1" for g in self.min_gens
        ) + ")"


def unit_monomial_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.nvars,))


def from_polynomial_ideal(I: Ideal) -> MonomialIdeal:
    """Convert when every generator is a single term; KeyError otherwise."""
    gens = []
    for g in I.generators:
        if len(g.terms) != 1:
            raise ValueError("generator %s is not a monomial" % (g,))
        gens.append(next(iter(g.terms)))
    return MonomialIdeal.from_gens(I.ring, gens)


# ---------------------------------------------------------------------------
# arithmetic

def mono_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, _minimalize(I.min_gens + J.min_gens))


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    gens = [mono_lcm(a, b) for a in I.min_gens for b in J.min_gens]
    return MonomialIdeal(I.ring, _minimalize(gens))


def mono_intersect_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("need at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = mono_intersect(out, J)
    return out


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    gens = [
        tuple(x + y for x, y in zip(a, b))
        for a in I.min_gens
        for b in J.min_gens
    ]
    return MonomialIdeal(I.ring, _minimalize(gens))


def mono_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power must be nonnegative")
    out = unit_monomial_ideal(I.ring)
    for _ in range(n):
        out = mono_product(out, I)
    return out


def mono_quotient(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m) for a single monomial m: exponentwise truncated subtraction."""
    gens = [
        tuple(max(g - e, 0) for g, e in zip(gen, m)) for gen in I.min_gens
    ]
    return MonomialIdeal(I.ring, _minimalize(gens))


def mono_quotient_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = intersection of (I : m) over minimal generators m of J."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    return mono_intersect_many([mono_quotient(I, m) for m in J.min_gens])


def mono_saturate(I: MonomialIdeal, J: MonomialIdeal) -> Tuple[MonomialIdeal, int]:
    """(I : J^inf) and the least i with (I : J^i) = (I : J^(i+1))."""
    K = I
    steps = 0
    while True:
        K2 = mono_quotient_ideal(K, J)
        if K2 == K:
            return K, steps
        K = K2
        steps += 1


def mono_saturate_vars(I: MonomialIdeal, var_indices: Iterable[int]) -> MonomialIdeal:
    """Saturation at the given variables: zero their exponents out."""
    idx = set(var_indices)
    gens = [
        tuple(0 if i in idx else e for i, e in enumerate(g))
        for g in I.min_gens
    ]
    return MonomialIdeal(I.ring, _minimalize(gens))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring.variables != J.ring.variables:
        raise ValueError("ideals live in different rings")


# ---------------------------------------------------------------------------
# decomposition

def is_irreducible(I: MonomialIdeal) -> bool:
    return all(sum(1 for e in g if e > 0) == 1 for g in I.min_gens)


@lru_cache(maxsize=None)
def _split(I: MonomialIdeal) -> Tuple[MonomialIdeal, ...]:
    for m in I.min_gens:
        support = [i for i, e in enumerate(m) if e > 0]
        if len(support) < 2:
            continue
        # split the first mixed generator at its first variable block
        i = support[0]
        left = tuple(e if j == i else 0 for j, e in enumerate(m))
        right = tuple(0 if j == i else e for j, e in enumerate(m))
        parts = []
        for piece in (left, right):
            sub = MonomialIdeal(I.ring, _minimalize(I.min_gens + (piece,)))
            parts.extend(_split(sub))
        return tuple(dict.fromkeys(parts))
    return (I,)


def _irredundant(components: Sequence[MonomialIdeal], target: MonomialIdeal) -> List[MonomialIdeal]:
    """Drop components not needed for the intersection to equal target."""
    comps = list(dict.fromkeys(components))
    changed = True
    while changed:
        changed = False
        for i in range(len(comps)):
            if len(comps) == 1:
                break
            rest = comps[:i] + comps[i + 1 :]
            if comps[i].contains(mono_intersect_many(rest)):
                del comps[i]
                changed = True
                break
    if mono_intersect_many(comps) != target:
        raise DecompositionError("irredundant filter broke the intersection")
    return comps


def irreducible_decomposition(I: MonomialIdeal) -> List[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers."""
    if not I.is_proper():
        raise ValueError("need a proper nonzero monomial ideal")
    comps = _irredundant(_split(I), I)
    if any(not is_irreducible(c) for c in comps):
        raise DecompositionError("split left a mixed generator")
    comps.sort(key=lambda c: (_radical_token(c), c.min_gens))
    return comps


def _radical_token(C: MonomialIdeal) -> Tuple[int, Tuple[int, ...]]:
    s = C.support()
    return (len(s), s)


@lru_cache(maxsize=None)
def _associated_primes_cached(I: MonomialIdeal) -> Tuple[MonomialPrime, ...]:
    seen = {}
    for C in irreducible_decomposition(I):
        P = MonomialPrime(I.ring, C.support())
        seen[P] = True
    return tuple(sorted(seen, key=MonomialPrime.sort_token))


def associated_primes(I: MonomialIdeal) -> List[MonomialPrime]:
    """Ass(R/I): radicals of the irreducible components, deduplicated."""
    return list(_associated_primes_cached(I))


@dataclass(frozen=True)
class PrimaryDecomposition:
    ideal: MonomialIdeal
    components: Tuple[Tuple[MonomialPrime, MonomialIdeal], ...]
    irredundant: bool
    minimal: bool

    def component_for(self, P: MonomialPrime) -> MonomialIdeal:
        for prime, comp in self.components:
            if prime == P:
                return comp
        raise KeyError("no component for prime %s" % (P,))


def primary_decomposition(I: MonomialIdeal) -> PrimaryDecomposition:
    """Group irreducible components by radical and intersect each group."""
    return _primary_decomposition_cached(I)


@lru_cache(maxsize=None)
def _primary_decomposition_cached(I: MonomialIdeal) -> PrimaryDecomposition:
    if not I.is_proper():
        raise ValueError("need a proper nonzero monomial ideal")
    groups: Dict[Tuple[int, ...], List[MonomialIdeal]] = {}
    for C in irreducible_decomposition(I):
        groups.setdefault(C.support(), []).append(C)
    comps = []
    for support in sorted(groups, key=lambda s: (len(s), s)):
        P = MonomialPrime(I.ring, support)
        Q = mono_intersect_many(groups[support])
        if is_primary(Q) != P:
            raise DecompositionError("grouped component is not %s-primary" % P)
        comps.append((P, Q))
    if mono_intersect_many([q for _, q in comps]) != I:
        raise DecompositionError("primary components do not intersect to I")
    irredundant = all(
        len(comps) == 1
        or not comps[i][1].contains(
            mono_intersect_many([q for j, (_, q) in enumerate(comps) if j != i])
        )
        for i in range(len(comps))
    )
    minimal = len({p for p, _ in comps}) == len(comps)
    if not (irredundant and minimal):
        raise DecompositionError("decomposition is redundant")
    return PrimaryDecomposition(I, tuple(comps), irredundant, minimal)


def is_primary(Q: MonomialIdeal) -> Optional[MonomialPrime]:
    """The radical prime if Q is primary, else None.

    A monomial ideal is primary iff every variable occurring in a
    minimal generator also occurs as a pure power generator.
    """
    if not Q.is_proper():
        raise ValueError("need a proper nonzero monomial ideal")
    occurring = set(Q.support())
    pure = set()
    for g in Q.min_gens:
        support = [i for i, e in enumerate(g) if e > 0]
        if len(support) == 1:
            pure.add(support[0])
    if occurring <= pure:
        return MonomialPrime(Q.ring, tuple(sorted(occurring)))
    return None


# ---------------------------------------------------------------------------
# the one-parameter family of P-primary components

LAMBDA_POWER_CAP = 64


def lambda_candidates(
    I: MonomialIdeal, P: MonomialPrime, n: int
) -> MonomialIdeal:
    """The component (I + P^n) saturated at the variables outside P.

    For n at or above the primary threshold this is a P-primary
    component of I; distinct n can give distinct components when P is
    embedded.  Membership is verified: the result must be P-primary
    and, swapped into the standard decomposition in place of the
    P-component, must still intersect to I.
    """
    if n < 1:
        raise ValueError("power must be positive")
    if P not in associated_primes(I):
        raise NotAssociatedError("%s is not associated to %s" % (P, I))
    Q = mono_saturate_vars(mono_sum(I, P.power(n)), P.complement())
    if is_primary(Q) != P:
        raise BelowThresholdError(P, n)
    others = [
        comp
        for prime, comp in primary_decomposition(I).components
        if prime != P
    ]
    rest = mono_intersect_many(others) if others else unit_monomial_ideal(I.ring)
    if mono_intersect(Q, rest) != I:
        raise BelowThresholdError(P, n)
    return Q


def lambda_threshold(
    I: MonomialIdeal, P: MonomialPrime, cap: int = LAMBDA_POWER_CAP
) -> int:
    """Least n for which lambda_candidates yields a P-primary component."""
    if P not in associated_primes(I):
        raise NotAssociatedError("%s is not associated to %s" % (P, I))
    for n in range(1, cap + 1):
        try:
            lambda_candidates(I, P, n)
            return n
        except BelowThresholdError:
            continue
    raise ThresholdCapError(
        "no P-primary component for %s below power %d" % (P, cap)
    )
