"""Mechanical verification of the compatibility, independence/openness,
Artin-Rees and linear-growth statements on concrete ideals.

All checks reduce to exact ideal equalities.  Monomial inputs go
through the combinatorial fast path; anything else falls back to the
Groebner route.  Both routes are cross-checked against each other in
the test suite, so the dispatch is transparent.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .groebner import Ideal, ideal_contains, ideal_equal
from . import idealops
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    associated_primes,
    from_polynomial_ideal,
    is_primary,
    lambda_candidates,
    lambda_threshold,
    mono_intersect,
    mono_intersect_many,
    mono_power,
    mono_product,
    mono_quotient_ideal,
    mono_saturate,
    mono_sum,
    unit_monomial_ideal,
)

IdealLike = Union[Ideal, MonomialIdeal]

MIN_POWER_CAP = 256


class NotOpenError(ValueError):
    """Q_X is only defined for open subsets of Ass."""


class PickError(ValueError):
    """A compatibility pick is not a primary component containing I."""


class WindowExhaustedError(RuntimeError):
    """No stable Artin-Rees number found within the scan window."""


class ScanCapError(RuntimeError):
    """A power scan hit its cap without succeeding."""


# ---------------------------------------------------------------------------
# arithmetic dispatch: monomial fast path when possible

def _as_monomial(I: IdealLike) -> Optional[MonomialIdeal]:
    if isinstance(I, MonomialIdeal):
        return I
    try:
        return from_polynomial_ideal(I)
    except ValueError:
        return None


class _MonoOps:
    @staticmethod
    def sum(I, J):
        return mono_sum(I, J)

    @staticmethod
    def product(I, J):
        return mono_product(I, J)

    @staticmethod
    def power(I, n):
        return mono_power(I, n)

    @staticmethod
    def intersect(I, J):
        return mono_intersect(I, J)

    @staticmethod
    def saturate(I, J):
        return mono_saturate(I, J)[0]

    @staticmethod
    def contains(I, J):
        return I.contains(J)

    @staticmethod
    def equal(I, J):
        return I == J

    @staticmethod
    def unit(ring):
        return unit_monomial_ideal(ring)


class _GroebnerOps:
    @staticmethod
    def sum(I, J):
        return idealops.ideal_sum(I, J)

    @staticmethod
    def product(I, J):
        return idealops.ideal_product(I, J)

    @staticmethod
    def power(I, n):
        return idealops.ideal_power(I, n)

    @staticmethod
    def intersect(I, J):
        return idealops.intersect(I, J)

    @staticmethod
    def saturate(I, J):
        return idealops.saturate(I, J)[0]

    @staticmethod
    def contains(I, J):
        return ideal_contains(I, J)

    @staticmethod
    def equal(I, J):
        return ideal_equal(I, J)

    @staticmethod
    def unit(ring):
        return idealops.unit_ideal(ring)


def _dispatch(*ideals: IdealLike):
    """Pick the monomial route iff every operand is monomial."""
    monos = [_as_monomial(I) for I in ideals]
    if all(m is not None for m in monos):
        return _MonoOps, monos
    out = [I.to_ideal() if isinstance(I, MonomialIdeal) else I for I in ideals]
    return _GroebnerOps, out


# ---------------------------------------------------------------------------
# openness on Ass

@dataclass(frozen=True)
class AssPoset:
    primes: Tuple[MonomialPrime, ...]
    containment: Tuple[Tuple[MonomialPrime, MonomialPrime], ...]  # (P', P), P' <= P


def ass_poset(primes: Sequence[MonomialPrime]) -> AssPoset:
    primes = tuple(sorted(set(primes), key=MonomialPrime.sort_token))
    pairs = tuple(
        (p, q) for p in primes for q in primes if q.contains(p)
    )
    return AssPoset(primes, pairs)


def is_open_subset(X: Set[MonomialPrime], ass: AssPoset) -> bool:
    """Open in Ass iff closed under passing to smaller associated primes."""
    X = set(X)
    if not X <= set(ass.primes):
        raise ValueError("X is not a subset of Ass")
    for smaller, bigger in ass.containment:
        if bigger in X and smaller not in X:
            return False
    return True


# ---------------------------------------------------------------------------
# Compatibility

@dataclass(frozen=True)
class CompatibilityReport:
    ideal: MonomialIdeal
    picks: Tuple[Tuple[MonomialPrime, MonomialIdeal], ...]
    intersection: MonomialIdeal
    equal: bool
    irredundant: bool
    minimal: bool

    @property
    def compatible(self) -> bool:
        return self.equal and self.irredundant and self.minimal

    def as_dict(self) -> dict:
        return {
            "ideal": str(self.ideal),
            "picks": [[str(p), str(q)] for p, q in self.picks],
            "intersection": str(self.intersection),
            "equal": self.equal,
            "irredundant": self.irredundant,
            "minimal": self.minimal,
            "compatible": self.compatible,
        }


def check_compatibility(
    I: MonomialIdeal, picks: Mapping[MonomialPrime, MonomialIdeal]
) -> CompatibilityReport:
    """Intersect one chosen P-primary component per associated prime.

    Any failure here would be a counterexample to the compatibility
    theorem, so the verdict is surfaced explicitly rather than raised.
    """
    ass = associated_primes(I)
    if set(picks) != set(ass):
        raise PickError(
            "picks must cover Ass exactly; expected %s"
            % ", ".join(str(p) for p in ass)
        )
    for P, Q in picks.items():
        if is_primary(Q) != P:
            raise PickError("pick %s is not %s-primary" % (Q, P))
        if not Q.contains(I):
            raise PickError("pick %s does not contain the ideal" % (Q,))
    ordered = tuple(
        (P, picks[P]) for P in sorted(picks, key=MonomialPrime.sort_token)
    )
    inter = mono_intersect_many([q for _, q in ordered])
    equal = inter == I
    irredundant = all(
        len(ordered) == 1
        or not ordered[i][1].contains(
            mono_intersect_many(
                [q for j, (_, q) in enumerate(ordered) if j != i]
            )
        )
        for i in range(len(ordered))
    )
    minimal = len({p for p, _ in ordered}) == len(ordered)
    return CompatibilityReport(I, ordered, inter, equal, irredundant, minimal)


# ---------------------------------------------------------------------------
# Independence over X

@dataclass(frozen=True)
class IndependenceReport:
    ideal: MonomialIdeal
    x: Tuple[MonomialPrime, ...]
    verdict: str  # "invariant" | "varies"
    intersection: Optional[MonomialIdeal]  # set when invariant
    witness: Optional[Tuple[MonomialIdeal, MonomialIdeal]]  # differing pair
    candidates: Tuple[Tuple[MonomialPrime, Tuple[MonomialIdeal, ...]], ...]
    sample_depth: int

    def as_dict(self) -> dict:
        return {
            "ideal": str(self.ideal),
            "x": [str(p) for p in self.x],
            "verdict": self.verdict,
            "intersection": None if self.intersection is None else str(self.intersection),
            "witness": None
            if self.witness is None
            else [str(self.witness[0]), str(self.witness[1])],
            "candidates": [
                [str(p), [str(c) for c in cs]] for p, cs in self.candidates
            ],
            "sample_depth": self.sample_depth,
        }


def check_independence(
    I: MonomialIdeal,
    X: Set[MonomialPrime],
    sample_depth: int,
    combo_cap: int = 1024,
) -> IndependenceReport:
    """Sample P-primary components over X and compare the intersections.

    Per prime the sampler walks the one-parameter component family
    starting at its primary threshold.  All combinations (up to
    combo_cap, deterministically) are intersected; one differing pair
    is enough to conclude "varies".
    """
    if sample_depth < 1:
        raise ValueError("sample_depth must be positive")
    ass = associated_primes(I)
    X = sorted(set(X), key=MonomialPrime.sort_token)
    if not set(X) <= set(ass):
        raise ValueError("X is not a subset of Ass")
    if not X:
        raise ValueError("X must be nonempty")
    fams = []
    for P in X:
        n0 = lambda_threshold(I, P)
        family = tuple(
            dict.fromkeys(
                lambda_candidates(I, P, n0 + i) for i in range(sample_depth)
            )
        )
        fams.append((P, family))
    combos = itertools.islice(
        itertools.product(*[f for _, f in fams]), combo_cap
    )
    baseline = None
    for combo in combos:
        inter = mono_intersect_many(list(combo))
        if baseline is None:
            baseline = inter
        elif inter != baseline:
            return IndependenceReport(
                I, tuple(X), "varies", None, (baseline, inter),
                tuple(fams), sample_depth,
            )
    return IndependenceReport(
        I, tuple(X), "invariant", baseline, None, tuple(fams), sample_depth
    )


def canonical_qx(I: MonomialIdeal, X: Set[MonomialPrime]) -> MonomialIdeal:
    """The invariant intersection over an open X, via saturation.

    Saturates I at the intersection of the associated primes outside X;
    refuses non-open X, where no invariant intersection exists.
    """
    ass = associated_primes(I)
    X = set(X)
    if not X:
        raise ValueError("X must be nonempty")
    poset = ass_poset(ass)
    if not is_open_subset(X, poset):
        raise NotOpenError("X is not open in Ass; Q_X is undefined")
    outside = [P for P in ass if P not in X]
    if not outside:
        return I
    J = mono_intersect_many([P.as_monomial_ideal() for P in outside])
    return mono_saturate(I, J)[0]


# ---------------------------------------------------------------------------
# Artin-Rees numbers

@dataclass(frozen=True)
class ARReport:
    j: IdealLike
    n_ideal: IdealLike
    k: int
    window: Tuple[int, int]
    status: str  # "verified-on-window"
    witness: Optional[int]  # n at which k-1 fails; None when k = 0

    def as_dict(self) -> dict:
        return {
            "j": _ideal_str(self.j),
            "n": _ideal_str(self.n_ideal),
            "k": self.k,
            "window": list(self.window),
            "status": self.status,
            "witness": self.witness,
        }


def _ideal_str(I: IdealLike) -> str:
    if isinstance(I, MonomialIdeal):
        return str(I)
    return "(" + ", ".join(str(g) for g in I.generators) + ")"


def ar_number(
    J: IdealLike,
    N: IdealLike,
    horizon: int = 12,
    ambient: Optional[IdealLike] = None,
    k_cap: Optional[int] = None,
) -> ARReport:
    """Window-verified Artin-Rees number of N inside the ambient module.

    Finds the least k with J^n * A  intersect  N  contained in
    J^(n-k) * N for every n in [k, k + horizon] (A = ambient, the whole
    ring when omitted), plus a witness n at which k-1 fails.  This is a
    desk-scale surrogate for the all-n definition, never a certificate.
    """
    if horizon < 1:
        raise ValueError("horizon must be positive")
    operands = [J, N] + ([ambient] if ambient is not None else [])
    ops, mapped = _dispatch(*operands)
    J, N = mapped[0], mapped[1]
    amb = mapped[2] if ambient is not None else ops.unit(J.ring)
    if not ops.contains(amb, N):
        raise ValueError("N must be contained in the ambient module")
    if k_cap is None:
        k_cap = horizon
    powers: Dict[int, IdealLike] = {0: ops.unit(J.ring)}

    def jpow(n: int) -> IdealLike:
        if n not in powers:
            powers[n] = ops.product(jpow(n - 1), J)
        return powers[n]

    lhs_cache: Dict[int, IdealLike] = {}

    def lhs(n: int) -> IdealLike:
        if n not in lhs_cache:
            lhs_cache[n] = ops.intersect(ops.product(jpow(n), amb), N)
        return lhs_cache[n]

    rhs_cache: Dict[int, IdealLike] = {}

    def rhs(m: int) -> IdealLike:
        if m not in rhs_cache:
            rhs_cache[m] = ops.product(jpow(m), N)
        return rhs_cache[m]

    prev_witness: Optional[int] = None
    for k in range(k_cap + 1):
        failure = None
        for n in range(k, k + horizon + 1):
            if not ops.contains(rhs(n - k), lhs(n)):
                failure = n
                break
        if failure is None:
            return ARReport(
                J, N, k, (k, k + horizon), "verified-on-window", prev_witness
            )
        prev_witness = failure
    raise WindowExhaustedError(
        "no stable Artin-Rees number found with k <= %d" % k_cap
    )


# ---------------------------------------------------------------------------
# Theorem-3.3-style intersection identity and linear growth

def _identity_holds(T: IdealLike, J: IdealLike, m: int) -> bool:
    """(J^m + T) intersect (T : J^inf) == T."""
    ops, (T, J) = _dispatch(T, J)
    sat = ops.saturate(T, J)
    lhs = ops.intersect(ops.sum(ops.power(J, m), T), sat)
    return ops.equal(lhs, T)


def product_of_powers(ideals: Sequence[IdealLike], n: Sequence[int]) -> IdealLike:
    if len(ideals) != len(n):
        raise ValueError("one exponent per ideal required")
    if any(e < 0 for e in n):
        raise ValueError("exponents must be nonnegative")
    ops, mapped = _dispatch(*ideals)
    out = ops.unit(mapped[0].ring)
    for I, e in zip(mapped, n):
        out = ops.product(out, ops.power(I, e))
    return out


def thm33_identity_check(
    ideals: Sequence[IdealLike], n: Sequence[int], J: IdealLike, k: int
) -> bool:
    """Check (J^(k|n|) + T) intersect (T : J^inf) == T for T the
    product of powers."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    T = product_of_powers(ideals, n)
    return _identity_holds(T, J, k * sum(n))


def min_power_for_primary(
    I: MonomialIdeal, P: MonomialPrime, cap: int = MIN_POWER_CAP
) -> int:
    """Least m >= 1 admitting a P-primary component that contains P^m.

    Minimal primes have a unique component, so the answer is direct
    containment of P^m in it.  For embedded primes the value is the
    constructive minimum from the growth argument: the least m making
    the intersection identity hold with J = P, not necessarily the
    minimum over every conceivable P-primary component.
    """
    ass = associated_primes(I)
    if P not in ass:
        raise ValueError("%s is not associated to %s" % (P, I))
    from .monomial import primary_decomposition

    if not any(Q != P and P.contains(Q) for Q in ass):
        # P minimal: its component is unique
        V = primary_decomposition(I).component_for(P)
        for m in range(1, cap + 1):
            if V.contains(P.power(m)):
                return m
        raise ScanCapError("no power up to %d fits in the component" % cap)
    sat = mono_saturate(I, P.as_monomial_ideal())[0]
    for m in range(1, cap + 1):
        lhs = mono_intersect(mono_sum(P.power(m), I), sat)
        if lhs == I:
            return m
    raise ScanCapError("no power up to %d makes the identity hold" % cap)


@dataclass(frozen=True)
class GrowthPoint:
    exponents: Tuple[int, ...]
    product: MonomialIdeal
    min_powers: Tuple[Tuple[MonomialPrime, int], ...]
    decomposition_ok: Optional[bool]  # None when the construction failed
    failure: Optional[str]

    def as_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "product": str(self.product),
            "min_powers": [[str(p), m] for p, m in self.min_powers],
            "decomposition_ok": self.decomposition_ok,
            "failure": self.failure,
        }


@dataclass(frozen=True)
class GrowthReport:
    ideals: Tuple[MonomialIdeal, ...]
    n_max: int
    points: Tuple[GrowthPoint, ...]
    k_empirical: int

    def as_dict(self) -> dict:
        return {
            "ideals": [str(I) for I in self.ideals],
            "n_max": self.n_max,
            "k_empirical": self.k_empirical,
            "points": [p.as_dict() for p in self.points],
        }


def linear_growth_experiment(
    ideals: Sequence[MonomialIdeal],
    n_max: int,
    cap: int = MIN_POWER_CAP,
) -> GrowthReport:
    """Scan the exponent grid, record per-prime minimal powers, fit the
    empirical linear bound, then realize a decomposition achieving it.

    Per grid point and associated prime P of the product ideal, the
    minimal power m_P is verified to succeed at m_P and fail at
    m_P - 1.  k_empirical = max over the grid of ceil(m_P / |n|).
    Per-point construction failures are recorded, not fatal.
    """
    if not ideals:
        raise ValueError("need at least one ideal")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    t = len(ideals)
    grid = [
        n
        for n in itertools.product(range(n_max + 1), repeat=t)
        if any(n)
    ]
    raw: List[Tuple[Tuple[int, ...], MonomialIdeal, List[Tuple[MonomialPrime, int]]]] = []
    k_emp = 1
    for n in grid:
        T = product_of_powers(ideals, n)
        if not T.is_proper():
            raise ValueError("product ideal at %r is not proper" % (n,))
        mins = []
        for P in associated_primes(T):
            m = min_power_for_primary(T, P, cap=cap)
            # the identity must fail one power below the recorded minimum
            if m > 1 and _identity_holds(T, P.as_monomial_ideal(), m - 1):
                raise ScanCapError(
                    "minimality of m_P(%r) at prime %s is inconsistent"
                    % (n, P)
                )
            mins.append((P, m))
            k_emp = max(k_emp, math.ceil(m / sum(n)))
        raw.append((n, T, mins))
    points = []
    for n, T, mins in raw:
        ok: Optional[bool] = None
        failure = None
        try:
            power = k_emp * sum(n)
            picks = {P: lambda_candidates(T, P, power) for P, _ in mins}
            if any(
                not Q.contains(P.power(power)) for P, Q in picks.items()
            ):
                raise ScanCapError("component misses the prime power bound")
            ok = check_compatibility(T, picks).compatible
        except Exception as e:  # recorded per point, never fatal
            failure = "%s: %s" % (type(e).__name__, e)
        points.append(GrowthPoint(n, T, tuple(mins), ok, failure))
    return GrowthReport(tuple(ideals), n_max, tuple(points), k_emp)
