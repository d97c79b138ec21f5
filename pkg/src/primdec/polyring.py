"""Exact sparse multivariate polynomial arithmetic over Q.

Monomials are plain tuples of nonnegative integer exponents, one entry
per ring variable.  Polynomials map monomials to nonzero Fraction
coefficients.  Everything is immutable after construction and safe to
share between threads.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple

LEX = "lex"
GREVLEX = "grevlex"
ORDERS = (LEX, GREVLEX)

#: exponents beyond this raise instead of silently growing
EXPONENT_CAP = 2**31 - 1

Monomial = Tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Operands live in rings with different numbers of variables."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no leading term."""


class ExponentOverflowError(OverflowError):
    """An exponent exceeded EXPONENT_CAP."""


class RingContext:
    """A fixed tuple of variable names plus the active monomial order."""

    __slots__ = ("variables", "order")

    def __init__(self, variables: Iterable[str], order: str = GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names: %r" % (variables,))
        if any(not v for v in variables):
            raise ValueError("empty variable name")
        if order not in ORDERS:
            raise ValueError("unknown monomial order %r" % (order,))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("RingContext is immutable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError("unknown variable %r" % (name,)) from None

    def sort_key(self, m: Monomial):
        return monomial_key(self.order)(m)

    def with_order(self, order: str) -> "RingContext":
        return RingContext(self.variables, order)

    def extend(self, name: str, front: bool = False) -> "RingContext":
        if name in self.variables:
            raise ValueError("variable %r already present" % (name,))
        if front:
            return RingContext((name,) + self.variables, self.order)
        return RingContext(self.variables + (name,), self.order)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return "RingContext(%r, order=%r)" % (list(self.variables), self.order)


# ---------------------------------------------------------------------------
# monomial helpers (monomials are bare tuples)

def _check_dims(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(
            "monomials of length %d and %d" % (len(a), len(b))
        )


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > EXPONENT_CAP for e in out):
        raise ExponentOverflowError("exponent exceeds cap %d" % EXPONENT_CAP)
    return out


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b componentwise."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a | b."""
    _check_dims(a, b)
    out = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError("monomial %r does not divide %r" % (a, b))
    return out


def mono_degree(m: Monomial) -> int:
    return sum(m)


def key_lex(m: Monomial):
    return m


def key_grevlex(m: Monomial):
    # degree first; ties broken by *smallest* trailing exponent winning
    return (sum(m), tuple(-e for e in reversed(m)))


def monomial_key(order: str):
    if order == LEX:
        return key_lex
    if order == GREVLEX:
        return key_grevlex
    raise ValueError("unknown monomial order %r" % (order,))


# ---------------------------------------------------------------------------

def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % (c,))


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: Mapping[Monomial, object] = ()):
        cleaned = {}
        n = ring.nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise DimensionMismatchError(
                    "monomial %r in %d-variable ring" % (m, n)
                )
            if any(e < 0 for e in m):
                raise ValueError("negative exponent in %r" % (m,))
            c = _coerce_coeff(c)
            if c == 0:
                continue
            if m in cleaned:
                raise ValueError("duplicate monomial %r" % (m,))
            cleaned[m] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: RingContext, c) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def one(cls, ring: RingContext) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: RingContext, name: str) -> "Polynomial":
        i = ring.var_index(name)
        exps = [0] * ring.nvars
        exps[i] = 1
        return cls(ring, {tuple(exps): 1})

    @classmethod
    def from_monomial(cls, ring: RingContext, m: Monomial, c=1) -> "Polynomial":
        return cls(ring, {tuple(m): c})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def leading_term(self, order: str | None = None):
        """(monomial, coefficient) maximal under the given (or ring) order."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        key = monomial_key(order or self.ring.order)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def sorted_terms(self, order: str | None = None):
        key = monomial_key(order or self.ring.order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "Polynomial") -> None:
        if self.ring.nvars != other.ring.nvars:
            raise DimensionMismatchError(
                "polynomials in %d- and %d-variable rings"
                % (self.ring.nvars, other.ring.nvars)
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._same_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_coeff(other)
            if c == 0:
                return Polynomial.zero(self.ring)
            return Polynomial(
                self.ring, {m: v * c for m, v in self.terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._same_ring(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def shift(self, m: Monomial, c=1) -> "Polynomial":
        """Multiply by the single term c * x^m."""
        c = _coerce_coeff(c)
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring, {mono_mul(t, m): v * c for t, v in self.terms.items()}
        )

    def monic(self, order: str | None = None) -> "Polynomial":
        if self.is_zero():
            return self
        _, c = self.leading_term(order)
        return self * (Fraction(1) / c)

    # -- equality / text ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring.variables == other.ring.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return "Polynomial(%s)" % format_polynomial(self)


def format_monomial(ring: RingContext, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 0:
            continue
        parts.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: str | None = None) -> str:
    """Canonical text: terms in decreasing order, reduced fractions."""
    if f.is_zero():
        return "0"
    pieces = []
    for i, (m, c) in enumerate(f.sorted_terms(order)):
        mono = format_monomial(f.ring, m)
        neg = c < 0
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = "%s*%s" % (a, mono)
        if i == 0:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
