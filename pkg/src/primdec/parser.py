"""Parser for the ideal input language.

Grammar (whitespace-insensitive)::

    input    := [ringdecl [";"]] ideal
    ringdecl := "ring" name ("," name)*
    ideal    := "ideal" "(" expr ("," expr)* ")"
    expr     := ["+"|"-"] term (("+"|"-") term)*
    term     := factor ("*" factor)*
    factor   := base ["^" integer]
    base     := number | name | "(" expr ")"
    number   := integer ["/" integer]

Variables come from the ring declaration when present, otherwise they
are inferred in order of first appearance.  Errors carry line/column.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polyring import GREVLEX, Polynomial, RingContext
from .groebner import Ideal


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # name | int | punct | end
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<punct>[-+*^/(),;]))"
)


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            line = text.count("\n", 0, bad_at) + 1
            col = bad_at - (text.rfind("\n", 0, bad_at) + 1) + 1
            raise ParseError("unexpected character %r" % text[bad_at], line, col)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        line = text.count("\n", 0, start) + 1
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        for kind in ("name", "int", "punct"):
            if m.group(kind) is not None:
                tokens.append(Token(kind, m.group(kind), line, col))
                break
        pos = m.end()
    last_line = text.count("\n") + 1
    tokens.append(Token("end", "", last_line, len(text) - (text.rfind("\n") + 1) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token], ring: RingContext):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.text != text:
            self.fail("expected %r" % text, t)
        return self.next()

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    # -- grammar ------------------------------------------------------------

    def parse_ideal(self) -> List[Polynomial]:
        t = self.peek()
        if not (t.kind == "name" and t.text == "ideal"):
            self.fail("expected 'ideal'")
        self.next()
        self.expect("(")
        gens = [self.parse_expr()]
        while self.peek().text == ",":
            self.next()
            gens.append(self.parse_expr())
        self.expect(")")
        if self.peek().kind != "end":
            self.fail("trailing input after ideal")
        return gens

    def parse_expr(self) -> Polynomial:
        sign = 1
        if self.peek().text in ("+", "-"):
            if self.next().text == "-":
                sign = -1
        acc = self.parse_term() * sign
        while self.peek().text in ("+", "-"):
            op = self.next().text
            term = self.parse_term()
            acc = acc + term if op == "+" else acc - term
        return acc

    def parse_term(self) -> Polynomial:
        acc = self.parse_factor()
        while self.peek().text == "*":
            self.next()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        if self.peek().text == "^":
            caret = self.next()
            t = self.peek()
            if t.kind != "int":
                self.fail("malformed exponent", t)
            self.next()
            return base ** int(t.text)
        return base

    def parse_base(self) -> Polynomial:
        t = self.peek()
        if t.text == "(":
            self.next()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if t.kind == "int":
            self.next()
            num = int(t.text)
            if self.peek().text == "/":
                self.next()
                d = self.peek()
                if d.kind != "int":
                    self.fail("malformed fraction", d)
                self.next()
                if int(d.text) == 0:
                    self.fail("zero denominator", d)
                return Polynomial.constant(self.ring, Fraction(num, int(d.text)))
            return Polynomial.constant(self.ring, num)
        if t.kind == "name":
            self.next()
            try:
                return Polynomial.variable(self.ring, t.text)
            except KeyError:
                self.fail("unknown variable %r" % t.text, t)
        self.fail("expected a number, variable or parenthesized expression", t)


def _split_ring_decl(tokens: List[Token]) -> Tuple[Optional[List[str]], List[Token]]:
    if tokens and tokens[0].kind == "name" and tokens[0].text == "ring":
        i = 1
        names = []
        while True:
            if i >= len(tokens) or tokens[i].kind != "name":
                raise ParseError(
                    "expected a variable name in ring declaration",
                    tokens[min(i, len(tokens) - 1)].line,
                    tokens[min(i, len(tokens) - 1)].col,
                )
            names.append(tokens[i].text)
            i += 1
            if i < len(tokens) and tokens[i].text == ",":
                i += 1
                continue
            break
        if i < len(tokens) and tokens[i].text == ";":
            i += 1
        seen = set()
        for n in names:
            if n in seen:
                raise ParseError("duplicate variable %r" % n, tokens[0].line, tokens[0].col)
            seen.add(n)
        return names, tokens[i:]
    return None, tokens


def _inferred_variables(tokens: List[Token]) -> List[str]:
    names = []
    for i, t in enumerate(tokens):
        if t.kind == "name" and t.text != "ideal" and t.text not in names:
            names.append(t.text)
    return names


def parse_ideals(
    texts: Sequence[str], order: str = GREVLEX
) -> Tuple[RingContext, List[Ideal]]:
    """Parse several ideal literals into one shared ring.

    A ring declaration in any input fixes the variables (and their
    precedence); otherwise variables are inferred across all inputs in
    order of first appearance.
    """
    tokenized = [tokenize(t) for t in texts]
    declared: Optional[List[str]] = None
    bodies = []
    for toks in tokenized:
        decl, rest = _split_ring_decl(toks)
        if decl is not None:
            if declared is not None and declared != decl:
                raise ParseError(
                    "conflicting ring declarations", toks[0].line, toks[0].col
                )
            declared = decl
        bodies.append(rest)
    if declared is None:
        declared = []
        for toks in bodies:
            for name in _inferred_variables(toks):
                if name not in declared:
                    declared.append(name)
        if not declared:
            raise ParseError("no variables declared or used", 1, 1)
    ring = RingContext(declared, order)
    ideals = []
    for toks in bodies:
        gens = _Parser(toks, ring).parse_ideal()
        ideals.append(Ideal(ring, gens))
    return ring, ideals


def parse_ideal(text: str, order: str = GREVLEX) -> Ideal:
    return parse_ideals([text], order)[1][0]


def format_ideal(I: Ideal, include_ring: bool = True) -> str:
    """Canonical text; parses back to the identical ideal."""
    body = "ideal(%s)" % ", ".join(str(g) for g in I.generators)
    if not I.generators:
        body = "ideal(0)"
    if include_ring:
        return "ring %s; %s" % (", ".join(I.ring.variables), body)
    return body
