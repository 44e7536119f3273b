"""Recursive-descent parser for polynomial expressions in z.

Grammar (whitespace allowed between tokens, offsets are 0-based):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := 'z' | rational | '(' expr ')' | '-' atom
    rational := int ('/' posint)?

There is no division operator: rationals are single literals like 3/4, and
exponents are literal nonnegative integers.  Note that '^' binds to a whole
atom, so "-z^2" is (-z)^2; write "-1*z^2" or use a binary minus for the
negated square.  Every parse error carries the byte offset it occurred at.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Poly


class PolyParseError(ValueError):
    """Parse failure with the 0-based byte offset of the offending input."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def parse_rational(text: str) -> Fraction:
    """Parse an optionally signed integer or p/q literal into a reduced value."""
    i = 0
    sign = 1
    if i < len(text) and text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    start = i
    while i < len(text) and text[i].isdigit():
        i += 1
    if i == start:
        raise PolyParseError("expected digits", i)
    numerator = int(text[start:i])
    denominator = 1
    if i < len(text) and text[i] == "/":
        i += 1
        dstart = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == dstart:
            raise PolyParseError("expected digits after '/'", i)
        denominator = int(text[dstart:i])
        if denominator == 0:
            raise PolyParseError("denominator must be nonzero", dstart)
    if i != len(text):
        raise PolyParseError(f"unexpected character {text[i]!r}", i)
    return Fraction(sign * numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical reduced form: "p/q", or just "p" when the denominator is 1."""
    return str(Fraction(value))


_Token = tuple[str, object, int]  # kind, value, offset


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c in " \t":
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            name = text[i:j]
            if name != "z":
                raise PolyParseError(f"unknown name {name!r}", i)
            tokens.append(("z", name, i))
            i = j
            continue
        if c in "+-*^()/":
            tokens.append(("sym", c, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {c!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def _at_symbol(self, chars: str) -> bool:
        tok = self._peek()
        return tok is not None and tok[0] == "sym" and tok[1] in chars

    def expr(self) -> Poly:
        p = self.term()
        while self._at_symbol("+-"):
            _, op, _ = self._next()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self._at_symbol("*"):
            self._next()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        base = self.atom()
        if self._at_symbol("^"):
            self._next()
            tok = self._peek()
            if tok is None or tok[0] != "int":
                where = tok[2] if tok else len(self.text)
                raise PolyParseError(
                    "exponent must be a nonnegative integer literal", where
                )
            self._next()
            return base ** tok[1]
        return base

    def atom(self) -> Poly:
        tok = self._next()
        kind, value, offset = tok
        if kind == "sym" and value == "-":
            return -self.atom()
        if kind == "sym" and value == "(":
            inner = self.expr()
            closing = self._peek()
            if closing is None or closing[0] != "sym" or closing[1] != ")":
                where = closing[2] if closing else len(self.text)
                raise PolyParseError("expected ')'", where)
            self._next()
            return inner
        if kind == "z":
            return Poly.z()
        if kind == "int":
            return Poly.constant(self._rational_tail(value, offset))
        raise PolyParseError(f"unexpected token {value!r}", offset)

    def _rational_tail(self, numerator: int, offset: int) -> Fraction:
        # consume "/ int" only when it really is a rational literal
        if (
            self._at_symbol("/")
            and self.pos + 1 < len(self.tokens)
            and self.tokens[self.pos + 1][0] == "int"
        ):
            self._next()
            _, denom, dpos = self._next()
            if denom == 0:
                raise PolyParseError("denominator must be nonzero", dpos)
            return Fraction(numerator, denom)
        return Fraction(numerator)


def parse_poly(text: str) -> Poly:
    """Parse an expression over z into a fully expanded polynomial."""
    parser = _Parser(text)
    poly = parser.expr()
    trailing = parser._peek()
    if trailing is not None:
        raise PolyParseError(f"unexpected token {trailing[1]!r}", trailing[2])
    return poly


def parse_factored_denominator(text: str) -> list[Fraction]:
    """Extract the nonzero roots from a denominator written in the explicit
    factored form  z*(z-r1)*(z-r2)*...  (a '+' inside a factor negates the
    root).  Exactly one bare z factor is required; no other shapes are
    accepted, because recovering rational roots from an expanded polynomial
    is out of scope.
    """
    parser = _Parser(text)
    roots: list[Fraction] = []
    bare_z = 0

    def unit() -> None:
        nonlocal bare_z
        tok = parser._next()
        kind, value, offset = tok
        if kind == "z":
            bare_z += 1
            return
        if kind == "sym" and value == "(":
            ztok = parser._next()
            if ztok[0] != "z":
                raise PolyParseError("expected 'z' inside factor", ztok[2])
            op = parser._next()
            if op[0] != "sym" or op[1] not in "+-":
                raise PolyParseError("expected '+' or '-' after 'z'", op[2])
            num = parser._next()
            if num[0] != "int":
                raise PolyParseError("expected a rational root", num[2])
            root = parser._rational_tail(num[1], num[2])
            closing = parser._next()
            if closing[0] != "sym" or closing[1] != ")":
                raise PolyParseError("expected ')'", closing[2])
            roots.append(-root if op[1] == "+" else root)
            return
        raise PolyParseError(
            "denominator must be factored as z*(z-r1)*(z-r2)*...", offset
        )

    unit()
    while parser._peek() is not None:
        star = parser._next()
        if star[0] != "sym" or star[1] != "*":
            raise PolyParseError("expected '*' between factors", star[2])
        unit()
    if bare_z != 1:
        raise PolyParseError(
            "denominator must contain exactly one bare z factor", 0
        )
    return roots
