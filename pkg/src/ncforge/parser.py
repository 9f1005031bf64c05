"""Text format for polynomials and presentation files.

Grammar (one relation per line after the header)::

    generators: a b c
    a^2 - 1
    c*a + bc + 2ab - 1/2        # '*' optional, juxtaposition multiplies
    (a + b)^3

Scalars are integers or ``p/q`` fractions; ``#`` starts a comment.  All
errors carry 1-based line and column positions.
"""

from __future__ import annotations

from .freealg import Alphabet, NcPoly
from .gbasis import Presentation


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Tokens:
    def __init__(self, text: str, line: int, alphabet: Alphabet):
        self.line = line
        self.toks = []        # (kind, value, col)
        i, n = 0, len(text)
        names = sorted(alphabet.names, key=len, reverse=True)
        while i < n:
            ch = text[i]
            if ch == "#":
                break
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("num", int(text[i:j]), col))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                hit = next((nm for nm in names if text.startswith(nm, i)), None)
                if hit is None:
                    j = i
                    while j < n and (text[j].isalnum() or text[j] == "_"):
                        j += 1
                    raise ParseError(f"unknown generator {text[i:j]!r}", line, col)
                self.toks.append(("gen", hit, col))
                i += len(hit)
                continue
            if ch in "+-*/^()":
                self.toks.append((ch, ch, col))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", line, col)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None, -1)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, kind):
        k, v, c = self.next()
        if k != kind:
            raise ParseError(f"expected {kind!r}, found {v!r}", self.line,
                             c if c > 0 else 1 + (self.toks[-1][2] if self.toks else 0))
        return v, c


class _Parser:
    """Recursive descent: expr > term (+/-) > product (juxtaposition) > power."""

    def __init__(self, tokens: _Tokens, alphabet: Alphabet, field):
        self.t = tokens
        self.alphabet = alphabet
        self.field = field

    def parse(self) -> NcPoly:
        p = self.expr()
        k, v, c = self.t.peek()
        if k is not None:
            raise ParseError(f"unexpected {v!r}", self.t.line, c)
        return p

    def expr(self) -> NcPoly:
        k, _, _ = self.t.peek()
        negate = False
        if k in ("+", "-"):
            self.t.next()
            negate = k == "-"
        p = self.product()
        if negate:
            p = -p
        while True:
            k, _, _ = self.t.peek()
            if k == "+":
                self.t.next()
                p = p + self.product()
            elif k == "-":
                self.t.next()
                p = p - self.product()
            else:
                return p

    def product(self) -> NcPoly:
        p = self.power()
        while True:
            k, _, _ = self.t.peek()
            if k == "*":
                self.t.next()
                p = p * self.power()
            elif k in ("num", "gen", "("):
                p = p * self.power()
            else:
                return p

    def power(self) -> NcPoly:
        p = self.atom()
        k, _, _ = self.t.peek()
        if k == "^":
            self.t.next()
            n, c = self.t.expect("num")
            return p ** n
        return p

    def atom(self) -> NcPoly:
        k, v, c = self.t.next()
        if k == "num":
            nk, _, _ = self.t.peek()
            if nk == "/":
                self.t.next()
                den, dc = self.t.expect("num")
                if den == 0:
                    raise ParseError("zero denominator", self.t.line, dc)
                F = self.field
                val = F.div(F.of(v), F.of(den))
                return NcPoly.scalar(self.alphabet, F, val)
            return NcPoly.scalar(self.alphabet, self.field, v)
        if k == "gen":
            return NcPoly.gen(self.alphabet, self.field, v)
        if k == "(":
            p = self.expr()
            self.t.expect(")")
            return p
        if k == "-":
            return -self.atom()
        raise ParseError(f"unexpected {v!r}" if k else "unexpected end of expression",
                         self.t.line, c if c > 0 else 1)


def parse_poly(text: str, alphabet: Alphabet, field, line: int = 1) -> NcPoly:
    return _Parser(_Tokens(text, line, alphabet), alphabet, field).parse()


def parse_presentation(text: str, field, label: str = "") -> Presentation:
    """Parse a presentation file: header line then one relation per line."""
    lines = text.splitlines()
    header_idx = None
    for idx, raw in enumerate(lines):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            header_idx = idx
            break
    if header_idx is None:
        raise ParseError("empty presentation file", 1, 1)
    header = lines[header_idx].split("#", 1)[0].strip()
    if not header.startswith("generators:"):
        raise ParseError("first line must be 'generators: <names>'", header_idx + 1, 1)
    names = header[len("generators:"):].split()
    if not names:
        raise ParseError("no generator names given", header_idx + 1, len("generators:") + 1)
    try:
        alphabet = Alphabet(names)
    except ValueError as exc:
        raise ParseError(str(exc), header_idx + 1, 1) from None
    relations = []
    for idx in range(header_idx + 1, len(lines)):
        stripped = lines[idx].split("#", 1)[0].strip()
        if not stripped:
            continue
        p = parse_poly(lines[idx], alphabet, field, line=idx + 1)
        if p.is_zero():
            raise ParseError("relation reduces to zero", idx + 1, 1)
        if not p.lead_word():
            raise ParseError("a relation must not be a nonzero scalar", idx + 1, 1)
        relations.append(p)
    if not relations:
        raise ParseError("presentation has no relations", len(lines), 1)
    return Presentation(alphabet, relations, label)
