"""Parser for bundle expressions.

    expr := ['+'|'-'] term (('+'|'-') term)*
    term := [int '*'] atom ['^' int]
    atom := 'O' | 'O(' int ')' | 'O(' int ',' int ')' | 'S' | 'S(' int ')'
          | 'T4' | 'Om4' | 'O_H' | 'O_L' | 'k(p)'

Whitespace is ignored.  ``X^n`` is the n-fold direct sum.  Expressions using
O(a,b) live on Q2 (where k(p) is the Q2 skyscraper); all others on Q3.
"""

from __future__ import annotations

from .kclass import (
    CotangentP4, KClass2, KClass3, Line, Line2, Point2, Skyscraper, Spinor,
    TangentP4, TorsionH, TorsionL,
)


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: list[str]):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(
            f"parse error at position {pos}: expected {' or '.join(expected)}, found {found}"
        )


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, lit: str) -> bool:
        self._skip()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.accept(lit):
            self.fail([repr(lit)])

    def fail(self, expected):
        self._skip()
        raise ParseError(self.text, self.pos, expected)

    def integer(self, signed: bool = True) -> int:
        self._skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
            self._skip()
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.fail(["integer"])
        return int("".join(self.text[start:self.pos].split()))

    def expr(self):
        terms = []
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        terms.append((sign, *self.term()))
        while True:
            if self.accept("+"):
                terms.append((1, *self.term()))
            elif self.accept("-"):
                terms.append((-1, *self.term()))
            elif self.peek() == "":
                return terms
            else:
                self.fail(["'+'", "'-'", "end of input"])

    def term(self):
        mult = 1
        if self.peek().isdigit():
            mult = self.integer(signed=False)
            self.expect("*")
        atom = self.atom()
        if self.accept("^"):
            mult *= self.integer(signed=False)
        return mult, atom

    def atom(self):
        if self.accept("T4"):
            return TangentP4()
        if self.accept("Om4"):
            return CotangentP4()
        if self.accept("O_H"):
            return TorsionH()
        if self.accept("O_L"):
            return TorsionL()
        if self.accept("k(p)"):
            return Skyscraper()
        if self.accept("S"):
            if self.accept("("):
                t = self.integer()
                self.expect(")")
                return Spinor(t)
            return Spinor(0)
        if self.accept("O"):
            if self.accept("("):
                a = self.integer()
                if self.accept(","):
                    b = self.integer()
                    self.expect(")")
                    return Line2(a, b)
                self.expect(")")
                return Line(a)
            return Line(0)
        self.fail(["'O'", "'S'", "'T4'", "'Om4'", "'O_H'", "'O_L'", "'k(p)'"])


def parse(text: str) -> KClass3 | KClass2:
    """Parse a bundle expression into a K-class on Q3 or Q2."""
    p = _Parser(text)
    if p.peek() == "":
        p.fail(["term"])
    terms = p.expr()
    on_q2 = any(isinstance(a, Line2) for _, _, a in terms)
    if on_q2:
        bad = [a for _, _, a in terms if not isinstance(a, (Line2, Skyscraper))]
        if bad:
            raise ParseError(text, 0, [f"only O(a,b) and k(p) atoms in a Q2 expression, not {bad[0]}"])
        out = KClass2()
        for sign, n, a in terms:
            out = out + KClass2.of(Point2() if isinstance(a, Skyscraper) else a, sign * n)
        return out
    out = KClass3()
    for sign, n, a in terms:
        out = out + KClass3.of(a, sign * n)
    return out


def parse3(text: str) -> KClass3:
    x = parse(text)
    if not isinstance(x, KClass3):
        raise ParseError(text, 0, ["an expression on Q3"])
    return x
