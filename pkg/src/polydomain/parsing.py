"""Parser for the linear-combination syntax used on the command line.

Grammar::

    expr     := [sign] term (sign term)*
    sign     := '+' | '-'
    term     := [rational '*'] word
    word     := '1' | letter+
    letter   := 'x0' | 'x1' | 'y' positive-integer
    rational := integer ['/' positive-integer]

Letters are separated by whitespace.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ncalg import NCPolynomial
from .rings import QQ
from .words import X, Y, Word

_TOKEN = re.compile(
    r"\s*(?:(?P<letter>[xy]\d+)|(?P<num>\d+(?:/\d+)?)|(?P<op>[+\-*])|(?P<bad>\S))"
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}; expected a letter, number or operator", start, text)
        if kind == "letter":
            alpha, idx = value[0], int(value[1:])
            if alpha == "x" and idx not in (0, 1):
                raise ParseError(f"X-letters are x0 and x1, got {value!r}", start, text)
            if alpha == "y" and idx < 1:
                raise ParseError(f"Y-letter indices start at 1, got {value!r}", start, text)
        tokens.append((kind, value, start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: str | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind is None else repr(value)
        raise ParseError(f"expected {expected}, found {found}", pos, self.text)

    def _set_alphabet(self, a: str, pos: int):
        if self.alphabet is None:
            self.alphabet = a
        elif self.alphabet != a:
            raise ParseError(f"letter from alphabet {a} mixed into a {self.alphabet}-expression", pos, self.text)

    def word(self) -> tuple[int, ...] | None:
        kind, value, pos = self.peek()
        if kind == "num" and value == "1":
            self.take()
            return ()
        letters = []
        while self.peek()[0] == "letter":
            _, value, pos = self.take()
            self._set_alphabet(X if value[0] == "x" else Y, pos)
            letters.append(int(value[1:]))
        if not letters:
            self.fail("a word ('1' or letters)")
        return tuple(letters)

    def term(self):
        kind, value, pos = self.peek()
        coeff = Fraction(1)
        if kind == "num":
            nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else (None, None, None)
            if nxt[0] == "op" and nxt[1] == "*":
                den = value.split("/")
                if len(den) == 2 and int(den[1]) == 0:
                    raise ParseError("zero denominator", pos, self.text)
                coeff = Fraction(value)
                self.take()
                self.take()
            elif value != "1":
                self.take()
                self.fail("'*' after a coefficient")
        return coeff, self.word()

    def expr(self):
        terms = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.take()
        c, w = self.term()
        terms.append((sign * c, w))
        while self.peek()[0] is not None:
            kind, value, _ = self.peek()
            if kind != "op" or value not in "+-":
                self.fail("'+' or '-'")
            self.take()
            c, w = self.term()
            terms.append(((-1 if value == "-" else 1) * c, w))
        return terms


def parse_expression(text: str, alphabet: str | None = None) -> NCPolynomial:
    """Parse e.g. ``"3/2*y2 y1 + y4 - 1"`` into an exact rational polynomial."""
    if not text.strip():
        raise ParseError("empty expression", 0, text)
    p = _Parser(text, alphabet)
    terms = p.expr()
    alpha = p.alphabet or Y
    return NCPolynomial([(Word(alpha, w), c) for c, w in terms], alpha, QQ)


def parse_word_literal(text: str, alphabet: str | None = None) -> Word:
    p = _Parser(text, alphabet)
    if not p.tokens:
        raise ParseError("empty word", 0, text)
    letters = p.word()
    if p.peek()[0] is not None:
        p.fail("end of word")
    return Word(p.alphabet or Y, letters)
