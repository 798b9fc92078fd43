"""Recursive-descent parser for the assertion language.

Grammar (whitespace-insensitive)::

    document  := claim | sequent | junction
    claim     := assertion "iff" junction
    sequent   := props? "=>" props?
    junction  := assertion ("and" assertion)*
    assertion := props? "|-" degree? prop
    props     := prop ("," prop)*
    degree    := "^{" complex "}"
    prop      := qterm ("(" complex "&_" complex ")" qterm)*
    qterm     := primary ("&" primary)*
    primary   := atom | "(" prop ")"
    atom      := "p0" | "p1" | identifier | "p{" complex "}"
    complex   := real (("+" | "-") real "i")? | real "@" real

``&`` binds tighter than the quantum connective and both associate to the
left. Spans are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..complexvalue import ComplexValue
from ..errors import ParseError
from ..logic import (Assertion, ClassicalAnd, ClassicalAtom, MetaJunction, QuantumAnd,
                     QuantumAtom, ReflectionClaim, Sequent)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")


_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN = re.compile(
    rf"""
    (?P<ws>\s+)
  | (?P<turnstile>\|-|⊢)
  | (?P<arrow>=>)
  | (?P<qamp>&_)
  | (?P<amp>&)
  | (?P<caret>\^\{{)
  | (?P<pbrace>p\{{)
  | (?P<lbrace>\{{)
  | (?P<rbrace>\}})
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<comma>,)
  | (?P<at>@)
  | (?P<real>{_REAL})
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sign>[+-])
    """,
    re.VERBOSE,
)

KEYWORDS = {"and", "iff"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int  # character offsets; converted to bytes for spans
    end: int


def tokenize(text: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_span(text, pos, pos + 1))
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "ident" and value in KEYWORDS:
                kind = value
            tokens.append(Token(kind, value, m.start(), m.end()))
        pos = m.end()
    tokens.append(Token("eof", "", len(text), len(text)))
    return tokens


def _byte_span(text: str, start: int, end: int) -> SourceSpan:
    b = len(text[:start].encode("utf-8"))
    return SourceSpan(b, b + len(text[start:end].encode("utf-8")))


_DESCRIBE = {
    "turnstile": "'|-'", "arrow": "'=>'", "qamp": "'&_'", "amp": "'&'", "caret": "'^{'",
    "pbrace": "'p{'", "rbrace": "'}'", "lparen": "'('", "rparen": "')'", "comma": "','",
    "at": "'@'", "real": "number", "ident": "atom", "sign": "'+' or '-'", "and": "'and'",
    "iff": "'iff'", "eof": "end of input", "i": "'i'",
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i = min(self.i + 1, len(self.toks) - 1)
        return t

    def span(self, start: int, end: int | None = None) -> SourceSpan:
        end = self.toks[self.i - 1].end if end is None else end
        return _byte_span(self.text, start, max(start, end))

    def fail(self, *expected: str):
        t = self.tok
        what = "end of input" if t.kind == "eof" else f"{t.text!r}"
        raise ParseError(f"unexpected {what}", _byte_span(self.text, t.start, t.end),
                         [_DESCRIBE.get(e, e) for e in expected])

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail(kind)
        return self.advance()

    # document level

    def document(self):
        kinds = {t.kind for t in self.toks}
        if "arrow" in kinds:
            node = self.sequent()
        else:
            start = self.tok.start
            first = self.assertion()
            if self.tok.kind == "iff":
                self.advance()
                meta = self.junction()
                node = ReflectionClaim(first, meta, span=self.span(start))
            else:
                node = self.junction(first, start)
        if self.tok.kind != "eof":
            self.fail("and", "iff", "eof")
        return node

    def sequent(self) -> Sequent:
        start = self.tok.start
        left = () if self.tok.kind == "arrow" else self.props()
        self.expect("arrow")
        right = () if self.tok.kind == "eof" else self.props()
        return Sequent(left, right, span=self.span(start))

    def junction(self, first: Assertion | None = None, start: int | None = None) -> MetaJunction:
        if first is None:
            start = self.tok.start
            first = self.assertion()
        parts = [first]
        while self.tok.kind == "and":
            self.advance()
            parts.append(self.assertion())
        return MetaJunction(tuple(parts), span=self.span(start))

    def assertion(self) -> Assertion:
        start = self.tok.start
        context = () if self.tok.kind == "turnstile" else self.props()
        if self.tok.kind != "turnstile":
            self.fail("turnstile", "comma")
        self.advance()
        degree = None
        if self.tok.kind == "caret":
            self.advance()
            degree = self.complex_literal()
            self.expect("rbrace")
        prop = self.prop()
        return Assertion(prop, degree, context, span=self.span(start))

    def props(self) -> tuple:
        out = [self.prop()]
        while self.tok.kind == "comma":
            self.advance()
            out.append(self.prop())
        return tuple(out)

    # propositions

    def prop(self):
        start = self.tok.start
        left = self.qterm()
        while self.tok.kind == "lparen":
            self.advance()
            a = self.complex_literal()
            self.expect("qamp")
            b = self.complex_literal()
            self.expect("rparen")
            right = self.qterm()
            left = QuantumAnd(a, b, left, right, span=self.span(start))
        return left

    def qterm(self):
        start = self.tok.start
        left = self.primary()
        while self.tok.kind == "amp":
            self.advance()
            right = self.primary()
            left = ClassicalAnd(left, right, span=self.span(start))
        return left

    def primary(self):
        t = self.tok
        if t.kind == "lparen":
            self.advance()
            inner = self.prop()
            self.expect("rparen")
            return inner
        if t.kind == "pbrace":
            self.advance()
            label = self.complex_literal()
            self.expect("rbrace")
            return QuantumAtom(label, span=self.span(t.start))
        if t.kind == "ident":
            self.advance()
            return ClassicalAtom(t.text, span=self.span(t.start))
        self.fail("ident", "pbrace", "lparen")

    # numbers

    def real(self) -> float:
        if self.tok.kind != "real":
            self.fail("real")
        return float(self.advance().text)

    def complex_literal(self) -> ComplexValue:
        re_part = self.real()
        t = self.tok
        if t.kind == "at":
            self.advance()
            if re_part < 0:
                raise ParseError("polar modulus must be non-negative",
                                 _byte_span(self.text, t.start, t.end))
            return ComplexValue.from_polar(re_part, self.real())
        # "0.5-0.5i" lexes as real(0.5) real(-0.5) ident(i); "0.5 - 0.5i" as real sign real ident
        if t.kind == "sign" or (t.kind == "real" and t.text[0] in "+-"):
            sign = 1.0
            if t.kind == "sign":
                sign = -1.0 if t.text == "-" else 1.0
                self.advance()
                if self.tok.kind != "real" or self.tok.text[0] in "+-":
                    self.fail("real")
            im = sign * self.real()
            if self.tok.kind != "ident" or self.tok.text != "i":
                self.fail("i")
            self.advance()
            return ComplexValue(re_part, im)
        return ComplexValue(re_part, 0.0)


def parse(text: str):
    """Parse a metajunction, a sequent (``G => D``) or a claim ``A iff J``."""
    return _Parser(text).document()


def parse_prop(text: str):
    p = _Parser(text)
    node = p.prop()
    if p.tok.kind != "eof":
        p.fail("amp", "lparen", "eof")
    return node


def parse_complex(text: str) -> ComplexValue:
    p = _Parser(text)
    z = p.complex_literal()
    if p.tok.kind != "eof":
        p.fail("eof")
    return z
