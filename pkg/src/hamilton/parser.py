"""Expression language for algebra elements and polynomial literals.

Precedence, tightest first: postfix ``'`` (adjoint), then ``^``, then unary
minus, then multiplication (``*``, ``.`` or juxtaposition), then ``+``/``-``.
So ``-t^2`` means ``-(t^2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import HamiltonError
from .field import Field, FieldValue

GRAMMAR = """\
expr    := term (("+" | "-") term)*
term    := prefix (("*" | ".")? prefix)*      juxtaposition multiplies
prefix  := "-" prefix | power
power   := postfix ("^" INT)*
postfix := atom "'"*                          ' is the adjoint
atom    := NUMBER | "a" | "b" | "w" | "(" expr ")" | "()"
NUMBER  := INT ("/" INT)?
polynomial literals use the same grammar with the single variable "t"
(no adjoint), e.g. t^2-t, t^2+1, 3/2*t-1"""


class ParseError(HamiltonError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.reason = message


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: FieldValue


@dataclass(frozen=True)
class Gen:
    name: str  # "a", "b", "w" or "t"


@dataclass(frozen=True)
class Star:
    arg: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Scalar, Gen, Star, Neg, Add, Mul, Pow]

# -- lexer -------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z])|(?P<op>\(\s*\)|[-+*.^'()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        tok = m.group(kind)
        col = m.start(kind) + 1
        if kind == "op" and tok.startswith("("):
            tok = "()" if len(tok) > 1 else "("
        out.append(Token(kind, tok, col))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


# -- parser -----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, field: Field, variables: tuple[str, ...], allow_star: bool):
        self.tokens = tokenize(text)
        self.i = 0
        self.field = field
        self.variables = variables
        self.allow_star = allow_star

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> None:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.column)
        self.advance()

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.column)
        e = self.expr()
        if self.tok.kind != "end":
            if self.tok.text == ")":
                raise ParseError("unbalanced ')'", self.tok.column)
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.column)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            e = Add(e, rhs if op == "+" else Neg(rhs))
        return e

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or t.text in ("(", "()")

    def term(self) -> Expr:
        e = self.prefix()
        while True:
            if self.tok.text in ("*", "."):
                self.advance()
                e = Mul(e, self.prefix())
            elif self._starts_atom():
                e = Mul(e, self.power())
            else:
                return e

    def power(self) -> Expr:
        e = self.postfix()
        while self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "num" or "/" in t.text:
                raise ParseError("exponent must be a nonnegative integer", t.column)
            self.advance()
            e = Pow(e, int(t.text))
        return e

    def prefix(self) -> Expr:
        if self.tok.text == "-":
            self.advance()
            return Neg(self.prefix())
        return self.power()

    def postfix(self) -> Expr:
        e = self.atom()
        while self.tok.text == "'":
            if not self.allow_star:
                raise ParseError("adjoint is not allowed here", self.tok.column)
            self.advance()
            e = Star(e)
        return e

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            text = t.text.replace(" ", "")
            try:
                value = FieldValue(self.field, self.field.coerce(text))
            except ZeroDivisionError:
                raise ParseError(f"malformed scalar {text!r}", t.column) from None
            return Scalar(value)
        if t.kind == "name":
            if t.text not in self.variables:
                raise ParseError(f"unknown symbol {t.text!r}", t.column)
            self.advance()
            return Gen(t.text)
        if t.text == "()":
            self.advance()
            return Scalar(FieldValue(self.field, self.field.one))
        if t.text == "(":
            self.advance()
            e = self.expr()
            if self.tok.text != ")":
                raise ParseError("unbalanced '('", t.column)
            self.advance()
            return e
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.column)


def parse(text: str, field: Field) -> Expr:
    """Parse an algebra expression in ``a``, ``b`` and ``w``."""
    return _Parser(text, field, ("a", "b", "w"), True).parse()


def parse_poly_expr(text: str, field: Field) -> Expr:
    return _Parser(text, field, ("t",), False).parse()


# -- evaluation ------------------------------------------------------------------

def _fold(e: Expr, leaf_scalar, leaf_gen, star=None):
    def go(node):
        if isinstance(node, Scalar):
            return leaf_scalar(node.value)
        if isinstance(node, Gen):
            return leaf_gen(node.name)
        if isinstance(node, Neg):
            return -go(node.arg)
        if isinstance(node, Add):
            return go(node.left) + go(node.right)
        if isinstance(node, Mul):
            return go(node.left) * go(node.right)
        if isinstance(node, Pow):
            return go(node.base) ** node.exponent
        if isinstance(node, Star):
            return star(go(node.arg))
        raise TypeError(f"unknown node {node!r}")

    return go(e)


def evaluate(e: Expr, params):
    """Evaluate to a :class:`~hamilton.core.HamiltonElement`."""
    from .core import HamiltonElement, star

    return _fold(e, lambda v: HamiltonElement.scalar(params, v),
                 lambda n: HamiltonElement.generator(params, n), star)


def evaluate_word(e: Expr, params):
    """Evaluate to a :class:`~hamilton.words.WordExpr`."""
    from .words import WordExpr

    return _fold(e, lambda v: WordExpr.scalar(params, v),
                 lambda n: WordExpr.generator(params, n), lambda w: w.star())


def parse_element(text: str, params):
    return evaluate(parse(text, params.field), params)


def parse_word(text: str, params):
    return evaluate_word(parse(text, params.field), params)


def parse_poly(text: str, field: Field):
    """Parse a polynomial literal such as ``t^2-t``."""
    from .poly import CenterPoly

    e = parse_poly_expr(text, field)
    return _fold(e, lambda v: CenterPoly.constant(field, v), lambda n: CenterPoly.variable(field))
