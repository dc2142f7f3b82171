"""Expression language for algebra elements.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``; ``*``, ``+`` and binary ``-`` associate to the left)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | INT "/" INT | "q" | "E" | "F" | "K" | "Kinv" | "C"
            | "e" "(" INT ")" | "w" "(" SIGN "," INT ")" | "phi" "(" SIGN "," INT ")"
            | "(" expr ")"

Negative exponents are allowed only on invertible scalars and on
K-monomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Union

from .algebra import AlgebraElement, generators
from .center import canonical_central_elements, casimir, phi
from .cyclotomic import field
from .errors import DomainError, ParseError, RangeError

__all__ = [
    "Num",
    "Sym",
    "Indexed",
    "Neg",
    "BinOp",
    "Pow",
    "Expr",
    "parse_element",
    "eval_expr",
    "evaluate",
    "to_source",
    "element_to_text",
]


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: tuple = dc_field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Sym:
    name: str  # q, E, F, K, Kinv, C
    pos: tuple = dc_field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Indexed:
    name: str  # e, w, phi
    sign: int | None
    index: int
    pos: tuple = dc_field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: tuple = dc_field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # + - *
    left: "Expr"
    right: "Expr"
    pos: tuple = dc_field(default=(1, 1), compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: tuple = dc_field(default=(1, 1), compare=False)


Expr = Union[Num, Sym, Indexed, Neg, BinOp, Pow]

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),/])"
)
_SYMBOLS = {"q", "E", "F", "K", "Kinv", "C"}
_INDEXED = {"e", "w", "phi"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    out = []
    line, col, i = 1, 1, 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if m is None:
            raise ParseError(f"unexpected character {src[i]!r}", line, col)
        text = m.group()
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, text, line, col))
        for ch in text:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i = m.end()
    out.append(_Tok("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def _err(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.cur
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{msg}, found {found}", tok.line, tok.col)

    def accept(self, text: str) -> _Tok | None:
        if self.cur.kind == "op" and self.cur.text == text:
            tok = self.cur
            self.i += 1
            return tok
        return None

    def expect(self, text: str) -> _Tok:
        tok = self.accept(text)
        if tok is None:
            self._err(f"expected {text!r}")
        return tok

    def expect_int(self) -> int:
        if self.cur.kind != "int":
            self._err("expected an integer")
        v = int(self.cur.text)
        self.i += 1
        return v

    def expect_sign(self) -> int:
        if self.accept("+"):
            return 1
        if self.accept("-"):
            return -1
        self._err("expected a sign '+' or '-'")

    def parse(self) -> Expr:
        if self.cur.kind == "eof":
            self._err("expected an expression")
        e = self.expr()
        if self.cur.kind != "eof":
            self._err("unexpected token")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            tok = self.cur
            self.i += 1
            left = BinOp(tok.text, left, self.term(), (tok.line, tok.col))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while (tok := self.accept("*")) is not None:
            left = BinOp("*", left, self.unary(), (tok.line, tok.col))
        return left

    def unary(self) -> Expr:
        tok = self.accept("-")
        if tok is not None:
            return Neg(self.unary(), (tok.line, tok.col))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        tok = self.accept("^")
        if tok is None:
            return base
        sign = -1 if self.accept("-") else 1
        return Pow(base, sign * self.expect_int(), (tok.line, tok.col))

    def atom(self) -> Expr:
        tok = self.cur
        pos = (tok.line, tok.col)
        if tok.kind == "int":
            self.i += 1
            value = Fraction(int(tok.text))
            if self.accept("/"):
                den = self.expect_int()
                if den == 0:
                    raise ParseError("zero denominator in rational literal", *pos)
                value = value / den
            return Num(value, pos)
        if tok.kind == "name":
            self.i += 1
            if tok.text in _SYMBOLS:
                return Sym(tok.text, pos)
            if tok.text in _INDEXED:
                self.expect("(")
                sign = None
                if tok.text != "e":
                    sign = self.expect_sign()
                    self.expect(",")
                idx = self.expect_int()
                self.expect(")")
                return Indexed(tok.text, sign, idx, pos)
            raise ParseError(f"unknown identifier {tok.text!r}", *pos)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        self._err("expected a number, a name or '('")


def parse_element(src: str, p: int | None = None) -> Expr:
    """Parse expression source into an AST (``p`` is accepted for symmetry with eval)."""
    if p is not None and p < 2:
        raise RangeError(f"p must be >= 2, got {p}")
    return _Parser(src).parse()


# printing -----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    return 5


def to_source(e: Expr) -> str:
    """Print an AST so that parsing the result gives back the same AST."""
    if isinstance(e, Num):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Indexed):
        if e.name == "e":
            return f"e({e.index})"
        return f"{e.name}({'+' if e.sign > 0 else '-'},{e.index})"
    if isinstance(e, Neg):
        inner = to_source(e.operand)
        if _prec(e.operand) < 3:
            inner = f"({inner})"
        return "-" + inner
    if isinstance(e, Pow):
        base = to_source(e.base)
        if _prec(e.base) < 5 or (isinstance(e.base, Num) and e.base.value.denominator != 1):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    p = _PREC[e.op]
    left = to_source(e.left)
    if _prec(e.left) < p:
        left = f"({left})"
    right = to_source(e.right)
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {e.op} {right}"


# evaluation ---------------------------------------------------------------


def _at(e: Expr) -> str:
    return f"line {e.pos[0]}, column {e.pos[1]}"


def _invert(x: AlgebraElement, where: Expr) -> AlgebraElement:
    p = x.p
    if len(x.terms) == 1:
        ((m, n, l), c), = x.terms.items()
        if m == 0 and n == 0:
            return AlgebraElement(p, {(0, 0, (-l) % (2 * p)): c.inverse()})
    raise DomainError(f"{_at(where)}: negative powers need an invertible scalar or a K-monomial")


def eval_expr(e: Expr, p: int) -> AlgebraElement:
    """Evaluate an AST to an element of the algebra at the given p."""
    if p < 2:
        raise RangeError(f"p must be >= 2, got {p}")
    fld = field(p)
    if isinstance(e, Num):
        return AlgebraElement.scalar(p, e.value)
    if isinstance(e, Sym):
        if e.name == "q":
            return AlgebraElement.scalar(p, fld.q)
        if e.name == "C":
            return casimir(p)
        return generators(p)[e.name]
    if isinstance(e, Indexed):
        try:
            if e.name == "phi":
                return phi(p, e.sign, e.index)
            ce = canonical_central_elements(p)
            if e.name == "e":
                if not 0 <= e.index <= p:
                    raise RangeError(f"e index must lie in [0, {p}], got {e.index}")
                return ce.e[e.index]
            if not 1 <= e.index <= p - 1:
                raise RangeError(f"w index must lie in [1, {p - 1}], got {e.index}")
            return (ce.w_plus if e.sign > 0 else ce.w_minus)[e.index]
        except RangeError as exc:
            raise RangeError(f"{_at(e)}: {exc}") from None
    if isinstance(e, Neg):
        return -eval_expr(e.operand, p)
    if isinstance(e, Pow):
        base = eval_expr(e.base, p)
        if e.exponent < 0:
            base = _invert(base, e)
        return base ** abs(e.exponent)
    left, right = eval_expr(e.left, p), eval_expr(e.right, p)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    return left * right


def evaluate(src: str, p: int) -> AlgebraElement:
    return eval_expr(parse_element(src, p), p)


def element_to_text(x: AlgebraElement) -> str:
    """Human-readable normal form, e.g. ``(q)*E*K^2 + (-1)*F``."""
    if not x.terms:
        return "0"
    parts = []
    for (m, n, l), c in sorted(x.terms.items()):
        word = [f"{g}^{k}" if k > 1 else g for g, k in (("E", m), ("F", n), ("K", l)) if k]
        parts.append(f"({c})" + "".join("*" + w for w in word))
    return " + ".join(parts)
