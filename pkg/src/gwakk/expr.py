"""Expression syntax shared by scalars, polynomials and algebra elements.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := atom ('^' nat)?
    atom   := 'h' | 'x' | 'y' | 'q' | rational | '(' expr ')'

A rational literal is ``digits`` or ``digits/digits`` written without spaces,
so ``3/2`` is one token while ``3 / 2`` is a division. Juxtaposition is
multiplication and is never reordered: ``yx`` and ``xy`` are different words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping, Union

__all__ = [
    "Num", "Sym", "Neg", "Add", "Sub", "Mul", "Div", "Pow", "Expr",
    "ParseError", "parse", "to_source", "evaluate",
]


@dataclass(frozen=True)
class Num:
    value: Fraction

    def __repr__(self):
        return f"Num({self.value})"


@dataclass(frozen=True)
class Sym:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Sym, Neg, Add, Sub, Mul, Div, Pow]


class ParseError(ValueError):
    """Syntax error carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<sym>[A-Za-z])|(?P<op>[-+*/^()])"
)


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", *_locate(source, pos))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(source)))
    return tokens


def _locate(source: str, pos: int):
    line = source.count("\n", 0, pos) + 1
    col = pos - (source.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, source: str, symbols: frozenset):
        self.source = source
        self.symbols = symbols
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, *_locate(self.source, tok[2]))

    def expect(self, text):
        tok = self.peek()
        if tok[1] != text or tok[0] != "op":
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {text!r}, found {what}")
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return node

    def expr(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            node: Expr = Neg(self.term())
        else:
            node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _starts_factor(self, tok) -> bool:
        return tok[0] in ("num", "sym") or tok[:2] == ("op", "(")

    def term(self) -> Expr:
        node = self.factor()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.advance()
                node = Mul(node, self.factor())
            elif tok[:2] == ("op", "/"):
                self.advance()
                node = Div(node, self.factor())
            elif self._starts_factor(tok):
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.advance()
            tok = self.peek()
            if tok[0] != "num" or "/" in tok[1]:
                raise self.error("exponent must be a nonnegative integer")
            self.advance()
            return Pow(base, int(tok[1]))
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        kind, text, _ = tok
        if kind == "num":
            self.advance()
            if "/" in text:
                p, d = text.split("/")
                if int(d) == 0:
                    raise self.error("division by zero", tok)
                return Num(Fraction(int(p), int(d)))
            return Num(Fraction(int(text)))
        if kind == "sym":
            if text not in self.symbols:
                if text == "q":
                    raise self.error("'q' is only available in generic mode", tok)
                raise self.error(f"unknown symbol {text!r}", tok)
            self.advance()
            return Sym(text)
        if tok[:2] == ("op", "("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        what = "end of input" if kind == "end" else repr(text)
        raise self.error(f"unexpected {what}")


def parse(source: str, mode: str = "rational", symbols=("h", "x", "y")) -> Expr:
    """Parse ``source``; ``q`` is admitted only when ``mode == 'generic'``."""
    allowed = set(symbols)
    if mode == "generic":
        allowed.add("q")
    else:
        allowed.discard("q")
    return _Parser(source, frozenset(allowed)).parse()


# Printing. Precedences: sums 1, products 2, powers 3, atoms 4.

def _prec(e: Expr) -> int:
    if isinstance(e, (Add, Sub, Neg)):
        return 1
    if isinstance(e, (Mul, Div)):
        return 2
    if isinstance(e, Pow):
        return 3
    return 4


def _wrap(e: Expr, ok: bool) -> str:
    s = to_source(e)
    return s if ok else f"({s})"


def to_source(e: Expr) -> str:
    """Render ``e`` so that ``parse(to_source(e)) == e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _prec(e.operand) >= 2)
    if isinstance(e, (Add, Sub)):
        op = " + " if isinstance(e, Add) else " - "
        right_ok = _prec(e.right) >= 2
        return _wrap(e.left, True) + op + _wrap(e.right, right_ok)
    if isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else " / "
        return _wrap(e.left, _prec(e.left) >= 2) + op + _wrap(e.right, _prec(e.right) >= 3)
    if isinstance(e, Pow):
        base_ok = _prec(e.base) == 4 and not (
            isinstance(e.base, Num) and e.base.value.denominator != 1
        )
        return _wrap(e.base, base_ok) + f"^{e.exponent}"
    raise TypeError(f"not an expression: {e!r}")


def evaluate(
    e: Expr,
    atoms: Mapping[str, Any],
    number: Callable[[Fraction], Any],
    divide: Callable[[Any, Any], Any] | None = None,
):
    """Fold ``e`` left to right using the operators of the values in ``atoms``."""
    def go(node):
        if isinstance(node, Num):
            return number(node.value)
        if isinstance(node, Sym):
            return atoms[node.name]
        if isinstance(node, Neg):
            return -go(node.operand)
        if isinstance(node, Add):
            return go(node.left) + go(node.right)
        if isinstance(node, Sub):
            return go(node.left) - go(node.right)
        if isinstance(node, Mul):
            return go(node.left) * go(node.right)
        if isinstance(node, Div):
            if divide is None:
                raise ValueError("division is not supported here")
            return divide(go(node.left), go(node.right))
        if isinstance(node, Pow):
            base = go(node.base)
            result = number(Fraction(1))
            for _ in range(node.exponent):
                result = result * base
            return result
        raise TypeError(f"not an expression: {node!r}")

    return go(e)
