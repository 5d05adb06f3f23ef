"""A tiny arithmetic language for coefficients and forcing terms.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?
    atom   := number | 't' | name '(' expr (',' expr)* ')' | '(' expr ')'

``^`` is right-associative and binds tighter than a leading minus, so
``-2^t`` is ``-(2^t)`` while ``2^-(t+1)`` is ``2^(-(t+1))``. The only
functions are ``gamma(x)``, ``rising(x, a)`` and ``hmono(mu, x)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from fracnabla.errors import DomainError
from fracnabla.specfun import gamma, rising_factorial, taylor_monomial

__all__ = [
    "BinOp",
    "Call",
    "Expression",
    "ExpressionError",
    "FUNCTIONS",
    "Neg",
    "Num",
    "Var",
    "evaluate",
    "format_expression",
    "parse_expression",
]


class ExpressionError(ValueError):
    """Syntax or evaluation error; :attr:`offset` is the byte offset of a
    syntax error in the source text."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Expression


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expression
    right: Expression


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expression, ...]


Expression = Union[Num, Var, Neg, BinOp, Call]


def _hmono(mu: float, x: float) -> float:
    return taylor_monomial(mu, x, 0.0)


FUNCTIONS = {
    "gamma": (1, gamma),
    "rising": (2, rising_factorial),
    "hmono": (2, _hmono),
}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    # offsets are reported in bytes of the UTF-8 encoding
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            offset = len(text[:pos].encode("utf-8"))
            raise ExpressionError(
                f"unexpected character {text[pos]!r} at byte {offset}", offset
            )
        kind = match.lastgroup
        if kind != "ws":
            tokens.append((kind, match.group(), len(text[:pos].encode("utf-8"))))
        pos = match.end()
    tokens.append(("end", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def accept(self, value: str) -> bool:
        kind, tok, _ = self.peek()
        if kind == "op" and tok == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            self.fail(f"expected {value!r}")

    def fail(self, message: str):
        kind, tok, offset = self.peek()
        found = "end of input" if kind == "end" else repr(tok)
        raise ExpressionError(f"{message}, found {found} at byte {offset}", offset)

    def parse(self) -> Expression:
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return node

    def expr(self) -> Expression:
        node = self.term()
        while True:
            if self.accept("+"):
                node = BinOp("+", node, self.term())
            elif self.accept("-"):
                node = BinOp("-", node, self.term())
            else:
                return node

    def term(self) -> Expression:
        node = self.unary()
        while True:
            if self.accept("*"):
                node = BinOp("*", node, self.unary())
            elif self.accept("/"):
                node = BinOp("/", node, self.unary())
            else:
                return node

    def unary(self) -> Expression:
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        node = self.atom()
        if self.accept("^"):
            return BinOp("^", node, self.unary())
        return node

    def atom(self) -> Expression:
        kind, tok, offset = self.peek()
        if kind == "number":
            value = float(tok)
            if not math.isfinite(value):
                raise ExpressionError(f"number {tok} overflows at byte {offset}", offset)
            self.i += 1
            return Num(value)
        if kind == "name":
            self.i += 1
            if tok == "t":
                return Var()
            if tok not in FUNCTIONS:
                raise ExpressionError(
                    f"unknown function {tok!r} at byte {offset}", offset
                )
            self.expect("(")
            args = [self.expr()]
            while self.accept(","):
                args.append(self.expr())
            self.expect(")")
            arity = FUNCTIONS[tok][0]
            if len(args) != arity:
                raise ExpressionError(
                    f"{tok}() takes {arity} argument(s), got {len(args)} "
                    f"at byte {offset}",
                    offset,
                )
            return Call(tok, tuple(args))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected a number, 't', a function call or '('")


def parse_expression(text: str) -> Expression:
    """Parse *text* into an expression tree."""
    if not text.strip():
        raise ExpressionError("empty expression", 0)
    return _Parser(text).parse()


def format_expression(node: Expression) -> str:
    """Render *node* fully parenthesized; re-parsing yields an equal tree."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "t"
    if isinstance(node, Neg):
        return f"(-{format_expression(node.operand)})"
    if isinstance(node, BinOp):
        return f"({format_expression(node.left)} {node.op} {format_expression(node.right)})"
    args = ", ".join(format_expression(arg) for arg in node.args)
    return f"{node.name}({args})"


def _eval(node: Expression, t: float) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return t
    if isinstance(node, Neg):
        return -_eval(node.operand, t)
    if isinstance(node, Call):
        args = [_eval(arg, t) for arg in node.args]
        fn = FUNCTIONS[node.name][1]
        try:
            return fn(*args)
        except (DomainError, ValueError, OverflowError) as exc:
            raise ExpressionError(
                f"{format_expression(node)} failed at t={t:g}: {exc}"
            ) from exc

    x = _eval(node.left, t)
    y = _eval(node.right, t)
    try:
        if node.op == "+":
            result = x + y
        elif node.op == "-":
            result = x - y
        elif node.op == "*":
            result = x * y
        elif node.op == "/":
            result = x / y
        else:
            result = math.pow(x, y)
    except (ZeroDivisionError, ValueError, OverflowError) as exc:
        raise ExpressionError(
            f"{format_expression(node)} failed at t={t:g}: {exc}"
        ) from exc
    if not math.isfinite(result):
        raise ExpressionError(f"{format_expression(node)} is not finite at t={t:g}")
    return result


def evaluate(node: Expression, t: float) -> float:
    """Evaluate *node* at grid point *t*.

    :raises ExpressionError: naming the failing subexpression on a pole,
        division by zero, complex power or non-finite intermediate.
    """
    value = _eval(node, float(t))
    if not math.isfinite(value):
        raise ExpressionError(f"{format_expression(node)} is not finite at t={t:g}")
    return value
