"""Coefficient expression language.

Grammar::

    expr   := term (("+"|"-") term)* ;
    term   := factor (("*"|"/") factor)* ;
    factor := ("-" factor) | power ;
    power  := atom ("^" factor)? ;
    atom   := NUMBER | IDENT | "(" expr ")" ;
    NUMBER := INT | INT "." DIGITS | INT "/" INT ;
    IDENT  := letter (letter|digit)* ;

``INT "/" INT`` is read as a single rational literal only when written without
whitespace (``3/4``); ``3 / 4`` is a division. :func:`render` relies on this.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, ExprSyntaxError, UnboundIdentifierError, UnknownCharacterError
from .scalar import RATIONAL


@dataclass(frozen=True)
class Num:
    text: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.text)


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Var, Neg, BinOp]


def Add(a, b):
    return BinOp("+", a, b)


def Sub(a, b):
    return BinOp("-", a, b)


def Mul(a, b):
    return BinOp("*", a, b)


def Div(a, b):
    return BinOp("/", a, b)


def Pow(a, b):
    return BinOp("^", a, b)


# ---------------------------------------------------------------------------
# Lexer

_OPS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "ident", an operator character, or "eof"
    text: str
    offset: int


def _scan_int(src, i):
    j = i
    while j < len(src) and src[j].isascii() and src[j].isdigit():
        j += 1
    return j


def tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
        elif ch.isascii() and ch.isdigit():
            j = _scan_int(src, i)
            if j < n and src[j] == "." :
                k = _scan_int(src, j + 1)
                if k == j + 1:
                    raise ExprSyntaxError("expected digits after '.'", _byte_offset(src, j + 1), {"digit"})
                j = k
            elif j + 1 < n and src[j] == "/" and src[j + 1].isascii() and src[j + 1].isdigit():
                j = _scan_int(src, j + 1)
            tokens.append(_Token("num", src[i:j], _byte_offset(src, i)))
            i = j
        elif ch.isascii() and ch.isalpha():
            j = i + 1
            while j < n and src[j].isascii() and src[j].isalnum():
                j += 1
            tokens.append(_Token("ident", src[i:j], _byte_offset(src, i)))
            i = j
        elif ch in _OPS:
            tokens.append(_Token(ch, ch, _byte_offset(src, i)))
            i += 1
        else:
            raise UnknownCharacterError(f"unknown character {ch!r}", _byte_offset(src, i))
    tokens.append(_Token("eof", "", _byte_offset(src, n)))
    return tokens


def _byte_offset(src, i):
    return len(src[:i].encode("utf-8"))


# ---------------------------------------------------------------------------
# Parser

_EXPR_START = frozenset({"number", "identifier", "(", "-"})


class _Parser:
    def __init__(self, src):
        self.tokens = tokenize(src)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def advance(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expr(self):
        node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.tok.kind in ("*", "/"):
            op = self.advance().kind
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            return BinOp("^", base, self.factor())
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(t.text)
        if t.kind == "ident":
            self.advance()
            return Var(t.text)
        if t.kind == "(":
            self.advance()
            node = self.expr()
            if self.tok.kind != ")":
                raise ExprSyntaxError("expected ')'", self.tok.offset, {")"} | {"+", "-", "*", "/", "^"})
            self.advance()
            return node
        raise ExprSyntaxError("expected expression", t.offset, _EXPR_START)


def parse_expr(text: str) -> Expr:
    """Parse ``text`` into an AST.

    Raises
    ------
    ExprSyntaxError
        With the byte offset of the offending token and the set of tokens that
        were acceptable there.
    UnknownCharacterError
        For characters outside the grammar.
    """
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "eof":
        raise ExprSyntaxError("expected end of input", p.tok.offset, {"eof", "+", "-", "*", "/", "^"})
    return node


# ---------------------------------------------------------------------------
# Rendering

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    return 5


def render(node: Expr) -> str:
    """Render with the minimal parentheses needed to reparse to the same tree."""
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = render(node.operand)
        return "-" + (f"({inner})" if _prec(node.operand) < 3 else inner)
    p = _PREC[node.op]
    left, right = render(node.left), render(node.right)
    if node.op == "^":
        if _prec(node.left) < 5:
            left = f"({left})"
        if _prec(node.right) < 3:
            right = f"({right})"
    else:
        if _prec(node.left) < p:
            left = f"({left})"
        if _prec(node.right) <= p:
            right = f"({right})"
    return f"{left} {node.op} {right}"


def free_names(node: Expr) -> set:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Neg):
        return free_names(node.operand)
    if isinstance(node, BinOp):
        return free_names(node.left) | free_names(node.right)
    return set()


# ---------------------------------------------------------------------------
# Evaluation


def eval_expr(node: Expr, bindings, field=RATIONAL):
    """Evaluate ``node`` in ``field`` with identifiers looked up in ``bindings``.

    Literals are converted into the field; ``^`` requires an integer-valued
    exponent and is applied by repeated squaring, so exact fields stay exact.
    """
    if isinstance(node, Num):
        return field.convert(node.value)
    if isinstance(node, Var):
        try:
            return bindings[node.name]
        except KeyError:
            raise UnboundIdentifierError(node.name) from None
    if isinstance(node, Neg):
        return -eval_expr(node.operand, bindings, field)
    left = eval_expr(node.left, bindings, field)
    if node.op == "^":
        k = field.to_integer(eval_expr(node.right, bindings, field))
        return field.power(left, k)
    right = eval_expr(node.right, bindings, field)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if _divisor_is_zero(field, right):
        raise DomainError("division by zero")
    return left / right


def _divisor_is_zero(field, x):
    inv = getattr(field, "is_invertible", None)
    if inv is not None:
        return not inv(x)
    return field.is_zero(x)
