"""
Boolean predicate expressions for --where, e.g. "leftRegular & !leftDuo" or "!(intraRegular | leftDuo)".

Grammar:
    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | NAME
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Set, Union

from gamma_lab.algebra import PREDICATES
from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.errors import InputError

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9]*)|(\S))")


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


Expr = Union[Name, Not, And, Or]


def _tokenize(text: str) -> List[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            want = expected if expected is not None else "a token"
            raise InputError(f"Bad predicate expression {self.text!r}: expected {want}, got {token!r}")
        self.pos += 1
        return token

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() == "|":
            self.take("|")
            node = Or(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() == "&":
            self.take("&")
            node = And(node, self.factor())
        return node

    def factor(self) -> Expr:
        token = self.take()
        if token == "!":
            return Not(self.factor())
        if token == "(":
            node = self.expr()
            self.take(")")
            return node
        if token not in PREDICATES:
            raise InputError(f"Unknown predicate {token!r}. Predicates: \n {list(PREDICATES)}")
        return Name(token)


def parse_expr(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise InputError(f"Bad predicate expression {text!r}: trailing {parser.peek()!r}")
    return node


def names(expr: Expr) -> Set[str]:
    if isinstance(expr, Name):
        return {expr.name}
    if isinstance(expr, Not):
        return names(expr.operand)
    return names(expr.left) | names(expr.right)


def evaluate(expr: Expr, S: FiniteOrderedGammaSemigroup, cache: Dict[str, bool] = None) -> bool:
    """Evaluate lazily; each named predicate runs at most once per cache."""
    if cache is None:
        cache = {}
    if isinstance(expr, Name):
        if expr.name not in cache:
            cache[expr.name] = PREDICATES[expr.name](S)
        return cache[expr.name]
    if isinstance(expr, Not):
        return not evaluate(expr.operand, S, cache)
    if isinstance(expr, And):
        return evaluate(expr.left, S, cache) and evaluate(expr.right, S, cache)
    return evaluate(expr.left, S, cache) or evaluate(expr.right, S, cache)


def render(expr: Expr) -> str:
    """Fully parenthesised canonical form."""
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Not):
        return f"!{render(expr.operand)}"
    op = "&" if isinstance(expr, And) else "|"
    return f"({render(expr.left)} {op} {render(expr.right)})"
