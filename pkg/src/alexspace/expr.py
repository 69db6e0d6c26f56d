"""Boolean predicate expressions used by ``search`` and ``enumerate --filter``.

Grammar (``!`` binds tightest, then ``&``, then ``|``)::

    expr   := conj ('|' conj)*
    conj   := unary ('&' unary)*
    unary  := '!' unary | '(' expr ')' | NAME

Bare names are set predicates evaluated on ``(space, subset)``; names
prefixed ``space:`` are space predicates and ignore the subset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from .errors import ExprSyntaxError, UnknownPredicate
from .predicates import (
    SetPredicateKind,
    SpacePredicateKind,
    is_alpha_scattered_mask,
    is_scattered_mask,
    set_predicate_mask,
    space_predicate,
)
from .space import Space

SET_PREDICATES: dict[str, Callable[[Space, int], bool]] = {
    k.value: (lambda S, a, k=k: set_predicate_mask(S, a, k)) for k in SetPredicateKind
}
SET_PREDICATES["scattered"] = is_scattered_mask
SET_PREDICATES["alpha_scattered"] = is_alpha_scattered_mask

SPACE_PREDICATES: dict[str, Callable[[Space], bool]] = {
    "space:" + k.value: (lambda S, k=k: space_predicate(S, k)) for k in SpacePredicateKind
}


@dataclass(frozen=True)
class Leaf:
    name: str

    @property
    def is_space(self) -> bool:
        return self.name.startswith("space:")


@dataclass(frozen=True)
class Not:
    arg: PredExpr


@dataclass(frozen=True)
class And:
    left: PredExpr
    right: PredExpr


@dataclass(frozen=True)
class Or:
    left: PredExpr
    right: PredExpr


PredExpr = Union[Leaf, Not, And, Or]

_TOKEN = re.compile(r"\s*(?:(?P<op>[&|!()])|(?P<name>[A-Za-z_][A-Za-z0-9_:]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ExprSyntaxError(start, f"unexpected character {text[start]!r}")
        kind = "op" if m.group("op") else "name"
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self) -> PredExpr:
        node = self.conj()
        while self.peek()[1] == "|":
            self.take()
            node = Or(node, self.conj())
        return node

    def conj(self) -> PredExpr:
        node = self.unary()
        while self.peek()[1] == "&":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self) -> PredExpr:
        kind, val, pos = self.take()
        if val == "!" and kind == "op":
            return Not(self.unary())
        if val == "(" and kind == "op":
            node = self.expr()
            k2, v2, p2 = self.take()
            if v2 != ")":
                raise ExprSyntaxError(p2, "expected ')'")
            return node
        if kind == "name":
            if val not in SET_PREDICATES and val not in SPACE_PREDICATES:
                raise UnknownPredicate(val, pos)
            return Leaf(val)
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(pos, f"expected a predicate, '!' or '(', got {what}")


def parse_pred_expr(text: str) -> PredExpr:
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ExprSyntaxError(pos, f"unexpected {val!r}")
    return node


def pretty(e: PredExpr) -> str:
    def go(e: PredExpr, prec: int) -> str:
        if isinstance(e, Leaf):
            return e.name
        if isinstance(e, Not):
            return "!" + go(e.arg, 3)
        if isinstance(e, And):
            s, mine = f"{go(e.left, 2)} & {go(e.right, 3)}", 2
        else:
            s, mine = f"{go(e.left, 1)} | {go(e.right, 2)}", 1
        return f"({s})" if mine < prec else s

    return go(e, 0)


def uses_subset(e: PredExpr) -> bool:
    if isinstance(e, Leaf):
        return not e.is_space
    if isinstance(e, Not):
        return uses_subset(e.arg)
    return uses_subset(e.left) or uses_subset(e.right)


def evaluate(e: PredExpr, S: Space, bits: int = 0) -> bool:
    if isinstance(e, Leaf):
        if e.is_space:
            return SPACE_PREDICATES[e.name](S)
        return SET_PREDICATES[e.name](S, bits)
    if isinstance(e, Not):
        return not evaluate(e.arg, S, bits)
    if isinstance(e, And):
        return evaluate(e.left, S, bits) and evaluate(e.right, S, bits)
    return evaluate(e.left, S, bits) or evaluate(e.right, S, bits)
