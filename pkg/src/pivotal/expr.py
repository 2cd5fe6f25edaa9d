"""A tiny function-call expression language for Boolean functions.

Grammar (case-sensitive keywords, whitespace ignored between tokens):

    expr := var | const | "NOT(" expr ")" | op "(" expr ("," expr)+ ")"
    op   := "AND" | "OR" | "XOR" | "MAJ"
    var  := "x" digits          const := "0" | "1"

MAJ takes an odd number of arguments and returns 1 iff strictly more than
half of them are 1.  Variable indices are 1-based; the arity of an
expression is the largest index it mentions, and compilation may pad the
arity upward with irrelevant coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MAX_EXACT_N, BooleanFunction, FunctionOracle, PivotalError, get_bit


class ParseError(PivotalError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    child: "Expr"


@dataclass(frozen=True)
class And:
    children: tuple


@dataclass(frozen=True)
class Or:
    children: tuple


@dataclass(frozen=True)
class Xor:
    children: tuple


@dataclass(frozen=True)
class Maj:
    children: tuple


Expr = Var | Const | Not | And | Or | Xor | Maj

_OPS = {"AND": And, "OR": Or, "XOR": Xor, "MAJ": Maj}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, offset: int | None = None):
        raise ParseError(message, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected digits")
        return int(self.text[start : self.pos])

    def expr(self) -> Expr:
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "x":
            start = self.pos
            self.pos += 1
            index = self.digits()
            if index == 0:
                self.error("variable index must be >= 1", start)
            return Var(index)
        if ch in "01":
            self.pos += 1
            return Const(int(ch))
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            word = self.text[start : self.pos]
            if word == "NOT":
                self.expect("(")
                child = self.expr()
                self.expect(")")
                return Not(child)
            if word in _OPS:
                self.expect("(")
                children = [self.expr()]
                self.skip_ws()
                while self.pos < len(self.text) and self.text[self.pos] == ",":
                    self.pos += 1
                    children.append(self.expr())
                    self.skip_ws()
                self.expect(")")
                if len(children) < 2:
                    self.error(f"{word} needs at least two arguments", start)
                if word == "MAJ" and len(children) % 2 == 0:
                    self.error("MAJ needs an odd number of arguments", start)
                return _OPS[word](tuple(children))
            self.error(f"unknown keyword {word!r}", start)
        self.error(f"unexpected character {ch!r}")


def parse(text: str) -> Expr:
    """Parse the expression language; syntax errors carry a byte offset."""
    if not text.strip():
        raise ParseError("empty expression", 0)
    parser = _Parser(text)
    e = parser.expr()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.error("trailing input")
    return e


def arity(e: Expr) -> int:
    """Largest variable index mentioned (0 for constant expressions)."""
    if isinstance(e, Var):
        return e.index
    if isinstance(e, Const):
        return 0
    if isinstance(e, Not):
        return arity(e.child)
    return max(arity(c) for c in e.children)


def eval_expr(e: Expr, omega: int) -> int:
    """Standard semantics; MAJ is strict majority, XOR is parity."""
    if isinstance(e, Var):
        return get_bit(omega, e.index)
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Not):
        return 1 - eval_expr(e.child, omega)
    vals = [eval_expr(c, omega) for c in e.children]
    if isinstance(e, And):
        return int(all(vals))
    if isinstance(e, Or):
        return int(any(vals))
    if isinstance(e, Xor):
        return sum(vals) & 1
    return int(sum(vals) > len(vals) // 2)


def _eval_vec(e: Expr, idx: np.ndarray) -> np.ndarray:
    if isinstance(e, Var):
        return ((idx >> (e.index - 1)) & 1).astype(bool)
    if isinstance(e, Const):
        return np.full(idx.shape, bool(e.value))
    if isinstance(e, Not):
        return ~_eval_vec(e.child, idx)
    parts = [_eval_vec(c, idx) for c in e.children]
    if isinstance(e, And):
        return np.logical_and.reduce(parts)
    if isinstance(e, Or):
        return np.logical_or.reduce(parts)
    if isinstance(e, Xor):
        return np.logical_xor.reduce(parts)
    return sum(part.astype(np.int64) for part in parts) > len(parts) // 2


def compile_expr(e: Expr, n: int | None = None) -> BooleanFunction:
    """Materialize the full truth table; n defaults to the expression arity
    and may be forced higher to pad with irrelevant coordinates."""
    needed = max(arity(e), 1)
    if n is None:
        n = needed
    if n < needed:
        raise PivotalError(f"requested arity {n} below expression arity {needed}")
    if n > MAX_EXACT_N:
        raise PivotalError(f"arity {n} exceeds exact cap {MAX_EXACT_N}")
    idx = np.arange(1 << n, dtype=np.int64)
    return BooleanFunction(n, _eval_vec(e, idx).astype(np.uint8), origin=to_text(e))


def as_oracle(e: Expr, n: int | None = None) -> FunctionOracle:
    needed = max(arity(e), 1)
    if n is None:
        n = needed
    if n < needed:
        raise PivotalError(f"requested arity {n} below expression arity {needed}")
    return FunctionOracle(n, lambda w: eval_expr(e, w), origin=to_text(e))


def to_text(e: Expr) -> str:
    """Canonical text form; parses back to a structurally equal tree."""
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Not):
        return f"NOT({to_text(e.child)})"
    name = {And: "AND", Or: "OR", Xor: "XOR", Maj: "MAJ"}[type(e)]
    return f"{name}({', '.join(to_text(c) for c in e.children)})"


def random_expr(rng: np.random.Generator, max_depth: int = 6,
                max_var: int = 12) -> Expr:
    """Random AST for round-trip and compile/eval agreement tests."""
    if max_depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.15:
            return Const(int(rng.integers(0, 2)))
        return Var(int(rng.integers(1, max_var + 1)))
    kind = int(rng.integers(0, 5))
    if kind == 0:
        return Not(random_expr(rng, max_depth - 1, max_var))
    width = int(rng.integers(2, 5))
    if kind == 4:
        width = 3 if width != 4 else 5
    children = tuple(random_expr(rng, max_depth - 1, max_var) for _ in range(width))
    return {1: And, 2: Or, 3: Xor, 4: Maj}[kind](children)
