"""Parser for polynomial expressions and the ring-presentation language.

A presentation is a handful of ``key: value`` lines::

    generators: u:2, v:2
    relations: u^2+u*v, v^2
    orientation: u*v
    top_degree: 4

Lines may also be separated by `` / `` so a presentation fits on one line.
Polynomials use ``+ - * ^``, integer literals and parentheses.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "DSLError",
    "Expr",
    "parse_expr",
    "split_toplevel",
    "parse_sections",
    "evaluate",
]


class DSLError(ValueError):
    """Syntax or validation error, optionally carrying a source position."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}, col {col}: " if col is not None else f"line {line}: "
        elif col is not None:
            where = f"col {col}: "
        super().__init__(where + message)


# AST nodes are plain tuples:
#   ("int", n) | ("var", name) | ("neg", e) | ("add", a, b) | ("sub", a, b)
#   ("mul", a, b) | ("pow", base, n)
Expr = tuple

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text, line=None, offset=0):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        col = offset + m.start() + 1
        if num is not None:
            tokens.append(("int", int(num), col))
        elif name is not None:
            tokens.append(("name", name, col))
        elif op in "+-*^()":
            tokens.append((op, op, col))
        else:
            raise DSLError(f"unexpected character {op!r}", line, col)
    tokens.append(("end", None, offset + len(text) + 1))
    return tokens


class _Parser:
    # expr   := term (('+'|'-') term)*
    # term   := unary ('*' unary)*
    # unary  := '-' unary | power
    # power  := atom ('^' INT)?
    # atom   := INT | NAME | '(' expr ')'

    def __init__(self, text, line=None, offset=0):
        self.tokens = _tokenize(text, line, offset)
        self.i = 0
        self.line = line

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DSLError(f"expected {kind!r}, found {found}", self.line, tok[2])
        self.i += 1
        return tok

    def error(self, message):
        raise DSLError(message, self.line, self.tokens[self.i][2])

    def parse(self):
        if self.peek() == "end":
            self.error("empty expression")
        e = self.expr()
        if self.peek() != "end":
            self.error(f"unexpected {self.tokens[self.i][1]!r}")
        return e

    def expr(self):
        e = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            e = ("add" if op == "+" else "sub", e, self.term())
        return e

    def term(self):
        e = self.unary()
        while self.peek() == "*":
            self.take()
            e = ("mul", e, self.unary())
        return e

    def unary(self):
        if self.peek() == "-":
            self.take()
            return ("neg", self.unary())
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        e = self.atom()
        if self.peek() == "^":
            self.take()
            n = self.take("int")[1]
            e = ("pow", e, n)
        return e

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return ("int", self.take()[1])
        if kind == "name":
            return ("var", self.take()[1])
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {self.tokens[self.i][1]!r}")


def parse_expr(text, line=None, offset=0):
    """Parse a polynomial expression into a tuple AST."""
    return _Parser(text, line, offset).parse()


def evaluate(expr, const, var, add, mul, neg):
    """Fold an AST with caller-supplied arithmetic."""
    tag = expr[0]
    if tag == "int":
        return const(expr[1])
    if tag == "var":
        return var(expr[1])
    if tag == "neg":
        return neg(evaluate(expr[1], const, var, add, mul, neg))
    if tag == "pow":
        base = evaluate(expr[1], const, var, add, mul, neg)
        result = const(1)
        for _ in range(expr[2]):
            result = mul(result, base)
        return result
    a = evaluate(expr[1], const, var, add, mul, neg)
    b = evaluate(expr[2], const, var, add, mul, neg)
    if tag == "add":
        return add(a, b)
    if tag == "sub":
        return add(a, neg(b))
    if tag == "mul":
        return mul(a, b)
    raise ValueError(f"unknown node {tag!r}")


def split_toplevel(text, sep=","):
    """Split on ``sep`` outside parentheses, returning (piece, column offset) pairs."""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


_KEYS = ("generators", "relations", "orientation", "top_degree")


@dataclass(frozen=True)
class Section:
    key: str
    value: str
    line: int
    offset: int  # 0-based column where value starts


def parse_sections(text):
    """Split presentation source into its ``key: value`` sections."""
    sections = {}
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for piece, off in split_toplevel(raw, "/"):
            lines.append((lineno, piece, off))
    for lineno, piece, off in lines:
        stripped = piece.split("#", 1)[0]
        if not stripped.strip():
            continue
        key, colon, value = stripped.partition(":")
        key_name = key.strip()
        if not colon:
            raise DSLError("expected 'key: value'", lineno, off + 1)
        if key_name not in _KEYS:
            raise DSLError(f"unknown section {key_name!r}", lineno, off + len(key) - len(key.lstrip()) + 1)
        if key_name in sections:
            raise DSLError(f"duplicate section {key_name!r}", lineno, off + 1)
        sections[key_name] = Section(key_name, value, lineno, off + len(key) + 1)
    for required in ("generators", "orientation"):
        if required not in sections:
            raise DSLError(f"missing section {required!r}")
    return sections
