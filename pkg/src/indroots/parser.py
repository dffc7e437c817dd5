"""Parser for the graph expression language.

    expr := atom | "union(" list ")" | "join(" list ")"
          | "lex(" expr "," expr ")" | "corona(" expr "," expr ")"
    atom := "K[" int "]" | "Kbar[" int "]" | "Kpartite[" int "," int "]"
          | "g6:" graph6-token | int "*" atom

``Kpartite[n,k]`` is the complete n-partite graph with parts of size k.
Whitespace between tokens is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ExprSyntaxError, Graph6Error
from .expr import Clique, Corona, GraphExpr, Independent, JoinN, Leaf, Lex, UnionN, multipartite
from .graph6 import parse_graph6


@dataclass(frozen=True)
class Node:
    """AST node: ``kind`` is an operator or atom name, ``args`` its operands."""

    kind: str
    args: tuple
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def error(self, msg: str, pos: int | None = None):
        raise ExprSyntaxError(msg, self.i if pos is None else pos)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def expect(self, tok: str):
        self.ws()
        if not self.s.startswith(tok, self.i):
            found = self.s[self.i:self.i + 1] or "end of input"
            self.error(f"expected {tok!r}, found {found!r}")
        self.i += len(tok)

    def integer(self) -> int:
        self.ws()
        start = self.i
        if self.i < len(self.s) and self.s[self.i] == "-":
            self.error("sizes must be nonnegative")
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.s[start:self.i])

    def expr(self) -> Node:
        self.ws()
        pos = self.i
        for op in ("union", "join"):
            if self._keyword(op):
                self.i += len(op)
                self.expect("(")
                items = [self.expr()]
                while self.peek(","):
                    self.expect(",")
                    items.append(self.expr())
                self.expect(")")
                return Node(op, tuple(items), pos)
        for op in ("lex", "corona"):
            if self._keyword(op):
                self.i += len(op)
                self.expect("(")
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return Node(op, (left, right), pos)
        return self.atom()

    def _keyword(self, word: str) -> bool:
        if not self.s.startswith(word, self.i):
            return False
        j = self.i + len(word)
        while j < len(self.s) and self.s[j].isspace():
            j += 1
        return j < len(self.s) and self.s[j] == "("

    def atom(self) -> Node:
        self.ws()
        pos = self.i
        if self.i < len(self.s) and self.s[self.i].isdigit():
            m = self.integer()
            self.expect("*")
            return Node("repeat", (m, self.atom()), pos)
        if self.s.startswith("Kpartite[", self.i):
            self.i += len("Kpartite[")
            n = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect("]")
            if n < 1 or k < 1:
                self.error("Kpartite needs positive part count and part size", pos)
            return Node("Kpartite", (n, k), pos)
        if self.s.startswith("Kbar[", self.i):
            self.i += len("Kbar[")
            n = self.integer()
            self.expect("]")
            return Node("Kbar", (n,), pos)
        if self.s.startswith("K[", self.i):
            self.i += 2
            n = self.integer()
            self.expect("]")
            return Node("K", (n,), pos)
        if self.s.startswith("g6:", self.i):
            self.i += 3
            start = self.i
            while self.i < len(self.s) and 63 <= ord(self.s[self.i]) <= 126:
                self.i += 1
            token = self.s[start:self.i]
            if not token:
                self.error("empty graph6 token")
            try:
                parse_graph6(token)
            except Graph6Error as exc:
                off = start + (exc.offset or 0)
                raise ExprSyntaxError(f"bad graph6 token: {exc}", off) from None
            return Node("g6", (token,), pos)
        found = self.s[self.i:self.i + 10] or "end of input"
        self.error(f"expected an expression, found {found!r}")

    def parse(self) -> Node:
        node = self.expr()
        self.ws()
        if self.i != len(self.s):
            self.error(f"unexpected trailing input {self.s[self.i:self.i + 10]!r}")
        return node


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def lower(node: Node) -> GraphExpr:
    kind, args = node.kind, node.args
    if kind == "K":
        return Clique(args[0])
    if kind == "Kbar":
        return Independent(args[0])
    if kind == "Kpartite":
        n, k = args
        return multipartite([k] * n)
    if kind == "g6":
        return Leaf(parse_graph6(args[0]))
    if kind == "repeat":
        m, inner = args
        return UnionN((lower(inner),) * m)
    if kind == "union":
        return UnionN(tuple(lower(a) for a in args))
    if kind == "join":
        return JoinN(tuple(lower(a) for a in args))
    if kind == "lex":
        return Lex(lower(args[0]), lower(args[1]))
    if kind == "corona":
        return Corona(lower(args[0]), lower(args[1]))
    raise ExprSyntaxError(f"unknown node kind {kind!r}", node.pos)


def parse_expr(text: str) -> GraphExpr:
    """Parse and lower an expression string to a :class:`GraphExpr`."""
    return lower(parse_ast(text))
