"""Recursive-descent parser for poset expressions.

Grammar (whitespace is insignificant)::

    expr   := term ('+' term)*
    term   := 'C' args1 | 'A' args1 | 'Q' args1 | 'K' argsN | 'CC' argsN
            | 'SD' args2 | 'glue' '(' expr ',' expr ')'
            | 'V' | 'L' | 'N' | 'J'
    argsK  := '(' int (',' int)* ')'
"""

from __future__ import annotations

from .errors import ConstructionError, ParseError
from .expr import (
    Antichain,
    BooleanCube,
    Chain,
    ChainComposition,
    Glue,
    Multipartite,
    Named,
    ParallelCompose,
    SubdividedDiamond,
    normalize,
)

__all__ = ["parse_poset_expression"]


class _Parser:
    def __init__(self, text: str):
        self.data = text.encode("utf-8")
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> int | None:
        self.skip_ws()
        return self.data[self.pos] if self.pos < len(self.data) else None

    def expect(self, ch: bytes) -> None:
        if self.peek() != ch[0]:
            got = "end of input" if self.peek() is None else repr(chr(self.peek()))
            raise ParseError(f"expected {ch.decode()!r}, got {got}", self.pos)
        self.pos += 1

    def ident(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isalpha():
            self.pos += 1
        if start == self.pos:
            got = "end of input" if start >= len(self.data) else repr(chr(self.data[start]))
            raise ParseError(f"expected a poset term, got {got}", start)
        return self.data[start:self.pos].decode(), start

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.data) and self.data[self.pos] == ord("-"):
            self.pos += 1
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        text = self.data[start:self.pos].decode()
        if text in ("", "-"):
            raise ParseError("expected an integer", start)
        return int(text), start

    def int_args(self) -> tuple[list[int], int]:
        self.expect(b"(")
        start = self.pos
        values = [self.integer()[0]]
        while self.peek() == ord(","):
            self.pos += 1
            values.append(self.integer()[0])
        self.expect(b")")
        return values, start

    def expr(self):
        node = self.term()
        while self.peek() == ord("+"):
            self.pos += 1
            node = ParallelCompose(node, self.term())
        return node

    def term(self):
        name, start = self.ident()
        arity = {"C": 1, "A": 1, "Q": 1, "SD": 2}
        try:
            if name in ("V", "L", "N", "J"):
                return Named(name)
            if name == "glue":
                self.expect(b"(")
                left = self.expr()
                self.expect(b",")
                right = self.expr()
                self.expect(b")")
                return Glue(left, right)
            if name in arity or name in ("K", "CC"):
                args, args_at = self.int_args()
                if name in arity and len(args) != arity[name]:
                    raise ParseError(f"{name} takes {arity[name]} argument(s), got {len(args)}", args_at)
                return _build(name, args)
        except ConstructionError as exc:
            raise ParseError(str(exc), start) from None
        raise ParseError(f"unknown poset term {name!r}", start)


def _build(name: str, args: list[int]):
    if name == "C":
        return Chain(args[0])
    if name == "A":
        return Antichain(args[0])
    if name == "Q":
        return BooleanCube(args[0])
    if name == "SD":
        return SubdividedDiamond(args[0], args[1])
    if name == "K":
        return Multipartite(tuple(args))
    return ChainComposition(tuple(args))


def parse_poset_expression(text: str):
    """Parse ``text`` into a normalized poset expression.

    Raises :class:`~poset_ramsey.errors.ParseError` carrying the byte offset
    of the failure.
    """
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"unexpected {chr(parser.peek())!r} after expression", parser.pos)
    return normalize(node)
