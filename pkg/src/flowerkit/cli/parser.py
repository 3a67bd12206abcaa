"""Recursive-descent parser for body expressions such as ``polar(flower(segment([1,0])))``.

Grammar (whitespace is ignored)::

    expr   := ident '(' [arg (',' arg)*] ')' | ident | json-object | '@' path
    arg    := expr | number | vector
    vector := '[' [number | vector] (',' ...)* ']'

A bare identifier names a member of the default fleet.  Error offsets are
1-based character positions.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass


class ExprError(ValueError):
    """Malformed or ill-typed expression; maps to exit code 2."""


class ParseError(ExprError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# op name -> (number of expression arguments, trailing parameter kind or None)
OPS = {
    "polar": (1, None),
    "reciprocal": (1, None),
    "flower": (1, None),
    "core": (1, None),
    "phi": (1, None),
    "inns": (1, None),
    "conv": (1, None),
    "minkowski": (2, None),
    "radialsum": (2, None),
    "oplus": (2, None),
    "scale": (1, "number"),
    "project": (1, "vector"),
}

# primitive name -> accepted argument counts
PRIMITIVES = {
    "ball": (2,),
    "segment": (1,),
    "polytope": (1,),
    "ellipse": (3, 4),
    "ellipse_focal": (2,),
}


@dataclass(frozen=True)
class Primitive:
    kind: str
    params: tuple


@dataclass(frozen=True)
class Apply:
    op: str
    args: tuple


_NUMBER = re.compile(r"-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|-?inf")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def number(self) -> float:
        self.skip()
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            self.error("expected a number")
        self.pos = m.end()
        return float(m.group())

    def vector(self):
        self.expect("[")
        items = []
        if self.peek() == "]":
            self.pos += 1
            return tuple(items)
        while True:
            items.append(self.vector() if self.peek() == "[" else self.number())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return tuple(items)

    def arg(self):
        ch = self.peek()
        if ch == "[":
            return self.vector()
        if ch == "-" or ch == "." or ch.isdigit():
            return self.number()
        if not ch or ch in ",)":
            self.error("expected an argument")
        return self.expr()

    def expr(self):
        ch = self.peek()
        if ch == "{":
            try:
                obj, end = json.JSONDecoder().raw_decode(self.text, self.pos)
            except json.JSONDecodeError as exc:
                self.error(f"malformed JSON body: {exc.msg}", exc.pos)
            self.pos = end
            return Primitive("json", (json.dumps(obj, sort_keys=True),))
        if ch == "@":
            self.pos += 1
            m = re.compile(r"[^\s,()]+").match(self.text, self.pos)
            if not m:
                self.error("expected a file path after '@'")
            self.pos = m.end()
            return Primitive("file", (m.group(),))
        self.skip()
        start = self.pos
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.error("expected an expression")
        name = m.group()
        self.pos = m.end()
        if self.peek() != "(":
            return Primitive("ref", (name,))
        if name not in OPS and name not in PRIMITIVES:
            self.error(f"unknown operation {name!r}", start)
        self.expect("(")
        args = []
        if self.peek() != ")":
            while True:
                args.append(self.arg())
                if self.peek() == ",":
                    self.pos += 1
                    continue
                break
        close = self.pos
        self.expect(")")
        if name in PRIMITIVES:
            if len(args) not in PRIMITIVES[name] or any(
                    isinstance(a, (Primitive, Apply)) for a in args):
                self.error(f"bad arguments for {name}", close)
            return Primitive(name, tuple(args))
        nexpr, extra = OPS[name]
        want = nexpr + (extra is not None)
        if len(args) != want:
            self.error(f"{name} takes {want} argument(s), got {len(args)}", close)
        for a in args[:nexpr]:
            if not isinstance(a, (Primitive, Apply)):
                self.error(f"{name} expects a body expression", close)
        if extra == "number" and not isinstance(args[-1], float):
            self.error(f"{name} expects a number as last argument", close)
        if extra == "vector" and not isinstance(args[-1], tuple):
            self.error(f"{name} expects a vector or matrix as last argument", close)
        return Apply(name, tuple(args))


def parse_expr(text: str):
    """Parse ``text`` into a tree of :class:`Primitive` and :class:`Apply` nodes."""
    if not text or not text.strip():
        raise ParseError("empty expression", 1)
    p = _Parser(text)
    out = p.expr()
    if p.peek():
        p.error(f"unexpected trailing input {p.peek()!r}")
    return out


def _fmt(a) -> str:
    if isinstance(a, (Primitive, Apply)):
        return print_expr(a)
    if isinstance(a, tuple):
        return "[" + ",".join(_fmt(x) for x in a) + "]"
    if math.isinf(a):
        return "inf" if a > 0 else "-inf"
    return repr(float(a))


def print_expr(e) -> str:
    """Canonical text form; ``parse_expr(print_expr(e)) == e``."""
    if isinstance(e, Primitive):
        if e.kind == "json":
            return e.params[0]
        if e.kind == "file":
            return "@" + e.params[0]
        if e.kind == "ref":
            return e.params[0]
        return f"{e.kind}(" + ",".join(_fmt(a) for a in e.params) + ")"
    return f"{e.op}(" + ",".join(_fmt(a) for a in e.args) + ")"
