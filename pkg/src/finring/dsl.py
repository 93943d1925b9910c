"""Parser for the ring-construction expression language.

Text like ``U(2,Z(3))`` or ``dorroh(Z(2),sub[1])`` parses to the AST
nodes in expr.py; serialize() over there is the inverse.  Element
literals (integers, #raw indices, bracketed matrices, tuples, coset
``x+I`` forms) share one grammar so ring labels parse back as elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .expr import (AlgebraExpr, BracketList, CornerExpr, CosetLit,
                   DorrohExpr, HExpr, HomTable, IntLit, KExpr, MatExpr,
                   ProdExpr, QuotExpr, RawIndex, SubGens, TrsExpr,
                   TupleLit, TwistExpr, ZExpr)

__all__ = ["ParseError", "parse", "parse_element"]

_PUNCT = set("()[],#+")


class ParseError(ValueError):
    """Syntax error with 1-based line:col position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__("%d:%d: %s" % (line, col, message))
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Tok:
    kind: str          # 'int' | 'ident' | one of _PUNCT | 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch == "-" or ch.isdigit():
            j = i + 1
            if ch == "-":
                if j >= n or not text[j].isdigit():
                    raise ParseError("'-' must start an integer", line, col)
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(_Tok(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg: str):
        t = self.peek()
        raise ParseError(msg, t.line, t.col)

    def expect(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            self.fail("expected %r, found %r" % (kind, t.text or "end of input"))
        return self.next()

    def expect_int(self) -> int:
        return int(self.expect("int").text)

    # ---- elements ----

    def element(self):
        t = self.peek()
        if t.kind == "int":
            node = IntLit(int(self.next().text))
        elif t.kind == "#":
            self.next()
            node = RawIndex(self.expect_int())
        elif t.kind == "[":
            node = self.bracket_list()
        elif t.kind == "(":
            node = self.tuple_lit()
        else:
            self.fail("expected an element literal, found %r"
                      % (t.text or "end of input"))
        # coset suffix: x+I
        if self.peek().kind == "+":
            plus = self.next()
            name = self.peek()
            if name.kind != "ident" or name.text != "I":
                raise ParseError("expected 'I' after '+'", plus.line, plus.col + 1)
            self.next()
            node = CosetLit(node)
        return node

    def bracket_list(self) -> BracketList:
        self.expect("[")
        items = []
        if self.peek().kind != "]":
            items.append(self.element())
            while self.peek().kind == ",":
                self.next()
                items.append(self.element())
        self.expect("]")
        return BracketList(tuple(items))

    def tuple_lit(self) -> TupleLit:
        self.expect("(")
        items = [self.element()]
        while self.peek().kind == ",":
            self.next()
            items.append(self.element())
        self.expect(")")
        return TupleLit(tuple(items))

    # ---- ring expressions ----

    def ring(self):
        t = self.peek()
        if t.kind != "ident":
            self.fail("expected a ring constructor, found %r"
                      % (t.text or "end of input"))
        name = t.text
        handler = _RING_HANDLERS.get(name)
        if handler is None:
            self.fail("unknown constructor %r" % name)
        self.next()
        return handler(self)

    def sub_gens(self) -> SubGens:
        t = self.expect("ident")
        if t.text != "sub":
            raise ParseError("expected 'sub[...]'", t.line, t.col)
        self.expect("[")
        gens = []
        if self.peek().kind != "]":
            gens.append(self.element())
            while self.peek().kind == ",":
                self.next()
                gens.append(self.element())
        self.expect("]")
        return SubGens(tuple(gens))

    def hom_table(self) -> HomTable:
        t = self.expect("ident")
        if t.text != "hom":
            raise ParseError("expected 'hom[...]'", t.line, t.col)
        self.expect("[")
        images = []
        if self.peek().kind != "]":
            images.append(self.element())
            while self.peek().kind == ",":
                self.next()
                images.append(self.element())
        self.expect("]")
        return HomTable(tuple(images))


def _h_Z(p: _Parser):
    p.expect("(")
    n = p.expect_int()
    p.expect(")")
    return ZExpr(n)


def _h_mat(kind):
    def h(p: _Parser):
        p.expect("(")
        n = p.expect_int()
        p.expect(",")
        base = p.ring()
        p.expect(")")
        return MatExpr(kind, n, base)
    return h


def _h_H(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    s = p.element()
    p.expect(",")
    t = p.element()
    p.expect(")")
    return HExpr(base, s, t)


def _h_K(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    s = p.element()
    p.expect(")")
    return KExpr(base, s)


def _h_prod(p: _Parser):
    p.expect("(")
    factors = [p.ring()]
    while p.peek().kind == ",":
        p.next()
        factors.append(p.ring())
    p.expect(")")
    if len(factors) < 2:
        p.fail("prod needs at least two factors")
    return ProdExpr(tuple(factors))


def _h_dorroh(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    sub = p.sub_gens()
    p.expect(")")
    return DorrohExpr(base, sub)


def _h_quot(p: _Parser):
    p.expect("(")
    base = p.ring()
    gens = []
    while p.peek().kind == ",":
        p.next()
        gens.append(p.element())
    p.expect(")")
    if not gens:
        p.fail("quot needs at least one ideal generator")
    return QuotExpr(base, tuple(gens))


def _h_corner(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    e = p.element()
    p.expect(")")
    return CornerExpr(base, e)


def _h_twist(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    hom = p.hom_table()
    p.expect(")")
    return TwistExpr(base, hom)


def _h_trs(p: _Parser):
    p.expect("(")
    base = p.ring()
    p.expect(",")
    sub = p.sub_gens()
    p.expect(",")
    n = p.expect_int()
    p.expect(")")
    return TrsExpr(base, sub, n)


def _h_algebra(p: _Parser):
    p.expect("(")
    prime = p.expect_int()
    p.expect(",")
    dim = p.expect_int()
    p.expect(",")
    consts = p.bracket_list()
    p.expect(")")
    return AlgebraExpr(prime, dim, consts)


_RING_HANDLERS = {
    "Z": _h_Z,
    "M": _h_mat("M"),
    "U": _h_mat("U"),
    "D": _h_mat("D"),
    "V": _h_mat("V"),
    "H": _h_H,
    "K": _h_K,
    "prod": _h_prod,
    "dorroh": _h_dorroh,
    "quot": _h_quot,
    "corner": _h_corner,
    "twist": _h_twist,
    "trs": _h_trs,
    "algebra": _h_algebra,
}


def parse(text: str):
    """Parse a ring expression; raises ParseError on bad syntax."""
    p = _Parser(text)
    node = p.ring()
    if p.peek().kind != "eof":
        p.fail("trailing input after expression")
    return node


def parse_element(text: str):
    """Parse a standalone element literal (label text round-trips here)."""
    p = _Parser(text)
    node = p.element()
    if p.peek().kind != "eof":
        p.fail("trailing input after element")
    return node
