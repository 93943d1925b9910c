"""AST node types for ring expressions and element literals.

Pure data: no parsing and no table construction here.  The parser in
`dsl` produces these nodes, the builders in `construct` consume them,
and `serialize`/`serialize_elem` render the canonical text form (no
whitespace, stable argument order) used for provenance strings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


# ---------------------------------------------------------------- literals

@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class RawIndex:
    # '#k' form: element k of the ring by raw table index
    value: int


@dataclass(frozen=True)
class BracketList:
    # '[...]' form: matrix rows, coefficient vectors, nested freely
    items: tuple

    def __init__(self, items):
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class TupleLit:
    # '(a,b,...)' form, arity >= 1
    items: tuple

    def __init__(self, items):
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class CosetLit:
    # 'x+I' form: representative literal for a quotient-ring element
    rep: "ElemNode"


ElemNode = Union[IntLit, RawIndex, BracketList, TupleLit, CosetLit]


# ------------------------------------------------------------- expressions

@dataclass(frozen=True)
class ZExpr:
    n: int


@dataclass(frozen=True)
class MatExpr:
    # kind in {'M', 'U', 'D', 'V'}
    kind: str
    n: int
    base: "RingExpr"


@dataclass(frozen=True)
class HExpr:
    base: "RingExpr"
    s: ElemNode
    t: ElemNode


@dataclass(frozen=True)
class KExpr:
    base: "RingExpr"
    s: ElemNode


@dataclass(frozen=True)
class ProdExpr:
    factors: tuple

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class SubGens:
    # 'sub[...]' argument form used by dorroh and trs
    gens: tuple

    def __init__(self, gens):
        object.__setattr__(self, "gens", tuple(gens))


@dataclass(frozen=True)
class HomTable:
    # 'hom[...]' argument form used by twist
    images: tuple

    def __init__(self, images):
        object.__setattr__(self, "images", tuple(images))


@dataclass(frozen=True)
class DorrohExpr:
    base: "RingExpr"
    sub: SubGens


@dataclass(frozen=True)
class QuotExpr:
    base: "RingExpr"
    gens: tuple

    def __init__(self, base, gens):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "gens", tuple(gens))


@dataclass(frozen=True)
class CornerExpr:
    base: "RingExpr"
    e: ElemNode


@dataclass(frozen=True)
class TwistExpr:
    base: "RingExpr"
    hom: HomTable


@dataclass(frozen=True)
class TrsExpr:
    base: "RingExpr"
    sub: SubGens
    n: int


@dataclass(frozen=True)
class AlgebraExpr:
    p: int
    d: int
    consts: BracketList


RingExpr = Union[
    ZExpr, MatExpr, HExpr, KExpr, ProdExpr, DorrohExpr, QuotExpr,
    CornerExpr, TwistExpr, TrsExpr, AlgebraExpr,
]


# ------------------------------------------------------------ serialization

def serialize_elem(node: ElemNode) -> str:
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, RawIndex):
        return "#%d" % node.value
    if isinstance(node, BracketList):
        return "[" + ",".join(serialize_elem(i) for i in node.items) + "]"
    if isinstance(node, TupleLit):
        return "(" + ",".join(serialize_elem(i) for i in node.items) + ")"
    if isinstance(node, CosetLit):
        return serialize_elem(node.rep) + "+I"
    raise TypeError("not an element literal: %r" % (node,))


def _ser_sub(s: SubGens) -> str:
    return "sub[" + ",".join(serialize_elem(g) for g in s.gens) + "]"


def serialize(node: RingExpr) -> str:
    """Canonical text of a ring expression (whitespace-free)."""
    if isinstance(node, ZExpr):
        return "Z(%d)" % node.n
    if isinstance(node, MatExpr):
        return "%s(%d,%s)" % (node.kind, node.n, serialize(node.base))
    if isinstance(node, HExpr):
        return "H(%s,%s,%s)" % (serialize(node.base),
                                serialize_elem(node.s), serialize_elem(node.t))
    if isinstance(node, KExpr):
        return "K(%s,%s)" % (serialize(node.base), serialize_elem(node.s))
    if isinstance(node, ProdExpr):
        return "prod(" + ",".join(serialize(f) for f in node.factors) + ")"
    if isinstance(node, DorrohExpr):
        return "dorroh(%s,%s)" % (serialize(node.base), _ser_sub(node.sub))
    if isinstance(node, QuotExpr):
        parts = [serialize(node.base)] + [serialize_elem(g) for g in node.gens]
        return "quot(" + ",".join(parts) + ")"
    if isinstance(node, CornerExpr):
        return "corner(%s,%s)" % (serialize(node.base), serialize_elem(node.e))
    if isinstance(node, TwistExpr):
        imgs = ",".join(serialize_elem(i) for i in node.hom.images)
        return "twist(%s,hom[%s])" % (serialize(node.base), imgs)
    if isinstance(node, TrsExpr):
        return "trs(%s,%s,%d)" % (serialize(node.base), _ser_sub(node.sub), node.n)
    if isinstance(node, AlgebraExpr):
        return "algebra(%d,%d,%s)" % (node.p, node.d, serialize_elem(node.consts))
    raise TypeError("not a ring expression: %r" % (node,))
