"""Ring constructors and the expression-to-table builder.

Every constructor returns a RingTable whose labels are canonical
element literals: each parses back through dsl.parse_element and
resolves to its own index via the ring's layout.  Table builds are
vectorized and chunked so peak memory stays bounded on orders in the
thousands.
"""
from __future__ import annotations

import hashlib
import os
import tempfile
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import (DEFAULT_GUARDS, Element, Guards, RingError, RingTable,
                   SizeGuardError, build_ring, table_dtype)
from .dsl import parse, parse_element
from .expr import (AlgebraExpr, BracketList, CornerExpr, CosetLit,
                   DorrohExpr, HExpr, HomTable, IntLit, KExpr, MatExpr,
                   ProdExpr, QuotExpr, RawIndex, SubGens, TrsExpr,
                   TupleLit, TwistExpr, ZExpr, serialize, serialize_elem)

__all__ = [
    "zmod", "matrix_ring", "h_ring", "k_ring", "direct_product", "dorroh",
    "twisted_u2", "trs", "quotient", "corner",
    "algebra_from_structure_constants", "subring", "sub_ring_table",
    "ideal_closure", "is_ideal", "build_expr", "resolve_element",
]

_CHUNK_CELLS = 1 << 22


def _guard_build(order: int, guards: Guards, what: str):
    if order > guards.build_cap:
        raise SizeGuardError("%s has order %d, over the build cap %d"
                             % (what, order, guards.build_cap))


class _CoordSpace:
    """Mixed-radix indexing over per-coordinate sizes."""

    def __init__(self, sizes: Sequence[int]):
        self.sizes = [int(s) for s in sizes]
        self.strides = []
        acc = 1
        for s in reversed(self.sizes):
            self.strides.append(acc)
            acc *= s
        self.strides.reverse()
        self.order = acc

    def decompose(self, idx: np.ndarray) -> List[np.ndarray]:
        return [(idx // st) % sz for st, sz in zip(self.strides, self.sizes)]

    def compose(self, coords) -> np.ndarray:
        acc = None
        for c, st in zip(coords, self.strides):
            term = np.asarray(c, dtype=np.int64) * st
            acc = term if acc is None else acc + term
        return acc

    def decompose_scalar(self, idx: int) -> List[int]:
        return [(idx // st) % sz for st, sz in zip(self.strides, self.sizes)]

    def compose_scalar(self, coords) -> int:
        return sum(int(c) * st for c, st in zip(coords, self.strides))


def _build_table(space: _CoordSpace, coord_fn, dtype) -> np.ndarray:
    """Fill an order x order table chunk by chunk.

    coord_fn(rc, cc) gets broadcastable row coords (m,1) and column
    coords (1,order) and returns the output coordinate arrays.
    """
    n = space.order
    out = np.empty((n, n), dtype=dtype)
    cols = np.arange(n, dtype=np.int64)
    cc = [c[None, :] for c in space.decompose(cols)]
    step = max(1, _CHUNK_CELLS // n)
    for r0 in range(0, n, step):
        rows = np.arange(r0, min(n, r0 + step), dtype=np.int64)
        rc = [c[:, None] for c in space.decompose(rows)]
        out[r0:r0 + len(rows)] = space.compose(coord_fn(rc, cc))
    return out


# ---------------------------------------------------------------------------
# layouts: label rendering and literal resolution


def resolve_element(R: RingTable, spec) -> int:
    """Turn an element description into an index of R.

    Accepts an Element of R, a plain int (taken as a raw index), label
    text, or a parsed literal node.  Text integers mean residues in
    Z(n) but only 0 and 1 elsewhere; '#k' is always the raw index k.
    """
    if isinstance(spec, Element):
        if spec.ring is not R:
            raise RingError("element belongs to %s, not %s"
                            % (spec.ring.provenance, R.provenance))
        return spec.index
    if isinstance(spec, (int, np.integer)):
        i = int(spec)
        if not 0 <= i < R.order:
            raise RingError("raw index %d out of range for order %d" % (i, R.order))
        return i
    node = parse_element(spec) if isinstance(spec, str) else spec
    return _encode_node(R, node)


def _encode_node(R: RingTable, node) -> int:
    if isinstance(node, RawIndex):
        if not 0 <= node.value < R.order:
            raise RingError("raw index #%d out of range for order %d"
                            % (node.value, R.order))
        return node.value
    if R.layout is not None:
        try:
            return R.layout.encode(node)
        except RingError:
            # 0 and 1 name the distinguished elements of any ring
            if isinstance(node, IntLit) and node.value in (0, 1):
                return R.zero if node.value == 0 else R.one
            raise
    if isinstance(node, IntLit) and node.value in (0, 1):
        return R.zero if node.value == 0 else R.one
    # hand-built ring: fall back to exact label match
    text = serialize_elem(node)
    if text in R.labels:
        return R.labels.index(text)
    raise RingError("cannot resolve %r in a ring without a layout" % text)


class ZmodLayout:
    def __init__(self, n: int):
        self.n = n

    def encode(self, node) -> int:
        if isinstance(node, IntLit):
            return node.value % self.n
        raise RingError("expected an integer literal for Z(%d)" % self.n)

    def render(self, i: int) -> str:
        return str(i)


class TupleLayout:
    """Componentwise tuples over a list of component rings."""

    def __init__(self, comps: Sequence[RingTable], space: _CoordSpace):
        self.comps = list(comps)
        self.space = space

    def encode(self, node) -> int:
        if not isinstance(node, TupleLit):
            raise RingError("expected a %d-tuple literal" % len(self.comps))
        if len(node.items) != len(self.comps):
            raise RingError("expected %d components, got %d"
                            % (len(self.comps), len(node.items)))
        coords = [_encode_node(c, item) for c, item in zip(self.comps, node.items)]
        return self.space.compose_scalar(coords)

    def render(self, i: int) -> str:
        coords = self.space.decompose_scalar(i)
        return "(%s)" % ",".join(c.labels[k] for c, k in zip(self.comps, coords))


class RestrictedLayout:
    """Subset of a base ring (subring or corner), labels borrowed."""

    def __init__(self, base: RingTable, members: np.ndarray, posmap: np.ndarray,
                 kind: str = "subring"):
        self.base = base
        self.members = members
        self.posmap = posmap
        self.kind = kind

    def encode(self, node) -> int:
        idx = _encode_node(self.base, node)
        pos = int(self.posmap[idx])
        if pos < 0:
            raise RingError("element %s of %s lies outside the %s"
                            % (self.base.labels[idx], self.base.provenance, self.kind))
        return pos

    def render(self, i: int) -> str:
        return self.base.labels[int(self.members[i])]


class MatrixLayout:
    def __init__(self, base: RingTable, kind: str, n: int,
                 free_positions, entry_map, space: _CoordSpace):
        self.base = base
        self.kind = kind
        self.n = n
        self.free_positions = free_positions
        self.entry_map = entry_map        # (i,j) -> free coord index or None
        self.space = space

    def _grid_labels(self, coords) -> str:
        z = self.base.labels[self.base.zero]
        rows = []
        for i in range(self.n):
            cells = []
            for j in range(self.n):
                k = self.entry_map[(i, j)]
                cells.append(z if k is None else self.base.labels[coords[k]])
            rows.append("[%s]" % ",".join(cells))
        return "[%s]" % ",".join(rows)

    def render(self, i: int) -> str:
        return self._grid_labels(self.space.decompose_scalar(i))

    def _grid_of(self, node):
        if not (isinstance(node, BracketList) and len(node.items) == self.n):
            raise RingError("expected a %dx%d matrix literal" % (self.n, self.n))
        grid = []
        for row in node.items:
            if not (isinstance(row, BracketList) and len(row.items) == self.n):
                raise RingError("expected a %dx%d matrix literal" % (self.n, self.n))
            grid.append([_encode_node(self.base, cell) for cell in row.items])
        return grid

    def encode(self, node) -> int:
        grid = self._grid_of(node)
        z = self.base.zero
        coords = [None] * len(self.free_positions)
        for i in range(self.n):
            for j in range(self.n):
                k = self.entry_map[(i, j)]
                if k is None:
                    if grid[i][j] != z:
                        raise RingError("entry (%d,%d) must be zero in kind %s"
                                        % (i + 1, j + 1, self.kind))
                elif coords[k] is None:
                    coords[k] = grid[i][j]
                elif coords[k] != grid[i][j]:
                    raise RingError("tied entries disagree at (%d,%d) in kind %s"
                                    % (i + 1, j + 1, self.kind))
        return self.space.compose_scalar(coords)


class HLayout:
    """3x3 family [[a,0,0],[c,d,f],[0,0,g]], d = a-s*c, g = d-t*f."""

    def __init__(self, base: RingTable, s: int, t: int, space: _CoordSpace):
        self.base = base
        self.s = s
        self.t = t
        self.space = space

    def _derived(self, a, c, f):
        B = self.base
        d = int(B.add[a, B.neg[B.mul[self.s, c]]])
        g = int(B.add[d, B.neg[B.mul[self.t, f]]])
        return d, g

    def render(self, i: int) -> str:
        a, c, f = self.space.decompose_scalar(i)
        d, g = self._derived(a, c, f)
        L = self.base.labels
        z = L[self.base.zero]
        return "[[%s,%s,%s],[%s,%s,%s],[%s,%s,%s]]" % (
            L[a], z, z, L[c], L[d], L[f], z, z, L[g])

    def encode(self, node) -> int:
        if not (isinstance(node, BracketList) and len(node.items) == 3
                and all(isinstance(r, BracketList) and len(r.items) == 3
                        for r in node.items)):
            raise RingError("expected a 3x3 matrix literal")
        g_ = [[_encode_node(self.base, c) for c in row.items] for row in node.items]
        z = self.base.zero
        for (i, j) in ((0, 1), (0, 2), (2, 0), (2, 1)):
            if g_[i][j] != z:
                raise RingError("entry (%d,%d) must be zero in this family"
                                % (i + 1, j + 1))
        a, c, f = g_[0][0], g_[1][0], g_[1][2]
        d, g = self._derived(a, c, f)
        if g_[1][1] != d or g_[2][2] != g:
            raise RingError("entries violate the diagonal relations of this family")
        return self.space.compose_scalar((a, c, f))


class TwistLayout:
    """Upper triangular 2x2 pairs-plus-corner written [[a,b],[0,c]]."""

    def __init__(self, base: RingTable, space: _CoordSpace):
        self.base = base
        self.space = space

    def render(self, i: int) -> str:
        a, b, c = self.space.decompose_scalar(i)
        L = self.base.labels
        return "[[%s,%s],[%s,%s]]" % (L[a], L[b], L[self.base.zero], L[c])

    def encode(self, node) -> int:
        if not (isinstance(node, BracketList) and len(node.items) == 2
                and all(isinstance(r, BracketList) and len(r.items) == 2
                        for r in node.items)):
            raise RingError("expected a 2x2 matrix literal")
        g = [[_encode_node(self.base, c) for c in row.items] for row in node.items]
        if g[1][0] != self.base.zero:
            raise RingError("entry (2,1) must be zero in this family")
        return self.space.compose_scalar((g[0][0], g[0][1], g[1][1]))


class QuotientLayout:
    def __init__(self, base: RingTable, reps: np.ndarray, proj: np.ndarray):
        self.base = base
        self.reps = reps
        self.proj = proj

    def encode(self, node) -> int:
        if isinstance(node, CosetLit):
            node = node.rep
        return int(self.proj[_encode_node(self.base, node)])

    def render(self, i: int) -> str:
        return self.base.labels[int(self.reps[i])] + "+I"


class AlgebraLayout:
    def __init__(self, p: int, d: int, space: _CoordSpace):
        self.p = p
        self.d = d
        self.space = space

    def encode(self, node) -> int:
        if not (isinstance(node, BracketList) and len(node.items) == self.d):
            raise RingError("expected a coefficient vector of length %d" % self.d)
        coords = []
        for item in node.items:
            if not isinstance(item, IntLit):
                raise RingError("coefficient vectors hold integers mod %d" % self.p)
            coords.append(item.value % self.p)
        return self.space.compose_scalar(coords)

    def render(self, i: int) -> str:
        return "[%s]" % ",".join(str(c) for c in self.space.decompose_scalar(i))


# ---------------------------------------------------------------------------
# constructors


def zmod(n: int, guards: Guards = DEFAULT_GUARDS, provenance: str = None,
         tables=None) -> RingTable:
    """Integers mod n."""
    if n < 2:
        raise RingError("Z(n) needs n >= 2")
    _guard_build(n, guards, "Z(%d)" % n)
    prov = provenance or "Z(%d)" % n
    labels = tuple(str(i) for i in range(n))
    if tables is None:
        dt = table_dtype(n)
        add = np.empty((n, n), dtype=dt)
        mul = np.empty((n, n), dtype=dt)
        cols = np.arange(n, dtype=np.int64)
        step = max(1, _CHUNK_CELLS // n)
        for r0 in range(0, n, step):
            rows = np.arange(r0, min(n, r0 + step), dtype=np.int64)[:, None]
            add[r0:r0 + rows.shape[0]] = (rows + cols) % n
            mul[r0:r0 + rows.shape[0]] = (rows * cols) % n
        tables = (add, mul)
    return build_ring(tables[0], tables[1], 0, 1 % n, labels, prov, ZmodLayout(n))


def _mat_positions(kind: str, n: int):
    if kind == "M":
        free = [(i, j) for i in range(n) for j in range(n)]
    elif kind == "U":
        free = [(i, j) for i in range(n) for j in range(i, n)]
    elif kind == "D":
        free = [(0, 0)] + [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "V":
        free = [(0, j) for j in range(n)]
    else:
        raise RingError("unknown matrix kind %r" % kind)
    entry = {}
    for i in range(n):
        for j in range(n):
            if kind == "M":
                entry[(i, j)] = free.index((i, j))
            elif kind == "U":
                entry[(i, j)] = free.index((i, j)) if i <= j else None
            elif kind == "D":
                if i == j:
                    entry[(i, j)] = 0
                elif i < j:
                    entry[(i, j)] = free.index((i, j))
                else:
                    entry[(i, j)] = None
            else:
                entry[(i, j)] = j - i if j >= i else None
    return free, entry


def matrix_ring(kind: str, n: int, base: RingTable,
                guards: Guards = DEFAULT_GUARDS, provenance: str = None,
                tables=None) -> RingTable:
    """n x n matrices over base, shaped by kind.

    M is the full matrix ring, U upper triangular, D constant main
    diagonal with free strict upper part, V constant on every
    superdiagonal (zero below).
    """
    if n < 1:
        raise RingError("matrix size must be >= 1")
    free, entry = _mat_positions(kind, n)
    space = _CoordSpace([base.order] * len(free))
    prov = provenance or "%s(%d,%s)" % (kind, n, base.provenance)
    _guard_build(space.order, guards, prov)
    layout = MatrixLayout(base, kind, n, free, entry, space)
    labels = tuple(layout.render(i) for i in range(space.order))
    badd, bmul = base.add, base.mul
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [badd[r, c] for r, c in zip(rc, cc)],
                           table_dtype(space.order))

        def mulfn(rc, cc):
            outs = []
            for (i, j) in free:
                acc = None
                for k in range(n):
                    a = entry[(i, k)]
                    b = entry[(k, j)]
                    if a is None or b is None:
                        continue
                    term = bmul[rc[a], cc[b]]
                    acc = term if acc is None else badd[acc, term]
                outs.append(acc)
            return outs

        mul = _build_table(space, mulfn, table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([base.zero] * len(free))
    one = space.compose_scalar([base.one if i == j else base.zero
                                for (i, j) in free])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def _require_central(base: RingTable, x: int, what: str):
    if not np.array_equal(base.mul[x], base.mul[:, x]):
        raise RingError("%s must be central in %s" % (what, base.provenance))


def h_ring(base: RingTable, s, t, guards: Guards = DEFAULT_GUARDS,
           provenance: str = None, tables=None) -> RingTable:
    """Order |base|^3 family of 3x3 matrices [[a,0,0],[c,d,f],[0,0,g]]
    with d = a - s*c and g = d - t*f, for central parameters s, t."""
    s = resolve_element(base, s)
    t = resolve_element(base, t)
    _require_central(base, s, "first parameter")
    _require_central(base, t, "second parameter")
    space = _CoordSpace([base.order] * 3)
    prov = provenance or "H(%s,%s,%s)" % (base.provenance, base.labels[s],
                                          base.labels[t])
    _guard_build(space.order, guards, prov)
    layout = HLayout(base, s, t, space)
    labels = tuple(layout.render(i) for i in range(space.order))
    badd, bmul, bneg = base.add, base.mul, base.neg
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [badd[r, c] for r, c in zip(rc, cc)],
                           table_dtype(space.order))

        def mulfn(rc, cc):
            a, c, f = rc
            x, y, u = cc
            d = badd[a, bneg[bmul[s, c]]]
            z = badd[x, bneg[bmul[s, y]]]
            v = badd[z, bneg[bmul[t, u]]]
            return [bmul[a, x],
                    badd[bmul[c, x], bmul[d, y]],
                    badd[bmul[d, u], bmul[f, v]]]

        mul = _build_table(space, mulfn, table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([base.zero] * 3)
    one = space.compose_scalar([base.one, base.zero, base.zero])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def k_ring(base: RingTable, s, guards: Guards = DEFAULT_GUARDS,
           provenance: str = None, tables=None) -> RingTable:
    """Order |base|^4 ring of 2x2 arrays (a,x,y,b) whose off-diagonal
    pairing is scaled by a central parameter s."""
    s = resolve_element(base, s)
    _require_central(base, s, "pairing parameter")
    space = _CoordSpace([base.order] * 4)
    prov = provenance or "K(%s,%s)" % (base.provenance, base.labels[s])
    _guard_build(space.order, guards, prov)
    layout = TupleLayout([base] * 4, space)
    labels = tuple(layout.render(i) for i in range(space.order))
    badd, bmul = base.add, base.mul
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [badd[r, c] for r, c in zip(rc, cc)],
                           table_dtype(space.order))

        def mulfn(rc, cc):
            a1, x1, y1, b1 = rc
            a2, x2, y2, b2 = cc
            return [badd[bmul[a1, a2], bmul[s, bmul[x1, y2]]],
                    badd[bmul[a1, x2], bmul[x1, b2]],
                    badd[bmul[y1, a2], bmul[b1, y2]],
                    badd[bmul[s, bmul[y1, x2]], bmul[b1, b2]]]

        mul = _build_table(space, mulfn, table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([base.zero] * 4)
    one = space.compose_scalar([base.one, base.zero, base.zero, base.one])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def _tuple_ring(comps: Sequence[RingTable], guards: Guards, prov: str,
                tables=None) -> RingTable:
    space = _CoordSpace([c.order for c in comps])
    _guard_build(space.order, guards, prov)
    layout = TupleLayout(comps, space)
    labels = tuple(layout.render(i) for i in range(space.order))
    if tables is None:
        adds = [c.add for c in comps]
        muls = [c.mul for c in comps]
        add = _build_table(space, lambda rc, cc:
                           [t[r, c] for t, r, c in zip(adds, rc, cc)],
                           table_dtype(space.order))
        mul = _build_table(space, lambda rc, cc:
                           [t[r, c] for t, r, c in zip(muls, rc, cc)],
                           table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([c.zero for c in comps])
    one = space.compose_scalar([c.one for c in comps])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def direct_product(factors: Sequence[RingTable], guards: Guards = DEFAULT_GUARDS,
                   provenance: str = None, tables=None) -> RingTable:
    """Componentwise product of the factor rings."""
    if len(factors) < 1:
        raise RingError("product needs at least one factor")
    prov = provenance or "prod(%s)" % ",".join(f.provenance for f in factors)
    return _tuple_ring(list(factors), guards, prov, tables)


def subring(R: RingTable, gens) -> np.ndarray:
    """Closure of gens together with 0 and 1, as sorted indices."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    mask[R.one] = True
    for g in gens:
        mask[resolve_element(R, g)] = True
    while True:
        m = np.flatnonzero(mask)
        reach = np.union1d(R.add[np.ix_(m, m)].ravel(),
                           R.mul[np.ix_(m, m)].ravel())
        grown = mask.copy()
        grown[reach] = True
        if np.array_equal(grown, mask):
            return m
        mask = grown


def sub_ring_table(R: RingTable, members: np.ndarray,
                   provenance: str = None) -> RingTable:
    """RingTable on a closed subset of R sharing R's identity."""
    return _restricted_ring(R, np.asarray(members), R.one,
                            provenance or R.provenance + "|sub", "subring")


def _restricted_ring(R: RingTable, members: np.ndarray, one_index: int,
                     prov: str, kind: str) -> RingTable:
    members = np.unique(members)
    posmap = np.full(R.order, -1, dtype=np.int64)
    posmap[members] = np.arange(len(members))
    if posmap[R.zero] < 0 or posmap[one_index] < 0:
        raise RingError("%s must contain zero and its identity" % kind)
    sadd = posmap[R.add[np.ix_(members, members)]]
    smul = posmap[R.mul[np.ix_(members, members)]]
    if (sadd < 0).any() or (smul < 0).any():
        raise RingError("subset of %s is not closed under the operations"
                        % R.provenance)
    labels = tuple(R.labels[int(i)] for i in members)
    layout = RestrictedLayout(R, members, posmap, kind)
    dt = table_dtype(len(members))
    return build_ring(sadd.astype(dt), smul.astype(dt), int(posmap[R.zero]),
                      int(posmap[one_index]), labels, prov, layout)


def dorroh(base: RingTable, gens, guards: Guards = DEFAULT_GUARDS,
           provenance: str = None, tables=None) -> RingTable:
    """Pairs (a, b) with b in the subring generated by gens; the
    product is (a,b)(c,d) = (ac + ad + bc, bd) and the identity (0,1)."""
    members = subring(base, gens)
    posmap = np.full(base.order, -1, dtype=np.int64)
    posmap[members] = np.arange(len(members))
    S = _restricted_ring(base, members, base.one, base.provenance + "|sub",
                         "subring")
    prov = provenance or "dorroh(%s,sub[%s])" % (
        base.provenance, ",".join(base.labels[resolve_element(base, g)]
                                  for g in gens))
    space = _CoordSpace([base.order, len(members)])
    _guard_build(space.order, guards, prov)
    layout = TupleLayout([base, S], space)
    labels = tuple(layout.render(i) for i in range(space.order))
    badd, bmul = base.add, base.mul
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [badd[rc[0], cc[0]], S.add[rc[1], cc[1]]],
                           table_dtype(space.order))

        def mulfn(rc, cc):
            a, bpos = rc
            c, dpos = cc
            b = members[bpos]
            d = members[dpos]
            first = badd[badd[bmul[a, c], bmul[a, d]], bmul[b, c]]
            return [first, posmap[bmul[b, d]]]

        mul = _build_table(space, mulfn, table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([base.zero, posmap[base.zero]])
    one = space.compose_scalar([base.zero, posmap[base.one]])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def _validate_hom(base: RingTable, images: np.ndarray):
    n = base.order
    if images.shape != (n,):
        raise RingError("hom table must list an image for each of the %d "
                        "elements" % n)
    if images.min() < 0 or images.max() >= n:
        raise RingError("hom table image out of range")
    if images[base.one] != base.one:
        raise RingError("hom must fix the identity")
    if images[base.zero] != base.zero:
        raise RingError("hom must fix zero")
    if not np.array_equal(images[base.add], base.add[np.ix_(images, images)]):
        raise RingError("hom table does not respect addition")
    if not np.array_equal(images[base.mul], base.mul[np.ix_(images, images)]):
        raise RingError("hom table does not respect multiplication")


def twisted_u2(base: RingTable, images, guards: Guards = DEFAULT_GUARDS,
               provenance: str = None, tables=None) -> RingTable:
    """Triples written [[a,b],[0,c]] where the (1,2) slot multiplies
    through a ring endomorphism: product (ax, ay + b*h(z), cz)."""
    images = np.asarray([resolve_element(base, im) for im in images],
                        dtype=np.int64)
    _validate_hom(base, images)
    space = _CoordSpace([base.order] * 3)
    prov = provenance or "twist(%s,hom[%s])" % (
        base.provenance, ",".join("#%d" % i for i in images))
    _guard_build(space.order, guards, prov)
    layout = TwistLayout(base, space)
    labels = tuple(layout.render(i) for i in range(space.order))
    badd, bmul = base.add, base.mul
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [badd[r, c] for r, c in zip(rc, cc)],
                           table_dtype(space.order))

        def mulfn(rc, cc):
            a, b, c = rc
            x, y, z = cc
            return [bmul[a, x],
                    badd[bmul[a, y], bmul[b, images[z]]],
                    bmul[c, z]]

        mul = _build_table(space, mulfn, table_dtype(space.order))
        tables = (add, mul)
    zero = space.compose_scalar([base.zero] * 3)
    one = space.compose_scalar([base.one, base.zero, base.one])
    return build_ring(tables[0], tables[1], zero, one, labels, prov, layout)


def trs(base: RingTable, gens, n: int, guards: Guards = DEFAULT_GUARDS,
        provenance: str = None, tables=None) -> RingTable:
    """(n+1)-tuples: n free coordinates in base, the last confined to
    the subring generated by gens; all operations componentwise."""
    if n < 0:
        raise RingError("tuple count must be >= 0")
    members = subring(base, gens)
    S = _restricted_ring(base, members, base.one, base.provenance + "|sub",
                         "subring")
    prov = provenance or "trs(%s,sub[%s],%d)" % (
        base.provenance, ",".join(base.labels[resolve_element(base, g)]
                                  for g in gens), n)
    return _tuple_ring([base] * n + [S], guards, prov, tables)


def ideal_closure(R: RingTable, gens) -> np.ndarray:
    """Smallest two-sided ideal containing gens, as sorted indices."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        mask[resolve_element(R, g)] = True
    while True:
        m = np.flatnonzero(mask)
        reach = np.unique(np.concatenate([R.add[np.ix_(m, m)].ravel(),
                                          R.mul[:, m].ravel(),
                                          R.mul[m, :].ravel()]))
        grown = mask.copy()
        grown[reach] = True
        if np.array_equal(grown, mask):
            return m
        mask = grown


def is_ideal(R: RingTable, members) -> bool:
    """True when the index set is a two-sided ideal of R."""
    m = np.unique(np.asarray(list(members), dtype=np.int64))
    mask = np.zeros(R.order, dtype=bool)
    mask[m] = True
    if not mask[R.zero]:
        return False
    return bool(mask[R.add[np.ix_(m, m)]].all()
                and mask[R.mul[:, m]].all()
                and mask[R.mul[m, :]].all())


def quotient(R: RingTable, gens, guards: Guards = DEFAULT_GUARDS,
             provenance: str = None, tables=None):
    """Quotient by the ideal generated by gens.

    Returns (ring, proj) where proj maps base indices to coset
    indices.  Cosets take their least-index member as representative,
    labelled 'rep+I'.
    """
    I = ideal_closure(R, gens)
    if int(np.searchsorted(I, R.one)) < len(I) and I[np.searchsorted(I, R.one)] == R.one:
        raise RingError("improper ideal: the generators span all of %s"
                        % R.provenance)
    rep_of = R.add[:, I].min(axis=1)
    reps = np.unique(rep_of)
    proj = np.searchsorted(reps, rep_of)
    prov = provenance or "quot(%s,%s)" % (
        R.provenance, ",".join(R.labels[resolve_element(R, g)] for g in gens))
    _guard_build(len(reps), guards, prov)
    layout = QuotientLayout(R, reps, proj)
    labels = tuple(layout.render(i) for i in range(len(reps)))
    if tables is None:
        qadd = proj[R.add[np.ix_(reps, reps)]]
        qmul = proj[R.mul[np.ix_(reps, reps)]]
        dt = table_dtype(len(reps))
        tables = (qadd.astype(dt), qmul.astype(dt))
    ring = build_ring(tables[0], tables[1], int(proj[R.zero]), int(proj[R.one]),
                      labels, prov, layout)
    ring._cache["projection"] = proj
    ring._cache["ideal"] = I
    return ring, proj


def corner(R: RingTable, e, guards: Guards = DEFAULT_GUARDS,
           provenance: str = None, tables=None):
    """Corner ring e*R*e for a nonzero idempotent e.

    Returns (ring, members) where members maps corner indices back to
    base indices; the corner's identity is e.
    """
    e = resolve_element(R, e)
    if int(R.mul[e, e]) != e:
        raise RingError("corner needs an idempotent element")
    if e == R.zero:
        raise RingError("corner at zero is not a unital ring")
    exe = R.mul[R.mul[e, np.arange(R.order)], e]
    members = np.unique(exe)
    prov = provenance or "corner(%s,%s)" % (R.provenance, R.labels[e])
    _guard_build(len(members), guards, prov)
    ring = _restricted_ring(R, members, e, prov, "corner")
    ring._cache["embedding"] = members
    return ring, members


def algebra_from_structure_constants(p: int, d: int, consts,
                                     guards: Guards = DEFAULT_GUARDS,
                                     provenance: str = None,
                                     tables=None) -> RingTable:
    """Finite algebra over Z/p from a d x d x d table of basis
    products; basis vector 0 must act as the identity."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise RingError("modulus %d is not prime" % p)
    if d < 1:
        raise RingError("dimension must be >= 1")
    C = np.asarray(consts, dtype=np.int64)
    if C.shape != (d, d, d):
        raise RingError("structure constants must have shape (%d,%d,%d)"
                        % (d, d, d))
    if C.min() < 0 or C.max() >= p:
        raise RingError("structure constants must lie in [0, %d)" % p)
    eye = np.eye(d, dtype=np.int64)
    if not (np.array_equal(C[0] % p, eye) and np.array_equal(C[:, 0] % p, eye)):
        raise RingError("basis vector 0 must be the identity")
    left = np.einsum("ijm,mkl->ijkl", C, C) % p
    right = np.einsum("jkm,iml->ijkl", C, C) % p
    if not np.array_equal(left, right):
        raise RingError("structure constants are not associative")
    space = _CoordSpace([p] * d)
    n = space.order
    if provenance is None:
        rows = ["[%s]" % ",".join("[%s]" % ",".join(str(v) for v in C[i, j])
                                  for j in range(d)) for i in range(d)]
        provenance = "algebra(%d,%d,[%s])" % (p, d, ",".join(rows))
    _guard_build(n, guards, provenance)
    layout = AlgebraLayout(p, d, space)
    labels = tuple(layout.render(i) for i in range(n))
    if tables is None:
        add = _build_table(space, lambda rc, cc:
                           [(r + c) % p for r, c in zip(rc, cc)],
                           table_dtype(n))
        X = np.stack(space.decompose(np.arange(n, dtype=np.int64)), axis=1)
        mul = np.empty((n, n), dtype=table_dtype(n))
        step = max(1, _CHUNK_CELLS // (n * d))
        strides = np.asarray(space.strides, dtype=np.int64)
        for r0 in range(0, n, step):
            xb = X[r0:min(n, r0 + step)]
            coords = np.einsum("xi,yj,ijm->xym", xb, X, C) % p
            mul[r0:r0 + xb.shape[0]] = coords @ strides
        tables = (add, mul)
    zero = 0
    one = space.compose_scalar(eye[0])
    return build_ring(tables[0], tables[1], zero, one, labels, provenance,
                      layout)


# ---------------------------------------------------------------------------
# expression dispatch and the table cache


def _consts_array(node: BracketList, p: int, d: int) -> np.ndarray:
    C = np.zeros((d, d, d), dtype=np.int64)
    if len(node.items) != d:
        raise RingError("structure constants must have %d rows" % d)
    for i, row in enumerate(node.items):
        if not (isinstance(row, BracketList) and len(row.items) == d):
            raise RingError("structure constants must have shape (%d,%d,%d)"
                            % (d, d, d))
        for j, cell in enumerate(row.items):
            if not (isinstance(cell, BracketList) and len(cell.items) == d):
                raise RingError("structure constants must have shape (%d,%d,%d)"
                                % (d, d, d))
            for k, v in enumerate(cell.items):
                if not isinstance(v, IntLit):
                    raise RingError("structure constants must be integers")
                C[i, j, k] = v.value % p
    return C


def _dispatch(node, guards: Guards, cache_dir, prov: str, tables):
    def sub(child):
        return build_expr(child, guards, cache_dir)

    if isinstance(node, ZExpr):
        return zmod(node.n, guards, prov, tables)
    if isinstance(node, MatExpr):
        return matrix_ring(node.kind, node.n, sub(node.base), guards, prov,
                           tables)
    if isinstance(node, HExpr):
        base = sub(node.base)
        return h_ring(base, _encode_node(base, node.s),
                      _encode_node(base, node.t), guards, prov, tables)
    if isinstance(node, KExpr):
        base = sub(node.base)
        return k_ring(base, _encode_node(base, node.s), guards, prov, tables)
    if isinstance(node, ProdExpr):
        return direct_product([sub(f) for f in node.factors], guards, prov,
                              tables)
    if isinstance(node, DorrohExpr):
        base = sub(node.base)
        return dorroh(base, [_encode_node(base, g) for g in node.sub.gens],
                      guards, prov, tables)
    if isinstance(node, QuotExpr):
        base = sub(node.base)
        ring, _ = quotient(base, [_encode_node(base, g) for g in node.gens],
                           guards, prov, tables)
        return ring
    if isinstance(node, CornerExpr):
        base = sub(node.base)
        ring, _ = corner(base, _encode_node(base, node.e), guards, prov,
                         tables)
        return ring
    if isinstance(node, TwistExpr):
        base = sub(node.base)
        return twisted_u2(base, [_encode_node(base, im)
                                 for im in node.hom.images], guards, prov,
                          tables)
    if isinstance(node, TrsExpr):
        base = sub(node.base)
        return trs(base, [_encode_node(base, g) for g in node.sub.gens],
                   node.n, guards, prov, tables)
    if isinstance(node, AlgebraExpr):
        C = _consts_array(node.consts, node.p, node.d)
        return algebra_from_structure_constants(node.p, node.d, C, guards,
                                                prov, tables)
    raise TypeError("not a ring expression: %r" % (node,))


def _cache_path(cache_dir: str, prov: str) -> str:
    key = hashlib.sha256(prov.encode("utf-8")).hexdigest()[:32]
    return os.path.join(cache_dir, "finring-%s.npz" % key)


def _load_tables(path: str):
    try:
        with np.load(path) as data:
            return np.array(data["add"]), np.array(data["mul"])
    except Exception:
        return None


def _save_tables(path: str, ring: RingTable):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".npz")
    try:
        with os.fdopen(fd, "wb") as fh:
            np.savez(fh, add=ring.add, mul=ring.mul)
        os.replace(tmp, path)
    except Exception:
        if os.path.exists(tmp):
            os.unlink(tmp)


def _identity_spot_check(ring: RingTable) -> bool:
    ar = np.arange(ring.order)
    return bool(np.array_equal(ring.mul[ring.one], ar)
                and np.array_equal(ring.mul[:, ring.one], ar))


def build_expr(node, guards: Guards = DEFAULT_GUARDS,
               cache_dir: Optional[str] = None) -> RingTable:
    """Build the ring described by an expression (text or AST).

    With cache_dir set, materialized tables are stored as .npz keyed by
    the canonical expression text and revalidated on load.
    """
    if isinstance(node, str):
        node = parse(node)
    prov = serialize(node)
    if cache_dir is None:
        return _dispatch(node, guards, None, prov, None)
    path = _cache_path(cache_dir, prov)
    if os.path.exists(path):
        tables = _load_tables(path)
        if tables is not None:
            try:
                ring = _dispatch(node, guards, cache_dir, prov, tables)
                if _identity_spot_check(ring):
                    return ring
            except RingError:
                pass  # stale or corrupt cache entry: rebuild below
    ring = _dispatch(node, guards, cache_dir, prov, None)
    _save_tables(path, ring)
    return ring
