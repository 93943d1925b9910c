"""Dense operation-table representation of finite unital rings.

A ring of order n is two n-by-n index tables (add, mul) over element
indices 0..n-1, a negation vector, and distinguished zero/one indices.
Elements are just indices; equality is index equality.  Tables are
immutable once built: predicates cache derived sweeps on the ring.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "Guards", "DEFAULT_GUARDS", "RingError", "RingMismatchError",
    "SizeGuardError", "RingTable", "Element", "AxiomReport",
    "build_ring", "verify_axioms", "arith", "power",
]

# cells touched per chunk in the triple-sweep scans; bounds peak memory
_CHUNK_CELLS = 1 << 22


class RingError(ValueError):
    """A table or construction input is malformed."""


class RingMismatchError(RingError):
    """Elements of different rings were mixed in one operation."""


class SizeGuardError(RuntimeError):
    """The requested exhaustive sweep exceeds the configured size guard."""


@dataclass(frozen=True)
class Guards:
    """Size caps for exhaustive sweeps, overridable per call or via CLI.

    pair_cap bounds order for order^2-cost sweeps, triple_cap for
    order^3-cost sweeps, build_cap bounds the order of any table a
    constructor is willing to materialize.
    """
    pair_cap: int = 4096
    triple_cap: int = 1024
    build_cap: int = 10000


DEFAULT_GUARDS = Guards()


@dataclass(eq=False)
class RingTable:
    order: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    one: int
    labels: tuple
    provenance: str
    layout: object = None            # construction-aware label codec
    _cache: dict = field(default_factory=dict, repr=False)

    def element(self, i: int) -> "Element":
        if not 0 <= i < self.order:
            raise RingError("index %d out of range for order %d" % (i, self.order))
        return Element(self, int(i))

    def elements(self) -> Iterator["Element"]:
        return (Element(self, i) for i in range(self.order))

    def label(self, i: int) -> str:
        return self.labels[i]

    @property
    def zero_el(self) -> "Element":
        return Element(self, self.zero)

    @property
    def one_el(self) -> "Element":
        return Element(self, self.one)

    def __repr__(self):
        return "RingTable(order=%d, provenance=%r)" % (self.order, self.provenance)


@dataclass(frozen=True)
class Element:
    ring: RingTable
    index: int

    def _peer(self, other: "Element") -> int:
        if not isinstance(other, Element):
            raise TypeError("expected Element, got %r" % (other,))
        if other.ring is not self.ring:
            raise RingMismatchError("ring mismatch: %s vs %s"
                                    % (self.ring.provenance, other.ring.provenance))
        return other.index

    def __add__(self, other):
        return Element(self.ring, int(self.ring.add[self.index, self._peer(other)]))

    def __sub__(self, other):
        j = self._peer(other)
        return Element(self.ring, int(self.ring.add[self.index, self.ring.neg[j]]))

    def __mul__(self, other):
        return Element(self.ring, int(self.ring.mul[self.index, self._peer(other)]))

    def __neg__(self):
        return Element(self.ring, int(self.ring.neg[self.index]))

    def __eq__(self, other):
        return (isinstance(other, Element) and other.ring is self.ring
                and other.index == self.index)

    def __hash__(self):
        return hash((id(self.ring), self.index))

    @property
    def label(self) -> str:
        return self.ring.labels[self.index]

    def __repr__(self):
        return "<%s of %s>" % (self.label, self.ring.provenance)


@dataclass
class AxiomReport:
    passed: bool
    order: int
    # (axiom name, witness index tuple), first-found witness per axiom
    violations: list


def table_dtype(order: int):
    return np.int16 if order <= np.iinfo(np.int16).max else np.int32


def build_ring(add, mul, zero: int, one: int, labels: Sequence[str],
               provenance: str = "?", layout=None) -> RingTable:
    """Assemble and sanity-check a ring from raw tables.

    Validates shapes, index ranges, that `add` has the stated identity
    and a unique additive inverse per row (neg is derived from that),
    and that labels are distinct.  Associativity and distributivity are
    deliberately left to verify_axioms.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    if add.ndim != 2 or add.shape[0] != add.shape[1]:
        raise RingError("add table must be square, got shape %s" % (add.shape,))
    if mul.shape != add.shape:
        raise RingError("dimension mismatch: add %s vs mul %s" % (add.shape, mul.shape))
    n = add.shape[0]
    if n < 2:
        raise RingError("rings of order < 2 are rejected (one = zero)")
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            raise RingError("%s table has an index out of range" % name)
    if not (0 <= zero < n and 0 <= one < n):
        raise RingError("zero/one index out of range")
    if zero == one:
        raise RingError("rings of order < 2 are rejected (one = zero)")
    ar = np.arange(n)
    if not (np.array_equal(add[zero], ar) and np.array_equal(add[:, zero], ar)):
        raise RingError("add not a group: stated zero is not an identity")
    inv_hits = (add == zero).sum(axis=1)
    if not (inv_hits == 1).all():
        raise RingError("add not a group: some row lacks a unique inverse")
    neg = (add == zero).argmax(axis=1)
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise RingError("expected %d labels, got %d" % (n, len(labels)))
    if len(set(labels)) != n:
        raise RingError("labels are not distinct")
    dt = table_dtype(n)
    return RingTable(order=n, add=np.ascontiguousarray(add, dtype=dt),
                     mul=np.ascontiguousarray(mul, dtype=dt),
                     neg=neg.astype(dt), zero=int(zero), one=int(one),
                     labels=labels, provenance=provenance, layout=layout)


def _first_triple_witness(fn, n: int):
    # fn(a0, a1) -> (lhs, rhs) arrays of shape (a1-a0, n, n); scan in
    # lexicographic (a, b, c) order and stop at the first mismatch
    rows = max(1, _CHUNK_CELLS // max(1, n * n))
    for a0 in range(0, n, rows):
        a1 = min(n, a0 + rows)
        lhs, rhs = fn(a0, a1)
        neq = lhs != rhs
        if neq.any():
            flat = int(np.flatnonzero(neq.ravel())[0])
            i, b, c = np.unravel_index(flat, neq.shape)
            return (a0 + int(i), int(b), int(c))
    return None


def verify_axioms(R: RingTable, guards: Guards = DEFAULT_GUARDS) -> AxiomReport:
    """Exhaustively check the ring axioms over all pairs/triples.

    Checks additive commutativity and associativity, multiplicative
    associativity, both distributive laws, and the two-sided identity.
    Witnesses are the first violating tuple in lexicographic index
    order, one per axiom.  Raises SizeGuardError when order exceeds the
    triple guard: too large for exhaustive triple check.
    """
    n = R.order
    if n > guards.triple_cap:
        raise SizeGuardError(
            "order %d too large for exhaustive triple check (guard %d)"
            % (n, guards.triple_cap))
    add, mul = R.add, R.mul
    violations = []

    neq = add != add.T
    if neq.any():
        flat = int(np.flatnonzero(neq.ravel())[0])
        a, b = np.unravel_index(flat, neq.shape)
        violations.append(("add_commutative", (int(a), int(b))))

    ar = np.arange(n, dtype=add.dtype)
    bad = np.flatnonzero((mul[R.one] != ar) | (mul[:, R.one] != ar))
    if bad.size:
        violations.append(("one_identity", (int(bad[0]),)))

    def assoc(table):
        def fn(a0, a1):
            ab = table[a0:a1, :]
            return table[ab], table[a0:a1][:, table]
        return fn

    w = _first_triple_witness(assoc(add), n)
    if w is not None:
        violations.append(("add_associative", w))
    w = _first_triple_witness(assoc(mul), n)
    if w is not None:
        violations.append(("mul_associative", w))

    def ldist(a0, a1):
        lhs = mul[a0:a1][:, add]                    # a*(b+c)
        ab = mul[a0:a1, :]
        return lhs, add[ab[:, :, None], ab[:, None, :]]   # a*b + a*c

    w = _first_triple_witness(ldist, n)
    if w is not None:
        violations.append(("left_distributive", w))

    mulT = np.ascontiguousarray(mul.T)

    def rdist(a0, a1):
        lhs = mulT[a0:a1][:, add]                   # (b+c)*a
        ba = mulT[a0:a1, :]
        return lhs, add[ba[:, :, None], ba[:, None, :]]   # b*a + c*a

    w = _first_triple_witness(rdist, n)
    if w is not None:
        violations.append(("right_distributive", w))

    return AxiomReport(passed=not violations, order=n, violations=violations)


def arith(R: RingTable, op: str, *args) -> Element:
    """Generic dispatcher over {'add','sub','mul','neg'} on Elements."""
    els = []
    for a in args:
        if isinstance(a, Element):
            if a.ring is not R:
                raise RingMismatchError("ring mismatch in arith()")
            els.append(a)
        else:
            els.append(R.element(int(a)))
    if op == "add":
        return els[0] + els[1]
    if op == "sub":
        return els[0] - els[1]
    if op == "mul":
        return els[0] * els[1]
    if op == "neg":
        return -els[0]
    raise ValueError("unknown arith op %r" % op)


def power(R: RingTable, a, k: int) -> Element:
    """a**k by left-associated repeated multiplication, k >= 1."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    i = a.index if isinstance(a, Element) else int(a)
    acc = i
    for _ in range(k - 1):
        acc = int(R.mul[acc, i])
    return R.element(acc)
