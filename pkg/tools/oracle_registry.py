"""Compute every example-registry verdict with the engine before freezing."""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import numpy as np

from finring import (
    DEFAULT_GUARDS as G, build_expr, check_property, idempotents, parse,
    replay_witness, resolve_element,
)

HERE = os.path.dirname(__file__)


def corpus_line(prefix):
    with open(os.path.join(HERE, "..", "src", "finring", "corpus.txt")) as fh:
        for raw in fh:
            line = raw.strip()
            if line.startswith(prefix):
                return line
    raise SystemExit("no corpus line starting with %r" % prefix)


def V(R, prop, e=None):
    v = check_property(R, prop, e, G)
    return v


def show(tag, R, prop, e_lbl=None):
    e = resolve_element(R, e_lbl) if e_lbl is not None else None
    v = V(R, prop, e)
    wl = tuple(R.labels[i] for i in v.witness) if v.witness else None
    print("  %s %s e=%s -> %s witness=%s" % (tag, prop, e_lbl, v.status, wl))
    return v


t0 = time.time()

print("(a) U(2,Z(3))")
R = build_expr(parse("U(2,Z(3))"), G)
show("a", R, "reversible")
show("a", R, "right_e_reversible", "[[1,1],[0,0]]")
show("a", R, "left_e_reversible", "[[1,1],[0,0]]")
show("a", R, "left_e_reversible", "[[0,0],[0,1]]")
show("a", R, "right_e_reversible", "[[0,0],[0,1]]")

print("(b) M(3,Z(2)) E=E11+E33")
R = build_expr(parse("M(3,Z(2))"), G)
E = "[[1,0,0],[0,0,0],[0,0,1]]"
show("b", R, "right_e_reversible", E)
show("b", R, "left_e_reversible", E)
a = resolve_element(R, "[[0,0,0],[0,0,1],[0,0,0]]")
b = resolve_element(R, "[[0,1,0],[0,0,0],[0,0,0]]")
e = resolve_element(R, E)
print("  hand-picked witness right replay:",
      replay_witness(R, "right_e_reversible", e, (a, b)))
print("  hand-picked witness left replay:",
      replay_witness(R, "left_e_reversible", e, (a, b)))

print("(c) U(2,Z(3)) E=E11")
R = build_expr(parse("U(2,Z(3))"), G)
show("c", R, "right_e_reversible", "[[1,0],[0,0]]")
show("c", R, "reversible")

print("(d) U(2,Z(3)) reflexive")
v = show("d", R, "reflexive")
a = resolve_element(R, "[[0,1],[0,1]]")
b = resolve_element(R, "[[1,1],[0,0]]")
found = None
for r in range(R.order):
    arb = int(R.mul[R.mul[a, r], b])
    bra = int(R.mul[R.mul[b, r], a])
    if bra != R.zero:
        allz = all(int(R.mul[R.mul[a, rr], b]) == R.zero for rr in range(R.order))
        if allz:
            found = r
            break
print("  aRb all zero, bra!=0 at r=%s:" % (R.labels[found] if found is not None else None),
      replay_witness(R, "reflexive", None, (a, b, found)))

print("(e) R16 + H(R16,1,1)")
R16 = build_expr(parse(corpus_line("algebra(2,4")), G)
show("e", R16, "semicommutative")
show("e", R16, "reversible")
a = resolve_element(R16, "[0,1,0,0]")
b = resolve_element(R16, "[0,0,1,0]")
print("  ab=%s ba=%s" % (R16.labels[int(R16.mul[a, b])], R16.labels[int(R16.mul[b, a])]))
t1 = time.time()
H = build_expr(parse("H(%s,1,1)" % corpus_line("algebra(2,4")), G)
print("  H order %d built in %.1fs" % (H.order, time.time() - t1))
sp = H.layout.space
E = sp.compose_scalar([R16.one, R16.one, 0])
A = sp.compose_scalar([a, a, 0])
B = sp.compose_scalar([b, b, 0])
AB = int(H.mul[A, B])
BA = int(H.mul[B, A])
BAE = int(H.mul[BA, E])
print("  E idem:", int(H.mul[E, E]) == E, "AB==0:", AB == H.zero,
      "BAE!=0:", BAE != H.zero, "BAE==BA:", BAE == BA)
print("  labels: E=%s A=%s B=%s" % (H.labels[E], H.labels[A], H.labels[B]))
print("  replay:", replay_witness(H, "right_e_reversible", E, (A, B)))

print("(f) D(2,U(2,Z(3)))")
R = build_expr(parse("D(2,U(2,Z(3)))"), G)
print("  order", R.order)
U = build_expr(parse("U(2,Z(3))"), G)
su = U.layout.space
sA = su.compose_scalar([0, 1, 0]); uA = su.compose_scalar([2, 1, 2])
sB = su.compose_scalar([0, 1, 0]); uB = su.compose_scalar([2, 1, 1])
sE = su.compose_scalar([0, 0, 1])
sp = R.layout.space
A = sp.compose_scalar([sA, uA]); B = sp.compose_scalar([sB, uB])
E = sp.compose_scalar([sE, U.zero])
print("  E idem:", int(R.mul[E, E]) == E)
print("  labels: E=%s A=%s B=%s" % (R.labels[E], R.labels[A], R.labels[B]))
print("  AB==0:", int(R.mul[A, B]) == R.zero,
      "BAE!=0:", int(R.mul[int(R.mul[B, A]), E]) != R.zero)
v = V(R, "right_e_reversible", E)
print("  sweep:", v.status, "engine witness:",
      tuple(R.labels[i] for i in v.witness) if v.witness else None)
print("  replay:", replay_witness(R, "right_e_reversible", E, (A, B)))

print("(g) D(3,Z(2))")
R = build_expr(parse("D(3,Z(2))"), G)
ids = [int(x) for x in idempotents(R)]
print("  idempotents:", [R.labels[i] for i in ids])
sp = R.layout.space
A = sp.compose_scalar([0, 0, 0, 1])
B = sp.compose_scalar([0, 1, 0, 1])
print("  labels A=%s B=%s one=%s" % (R.labels[A], R.labels[B], R.labels[R.one]))
print("  AB==0:", int(R.mul[A, B]) == R.zero,
      "BA(=BAI)!=0:", int(R.mul[B, A]) != R.zero)
for e in ids:
    if e != R.zero:
        v = V(R, "right_e_reversible", e)
        print("  e=%s right_e_rev -> %s" % (R.labels[e], v.status))
# ambient law: AB=0 implies BA has zero diag and zero (0,1) entry
bad = 0
mul = R.mul
dec = R.layout.space.decompose
for a_ in range(R.order):
    row = mul[a_]
    zz = np.nonzero(row == R.zero)[0]
    ba = mul[zz, a_]
    cs = dec(ba)
    if np.any(cs[0] != 0) or np.any(cs[1] != 0):
        bad += 1
print("  ambient BA*E22==0 scan violations:", bad)

print("(h) V(3,Z(2))")
R = build_expr(parse("V(3,Z(2))"), G)
show("h", R, "right_e_reversible", "[[1,0,0],[0,1,0],[0,0,1]]")

print("(i) U(2,Z(3)) E=diag(0,1)")
R = build_expr(parse("U(2,Z(3))"), G)
show("i", R, "directly_finite")
show("i", R, "prime")
show("i", R, "right_e_reversible", "[[0,0],[0,1]]")
a = resolve_element(R, "[[0,1],[0,1]]")
b = resolve_element(R, "[[1,1],[0,0]]")
e = resolve_element(R, "[[0,0],[0,1]]")
print("  hand-picked witness replay:", replay_witness(R, "right_e_reversible", e, (a, b)))

print("(j) K(Z(3),0)")
R = build_expr(parse("K(Z(3),0)"), G)
ids = [int(x) for x in idempotents(R)]
print("  |Id| =", len(ids))
fails = 0
for e in ids:
    if e == R.zero:
        continue
    v = V(R, "right_e_reversible", e)
    if v.status == "fails":
        fails += 1
        wl = tuple(R.labels[i] for i in v.witness)
        ok = replay_witness(R, "right_e_reversible", e, v.witness[:2])
        print("  e=%-12s fails witness=%s replay=%s" % (R.labels[e], wl, ok))
    else:
        print("  e=%-12s %s  <-- UNEXPECTED" % (R.labels[e], v.status))
print("  nonzero failing:", fails)

print("(k) trs(M(2,Z(2)),upper,1)")
R = build_expr(parse(corpus_line("trs(M(2,Z(2))")), G)
M = build_expr(parse("M(2,Z(2))"), G)
e = resolve_element(M, "[[1,1],[0,0]]")
members = R._cache.get("members")
print("  cache keys:", sorted(R._cache.keys()))
sp = R.layout.space
# position of e inside the S side
import numpy as _np
E = resolve_element(R, "([[1,1],[0,0]],[[1,1],[0,0]])")
print("  E idem:", int(R.mul[E, E]) == E, "E label:", R.labels[E])
v = V(R, "right_e_reversible", E)
print("  sweep:", v.status, "witness:",
      tuple(R.labels[i] for i in v.witness) if v.witness else None)
A = resolve_element(R, "([[1,0],[0,0]],[[0,0],[0,0]])")
B = resolve_element(R, "([[0,0],[1,0]],[[0,0],[0,0]])")
print("  frozen witness replay:", replay_witness(R, "right_e_reversible", E, (A, B)))

print("\ntotal %.1fs" % (time.time() - t0))
