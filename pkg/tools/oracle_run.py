"""One-shot oracle pass over the planned corpus and registry.

Run before freezing anything into laws.py: every expected verdict and
witness printed here comes from the brute-force engine itself.
"""

import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import numpy as np

from finring import (
    DEFAULT_GUARDS, build_expr, check_property, idempotents, parse,
    is_left_semicentral, is_right_semicentral, is_left_min_abel,
    minimal_left_idempotents, replay_witness, verify_axioms,
    center, resolve_element,
)
from finring.construct import corner, ideal_closure, is_ideal, subring
from finring.predicates import right_annihilator
from finring.core import SizeGuardError

G = DEFAULT_GUARDS
HERE = os.path.dirname(__file__)


def load_lines():
    path = os.path.join(HERE, "..", "src", "finring", "corpus.txt")
    out = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                out.append(line)
    return out


def holds(R, prop, e=None):
    v = check_property(R, prop, e, G)
    if v.status == "skipped":
        return None
    return v.status == "holds"


def main():
    t0 = time.time()
    lines = load_lines()
    rings = {}
    print("== corpus build+verify ==")
    for line in lines:
        t1 = time.time()
        R = build_expr(parse(line), G)
        rings[line] = R
        try:
            rep = verify_axioms(R, G)
            ok = "ok" if rep.passed else "AXIOM FAIL %r" % rep.violations
        except SizeGuardError as e:
            ok = "verify skipped (%s)" % e
        print("  %-40s order %5d  %-30s %.2fs" % (line[:40], R.order, ok,
                                                  time.time() - t1))
    print("build+verify total: %.1fs" % (time.time() - t0))

    # prospective ere instance count
    n_inst = 0
    for line, R in rings.items():
        if R.order > G.pair_cap:
            continue
        n_inst += sum(1 for f in idempotents(R) if f != R.zero)
    print("\nere (ring, e) instances available: %d" % n_inst)

    # --- ere law dry run ---------------------------------------------------
    print("\n== ere dry run ==")
    bad = 0
    for line, R in rings.items():
        if R.order > G.pair_cap:
            continue
        for f in (int(x) for x in idempotents(R) if x != R.zero):
            cr, _ = corner(R, f, G)
            rev = holds(cr, "reversible")
            vr = holds(R, "right_e_reversible", f)
            vl = holds(R, "left_e_reversible", f)
            if vr != (is_left_semicentral(R, f) and rev):
                print("  RIGHT MISMATCH %s e=%s" % (line, R.labels[f]))
                bad += 1
            if vl != (is_right_semicentral(R, f) and rev):
                print("  LEFT MISMATCH %s e=%s" % (line, R.labels[f]))
                bad += 1
    print("  mismatches: %d" % bad)

    # --- semiprime collapse + min-abel -------------------------------------
    print("\n== semiprime collapse ==")
    napp = 0
    for line, R in rings.items():
        sp = holds(R, "semiprime")
        if sp is None or not sp:
            continue
        napp += 1
        for f in (int(x) for x in idempotents(R) if x != R.zero):
            legs = [holds(R, p, f) for p in
                    ("right_e_reversible", "right_e_reduced", "e_symmetric",
                     "right_e_semicommutative")]
            got = {v for v in legs if v is not None}
            if len(got) > 1:
                print("  COLLAPSE MISMATCH %s e=%s legs=%r"
                      % (line, R.labels[f], legs))
    print("  applicable rings: %d" % napp)

    print("\n== min-abel ==")
    for line, R in rings.items():
        if R.order > G.pair_cap:
            continue
        ma = is_left_min_abel(R)
        mel = [int(x) for x in minimal_left_idempotents(R)]
        leg_rev = all(holds(R, "right_e_reversible", f) for f in mel)
        leg_sym = (all(holds(R, "e_symmetric", f) for f in mel)
                   if R.order <= G.triple_cap else None)
        flag = "" if (ma == leg_rev and (leg_sym is None or ma == leg_sym)) \
            else "  <-- MISMATCH"
        if flag or not mel:
            pass
        if flag:
            print("  %s min_abel=%s rev=%s sym=%s |MEl|=%d%s"
                  % (line, ma, leg_rev, leg_sym, len(mel), flag))
    print("  (silence means zero mismatches)")

    # --- complement --------------------------------------------------------
    print("\n== complement applicability ==")
    for line, R in rings.items():
        if R.order > G.pair_cap:
            continue
        pairs = []
        for f in (int(x) for x in idempotents(R) if x != R.zero):
            g = int(R.add[R.one, R.neg[f]])
            if g == R.zero:
                continue
            if holds(R, "right_e_reversible", f) and \
               holds(R, "right_e_reversible", g):
                pairs.append(f)
        if pairs:
            sp = holds(R, "semiprime")
            red = holds(R, "reduced")
            rev = holds(R, "reversible")
            ok = (sp == red) and (not red or rev)
            print("  %-28s pairs=%d  sp=%s red=%s rev=%s  salvage_ok=%s"
                  % (line[:28], len(pairs), sp, red, rev, ok))

    # --- prime/domain -------------------------------------------------------
    print("\n== prime/domain ==")
    for line, R in rings.items():
        if R.order > G.triple_cap:
            continue
        ex = any(holds(R, "right_e_reversible", int(f))
                 for f in idempotents(R) if f != R.zero)
        pr = holds(R, "prime")
        dom = holds(R, "domain")
        df = holds(R, "directly_finite")
        ok = ((pr and ex) == dom) and (not dom or df)
        if not ok:
            print("  MISMATCH %s ex=%s prime=%s domain=%s df=%s"
                  % (line, ex, pr, dom, df))
    print("  (silence means zero mismatches)")

    # --- H-ring listed idempotents ------------------------------------------
    print("\n== H listed idempotents ==")
    for line, R in rings.items():
        node = parse(line)
        if type(node).__name__ != "HExpr":
            continue
        base = build_expr(node.base, G)
        s = resolve_element(base, node.s)
        t = resolve_element(base, node.t)
        sinv = None
        tinv = None
        for x in range(base.order):
            if int(base.mul[s, x]) == base.one and int(base.mul[x, s]) == base.one:
                sinv = x
            if int(base.mul[t, x]) == base.one and int(base.mul[x, t]) == base.one:
                tinv = x
        for e in (int(x) for x in idempotents(base) if x != base.zero):
            ne = int(base.neg[e])
            mi = lambda u, v: int(base.mul[u, v])
            if s == base.one and t == base.one:
                coords = [(e, 0, 0), (e, e, 0), (0, 0, ne), (e, e, ne),
                          (0, ne, e), (e, 0, e), (0, ne, 0)]
            elif s != base.one and t == base.one:
                coords = [(e, 0, 0), (e, 0, e), (0, mi(base.neg[sinv], e), 0)]
            elif s == base.one and t != base.one:
                coords = [(e, 0, 0), (e, 0, mi(tinv, e)), (0, ne, 0)]
            else:
                coords = [(e, 0, 0), (0, mi(base.neg[sinv], e), 0),
                          (e, 0, mi(tinv, e)),
                          (0, mi(base.neg[sinv], e), mi(tinv, e))]
            space = R.layout.space
            vR = holds(base, "right_e_reversible", e)
            stat = []
            for cs in coords:
                E = space.compose_scalar(list(cs))
                idem = int(R.mul[E, E]) == E
                vH = holds(R, "right_e_reversible", E)
                stat.append((idem, vH == vR))
            listed = set()
            for e2 in (int(x) for x in idempotents(base)):
                if e2 == base.zero:
                    listed.add(R.zero)
                    continue
                ne2 = int(base.neg[e2])
                if s == base.one and t == base.one:
                    cc = [(e2, 0, 0), (e2, e2, 0), (0, 0, ne2), (e2, e2, ne2),
                          (0, ne2, e2), (e2, 0, e2), (0, ne2, 0)]
                elif s != base.one and t == base.one:
                    cc = [(e2, 0, 0), (e2, 0, e2), (0, mi(base.neg[sinv], e2), 0)]
                elif s == base.one and t != base.one:
                    cc = [(e2, 0, 0), (e2, 0, mi(tinv, e2)), (0, ne2, 0)]
                else:
                    cc = [(e2, 0, 0), (0, mi(base.neg[sinv], e2), 0),
                          (e2, 0, mi(tinv, e2)),
                          (0, mi(base.neg[sinv], e2), mi(tinv, e2))]
                for cs in cc:
                    listed.add(space.compose_scalar(list(cs)))
            nid = len(idempotents(R))
            print("  %-14s e=%s all_idem=%s all_iff=%s listed=%d total_id=%d"
                  % (line, base.labels[e],
                     all(a for a, _ in stat), all(b for _, b in stat),
                     len(listed), nid))

    # --- twisted converse ----------------------------------------------------
    print("\n== twisted pairs ==")
    for line, R in rings.items():
        node = parse(line)
        if type(node).__name__ != "TwistExpr":
            continue
        base = build_expr(node.base, G)
        images = [resolve_element(base, im) for im in node.hom.images]
        space = R.layout.space
        for e in (int(x) for x in idempotents(base) if x != base.zero):
            E = space.compose_scalar([e, base.zero, e])
            vT = holds(R, "right_e_reversible", E)
            vR = holds(base, "right_e_reversible", e)
            ker = images[e] == base.zero
            fwd_ok = (not vT) or vR
            conv_ok = (not ker) or (vT == vR)
            print("  %-44s e=%s sigma(e)=0:%s vT=%s vR=%s fwd=%s conv=%s"
                  % (line[:44], base.labels[e], ker, vT, vR, fwd_ok, conv_ok))

    # --- dorroh --------------------------------------------------------------
    print("\n== dorroh ==")
    for line, R in rings.items():
        node = parse(line)
        if type(node).__name__ != "DorrohExpr":
            continue
        base = build_expr(node.base, G)
        members = subring(base, list(node.sub.gens))
        cen = set(int(x) for x in center(base))
        central = all(int(m) in cen for m in members)
        isid_base = np.zeros(base.order, dtype=bool)
        isid_base[idempotents(base)] = True
        expect = np.zeros((base.order, len(members)), dtype=bool)
        for pos, b in enumerate(int(x) for x in members):
            expect[:, pos] = isid_base[base.add[:, b]] & isid_base[b]
        actual = np.zeros(R.order, dtype=bool)
        actual[idempotents(R)] = True
        ok_id = np.array_equal(actual.reshape(base.order, len(members)), expect)
        pos0 = int(np.searchsorted(members, base.zero))
        stat = []
        for e in (int(x) for x in idempotents(base) if x != base.zero):
            D_e = R.layout.space.compose_scalar([e, pos0])
            stat.append(holds(R, "right_e_reversible", D_e)
                        == holds(base, "right_e_reversible", e))
        print("  %-28s central=%s id_law=%s transfer_all=%s (%d es)"
              % (line[:28], central, ok_id, all(stat), len(stat)))

    # --- products ------------------------------------------------------------
    print("\n== products ==")
    for line, R in rings.items():
        node = parse(line)
        if type(node).__name__ != "ProdExpr" or len(node.factors) != 2:
            continue
        f1 = build_expr(node.factors[0], G)
        f2 = build_expr(node.factors[1], G)
        space = R.layout.space
        bad = 0
        cnt = 0
        for e1 in (int(x) for x in idempotents(f1) if x != f1.zero):
            for e2 in (int(x) for x in idempotents(f2) if x != f2.zero):
                E = space.compose_scalar([e1, e2])
                cnt += 1
                if holds(R, "right_e_reversible", E) != (
                        holds(f1, "right_e_reversible", e1)
                        and holds(f2, "right_e_reversible", e2)):
                    bad += 1
        print("  %-36s pairs=%d mismatches=%d" % (line[:36], cnt, bad))

    # --- quotient lift + annihilator ------------------------------------------
    print("\n== quotient lift ==")
    for line, R in rings.items():
        node = parse(line)
        if type(node).__name__ != "QuotExpr":
            continue
        base = build_expr(node.base, G)
        I = R._cache["ideal"]
        proj = R._cache["projection"]
        sq = [int(x) for x in I
              if x != base.zero and int(base.mul[x, x]) == base.zero]
        if sq:
            print("  %-32s I not reduced (e.g. %s^2=0)"
                  % (line[:32], base.labels[sq[0]]))
            continue
        for e in (int(x) for x in idempotents(base) if x != base.zero):
            eb = int(proj[e])
            if eb == R.zero:
                print("  %-32s e=%s collapses" % (line[:32], base.labels[e]))
                continue
            prem = holds(R, "right_e_reversible", eb)
            if prem:
                concl = holds(base, "right_e_reversible", e) and \
                    is_left_semicentral(base, e)
                print("  %-32s e=%-6s premise ok, conclusion=%s"
                      % (line[:32], base.labels[e], concl))
            else:
                print("  %-32s e=%-6s premise fails" % (line[:32],
                                                        base.labels[e]))

    print("\n== annihilator quotient ==")
    from finring.construct import quotient
    for rt, jt in [("Z(12)", "4"), ("Z(12)", "0"), ("Z(12)", "1"),
                   ("Z(6)", "2"), ("Z(8)", "2")]:
        R = build_expr(parse(rt), G)
        j = resolve_element(R, jt)
        I = right_annihilator(R, [j])
        imp = R.one in set(int(x) for x in I)
        ide = is_ideal(R, I)
        msg = "improper" if imp else ("not ideal" if not ide else "")
        if msg:
            print("  %s J={%s}: %s" % (rt, jt, msg))
            continue
        Q, proj = quotient(R, [int(x) for x in I], G)
        for e in (int(x) for x in idempotents(R) if x != R.zero):
            if not holds(R, "e_symmetric", e):
                print("  %s J={%s} e=%s: not applicable" % (rt, jt, R.labels[e]))
                continue
            eb = int(proj[e])
            if eb == Q.zero:
                print("  %s J={%s} e=%s: image zero, trivial" % (rt, jt,
                                                                 R.labels[e]))
                continue
            print("  %s J={%s} e=%s: quotient right-rev=%s (|Q|=%d)"
                  % (rt, jt, R.labels[e], holds(Q, "right_e_reversible", eb),
                     Q.order))

    print("\ntotal %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
