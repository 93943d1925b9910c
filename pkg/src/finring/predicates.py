"""Zero-pattern properties of finite rings, absolute and relative to a
distinguished idempotent.

Verdicts carry the lexicographically least violating tuple so failures
replay deterministically.  Sweeps over all pairs or triples are cached
per ring as per-value minima: one pass prices every idempotent at once,
and per-e verdicts afterwards cost O(order).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import DEFAULT_GUARDS, Guards, RingError, RingTable
from .construct import resolve_element

__all__ = [
    "PropertyVerdict", "GLOBAL_PROPS", "E_PROPS", "ALL_PROPS",
    "check_property", "survey", "replay_witness", "idempotents",
    "nilpotents", "nilpotency_index", "center", "right_annihilator",
    "left_annihilator", "is_left_semicentral", "is_right_semicentral",
    "minimal_left_idempotents", "is_left_min_abel", "unit_inverse",
]

_SENTINEL = np.int64(1) << 62
_CHUNK_CELLS = 1 << 22

GLOBAL_PROPS = (
    "reduced", "reversible", "symmetric", "semicommutative", "reflexive",
    "right_idempotent_reflexive", "abelian", "semiprime", "prime", "domain",
    "directly_finite", "von_neumann_regular",
)
E_PROPS = (
    "right_e_reversible", "left_e_reversible", "right_e_reduced",
    "left_e_reduced", "e_symmetric", "right_e_semicommutative",
    "left_e_semicommutative",
)
ALL_PROPS = GLOBAL_PROPS + E_PROPS

# order^2-cost properties; the rest pay order^3 in the worst case
_PAIR_PROPS = frozenset((
    "reduced", "reversible", "abelian", "semiprime", "domain",
    "directly_finite", "von_neumann_regular", "right_e_reversible",
    "left_e_reversible", "right_e_reduced", "left_e_reduced",
))


@dataclass
class PropertyVerdict:
    property: str
    ring: str
    idempotent: Optional[str]
    status: str                        # holds | fails | skipped
    witness: Optional[tuple] = None    # element indices
    witness_labels: Optional[tuple] = None
    detail: Optional[str] = None
    reason: Optional[str] = None
    elapsed: float = 0.0

    def to_dict(self):
        return {
            "property": self.property,
            "ring": self.ring,
            "idempotent": self.idempotent,
            "status": self.status,
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_labels": (list(self.witness_labels)
                               if self.witness_labels is not None else None),
            "detail": self.detail,
            "reason": self.reason,
        }


# ---------------------------------------------------------------------------
# cached element sets


def idempotents(R: RingTable) -> np.ndarray:
    """Sorted indices of all idempotent elements."""
    c = R._cache.get("idem")
    if c is None:
        ar = np.arange(R.order)
        c = np.flatnonzero(R.mul[ar, ar] == ar)
        R._cache["idem"] = c
    return c


def nilpotents(R: RingTable) -> np.ndarray:
    """Sorted indices of all nilpotent elements (zero included)."""
    c = R._cache.get("nilp")
    if c is None:
        x = np.arange(R.order)
        # squaring ceil(log2 n)+1 times passes every nilpotency index
        for _ in range(max(1, int(np.ceil(np.log2(R.order))) + 1)):
            x2 = R.mul[x, x]
            if np.array_equal(x2, x):
                break
            x = x2
        c = np.flatnonzero(x == R.zero)
        R._cache["nilp"] = c
    return c


def nilpotency_index(R: RingTable, a: int) -> Optional[int]:
    """Least k with a^k = 0, or None if a is not nilpotent."""
    x = int(a)
    for k in range(1, R.order + 2):
        if x == R.zero:
            return k
        x = int(R.mul[x, a])
    return None


def center(R: RingTable) -> np.ndarray:
    c = R._cache.get("center")
    if c is None:
        c = np.flatnonzero((R.mul == R.mul.T).all(axis=1))
        R._cache["center"] = c
    return c


def right_annihilator(R: RingTable, xs) -> np.ndarray:
    """Indices y with x*y = 0 for every x in xs."""
    mask = np.ones(R.order, dtype=bool)
    for x in np.atleast_1d(np.asarray(xs, dtype=np.int64)):
        mask &= R.mul[int(x)] == R.zero
    return np.flatnonzero(mask)


def left_annihilator(R: RingTable, xs) -> np.ndarray:
    mask = np.ones(R.order, dtype=bool)
    for x in np.atleast_1d(np.asarray(xs, dtype=np.int64)):
        mask &= R.mul[:, int(x)] == R.zero
    return np.flatnonzero(mask)


def is_left_semicentral(R: RingTable, e) -> bool:
    """x*e = e*x*e for all x."""
    e = resolve_element(R, e)
    col = R.mul[:, e]
    return bool(np.array_equal(R.mul[e, col], col))


def is_right_semicentral(R: RingTable, e) -> bool:
    """e*x = e*x*e for all x."""
    e = resolve_element(R, e)
    row = R.mul[e, :]
    return bool(np.array_equal(R.mul[row, e], row))


def minimal_left_idempotents(R: RingTable) -> np.ndarray:
    """Nonzero idempotents f whose left ideal R*f is minimal."""
    c = R._cache.get("min_left_idem")
    if c is None:
        out = []
        for f in idempotents(R):
            if f == R.zero:
                continue
            Rf = np.unique(R.mul[:, f])
            minimal = True
            for x in Rf:
                if x == R.zero:
                    continue
                if not np.array_equal(np.unique(R.mul[:, x]), Rf):
                    minimal = False
                    break
            if minimal:
                out.append(int(f))
        c = np.asarray(out, dtype=np.int64)
        R._cache["min_left_idem"] = c
    return c


def is_left_min_abel(R: RingTable) -> bool:
    """Every minimal left idempotent is left semicentral."""
    return all(is_left_semicentral(R, int(f))
               for f in minimal_left_idempotents(R))


def unit_inverse(R: RingTable, x) -> Optional[int]:
    """Two-sided inverse of x, or None."""
    x = resolve_element(R, x)
    for h in np.flatnonzero(R.mul[x] == R.one):
        if R.mul[h, x] == R.one:
            return int(h)
    return None


# ---------------------------------------------------------------------------
# sweep caches: per-value minima over violating-candidate tuples


def _group_min(values: np.ndarray, codes: np.ndarray, out: np.ndarray):
    # out[v] = min(out[v], min of codes where values == v)
    if len(values) == 0:
        return
    order = np.argsort(values, kind="stable")
    sv = values[order]
    starts = np.flatnonzero(np.concatenate(([True], sv[1:] != sv[:-1])))
    gmin = np.minimum.reduceat(codes[order], starts)
    np.minimum.at(out, sv[starts], gmin)


def _multi_slice(starts: np.ndarray, lens: np.ndarray) -> np.ndarray:
    # concatenation of index ranges [starts[i], starts[i]+lens[i])
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    heads = np.repeat(np.cumsum(lens) - lens, lens)
    rel = np.arange(total, dtype=np.int64) - heads
    return np.repeat(starts, lens) + rel


def _zero_pairs(R: RingTable) -> np.ndarray:
    zp = R._cache.get("zp")
    if zp is None:
        zp = np.argwhere(R.mul == R.zero).astype(np.int64)  # lex (a, b)
        R._cache["zp"] = zp
    return zp


def _rev_min(R: RingTable) -> np.ndarray:
    """m[v] = least code a*n+b over zero pairs (a,b) with b*a = v."""
    m = R._cache.get("rev_min")
    if m is None:
        zp = _zero_pairs(R)
        n = R.order
        m = np.full(n, _SENTINEL, dtype=np.int64)
        A, B = zp[:, 0], zp[:, 1]
        _group_min(R.mul[B, A].astype(np.int64), A * n + B, m)
        R._cache["rev_min"] = m
    return m


def _scomm_cache(R: RingTable):
    """(m, rel): m[v] = least code (a*n+b)*n+r over zero pairs and r
    with a*r*b = v; rel = the zero pairs (a,b) with a*R*b = 0."""
    c = R._cache.get("scomm")
    if c is None:
        zp = _zero_pairs(R)
        n = R.order
        k = len(zp)
        m = np.full(n, _SENTINEL, dtype=np.int64)
        relmask = np.zeros(k, dtype=bool)
        rcol = np.arange(n, dtype=np.int64)
        step = max(1, _CHUNK_CELLS // max(1, n))
        for i0 in range(0, k, step):
            A, B = zp[i0:i0 + step, 0], zp[i0:i0 + step, 1]
            ARB = R.mul[R.mul[A], B[:, None]]          # (a*r)*b over all r
            codes = ((A * n + B) * n)[:, None] + rcol[None, :]
            _group_min(ARB.ravel().astype(np.int64), codes.ravel(), m)
            relmask[i0:i0 + len(A)] = (ARB == R.zero).all(axis=1)
        c = (m, zp[relmask])
        R._cache["scomm"] = c
    return c


def _symm_min(R: RingTable) -> np.ndarray:
    """m[v] = least code a*n^2+b*n+c over triples with a*b*c = 0 and
    a*c*b = v."""
    m = R._cache.get("symm_min")
    if m is None:
        n = R.order
        mul = R.mul
        order = np.argsort(mul.ravel(), kind="stable")   # pair codes by value b*c
        sv = np.asarray(mul.ravel())[order]
        vals = np.arange(n)
        starts = np.searchsorted(sv, vals)
        ends = np.searchsorted(sv, vals, side="right")
        lens = ends - starts
        m = np.full(n, _SENTINEL, dtype=np.int64)
        bufv, bufc, bufsize = [], [], 0
        nn = np.int64(n) * n
        for a in range(n):
            if a == R.zero:
                continue  # zero times anything vanishes on both sides
            ys = np.flatnonzero(mul[a] == R.zero)
            if len(ys) == 0:
                continue
            paircodes = order[_multi_slice(starts[ys], lens[ys])]
            if len(paircodes) == 0:
                continue
            b = paircodes // n
            cc = paircodes % n
            acb = mul[mul[a, cc], b].astype(np.int64)
            bufv.append(acb)
            bufc.append(np.int64(a) * nn + paircodes)
            bufsize += len(paircodes)
            if bufsize >= _CHUNK_CELLS:
                _group_min(np.concatenate(bufv), np.concatenate(bufc), m)
                bufv, bufc, bufsize = [], [], 0
        if bufv:
            _group_min(np.concatenate(bufv), np.concatenate(bufc), m)
        R._cache["symm_min"] = m
    return m


def _least_fail(m: np.ndarray, badvals: np.ndarray) -> Optional[int]:
    hit = (m < _SENTINEL) & badvals
    if not hit.any():
        return None
    return int(m[hit].min())


# ---------------------------------------------------------------------------
# individual checkers: return (witness indices, detail) or (None, None)


def _mul3(R, a, b, c):
    return int(R.mul[R.mul[a, b], c])


def _chk_reversible(R, e):
    code = _least_fail(_rev_min(R), np.arange(R.order) != R.zero)
    if code is None:
        return None, None
    a, b = divmod(code, R.order)
    return (a, b), ("%s*%s = 0 but %s*%s = %s"
                    % (R.labels[a], R.labels[b], R.labels[b], R.labels[a],
                       R.labels[int(R.mul[b, a])]))


def _chk_right_e_reversible(R, e):
    code = _least_fail(_rev_min(R), np.asarray(R.mul[:, e]) != R.zero)
    if code is None:
        return None, None
    a, b = divmod(code, R.order)
    return (a, b), ("%s*%s = 0 but (%s*%s)*e = %s"
                    % (R.labels[a], R.labels[b], R.labels[b], R.labels[a],
                       R.labels[_mul3(R, b, a, e)]))


def _chk_left_e_reversible(R, e):
    code = _least_fail(_rev_min(R), np.asarray(R.mul[e, :]) != R.zero)
    if code is None:
        return None, None
    a, b = divmod(code, R.order)
    return (a, b), ("%s*%s = 0 but e*(%s*%s) = %s"
                    % (R.labels[a], R.labels[b], R.labels[b], R.labels[a],
                       R.labels[_mul3(R, e, R.mul[b, a], R.one)]))


def _chk_semicommutative(R, e):
    m, _ = _scomm_cache(R)
    code = _least_fail(m, np.arange(R.order) != R.zero)
    if code is None:
        return None, None
    ab, r = divmod(code, R.order)
    a, b = divmod(ab, R.order)
    return (a, b, r), ("%s*%s = 0 but %s*%s*%s = %s"
                       % (R.labels[a], R.labels[b], R.labels[a], R.labels[r],
                          R.labels[b], R.labels[_mul3(R, R.mul[a, r], b, R.one)]))


def _chk_right_e_semicommutative(R, e):
    m, _ = _scomm_cache(R)
    code = _least_fail(m, np.asarray(R.mul[:, e]) != R.zero)
    if code is None:
        return None, None
    ab, r = divmod(code, R.order)
    a, b = divmod(ab, R.order)
    arb = _mul3(R, R.mul[a, r], b, R.one)
    return (a, b, r), ("%s*%s = 0 but (%s*%s*%s)*e = %s"
                       % (R.labels[a], R.labels[b], R.labels[a], R.labels[r],
                          R.labels[b], R.labels[int(R.mul[arb, e])]))


def _chk_left_e_semicommutative(R, e):
    m, _ = _scomm_cache(R)
    code = _least_fail(m, np.asarray(R.mul[e, :]) != R.zero)
    if code is None:
        return None, None
    ab, r = divmod(code, R.order)
    a, b = divmod(ab, R.order)
    arb = _mul3(R, R.mul[a, r], b, R.one)
    return (a, b, r), ("%s*%s = 0 but e*(%s*%s*%s) = %s"
                       % (R.labels[a], R.labels[b], R.labels[a], R.labels[r],
                          R.labels[b], R.labels[int(R.mul[e, arb])]))


def _chk_symmetric(R, e):
    code = _least_fail(_symm_min(R), np.arange(R.order) != R.zero)
    if code is None:
        return None, None
    a, rem = divmod(code, R.order * R.order)
    b, c = divmod(rem, R.order)
    return (a, b, c), ("%s*%s*%s = 0 but %s*%s*%s = %s"
                       % (R.labels[a], R.labels[b], R.labels[c], R.labels[a],
                          R.labels[c], R.labels[b],
                          R.labels[_mul3(R, R.mul[a, c], b, R.one)]))


def _chk_e_symmetric(R, e):
    code = _least_fail(_symm_min(R), np.asarray(R.mul[:, e]) != R.zero)
    if code is None:
        return None, None
    a, rem = divmod(code, R.order * R.order)
    b, c = divmod(rem, R.order)
    acb = _mul3(R, R.mul[a, c], b, R.one)
    return (a, b, c), ("%s*%s*%s = 0 but (%s*%s*%s)*e = %s"
                       % (R.labels[a], R.labels[b], R.labels[c], R.labels[a],
                          R.labels[c], R.labels[b],
                          R.labels[int(R.mul[acb, e])]))


def _chk_reduced(R, e):
    for x in nilpotents(R):
        if x != R.zero:
            return (int(x),), ("%s^%d = 0" % (R.labels[x],
                                              nilpotency_index(R, int(x))))
    return None, None


def _chk_right_e_reduced(R, e):
    for x in nilpotents(R):
        if R.mul[x, e] != R.zero:
            return (int(x),), ("%s^%d = 0 but %s*e = %s"
                               % (R.labels[x], nilpotency_index(R, int(x)),
                                  R.labels[x], R.labels[int(R.mul[x, e])]))
    return None, None


def _chk_left_e_reduced(R, e):
    for x in nilpotents(R):
        if R.mul[e, x] != R.zero:
            return (int(x),), ("%s^%d = 0 but e*%s = %s"
                               % (R.labels[x], nilpotency_index(R, int(x)),
                                  R.labels[x], R.labels[int(R.mul[e, x])]))
    return None, None


def _rel_codes(R):
    _, rel = _scomm_cache(R)
    return rel, rel[:, 0] * np.int64(R.order) + rel[:, 1]


def _chk_reflexive(R, e):
    rel, codes = _rel_codes(R)
    if len(rel) == 0:
        return None, None
    back = rel[:, 1] * np.int64(R.order) + rel[:, 0]
    pos = np.searchsorted(codes, back)
    pos[pos >= len(codes)] = len(codes) - 1
    bad = np.flatnonzero(codes[pos] != back)
    if len(bad) == 0:
        return None, None
    a, b = (int(v) for v in rel[bad[0]])
    r = int(np.flatnonzero(R.mul[R.mul[b, :], a] != R.zero)[0])
    return (a, b, r), ("%s*R*%s = 0 but %s*%s*%s = %s"
                       % (R.labels[a], R.labels[b], R.labels[b], R.labels[r],
                          R.labels[a], R.labels[_mul3(R, b, r, a)]))


def _chk_right_idempotent_reflexive(R, e):
    rel, codes = _rel_codes(R)
    if len(rel) == 0:
        return None, None
    idem = np.zeros(R.order, dtype=bool)
    idem[idempotents(R)] = True
    cand = np.flatnonzero(idem[rel[:, 1]])
    if len(cand) == 0:
        return None, None
    back = rel[cand, 1] * np.int64(R.order) + rel[cand, 0]
    pos = np.searchsorted(codes, back)
    pos[pos >= len(codes)] = len(codes) - 1
    bad = np.flatnonzero(codes[pos] != back)
    if len(bad) == 0:
        return None, None
    h, f = (int(v) for v in rel[cand[bad[0]]])
    r = int(np.flatnonzero(R.mul[R.mul[f, :], h] != R.zero)[0])
    return (h, f, r), ("%s*R*%s = 0 with %s idempotent, but %s*%s*%s = %s"
                       % (R.labels[h], R.labels[f], R.labels[f], R.labels[f],
                          R.labels[r], R.labels[h], R.labels[_mul3(R, f, r, h)]))


def _chk_prime(R, e):
    rel, _ = _rel_codes(R)
    live = rel[(rel[:, 0] != R.zero) & (rel[:, 1] != R.zero)]
    if len(live) == 0:
        return None, None
    a, b = (int(v) for v in live[0])
    return (a, b), ("%s*R*%s = 0 with both factors nonzero"
                    % (R.labels[a], R.labels[b]))


def _chk_semiprime(R, e):
    ar = np.arange(R.order)
    for a in np.flatnonzero(R.mul[ar, ar] == R.zero):
        a = int(a)
        if a == R.zero:
            continue
        if (R.mul[R.mul[a, :], a] == R.zero).all():
            return (a,), "%s*R*%s = 0 but %s is nonzero" % (
                R.labels[a], R.labels[a], R.labels[a])
    return None, None


def _chk_domain(R, e):
    zp = _zero_pairs(R)
    live = zp[(zp[:, 0] != R.zero) & (zp[:, 1] != R.zero)]
    if len(live) == 0:
        return None, None
    a, b = (int(v) for v in live[0])
    return (a, b), "%s*%s = 0 with both factors nonzero" % (
        R.labels[a], R.labels[b])


def _chk_abelian(R, e):
    for f in idempotents(R):
        f = int(f)
        diff = np.flatnonzero(R.mul[f, :] != R.mul[:, f])
        if len(diff):
            r = int(diff[0])
            return (f, r), ("idempotent %s is not central: %s*%s = %s, "
                            "%s*%s = %s"
                            % (R.labels[f], R.labels[f], R.labels[r],
                               R.labels[int(R.mul[f, r])], R.labels[r],
                               R.labels[f], R.labels[int(R.mul[r, f])]))
    return None, None


def _chk_directly_finite(R, e):
    op = np.argwhere(R.mul == R.one)
    bad = np.flatnonzero(R.mul[op[:, 1], op[:, 0]] != R.one)
    if len(bad) == 0:
        return None, None
    a, b = (int(v) for v in op[bad[0]])
    return (a, b), ("%s*%s = 1 but %s*%s = %s"
                    % (R.labels[a], R.labels[b], R.labels[b], R.labels[a],
                       R.labels[int(R.mul[b, a])]))


def _chk_von_neumann_regular(R, e):
    ar = np.arange(R.order)
    axa = R.mul[R.mul, ar[:, None]]        # axa[a, x] = (a*x)*a
    bad = np.flatnonzero(~(axa == ar[:, None]).any(axis=1))
    if len(bad) == 0:
        return None, None
    a = int(bad[0])
    return (a,), "no x satisfies %s*x*%s = %s" % (
        R.labels[a], R.labels[a], R.labels[a])


_DISPATCH = {
    "reduced": _chk_reduced,
    "reversible": _chk_reversible,
    "symmetric": _chk_symmetric,
    "semicommutative": _chk_semicommutative,
    "reflexive": _chk_reflexive,
    "right_idempotent_reflexive": _chk_right_idempotent_reflexive,
    "abelian": _chk_abelian,
    "semiprime": _chk_semiprime,
    "prime": _chk_prime,
    "domain": _chk_domain,
    "directly_finite": _chk_directly_finite,
    "von_neumann_regular": _chk_von_neumann_regular,
    "right_e_reversible": _chk_right_e_reversible,
    "left_e_reversible": _chk_left_e_reversible,
    "right_e_reduced": _chk_right_e_reduced,
    "left_e_reduced": _chk_left_e_reduced,
    "e_symmetric": _chk_e_symmetric,
    "right_e_semicommutative": _chk_right_e_semicommutative,
    "left_e_semicommutative": _chk_left_e_semicommutative,
}


def check_property(R: RingTable, prop: str, e=None,
                   guards: Guards = DEFAULT_GUARDS) -> PropertyVerdict:
    """Exhaustively decide one property, possibly relative to e.

    Oversized rings get a skipped verdict rather than an error; the
    caps distinguish order^2 sweeps from order^3 ones.
    """
    t0 = time.perf_counter()
    prop = prop.replace("-", "_")
    if prop not in _DISPATCH:
        raise ValueError("unknown property %r" % prop)
    needs_e = prop in E_PROPS
    eidx = None
    elabel = None
    if needs_e:
        if e is None:
            raise RingError("property %s is relative to an idempotent" % prop)
        eidx = resolve_element(R, e)
        if int(R.mul[eidx, eidx]) != eidx:
            raise RingError("%s is not idempotent in %s"
                            % (R.labels[eidx], R.provenance))
        if eidx == R.zero:
            raise RingError("the distinguished idempotent must be nonzero")
        elabel = R.labels[eidx]
    elif e is not None:
        raise RingError("property %s takes no idempotent" % prop)
    kind = "pair" if prop in _PAIR_PROPS else "triple"
    cap = guards.pair_cap if kind == "pair" else guards.triple_cap
    if R.order > cap:
        return PropertyVerdict(prop, R.provenance, elabel, "skipped",
                               reason="order %d exceeds the %s sweep guard %d"
                                      % (R.order, kind, cap),
                               elapsed=time.perf_counter() - t0)
    w, detail = _DISPATCH[prop](R, eidx)
    if w is None:
        return PropertyVerdict(prop, R.provenance, elabel, "holds",
                               elapsed=time.perf_counter() - t0)
    return PropertyVerdict(prop, R.provenance, elabel, "fails", tuple(w),
                           tuple(R.labels[i] for i in w), detail,
                           elapsed=time.perf_counter() - t0)


def survey(R: RingTable, guards: Guards = DEFAULT_GUARDS,
           properties=None, idempotent=None) -> list:
    """All properties of R: global ones, then each relative property
    at every nonzero idempotent (or just the one given)."""
    props = [p.replace("-", "_") for p in properties] if properties else None
    if props:
        for p in props:
            if p not in ALL_PROPS:
                raise ValueError("unknown property %r" % p)
    out = []
    for p in (props or GLOBAL_PROPS):
        if p in GLOBAL_PROPS:
            out.append(check_property(R, p, None, guards))
    wanted_e = [p for p in (props or E_PROPS) if p in E_PROPS]
    if not wanted_e:
        return out
    if idempotent is not None:
        es = [resolve_element(R, idempotent)]
    elif R.order > guards.pair_cap:
        # one skip marker per property beats one per idempotent here
        for p in wanted_e:
            out.append(PropertyVerdict(
                p, R.provenance, None, "skipped",
                reason="order %d exceeds the pair sweep guard %d"
                       % (R.order, guards.pair_cap)))
        return out
    else:
        es = [int(f) for f in idempotents(R) if f != R.zero]
    for f in es:
        for p in wanted_e:
            out.append(check_property(R, p, f, guards))
    return out


def replay_witness(R: RingTable, prop: str, e, witness) -> bool:
    """Recheck a violating tuple directly against the tables.

    True means the tuple really violates the property as stated; no
    sweeps are run, so this works on rings past the guard caps.
    """
    prop = prop.replace("-", "_")
    idx = [resolve_element(R, w) for w in witness]
    eidx = resolve_element(R, e) if e is not None else None
    mul = R.mul
    z = R.zero

    def m(*xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = int(mul[acc, x])
        return acc

    if prop == "reversible":
        a, b = idx
        return m(a, b) == z and m(b, a) != z
    if prop == "right_e_reversible":
        a, b = idx
        return m(a, b) == z and m(b, a, eidx) != z
    if prop == "left_e_reversible":
        a, b = idx
        return m(a, b) == z and m(eidx, m(b, a)) != z
    if prop == "symmetric":
        a, b, c = idx
        return m(a, b, c) == z and m(a, c, b) != z
    if prop == "e_symmetric":
        a, b, c = idx
        return m(a, b, c) == z and m(a, c, b, eidx) != z
    if prop == "semicommutative":
        a, b, r = idx
        return m(a, b) == z and m(a, r, b) != z
    if prop == "right_e_semicommutative":
        a, b, r = idx
        return m(a, b) == z and m(a, r, b, eidx) != z
    if prop == "left_e_semicommutative":
        a, b, r = idx
        return m(a, b) == z and m(eidx, m(a, r, b)) != z
    if prop == "reduced":
        (a,) = idx
        return a != z and nilpotency_index(R, a) is not None
    if prop == "right_e_reduced":
        (a,) = idx
        return nilpotency_index(R, a) is not None and m(a, eidx) != z
    if prop == "left_e_reduced":
        (a,) = idx
        return nilpotency_index(R, a) is not None and m(eidx, a) != z
    if prop == "reflexive":
        a, b, r = idx
        return (mul[mul[a, :], b] == z).all() and m(b, r, a) != z
    if prop == "right_idempotent_reflexive":
        h, f, r = idx
        return (m(f, f) == f and (mul[mul[h, :], f] == z).all()
                and m(f, r, h) != z)
    if prop == "semiprime":
        (a,) = idx
        return a != z and (mul[mul[a, :], a] == z).all()
    if prop == "prime":
        a, b = idx
        return a != z and b != z and (mul[mul[a, :], b] == z).all()
    if prop == "domain":
        a, b = idx
        return a != z and b != z and m(a, b) == z
    if prop == "abelian":
        f, r = idx
        return m(f, f) == f and m(f, r) != m(r, f)
    if prop == "directly_finite":
        a, b = idx
        return m(a, b) == R.one and m(b, a) != R.one
    if prop == "von_neumann_regular":
        (a,) = idx
        return not (mul[mul[a, :], a] == a).any()
    raise ValueError("unknown property %r" % prop)
