"""Table assembly, axiom checking and element arithmetic."""

import numpy as np
import pytest

from finring import (
    Guards, RingError, RingMismatchError, SizeGuardError,
    arith, build_expr, build_ring, power, verify_axioms,
)
from finring.core import table_dtype


def _z4_tables():
    n = 4
    add = np.fromfunction(lambda i, j: (i + j) % n, (n, n), dtype=int)
    mul = np.fromfunction(lambda i, j: (i * j) % n, (n, n), dtype=int)
    return add, mul, [str(i) for i in range(n)]


def test_build_ring_accepts_z4():
    add, mul, labels = _z4_tables()
    R = build_ring(add, mul, 0, 1, labels, provenance="Z(4)")
    assert R.order == 4
    assert R.neg.tolist() == [0, 3, 2, 1]
    assert verify_axioms(R).passed


def test_build_ring_rejects_bad_shapes():
    add, mul, labels = _z4_tables()
    with pytest.raises(RingError, match="square"):
        build_ring(add[:3], mul, 0, 1, labels)
    with pytest.raises(RingError, match="dimension mismatch"):
        build_ring(add, mul[:3, :3], 0, 1, labels)
    with pytest.raises(RingError, match="order < 2"):
        build_ring([[0]], [[0]], 0, 0, ["0"])


def test_build_ring_rejects_bad_indices():
    add, mul, labels = _z4_tables()
    bad = mul.copy()
    bad[2, 2] = 9
    with pytest.raises(RingError, match="out of range"):
        build_ring(add, bad, 0, 1, labels)
    with pytest.raises(RingError, match="zero/one"):
        build_ring(add, mul, 0, 7, labels)
    with pytest.raises(RingError, match="one = zero"):
        build_ring(add, mul, 1, 1, labels)


def test_build_ring_rejects_broken_group():
    add, mul, labels = _z4_tables()
    shifted = (add + 1) % 4
    with pytest.raises(RingError, match="identity"):
        build_ring(shifted, mul, 0, 1, labels)
    bad = add.copy()
    bad[1, 3] = 1          # row 1 loses its inverse
    with pytest.raises(RingError, match="unique inverse"):
        build_ring(bad, mul, 0, 1, labels)


def test_build_ring_rejects_bad_labels():
    add, mul, labels = _z4_tables()
    with pytest.raises(RingError, match="labels"):
        build_ring(add, mul, 0, 1, labels[:3])
    with pytest.raises(RingError, match="distinct"):
        build_ring(add, mul, 0, 1, ["x", "x", "y", "z"])


def test_verify_axioms_finds_broken_commutativity():
    add, mul, labels = _z4_tables()
    bad = add.copy()
    bad[1, 2] = 2          # keeps the zero row and inverses intact
    R = build_ring(bad, mul, 0, 1, labels)
    rep = verify_axioms(R)
    assert not rep.passed
    assert "add_commutative" in [name for name, _ in rep.violations]


def test_verify_axioms_finds_broken_distributivity():
    add, mul, labels = _z4_tables()
    bad = mul.copy()
    bad[2, 2] = 1
    rep = verify_axioms(build_ring(add, bad, 0, 1, labels))
    names = [name for name, _ in rep.violations]
    assert "mul_associative" in names
    assert "left_distributive" in names
    # witnesses are index tuples inside the ring
    for _, w in rep.violations:
        assert all(0 <= i < 4 for i in w)


def test_verify_axioms_finds_broken_identity():
    add, mul, labels = _z4_tables()
    bad = mul.copy()
    bad[1, 3] = 1
    rep = verify_axioms(build_ring(add, bad, 0, 1, labels))
    assert "one_identity" in [name for name, _ in rep.violations]


def test_verify_axioms_respects_triple_guard():
    R = build_expr("Z(6)")
    with pytest.raises(SizeGuardError, match="too large"):
        verify_axioms(R, Guards(triple_cap=4))


def test_element_arithmetic(rings):
    R = rings["Z(6)"]
    a, b = R.element(2), R.element(5)
    assert (a + b).index == 1
    assert (a - b).index == 3
    assert (a * b).index == 4
    assert (-a).index == 4
    assert R.zero_el + a == a
    assert R.one_el * b == b
    assert a.label == "2"
    assert "2" in repr(a)


def test_element_equality_and_hash(rings):
    R, S = rings["Z(6)"], rings["Z(4)"]
    assert R.element(2) == R.element(2)
    assert hash(R.element(2)) == hash(R.element(2))
    assert R.element(2) != S.element(2)
    assert R.element(2) != 2
    assert len({R.element(1), R.element(1), R.element(3)}) == 2


def test_cross_ring_arithmetic_is_rejected(rings):
    a = rings["Z(6)"].element(2)
    b = rings["Z(4)"].element(2)
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * b


def test_elements_iterator(rings):
    R = rings["Z(4)"]
    els = list(R.elements())
    assert len(els) == 4
    assert els[R.one].index == R.one
    assert R.label(R.zero) == "0"


def test_arith_dispatch(rings):
    R = rings["Z(6)"]
    assert arith(R, "add", 2, 5).index == 1
    assert arith(R, "sub", 2, 5).index == 3
    assert arith(R, "mul", R.element(2), 5).index == 4
    assert arith(R, "neg", 2).index == 4
    with pytest.raises(ValueError, match="unknown arith op"):
        arith(R, "div", 1, 1)
    with pytest.raises(RingMismatchError):
        arith(R, "add", rings["Z(4)"].element(1), 1)


def test_power(rings):
    R = rings["Z(6)"]
    assert power(R, 2, 3).index == 2
    assert power(R, 5, 2).index == 1
    assert power(R, R.element(3), 1).index == 3
    with pytest.raises(ValueError):
        power(R, 2, 0)


def test_table_dtype_boundary():
    assert table_dtype(100) == np.int16
    assert table_dtype(40000) == np.int32
