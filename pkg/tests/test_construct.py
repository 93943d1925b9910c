"""One test cluster per construction, plus element resolution and caching."""

import numpy as np
import pytest

from finring import (
    RingError, build_expr, parse, resolve_element, verify_axioms,
)
from finring.construct import (
    corner, dorroh, direct_product, ideal_closure, is_ideal, quotient,
    sub_ring_table, subring, trs, twisted_u2, zmod,
)
from finring.iso import find_isomorphism, is_isomorphic, ring_generators

from oracle import mul, naive_center


def test_zmod_basics():
    R = zmod(6)
    assert R.order == 6
    assert R.provenance == "Z(6)"
    assert mul(R, 4, 5) == 2
    assert int(R.add[3, 5]) == 2
    with pytest.raises(RingError, match="n >= 2"):
        zmod(1)


@pytest.mark.parametrize("text,order,one_label", [
    ("M(2,Z(2))", 16, "[[1,0],[0,1]]"),
    ("U(2,Z(3))", 27, "[[1,0],[0,1]]"),
    ("D(3,Z(2))", 16, "[[1,0,0],[0,1,0],[0,0,1]]"),
    ("V(3,Z(2))", 8, "[[1,0,0],[0,1,0],[0,0,1]]"),
    ("H(Z(2),1,1)", 8, "[[1,0,0],[0,1,0],[0,0,1]]"),
    ("K(Z(2),0)", 16, "(1,0,0,1)"),
    ("prod(Z(2),Z(3))", 6, "(1,1)"),
    ("twist(Z(2),hom[#0,#1])", 8, "[[1,0],[0,1]]"),
    ("dorroh(Z(2),sub[])", 4, "(0,1)"),
    ("trs(Z(2),sub[],1)", 4, "(1,1)"),
    ("algebra(2,2,[[[1,0],[0,1]],[[0,1],[0,0]]])", 4, "[1,0]"),
], ids=lambda v: v if isinstance(v, str) and "(" in v else None)
def test_construction_order_and_identity(text, order, one_label):
    R = build_expr(text)
    assert R.order == order
    assert R.labels[R.one] == one_label
    assert verify_axioms(R).passed


def test_matrix_ring_multiplies_like_matrices():
    M = build_expr("M(2,Z(3))")
    a = resolve_element(M, "[[1,2],[0,1]]")
    b = resolve_element(M, "[[2,1],[1,0]]")
    assert M.labels[mul(M, a, b)] == "[[1,1],[1,0]]"


def test_upper_triangular_product():
    U = build_expr("U(2,Z(3))")
    a = resolve_element(U, "[[1,2],[0,1]]")
    b = resolve_element(U, "[[2,1],[0,2]]")
    assert U.labels[mul(U, a, b)] == "[[2,2],[0,2]]"


def test_h_ring_derived_entries():
    # rows are [a,0,0; c,d,f; 0,0,g] with d = a-s*c and g = d-t*f
    H = build_expr("H(Z(3),2,1)")
    assert H.order == 27
    x = resolve_element(H, "[[1,0,0],[1,2,1],[0,0,1]]")
    assert H.labels[x] == "[[1,0,0],[1,2,1],[0,0,1]]"
    with pytest.raises(RingError, match="diagonal relations"):
        resolve_element(H, "[[1,0,0],[1,1,1],[0,0,1]]")


def test_h_ring_requires_central_parameters():
    with pytest.raises(RingError, match="central"):
        build_expr("H(M(2,Z(2)),[[1,0],[0,0]],[[1,0],[0,1]])")
    # central non-units are fine, the family just gets smaller
    assert build_expr("H(Z(4),2,1)").order == 64


def test_k_ring_parameter_steers_the_product():
    # with the twist parameter equal to 1 the product is plain 2x2
    # matrix multiplication; with 0 the cross terms are killed
    M = build_expr("M(2,Z(2))")
    assert is_isomorphic(build_expr("K(Z(2),1)"), M)
    assert not is_isomorphic(build_expr("K(Z(2),0)"), M)
    K = build_expr("K(Z(2),0)")
    a = resolve_element(K, "(1,1,0,0)")
    b = resolve_element(K, "(0,0,1,1)")
    assert K.labels[mul(K, a, b)] == "(0,1,0,0)"


def test_dorroh_identity_and_embedding():
    # sub[...] takes the unital closure, so 2 drags in all of Z(4)
    D = build_expr("dorroh(Z(4),sub[2])")
    assert D.order == 4 * 4
    one = resolve_element(D, "(0,1)")
    assert one == D.one
    x = resolve_element(D, "(3,0)")
    assert D.labels[mul(D, x, one)] == "(3,0)"


def test_dorroh_with_noncentral_subring_is_still_a_ring():
    M = build_expr("M(2,Z(2))")
    e11 = resolve_element(M, "[[1,0],[0,0]]")
    D = dorroh(M, [e11])
    assert D.order == 16 * 4
    assert verify_axioms(D).passed


def test_direct_product_componentwise(rings):
    P = build_expr("prod(Z(2),Z(3))")
    x = resolve_element(P, "(1,2)")
    y = resolve_element(P, "(1,1)")
    assert P.labels[mul(P, x, y)] == "(1,2)"
    assert P.labels[int(P.add[x, y])] == "(0,0)"
    P3 = direct_product([rings["Z(2)"], rings["Z(2)"], rings["Z(3)"]])
    assert P3.order == 12


def test_subring_closure_contains_unit():
    M = build_expr("M(2,Z(2))")
    mem = subring(M, [resolve_element(M, "[[1,0],[0,0]]")])
    assert M.one in set(int(i) for i in mem)
    assert len(mem) == 4
    U = sub_ring_table(M, subring(M, [
        resolve_element(M, "[[1,0],[0,0]]"),
        resolve_element(M, "[[0,1],[0,0]]"),
    ]), provenance="upper")
    assert U.order == 8
    assert is_isomorphic(U, build_expr("U(2,Z(2))"))


def test_ideal_closure_and_membership():
    R = zmod(12)
    I = ideal_closure(R, [4])
    assert sorted(int(i) for i in I) == [0, 4, 8]
    assert is_ideal(R, I)
    M = build_expr("M(2,Z(2))")
    upper = subring(M, [resolve_element(M, "[[0,1],[0,0]]")])
    assert not is_ideal(M, upper)


def test_quotient_of_z12():
    Q = build_expr("quot(Z(12),4)")
    assert Q.order == 4
    assert Q.labels == ("0+I", "1+I", "2+I", "3+I")
    assert resolve_element(Q, "5+I") == 1
    assert is_isomorphic(Q, zmod(4))
    assert sorted(int(i) for i in Q._cache["ideal"]) == [0, 4, 8]
    assert Q._cache["projection"].tolist() == [0, 1, 2, 3] * 3


def test_quotient_rejects_improper_ideal():
    with pytest.raises(RingError, match="improper ideal"):
        quotient(zmod(12), [1])


def test_corner_ring():
    M = build_expr("M(2,Z(2))")
    e = resolve_element(M, "[[1,0],[0,0]]")
    C, members = corner(M, e)
    assert C.order == 2
    assert e in set(int(i) for i in members)
    assert is_isomorphic(C, zmod(2))
    with pytest.raises(RingError, match="corner at zero"):
        corner(M, M.zero)
    with pytest.raises(RingError, match="idempotent"):
        corner(M, resolve_element(M, "[[0,1],[0,0]]"))


def test_twisted_hom_validation():
    Z4 = zmod(4)
    with pytest.raises(RingError, match="image for each"):
        twisted_u2(Z4, [0, 1])
    with pytest.raises(RingError, match="fix zero"):
        twisted_u2(Z4, [1, 1, 3, 2])
    with pytest.raises(RingError, match="fix the identity"):
        twisted_u2(Z4, [0, 2, 3, 1])
    with pytest.raises(RingError, match="respect addition"):
        twisted_u2(Z4, [0, 1, 3, 2])
    # coordinate reversal on U(2,Z(2)) is additive and unital but not
    # multiplicative, so it must be caught by the last check
    U = build_expr("U(2,Z(2))")
    rev = [(i % 2) * 4 + (i // 2 % 2) * 2 + i // 4 for i in range(8)]
    with pytest.raises(RingError, match="respect multiplication"):
        twisted_u2(U, rev)


def test_twisted_product_with_identity_hom_is_triangular():
    T = build_expr("twist(Z(2),hom[#0,#1])")
    assert is_isomorphic(T, build_expr("U(2,Z(2))"))


def test_twisted_product_rule():
    # (a,b,c)(x,y,z) = (ax, ay + b*s(z), cz); s swaps the coordinates
    # of Z(2) x Z(2), which is a genuine automorphism
    T = build_expr("twist(prod(Z(2),Z(2)),hom[#0,#2,#1,#3])")
    a = resolve_element(T, "[[(1,1),(1,1)],[(0,0),(0,1)]]")
    x = resolve_element(T, "[[(1,0),(0,0)],[(0,0),(1,0)]]")
    # corner: (1,1)*0 + (1,1)*s((1,0)) = (1,1)*(0,1) = (0,1)
    assert T.labels[mul(T, a, x)] == "[[(1,0),(0,1)],[(0,0),(0,0)]]"


def test_trs_orders():
    Z2 = zmod(2)
    assert trs(Z2, [], 0).order == 2
    assert trs(Z2, [], 2).order == 8
    T = build_expr("trs(M(2,Z(2)),sub[[[1,0],[0,0]],[[0,1],[0,0]],[[0,0],[0,1]]],1)")
    assert T.order == 128
    assert verify_axioms(T).passed


def test_algebra_from_structure_constants():
    # 2-dim algebra over F2 with b1*b1 = b1 is Z2 x Z2
    A = build_expr("algebra(2,2,[[[1,0],[0,1]],[[0,1],[0,1]]])")
    assert A.order == 4
    assert verify_axioms(A).passed
    b1 = resolve_element(A, "[0,1]")
    assert mul(A, b1, b1) == b1


def test_algebra_rejects_bad_input():
    with pytest.raises(RingError, match="prime"):
        build_expr("algebra(4,2,[[[1,0],[0,1]],[[0,1],[0,0]]])")
    # first basis vector must act as the identity
    with pytest.raises(RingError):
        build_expr("algebra(2,2,[[[1,0],[0,0]],[[0,1],[0,0]]])")
    # b1*b1=b2, b1*b2=0, b2*b1=b1 is not associative
    with pytest.raises(RingError):
        build_expr(
            "algebra(2,3,[[[1,0,0],[0,1,0],[0,0,1]],"
            "[[0,1,0],[0,0,1],[0,0,0]],[[0,0,1],[1,0,0],[0,0,0]]])")


def test_resolve_element_forms(rings):
    M = build_expr("M(2,Z(2))")
    i = resolve_element(M, "[[1,1],[0,1]]")
    assert resolve_element(M, M.labels[i]) == i
    assert resolve_element(M, "#%d" % i) == i
    assert resolve_element(M, i) == i
    assert resolve_element(M, M.element(i)) == i
    with pytest.raises(RingError):
        resolve_element(M, "#99")
    with pytest.raises(RingError, match="2x2"):
        resolve_element(M, "[[1,0],[0,1],[0,0]]")
    with pytest.raises(RingError, match="disagree"):
        resolve_element(rings["V(3,Z(2))"], "[[1,1,0],[0,1,0],[0,0,1]]")


def test_build_expr_cache_round_trip(tmp_path):
    cache = str(tmp_path)
    R1 = build_expr("M(2,Z(3))", cache_dir=cache)
    files = list(tmp_path.iterdir())
    assert files, "cache directory stayed empty"
    R2 = build_expr("M(2,Z(3))", cache_dir=cache)
    assert np.array_equal(R1.add, R2.add)
    assert np.array_equal(R1.mul, R2.mul)
    assert R1.labels == R2.labels
    assert (R1.zero, R1.one) == (R2.zero, R2.one)


def test_build_expr_cache_survives_corruption(tmp_path):
    cache = str(tmp_path)
    R1 = build_expr("Z(9)", cache_dir=cache)
    for f in tmp_path.iterdir():
        f.write_bytes(b"not an archive")
    R2 = build_expr("Z(9)", cache_dir=cache)
    assert np.array_equal(R1.mul, R2.mul)


def test_build_expr_accepts_parsed_nodes():
    node = parse("quot(prod(Z(2),Z(4)),(0,2))")
    R = build_expr(node)
    assert R.order == 4


def test_iso_detects_crt_and_refuses_fakes(rings):
    assert is_isomorphic(rings["Z(6)"], rings["prod(Z(2),Z(3))"])
    assert not is_isomorphic(rings["Z(4)"], build_expr("prod(Z(2),Z(2))"))
    phi = find_isomorphism(rings["Z(6)"], rings["prod(Z(2),Z(3))"])
    R, S = rings["Z(6)"], rings["prod(Z(2),Z(3))"]
    assert phi[R.zero] == S.zero and phi[R.one] == S.one
    for a in range(6):
        for b in range(6):
            assert phi[int(R.mul[a, b])] == int(S.mul[phi[a], phi[b]])
            assert phi[int(R.add[a, b])] == int(S.add[phi[a], phi[b]])


def test_ring_generators_span(rings):
    M = build_expr("M(2,Z(2))")
    gens = ring_generators(M)
    assert len(subring(M, gens)) == M.order
    assert naive_center(M) == [M.zero, M.one]
