"""Engine verdicts against the naive loops, plus witness behavior."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from finring import (
    E_PROPS, GLOBAL_PROPS, Guards, RingError, build_expr, check_property,
    idempotents, is_left_min_abel, is_left_semicentral, is_right_semicentral,
    left_annihilator, minimal_left_idempotents, nilpotency_index, nilpotents,
    replay_witness, right_annihilator, survey,
)

import oracle
from conftest import SMALL_RINGS


def nonzero_idempotents(R):
    return [e for e in oracle.naive_idempotents(R) if e != R.zero]


@pytest.mark.parametrize("text", SMALL_RINGS)
@pytest.mark.parametrize("prop", GLOBAL_PROPS)
def test_global_properties_match_naive(rings, text, prop):
    R = rings[text]
    verdict = check_property(R, prop)
    assert verdict.status in ("holds", "fails")
    assert (verdict.status == "holds") == oracle.naive_check(R, prop)


@pytest.mark.parametrize("text", SMALL_RINGS)
@pytest.mark.parametrize("prop", E_PROPS)
def test_relative_properties_match_naive(rings, text, prop):
    R = rings[text]
    for e in nonzero_idempotents(R):
        verdict = check_property(R, prop, e)
        assert (verdict.status == "holds") == oracle.naive_check(R, prop, e), \
            "%s at e=%s in %s" % (prop, R.labels[e], text)


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_failing_witnesses_replay(rings, text):
    R = rings[text]
    for prop in GLOBAL_PROPS:
        v = check_property(R, prop)
        if v.status == "fails":
            assert v.witness is not None
            assert replay_witness(R, prop, None, v.witness)
        else:
            assert v.witness is None
    for prop in E_PROPS:
        for e in nonzero_idempotents(R):
            v = check_property(R, prop, e)
            if v.status == "fails":
                assert replay_witness(R, prop, e, v.witness)


def test_witnesses_are_lexicographically_least():
    U = build_expr("U(2,Z(3))")
    zero = U.zero
    for e in nonzero_idempotents(U):
        v = check_property(U, "right_e_reversible", e)
        if v.status != "fails":
            continue
        first = next(
            (a, b)
            for a in range(U.order) for b in range(U.order)
            if oracle.mul(U, a, b) == zero
            and oracle.mul(U, b, a, e) != zero)
        assert tuple(v.witness) == first

    M = build_expr("M(2,Z(2))")
    v = check_property(M, "e_symmetric", M.one)
    assert v.status == "fails"
    first = next(
        (a, b, c)
        for a in range(M.order) for b in range(M.order)
        for c in range(M.order)
        if oracle.mul(M, a, b, c) == zero
        and oracle.mul(M, a, c, b) != zero)
    assert tuple(v.witness) == first

    Z8 = build_expr("Z(8)")
    v = check_property(Z8, "right_e_reduced", 1)
    assert v.status == "fails"
    least_nilpotent = next(x for x in oracle.naive_nilpotents(Z8)
                           if oracle.mul(Z8, x, 1) != Z8.zero)
    assert v.witness[0] == least_nilpotent


def test_verdict_rejects_bad_idempotent_input(rings):
    R = rings["Z(6)"]
    with pytest.raises(RingError, match="nonzero"):
        check_property(R, "right_e_reversible", 0)
    with pytest.raises(RingError, match="not idempotent"):
        check_property(R, "right_e_reversible", 2)
    with pytest.raises(RingError, match="takes no idempotent"):
        check_property(R, "reversible", 3)
    with pytest.raises(ValueError, match="unknown property"):
        check_property(R, "frobnitz")
    with pytest.raises(RingError, match="relative to an idempotent"):
        check_property(R, "right_e_reversible")


def test_dash_names_are_accepted(rings):
    v = check_property(rings["Z(6)"], "right-e-reversible", 3)
    assert v.property == "right_e_reversible"
    assert v.status == "holds"


def test_guard_skips_carry_a_reason(rings):
    R = rings["Z(6)"]
    v = check_property(R, "right_e_reversible", 3, Guards(pair_cap=4))
    assert v.status == "skipped"
    assert "pair sweep guard" in v.reason
    v = check_property(R, "e_symmetric", 3, Guards(triple_cap=4))
    assert v.status == "skipped"
    assert "triple sweep guard" in v.reason
    # pair properties ignore the triple cap
    v = check_property(R, "right_e_reversible", 3, Guards(triple_cap=4))
    assert v.status == "holds"


def test_survey_shape(rings):
    R = rings["Z(6)"]
    rows = survey(R)
    assert len(rows) == len(GLOBAL_PROPS) + 3 * len(E_PROPS)
    assert sum(1 for r in rows if r.idempotent is None) == len(GLOBAL_PROPS)
    rows = survey(R, properties=["reversible", "right_e_reversible"],
                  idempotent=3)
    assert [(r.property, r.idempotent) for r in rows] == \
        [("reversible", None), ("right_e_reversible", "3")]


def test_verdict_to_dict_is_stable(rings):
    v = check_property(rings["Z(4)"], "reduced")
    d = v.to_dict()
    assert d["status"] == "fails"
    assert "elapsed" not in d
    assert d == check_property(rings["Z(4)"], "reduced").to_dict()


@pytest.mark.parametrize("text", SMALL_RINGS)
def test_structure_scans_match_naive(rings, text):
    R = rings[text]
    assert [int(i) for i in idempotents(R)] == oracle.naive_idempotents(R)
    assert [int(i) for i in nilpotents(R)] == oracle.naive_nilpotents(R)


def test_annihilators(rings):
    Z12 = build_expr("Z(12)")
    assert sorted(int(i) for i in right_annihilator(Z12, 4)) == [0, 3, 6, 9]
    M = rings["M(2,Z(2))"]
    for x in range(M.order):
        naive_r = [b for b in range(M.order)
                   if oracle.mul(M, x, b) == M.zero]
        naive_l = [b for b in range(M.order)
                   if oracle.mul(M, b, x) == M.zero]
        assert [int(i) for i in right_annihilator(M, x)] == naive_r
        assert [int(i) for i in left_annihilator(M, x)] == naive_l


def test_nilpotency_index(rings):
    Z8 = rings["Z(8)"]
    assert nilpotency_index(Z8, 2) == 3
    assert nilpotency_index(Z8, 4) == 2
    assert nilpotency_index(Z8, 0) == 1
    assert nilpotency_index(Z8, 3) is None


def test_minimal_left_idempotents(rings):
    Z6 = rings["Z(6)"]
    assert [Z6.labels[i] for i in minimal_left_idempotents(Z6)] == ["3", "4"]
    assert is_left_min_abel(Z6)
    M = rings["M(2,Z(2))"]
    assert len(minimal_left_idempotents(M)) == 6
    assert not is_left_min_abel(M)


def test_semicentral_flags(rings):
    U = build_expr("U(2,Z(2))")
    e1 = next(e for e in nonzero_idempotents(U)
              if U.labels[e] == "[[1,1],[0,0]]")
    assert is_left_semicentral(U, e1)
    assert not is_right_semicentral(U, e1)
    for text in ("Z(6)", "M(2,Z(2))"):
        R = rings[text]
        for e in nonzero_idempotents(R):
            lsc = all(oracle.mul(R, a, e) == oracle.mul(R, e, a, e)
                      for a in range(R.order))
            rsc = all(oracle.mul(R, e, a) == oracle.mul(R, e, a, e)
                      for a in range(R.order))
            assert is_left_semicentral(R, e) == lsc
            assert is_right_semicentral(R, e) == rsc


# sampled restatement of the exhaustive cross-check above, driven by
# hypothesis so shrinking points at the smallest disagreeing instance
@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_RINGS), st.data())
def test_engine_and_naive_agree_on_sampled_instances(rings, text, data):
    R = rings[text]
    prop = data.draw(st.sampled_from(list(E_PROPS)))
    e = data.draw(st.sampled_from(nonzero_idempotents(R)))
    verdict = check_property(R, prop, e)
    assert (verdict.status == "holds") == oracle.naive_check(R, prop, e)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_RINGS), st.data())
def test_relative_chain_holds_on_sampled_instances(rings, text, data):
    R = rings[text]
    e = data.draw(st.sampled_from(nonzero_idempotents(R)))
    chain = ("right_e_reduced", "e_symmetric", "right_e_reversible",
             "right_e_semicommutative")
    values = [check_property(R, p, e).status == "holds" for p in chain]
    for earlier, later in zip(values, values[1:]):
        assert not earlier or later
