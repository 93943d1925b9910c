"""Grammar round-trips and error positions."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from finring import ParseError, parse, parse_element, serialize, serialize_elem
from finring.expr import (
    AlgebraExpr, BracketList, CornerExpr, CosetLit, DorrohExpr, HExpr,
    HomTable, IntLit, KExpr, MatExpr, ProdExpr, QuotExpr, RawIndex,
    SubGens, TrsExpr, TupleLit, TwistExpr, ZExpr,
)

ints = st.integers(min_value=0, max_value=99)
leaf = st.one_of(st.builds(IntLit, ints), st.builds(RawIndex, ints))

# '+I' may wrap anything except another coset directly ('x+I+I' is
# not grammatical, though '[x+I]+I' is)
elem = st.recursive(
    leaf,
    lambda sub: st.one_of(
        st.builds(BracketList, st.lists(sub, min_size=1, max_size=3)),
        st.builds(TupleLit, st.lists(sub, min_size=1, max_size=3)),
        st.builds(CosetLit,
                  sub.filter(lambda n: not isinstance(n, CosetLit))),
    ),
    max_leaves=8)

ring = st.recursive(
    st.builds(ZExpr, st.integers(min_value=2, max_value=999)),
    lambda sub: st.one_of(
        st.builds(MatExpr, st.sampled_from("MUDV"),
                  st.integers(min_value=2, max_value=5), sub),
        st.builds(HExpr, sub, elem, elem),
        st.builds(KExpr, sub, elem),
        st.builds(ProdExpr, st.lists(sub, min_size=2, max_size=3)),
        st.builds(DorrohExpr, sub,
                  st.builds(SubGens, st.lists(elem, max_size=2))),
        st.builds(QuotExpr, sub, st.lists(elem, min_size=1, max_size=2)),
        st.builds(CornerExpr, sub, elem),
        st.builds(TwistExpr, sub,
                  st.builds(HomTable, st.lists(elem, min_size=1, max_size=3))),
        st.builds(TrsExpr, sub,
                  st.builds(SubGens, st.lists(elem, max_size=2)),
                  st.integers(min_value=0, max_value=4)),
        st.builds(AlgebraExpr, st.sampled_from([2, 3, 5, 7]),
                  st.integers(min_value=1, max_value=4),
                  st.builds(BracketList, st.lists(
                      st.builds(BracketList, st.lists(leaf, min_size=1,
                                                      max_size=2)),
                      min_size=1, max_size=2))),
    ),
    max_leaves=12)


@settings(max_examples=150, deadline=None)
@given(ring)
def test_ring_expression_round_trip(node):
    text = serialize(node)
    back = parse(text)
    assert back == node
    assert serialize(back) == text


@settings(max_examples=150, deadline=None)
@given(elem)
def test_element_literal_round_trip(node):
    text = serialize_elem(node)
    back = parse_element(text)
    assert back == node
    assert serialize_elem(back) == text


def test_whitespace_is_ignored():
    assert parse(" U( 2 ,\n Z( 3 ) ) ") == parse("U(2,Z(3))")
    assert parse_element(" ( 1 , 2 ) + I ") == parse_element("(1,2)+I")


def test_nested_expression_parses():
    node = parse("quot(quot(Z(8),4),2+I)")
    assert isinstance(node, QuotExpr)
    assert isinstance(node.gens[0], CosetLit)
    assert serialize(node) == "quot(quot(Z(8),4),2+I)"


@pytest.mark.parametrize("text,col,frag", [
    ("K(Z(2)", 7, "expected ','"),
    ("Z()", 3, "expected 'int'"),
    ("frob(2)", 1, "unknown constructor"),
    ("Z(2),", 5, "trailing input"),
    ("prod(Z(2))", 11, "at least two factors"),
    ("", 1, "expected a ring constructor"),
    ("quot(Z(4),)", 11, "expected an element literal"),
    ("H(Z(2),1)", 9, "expected ','"),
])
def test_parse_errors_carry_positions(text, col, frag):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == 1
    assert info.value.col == col
    assert frag in str(info.value)


@pytest.mark.parametrize("text,col,frag", [
    ("", 1, "element literal"),
    ("#x", 2, "expected 'int'"),
    ("(1,)", 4, "element literal"),
    ("1+J", 3, "expected 'I' after '+'"),
])
def test_element_errors_carry_positions(text, col, frag):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.col == col
    assert frag in str(info.value)


def test_multiline_error_reports_its_line():
    with pytest.raises(ParseError) as info:
        parse("prod(\nZ(2),\nZ(x))")
    assert info.value.line == 3
