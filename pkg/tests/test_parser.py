"""Surface syntax round trips."""

import pytest
from hypothesis import given, settings, strategies as st

from extreal.bracket import Lam
from extreal.parser import ParseError, parse, print_term
from extreal.terms import App, Const, ConstKind, Num, Var


def test_keywords_and_numerals():
    assert parse("K") == Const(ConstKind.K)
    assert parse("#12") == Num(12)
    assert parse("SUCC #0") == App(Const(ConstKind.SUCC), Num(0))


def test_application_is_left_associative():
    t = parse("K a b")
    assert t == App(App(Const(ConstKind.K), Var("a")), Var("b"))


def test_parens_override():
    t = parse("K (a b)")
    assert t == App(Const(ConstKind.K), App(Var("a"), Var("b")))


def test_lambda_sugar():
    t = parse(r"\x y. x")
    assert t == Lam("x", Lam("y", Var("x")))


def test_lambda_body_extends_right():
    t = parse(r"\x. x x")
    assert t == Lam("x", App(Var("x"), Var("x")))


def test_comments():
    t = parse("K -- the constant combinator\n  #3")
    assert t == App(Const(ConstKind.K), Num(3))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse("K )")
    assert "line 1" in str(err.value)
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse(r"\K. K")


_atoms = st.one_of(
    st.sampled_from([Const(k) for k in ConstKind]),
    st.integers(0, 20).map(Num),
    st.sampled_from(["x", "y", "zed", "f'"]).map(Var),
)


def _terms(depth: int):
    if depth == 0:
        return _atoms
    sub = _terms(depth - 1)
    return st.one_of(
        _atoms,
        st.tuples(sub, sub).map(lambda p: App(*p)),
        st.tuples(st.sampled_from(["a", "b", "w"]), sub).map(lambda p: Lam(*p)),
    )


@settings(max_examples=300, deadline=None)
@given(_terms(4))
def test_print_parse_round_trip(t):
    assert parse(print_term(t)) == t
