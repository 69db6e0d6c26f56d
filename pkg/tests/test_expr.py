import pytest
from hypothesis import given, strategies as st

from alexspace import ExprSyntaxError, UnknownPredicate, khalimsky_window, parse_pred_expr, pretty
from alexspace.expr import And, Leaf, Not, Or, SET_PREDICATES, SPACE_PREDICATES, evaluate, uses_subset


def test_and_not():
    assert parse_pred_expr("alpha_scattered & !scattered") == And(
        Leaf("alpha_scattered"), Not(Leaf("scattered"))
    )


def test_parentheses_and_space_predicates():
    e = parse_pred_expr("(space:t0 | space:t_d) & dense")
    assert e == And(Or(Leaf("space:t0"), Leaf("space:t_d")), Leaf("dense"))


def test_precedence():
    assert parse_pred_expr("open | closed & !dense") == Or(
        Leaf("open"), And(Leaf("closed"), Not(Leaf("dense")))
    )


def test_syntax_error_at_end():
    with pytest.raises(ExprSyntaxError) as ei:
        parse_pred_expr("alpha_scattered &")
    assert ei.value.position == len("alpha_scattered &")


@pytest.mark.parametrize("text", ["", "(open", "open)", "open open", "open $ closed", "&open"])
def test_other_syntax_errors(text):
    with pytest.raises(ExprSyntaxError):
        parse_pred_expr(text)


def test_unknown_predicate():
    with pytest.raises(UnknownPredicate) as ei:
        parse_pred_expr("open & alpha_scat")
    assert ei.value.name == "alpha_scat" and ei.value.position == 7
    with pytest.raises(UnknownPredicate):
        parse_pred_expr("space:open")


def test_evaluate():
    K = khalimsky_window(0, 2)
    e = parse_pred_expr("nowhere_dense & !space:t1")
    assert evaluate(e, K, 0b001)
    assert not evaluate(e, K, 0b010)
    assert uses_subset(e) and not uses_subset(parse_pred_expr("!space:t0"))


NAMES = sorted(SET_PREDICATES) + sorted(SPACE_PREDICATES)

exprs = st.recursive(
    st.sampled_from(NAMES).map(Leaf),
    lambda inner: st.one_of(
        inner.map(Not),
        st.tuples(inner, inner).map(lambda t: And(*t)),
        st.tuples(inner, inner).map(lambda t: Or(*t)),
    ),
    max_leaves=12,
)


@given(exprs)
def test_pretty_parse_fixpoint(e):
    once = pretty(parse_pred_expr(pretty(e)))
    assert pretty(parse_pred_expr(once)) == once


@given(exprs)
def test_pretty_preserves_meaning(e):
    K = khalimsky_window(-1, 2)
    back = parse_pred_expr(pretty(e))
    for a in range(16):
        assert evaluate(back, K, a) == evaluate(e, K, a)
