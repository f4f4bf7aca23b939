from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cfseries import DomainError, ExprSyntaxError, UnboundIdentifierError, UnknownCharacterError
from cfseries.expr import Add, BinOp, Div, Mul, Neg, Num, Pow, Sub, Var, eval_expr, parse_expr, render
from cfseries.scalar import FloatField, RATIONAL


class TestParse:
    def test_sum(self):
        assert parse_expr("m+c") == Add(Var("m"), Var("c"))

    def test_power_binds_tighter_than_product(self):
        assert parse_expr("q^m*z") == Mul(Pow(Var("q"), Var("m")), Var("z"))

    def test_unterminated(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr("(m+")
        assert info.value.offset == 3
        assert "number" in info.value.expected and "(" in info.value.expected

    def test_unknown_character(self):
        with pytest.raises(UnknownCharacterError) as info:
            parse_expr("m $ 2")
        assert info.value.offset == 2

    def test_offset_is_in_bytes(self):
        with pytest.raises(UnknownCharacterError) as info:
            parse_expr("1+é")
        assert info.value.offset == 2
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr("é")
        with pytest.raises(UnknownCharacterError) as info:
            parse_expr("1 + 2 é")
        assert info.value.offset == 6

    def test_trailing_input(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_expr("m m")
        assert info.value.offset == 2

    def test_precedence_and_associativity(self):
        assert parse_expr("-2^2") == Neg(Pow(Num("2"), Num("2")))
        assert parse_expr("2^3^2") == Pow(Num("2"), Pow(Num("3"), Num("2")))
        assert parse_expr("a-b-c") == Sub(Sub(Var("a"), Var("b")), Var("c"))
        assert parse_expr("a/b*c") == Mul(Div(Var("a"), Var("b")), Var("c"))
        assert parse_expr("2^-1") == Pow(Num("2"), Neg(Num("1")))
        assert parse_expr("-a*b") == Mul(Neg(Var("a")), Var("b"))

    def test_number_forms(self):
        assert parse_expr("3/4") == Num("3/4")
        assert parse_expr("3 / 4") == Div(Num("3"), Num("4"))
        assert parse_expr("1.25") == Num("1.25")
        assert parse_expr("1/(m-1)") == Div(Num("1"), Sub(Var("m"), Num("1")))
        with pytest.raises(ExprSyntaxError):
            parse_expr("1.")


class TestEval:
    def test_integer_sum(self):
        assert eval_expr(parse_expr("m+c"), {"m": F(3), "c": F(2)}) == 5

    def test_exact_power(self):
        assert eval_expr(parse_expr("q^m"), {"q": F(1, 2), "m": F(3)}) == F(1, 8)

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            eval_expr(parse_expr("1/(m-1)"), {"m": F(1)})

    def test_zero_to_negative_power(self):
        with pytest.raises(DomainError):
            eval_expr(parse_expr("0^-2"), {})

    def test_negative_exponent(self):
        assert eval_expr(parse_expr("2^-3"), {}) == F(1, 8)

    def test_non_integer_exponent(self):
        with pytest.raises(DomainError):
            eval_expr(parse_expr("2^(1/2)"), {})

    def test_unbound(self):
        with pytest.raises(UnboundIdentifierError):
            eval_expr(parse_expr("m+c"), {"m": F(1)})

    def test_decimal_is_exact(self):
        assert eval_expr(parse_expr("0.1+0.2"), {}) == F(3, 10)

    def test_float_realization(self):
        f = FloatField(128)
        v = eval_expr(parse_expr("1/3"), {}, f)
        assert v == f.one / 3


# ---------------------------------------------------------------------------
# render / parse round trip

literals = st.one_of(
    st.integers(0, 999).map(str),
    st.tuples(st.integers(0, 99), st.integers(0, 99)).map(lambda t: f"{t[0]}.{t[1]:02d}"),
    st.tuples(st.integers(0, 99), st.integers(1, 99)).map(lambda t: f"{t[0]}/{t[1]}"),
)
names = st.from_regex(r"[a-zA-Z][a-zA-Z0-9]{0,3}", fullmatch=True)
leaves = st.one_of(literals.map(Num), names.map(Var))
trees = st.recursive(
    leaves,
    lambda sub: st.one_of(
        sub.map(Neg),
        st.builds(BinOp, st.sampled_from("+-*/^"), sub, sub),
    ),
    max_leaves=12,
)


@settings(max_examples=500, deadline=None)
@given(trees)
def test_render_parse_round_trip(tree):
    assert parse_expr(render(tree)) == tree


@settings(max_examples=200, deadline=None)
@given(trees)
def test_parse_render_parse_is_identity(tree):
    once = parse_expr(render(tree))
    assert parse_expr(render(once)) == once


def test_render_is_readable():
    assert render(parse_expr("z*q^(m-1)")) == "z * q ^ (m - 1)"
    assert render(parse_expr("-(a+b)")) == "-(a + b)"
