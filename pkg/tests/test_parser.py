import pytest
from hypothesis import given

from oracles import poset_expressions
from poset_ramsey import expr as E
from poset_ramsey.errors import ParseError
from poset_ramsey.parser import parse_poset_expression


def test_sum_of_chains_normalizes_to_chain_composition():
    assert parse_poset_expression("C(3)+C(2)+C(2)") == E.ChainComposition((3, 2, 2))
    assert parse_poset_expression("C(2) + C(3)") == E.ChainComposition((3, 2))


def test_glue_of_multipartite_and_chain():
    ast = parse_poset_expression("glue(K(1,2),C(2))")
    assert ast == E.Glue(E.Multipartite((1, 2)), E.Chain(2))


def test_whitespace_is_insignificant():
    assert parse_poset_expression(" SD ( 2 , 3 ) ") == E.SubdividedDiamond(2, 3)


def test_antichain_in_sum_becomes_unit_chains():
    assert parse_poset_expression("A(2)+C(3)") == E.ChainComposition((3, 1, 1))


def test_mixed_sum_stays_left_nested():
    ast = parse_poset_expression("V+C(1)+Q(2)")
    assert ast == E.ParallelCompose(E.ParallelCompose(E.Named("V"), E.Chain(1)), E.BooleanCube(2))


def test_cube_of_dimension_zero_allowed():
    assert parse_poset_expression("Q(0)") == E.BooleanCube(0)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("SD(0,1)", 0),
        ("C(2)+", 5),
        ("C(2", 3),
        ("X(1)", 0),
        ("C(1,2)", 2),
        ("C(2) C(3)", 5),
        ("glue(C(2) C(1))", 10),
        ("C(-1)", 0),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_poset_expression(text)
    assert info.value.offset == offset


@given(poset_expressions)
def test_print_parse_round_trip(expr):
    norm = E.normalize(expr)
    parsed = parse_poset_expression(norm.to_text())
    assert parsed == norm
    assert parse_poset_expression(parsed.to_text()) == parsed
