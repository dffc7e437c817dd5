import pytest

from indroots.constructions import build_gabcd, gabcd_params, graph_with_alpha
from indroots.errors import ExprSyntaxError
from indroots.expr import Clique, Corona, Independent, JoinN, Leaf, Lex, UnionN, to_text
from indroots.graph import complete
from indroots.indpoly import ind_poly_expr
from indroots.parser import parse_ast, parse_expr


def test_gabcd_instance():
    e = parse_expr("join(4*K[3],3*K[3],2*K[1],K[112])")
    assert e == build_gabcd(*gabcd_params(1))


def test_atoms_and_operators():
    assert parse_expr("K[5]") == Clique(5)
    assert parse_expr("Kbar[0]") == Independent(0)
    assert parse_expr("g6:Bw") == Leaf(complete(3))
    assert parse_expr("lex( join(Kbar[6], K[8]) , K[2])") == \
        Lex(JoinN((Independent(6), Clique(8))), Clique(2))
    assert parse_expr("corona(K[3],Kbar[2])") == Corona(Clique(3), Independent(2))
    assert parse_expr("union(K[2],K[3],Kbar[3])") == UnionN((Clique(2), Clique(3), Independent(3)))
    k = parse_expr("Kpartite[16,6]")
    assert k.order == 96 and ind_poly_expr(k).degree == 6
    assert parse_ast("3*K[2]").kind == "repeat"


@pytest.mark.parametrize(
    "text, pos",
    [
        ("K[", 2),
        ("K[3", 3),
        ("join(K[1],)", 10),
        ("lex(K[1])", 8),
        ("K[-1]", 2),
        ("K[1] K[2]", 5),
        ("g6:Bx", 4),
        ("Kpartite[0,3]", 0),
        ("", 0),
        ("frob(K[1])", 0),
    ],
)
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.position == pos


def test_round_trip_through_text():
    for e in (build_gabcd(*gabcd_params(2)), graph_with_alpha(13), graph_with_alpha(9),
              Lex(Corona(Leaf(complete(3)), Independent(2)), Clique(3)), UnionN(()), JoinN(())):
        again = parse_expr(to_text(e))
        assert ind_poly_expr(again) == ind_poly_expr(e)
        assert again.order == e.order
