import pytest

from treelike.enumeration.generators import iter_histories, iter_sym
from treelike.insertion.history import history_decode, sym_history_decode
from treelike.insertion.symmetric import embed, grow_sym, insert_point_sym, \
    remove_point_sym, star_special_point
from treelike.lib.core.constants import Sign
from treelike.lib.core.errors import AsymmetricTableauError
from treelike.tableaux.shapes import Cell
from treelike.tableaux.statistics import diag_crossings, dtop_star, left_points
from treelike.tableaux.tableau import find_violations, is_symmetric

PLUS, MINUS = Sign.Plus, Sign.Minus


@pytest.mark.parametrize("name,expected", [
    ("single", (1, 1)),
    ("staircase3", (2, 1)),
    ("square3", (2, 1)),
])
def test_star_special_point(request, name, expected):
    assert star_special_point(request.getfixturevalue(name)) == Cell(*expected)


def test_insert_and_remove(single, staircase3, square3):
    assert insert_point_sym(single, 0, PLUS) == staircase3
    assert insert_point_sym(single, 0, MINUS) == square3
    assert remove_point_sym(staircase3) == (single, 0, PLUS)
    assert remove_point_sym(square3) == (single, 0, MINUS)
    assert diag_crossings(square3) == diag_crossings(single) + 1


def test_errors(single, horizontal_domino, staircase3):
    with pytest.raises(ValueError):
        insert_point_sym(single, 1, PLUS)
    with pytest.raises(ValueError):
        remove_point_sym(single)
    with pytest.raises(AsymmetricTableauError):
        insert_point_sym(horizontal_domino, 0, PLUS)
    with pytest.raises(AsymmetricTableauError):
        star_special_point(horizontal_domino)
    assert len(grow_sym(staircase3)) == 4


@pytest.mark.parametrize("n", range(0, 3))
def test_symmetric_insertion_invariants(n):
    children = []
    for tableau in iter_sym(2 * n + 1):
        before_left, before_top = left_points(tableau), dtop_star(tableau)
        before_diag = diag_crossings(tableau)
        for sign in (PLUS, MINUS):
            raised = 0
            for e in range(n + 1):
                child = insert_point_sym(tableau, e, sign)
                assert is_symmetric(child)
                assert not find_violations(child.shape, child.points)
                assert remove_point_sym(child) == (tableau, e, sign)
                assert left_points(child) - before_left == int(e == 0)
                assert diag_crossings(child) - before_diag == int(sign is MINUS)
                assert dtop_star(child) - before_top in (0, 1)
                raised += dtop_star(child) - before_top
                children.append(child)
            if n >= 1:
                assert raised == 1
    assert len(set(children)) == len(children)
    assert set(children) == set(iter_sym(2 * n + 3))


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6])
def test_remove_then_insert_is_identity(n):
    for tableau in iter_sym(2 * n + 1):
        assert insert_point_sym(*remove_point_sym(tableau)) == tableau


def test_embed(single, staircase3):
    assert embed(single) == staircase3


@pytest.mark.parametrize("n", range(1, 5))
def test_embedding_is_the_plus_only_image(n):
    embedded = {embed(history_decode(a)) for a in iter_histories(n)}
    plus_only = {sym_history_decode([(ai, PLUS) for ai in a]) for a in iter_histories(n)}
    no_diag = {t for t in iter_sym(2 * n + 1) if diag_crossings(t) == 0}
    assert embedded == plus_only == no_diag
    assert len(embedded) == len(list(iter_histories(n)))
