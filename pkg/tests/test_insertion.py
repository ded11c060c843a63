import pytest

from tests.conftest import make
from treelike.enumeration.generators import iter_tableaux
from treelike.insertion.lines import column_insert, delete_column, delete_row, insert_row, \
    row_insert
from treelike.insertion.point import grow, insert_point, remove_point, \
    remove_special_point, ribbon_cells
from treelike.tableaux.serialization import render
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.statistics import crossings
from treelike.tableaux.tableau import TreeLikeTableau, find_violations, special_index


@pytest.mark.parametrize("insert,lengths,edge,expected", [
    (row_insert, (1,), 0, (1, 1)),
    (column_insert, (1,), 1, (2,)),
    (row_insert, (2,), 0, (2, 1)),
    (row_insert, (2,), 1, (2, 2)),
    (column_insert, (2, 1), 1, (3, 2)),
    (column_insert, (2, 1), 3, (3, 1)),
])
def test_line_insertion(insert, lengths, edge, expected):
    shape = FerrersShape(lengths)
    result = insert(shape, edge)
    assert result == FerrersShape(expected)
    assert result.half_perimeter == shape.half_perimeter + 1


def test_line_insertion_checks_edge_kind():
    with pytest.raises(ValueError, match="bottom edge"):
        row_insert(FerrersShape((1,)), 1)
    with pytest.raises(ValueError, match="right edge"):
        column_insert(FerrersShape((1,)), 0)


def test_inserted_row_moves_lower_rows():
    inserted = insert_row(FerrersShape((3, 1)), 2)
    assert inserted.shape == FerrersShape((3, 2, 1))
    assert inserted.new_cell == Cell(2, 2)
    assert inserted.move(Cell(2, 1)) == Cell(3, 1)
    assert inserted.move(Cell(1, 3)) == Cell(1, 3)


def test_delete_lines():
    tableau = make((3, 2), [(1, 1), (1, 3), (2, 1), (2, 2)])
    assert delete_row(tableau, 1) == make((2,), [(1, 1), (1, 2)])
    assert delete_column(tableau, 2) == make((2, 1), [(1, 1), (1, 2), (2, 1)])


@pytest.mark.parametrize("before,i,after", [
    ("single", 0, "vertical_domino"),
    ("single", 1, "horizontal_domino"),
    ("horizontal_domino", 0, "square3"),
])
def test_insert_and_remove(request, before, i, after):
    before = request.getfixturevalue(before)
    after = request.getfixturevalue(after)
    assert insert_point(before, i) == after
    assert remove_point(after) == (before, i)


def test_insertion_adds_ribbon(horizontal_domino, square3):
    assert special_index(horizontal_domino) == 1
    assert crossings(insert_point(horizontal_domino, 0)) == 1
    removal = remove_special_point(square3)
    assert (removal.edge, removal.ribbon) == (0, 1)


def test_ribbon_hugs_boundary():
    shape = FerrersShape((3, 2, 2))
    assert ribbon_cells(shape, Cell(3, 2), Cell(1, 3)) == {Cell(2, 3), Cell(3, 3)}


def test_worked_example_steps(worked_example):
    assert render(worked_example) == "111\n100\n010"
    smaller, i = remove_point(worked_example)
    assert i == 1
    assert render(smaller) == "111\n10"
    assert insert_point(smaller, 1) == worked_example


def test_out_of_range(single, square3):
    with pytest.raises(ValueError):
        insert_point(single, 2)
    with pytest.raises(ValueError):
        insert_point(square3, -1)
    with pytest.raises(ValueError):
        remove_point(single)


@pytest.mark.parametrize("n", range(1, 5))
def test_insertion_invariants(n):
    children = []
    for tableau in iter_tableaux(n):
        k = special_index(tableau)
        grown = grow(tableau)
        assert len(set(grown)) == n + 1
        for i, child in enumerate(grown):
            assert not find_violations(child.shape, child.points)
            assert child.size == n + 1
            assert special_index(child) == i
            assert crossings(child) - crossings(tableau) == max(k - i, 0)
            assert remove_point(child) == (tableau, i)
        children.extend(grown)
    assert set(children) == set(iter_tableaux(n + 1))
    assert len(children) == len(set(children))


@pytest.mark.parametrize("n", range(2, 6))
def test_internally_built_tableaux_pass_validation(n):
    for tableau in iter_tableaux(n):
        removed, _ = remove_point(tableau)
        for built in (tableau, removed):
            rebuilt = TreeLikeTableau(FerrersShape(built.shape.row_lengths), built.points)
            assert rebuilt == built
            assert all(isinstance(p, Cell) for p in built.points)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_remove_then_insert_is_identity(n):
    for tableau in iter_tableaux(n):
        assert insert_point(*remove_point(tableau)) == tableau
