import pytest

from treelike.insertion.history import history_decode
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import TreeLikeTableau


def make(row_lengths, points) -> TreeLikeTableau:
    return TreeLikeTableau(FerrersShape(tuple(row_lengths)),
                           frozenset(Cell(*p) for p in points))


@pytest.fixture
def single():
    return TreeLikeTableau.single()


@pytest.fixture
def vertical_domino():
    return make((1, 1), [(1, 1), (2, 1)])


@pytest.fixture
def horizontal_domino():
    return make((2,), [(1, 1), (1, 2)])


@pytest.fixture
def square3():
    """ The 2x2 square with a crossing in its South-East cell. """
    return make((2, 2), [(1, 1), (1, 2), (2, 1)])


@pytest.fixture
def staircase3():
    return make((2, 1), [(1, 1), (1, 2), (2, 1)])


@pytest.fixture
def worked_example():
    """ The tableau of size 5 with insertion history (0, 1, 0, 3, 1). """
    return history_decode((0, 1, 0, 3, 1))
