import pytest

from tests.conftest import make
from treelike.bijections.permutations import Permutation
from treelike.bijections.trees import LabeledNode, Node, format_tree, increasing_tree, \
    parse_tree, perm_tree, tableau_tree, tree_leaf_edges, tree_size
from treelike.enumeration.generators import iter_tableaux
from treelike.lib.core.errors import TableauParseError
from treelike.tableaux.statistics import crossings

LEAF_NODE = Node()


@pytest.mark.parametrize("name,text", [
    ("single", "(LL)"),
    ("vertical_domino", "((LL)L)"),
    ("horizontal_domino", "(L(LL))"),
    ("square3", "((LL)(LL))"),
])
def test_tableau_tree(request, name, text):
    tree = tableau_tree(request.getfixturevalue(name))
    assert format_tree(tree) == text
    assert parse_tree(text) == tree


def test_increasing_tree():
    assert increasing_tree(Permutation((1,))) == LabeledNode(1)
    tree = increasing_tree(Permutation((2, 3, 1)))
    assert tree == LabeledNode(1, LabeledNode(2, None, LabeledNode(3)), None)
    assert tree.is_increasing()
    assert list(tree.inorder()) == [2, 3, 1]
    assert perm_tree(Permutation((2, 1))) == Node(LEAF_NODE, None)


def test_tree_text_form():
    tree = parse_tree(" ((L L) (L(LL)))")
    assert tree.size == tree_size(tree) == 4
    assert tree_size(parse_tree("L")) == 0
    assert str(tree) == "((LL)(L(LL)))"


@pytest.mark.parametrize("text,column", [("(LL", 4), ("(LX)", 3), ("(LL)L", 5), ("", 1)])
def test_tree_parse_errors(text, column):
    with pytest.raises(TableauParseError) as info:
        parse_tree(text)
    assert info.value.column == column


def test_leaf_lines_cross_in_crossings(square3):
    # The right line of (2, 1) and the down line of (1, 2) cross in the empty cell (2, 2).
    assert [e.index for e in tree_leaf_edges(square3)] == [0, 2, 1, 3]


def test_leaf_lines():
    tableau = make((3, 1), [(1, 1), (1, 2), (1, 3), (2, 1)])
    assert [e.index for e in tree_leaf_edges(tableau)] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("n", range(1, 6))
def test_leaf_lines_hit_every_edge_once(n):
    for tableau in iter_tableaux(n):
        indices = [e.index for e in tree_leaf_edges(tableau)]
        assert sorted(indices) == list(range(n + 1))
        if not crossings(tableau):
            assert indices == list(range(n + 1))
