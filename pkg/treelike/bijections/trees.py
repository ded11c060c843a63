"""
Plane binary trees attached to tableaux and to permutations. A tree is either a leaf,
represented by None, or a Node with exactly two children. Text form: "L" for a leaf and
"(" left right ")" for a node, so that the single node reads "(LL)".
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from treelike.bijections.permutations import Permutation
from treelike.lib.core.constants import TREE_LEAF, EdgeKind
from treelike.lib.core.errors import TableauParseError
from treelike.tableaux.shapes import BoundaryEdge, Cell
from treelike.tableaux.tableau import ROOT, TreeLikeTableau


@dataclass(frozen=True)
class Node:
    left: Optional["Node"] = None
    right: Optional["Node"] = None

    @property
    def size(self) -> int:
        return 1 + tree_size(self.left) + tree_size(self.right)

    def __str__(self) -> str:
        return format_tree(self)


BinaryTree = Optional[Node]


@dataclass(frozen=True)
class LabeledNode:
    label: int
    left: Optional["LabeledNode"] = None
    right: Optional["LabeledNode"] = None

    def shape(self) -> Node:
        """ The unlabeled tree. """
        return Node(self.left.shape() if self.left else None,
                    self.right.shape() if self.right else None)

    def inorder(self) -> Iterator[int]:
        if self.left:
            yield from self.left.inorder()
        yield self.label
        if self.right:
            yield from self.right.inorder()

    def is_increasing(self) -> bool:
        return all(child is None or (child.label > self.label and child.is_increasing())
                   for child in (self.left, self.right))


IncreasingTree = LabeledNode


def tree_size(tree: BinaryTree) -> int:
    return 0 if tree is None else tree.size


def format_tree(tree: BinaryTree) -> str:
    if tree is None:
        return TREE_LEAF
    return "(" + format_tree(tree.left) + format_tree(tree.right) + ")"


def parse_tree(text: str) -> BinaryTree:
    text = "".join(text.split())

    def parse_at(pos: int) -> Tuple[BinaryTree, int]:
        if pos >= len(text):
            raise TableauParseError("Unexpected end of input in a tree.", line=1,
                                    column=pos + 1)
        if text[pos] == TREE_LEAF:
            return None, pos + 1
        if text[pos] != "(":
            raise TableauParseError(f"Unexpected character {text[pos]!r} in a tree, "
                                    f"expected '(' or '{TREE_LEAF}'.", line=1, column=pos + 1)
        left, pos = parse_at(pos + 1)
        right, pos = parse_at(pos)
        if pos >= len(text) or text[pos] != ")":
            raise TableauParseError("Expected ')' closing a node.", line=1, column=pos + 1)
        return Node(left, right), pos + 1

    tree, end = parse_at(0)
    if end != len(text):
        raise TableauParseError("Trailing characters after a complete tree.", line=1,
                                column=end + 1)
    return tree


def _next_below(tableau: TreeLikeTableau, p: Cell) -> Optional[Cell]:
    for r in tableau.column_points[p.col]:
        if r > p.row:
            return Cell(r, p.col)
    return None


def _next_right(tableau: TreeLikeTableau, p: Cell) -> Optional[Cell]:
    for c in tableau.row_points[p.row]:
        if c > p.col:
            return Cell(p.row, c)
    return None


def tableau_tree(tableau: TreeLikeTableau) -> Node:
    """ Every point is a node. Its left child is the next point below it in its column and
    its right child the next point to its right in its row, a leaf where there is none. """

    def build(p: Cell) -> Node:
        below, right = _next_below(tableau, p), _next_right(tableau, p)
        return Node(build(below) if below else None, build(right) if right else None)

    return build(ROOT)


def tree_leaf_edges(tableau: TreeLikeTableau) -> List[BoundaryEdge]:
    """ The boundary edge hit by the line of every leaf of tableau_tree(tableau), leaves
    read in inorder. A down line ends on the bottom edge of its column, a right line on
    the right edge of its row. """

    shape = tableau.shape
    edges = []

    def visit(p: Cell):
        below, right = _next_below(tableau, p), _next_right(tableau, p)
        if below:
            visit(below)
        else:
            edges.append(shape.find_edge(EdgeKind.Bottom, p.col))
        if right:
            visit(right)
        else:
            edges.append(shape.find_edge(EdgeKind.Right, p.row))

    visit(ROOT)
    return edges


def increasing_tree(sigma: Permutation) -> IncreasingTree:
    """ The unique increasing tree whose inorder reading is 'sigma': the minimum is the
    root, the factors left and right of it give the subtrees. """

    def build(word: Tuple[int, ...]) -> Optional[LabeledNode]:
        if not word:
            return None
        i = word.index(min(word))
        return LabeledNode(word[i], build(word[:i]), build(word[i + 1:]))

    return build(sigma.word)


def perm_tree(sigma: Permutation) -> Node:
    return increasing_tree(sigma).shape()
