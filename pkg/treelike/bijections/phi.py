"""
Two bijections from tree-like tableaux of size n to permutations of n, both reading the
insertion history of the tableau.

phi1 sends crossings to occurrences of the pattern 2-31. phi2 sends the tree of the
tableau to the unlabeled increasing tree of the permutation; leaves of the tableau tree
are identified with the boundary edges their lines end on, see tree_leaf_edges().
"""

from typing import List, Tuple

from treelike.bijections.permutations import Permutation, rank_decode, rank_encode
from treelike.bijections.trees import tree_leaf_edges
from treelike.insertion.history import history_decode, history_encode
from treelike.insertion.point import insert_point, remove_point
from treelike.tableaux.tableau import TreeLikeTableau


def phi1(tableau: TreeLikeTableau) -> Permutation:
    return rank_decode(history_encode(tableau))


def phi1_inv(sigma: Permutation) -> TreeLikeTableau:
    return history_decode(rank_encode(sigma))


def insertion_gaps(sigma: Permutation) -> Tuple[int, ...]:
    """ For every value i, the number of smaller values to its left. This is the inorder
    position of the leaf of the increasing tree of sigma restricted to 1..i-1 that the
    value i replaces. """

    position = {v: p for p, v in enumerate(sigma.word)}
    return tuple(sum(1 for v in range(1, i) if position[v] < position[i])
                 for i in range(1, len(sigma) + 1))


def phi2(sigma: Permutation) -> TreeLikeTableau:
    """ Insert the values 2..n one after the other, each at the boundary edge hit by the
    line of the tree leaf that the value occupies in the increasing tree. """

    tableau = TreeLikeTableau.single()
    for gap in insertion_gaps(sigma)[1:]:
        edge = tree_leaf_edges(tableau)[gap]
        tableau = insert_point(tableau, edge.index)
    return tableau


def phi2_inv(tableau: TreeLikeTableau) -> Permutation:
    gaps: List[int] = []
    while tableau.size > 1:
        tableau, i = remove_point(tableau)
        leaves = [edge.index for edge in tree_leaf_edges(tableau)]
        gaps.append(leaves.index(i))

    word: List[int] = [1]
    for value, gap in enumerate(reversed(gaps), start=2):
        word.insert(gap, value)
    return Permutation(tuple(word))
