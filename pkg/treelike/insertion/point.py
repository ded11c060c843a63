"""
Insertion of a new point into a tree-like tableau at one of its boundary edges, and the
inverse removal of the special point. Together they give a bijection between pairs
(tableau of size n, boundary edge index in 0..n) and tableaux of size n+1.
"""

import logging
from typing import List, NamedTuple, Set, Tuple

from treelike.insertion.lines import delete_column, delete_row, insert_line, remove_cells
from treelike.lib.core.constants import EdgeKind
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import TreeLikeTableau, special_index

_log = logging.getLogger(__name__)


class Removal(NamedTuple):
    tableau: TreeLikeTableau
    edge: int
    ribbon: int


def ribbon_cells(shape: FerrersShape, start: Cell, target: Cell) -> Set[Cell]:
    """ The ribbon that hugs the boundary of 'shape' from the cell right of 'start' up to
    the cell right below 'target'. 'start' ends its row and lies strictly below 'target'.
    Row r1+1 is extended up to column c1 and every row r further down up to one cell past
    the old end of row r-1, where (r1, c1) = target. """

    r0, r1, c1 = start.row, target.row, target.col
    assert r0 > r1, f"The ribbon must run upwards, from {start} to below {target}."
    cells = set()
    for r in range(r1 + 1, r0 + 1):
        new_length = c1 if r == r1 + 1 else shape.row_length(r - 1) + 1
        cells.update(Cell(r, c) for c in range(shape.row_length(r) + 1, new_length + 1))
    return cells


def _extend(shape: FerrersShape, cells: Set[Cell]) -> FerrersShape:
    lengths = list(shape.row_lengths)
    for cell in cells:
        lengths[cell.row - 1] += 1
    return FerrersShape.unchecked(tuple(lengths))


def insert_point(tableau: TreeLikeTableau, i: int) -> TreeLikeTableau:
    """ Insert a row or a column at boundary edge e_i, point its last cell and, when e_i lies
    South-West of the special cell b_k, add the ribbon of k-i empty cells joining the new
    point to the old special point. The new point is the special point of the result. """

    n = tableau.size
    if not 0 <= i <= n:
        raise ValueError(f"Invalid boundary edge index {i} for a tableau of size {n}. Must "
                         f"be in [0, {n}].")

    k = special_index(tableau)
    special = tableau.shape.boundary_cells[k]
    inserted = insert_line(tableau.shape, i)
    points = frozenset(inserted.move(p) for p in tableau.points) | {inserted.new_cell}
    if i >= k:
        return TreeLikeTableau.unchecked(inserted.shape, points)

    ribbon = ribbon_cells(inserted.shape, inserted.new_cell, inserted.move(special))
    assert len(ribbon) == k - i, f"Expected a ribbon of {k - i} cells, got {len(ribbon)}."
    return TreeLikeTableau.unchecked(_extend(inserted.shape, ribbon), points)


def walk_to_next_point(tableau: TreeLikeTableau, k: int) -> Tuple[int, List[Cell]]:
    """ Follow the boundary cells North-East from b_k to the next pointed one. Returns its
    index along with the empty cells passed on the way. """

    cells = tableau.shape.boundary_cells
    j = k + 1
    while cells[j] not in tableau.points:
        j += 1
    return j, list(cells[k + 1:j])


def remove_special_point(tableau: TreeLikeTableau) -> Removal:
    if tableau.size < 2:
        raise ValueError("Cannot remove a point from the tableau of size 1.")

    shape = tableau.shape
    k = special_index(tableau)
    row, col = special = shape.boundary_cells[k]

    ribbon: List[Cell] = []
    if Cell(row, col + 1) in shape:
        _, ribbon = walk_to_next_point(tableau, k)
        tableau = remove_cells(tableau, ribbon)

    if len(tableau.row_points[row]) == 1:
        assert len(tableau.column_points[col]) > 1, \
            f"The special point {special} is alone in both its row and its column."
        reduced = delete_row(tableau, row)
        edge = reduced.shape.find_edge(EdgeKind.Bottom, col)
    else:
        assert len(tableau.column_points[col]) == 1, \
            f"The special point {special} shares both its row and its column."
        reduced = delete_column(tableau, col)
        edge = reduced.shape.find_edge(EdgeKind.Right, row)

    _log.debug(f"Removed special point {special} with a ribbon of {len(ribbon)} cells, "
               f"insertion edge {edge.index}.")
    return Removal(reduced, edge.index, len(ribbon))


def remove_point(tableau: TreeLikeTableau) -> Tuple[TreeLikeTableau, int]:
    """ Inverse of insert_point(): returns the smaller tableau and the edge index at which
    the special point of 'tableau' was inserted. """
    removal = remove_special_point(tableau)
    return removal.tableau, removal.edge


def grow(tableau: TreeLikeTableau) -> List[TreeLikeTableau]:
    """ All n+1 tableaux obtained by inserting a point into 'tableau', by edge index. """
    return [insert_point(tableau, i) for i in range(tableau.size + 1)]
