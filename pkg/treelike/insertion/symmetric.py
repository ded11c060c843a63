"""
Point insertion for symmetric tableaux. A symmetric tableau of size 2n+1 has n+1 boundary
edges South-West of the main diagonal (its lower edges e_0..e_n). Inserting at a lower edge
adds a point and its mirror image at once; the sign decides whether the two new points are
joined by a self-symmetric ribbon through the diagonal (-1) or not (+1).
"""

import logging
from typing import NamedTuple, Set, Tuple

from treelike.insertion.lines import delete_column, delete_row, insert_column, insert_line, \
    insert_row, remove_cells
from treelike.insertion.point import _extend, ribbon_cells, walk_to_next_point
from treelike.lib.core.constants import EdgeKind, Sign
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import ROOT, TreeLikeTableau, require_symmetric

_log = logging.getLogger(__name__)


class SymRemoval(NamedTuple):
    tableau: TreeLikeTableau
    edge: int
    sign: Sign


def half_size(tableau: TreeLikeTableau) -> int:
    return (tableau.size - 1) // 2


def star_special_index(tableau: TreeLikeTableau) -> int:
    require_symmetric(tableau, "star_special_point")
    shape = tableau.shape
    cells = shape.boundary_cells
    for k in range(len(cells) - 1, -1, -1):
        cell = cells[k]
        if cell.is_lower and cell in tableau.points and shape.is_bottom(cell):
            return k
    assert tableau.size == 1, f"No lower point at the bottom of a column in the symmetric " \
                              f"tableau of shape {shape}."
    return shape.boundary_cell_index[ROOT]


def star_special_point(tableau: TreeLikeTableau) -> Cell:
    """ The North-East-most point strictly below the diagonal that lies at the bottom of its
    column. The root, for the tableau of size 1. """
    return tableau.shape.boundary_cells[star_special_index(tableau)]


def _insert_pair(shape: FerrersShape, e: int) -> Tuple[FerrersShape, Cell, callable]:
    """ Insert the line at lower edge e_e followed by its mirror image. Returns the new
    shape, the lower one of the two new cells and the map carrying old cells over. """

    edge = shape.edge(e)
    first = insert_line(shape, edge)
    if edge.kind is EdgeKind.Bottom:
        second = insert_column(first.shape, first.shape.find_edge(EdgeKind.Right,
                                                                  edge.anchor))
    else:
        second = insert_row(first.shape, first.shape.find_edge(EdgeKind.Bottom,
                                                               edge.anchor + 1))

    def move(cell: Cell) -> Cell:
        return second.move(first.move(cell))

    lower = second.move(first.new_cell)
    assert lower.is_lower and second.new_cell == lower.mirror(), \
        f"Inserting at lower edge {e} of {shape} gave the unmatched cells {lower} and " \
        f"{second.new_cell}."
    return second.shape, lower, move


def insert_point_sym(tableau: TreeLikeTableau, e: int, sign: Sign) -> TreeLikeTableau:
    require_symmetric(tableau, "insert_point_sym")
    sign = Sign(sign) if not isinstance(sign, Sign) else sign
    n = half_size(tableau)
    if not 0 <= e <= n:
        raise ValueError(f"Invalid lower edge index {e} for a symmetric tableau of size "
                         f"{tableau.size}. Must be in [0, {n}].")

    k = star_special_index(tableau)
    special = tableau.shape.boundary_cells[k]
    shape, lower, move = _insert_pair(tableau.shape, e)
    points = frozenset(move(p) for p in tableau.points) | {lower, lower.mirror()}

    ribbon: Set[Cell] = set()
    if sign is Sign.Minus:
        ribbon = ribbon_cells(shape, lower, lower.mirror())
    elif e < k:
        half = ribbon_cells(shape, lower, move(special))
        ribbon = half | {cell.mirror() for cell in half}

    if not ribbon:
        return TreeLikeTableau.unchecked(shape, points)
    return TreeLikeTableau.unchecked(_extend(shape, ribbon), points)


def remove_point_sym(tableau: TreeLikeTableau) -> SymRemoval:
    """ Inverse of insert_point_sym(): returns the smaller symmetric tableau, the lower edge
    index and the sign of the last insertion. """

    require_symmetric(tableau, "remove_point_sym")
    if tableau.size < 3:
        raise ValueError("Cannot remove a point from the symmetric tableau of size 1.")

    shape = tableau.shape
    k = star_special_index(tableau)
    row, col = special = shape.boundary_cells[k]

    sign = Sign.Plus
    if Cell(row, col + 1) in shape:
        j, ribbon = walk_to_next_point(tableau, k)
        target = shape.boundary_cells[j]
        if target.is_lower:
            ribbon = ribbon + [cell.mirror() for cell in ribbon]
        else:
            assert target == special.mirror(), \
                f"Walking from {special} reached {target}, which is neither a lower point " \
                f"nor the mirror image of the starting point."
            sign = Sign.Minus
        tableau = remove_cells(tableau, ribbon)

    if len(tableau.row_points[row]) == 1:
        reduced = delete_row(delete_column(tableau, row), row)
        edge = reduced.shape.find_edge(EdgeKind.Bottom, col)
    else:
        reduced = delete_row(delete_column(tableau, col), col)
        edge = reduced.shape.find_edge(EdgeKind.Right, row - 1)

    assert edge.index <= half_size(reduced), \
        f"Removal produced the edge {edge.index}, which is not a lower edge of " \
        f"{reduced.shape}."
    _log.debug(f"Removed *-special point {special}, edge {edge.index}, sign "
               f"{sign.symbol}.")
    return SymRemoval(reduced, edge.index, sign)


def grow_sym(tableau: TreeLikeTableau):
    """ All 2(n+1) symmetric tableaux obtained from 'tableau' by one symmetric insertion,
    ordered by edge index and then sign. """
    n = half_size(tableau)
    return [insert_point_sym(tableau, e, sign)
            for e in range(n + 1) for sign in (Sign.Plus, Sign.Minus)]


def embed(tableau: TreeLikeTableau) -> TreeLikeTableau:
    """ The symmetric tableau of size 2n+1 made of a k x k square holding only the root,
    with 'tableau' below it and its mirror image to its right, k being the number of
    columns of 'tableau'. """

    k = tableau.num_columns
    lower = {Cell(r + k, c) for r, c in tableau.points}
    points = {ROOT} | lower | {cell.mirror() for cell in lower}
    lengths = tuple(k + h for h in tableau.shape.column_heights) + \
        tuple(tableau.shape.row_lengths)
    return TreeLikeTableau.unchecked(FerrersShape.unchecked(lengths), frozenset(points))
