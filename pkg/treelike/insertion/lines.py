"""
Insertion and deletion of whole rows and columns of a Ferrers diagram, together with the
maps that carry the cells of the old diagram over to the new one.
"""

from typing import Callable, FrozenSet, Iterable, NamedTuple, Union

from treelike.lib.core.constants import EdgeKind
from treelike.tableaux.shapes import BoundaryEdge, Cell, FerrersShape
from treelike.tableaux.tableau import TreeLikeTableau

EdgeLike = Union[BoundaryEdge, int]


class LineInsertion(NamedTuple):
    """ Result of inserting a row or a column at a boundary edge. 'new_cell' is the cell
    terminating the inserted line and 'move' sends cells of the old diagram to their
    position in 'shape'. """
    shape: FerrersShape
    new_cell: Cell
    move: Callable[[Cell], Cell]


def _resolve(shape: FerrersShape, edge: EdgeLike) -> BoundaryEdge:
    return shape.edge(edge) if isinstance(edge, int) else edge


def insert_row(shape: FerrersShape, edge: EdgeLike) -> LineInsertion:
    edge = _resolve(shape, edge)
    if edge.kind is not EdgeKind.Bottom:
        raise ValueError(f"A row can only be inserted at the bottom edge of a column, but "
                         f"edge {edge.index} of {shape} is the right edge of row "
                         f"{edge.anchor}.")

    col = edge.anchor
    height = shape.column_height(col)
    lengths = shape.row_lengths[:height] + (col,) + shape.row_lengths[height:]

    def move(cell: Cell) -> Cell:
        return Cell(cell.row + 1, cell.col) if cell.row > height else cell

    return LineInsertion(FerrersShape.unchecked(lengths), Cell(height + 1, col), move)


def insert_column(shape: FerrersShape, edge: EdgeLike) -> LineInsertion:
    edge = _resolve(shape, edge)
    if edge.kind is not EdgeKind.Right:
        raise ValueError(f"A column can only be inserted at the right edge of a row, but "
                         f"edge {edge.index} of {shape} is the bottom edge of column "
                         f"{edge.anchor}.")

    row = edge.anchor
    length = shape.row_length(row)
    lengths = tuple(ell + 1 if r <= row else ell
                    for r, ell in enumerate(shape.row_lengths, start=1))

    def move(cell: Cell) -> Cell:
        return Cell(cell.row, cell.col + 1) if cell.col > length else cell

    return LineInsertion(FerrersShape.unchecked(lengths), Cell(row, length + 1), move)


def insert_line(shape: FerrersShape, edge: EdgeLike) -> LineInsertion:
    """ Insert a row at a bottom edge or a column at a right edge. """
    edge = _resolve(shape, edge)
    if edge.kind is EdgeKind.Bottom:
        return insert_row(shape, edge)
    return insert_column(shape, edge)


def row_insert(shape: FerrersShape, edge: EdgeLike) -> FerrersShape:
    return insert_row(shape, edge).shape


def column_insert(shape: FerrersShape, edge: EdgeLike) -> FerrersShape:
    return insert_column(shape, edge).shape


def delete_row(tableau: TreeLikeTableau, row: int) -> TreeLikeTableau:
    lengths = tableau.shape.row_lengths[:row - 1] + tableau.shape.row_lengths[row:]
    points = frozenset(Cell(r - 1, c) if r > row else Cell(r, c)
                       for r, c in tableau.points if r != row)
    return TreeLikeTableau.unchecked(FerrersShape.unchecked(lengths), points)


def delete_column(tableau: TreeLikeTableau, col: int) -> TreeLikeTableau:
    lengths = tuple(ell - 1 if ell >= col else ell for ell in tableau.shape.row_lengths)
    points = frozenset(Cell(r, c - 1) if c > col else Cell(r, c)
                       for r, c in tableau.points if c != col)
    return TreeLikeTableau.unchecked(FerrersShape.unchecked(lengths), points)


def remove_cells(tableau: TreeLikeTableau, cells: Iterable[Cell]) -> TreeLikeTableau:
    """ Remove empty cells lying at the ends of their rows. """

    cells: FrozenSet[Cell] = frozenset(cells)
    assert not cells & tableau.points, f"Cannot remove the pointed cells " \
                                       f"{sorted(cells & tableau.points)}."
    lengths = list(tableau.shape.row_lengths)
    for cell in cells:
        lengths[cell.row - 1] -= 1
    return TreeLikeTableau.unchecked(FerrersShape.unchecked(tuple(lengths)),
                                     tableau.points)
