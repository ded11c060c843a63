""" Elementary statistics of tree-like tableaux. """

from dataclasses import asdict, dataclass
from typing import Dict, Iterator, Optional

from treelike.tableaux.shapes import Cell
from treelike.tableaux.tableau import TreeLikeTableau, require_symmetric


@dataclass(frozen=True)
class StatRecord:
    size: int
    crossings: int
    left_points: int
    top_points: int
    rows: int
    cells: int
    diag_crossings: Optional[int] = None
    diagonal_cells: Optional[int] = None
    dtop_star: Optional[int] = None

    @property
    def non_crossing_cells(self) -> int:
        return self.cells - self.crossings

    def to_dict(self) -> Dict[str, Optional[int]]:
        return asdict(self)


def crossing_cells(tableau: TreeLikeTableau) -> Iterator[Cell]:
    """ Empty cells with a point above them in their column and a point to their left in
    their row. """

    for cell in tableau.shape.cells():
        if cell not in tableau.points and tableau.has_point_above(cell) and \
                tableau.has_point_left(cell):
            yield cell


def crossings(tableau: TreeLikeTableau) -> int:
    return sum(1 for _ in crossing_cells(tableau))


def left_points(tableau: TreeLikeTableau) -> int:
    """ Non-root points in the first column. """
    return len(tableau.column_points.get(1, ())) - 1


def top_points(tableau: TreeLikeTableau) -> int:
    """ Non-root points in the first row. """
    return len(tableau.row_points.get(1, ())) - 1


def diagonal_cells(tableau: TreeLikeTableau) -> int:
    shape = tableau.shape
    return sum(1 for i in range(1, shape.num_rows + 1) if Cell(i, i) in shape)


def diag_crossings(tableau: TreeLikeTableau) -> int:
    """ Crossings lying on the main diagonal. Only defined for symmetric tableaux. """

    require_symmetric(tableau, "diag")
    return sum(1 for cell in crossing_cells(tableau) if cell.row == cell.col)


def dtop_star(tableau: TreeLikeTableau) -> int:
    """ Number of points in the row of the northernmost non-root point of the first column,
    0 when the first column holds nothing but the root. Only defined for symmetric
    tableaux. """

    require_symmetric(tableau, "dtop*")
    column = tableau.column_points.get(1, ())
    if len(column) < 2:
        return 0
    return len(tableau.row_points[column[1]])


def stats(tableau: TreeLikeTableau, symmetric: bool = False) -> StatRecord:
    """ Collect all statistics of 'tableau'. With symmetric=True the diagonal statistics are
    included as well, which raises AsymmetricTableauError for an asymmetric tableau. """

    record = dict(
        size=tableau.size,
        crossings=crossings(tableau),
        left_points=left_points(tableau),
        top_points=top_points(tableau),
        rows=tableau.num_rows,
        cells=tableau.shape.num_cells,
    )
    if symmetric:
        record.update(
            diag_crossings=diag_crossings(tableau),
            diagonal_cells=diagonal_cells(tableau),
            dtop_star=dtop_star(tableau),
        )
    return StatRecord(**record)
