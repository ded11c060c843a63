"""
Ferrers diagrams and their boundary.

Coordinates are 1-based: rows are numbered from the top, columns from the left, so that
the root cell is (1, 1) and "below" means a larger row index. Geometric points on the
lattice (used for the corners of cells and the endpoints of edges) are given as (x, y)
pairs where x counts columns from the left border and y counts rows from the top border;
the South-East corner of cell (r, c) is thus (c, r).
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from treelike.lib.core.constants import EdgeKind
from treelike.lib.core.errors import InvalidShapeError

LatticePoint = Tuple[int, int]


class Cell(NamedTuple):
    row: int
    col: int

    def mirror(self) -> "Cell":
        return Cell(self.col, self.row)

    @property
    def is_lower(self) -> bool:
        """ Strictly below the main diagonal. """
        return self.row > self.col

    @property
    def se_corner(self) -> LatticePoint:
        return self.col, self.row


class BoundaryEdge(NamedTuple):
    """ A boundary edge, identified by its position in the South-West to North-East order.
    'anchor' is the column that a bottom edge terminates or the row that a right edge
    terminates. """
    index: int
    kind: EdgeKind
    anchor: int


@dataclass(frozen=True)
class FerrersShape:
    row_lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(self.row_lengths)
        object.__setattr__(self, "row_lengths", lengths)
        if not lengths:
            raise InvalidShapeError("A Ferrers shape needs at least one row.")
        for i, length in enumerate(lengths, start=1):
            if not isinstance(length, int) or length < 1:
                raise InvalidShapeError(f"Row {i} has invalid length {length!r}, every row "
                                        f"must hold at least one cell.")
            if i > 1 and length > lengths[i - 2]:
                raise InvalidShapeError(f"Row lengths must be weakly decreasing, but row {i} "
                                        f"({length}) is longer than row {i - 1} "
                                        f"({lengths[i - 2]}).")

    @classmethod
    def unchecked(cls, row_lengths: Tuple[int, ...]) -> "FerrersShape":
        """ Build a shape from lengths already known to be positive and weakly decreasing,
        skipping validation. """
        shape = object.__new__(cls)
        object.__setattr__(shape, "row_lengths", row_lengths)
        return shape

    @property
    def num_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def num_columns(self) -> int:
        return self.row_lengths[0]

    @property
    def half_perimeter(self) -> int:
        return self.num_rows + self.num_columns

    @property
    def num_cells(self) -> int:
        return sum(self.row_lengths)

    @cached_property
    def column_heights(self) -> Tuple[int, ...]:
        return tuple(sum(1 for length in self.row_lengths if length >= c)
                     for c in range(1, self.num_columns + 1))

    def row_length(self, row: int) -> int:
        """ Length of the given row, 0 outside of the diagram. """
        lengths = self.row_lengths
        return lengths[row - 1] if 1 <= row <= len(lengths) else 0

    def column_height(self, col: int) -> int:
        return self.column_heights[col - 1] if 1 <= col <= self.num_columns else 0

    def __contains__(self, cell) -> bool:
        r, c = cell
        lengths = self.row_lengths
        return 1 <= r <= len(lengths) and 1 <= c <= lengths[r - 1]

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield Cell(r, c)

    def is_bottom(self, cell: Cell) -> bool:
        """ True if 'cell' is the lowest cell of its column. """
        return cell in self and Cell(cell.row + 1, cell.col) not in self

    def is_boundary(self, cell: Cell) -> bool:
        """ True if 'cell' has no cell of the diagram to its South-East. """
        return cell in self and Cell(cell.row + 1, cell.col + 1) not in self

    def transpose(self) -> "FerrersShape":
        return FerrersShape.unchecked(self.column_heights)

    @property
    def is_symmetric(self) -> bool:
        return self.row_lengths == self.column_heights

    @property
    def is_square(self) -> bool:
        return all(length == self.num_rows for length in self.row_lengths)

    @cached_property
    def boundary_edges(self) -> Tuple[BoundaryEdge, ...]:
        return tuple(boundary_edges(self))

    @cached_property
    def boundary_cells(self) -> Tuple[Cell, ...]:
        return tuple(boundary_cells(self))

    @cached_property
    def boundary_cell_index(self) -> dict:
        return {cell: i for i, cell in enumerate(self.boundary_cells)}

    def edge(self, index: int) -> BoundaryEdge:
        if not 0 <= index < self.half_perimeter:
            raise ValueError(f"Invalid boundary edge index {index}. Must be in "
                             f"[0, {self.half_perimeter - 1}] for a shape of half-perimeter "
                             f"{self.half_perimeter}.")
        return self.boundary_edges[index]

    @cached_property
    def edge_lookup(self) -> dict:
        return {(edge.kind, edge.anchor): edge for edge in self.boundary_edges}

    def find_edge(self, kind: EdgeKind, anchor: int) -> BoundaryEdge:
        edge = self.edge_lookup.get((kind, anchor))
        if edge is not None:
            return edge
        raise KeyError(f"The shape {self.row_lengths} has no {kind.value} edge at {anchor}.")

    def __str__(self) -> str:
        return "(" + ",".join(str(length) for length in self.row_lengths) + ")"


def boundary_edges(shape: FerrersShape) -> List[BoundaryEdge]:
    """ The boundary edges of 'shape' in South-West to North-East order. Walking up from
    the bottom row, every row contributes the bottom edges of the columns that end in it,
    followed by its own right edge. """

    edges = []
    for r in range(shape.num_rows, 0, -1):
        for c in range(shape.row_length(r + 1) + 1, shape.row_length(r) + 1):
            edges.append(BoundaryEdge(len(edges), EdgeKind.Bottom, c))
        edges.append(BoundaryEdge(len(edges), EdgeKind.Right, r))
    return edges


def boundary_cells(shape: FerrersShape) -> List[Cell]:
    """ The boundary cells of 'shape' in South-West to North-East order. The South-East
    corner of the j-th cell is the common endpoint of edges j and j+1. """

    cells = []
    for r in range(shape.num_rows, 0, -1):
        first = max(shape.row_length(r + 1), 1)
        cells.extend(Cell(r, c) for c in range(first, shape.row_length(r) + 1))
    return cells


def edge_endpoints(shape: FerrersShape, edge: BoundaryEdge) -> Tuple[LatticePoint,
                                                                     LatticePoint]:
    """ Start and end lattice points of 'edge' when the boundary is walked from South-West
    to North-East. """

    if edge.kind is EdgeKind.Bottom:
        height = shape.column_height(edge.anchor)
        return (edge.anchor - 1, height), (edge.anchor, height)
    length = shape.row_length(edge.anchor)
    return (length, edge.anchor), (length, edge.anchor - 1)


def edge_is_lower(shape: FerrersShape, edge: BoundaryEdge) -> bool:
    """ True if 'edge' lies South-West of the point where the main diagonal leaves the
    diagram. """
    (_, _), (x, y) = edge_endpoints(shape, edge)
    return y >= x


def as_shape(value: Sequence[int]) -> FerrersShape:
    if isinstance(value, FerrersShape):
        return value
    return FerrersShape(tuple(value))
