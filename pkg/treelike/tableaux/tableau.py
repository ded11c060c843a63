import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from treelike.lib.core.errors import AsymmetricTableauError, InvalidTableauError
from treelike.tableaux.shapes import Cell, FerrersShape, as_shape

_log = logging.getLogger(__name__)

ROOT = Cell(1, 1)


@dataclass(frozen=True)
class Violation:
    """ A single failed tree-like condition. 'condition' is 1 (root point), 2 (unique parent)
    or 3 (no empty row or column); 'witness' is a cell for conditions 1 and 2 and a row or
    column number for condition 3, as indicated by 'kind'. """
    condition: int
    kind: str
    witness: Union[Cell, int]
    detail: str = ""

    def __str__(self):
        where = f"cell {tuple(self.witness)}" if self.kind == "cell" else \
            f"{self.kind} {self.witness}"
        text = f"condition ({self.condition}) violated at {where}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class TreeLikeTableau:
    """ A Ferrers shape together with a set of pointed cells. Instances are created unchecked
    by the insertion code; use validate() or check_tableau() to build one from untrusted
    input. """
    shape: FerrersShape
    points: FrozenSet[Cell]

    def __post_init__(self):
        object.__setattr__(self, "shape", as_shape(self.shape))
        object.__setattr__(self, "points", frozenset(Cell(*p) for p in self.points))
        outside = [p for p in self.points if p not in self.shape]
        if outside:
            raise ValueError(f"Points {sorted(outside)} lie outside of the shape "
                             f"{self.shape}.")

    @classmethod
    def unchecked(cls, shape: FerrersShape, points: FrozenSet[Cell]) -> "TreeLikeTableau":
        """ Build a tableau from a shape and a frozenset of cells inside it, skipping the
        conversions and the containment check. """
        tableau = object.__new__(cls)
        object.__setattr__(tableau, "shape", shape)
        object.__setattr__(tableau, "points", points)
        return tableau

    @classmethod
    def single(cls) -> "TreeLikeTableau":
        """ The unique tableau of size 1. """
        return cls(FerrersShape((1,)), frozenset({ROOT}))

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def num_rows(self) -> int:
        return self.shape.num_rows

    @property
    def num_columns(self) -> int:
        return self.shape.num_columns

    @cached_property
    def row_points(self) -> Dict[int, Tuple[int, ...]]:
        """ Row number -> sorted columns of the points in that row. """
        rows: Dict[int, List[int]] = {}
        for r, c in self.points:
            rows.setdefault(r, []).append(c)
        return {r: tuple(sorted(cols)) for r, cols in rows.items()}

    @cached_property
    def column_points(self) -> Dict[int, Tuple[int, ...]]:
        """ Column number -> sorted rows of the points in that column. """
        cols: Dict[int, List[int]] = {}
        for r, c in self.points:
            cols.setdefault(c, []).append(r)
        return {c: tuple(sorted(rows)) for c, rows in cols.items()}

    def has_point_above(self, cell: Cell) -> bool:
        rows = self.column_points.get(cell.col, ())
        return bool(rows) and rows[0] < cell.row

    def has_point_left(self, cell: Cell) -> bool:
        cols = self.row_points.get(cell.row, ())
        return bool(cols) and cols[0] < cell.col

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.points

    def __str__(self):
        from treelike.tableaux.serialization import render
        return render(self)


def find_violations(shape: Union[FerrersShape, Sequence[int]],
                    points: Iterable[Sequence[int]]) -> List[Violation]:
    """ Check the three tree-like conditions and return every violation found, in the order
    of the conditions, cells in reading order. An empty list means the points form a
    tree-like tableau. """

    candidate = TreeLikeTableau(shape, frozenset(Cell(*p) for p in points))
    shape = candidate.shape
    violations = []

    if ROOT not in candidate.points:
        violations.append(Violation(1, "cell", ROOT, "the root cell holds no point"))

    for p in sorted(candidate.points - {ROOT}):
        above, left = candidate.has_point_above(p), candidate.has_point_left(p)
        if above and left:
            violations.append(Violation(2, "cell", p, "points both above and to the left"))
        elif not (above or left):
            violations.append(Violation(2, "cell", p, "no point above or to the left"))

    for r in range(1, shape.num_rows + 1):
        if r not in candidate.row_points:
            violations.append(Violation(3, "row", r, "empty row"))
    for c in range(1, shape.num_columns + 1):
        if c not in candidate.column_points:
            violations.append(Violation(3, "column", c, "empty column"))

    return violations


def validate(shape: Union[FerrersShape, Sequence[int]],
             points: Iterable[Sequence[int]]) -> Union[TreeLikeTableau, List[Violation]]:
    """ Return the tableau if the points satisfy all tree-like conditions on the given shape,
    otherwise the list of violations. """

    points = frozenset(Cell(*p) for p in points)
    violations = find_violations(shape, points)
    if violations:
        return violations
    return TreeLikeTableau(shape, points)


def check_tableau(shape: Union[FerrersShape, Sequence[int]],
                  points: Iterable[Sequence[int]]) -> TreeLikeTableau:
    """ Like validate(), but raises InvalidTableauError instead of returning violations. """

    result = validate(shape, points)
    if isinstance(result, list):
        raise InvalidTableauError(result)
    return result


def special_point(tableau: TreeLikeTableau) -> Cell:
    """ The North-East-most point among the pointed cells that lie at the bottom of their
    column. """
    return tableau.shape.boundary_cells[special_index(tableau)]


def special_index(tableau: TreeLikeTableau) -> int:
    """ The index k such that the special point sits in boundary cell b_k. """

    shape = tableau.shape
    cells = shape.boundary_cells
    for k in range(len(cells) - 1, -1, -1):
        if cells[k] in tableau.points and shape.is_bottom(cells[k]):
            return k
    raise AssertionError(f"No pointed cell at the bottom of a column in {tableau!r}, the "
                         f"first column should always end in a point.")


def transpose(tableau: TreeLikeTableau) -> TreeLikeTableau:
    return TreeLikeTableau.unchecked(tableau.shape.transpose(),
                                     frozenset(p.mirror() for p in tableau.points))


def is_symmetric(tableau: TreeLikeTableau) -> bool:
    return tableau.shape.is_symmetric and \
        all(p.mirror() in tableau.points for p in tableau.points)


def require_symmetric(tableau: TreeLikeTableau, operation: Optional[str] = None):
    if not is_symmetric(tableau):
        what = f"'{operation}'" if operation else "This operation"
        raise AsymmetricTableauError(f"{what} requires a symmetric tableau, but the tableau "
                                     f"of shape {tableau.shape} is not invariant under "
                                     f"reflection through the main diagonal.")
