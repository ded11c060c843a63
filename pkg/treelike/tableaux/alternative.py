""" Export of tree-like tableaux to alternative tableaux. Every non-root point becomes an
arrow, after which the first row and the first column are removed. The remaining diagram
may contain rows of length 0, which still count towards its half-perimeter. """

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from treelike.lib.core.constants import Arrow
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import ROOT, TreeLikeTableau


@dataclass(frozen=True)
class AlternativeTableau:
    row_lengths: Tuple[int, ...]
    num_columns: int
    arrows: Dict[Cell, Arrow] = field(default_factory=dict, hash=False)

    @property
    def half_perimeter(self) -> int:
        return len(self.row_lengths) + self.num_columns

    @property
    def shape(self) -> Optional[FerrersShape]:
        """ The diagram without its empty rows, None if it has no cell at all. """
        lengths = tuple(length for length in self.row_lengths if length > 0)
        return FerrersShape(lengths) if lengths else None

    @property
    def is_empty(self) -> bool:
        return self.shape is None


def arrow_of(tableau: TreeLikeTableau, point: Cell) -> Arrow:
    """ A point with nothing to its left in its row becomes a left arrow, any other point an
    up arrow. """
    return Arrow.Up if tableau.has_point_left(point) else Arrow.Left


def point_arrows(tableau: TreeLikeTableau) -> Dict[Cell, Arrow]:
    """ The arrow of every non-root point, in the coordinates of 'tableau'. """
    return {p: arrow_of(tableau, p) for p in tableau.points if p != ROOT}


def to_alternative(tableau: TreeLikeTableau) -> AlternativeTableau:
    arrows = {
        Cell(p.row - 1, p.col - 1): arrow
        for p, arrow in point_arrows(tableau).items()
        if p.row > 1 and p.col > 1
    }
    lengths = tuple(length - 1 for length in tableau.shape.row_lengths[1:])
    return AlternativeTableau(lengths, tableau.num_columns - 1, arrows)
