import logging

from treelike.tableaux.alternative import AlternativeTableau, to_alternative
from treelike.tableaux.serialization import parse, parse_many, render, render_many
from treelike.tableaux.shapes import BoundaryEdge, Cell, FerrersShape, boundary_cells, \
    boundary_edges
from treelike.tableaux.statistics import StatRecord, stats
from treelike.tableaux.tableau import TreeLikeTableau, Violation, check_tableau, \
    find_violations, is_symmetric, special_index, special_point, transpose, validate

_log = logging.getLogger(__name__)
