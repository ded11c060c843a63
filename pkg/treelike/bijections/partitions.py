"""
Square symmetric tableaux and ordered partitions.

A symmetric tableau of size 2n+1 whose shape is the (n+1) x (n+1) square is determined by
its cells strictly below the diagonal: the half tableau, with rows 1..n of lengths 1..n
and n points. Row i of the half tableau is row i+1 of the square, cut before the diagonal.
xi maps half tableaux to ordered partitions of {1, ..., n}, the number of blocks being the
number of crossings on the diagonal.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from treelike.lib.core.constants import BLOCK_ELEMENT_SEP, BLOCK_SEP
from treelike.lib.core.errors import AsymmetricTableauError, TableauParseError
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import ROOT, TreeLikeTableau, is_symmetric

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedPartition:
    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen = set()
        for i, block in enumerate(blocks, start=1):
            if not block:
                raise ValueError(f"Block {i} of an ordered partition is empty.")
            if seen & block:
                raise ValueError(f"Block {i} repeats the elements {sorted(seen & block)}.")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"The blocks cover {sorted(seen)} instead of "
                             f"{{1, ..., {len(seen)}}}.")

    @property
    def size(self) -> int:
        return sum(len(block) for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(partition: OrderedPartition) -> str:
    return BLOCK_SEP.join(BLOCK_ELEMENT_SEP.join(str(v) for v in sorted(block))
                          for block in partition.blocks)


def parse_partition(text: str) -> OrderedPartition:
    """ Parse "3|6|1,4|2,5". The empty text is the partition of the empty set. """

    text = text.strip()
    if not text:
        return OrderedPartition(())
    blocks = []
    for i, part in enumerate(text.split(BLOCK_SEP), start=1):
        try:
            blocks.append(frozenset(int(v) for v in part.split(BLOCK_ELEMENT_SEP)))
        except ValueError as e:
            raise TableauParseError(f"Invalid block {i}: {part!r}, expected comma-separated "
                                    f"integers.", line=1) from e
    try:
        return OrderedPartition(tuple(blocks))
    except ValueError as e:
        raise TableauParseError(f"Invalid ordered partition {text!r}: {e}", line=1) from e


@dataclass(frozen=True)
class HalfTableau:
    n: int
    points: FrozenSet[Cell]

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(Cell(*p) for p in self.points))
        outside = [p for p in self.points if not 1 <= p.col <= p.row <= self.n]
        if outside:
            raise ValueError(f"Points {sorted(outside)} lie outside of the half tableau with "
                             f"{self.n} rows.")

    def row(self, i: int) -> List[int]:
        return sorted(p.col for p in self.points if p.row == i)

    @classmethod
    def from_tableau(cls, tableau: TreeLikeTableau) -> "HalfTableau":
        shape = tableau.shape
        if not shape.is_square:
            raise ValueError(f"Expected a square shape, got {shape}.")
        if not is_symmetric(tableau):
            raise AsymmetricTableauError(f"The square tableau of shape {shape} is not "
                                         f"symmetric.")
        return cls(shape.num_rows - 1,
                   frozenset(Cell(p.row - 1, p.col) for p in tableau.points if p.is_lower))

    def to_tableau(self) -> TreeLikeTableau:
        lower = {Cell(p.row + 1, p.col) for p in self.points}
        points = {ROOT} | lower | {p.mirror() for p in lower}
        return TreeLikeTableau(FerrersShape((self.n + 1,) * (self.n + 1)), frozenset(points))


def _rank_map(values: Iterable[int]) -> dict:
    """ The increasing bijection from 'values' onto 1..len(values). """
    return {v: i for i, v in enumerate(sorted(values), start=1)}


def xi_half(half: HalfTableau) -> OrderedPartition:
    n = half.n
    if n == 0:
        return OrderedPartition(())

    last = half.row(n)
    assert last, f"The last row of a half tableau with {n} rows holds no point."
    m = len(last)
    dropped_rows = {i - 1 for i in last[1:]} | {n}
    dropped_cols = set(last[1:])
    row_rank = _rank_map(set(range(1, n + 1)) - dropped_rows)
    col_rank = _rank_map(set(range(1, n + 1)) - dropped_cols)

    reduced = set()
    for p in half.points:
        if p.row in dropped_rows:
            continue
        assert p.col not in dropped_cols, \
            f"Column {p.col} holds a point outside of the last row."
        cell = Cell(row_rank[p.row], col_rank[p.col])
        assert cell.col <= cell.row, f"Reducing {p} left the staircase."
        reduced.add(cell)

    inner = xi_half(HalfTableau(n - m, frozenset(reduced)))
    return relabel_append(inner, last)


def xi_inv_half(partition: OrderedPartition) -> HalfTableau:
    n = partition.size
    if n == 0:
        return HalfTableau(0, frozenset())

    last = sorted(partition.blocks[-1])
    m = len(last)
    rank = _rank_map(set(range(1, n + 1)) - set(last))
    inner = xi_inv_half(OrderedPartition(tuple(frozenset(rank[v] for v in block)
                                               for block in partition.blocks[:-1])))

    kept_rows = sorted(set(range(1, n)) - {i - 1 for i in last[1:]})
    kept_cols = sorted(set(range(1, n + 1)) - set(last[1:]))
    assert len(kept_rows) == n - m, f"Expected {n - m} rows to host the inner half tableau."
    points = {Cell(kept_rows[p.row - 1], kept_cols[p.col - 1]) for p in inner.points}
    points |= {Cell(n, i) for i in last}
    return HalfTableau(n, frozenset(points))


def xi(tableau: TreeLikeTableau) -> OrderedPartition:
    return xi_half(HalfTableau.from_tableau(tableau))


def xi_inv(partition: OrderedPartition) -> TreeLikeTableau:
    return xi_inv_half(partition).to_tableau()


def relabel_append(inner: OrderedPartition, block: Sequence[int]) -> OrderedPartition:
    """ Relabel 'inner' increasingly onto the complement of 'block' within 1..n and append
    'block' as the last block, n being the total size. """

    n = inner.size + len(block)
    relabel = {i: v for v, i in _rank_map(set(range(1, n + 1)) - set(block)).items()}
    blocks = tuple(frozenset(relabel[v] for v in b) for b in inner.blocks)
    return OrderedPartition(blocks + (frozenset(block),))
