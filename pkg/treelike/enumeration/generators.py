"""
Exhaustive generators. Tableaux are produced in lexicographic order of their insertion
histories by a depth-first walk over the insertion tree, so that every generator can be
restarted from any history prefix and disjoint prefixes split the work.

Symmetric steps are ordered by edge index first and sign second, '+' before '-'.
"""

import itertools
import logging
from typing import Iterator, Sequence, Tuple

from treelike.bijections.partitions import OrderedPartition
from treelike.insertion.history import HistoryVector, SymHistory, check_history, \
    check_sym_history, history_decode, sym_history_decode
from treelike.insertion.point import insert_point
from treelike.insertion.symmetric import insert_point_sym
from treelike.lib.core.constants import Sign
from treelike.tableaux.tableau import TreeLikeTableau

_log = logging.getLogger(__name__)

SIGNS = (Sign.Plus, Sign.Minus)


def _check_prefix(prefix: Sequence, n: int) -> Tuple:
    prefix = tuple(prefix)
    if len(prefix) > n:
        raise ValueError(f"A prefix of length {len(prefix)} cannot be extended to a history "
                         f"of length {n}.")
    return prefix


def iter_histories(n: int, prefix: Sequence[int] = ()) -> Iterator[HistoryVector]:
    """ All history vectors of length n starting with 'prefix', in lexicographic order. """

    if n < 1:
        raise ValueError(f"Invalid size {n}, must be at least 1.")
    prefix = _check_prefix(prefix, n) or (0,)
    check_history(prefix)
    ranges = [range(i) for i in range(len(prefix) + 1, n + 1)]
    for suffix in itertools.product(*ranges):
        yield prefix + suffix


def walk_tableaux(n: int, prefix: Sequence[int] = ()) \
        -> Iterator[Tuple[HistoryVector, TreeLikeTableau]]:
    """ All tableaux of size n whose history starts with 'prefix', each paired with its
    history vector. Equivalent to decoding iter_histories(n, prefix), but every
    intermediate tableau is built only once. """

    if n < 1:
        raise ValueError(f"Invalid size {n}, must be at least 1.")
    prefix = _check_prefix(prefix, n) or (0,)

    def walk(history: HistoryVector, tableau: TreeLikeTableau) \
            -> Iterator[Tuple[HistoryVector, TreeLikeTableau]]:
        if len(history) == n:
            yield history, tableau
            return
        for i in range(len(history) + 1):
            yield from walk(history + (i,), insert_point(tableau, i))

    yield from walk(check_history(prefix), history_decode(prefix))


def iter_tableaux(n: int, prefix: Sequence[int] = ()) -> Iterator[TreeLikeTableau]:
    """ All tableaux of size n whose history starts with 'prefix'. """
    return (tableau for _, tableau in walk_tableaux(n, prefix))


def iter_sym_histories(n: int, prefix: Sequence[Tuple[int, Sign]] = ()) \
        -> Iterator[SymHistory]:
    """ All symmetric histories with n steps starting with 'prefix'. """

    prefix = check_sym_history(_check_prefix(prefix, n))
    choices = [[(e, sign) for e in range(i) for sign in SIGNS]
               for i in range(len(prefix) + 1, n + 1)]
    for suffix in itertools.product(*choices):
        yield prefix + suffix


def walk_sym(m: int, prefix: Sequence[Tuple[int, Sign]] = ()) \
        -> Iterator[Tuple[SymHistory, TreeLikeTableau]]:
    """ All symmetric tableaux of odd size m whose symmetric history starts with 'prefix',
    each paired with its symmetric history. """

    if m < 1 or m % 2 == 0:
        raise ValueError(f"Invalid size {m} for symmetric tableaux, must be odd and "
                         f"positive.")
    n = (m - 1) // 2
    prefix = check_sym_history(_check_prefix(prefix, n))

    def walk(history: SymHistory, tableau: TreeLikeTableau) \
            -> Iterator[Tuple[SymHistory, TreeLikeTableau]]:
        if len(history) == n:
            yield history, tableau
            return
        for e in range(len(history) + 1):
            for sign in SIGNS:
                yield from walk(history + ((e, sign),), insert_point_sym(tableau, e, sign))

    yield from walk(prefix, sym_history_decode(prefix))


def iter_sym(m: int, prefix: Sequence[Tuple[int, Sign]] = ()) -> Iterator[TreeLikeTableau]:
    """ All symmetric tableaux of odd size m whose symmetric history starts with 'prefix'. """
    return (tableau for _, tableau in walk_sym(m, prefix))


def iter_square_sym(n: int) -> Iterator[TreeLikeTableau]:
    """ The symmetric tableaux of size 2n+1 with a square shape. """
    return (t for t in iter_sym(2 * n + 1) if t.shape.is_square)


def iter_ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """ All ordered partitions of {1, ..., n}: pick the first block among the nonempty
    subsets of what is left, then recurse. """

    def walk(remaining: Tuple[int, ...]) -> Iterator[Tuple[frozenset, ...]]:
        if not remaining:
            yield ()
            return
        for k in range(1, len(remaining) + 1):
            for block in itertools.combinations(remaining, k):
                rest = tuple(v for v in remaining if v not in block)
                for tail in walk(rest):
                    yield (frozenset(block),) + tail

    for blocks in walk(tuple(range(1, n + 1))):
        yield OrderedPartition(blocks)
