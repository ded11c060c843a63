"""
Insertion histories. Every tableau of size n is built from the tableau of size 1 by a
unique sequence of point insertions; recording the edge index of each step gives a vector
(a_1, ..., a_n) with a_1 = 0 and 0 <= a_i <= i-1, and every such vector occurs exactly once.
The symmetric analogue records (edge index, sign) pairs.
"""

from typing import List, Sequence, Tuple

from treelike.insertion.point import insert_point, remove_special_point
from treelike.insertion.symmetric import insert_point_sym, remove_point_sym
from treelike.lib.core.constants import HISTORY_SEP, SYM_HISTORY_SEP, SYM_STEP_SEP, Sign
from treelike.lib.core.errors import TableauParseError
from treelike.tableaux.tableau import TreeLikeTableau

HistoryVector = Tuple[int, ...]
SymStep = Tuple[int, Sign]
SymHistory = Tuple[SymStep, ...]


def check_history(a: Sequence[int]) -> HistoryVector:
    a = tuple(a)
    if not a:
        raise ValueError("A history vector needs at least one entry.")
    for i, ai in enumerate(a, start=1):
        if not isinstance(ai, int) or not 0 <= ai <= i - 1:
            raise ValueError(f"Invalid history entry a_{i} = {ai!r}. Must be an integer in "
                             f"[0, {i - 1}].")
    return a


def history_encode(tableau: TreeLikeTableau) -> HistoryVector:
    return tuple(step for step, _ in _unwind(tableau))


def ribbon_lengths(tableau: TreeLikeTableau) -> Tuple[int, ...]:
    """ Number of ribbon cells added at each step of the insertion history of 'tableau'.
    Their sum is the number of crossings. """
    return tuple(ribbon for _, ribbon in _unwind(tableau))


def _unwind(tableau: TreeLikeTableau) -> List[Tuple[int, int]]:
    steps = []
    while tableau.size > 1:
        removal = remove_special_point(tableau)
        steps.append((removal.edge, removal.ribbon))
        tableau = removal.tableau
    steps.append((0, 0))
    return steps[::-1]


def history_decode(a: Sequence[int]) -> TreeLikeTableau:
    a = check_history(a)
    tableau = TreeLikeTableau.single()
    for ai in a[1:]:
        tableau = insert_point(tableau, ai)
    return tableau


def format_history(a: Sequence[int]) -> str:
    return HISTORY_SEP.join(str(ai) for ai in a)


def parse_history(text: str) -> HistoryVector:
    parts = [part.strip() for part in text.strip().split(HISTORY_SEP)]
    try:
        values = tuple(int(part) for part in parts)
    except ValueError as e:
        raise TableauParseError(f"Invalid history vector {text.strip()!r}, expected "
                                f"comma-separated integers.", line=1) from e
    try:
        return check_history(values)
    except ValueError as e:
        raise TableauParseError(str(e), line=1) from e


def check_sym_history(steps: Sequence[Tuple[int, Sign]]) -> SymHistory:
    steps = tuple((e, Sign(eps) if not isinstance(eps, Sign) else eps) for e, eps in steps)
    for i, (e, _) in enumerate(steps, start=1):
        if not isinstance(e, int) or not 0 <= e <= i - 1:
            raise ValueError(f"Invalid edge index {e!r} at symmetric step {i}. Must be an "
                             f"integer in [0, {i - 1}].")
    return steps


def sym_history_encode(tableau: TreeLikeTableau) -> SymHistory:
    steps = []
    while tableau.size > 1:
        tableau, e, eps = remove_point_sym(tableau)
        steps.append((e, eps))
    return tuple(steps[::-1])


def sym_history_decode(steps: Sequence[Tuple[int, Sign]]) -> TreeLikeTableau:
    tableau = TreeLikeTableau.single()
    for e, eps in check_sym_history(steps):
        tableau = insert_point_sym(tableau, e, eps)
    return tableau


def format_sym_history(steps: Sequence[SymStep]) -> str:
    return SYM_HISTORY_SEP.join(f"{e}{SYM_STEP_SEP}{eps.symbol}" for e, eps in steps)


def parse_sym_history(text: str) -> SymHistory:
    text = text.strip()
    if not text:
        return ()
    steps = []
    for i, part in enumerate(text.split(SYM_HISTORY_SEP), start=1):
        try:
            edge, sign = part.split(SYM_STEP_SEP)
            steps.append((int(edge), Sign.from_symbol(sign)))
        except ValueError as e:
            raise TableauParseError(f"Invalid symmetric step {i}: {part.strip()!r}, "
                                    f"expected 'edge{SYM_STEP_SEP}sign' such as "
                                    f"'0{SYM_STEP_SEP}+'.", line=1) from e
    try:
        return check_sym_history(steps)
    except ValueError as e:
        raise TableauParseError(str(e), line=1) from e
