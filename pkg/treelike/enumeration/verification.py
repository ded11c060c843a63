"""
Exhaustive verification of the counting formulas, bijections and insertion invariants up to
given sizes. Every check records the value expected from a closed form or an independent
oracle next to the value computed from the tableaux. Checks flagged as informational are
reported but do not affect the outcome.
"""

import functools
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import pandas as pd
import yacs.config

from treelike.bijections.partitions import xi, xi_inv
from treelike.bijections.permutations import Permutation, count_2_31
from treelike.bijections.phi import phi1, phi1_inv, phi2, phi2_inv
from treelike.bijections.trees import perm_tree, tableau_tree, tree_leaf_edges
from treelike.enumeration.generators import iter_histories, iter_ordered_partitions, \
    iter_square_sym, iter_sym_histories, walk_sym, walk_tableaux
from treelike.enumeration.oracles import brute_2_31, eulerian_by_descents, fubini, sym_count
from treelike.enumeration.polynomials import refined_closed_form, specialize, \
    sym_refined_closed_form
from treelike.enumeration.tables import StatTable
from treelike.insertion.history import HistoryVector, SymHistory, history_decode, \
    history_encode, sym_history_decode, sym_history_encode
from treelike.insertion.point import insert_point, remove_point, remove_special_point
from treelike.insertion.symmetric import embed, insert_point_sym, remove_point_sym
from treelike.lib.core.config import check_budget, default_config
from treelike.lib.core.constants import Sign
from treelike.tableaux.alternative import to_alternative
from treelike.tableaux.serialization import parse, render
from treelike.tableaux.statistics import crossings, diag_crossings, dtop_star, left_points, \
    stats, top_points
from treelike.tableaux.tableau import TreeLikeTableau, find_violations, is_symmetric, \
    special_index, transpose

_log = logging.getLogger(__name__)

# Largest size at which every history is also replayed in full.
REPLAY_MAX_SIZE = 5


@dataclass(frozen=True)
class Check:
    name: str
    n: Optional[int]
    expected: Any
    actual: Any
    passed: bool
    gate: bool = True
    note: str = ""

    @property
    def status(self) -> str:
        if not self.gate:
            return "info"
        return "pass" if self.passed else "FAIL"


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gate)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.gate and not c.passed]

    def find(self, name: str, n: Optional[int] = None) -> List[Check]:
        return [c for c in self.checks if c.name == name and (n is None or c.n == n)]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(c.name, "" if c.n is None else c.n, c.status, str(c.expected), str(c.actual),
              c.note) for c in self.checks],
            columns=["check", "n", "status", "expected", "actual", "note"])

    def to_tsv(self) -> str:
        return self.to_frame().to_csv(sep="\t", index=False, lineterminator="\n")


class Verifier:
    """ Collects checks into a report. Every group of checks runs isolated from the others:
    an exception inside one group is recorded as a failed check of that group. """

    def __init__(self):
        self.report = VerificationReport()

    def check(self, name: str, n: Optional[int], expected: Any, actual: Any,
              gate: bool = True, note: str = "") -> bool:
        passed = expected == actual
        self.report.checks.append(Check(name, n, expected, actual, passed, gate, note))
        level = logging.DEBUG if passed or not gate else logging.WARNING
        _log.log(level, f"{name} (n={n}): expected {expected}, got {actual}.")
        return passed

    def note(self, name: str, n: Optional[int], note: str):
        self.report.checks.append(Check(name, n, None, None, True, False, note))

    def check_all(self, name: str, n: Optional[int], items: Iterable,
                  predicate: Callable[[Any], bool], describe: Callable[[Any], str] = str):
        """ Apply 'predicate' to every item. Passes when no item fails; the first failing
        item is kept in the note. """

        failures, first, total = 0, "", 0
        for item in items:
            total += 1
            if not predicate(item):
                if not failures:
                    first = f"first failure: {describe(item)!r}"
                failures += 1
        return self.check(name, n, 0, failures, note=first or f"{total} cases")

    def run(self, name: str, n: Optional[int], group: Callable[[], None]):
        try:
            group()
        except Exception as e:
            _log.error(f"Check group {name} (n={n}) raised {type(e).__name__}: {e}")
            self.report.checks.append(Check(name, n, "no error", f"{type(e).__name__}: {e}",
                                            False))


def _tableaux_checks(v: Verifier, n: int,
                     walked: List[Tuple[HistoryVector, TreeLikeTableau]], counts: List[int],
                     parents: Dict[HistoryVector, Tuple[TreeLikeTableau, int]],
                     table: StatTable, with_bijections: bool, with_growth: bool):
    histories = [a for a, _ in walked]
    tableaux = [t for _, t in walked]
    fact = math.factorial(n)

    v.check("count", n, fact, table.count)
    v.check("distinct", n, fact, len({render(t) for t in tableaux}))
    v.check_all("valid", n, tableaux, lambda t: not find_violations(t.shape, t.points),
                render)
    v.check_all("history_order", n, itertools.zip_longest(iter_histories(n), histories),
                lambda pair: pair[0] == pair[1], lambda pair: pair[0])

    if n >= 2:
        removals = [remove_special_point(t) for t in tableaux]
        v.check_all("history_unwind", n, zip(histories, removals),
                    lambda pair: (pair[1].tableau, pair[1].edge) ==
                    (parents[pair[0][:-1]][0], pair[0][-1]), lambda pair: pair[0])
        v.check_all("ribbons_sum_to_crossings", n, zip(histories, removals, counts),
                    lambda item: parents[item[0][:-1]][1] + item[1].ribbon == item[2],
                    lambda item: item[0])
    else:
        v.note("history_unwind", n, "the tableau of size 1 has no special point")
    if n <= REPLAY_MAX_SIZE:
        v.check_all("history_encode", n, walked,
                    lambda pair: history_encode(pair[1]) == pair[0], lambda pair: pair[0])
        v.check_all("history_decode", n, walked,
                    lambda pair: history_decode(pair[0]) == pair[1], lambda pair: pair[0])

    v.check_all("tree_leaves_cover_edges", n, tableaux,
                lambda t: sorted(e.index for e in tree_leaf_edges(t)) == list(range(n + 1)),
                render)
    v.check_all("tree_leaves_in_order", n, (t for t, c in zip(tableaux, counts) if not c),
                lambda t: [e.index for e in tree_leaf_edges(t)] == list(range(n + 1)), render)

    def transpose_ok(pair: Tuple[TreeLikeTableau, int]) -> bool:
        t, c = pair
        tt = transpose(t)
        return transpose(tt) == t and crossings(tt) == c and \
            left_points(tt) == top_points(t) and is_symmetric(tt) == is_symmetric(t)

    v.check_all("transpose", n, zip(tableaux, counts), transpose_ok,
                lambda pair: render(pair[0]))
    v.check_all("alternative_half_perimeter", n, tableaux,
                lambda t: to_alternative(t).half_perimeter == n - 1, render)
    if n <= 7:
        v.check_all("render_parse", n, tableaux, lambda t: parse(render(t)) == t, render)

    if with_growth:
        _growth_checks(v, n, tableaux, counts)
    if with_bijections:
        _bijection_checks(v, n, tableaux, histories)


def _growth_checks(v: Verifier, n: int, tableaux: List[TreeLikeTableau], counts: List[int]):
    children = []

    def insertion_ok(pair: Tuple[TreeLikeTableau, int]) -> bool:
        t, cr = pair
        k = special_index(t)
        for i in range(n + 1):
            child = insert_point(t, i)
            children.append(render(child))
            if special_index(child) != i or remove_point(child) != (t, i):
                return False
            if crossings(child) - cr != max(k - i, 0):
                return False
        return True

    v.check_all("insert_remove", n, zip(tableaux, counts), insertion_ok,
                lambda pair: render(pair[0]))
    v.check("grow_partition", n + 1, (math.factorial(n + 1), math.factorial(n + 1)),
            (len(children), len(set(children))))


def _bijection_checks(v: Verifier, n: int, tableaux: List, histories: List):
    fact = math.factorial(n)
    images = [phi1(t) for t in tableaux]
    v.check("phi1_bijective", n, fact, len(set(images)))
    v.check_all("phi1_crossings_2_31", n, zip(tableaux, images),
                lambda pair: crossings(pair[0]) == brute_2_31(pair[1]) ==
                count_2_31(pair[1]), lambda pair: str(pair[1]))
    v.check_all("phi1_descent_formula", n, zip(histories, images),
                lambda pair: count_2_31(pair[1]) ==
                sum(max(a - b, 0) for a, b in zip(pair[0], pair[0][1:])),
                lambda pair: pair[0])
    v.check_all("phi1_inverse", n, zip(tableaux, images),
                lambda pair: phi1_inv(pair[1]) == pair[0], lambda pair: str(pair[1]))

    perms = [Permutation(w) for w in itertools.permutations(range(1, n + 1))]
    tabs = [phi2(sigma) for sigma in perms]
    v.check("phi2_bijective", n, fact, len({render(t) for t in tabs}))
    v.check_all("phi2_trees", n, zip(perms, tabs),
                lambda pair: tableau_tree(pair[1]) == perm_tree(pair[0]),
                lambda pair: str(pair[0]))
    v.check_all("phi2_inverse", n, zip(perms, tabs),
                lambda pair: phi2_inv(pair[1]) == pair[0], lambda pair: str(pair[0]))


def _table_checks(v: Verifier, n: int, table: StatTable):
    fact = math.factorial(n)
    v.check("crossings_total", n, fact * (n - 1) * (n - 2) // 12, table.crossings)

    rows = dict(sorted(table.rows.items()))
    v.check("rows_eulerian", n, eulerian_by_descents(n), rows)
    v.check("rows_symmetric", n, rows, {n + 1 - k: c for k, c in sorted(rows.items())})
    v.check("rows_first_moment", n, math.factorial(n + 1) // 2,
            sum(k * c for k, c in rows.items()))
    if n >= 2:
        v.check("rows_second_moment", n, math.factorial(n + 1) * (3 * n - 2) // 12,
                sum(k * (k - 1) * c for k, c in rows.items()))
        v.check("cells_average", n, Fraction((n + 1) * (5 * n + 6), 24), table.average_cells)
        v.check("non_crossing_average", n, Fraction(3 * n * n + 17 * n + 2, 24),
                table.average_non_crossing)
    else:
        v.note("cells_average", n, "closed form holds from n = 2")

    v.check("special_distribution", n, {k: math.factorial(n - 1) for k in range(n)},
            dict(sorted(table.special.items())))
    v.check("refined_polynomial", n, refined_closed_form(n), table.polynomial)


def _sym_table_checks(v: Verifier, n: int, table: StatTable,
                      previous: Optional[StatTable]):
    v.check("sym_count", n, sym_count(n), table.count)
    if n >= 1:
        v.check("sym_crossings_average", n, Fraction(2 * n * n + 1, 6),
                table.average_crossings)
        v.check("sym_diagonal_cells_average", n, Fraction(3 * (n + 1), 4),
                table.average_diagonal_cells)
        v.check("sym_cells_average", n, Fraction((10 * n + 11) * (n + 1), 12),
                table.average_cells)
        v.check("sym_non_crossing_average", n, Fraction(2 * n * n + 7 * n + 3, 4),
                table.average_non_crossing)
    else:
        v.check("sym_crossings_average", n, Fraction(1, 6), table.average_crossings,
                gate=False, note="closed form holds from n = 1, the size 1 average is 0")

    support = sorted(k for k, c in table.diagonal_cells.items() if c)
    v.check("sym_diagonal_support", n, list(range(1, n + 2)), support)

    if previous is not None:
        m, b = n - 1, previous.diagonal_cells
        expected = {k: k * b[k] + (m + 1) * b[k - 1] + (m + 3 - k) * b[k - 2]
                    for k in range(1, n + 2)}
        v.check("sym_diagonal_recursion", n, expected,
                {k: table.diagonal_cells[k] for k in range(1, n + 2)})

    z_marginal = specialize(table.polynomial, {0: 1, 1: 1})
    v.check("sym_diag_marginal", n,
            {(j,): math.comb(n, j) * math.factorial(n) for j in range(n + 1)}, z_marginal)
    v.check("sym_refined_polynomial", n, sym_refined_closed_form(n), table.polynomial,
            gate=False, note="literal dleft/dtop*/diag sum against the closed product")


def _sym_tableaux_checks(v: Verifier, n: int,
                         walked: List[Tuple[SymHistory, TreeLikeTableau]],
                         parents: Dict[SymHistory, TreeLikeTableau], with_growth: bool,
                         n_max: int):
    histories = [h for h, _ in walked]
    tableaux = [t for _, t in walked]

    v.check("sym_distinct", n, sym_count(n), len({render(t) for t in tableaux}))
    v.check_all("sym_valid", n, tableaux,
                lambda t: is_symmetric(t) and not find_violations(t.shape, t.points), render)
    v.check_all("sym_history_order", n,
                itertools.zip_longest(iter_sym_histories(n), histories),
                lambda pair: pair[0] == pair[1], lambda pair: pair[0])
    if n >= 1:
        v.check_all("sym_history_unwind", n, walked,
                    lambda pair: remove_point_sym(pair[1]) ==
                    (parents[pair[0][:-1]],) + pair[0][-1], lambda pair: pair[0])
    if n <= REPLAY_MAX_SIZE:
        v.check_all("sym_history", n, walked,
                    lambda pair: sym_history_encode(pair[1]) == pair[0] and
                    sym_history_decode(pair[0]) == pair[1], lambda pair: pair[0])

    if with_growth:
        def insertion_ok(t) -> bool:
            before = stats(t, symmetric=True)
            for sign in (Sign.Plus, Sign.Minus):
                raised = 0
                for e in range(n + 1):
                    child = insert_point_sym(t, e, sign)
                    if remove_point_sym(child) != (t, e, sign):
                        return False
                    if left_points(child) - before.left_points != int(e == 0):
                        return False
                    if diag_crossings(child) - before.diag_crossings != \
                            int(sign is Sign.Minus):
                        return False
                    delta = dtop_star(child) - before.dtop_star
                    if delta not in (0, 1):
                        return False
                    raised += delta
                if n >= 1 and raised != 1:
                    return False
            return True

        v.check_all("sym_insert_remove", n, tableaux, insertion_ok, render)

    if 1 <= n <= n_max:
        plain = list(iter_histories(n))
        embedded = {render(embed(history_decode(a))) for a in plain}
        plus_only = {render(sym_history_decode([(a_i, Sign.Plus) for a_i in a]))
                     for a in plain}
        no_diag = {render(t) for t in tableaux if diag_crossings(t) == 0}
        v.check("embedding", n, (embedded, embedded), (plus_only, no_diag),
                note="embedded tableaux, all-'+' histories, diag = 0")


def _square_checks(v: Verifier, n: int):
    squares = list(iter_square_sym(n))
    v.check("square_count", n, fubini(n), len(squares))
    partitions = [xi(t) for t in squares]
    v.check("xi_bijective", n, len(squares), len(set(partitions)))
    v.check_all("xi_blocks", n, zip(squares, partitions),
                lambda pair: len(pair[1]) == diag_crossings(pair[0]),
                lambda pair: str(pair[1]))
    v.check_all("xi_inverse", n, zip(squares, partitions),
                lambda pair: xi_inv(pair[1]) == pair[0], lambda pair: str(pair[1]))
    v.check_all("xi_inverse_partitions", n, iter_ordered_partitions(n),
                lambda pi: xi(xi_inv(pi)) == pi)


def verify(n_max: int, sym_max: int,
           cfg: Optional[yacs.config.CfgNode] = None) -> VerificationReport:
    """ Run every check for tableaux of size 1..n_max and symmetric tableaux of size 2n+1
    for n = 0..sym_max. The bijection checks stop at budget.max_bijection_size and the
    square tableaux checks at budget.max_square_half_size.

    Every size is enumerated once, tableaux paired with their histories; removals are
    checked one step at a time against the tableaux of the previous size. """

    cfg = default_config if cfg is None else cfg
    check_budget(cfg, "max_size", n_max, "tableaux of size")
    check_budget(cfg, "max_sym_half_size", sym_max, "symmetric tableaux of half-size")
    bijection_max = min(n_max, cfg.budget.max_bijection_size)
    square_max = min(sym_max, cfg.budget.max_square_half_size)

    v = Verifier()
    _log.info(f"Verifying tableaux up to size {n_max} and symmetric tableaux up to size "
              f"{2 * sym_max + 1}.")

    parents: Dict[HistoryVector, Tuple[TreeLikeTableau, int]] = {}
    for n in range(1, n_max + 1):
        walked = list(walk_tableaux(n))
        counts = [crossings(t) for _, t in walked]
        table = StatTable(n).add_all(t for _, t in walked)
        v.run("tableaux", n, functools.partial(
            _tableaux_checks, v, n, walked, counts, parents, table,
            with_bijections=n <= bijection_max, with_growth=n < n_max))
        v.run("tables", n, functools.partial(_table_checks, v, n, table))
        parents = {a: (t, c) for (a, t), c in zip(walked, counts)}
        _log.debug(f"Checked {len(walked)} tableaux of size {n}.")

    previous: Optional[StatTable] = None
    sym_parents: Dict[SymHistory, TreeLikeTableau] = {}
    for n in range(0, sym_max + 1):
        walked_sym = list(walk_sym(2 * n + 1))
        table = StatTable(n, symmetric=True).add_all(t for _, t in walked_sym)
        v.run("sym_tables", n, functools.partial(_sym_table_checks, v, n, table, previous))
        v.run("sym_tableaux", n, functools.partial(
            _sym_tableaux_checks, v, n, walked_sym, sym_parents, with_growth=n < sym_max,
            n_max=n_max))
        previous = table
        sym_parents = dict(walked_sym)
        _log.debug(f"Checked {len(walked_sym)} symmetric tableaux of size {2 * n + 1}.")

    for n in range(1, square_max + 1):
        v.run("squares", n, functools.partial(_square_checks, v, n))

    report = v.report
    _log.info(f"Ran {len(report.checks)} checks, {len(report.failures)} failed.")
    return report
