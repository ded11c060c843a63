"""
Aggregated statistics over all tableaux of a given size. A table is built by walking the
insertion tree; the walk is cut into disjoint history prefixes which may be processed in
parallel by joblib, the partial tables being merged afterwards.
"""

import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import joblib
import pandas as pd
import yacs.config

from treelike.enumeration.generators import iter_histories, iter_sym, iter_sym_histories, \
    iter_tableaux
from treelike.enumeration.polynomials import Polynomial, format_monomial, normalize
from treelike.lib.core.config import check_budget, default_config
from treelike.tableaux.statistics import stats
from treelike.tableaux.tableau import TreeLikeTableau, special_index

_log = logging.getLogger(__name__)


@dataclass
class StatTable:
    """ Statistics of the tableaux of size n, or of the symmetric tableaux of size 2n+1 when
    'symmetric' is set. The polynomial is keyed by (dleft, dtop), respectively
    (dleft, dtop*, diag). """
    size: int
    symmetric: bool = False
    count: int = 0
    crossings: int = 0
    cells: int = 0
    rows: Counter = field(default_factory=Counter)
    special: Counter = field(default_factory=Counter)
    diagonal_cells: Counter = field(default_factory=Counter)
    diag: Counter = field(default_factory=Counter)
    poly: Counter = field(default_factory=Counter)

    def add(self, tableau: TreeLikeTableau) -> "StatTable":
        record = stats(tableau, symmetric=self.symmetric)
        self.count += 1
        self.crossings += record.crossings
        self.cells += record.cells
        self.rows[record.rows] += 1
        if self.symmetric:
            self.diagonal_cells[record.diagonal_cells] += 1
            self.diag[record.diag_crossings] += 1
            self.poly[(record.left_points, record.dtop_star, record.diag_crossings)] += 1
        else:
            self.special[special_index(tableau)] += 1
            self.poly[(record.left_points, record.top_points)] += 1
        return self

    def add_all(self, tableaux: Iterable[TreeLikeTableau]) -> "StatTable":
        for tableau in tableaux:
            self.add(tableau)
        return self

    def merge(self, other: "StatTable") -> "StatTable":
        assert (self.size, self.symmetric) == (other.size, other.symmetric), \
            f"Cannot merge statistics of size {other.size} into those of size {self.size}."
        return StatTable(
            size=self.size, symmetric=self.symmetric,
            count=self.count + other.count,
            crossings=self.crossings + other.crossings,
            cells=self.cells + other.cells,
            rows=self.rows + other.rows,
            special=self.special + other.special,
            diagonal_cells=self.diagonal_cells + other.diagonal_cells,
            diag=self.diag + other.diag,
            poly=self.poly + other.poly,
        )

    @property
    def non_crossing(self) -> int:
        return self.cells - self.crossings

    @property
    def average_crossings(self) -> Fraction:
        return Fraction(self.crossings, self.count)

    @property
    def average_cells(self) -> Fraction:
        return Fraction(self.cells, self.count)

    @property
    def average_non_crossing(self) -> Fraction:
        return Fraction(self.non_crossing, self.count)

    @property
    def average_diagonal_cells(self) -> Fraction:
        return Fraction(sum(k * c for k, c in self.diagonal_cells.items()), self.count)

    @property
    def polynomial(self) -> Polynomial:
        return normalize(dict(self.poly))

    def to_frame(self, statistic: Optional[str] = None) -> pd.DataFrame:
        """ One row per (statistic, key, value). With 'statistic' given, only the rows of
        that statistic, without the statistic column. """

        records = [("count", "total", self.count)]
        records += [("crossings", "total", self.crossings),
                    ("crossings", "average", self.average_crossings)]
        records += [("cells", "total", self.cells),
                    ("cells", "average", self.average_cells),
                    ("cells", "non_crossing", self.non_crossing)]
        records += [("rows", k, c) for k, c in sorted(self.rows.items())]
        if self.symmetric:
            records += [("diag", k, c) for k, c in sorted(self.diagonal_cells.items())]
            records += [("diag", "average", self.average_diagonal_cells)]
            records += [("diag_crossings", k, c) for k, c in sorted(self.diag.items())]
        else:
            records += [("special", k, c) for k, c in sorted(self.special.items())]
        records += [("poly", format_monomial(m), c) for m, c in self.polynomial.items()]

        frame = pd.DataFrame(records, columns=["statistic", "key", "value"])
        if statistic is not None:
            frame = frame.loc[frame["statistic"] == statistic, ["key", "value"]]
        return frame.reset_index(drop=True)

    def to_tsv(self, statistic: Optional[str] = None) -> str:
        frame = self.to_frame(statistic).astype(str)
        return frame.to_csv(sep="\t", index=False, header=False, lineterminator="\n")


def _partial_table(n: int, prefix: Sequence, symmetric: bool) -> StatTable:
    table = StatTable(n, symmetric)
    tableaux = iter_sym(2 * n + 1, prefix) if symmetric else iter_tableaux(n, prefix)
    table.add_all(tableaux)
    _log.debug(f"Prefix {prefix}: {table.count} tableaux.")
    return table


def stat_table(n: int, symmetric: bool = False,
               cfg: Optional[yacs.config.CfgNode] = None) -> StatTable:
    """ Statistics of all tableaux of size n, or of all symmetric tableaux of size 2n+1.
    Refuses sizes beyond the configured budget. """

    cfg = default_config if cfg is None else cfg
    if symmetric:
        check_budget(cfg, "max_sym_half_size", n, "symmetric tableaux of half-size")
        if n < 0:
            raise ValueError(f"Invalid half-size {n}, must be non-negative.")
    else:
        check_budget(cfg, "max_size", n, "tableaux of size")
        if n < 1:
            raise ValueError(f"Invalid size {n}, must be at least 1.")

    depth = min(cfg.parallel.prefix_depth, n)
    prefixes = list(iter_sym_histories(depth) if symmetric else iter_histories(max(depth, 1)))
    _log.info(f"Aggregating statistics of {'symmetric ' if symmetric else ''}tableaux, "
              f"n={n}, over {len(prefixes)} prefixes with n_jobs={cfg.parallel.n_jobs}.")

    parts = joblib.Parallel(n_jobs=cfg.parallel.n_jobs, backend=cfg.parallel.backend)(
        joblib.delayed(_partial_table)(n, prefix, symmetric) for prefix in prefixes)
    table = functools.reduce(StatTable.merge, parts, StatTable(n, symmetric))

    _log.info(f"Aggregated {table.count} tableaux.")
    return table


def refined_poly(n: int, cfg: Optional[yacs.config.CfgNode] = None) -> Polynomial:
    """ The sum of x^dleft y^dtop over all tableaux of size n, by enumeration. """
    return stat_table(n, cfg=cfg).polynomial


def sym_refined_poly(n: int, cfg: Optional[yacs.config.CfgNode] = None) -> Polynomial:
    """ The sum of x^dleft y^dtop* z^diag over all symmetric tableaux of size 2n+1, by
    enumeration. """
    return stat_table(n, symmetric=True, cfg=cfg).polynomial
