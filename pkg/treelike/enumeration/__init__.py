import logging

from treelike.enumeration.generators import iter_histories, iter_ordered_partitions, \
    iter_square_sym, iter_sym, iter_sym_histories, iter_tableaux, walk_sym, walk_tableaux
from treelike.enumeration.oracles import brute_2_31, eulerian_by_descents, fubini, sym_count
from treelike.enumeration.polynomials import Polynomial, format_polynomial, \
    refined_closed_form, sym_refined_closed_form
from treelike.enumeration.tables import StatTable, refined_poly, stat_table, sym_refined_poly
from treelike.enumeration.verification import Check, VerificationReport, verify

_log = logging.getLogger(__name__)
