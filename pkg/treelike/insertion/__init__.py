import logging

from treelike.insertion.history import HistoryVector, SymHistory, format_history, \
    format_sym_history, history_decode, history_encode, parse_history, parse_sym_history, \
    ribbon_lengths, sym_history_decode, sym_history_encode
from treelike.insertion.lines import column_insert, row_insert
from treelike.insertion.point import grow, insert_point, remove_point
from treelike.insertion.symmetric import embed, grow_sym, insert_point_sym, \
    remove_point_sym, star_special_point

_log = logging.getLogger(__name__)
