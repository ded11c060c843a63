from treelike.bijections import OrderedPartition, Permutation, phi1, phi1_inv, phi2, \
    phi2_inv, xi, xi_inv
from treelike.enumeration import stat_table, verify
from treelike.insertion import history_decode, history_encode, insert_point, \
    insert_point_sym, remove_point, remove_point_sym
from treelike.lib.core.config import default_config, load_config
from treelike.tableaux import FerrersShape, TreeLikeTableau, parse, render

__version__ = "1.0.0"
