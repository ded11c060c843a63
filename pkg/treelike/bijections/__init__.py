import logging

from treelike.bijections.partitions import HalfTableau, OrderedPartition, format_partition, \
    parse_partition, xi, xi_inv
from treelike.bijections.permutations import Permutation, ascents, count_2_31, descents, \
    format_permutation, parse_permutation, rank_decode, rank_encode
from treelike.bijections.phi import phi1, phi1_inv, phi2, phi2_inv
from treelike.bijections.trees import IncreasingTree, Node, format_tree, increasing_tree, \
    parse_tree, perm_tree, tableau_tree, tree_leaf_edges

_log = logging.getLogger(__name__)
