"""
Independent oracles. None of these touches the tableau code, they only enumerate
permutations and set partitions directly.
"""

import itertools
import math
from collections import Counter
from typing import Dict

from treelike.bijections.permutations import Permutation, descents
from treelike.enumeration.generators import iter_ordered_partitions


def eulerian_by_descents(n: int) -> Dict[int, int]:
    """ k -> number of permutations of n with k-1 descents. """

    counts = Counter(descents(Permutation(w)) + 1
                     for w in itertools.permutations(range(1, n + 1)))
    return dict(sorted(counts.items()))


def fubini(n: int) -> int:
    """ Number of ordered partitions of {1, ..., n}, by direct enumeration. """
    return sum(1 for _ in iter_ordered_partitions(n))


def brute_2_31(sigma: Permutation) -> int:
    """ Scan every pair i < j < n for sigma_{j+1} < sigma_i < sigma_j. """

    w = sigma.word
    return sum(1 for i, j in itertools.combinations(range(len(w) - 1), 2)
               if w[j + 1] < w[i] < w[j])


def factorial(n: int) -> int:
    return math.factorial(n)


def sym_count(n: int) -> int:
    """ 2^n n!, the number of symmetric tableaux of size 2n+1. """
    return 2 ** n * math.factorial(n)
