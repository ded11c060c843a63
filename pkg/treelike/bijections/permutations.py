"""
Permutations as words sigma_1 ... sigma_n on {1, ..., n}, the statistics of them needed by
the bijections, and their text form.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from treelike.lib.core.constants import PERMUTATION_SEP
from treelike.lib.core.errors import TableauParseError


@dataclass(frozen=True)
class Permutation:
    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise ValueError("A permutation needs at least one letter.")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"The word {word} is not a permutation of "
                             f"{{1, ..., {len(word)}}}.")

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, i: int) -> int:
        """ 1-based access, sigma(i). """
        if not 1 <= i <= len(self.word):
            raise IndexError(f"Position {i} is outside of [1, {len(self.word)}].")
        return self.word[i - 1]

    def __str__(self) -> str:
        return format_permutation(self)


def descents(sigma: Permutation) -> int:
    w = sigma.word
    return sum(1 for j in range(len(w) - 1) if w[j] > w[j + 1])


def ascents(sigma: Permutation) -> int:
    return len(sigma) - 1 - descents(sigma)


def count_2_31(sigma: Permutation) -> int:
    """ Occurrences of the pattern 2-31: pairs i < j < n with
    sigma_{j+1} < sigma_i < sigma_j. Only descents j, j+1 can take part. """

    w = sigma.word
    total = 0
    for j in range(len(w) - 1):
        high, low = w[j], w[j + 1]
        if high > low:
            total += sum(1 for i in range(j) if low < w[i] < high)
    return total


def rank_encode(sigma: Permutation) -> Tuple[int, ...]:
    """ a_i = number of positions j < i with sigma_j < sigma_i. """
    w = sigma.word
    return tuple(sum(1 for j in range(i) if w[j] < w[i]) for i in range(len(w)))


def rank_decode(a: Sequence[int]) -> Permutation:
    """ Inverse of rank_encode(): for i = n down to 1, sigma_i is the a_i-th smallest (from
    0) of the values not used by sigma_{i+1}, ..., sigma_n. """

    n = len(a)
    remaining = list(range(1, n + 1))
    word = [0] * n
    for i in range(n - 1, -1, -1):
        if not 0 <= a[i] <= i:
            raise ValueError(f"Invalid rank {a[i]} at position {i + 1}. Must be in "
                             f"[0, {i}].")
        word[i] = remaining.pop(a[i])
    return Permutation(tuple(word))


def format_permutation(sigma: Permutation) -> str:
    return PERMUTATION_SEP.join(str(v) for v in sigma.word)


def parse_permutation(text: str, digits_shorthand_max: int = 9) -> Permutation:
    """ Parse "3,4,1,5,2" or, for up to 'digits_shorthand_max' letters, "34152". """

    text = text.strip()
    if not text:
        raise TableauParseError("Empty input, expected a permutation.", line=1)
    if PERMUTATION_SEP in text:
        parts = [part.strip() for part in text.split(PERMUTATION_SEP)]
    elif text.isdigit() and len(text) <= digits_shorthand_max:
        parts = list(text)
    else:
        parts = [text]

    try:
        return Permutation(tuple(int(part) for part in parts))
    except ValueError as e:
        raise TableauParseError(f"Invalid permutation {text!r}: {e}", line=1) from e
