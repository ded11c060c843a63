"""
Exact-integer multivariate polynomials, stored as maps from exponent tuples to
coefficients, e.g. {(1, 0): 1, (0, 1): 1} for x + y. Zero coefficients are never stored.
"""

from collections import defaultdict
from typing import Dict, Iterable, Sequence, Tuple

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, int]

VARIABLES = ("x", "y", "z")


def normalize(p: Dict[Monomial, int]) -> Polynomial:
    return {m: c for m, c in sorted(p.items()) if c != 0}


def one(nvars: int) -> Polynomial:
    return {(0,) * nvars: 1}


def times(p: Polynomial, q: Polynomial) -> Polynomial:
    result = defaultdict(int)
    for mp, cp in p.items():
        for mq, cq in q.items():
            result[tuple(a + b for a, b in zip(mp, mq))] += cp * cq
    return normalize(result)


def product(factors: Iterable[Polynomial], nvars: int) -> Polynomial:
    result = one(nvars)
    for factor in factors:
        result = times(result, factor)
    return result


def linear(coefficients: Sequence[int], constant: int = 0) -> Polynomial:
    """ c_1 v_1 + ... + c_k v_k + constant. """
    nvars = len(coefficients)
    p = {tuple(int(i == j) for j in range(nvars)): c for i, c in enumerate(coefficients)}
    p[(0,) * nvars] = constant
    return normalize(p)


def specialize(p: Polynomial, values: Dict[int, int]) -> Polynomial:
    """ Substitute values for the variables at the given positions, keeping the others. """

    result = defaultdict(int)
    for m, c in p.items():
        factor = 1
        for i, v in values.items():
            factor *= v ** m[i]
        kept = tuple(e for i, e in enumerate(m) if i not in values)
        result[kept] += c * factor
    return normalize(result)


def refined_closed_form(n: int) -> Polynomial:
    """ (x + y)(x + y + 1) ... (x + y + n - 2), the constant 1 for n = 1. """
    return product((linear((1, 1), j) for j in range(n - 1)), nvars=2)


def sym_refined_closed_form(n: int) -> Polynomial:
    """ (1 + z)^n (x + y)(x + y + 1) ... (x + y + n - 2), for symmetric tableaux of size
    2n+1. """

    factors = [linear((0, 0, 1), 1) for _ in range(n)]
    factors += [linear((1, 1, 0), j) for j in range(n - 1)]
    return product(factors, nvars=3)


def format_monomial(m: Monomial) -> str:
    return " ".join(f"{VARIABLES[i]}^{e}" for i, e in enumerate(m))


def format_polynomial(p: Polynomial) -> str:
    """ One 'monomial<TAB>coefficient' line per term. """
    return "\n".join(f"{format_monomial(m)}\t{c}" for m, c in sorted(p.items()))
