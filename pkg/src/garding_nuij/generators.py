"""Seeded random instances for the verification campaigns."""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from typing import Tuple, Union

from .nuij import CoeffSequence, OperatorWord
from .poly import MultiPoly

Seed = Union[int, str]

LINEAR_FORM_BOUND = 5
SEQUENCE_COEFF_BOUND = 3


def random_hyperbolic(m: int, n: int, seed: Seed) -> MultiPoly:
    """Product of ``m`` linear forms ``sum_{j<n} c_j x_j + x_n`` with ``c_j`` in [-5, 5].

    Each restriction to a line parallel to ``e_n`` splits into real linear
    factors, so the result is hyperbolic in direction ``e_n`` with value 1 there.
    """
    if m < 1 or n < 2:
        raise ValueError("need m >= 1 and n >= 2")
    rng = random.Random(seed)
    result = MultiPoly.constant(n, 1)
    for _ in range(m):
        coeffs = [rng.randint(-LINEAR_FORM_BOUND, LINEAR_FORM_BOUND) for _ in range(n - 1)] + [1]
        form = MultiPoly(n, {tuple(int(i == j) for i in range(n)): c for j, c in enumerate(coeffs)})
        result = result * form
    return result


def random_word(m: int, n: int, seed: Seed) -> OperatorWord:
    if m < 1 or n < 2:
        raise ValueError("need m >= 1 and n >= 2")
    rng = random.Random(seed)
    return OperatorWord(tuple(rng.randint(1, n - 1) for _ in range(m)), n)


def _random_monomial(rng: random.Random, k: int, nvars: int) -> Tuple[int, ...]:
    counts = Counter(rng.randrange(nvars) for _ in range(k))
    return tuple(counts.get(i, 0) for i in range(nvars))


def random_coeff_sequence(m: int, n: int, seed: Seed) -> CoeffSequence:
    """Each ``a_k`` homogeneous of degree ``k``: at most ``k + 1`` terms, integer coefficients in [-3, 3]."""
    if m < 1 or n < 2:
        raise ValueError("need m >= 1 and n >= 2")
    rng = random.Random(seed)
    entries = []
    for k in range(1, m + 1):
        terms = {}
        for _ in range(rng.randint(1, k + 1)):
            mono = _random_monomial(rng, k, n - 1)
            terms[mono] = Fraction(rng.randint(-SEQUENCE_COEFF_BOUND, SEQUENCE_COEFF_BOUND))
        entries.append(MultiPoly(n - 1, terms))
    return CoeffSequence(m, n, tuple(entries))


def random_point(n: int, bound: int, rng: random.Random) -> Tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
