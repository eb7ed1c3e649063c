from fractions import Fraction

import pytest
from hypothesis import strategies as st

from garding_nuij.poly import MultiPoly
from garding_nuij.parsing import parse_poly


@pytest.fixture
def lorentz():
    return parse_poly("x^2 + y^2 - z^2", 3)


def small_fractions(bound=6):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=4)


@st.composite
def multipolys(draw, n=3, max_terms=5, max_exp=3, homogeneous_degree=None):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        if homogeneous_degree is None:
            mono = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        else:
            cuts = sorted(draw(st.integers(0, homogeneous_degree)) for _ in range(n - 1))
            bounds = [0] + cuts + [homogeneous_degree]
            mono = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        terms[mono] = draw(small_fractions())
    return MultiPoly(n, terms)


def frac_vector(draw, n, bound=5):
    return [Fraction(draw(st.integers(-bound, bound))) for _ in range(n)]
