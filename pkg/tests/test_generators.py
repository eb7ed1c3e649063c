import pytest

from garding_nuij.generators import random_coeff_sequence, random_hyperbolic, random_word
from garding_nuij.hyperbolicity import Status, test_hyperbolic as run_test_hyperbolic
from garding_nuij.poly import evaluate, is_homogeneous, restrict_line
from garding_nuij.realroot import is_real_rooted


@pytest.mark.parametrize("seed", range(5))
def test_degree_one_is_linear_form(seed):
    p = random_hyperbolic(1, 2, seed)
    assert p.coefficient((0, 1)) == 1
    assert set(p.terms) <= {(1, 0), (0, 1)}
    assert -5 <= p.coefficient((1, 0)) <= 5


@pytest.mark.parametrize("seed", range(10))
def test_quadratic_restrictions_real_rooted(seed):
    p = random_hyperbolic(2, 3, seed)
    for base in [(1, 2, 3), (-4, 0, 7), (5, -5, 0)]:
        assert is_real_rooted(restrict_line(p, base, (0, 0, 1)))


@pytest.mark.parametrize("m,n", [(1, 2), (3, 3), (5, 4)])
def test_value_one_at_axis(m, n):
    p = random_hyperbolic(m, n, 42)
    assert evaluate(p, [0] * (n - 1) + [1]) == 1
    assert is_homogeneous(p) == (True, m)


@pytest.mark.parametrize("seed", range(6))
def test_generated_instances_pass_default_config(seed):
    p = random_hyperbolic(3, 3, seed)
    assert run_test_hyperbolic(p, [0, 0, 1]).status is Status.PROBABLY_HYPERBOLIC


def test_word_length_and_alphabet():
    assert len(random_word(7, 4, 1)) == 7
    assert set(random_word(7, 2, 1).letters) == {1}
    assert random_word(6, 5, 99) == random_word(6, 5, 99)


def test_coeff_sequence_shape():
    a = random_coeff_sequence(4, 3, 5)
    for k, ak in enumerate(a.entries, start=1):
        assert ak.is_zero() or is_homogeneous(ak) == (True, k)
        assert len(ak) <= k + 1
        assert all(-3 <= c <= 3 for c in ak.terms.values())
