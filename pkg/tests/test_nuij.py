import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garding_nuij.generators import random_coeff_sequence, random_hyperbolic, random_word
from garding_nuij.hyperbolicity import SamplingConfig, Status, test_hyperbolic as run_test_hyperbolic
from garding_nuij.nuij import (
    CoeffSequence,
    OperatorWord,
    RestrictedSequence,
    apply_first_order,
    apply_word,
    bb_symbol,
    build_Pas,
    build_Qa,
    counterexample_reproduces,
    expand_word,
    gns_check,
    restrict_sequence,
    symbol_polynomial,
    verify_symbol_identity,
)
from garding_nuij.parsing import parse_poly
from garding_nuij.poly import BiPoly, MultiPoly, UniPoly, bipoly_from_shift, evaluate, is_homogeneous, restrict_line
from garding_nuij.realroot import is_real_rooted

FAST = SamplingConfig(sample_count=80)


def P(text, n=3):
    return parse_poly(text, n)


def seq(texts, n=3):
    """Sequence from entries written in the ambient n-variable namespace."""
    return CoeffSequence(len(texts), n, tuple(parse_poly(t, n).drop_last() for t in texts))


class TestFirstOrder:
    def test_single_application(self):
        assert apply_first_order(P("y^2", 2), 1, 1) == P("y^2 + 2*x*y", 2)

    def test_s_zero_is_identity(self):
        p = P("x*y*z + z^3")
        assert apply_first_order(p, 2, 0) == p

    def test_two_letters_by_hand(self):
        # (z^2 + 2xz) + y * d/dz(z^2 + 2xz)
        once = apply_first_order(P("z^2"), 1, 1)
        assert once == P("z^2 + 2*x*z")
        assert apply_first_order(once, 2, 1) == P("z^2 + 2*x*z + 2*y*z + 2*x*y")

    @pytest.mark.parametrize("k", [0, 3, 4])
    def test_bad_letter(self, k):
        with pytest.raises(ValueError):
            apply_first_order(P("z^2"), k, 1)


class TestExpandWord:
    def test_composed_example(self):
        a = expand_word(OperatorWord.parse("x,x,y,y", 3))
        assert a.entries == (
            P("2*x + 2*y", 2),
            P("x^2 + 4*x*y + y^2", 2),
            P("2*x^2*y + 2*x*y^2", 2),
            P("x^2*y^2", 2),
        )

    def test_single_letter(self):
        a = expand_word(OperatorWord.parse("x", 3), 3)
        assert a.entries == (P("x", 2), MultiPoly.zero(2), MultiPoly.zero(2))

    def test_two_letters(self):
        assert expand_word(OperatorWord.parse("x,y", 3)).entries == (P("x + y", 2), P("x*y", 2))

    def test_too_long_for_degree(self):
        with pytest.raises(ValueError):
            expand_word(OperatorWord.parse("x,x,y", 3), 2)

    def test_letters_validated(self):
        with pytest.raises(ValueError):
            OperatorWord((3,), 3)
        with pytest.raises(ValueError):
            OperatorWord.parse("x,q", 3)

    @settings(max_examples=40)
    @given(st.lists(st.integers(1, 3), min_size=1, max_size=6), st.randoms(use_true_random=False))
    def test_order_independent(self, letters, rnd):
        shuffled = list(letters)
        rnd.shuffle(shuffled)
        assert expand_word(OperatorWord(letters, 4)) == expand_word(OperatorWord(shuffled, 4))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 4), st.integers(2, 4),
           st.fractions(-3, 3, max_denominator=3))
    def test_letterwise_matches_sequence(self, seed, m, n, s):
        word = random_word(m, n, seed)
        p = random_hyperbolic(m, n, seed + 1)
        assert apply_word(p, word, s) == build_Pas(p, expand_word(word), s)


class TestBuildPas:
    def test_zero_sequence(self):
        p = P("x*y*z - z^3 + x^3")
        assert build_Pas(p, CoeffSequence.zeros(3, 3), 5) == p

    def test_s_zero(self):
        p = P("x^2 - z^2")
        assert build_Pas(p, seq(["x", "x*y"]), 0) == p

    def test_single_term_by_hand(self):
        assert build_Pas(P("z^2"), seq(["x", "0"]), 1) == P("z^2 + 2*x*z")

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            build_Pas(P("z^3"), seq(["x", "0"]), 1)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 4), st.integers(2, 4),
           st.fractions(-4, 4, max_denominator=5))
    def test_stays_homogeneous(self, seed, m, n, s):
        p = random_hyperbolic(m, n, seed)
        a = random_coeff_sequence(m, n, seed + 7)
        assert is_homogeneous(build_Pas(p, a, s)) == (True, m)


class TestBuildQa:
    def test_zero_sequence(self):
        assert build_Qa(CoeffSequence.zeros(3, 3)) == P("z^3")

    @pytest.mark.parametrize("c,d", [(1, 1), (2, 1), (-3, 2), (0, -1)])
    def test_quadratic_family(self, c, d):
        a = seq([f"{c}*x", f"{d}*x^2"], 2)
        assert build_Qa(a) == P(f"y^2 + {2 * c}*x*y + {2 * d}*x^2", 2)

    def test_equals_word_applied_to_power(self):
        word = OperatorWord.parse("x,x,y,y", 3)
        assert build_Qa(expand_word(word)) == apply_word(P("z^4"), word, 1)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 5), st.integers(2, 5))
    def test_homogeneous_and_one_at_axis(self, seed, m, n):
        q = build_Qa(random_coeff_sequence(m, n, seed))
        assert is_homogeneous(q) == (True, m)
        assert evaluate(q, [0] * (n - 1) + [1]) == 1

    def test_entries_must_be_homogeneous_of_exact_degree(self):
        with pytest.raises(ValueError):
            seq(["x^2", "0"])
        with pytest.raises(ValueError):
            seq(["x", "x^2 + y"])


class TestRestrictSequence:
    a = None

    def setup_method(self):
        self.a = seq(["x", "x^2"], 2)

    def test_s_zero(self):
        assert restrict_sequence(self.a, [5], 0).values == (0, 0)

    def test_evaluation(self):
        assert restrict_sequence(self.a, [2], 1).values == (2, 4)

    def test_half_s(self):
        assert restrict_sequence(self.a, [2], Fraction(1, 2)).values == (1, 1)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            restrict_sequence(self.a, [1, 2], 1)


def reference_symbol(values, d):
    """Coefficient-of-a_j form: sum_j a_j sum_k d!/((d-j-k)! k!) z^k w^(d-j-k)."""
    a = [Fraction(1)] + [Fraction(v) for v in values]
    entries = {}
    for j in range(d + 1):
        for k in range(d - j + 1):
            entries[(k, d - j - k)] = entries.get((k, d - j - k), 0) + a[j] * Fraction(
                factorial(d), factorial(d - j - k) * factorial(k)
            )
    return BiPoly(d, entries)


class TestSymbol:
    def test_identity_operator(self):
        assert bb_symbol(RestrictedSequence(2, (0, 0)), 2) == bipoly_from_shift(UniPoly([0, 0, 1]))

    def test_small_example(self):
        expected = BiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1, (1, 0): 2, (0, 1): 2, (0, 0): 2})
        r = RestrictedSequence(2, (1, 1))
        assert bb_symbol(r, 2) == expected
        assert bipoly_from_shift(UniPoly([2, 2, 1])) == expected
        assert symbol_polynomial(r, 2) == UniPoly([2, 2, 1])

    @pytest.mark.parametrize("d", range(1, 7))
    @pytest.mark.parametrize("j", range(0, 7))
    def test_coefficient_of_each_term(self, d, j):
        if j > d:
            return
        values = [Fraction(int(i == j)) for i in range(1, d + 1)]
        if j == 0:
            values = [Fraction(0)] * d
        sym = bb_symbol(RestrictedSequence(d, tuple(values)), d)
        base = bb_symbol(RestrictedSequence(d, (0,) * d), d)
        if j == 0:
            contribution = base.nonzero_terms()
        else:
            contribution = {
                key: sym.coefficient(*key) - base.coefficient(*key)
                for key in set(sym.nonzero_terms()) | set(base.nonzero_terms())
            }
            contribution = {k: v for k, v in contribution.items() if v}
        expected = {
            (k, d - j - k): Fraction(factorial(d), factorial(d - j - k) * factorial(k))
            for k in range(d - j + 1)
        }
        assert contribution == expected

    @pytest.mark.parametrize("d", range(0, 9))
    def test_zero_sequence_identity(self, d):
        assert verify_symbol_identity(RestrictedSequence(d, (0,) * d), d)

    def test_small_identity(self):
        assert verify_symbol_identity(RestrictedSequence(2, (1, 1)), 2)

    @settings(max_examples=200)
    @given(st.integers(1, 8).flatmap(
        lambda d: st.tuples(st.just(d), st.lists(st.integers(-10, 10), min_size=d, max_size=d))))
    def test_identity_random(self, case):
        d, values = case
        r = RestrictedSequence(d, tuple(values))
        check = verify_symbol_identity(r, d)
        assert check.holds, (check.symbol, check.shifted)
        assert check.symbol == reference_symbol(values, d)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            bb_symbol(RestrictedSequence(2, (1, 1)), 3)
        with pytest.raises(ValueError):
            verify_symbol_identity(RestrictedSequence(2, (1, 1)), 3)

    def test_check_exposes_both_sides(self):
        check = verify_symbol_identity(RestrictedSequence(1, (1,)), 1)
        assert check and check.symbol == check.shifted


class TestGnsCheck:
    def test_composed_word_is_gns(self):
        v = gns_check(expand_word(OperatorWord.parse("x,x,y,y", 3)))
        assert v.status is Status.PROBABLY_HYPERBOLIC

    def test_quadratic_counterexample(self):
        a = seq(["x", "x^2"], 2)
        v = gns_check(a)
        assert v.status is Status.NOT_HYPERBOLIC
        assert counterexample_reproduces(a, v)
        # the witness also fails for P = x_n^m built through the general operator
        pas = build_Pas(P("y^2", 2), a, 1)
        assert not is_real_rooted(restrict_line(pas, v.witness.base, v.witness.direction))

    def test_quadratic_gns(self):
        assert gns_check(seq(["2*x", "x^2"], 2)).status is Status.PROBABLY_HYPERBOLIC

    @pytest.mark.parametrize("seed", range(8))
    def test_converse_witness_reproduces(self, seed):
        a = random_coeff_sequence(3, 3, seed)
        v = gns_check(a, FAST)
        if v.status is Status.NOT_HYPERBOLIC:
            assert counterexample_reproduces(a, v)


@pytest.mark.parametrize("trial", range(100))
def test_forward_consistency(trial):
    rng = random.Random(f"forward:{trial}")
    m, n = rng.randint(1, 4), rng.randint(2, 4)
    word = random_word(m, n, rng.getrandbits(32))
    p = random_hyperbolic(m, n, rng.getrandbits(32))
    s = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
    pas = build_Pas(p, expand_word(word), s)
    cfg = SamplingConfig(sample_count=40, include_grid=False, seed=trial)
    assert run_test_hyperbolic(pas, [0] * (n - 1) + [1], cfg).status is not Status.NOT_HYPERBOLIC
