import itertools

import pytest

from multiset_eulerian.enumeration import (
    BudgetExceeded,
    EmptySpec,
    MultisetSpec,
    bivariate_brute,
    descent_polynomial_brute,
    iterate_words,
    statistics,
)
from multiset_eulerian.polys import BiPoly, UniPoly


class TestSpecParsing:
    def test_comma_form(self):
        assert MultisetSpec.parse("2,1,2").multiplicities == (2, 1, 2)

    def test_power_form(self):
        assert MultisetSpec.parse("1^3 2^4").multiplicities == (1, 1, 1, 2, 2, 2, 2)

    def test_power_form_bare_value(self):
        assert MultisetSpec.parse("3 1^2").multiplicities == (3, 1, 1)

    def test_empty(self):
        spec = MultisetSpec.parse("")
        assert spec.multiplicities == () and spec.m == 0

    def test_zeros_normalize_away(self):
        assert MultisetSpec((2, 0, 1, 0)).multiplicities == (2, 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            MultisetSpec((1, -1))

    def test_word_count(self):
        assert MultisetSpec((2, 2)).word_count() == 6
        assert MultisetSpec((2, 1, 2)).word_count() == 30


class TestIterateWords:
    def test_two_singletons(self):
        assert list(iterate_words(MultisetSpec((1, 1)))) == [(1, 2), (2, 1)]

    def test_two_one(self):
        assert list(iterate_words(MultisetSpec((2, 1)))) == [
            (1, 1, 2), (1, 2, 1), (2, 1, 1)]

    def test_count_and_uniqueness(self):
        spec = MultisetSpec((2, 2))
        words = list(iterate_words(spec))
        assert len(words) == 6 == len(set(words))
        assert words == sorted(words)

    def test_empty_spec_raises(self):
        with pytest.raises(EmptySpec):
            next(iterate_words(MultisetSpec(())))


class TestStatistics:
    def test_plateau_word(self):
        s = statistics((1, 1))
        assert (s.asc, s.des, s.plat) == (1, 1, 1)

    def test_hand_counted_word(self):
        s = statistics((1, 2, 1, 2, 5, 4, 3, 3))
        assert (s.asc, s.des, s.plat) == (4, 4, 1)

    def test_descending_word(self):
        s = statistics((2, 1))
        assert (s.asc, s.des, s.plat) == (1, 2, 0)

    @pytest.mark.parametrize("mults", [(1, 1, 1), (2, 2), (3, 1), (2, 1, 2), (4,)])
    def test_triple_sums_to_m_plus_one(self, mults):
        spec = MultisetSpec(mults)
        for word in iterate_words(spec):
            s = statistics(word)
            assert s.asc + s.des + s.plat == spec.m + 1
            assert s.des >= 1


class TestDescentPolynomials:
    def test_golden_11(self):
        assert descent_polynomial_brute(MultisetSpec((1, 1))) == UniPoly({1: 1, 2: 1})

    def test_golden_2(self):
        assert descent_polynomial_brute(MultisetSpec((2,))) == UniPoly.x()

    def test_golden_212(self):
        assert descent_polynomial_brute(MultisetSpec((2, 1, 2))) == UniPoly(
            {1: 1, 2: 12, 3: 15, 4: 2}
        )

    def test_bivariate_golden(self):
        assert bivariate_brute(MultisetSpec((1,))) == BiPoly({(1, 1): 1})
        assert bivariate_brute(MultisetSpec((2,))) == BiPoly({(1, 2): 1})
        assert bivariate_brute(MultisetSpec((1, 1, 1))) == BiPoly(
            {(3, 1): 1, (2, 2): 4, (1, 3): 1}
        )

    def test_bivariate_homogeneous(self):
        spec = MultisetSpec((3, 2, 1))
        assert bivariate_brute(spec).homogeneous_degree() == spec.m + 1

    def test_budget_exceeded_carries_count(self):
        with pytest.raises(BudgetExceeded) as excinfo:
            descent_polynomial_brute(MultisetSpec((1, 1, 1, 1)), budget=10)
        assert excinfo.value.count == 24

    def test_budget_env_var(self, monkeypatch):
        monkeypatch.setenv("MULTISET_EULERIAN_BUDGET", "5")
        with pytest.raises(BudgetExceeded):
            descent_polynomial_brute(MultisetSpec((1, 1, 1)))

    def test_evaluation_at_one_counts_words(self):
        for mults in [(1, 1, 1), (2, 2, 1), (3, 2), (4, 1)]:
            spec = MultisetSpec(mults)
            assert descent_polynomial_brute(spec).evaluate(1) == spec.word_count()

    def test_zero_constant_term(self):
        for mults in [(1,), (2, 2), (3, 1)]:
            assert descent_polynomial_brute(MultisetSpec(mults)).coeff(0) == 0

    def test_permutation_invariance(self):
        base = (1, 2, 3)
        polys = {
            descent_polynomial_brute(MultisetSpec(order))
            for order in itertools.permutations(base)
        }
        assert len(polys) == 1

    def test_empty_spec_raises(self):
        with pytest.raises(EmptySpec):
            descent_polynomial_brute(MultisetSpec(()))
