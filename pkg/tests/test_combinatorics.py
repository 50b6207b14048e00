"""Counting formulas against small exhaustive enumerations and identities."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest

from mixent.combinatorics import (
    DEFAULT_EXACT_LIMIT,
    MAX_EXACT_LIMIT,
    Count,
    OccupationVector,
    StirlingForm,
    binomial,
    classical_symbol_states,
    log_factorial_exact,
    log_factorial_stirling,
    multiplicity_bose_approx,
    multiplicity_bose_exact,
    multiplicity_distinguishable,
    multiplicity_gibbs_corrected,
    multiplicity_gibbs_corrected_exact,
)
from mixent.errors import DomainError


def compositions(total, parts):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


class TestCount:
    def test_from_int(self):
        c = Count.from_int(12)
        assert c.value == 12
        assert c.log_value == pytest.approx(math.log(12), rel=1e-15)
        assert not c.is_log_only

    def test_zero_sentinel(self):
        assert Count.from_int(0).log_value == float("-inf")

    def test_log_only(self):
        c = Count.log_only(7.5)
        assert c.is_log_only
        assert c.value is None

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            Count.from_int(-1)


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2).value == 6
        assert binomial(9, 0).value == 1
        assert binomial(9, 9).value == 1

    def test_against_subset_enumeration(self):
        # brute force: count 5-element subsets of a 12-element set
        subsets = sum(1 for _ in itertools.combinations(range(12), 5))
        assert subsets == 792
        assert binomial(12, 5).value == 792

    def test_symmetry_exhaustive(self):
        for N in range(65):
            for n in range(N + 1):
                assert binomial(N, n).value == binomial(N, N - n).value

    def test_pascal_rule_exhaustive(self):
        for N in range(1, 65):
            for n in range(1, N):
                assert (
                    binomial(N, n).value
                    == binomial(N - 1, n - 1).value + binomial(N - 1, n).value
                )

    def test_log_only_above_limit(self):
        c = binomial(6000, 3000)
        assert c.is_log_only
        expected = (
            math.lgamma(6001) - 2 * math.lgamma(3001)
        )
        assert c.log_value == pytest.approx(expected, rel=1e-12)

    def test_exact_limit_raised(self):
        c = binomial(6000, 3000, exact_limit=6000)
        assert c.value == math.comb(6000, 3000)

    def test_n_greater_than_N_rejected(self):
        with pytest.raises(DomainError):
            binomial(3, 5)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            binomial(-1, 0)
        with pytest.raises(DomainError):
            binomial(4, -2)

    def test_non_integer_rejected(self):
        with pytest.raises(DomainError):
            binomial(4.0, 2)

    def test_exact_limit_cap(self):
        with pytest.raises(DomainError):
            binomial(10, 5, exact_limit=MAX_EXACT_LIMIT + 1)


class TestMultiplicityDistinguishable:
    def test_no_degeneracy_is_multinomial(self):
        assert multiplicity_distinguishable((2, 1), (1, 1)).value == 3
        assert multiplicity_distinguishable((2, 2), (1, 1)).value == 6

    def test_against_assignment_enumeration(self):
        # three labeled particles over substates {0,1} (cell A) and {2} (cell B);
        # count assignments with exactly 2 in A and 1 in B
        hits = 0
        total = 0
        for assignment in itertools.product(range(3), repeat=3):
            total += 1
            in_a = sum(1 for s in assignment if s < 2)
            if in_a == 2:
                hits += 1
        assert total == 27
        assert hits == 12
        assert multiplicity_distinguishable((2, 1), (2, 1)).value == 12

    def test_multinomial_theorem_sum(self):
        # summing the multiplicity over all occupations recovers (sum g)^N
        for N in range(9):
            for degs in [(1, 1), (2, 1), (2, 2), (1, 2, 3), (1, 1, 1, 2)]:
                total = sum(
                    multiplicity_distinguishable(occ, degs).value
                    for occ in compositions(N, len(degs))
                )
                assert total == sum(degs) ** N

    def test_length_mismatch_rejected(self):
        with pytest.raises(DomainError):
            multiplicity_distinguishable((1, 2), (2,))

    def test_zero_degeneracy_rejected(self):
        with pytest.raises(DomainError):
            multiplicity_distinguishable((1, 2), (1, 0))

    def test_log_only_above_limit(self):
        c = multiplicity_distinguishable((4000, 3000), (2, 3))
        assert c.is_log_only
        expected = (
            math.lgamma(7001)
            + 4000 * math.log(2)
            + 3000 * math.log(3)
            - math.lgamma(4001)
            - math.lgamma(3001)
        )
        assert c.log_value == pytest.approx(expected, rel=1e-12)


class TestMultiplicityGibbsCorrected:
    def test_single_particle(self):
        c = multiplicity_gibbs_corrected((1,), (1,))
        assert c.value == 1
        assert c.log_value == 0.0

    def test_rational_case_is_log_only(self):
        c = multiplicity_gibbs_corrected((2,), (1,))
        assert c.is_log_only
        assert c.log_value == pytest.approx(math.log(0.5), rel=1e-12)
        assert multiplicity_gibbs_corrected_exact((2,), (1,)) == Fraction(1, 2)

    def test_integral_case_keeps_value(self):
        c = multiplicity_gibbs_corrected((2, 1), (2, 1))
        assert c.value == 2
        assert c.log_value == pytest.approx(math.log(2), rel=1e-12)

    def test_definitional_identity(self):
        rng = random.Random(7)
        for _ in range(50):
            m = rng.randint(1, 4)
            occ = tuple(rng.randint(0, 6) for _ in range(m))
            if sum(occ) == 0:
                occ = (1,) + occ[1:]
            degs = tuple(rng.randint(1, 5) for _ in range(m))
            dist = multiplicity_distinguishable(occ, degs)
            corrected = multiplicity_gibbs_corrected(occ, degs)
            expected = dist.log_value - log_factorial_exact(sum(occ))
            assert abs(corrected.log_value - expected) <= 1e-12

    def test_exact_rational_matches_fraction_of_counts(self):
        occ, degs = (3, 2, 0), (2, 3, 1)
        frac = multiplicity_gibbs_corrected_exact(occ, degs)
        dist = multiplicity_distinguishable(occ, degs)
        assert frac == Fraction(dist.value, math.factorial(5))

    def test_exact_rational_size_cap(self):
        with pytest.raises(DomainError):
            multiplicity_gibbs_corrected_exact((MAX_EXACT_LIMIT + 1,), (2,))


class TestMultiplicityBose:
    def test_small_values(self):
        assert multiplicity_bose_exact(3, 2).value == 4
        assert multiplicity_bose_exact(0, 5).value == 1
        assert multiplicity_bose_exact(1, 5).value == 5

    def test_against_multiset_enumeration(self):
        patterns = sum(
            1 for _ in itertools.combinations_with_replacement(range(7), 5)
        )
        assert patterns == 462
        assert multiplicity_bose_exact(5, 7).value == 462

    def test_equals_binomial_identity(self):
        for n in range(1, 51):
            for g in range(1, 51):
                assert (
                    multiplicity_bose_exact(n, g).value
                    == binomial(n + g - 1, n).value
                )

    def test_approx_trivial_values(self):
        assert multiplicity_bose_approx(0, 9) == 0.0
        assert multiplicity_bose_approx(1, 9) == pytest.approx(math.log(9))

    def test_approx_converges_in_dilute_limit(self):
        exact = multiplicity_bose_exact(10, 1000).log_value
        approx = multiplicity_bose_approx(10, 1000)
        assert abs(approx - exact) / exact < 0.05
        # and the error shrinks as g grows at fixed n
        worse = multiplicity_bose_approx(10, 100)
        worse_exact = multiplicity_bose_exact(10, 100).log_value
        assert abs(approx - exact) / exact < abs(worse - worse_exact) / worse_exact

    def test_zero_substates_rejected(self):
        with pytest.raises(DomainError):
            multiplicity_bose_exact(2, 0)


class TestClassicalSymbolStates:
    def test_small_values(self):
        assert classical_symbol_states(0, 4).value == 1
        assert classical_symbol_states(3, 2).value == 8
        assert classical_symbol_states(5, 10).value == 100000

    def test_log_only_above_limit(self):
        c = classical_symbol_states(6000, 3)
        assert c.is_log_only
        assert c.log_value == pytest.approx(6000 * math.log(3), rel=1e-15)


class TestLogFactorial:
    def test_exact_small(self):
        assert log_factorial_exact(0) == 0.0
        assert log_factorial_exact(1) == 0.0
        assert log_factorial_exact(5) == pytest.approx(math.log(120), rel=1e-14)

    def test_exact_against_direct_sum(self):
        for n in (10, 100, 777):
            direct = sum(math.log(k) for k in range(1, n + 1))
            assert log_factorial_exact(n) == pytest.approx(direct, rel=1e-10)

    def test_exact_against_bigint(self):
        assert log_factorial_exact(100) == pytest.approx(
            math.log(math.factorial(100)), rel=1e-14
        )

    def test_stirling_two_term(self):
        assert log_factorial_stirling(1) == pytest.approx(-1.0)
        assert log_factorial_stirling(100) == pytest.approx(
            100 * math.log(100) - 100, rel=1e-15
        )

    def test_stirling_three_term_closer(self):
        for n in (10, 100, 1000):
            exact = log_factorial_exact(n)
            two = log_factorial_stirling(n)
            three = log_factorial_stirling(n, three_term=True)
            assert abs(three - exact) < abs(two - exact)

    def test_two_term_gap_is_half_log_2pin(self):
        # gap grows ~ (1/2) ln(2 pi N), ratio -> 1
        prev_gap = 0.0
        for n in (10, 100, 1000, 10000):
            gap = log_factorial_exact(n) - log_factorial_stirling(n)
            assert gap > prev_gap
            prev_gap = gap
            asymptote = 0.5 * math.log(2 * math.pi * n)
            assert gap / asymptote == pytest.approx(1.0, abs=1e-2)

    def test_stirling_zero_rejected(self):
        with pytest.raises(DomainError):
            log_factorial_stirling(0)

    def test_exact_negative_rejected(self):
        with pytest.raises(DomainError):
            log_factorial_exact(-1)


class TestStirlingForm:
    def test_forms_dispatch(self):
        n = 250.0
        assert StirlingForm.TWO_TERM.log_factorial(n) == log_factorial_stirling(n)
        assert StirlingForm.THREE_TERM.log_factorial(n) == log_factorial_stirling(
            n, three_term=True
        )
        assert StirlingForm.EXACT.log_factorial(n) == math.lgamma(n + 1.0)

    def test_zero_limit(self):
        for form in StirlingForm:
            assert form.log_factorial(0.0) == 0.0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            StirlingForm.TWO_TERM.log_factorial(-1.0)
