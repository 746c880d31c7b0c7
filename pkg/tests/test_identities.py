"""Exact identity sweeps: direct summation vs the closed form and the
negation-identity route, plus the Chu-Vandermonde residuals."""

from math import comb

import pytest

from eulersum import (
    DomainError,
    alternating_sum,
    alternating_sum_via_negation,
    chu_vandermonde_check,
    find_star_violation,
    iter_star_star_rows,
    star_star_rhs,
    verify_star_star,
)


def direct_sum_oracle(n: int, k: int, ell: int) -> int:
    """Inline independent summation of sum_j (-1)^(j-k) C(n,j+l) C(j,k)."""
    return sum(
        (-1) ** (j - k) * comb(n, j + ell) * comb(j, k) for j in range(k, n - ell + 1)
    )


def triple_count(n_max: int) -> int:
    """Number of admissible (n, k, l) triples: sum over n of n(n+1)/2 - 1."""
    return sum(n * (n + 1) // 2 - 1 for n in range(2, n_max + 1))


class TestAlternatingSum:
    @pytest.mark.parametrize(
        "n,k,ell,expected",
        [
            (5, 1, 2, 3),  # 10 - 10 + 3
            (4, 0, 2, 3),  # 6 - 4 + 1
            (6, 2, 1, 1),
        ],
    )
    def test_examples(self, n, k, ell, expected):
        assert alternating_sum(n, k, ell) == expected
        assert direct_sum_oracle(n, k, ell) == expected

    def test_domain(self):
        with pytest.raises(DomainError):
            alternating_sum(3, 0, 3)  # l must stay below n
        with pytest.raises(DomainError):
            alternating_sum(5, 4, 2)  # k > n - l

    def test_ell_one_slice_is_identically_one(self):
        for n in range(2, 26):
            for k in range(0, n):
                assert alternating_sum(n, k, 1) == 1


class TestNegationRoute:
    def test_matches_direct_summation(self):
        # two independent computations of the same sum, all triples n <= 15
        for n, k, ell, lhs, _, _ in iter_star_star_rows(15):
            assert alternating_sum_via_negation(n, k, ell) == lhs


class TestCorrectedIdentity:
    def test_tiny_sweep(self):
        report = verify_star_star(2)
        assert report.all_hold
        assert report.checked == 2
        for n, k, ell, lhs, rhs, ok in iter_star_star_rows(2):
            assert ok and lhs == 1 and rhs == 1

    def test_medium_sweep(self):
        report = verify_star_star(12)
        assert report.all_hold
        assert report.checked == triple_count(12)

    def test_rhs_closed_form(self):
        assert star_star_rhs(5, 1, 2) == comb(3, 1)
        assert star_star_rhs(3, 0, 2) == comb(2, 1)


class TestAllOnesClaim:
    def test_first_violation(self):
        violation = find_star_violation(4)
        assert (violation.n, violation.k, violation.ell) == (3, 0, 2)
        # the violating sum is C(3,2) - C(3,3) = 2, which also matches the
        # corrected closed form C(2,1); the all-ones claim said 1
        assert violation.lhs == direct_sum_oracle(3, 0, 2) == 2
        assert violation.lhs == star_star_rhs(3, 0, 2)
        assert violation.claimed == 1

    def test_no_violation_on_ell_one(self):
        assert find_star_violation(20, ells=[1]) is None

    def test_restricted_to_ell_two(self):
        violation = find_star_violation(3, ells=[2])
        assert (violation.n, violation.k, violation.ell) == (3, 0, 2)

    def test_lexicographic_order(self):
        # scanning order is (n, k, l); collect everything and compare
        all_violations = [
            (n, k, ell)
            for n, k, ell, lhs, _, _ in iter_star_star_rows(6)
            if ell >= 2 and lhs != 1
        ]
        first = find_star_violation(6)
        assert (first.n, first.k, first.ell) == min(all_violations)

    def test_domain(self):
        with pytest.raises(DomainError):
            find_star_violation(2)


class TestChuVandermonde:
    def test_small_case(self):
        # sum over j: C(2,2-j) C(2,j) = 1 + 4 + 1 = C(4,2)
        assert chu_vandermonde_check(2, 2, 2) == 0

    def test_lemma_substitution_case(self):
        # the (n,k,l) = (5,1,2) instance: a = n, b = -(k+1), r = n-l-k
        assert chu_vandermonde_check(5, -2, 2) == 0

    def test_r_zero(self):
        for a in (-7, 0, 3):
            for b in (-2, 5):
                assert chu_vandermonde_check(a, b, 0) == 0

    def test_sweep(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                for r in range(0, 7):
                    assert chu_vandermonde_check(a, b, r) == 0

    def test_domain(self):
        with pytest.raises(DomainError):
            chu_vandermonde_check(1, 1, -1)
