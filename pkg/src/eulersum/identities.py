"""Exact verification of the alternating binomial-product identities.

The sum under study is

    S(n, k, l) = sum_{j=k}^{n-l} (-1)^(j-k) C(n, j+l) C(j, k)

for l < n and 0 <= k <= n - l.  A claim circulating in the summability
literature asserts S = 1 for all such triples; that is true only for l = 1.
The correct closed form is S = C(n-(k+1), l-1), and the proof route goes
through the negation identity C(m, j) = (-1)^j C(j-m-1, j) and the
Chu-Vandermonde convolution.  Everything here is exact-integer arithmetic;
float values are deliberately unsupported because any rounding could fake a
violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError
from .scalars import binomial_coefficient, generalized_binomial


def _check_triple(n: int, k: int, ell: int) -> None:
    if n < 1 or ell < 1 or ell >= n:
        raise DomainError(f"need 1 <= l < n, got n={n}, l={ell}")
    if not 0 <= k <= n - ell:
        raise DomainError(f"need 0 <= k <= n-l, got k={k}, n-l={n - ell}")


def alternating_sum(n: int, k: int, ell: int) -> int:
    """S(n, k, l) by direct summation."""
    _check_triple(n, k, ell)
    total = 0
    for j in range(k, n - ell + 1):
        term = binomial_coefficient(n, j + ell) * binomial_coefficient(j, k)
        total += term if (j - k) % 2 == 0 else -term
    return total


def alternating_sum_via_negation(n: int, k: int, ell: int) -> int:
    """S(n, k, l) through the negation identity, an independent route.

    (-1)^(j-k) C(j, k) = C(-k-1, j-k), so after re-indexing the sum becomes
    sum_{j=0}^{n-l-k} C(n, j+k+l) * C(-k-1, j) with generalized binomials.
    No Chu-Vandermonde collapse is applied; the sum is evaluated term by term.
    """
    _check_triple(n, k, ell)
    total = 0
    for j in range(n - ell - k + 1):
        total += binomial_coefficient(n, j + k + ell) * generalized_binomial(-k - 1, j)
    return total


def star_star_rhs(n: int, k: int, ell: int) -> int:
    """The corrected closed form C(n-(k+1), l-1)."""
    return binomial_coefficient(n - (k + 1), ell - 1)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n_max: int
    checked: int
    violations: tuple[tuple, ...]

    @property
    def all_hold(self) -> bool:
        return not self.violations


def iter_star_star_rows(n_max: int) -> Iterator[tuple[int, int, int, int, int, bool]]:
    """(n, k, l, lhs, rhs, ok) over all admissible triples with n <= n_max,
    in lexicographic (n, k, l) order."""
    if n_max < 2:
        raise DomainError(f"need n_max >= 2, got {n_max}")
    for n in range(2, n_max + 1):
        for k in range(0, n):
            for ell in range(1, n - k + 1):
                if ell >= n:
                    continue
                lhs = alternating_sum(n, k, ell)
                rhs = star_star_rhs(n, k, ell)
                yield (n, k, ell, lhs, rhs, lhs == rhs)


def verify_star_star(n_max: int) -> IdentityReport:
    """Exhaustively check S(n,k,l) = C(n-(k+1), l-1) for all n <= n_max."""
    checked = 0
    violations = []
    for n, k, ell, lhs, rhs, ok in iter_star_star_rows(n_max):
        checked += 1
        if not ok:
            violations.append((n, k, ell, lhs, rhs))
    return IdentityReport("corrected-alternating-sum", n_max, checked, tuple(violations))


@dataclass(frozen=True)
class StarViolation:
    n: int
    k: int
    ell: int
    lhs: int
    claimed: int = 1


def find_star_violation(
    n_max: int, ells: Iterable[int] | None = None
) -> StarViolation | None:
    """Smallest (n, k, l) in lexicographic order where the all-ones claim
    S(n, k, l) = 1 fails.

    By default only l >= 2 is searched, because the l = 1 slice is the one
    case where the claim is actually true.  Pass ``ells`` to restrict the
    sweep (e.g. [1] to confirm no violation exists there).
    """
    if n_max < 3 and ells is None:
        raise DomainError(f"need n_max >= 3 to search l >= 2, got {n_max}")
    allowed = None if ells is None else set(ells)
    for n in range(2, n_max + 1):
        for k in range(0, n):
            for ell in range(1, n - k + 1):
                if ell >= n:
                    continue
                if allowed is None:
                    if ell < 2:
                        continue
                elif ell not in allowed:
                    continue
                lhs = alternating_sum(n, k, ell)
                if lhs != 1:
                    return StarViolation(n, k, ell, lhs)
    return None


def chu_vandermonde_check(a: int, b: int, r: int) -> int:
    """Residual of sum_{j=0}^{r} C(a, r-j) C(b, j) - C(a+b, r).

    Zero for all integers a, b (any sign) and r >= 0; the binomials are the
    generalized falling-factorial ones.
    """
    if r < 0:
        raise DomainError(f"need r >= 0, got {r}")
    total = 0
    for j in range(r + 1):
        total += generalized_binomial(a, r - j) * generalized_binomial(b, j)
    return total - generalized_binomial(a + b, r)
