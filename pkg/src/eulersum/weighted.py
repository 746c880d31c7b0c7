"""Weighted averages driven by an increasing weight function W.

The N-th W-weighted average of a sequence is

    (1/W(N)) * sum_{n=1}^{N} (W(n) - W(n-1)) * x_n

implemented verbatim: the sum starts at n = 1, so x_0 never enters.  When the
tail ratio W(N-1)/W(N) tends to a limit L in (0,1), the same average agrees
with the telescoping convolution sum_{k=0}^{N} (L^k - L^{k+1}) x_{N-k} up to
a vanishing term; for W(N) = a^N the two differ by exactly -lambda_N * x_0,
the k = N convolution term the n >= 1 sum never sees.  We surface that
boundary discrepancy rather than redefining W below zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .convolution import RatioTelescoping, convolve_at
from .errors import DomainError, ModeMismatchError, ParseError
from .scalars import ComplexScalar, Mode, Real, parse_real, real_mode
from .sequences import SequenceSpec


class WeightFunction:
    """W: N -> R, strictly increasing to infinity (certified per variant)."""

    mode: Mode

    def value(self, n: int) -> Real:
        raise NotImplementedError

    def delta(self, n: int) -> Real:
        """W(n) - W(n-1); positive for n >= 1."""
        if n < 1:
            raise DomainError(f"delta needs n >= 1, got {n}")
        return self.value(n) - self.value(n - 1)

    def ratio_limit(self) -> Real:
        """lim W(N-1)/W(N), in closed form."""
        raise NotImplementedError

    def max_index(self) -> int | None:
        """Largest supported argument, or None when unbounded."""
        return None

    def to_mode(self, mode: Mode) -> "WeightFunction":
        raise NotImplementedError


@dataclass(frozen=True)
class PowerWeight(WeightFunction):
    """W(N) = base^N for base > 1; the tail ratio is exactly 1/base."""

    base: Real

    def __post_init__(self):
        real_mode(self.base)
        if not self.base > 1:
            raise DomainError(f"PowerWeight needs base > 1, got {self.base}")

    @property
    def mode(self) -> Mode:
        return real_mode(self.base)

    def value(self, n: int) -> Real:
        return self.base**n

    def ratio_limit(self) -> Real:
        return 1 / self.base

    def to_mode(self, mode: Mode) -> "PowerWeight":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return PowerWeight(float(self.base))
        raise DomainError("cannot promote a float weight function to exact mode")


@dataclass(frozen=True)
class LinearWeight(WeightFunction):
    """W(N) = N, the ordinary running mean.  Note W(0) = 0."""

    mode: Mode = Mode.EXACT

    def value(self, n: int) -> Real:
        return Fraction(n) if self.mode is Mode.EXACT else float(n)

    def ratio_limit(self) -> Real:
        return Fraction(1) if self.mode is Mode.EXACT else 1.0

    def to_mode(self, mode: Mode) -> "LinearWeight":
        return self if mode is self.mode else LinearWeight(mode)


@dataclass(frozen=True)
class PolynomialWeight(WeightFunction):
    """W(N) = N^degree for a positive integer degree."""

    degree: int
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError(f"PolynomialWeight needs degree >= 1, got {self.degree}")

    def value(self, n: int) -> Real:
        v = n**self.degree
        return Fraction(v) if self.mode is Mode.EXACT else float(v)

    def ratio_limit(self) -> Real:
        return Fraction(1) if self.mode is Mode.EXACT else 1.0

    def to_mode(self, mode: Mode) -> "PolynomialWeight":
        return self if mode is self.mode else PolynomialWeight(self.degree, mode)


@dataclass(frozen=True)
class TableWeight(WeightFunction):
    """User-supplied increasing weight values; averages only, no tail limit."""

    values: tuple[Real, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise DomainError("TableWeight needs at least two values")
        if len({real_mode(v) for v in self.values}) != 1:
            raise ModeMismatchError("TableWeight values mix arithmetic modes")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise DomainError("TableWeight values must be strictly increasing")

    @property
    def mode(self) -> Mode:
        return real_mode(self.values[0])

    def value(self, n: int) -> Real:
        if not 0 <= n < len(self.values):
            raise DomainError(f"table weight has no entry at {n}")
        return self.values[n]

    def ratio_limit(self) -> Real:
        raise DomainError("a table of weights has no closed-form tail ratio")

    def max_index(self) -> int | None:
        return len(self.values) - 1

    def to_mode(self, mode: Mode) -> "TableWeight":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return TableWeight(tuple(float(v) for v in self.values))
        raise DomainError("cannot promote a float weight function to exact mode")


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def weighted_average(W: WeightFunction, x: SequenceSpec, N: int) -> ComplexScalar:
    """(1/W(N)) * sum_{n=1}^{N} deltaW(n) x_n; needs N >= 1 and W(N) != 0."""
    if N < 1:
        raise DomainError(f"weighted_average needs N >= 1, got {N}")
    if W.mode is not x.mode:
        raise ModeMismatchError("weight function and sequence disagree in mode")
    limit_index = W.max_index()
    if limit_index is not None and N > limit_index:
        raise DomainError(f"weight table too short for N = {N}")
    total_weight = W.value(N)
    if total_weight == 0:
        raise DomainError(f"W({N}) = 0, average undefined")
    values = x.prefix(N)
    acc = ComplexScalar.zero(x.mode)
    for n in range(1, N + 1):
        acc = acc + values[n] * W.delta(n)
    return acc / total_weight


def ratio_limit(W: WeightFunction) -> Real:
    """The tail ratio limit of W, when the variant has one in closed form."""
    return W.ratio_limit()


def lambda_profile_of(W: WeightFunction) -> RatioTelescoping:
    """The telescoping convolution profile matching W's tail ratio.

    Requires the ratio limit to lie strictly inside (0, 1); the running mean
    (ratio limit 1) is deliberately rejected rather than approximated.
    """
    L = W.ratio_limit()
    if not 0 < L < 1:
        raise DomainError(f"tail ratio limit {L} is not in (0,1)")
    return RatioTelescoping(L)


def equivalence_residual(W: WeightFunction, x: SequenceSpec, N: int) -> ComplexScalar:
    """weighted_average(W, x, N) minus sum_{k=0}^{N} lambda_k x_{N-k}.

    Tends to 0 as N grows for bounded x; for W(N) = a^N it equals exactly
    -lambda_N * x_0 at every N.
    """
    if not x.is_bounded():
        raise DomainError("equivalence_residual needs a bounded sequence")
    profile = lambda_profile_of(W)
    return weighted_average(W, x, N) - convolve_at(x, profile, N)


@dataclass(frozen=True)
class RatioPowerReport:
    """Rows (N, W(N-k)/W(N), |ratio - L^k|) for N up to N_max."""

    k: int
    target: Real  # L^k
    rows: tuple[tuple[int, float, float], ...]


def ratio_power_check(W: WeightFunction, k: int, N_max: int) -> RatioPowerReport:
    """Report how fast W(N-k)/W(N) approaches (ratio limit)^k."""
    if k < 0:
        raise DomainError(f"ratio_power_check needs k >= 0, got {k}")
    if N_max < k:
        raise DomainError(f"ratio_power_check needs N_max >= k, got {N_max} < {k}")
    target = W.ratio_limit() ** k
    rows = []
    for N in range(k, N_max + 1):
        denom = W.value(N)
        if denom == 0:
            continue
        ratio = W.value(N - k) / denom
        rows.append((N, float(ratio), abs(float(ratio - target))))
    return RatioPowerReport(k, target, tuple(rows))


# ---------------------------------------------------------------------------
# mini-language:  pow:2   pow:e   linear   poly:2   table:weights.txt
# ---------------------------------------------------------------------------


def parse_weight_function(text: str) -> WeightFunction:
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head == "linear":
        if rest:
            raise ParseError(f"linear takes no argument, got {rest!r}")
        return LinearWeight()
    if head == "pow":
        return PowerWeight(parse_real(rest))
    if head == "poly":
        try:
            degree = int(rest.strip())
        except ValueError as exc:
            raise ParseError(f"poly needs an integer degree, got {rest!r}") from exc
        return PolynomialWeight(degree)
    if head == "table":
        path = rest.strip()
        try:
            lines = Path(path).read_text().splitlines()
        except OSError as exc:
            raise ParseError(f"cannot read weight table {path}: {exc}") from exc
        values = tuple(parse_real(line) for line in lines if line.strip())
        return TableWeight(values)
    raise ParseError(f"unknown weight function kind: {head!r}")
