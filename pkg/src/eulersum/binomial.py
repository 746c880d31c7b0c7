"""Binomially weighted (Euler) averages and their algebraic checks.

The N-th average with parameter r in (0,1) is the dot product of the
probability row {C(N,n) r^n (1-r)^(N-n)} with the sequence prefix.  Rows are
always built by the all-positive one-step update

    w'_n = r * w_{n-1} + (1-r) * w_n

(never from factorials): every entry stays a probability, so there is no
cancellation and no overflow even for float rows with N in the thousands.

The residual checks return differences rather than booleans; in exact mode
the recurrence identities hold to literally zero, while float mode can report
magnitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import DomainError, ModeMismatchError
from .scalars import ComplexScalar, Mode, Real, real_mode
from .sequences import SequenceSpec, ShiftLeft, ShiftRight


def _check_r(r: Real) -> Mode:
    mode = real_mode(r)
    if not 0 < r < 1:
        raise DomainError(f"binomial parameter needs 0 < r < 1, got {r}")
    return mode


@dataclass(frozen=True, eq=False)
class BinomialRow:
    """The weight vector of the N-th average at parameter r.

    ``weights`` is a tuple of Fractions in exact mode and a read-only numpy
    float64 array in float mode; either way ``weights[n]`` is the coefficient
    of x_n and the entries sum to 1 (exactly, respectively to roundoff).
    """

    N: int
    r: Real
    weights: tuple[Fraction, ...] | np.ndarray

    @property
    def mode(self) -> Mode:
        return Mode.EXACT if isinstance(self.weights, tuple) else Mode.FLOAT

    def weight_sum(self) -> Real:
        if self.mode is Mode.EXACT:
            return sum(self.weights, Fraction(0))
        return float(self.weights.sum())

    def next_row(self) -> "BinomialRow":
        """Row N+1 via the one-step update."""
        r = self.r
        if self.mode is Mode.EXACT:
            w = self.weights
            new = [(1 - r) * w[0]]
            new.extend(r * w[n - 1] + (1 - r) * w[n] for n in range(1, self.N + 1))
            new.append(r * w[self.N])
            return BinomialRow(self.N + 1, r, tuple(new))
        w = self.weights
        new = np.zeros(self.N + 2)
        new[:-1] += (1 - r) * w
        new[1:] += r * w
        new.flags.writeable = False
        return BinomialRow(self.N + 1, r, new)


def weights_row(N: int, r: Real) -> BinomialRow:
    """Build the row for a single N by iterating the one-step update."""
    if N < 0:
        raise DomainError(f"weights_row needs N >= 0, got {N}")
    row = None
    for row in iter_weight_rows(r, N):
        pass
    return row


def iter_weight_rows(r: Real, N_max: int) -> Iterator[BinomialRow]:
    """Yield rows N = 0..N_max, each derived from the previous one."""
    mode = _check_r(r)
    if N_max < 0:
        raise DomainError(f"iter_weight_rows needs N_max >= 0, got {N_max}")
    if mode is Mode.EXACT:
        row = BinomialRow(0, r, (Fraction(1),))
    else:
        start = np.ones(1)
        start.flags.writeable = False
        row = BinomialRow(0, r, start)
    yield row
    for _ in range(N_max):
        row = row.next_row()
        yield row


def _dot_exact(weights: tuple[Fraction, ...], values: list[ComplexScalar]) -> ComplexScalar:
    acc_re = Fraction(0)
    acc_im = Fraction(0)
    for w, v in zip(weights, values):
        acc_re += w * v.re
        acc_im += w * v.im
    return ComplexScalar(acc_re, acc_im)


def _prepare_prefix(x: SequenceSpec, N_max: int, mode: Mode):
    if x.mode is not mode:
        raise ModeMismatchError(
            f"sequence is {x.mode.value}-mode but r is {mode.value}-mode"
        )
    values = x.prefix(N_max)
    if mode is Mode.EXACT:
        return values
    return np.array([complex(v) for v in values], dtype=complex)


def binomial_average(x: SequenceSpec, N: int, r: Real) -> ComplexScalar:
    """The N-th binomially weighted average of x; the 0-th average is x_0."""
    mode = _check_r(r)
    if N < 0:
        raise DomainError(f"binomial_average needs N >= 0, got {N}")
    prepared = _prepare_prefix(x, N, mode)
    row = weights_row(N, r)
    if mode is Mode.EXACT:
        return _dot_exact(row.weights, prepared)
    value = complex(np.dot(row.weights, prepared))
    return ComplexScalar.of_float(value.real, value.imag)


def binomial_sweep(x: SequenceSpec, N_max: int, r: Real) -> list[ComplexScalar]:
    """[E_0, ..., E_{N_max}], sharing one incremental row walk."""
    mode = _check_r(r)
    if N_max < 0:
        raise DomainError(f"binomial_sweep needs N_max >= 0, got {N_max}")
    prepared = _prepare_prefix(x, N_max, mode)
    out: list[ComplexScalar] = []
    for row in iter_weight_rows(r, N_max):
        if mode is Mode.EXACT:
            out.append(_dot_exact(row.weights, prepared))
        else:
            value = complex(np.dot(row.weights, prepared[: row.N + 1]))
            out.append(ComplexScalar.of_float(value.real, value.imag))
    return out


def weight_sum_drift(N_max: int, r: float) -> np.ndarray:
    """|sum(row_N) - 1| for every N <= N_max, float rows only.

    Exact rows sum to exactly 1 by construction; this measures how far the
    float recurrence drifts, which stays near machine epsilon because every
    update is a convex combination of positive entries.
    """
    if not isinstance(r, float):
        raise ModeMismatchError("weight_sum_drift measures the float recurrence")
    _check_r(r)
    if N_max < 0:
        raise DomainError(f"weight_sum_drift needs N_max >= 0, got {N_max}")
    w = np.zeros(N_max + 1)
    w[0] = 1.0
    drift = np.empty(N_max + 1)
    drift[0] = 0.0
    for N in range(1, N_max + 1):
        head = (1 - r) * w[0]
        w[1 : N + 1] = r * w[0:N] + (1 - r) * w[1 : N + 1]
        w[0] = head
        drift[N] = abs(w[: N + 1].sum() - 1.0)
    return drift


# ---------------------------------------------------------------------------
# recurrence and bound checks
# ---------------------------------------------------------------------------


def check_one_step_recurrence(x: SequenceSpec, N: int, r: Real) -> ComplexScalar:
    """Residual of r*E_N(x_{n+1}) + (1-r)*E_N(x_n) - E_{N+1}(x_n).

    Zero for every sequence; exactly zero in exact mode.
    """
    if N < 1:
        raise DomainError(f"recurrence checks need N >= 1, got {N}")
    shifted = ShiftLeft(x, 1)
    lhs = binomial_average(shifted, N, r) * r + binomial_average(x, N, r) * (1 - r)
    return lhs - binomial_average(x, N + 1, r)


def check_k_step_expansion(x: SequenceSpec, N: int, k: int, r: Real) -> ComplexScalar:
    """Residual of the k-step expansion of E_{N+k} in terms of E_{N+i}(x_{n+1}).

    E_{N+k}(x_n) = r * sum_{i=0}^{k-1} (1-r)^{k-i-1} E_{N+i}(x_{n+1})
                   + (1-r)^k E_N(x_n)

    k = 1 coincides with the one-step recurrence.  Exactly zero in exact mode.
    """
    if N < 1:
        raise DomainError(f"recurrence checks need N >= 1, got {N}")
    if k < 1:
        raise DomainError(f"check_k_step_expansion needs k >= 1, got {k}")
    mode = _check_r(r)
    shifted = ShiftLeft(x, 1)
    shifted_prefix = _prepare_prefix(shifted, N + k - 1, mode)
    plain_prefix = _prepare_prefix(x, N + k, mode)

    averages_shifted: list[ComplexScalar] = []
    average_at_N = None
    lhs = None
    for row in iter_weight_rows(r, N + k):
        if N <= row.N <= N + k - 1:
            if mode is Mode.EXACT:
                averages_shifted.append(_dot_exact(row.weights, shifted_prefix))
            else:
                v = complex(np.dot(row.weights, shifted_prefix[: row.N + 1]))
                averages_shifted.append(ComplexScalar.of_float(v.real, v.imag))
        if row.N == N or row.N == N + k:
            if mode is Mode.EXACT:
                avg = _dot_exact(row.weights, plain_prefix)
            else:
                v = complex(np.dot(row.weights, plain_prefix[: row.N + 1]))
                avg = ComplexScalar.of_float(v.real, v.imag)
            if row.N == N:
                average_at_N = avg
            else:
                lhs = avg

    rhs = average_at_N * ((1 - r) ** k)
    for i in range(k):
        rhs = rhs + averages_shifted[i] * (r * (1 - r) ** (k - i - 1))
    return lhs - rhs


@dataclass(frozen=True)
class SupBoundReport:
    """Per-N margins of the shifted-average bound.

    margin(N) = max_{M < N} |E_M(x)| - |E_N(Tx)|; the bound holds when every
    margin is >= 0.  In exact mode the comparison is decided exactly (via
    squared magnitudes) and the float margins are reporting only.
    """

    r: Real
    N_max: int
    margins: tuple[tuple[int, float], ...]
    holds: bool


def check_sup_bound(x: SequenceSpec, N_max: int, r: Real) -> SupBoundReport:
    """Check |E_N(Tx)| <= max_{0<=M<=N-1} |E_M(x)| for 1 <= N <= N_max."""
    if N_max < 1:
        raise DomainError(f"check_sup_bound needs N_max >= 1, got {N_max}")
    _check_r(r)
    sweep_x = binomial_sweep(x, N_max, r)
    sweep_tx = binomial_sweep(ShiftRight(x, 1), N_max, r)

    margins = []
    holds = True
    running_max_sq = sweep_x[0].abs2()
    for N in range(1, N_max + 1):
        shifted_sq = sweep_tx[N].abs2()
        if shifted_sq > running_max_sq:
            holds = False
        margin = float(running_max_sq) ** 0.5 - float(shifted_sq) ** 0.5
        margins.append((N, margin))
        candidate = sweep_x[N].abs2()
        if candidate > running_max_sq:
            running_max_sq = candidate
    return SupBoundReport(r, N_max, tuple(margins), holds)
