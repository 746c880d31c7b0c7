"""Convergence detection for sweeps and the end-to-end composition experiments.

The detector is a finite surrogate for a limit, never a proof: a sweep is
called converged when its last ``window`` entries all sit within ``tolerance``
of their mean, and that mean is reported as the estimate.  Experiment reports
therefore say "consistent with" or "inconsistent with" a predicted value at
the given tolerance; they never claim more.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .binomial import binomial_sweep
from .convolution import WeightProfile, correct_rhs, incorrect_rhs
from .errors import DomainError, ModeMismatchError, NonConvergenceError
from .scalars import ComplexScalar, Real
from .sequences import Convolved, SequenceSpec, ShiftRight, Tabulated
from .weighted import WeightFunction


@dataclass(frozen=True)
class LimitEstimate:
    """Finite-window limit surrogate for a sweep."""

    value: ComplexScalar
    converged: bool
    N_used: int
    window: int
    max_window_deviation: float
    tolerance: float


def estimate_limit(
    sweep: list[ComplexScalar], tolerance: float, window: int = 10
) -> LimitEstimate:
    """Mean of the last ``window`` sweep entries, flagged converged when they
    all lie within ``tolerance`` of that mean."""
    if window < 1:
        raise DomainError(f"window must be >= 1, got {window}")
    if window > len(sweep):
        raise DomainError(
            f"window {window} exceeds sweep length {len(sweep)}"
        )
    tail = sweep[-window:]
    total = tail[0]
    for entry in tail[1:]:
        total = total + entry
    value = total / window
    deviation = max(abs(entry - value) for entry in tail)
    return LimitEstimate(
        value=value,
        converged=deviation <= tolerance,
        N_used=len(sweep) - 1,
        window=window,
        max_window_deviation=deviation,
        tolerance=tolerance,
    )


def _converged_estimate(
    sweep: list[ComplexScalar], tolerance: float, window: int, label: str
) -> LimitEstimate:
    estimate = estimate_limit(sweep, tolerance, window)
    if not estimate.converged:
        raise NonConvergenceError(
            f"{label} sweep did not converge: max window deviation "
            f"{estimate.max_window_deviation:.3e} > tolerance {tolerance:.3e}"
        )
    return estimate


def _verdict(gap: float, tolerance: float) -> str:
    return "consistent with" if gap <= tolerance else "INCONSISTENT with"


# ---------------------------------------------------------------------------
# experiments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MainTheoremReport:
    """Composition experiment: convolve, sweep, compare both candidate limits."""

    r: Real
    tolerance: float
    base: LimitEstimate
    convolved: LimitEstimate
    product_value: ComplexScalar
    r_dependent_value: ComplexScalar
    gap_to_product: float
    gap_to_r_dependent: float
    convolved_sweep: list[ComplexScalar] = field(repr=False)

    def summary_lines(self) -> list[str]:
        lines = [
            f"base sweep limit estimate:      {self.base.value}",
            f"convolved sweep limit estimate: {self.convolved.value}",
            f"product formula L*sum(lambda):  {self.product_value}"
            f"  (gap {self.gap_to_product:.3e}, "
            f"{_verdict(self.gap_to_product, self.tolerance)} estimate)",
            f"r-dependent formula:            {self.r_dependent_value}"
            f"  (gap {self.gap_to_r_dependent:.3e}, "
            f"{_verdict(self.gap_to_r_dependent, self.tolerance)} estimate)",
        ]
        return lines


def run_main_theorem_experiment(
    x: SequenceSpec,
    profile: WeightProfile,
    r: Real,
    N_max: int,
    tolerance: float,
    window: int = 10,
) -> MainTheoremReport:
    """Estimate the limit of the convolved sweep and compare it against both
    the product formula and the r-dependent formula."""
    base_sweep = binomial_sweep(x, N_max, r)
    base = _converged_estimate(base_sweep, tolerance, window, "base")
    convolved_spec = Convolved(x, profile)
    convolved_sweep = binomial_sweep(convolved_spec, N_max, r)
    convolved = _converged_estimate(convolved_sweep, tolerance, window, "convolved")
    product_value = correct_rhs(profile, base.value)
    r_dependent_value = incorrect_rhs(profile, r, base.value)
    return MainTheoremReport(
        r=r,
        tolerance=tolerance,
        base=base,
        convolved=convolved,
        product_value=product_value,
        r_dependent_value=r_dependent_value,
        gap_to_product=abs(convolved.value - product_value),
        gap_to_r_dependent=abs(convolved.value - r_dependent_value),
        convolved_sweep=convolved_sweep,
    )


@dataclass(frozen=True)
class ShiftInvarianceReport:
    """Limit estimates of the right-shifted sequences, depths 0..k."""

    r: Real
    tolerance: float
    estimates: tuple[LimitEstimate, ...]  # index j = shift depth
    max_gap: float

    @property
    def consistent(self) -> bool:
        return self.max_gap <= self.tolerance

    def summary_lines(self) -> list[str]:
        lines = [
            f"shift depth {j}: estimate {est.value}"
            for j, est in enumerate(self.estimates)
        ]
        lines.append(
            f"max gap to unshifted estimate: {self.max_gap:.3e} "
            f"({_verdict(self.max_gap, self.tolerance)} shift invariance)"
        )
        return lines


def run_shift_invariance_experiment(
    x: SequenceSpec,
    k: int,
    r: Real,
    N_max: int,
    tolerance: float,
    window: int = 10,
) -> ShiftInvarianceReport:
    """Sweep x and its right shifts up to depth k; all limits should agree."""
    if k < 0:
        raise DomainError(f"shift depth must be >= 0, got {k}")
    base = _converged_estimate(
        binomial_sweep(x, N_max, r), tolerance, window, "base"
    )
    estimates = [base]
    max_gap = 0.0
    for j in range(1, k + 1):
        est = _converged_estimate(
            binomial_sweep(ShiftRight(x, j), N_max, r),
            tolerance,
            window,
            f"depth-{j}",
        )
        estimates.append(est)
        max_gap = max(max_gap, abs(est.value - base.value))
    return ShiftInvarianceReport(r, tolerance, tuple(estimates), max_gap)


@dataclass(frozen=True)
class RIndependenceReport:
    """Limit estimates at two parameters r' < r; they should agree."""

    r: Real
    r_prime: Real
    tolerance: float
    estimate_at_r: LimitEstimate
    estimate_at_r_prime: LimitEstimate
    gap: float

    @property
    def consistent(self) -> bool:
        return self.gap <= self.tolerance

    def summary_lines(self) -> list[str]:
        return [
            f"estimate at r  = {self.r}: {self.estimate_at_r.value}",
            f"estimate at r' = {self.r_prime}: {self.estimate_at_r_prime.value}",
            f"gap {self.gap:.3e} ({_verdict(self.gap, self.tolerance)} "
            "parameter independence)",
        ]


def run_r_independence_experiment(
    x: SequenceSpec,
    r: Real,
    r_prime: Real,
    N_max: int,
    tolerance: float,
    window: int = 10,
) -> RIndependenceReport:
    """Compare limit estimates at r and at a smaller parameter r'."""
    if not r_prime < r:
        raise DomainError(
            f"needs r' < r, got r' = {r_prime}, r = {r}"
        )
    est_r = _converged_estimate(
        binomial_sweep(x, N_max, r), tolerance, window, "r"
    )
    est_r_prime = _converged_estimate(
        binomial_sweep(x, N_max, r_prime), tolerance, window, "r'"
    )
    return RIndependenceReport(
        r=r,
        r_prime=r_prime,
        tolerance=tolerance,
        estimate_at_r=est_r,
        estimate_at_r_prime=est_r_prime,
        gap=abs(est_r.value - est_r_prime.value),
    )


@dataclass(frozen=True)
class WeightedCompositionReport:
    """Binomial sweep of the weighted averages, compared to the base limit."""

    r: Real
    tolerance: float
    base: LimitEstimate
    composed: LimitEstimate
    gap: float
    composed_sweep: list[ComplexScalar] = field(repr=False)

    @property
    def consistent(self) -> bool:
        return self.gap <= self.tolerance

    def summary_lines(self) -> list[str]:
        return [
            f"base sweep limit estimate:     {self.base.value}",
            f"composed sweep limit estimate: {self.composed.value}",
            f"gap {self.gap:.3e} ({_verdict(self.gap, self.tolerance)} "
            "the base limit)",
        ]


def run_weighted_composition_experiment(
    W: WeightFunction,
    x: SequenceSpec,
    r: Real,
    N_max: int,
    tolerance: float,
    window: int = 10,
) -> WeightedCompositionReport:
    """Sweep the sequence y_n = (W-weighted average of x up to n).

    y_0 is the empty sum, i.e. zero; since the 0-th binomial weight decays
    like (1-r)^N this convention cannot move the limit.
    """
    if not x.is_bounded():
        raise DomainError("weighted composition needs a bounded sequence")
    if W.mode is not x.mode:
        raise ModeMismatchError("weight function and sequence disagree in mode")
    base = _converged_estimate(
        binomial_sweep(x, N_max, r), tolerance, window, "base"
    )
    # running numerator of the weighted average; same values as
    # weighted_average(W, x, n) but without re-walking the prefix each n
    xs = x.prefix(N_max)
    values = [ComplexScalar.zero(x.mode)]
    acc = ComplexScalar.zero(x.mode)
    for n in range(1, N_max + 1):
        acc = acc + xs[n] * W.delta(n)
        denom = W.value(n)
        if denom == 0:
            raise DomainError(f"W({n}) = 0, average undefined")
        values.append(acc / denom)
    composed_spec = Tabulated(tuple(values))
    composed_sweep = binomial_sweep(composed_spec, N_max, r)
    composed = _converged_estimate(composed_sweep, tolerance, window, "composed")
    return WeightedCompositionReport(
        r=r,
        tolerance=tolerance,
        base=base,
        composed=composed,
        gap=abs(composed.value - base.value),
        composed_sweep=composed_sweep,
    )
