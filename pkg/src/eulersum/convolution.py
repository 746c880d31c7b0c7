"""Convolution summation methods with closed-form weight profiles.

A weight profile is the sequence (lambda_k) of an absolutely summable
convolution transform x -> (sum_{k<=n} lambda_k x_{n-k}).  Every supported
profile has a closed form for each lambda_k and for the series sums, so
convolutions never truncate an infinite tail, and no truncation-error
analysis is needed anywhere downstream.

The module also evaluates two candidate limit formulas for the transformed
sequence: the product formula L * sum(lambda), and an r-dependent variant
circulating in the summability literature whose refutation by a concrete
counterexample is a first-class feature of this package (see
:func:`incorrect_rhs` and the ``counterexample`` CLI command).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import DomainError, ModeMismatchError, ParseError
from .scalars import ComplexScalar, Mode, Real, parse_rational, parse_scalar, real_mode

if TYPE_CHECKING:  # pragma: no cover
    from .sequences import SequenceSpec


class WeightProfile:
    """Shared behavior of the closed-form lambda sequences."""

    mode: Mode

    def weight_at(self, k: int) -> ComplexScalar:
        raise NotImplementedError

    def total_sum(self) -> ComplexScalar:
        raise NotImplementedError

    def abs_sum(self) -> Real:
        raise NotImplementedError

    def _incorrect_factor(self, r: Real) -> ComplexScalar:
        raise NotImplementedError

    def convolve_prefix(self, values: list[ComplexScalar]) -> list[ComplexScalar]:
        """Transformed prefix [y_0..y_N] for y_n = sum_{k<=n} lambda_k x_{n-k}."""
        raise NotImplementedError

    def to_mode(self, mode: Mode) -> "WeightProfile":
        raise NotImplementedError


def _abs_real(value: Real) -> Real:
    return abs(value)


def _scalar_abs(z: ComplexScalar) -> Real:
    """|z| in the profile's own mode when that is exact, else a float.

    Exact complex magnitudes are square roots and generally irrational, so a
    non-real exact entry falls back to a float magnitude.
    """
    if z.is_real():
        return abs(z.re)
    return abs(z)


@dataclass(frozen=True)
class FiniteSupport(WeightProfile):
    """lambda_k given explicitly for k < len(values), zero afterwards."""

    values: tuple[ComplexScalar, ...]

    def __post_init__(self):
        if not self.values:
            raise DomainError("FiniteSupport needs at least one weight")
        modes = {v.mode for v in self.values}
        if len(modes) != 1:
            raise ModeMismatchError("FiniteSupport weights mix arithmetic modes")

    @property
    def mode(self) -> Mode:
        return self.values[0].mode

    def weight_at(self, k: int) -> ComplexScalar:
        if 0 <= k < len(self.values):
            return self.values[k]
        return ComplexScalar.zero(self.mode)

    def total_sum(self) -> ComplexScalar:
        total = ComplexScalar.zero(self.mode)
        for v in self.values:
            total = total + v
        return total

    def abs_sum(self) -> Real:
        parts = [_scalar_abs(v) for v in self.values]
        if any(isinstance(p, float) for p in parts):
            return float(sum(float(p) for p in parts))
        return sum(parts, Fraction(0))

    def _incorrect_factor(self, r: Real) -> ComplexScalar:
        factor = self.values[0]
        r_power = ComplexScalar.one(self.mode)  # r^{n-1} starting at n=1
        for v in self.values[1:]:
            factor = factor + v * r_power
            r_power = r_power * r
        return factor

    def convolve_prefix(self, values: list[ComplexScalar]) -> list[ComplexScalar]:
        out = []
        support = len(self.values)
        for n in range(len(values)):
            acc = ComplexScalar.zero(self.mode)
            for k in range(min(n + 1, support)):
                acc = acc + self.values[k] * values[n - k]
            out.append(acc)
        return out

    def to_mode(self, mode: Mode) -> "FiniteSupport":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return FiniteSupport(tuple(v.to_float() for v in self.values))
        raise DomainError("cannot promote float weights to exact mode")


@dataclass(frozen=True)
class GeometricTail(WeightProfile):
    """lambda_k = c * ratio^k with |ratio| < 1."""

    c: ComplexScalar
    ratio: Real

    def __post_init__(self):
        if real_mode(self.ratio) is not self.c.mode:
            raise ModeMismatchError("GeometricTail scale and ratio disagree in mode")
        if not abs(self.ratio) < 1:
            raise DomainError(f"GeometricTail needs |ratio| < 1, got {self.ratio}")

    @property
    def mode(self) -> Mode:
        return self.c.mode

    def weight_at(self, k: int) -> ComplexScalar:
        return self.c * (self.ratio**k)

    def total_sum(self) -> ComplexScalar:
        return self.c / (1 - self.ratio)

    def abs_sum(self) -> Real:
        c_abs = _scalar_abs(self.c)
        if isinstance(c_abs, float):
            return c_abs / float(1 - abs(self.ratio))
        return c_abs / (1 - abs(self.ratio))

    def _incorrect_factor(self, r: Real) -> ComplexScalar:
        # c + sum_{n>=1} c ratio^n r^{n-1} = c + c ratio / (1 - ratio r)
        return self.c + self.c * self.ratio / (1 - self.ratio * r)

    def convolve_prefix(self, values: list[ComplexScalar]) -> list[ComplexScalar]:
        # y_{n+1} = ratio * y_n + c * x_{n+1}
        out: list[ComplexScalar] = []
        if not values:
            return out
        acc = self.c * values[0]
        out.append(acc)
        for x in values[1:]:
            acc = acc * self.ratio + self.c * x
            out.append(acc)
        return out

    def to_mode(self, mode: Mode) -> "GeometricTail":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return GeometricTail(self.c.to_float(), float(self.ratio))
        raise DomainError("cannot promote float weights to exact mode")


@dataclass(frozen=True)
class RatioTelescoping(WeightProfile):
    """lambda_k = ratio^k - ratio^{k+1} for a ratio in (0, 1).

    All weights are positive and the series telescopes to exactly 1, which is
    what makes this profile the convolution form of a weighted average whose
    tail ratio W(N-1)/W(N) tends to ``ratio``.
    """

    ratio: Real

    def __post_init__(self):
        real_mode(self.ratio)
        if not 0 < self.ratio < 1:
            raise DomainError(f"RatioTelescoping needs ratio in (0,1), got {self.ratio}")

    @property
    def mode(self) -> Mode:
        return real_mode(self.ratio)

    def weight_at(self, k: int) -> ComplexScalar:
        lam = self.ratio**k - self.ratio ** (k + 1)
        return ComplexScalar(lam, type(lam)(0))

    def total_sum(self) -> ComplexScalar:
        return ComplexScalar.one(self.mode)

    def abs_sum(self) -> Real:
        # weights are positive, so the absolute series telescopes too
        return Fraction(1) if self.mode is Mode.EXACT else 1.0

    def _incorrect_factor(self, r: Real) -> ComplexScalar:
        q = self.ratio
        factor = (1 - q) + q * (1 - q) / (1 - q * r)
        return ComplexScalar(factor, type(factor)(0))

    def convolve_prefix(self, values: list[ComplexScalar]) -> list[ComplexScalar]:
        out: list[ComplexScalar] = []
        if not values:
            return out
        scale = 1 - self.ratio
        acc = values[0] * scale
        out.append(acc)
        for x in values[1:]:
            acc = acc * self.ratio + x * scale
            out.append(acc)
        return out

    def to_mode(self, mode: Mode) -> "RatioTelescoping":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return RatioTelescoping(float(self.ratio))
        raise DomainError("cannot promote float weights to exact mode")


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def convolve_at(x: "SequenceSpec", profile: WeightProfile, n: int) -> ComplexScalar:
    """sum_{k=0}^{n} lambda_k x_{n-k}, every term evaluated (no truncation)."""
    if n < 0:
        raise DomainError(f"convolve_at needs n >= 0, got {n}")
    acc = ComplexScalar.zero(profile.mode)
    for k in range(n + 1):
        acc = acc + profile.weight_at(k) * x.at(n - k)
    return acc


def total_sum(profile: WeightProfile) -> ComplexScalar:
    """Closed-form sum of the whole weight series."""
    return profile.total_sum()


def abs_sum(profile: WeightProfile) -> Real:
    """Closed-form sum of |lambda_k|; finite for every supported profile."""
    return profile.abs_sum()


def correct_rhs(profile: WeightProfile, limit: ComplexScalar) -> ComplexScalar:
    """Product formula: limit times the total weight sum."""
    if limit.mode is not profile.mode:
        raise ModeMismatchError("limit and weight profile disagree in mode")
    return limit * profile.total_sum()


def incorrect_rhs(profile: WeightProfile, r: Real, limit: ComplexScalar) -> ComplexScalar:
    """The r-dependent formula L*(lambda_0 + sum_{n>=1} lambda_n r^{n-1}).

    This is the refuted composition value; it is kept (clearly labeled) so
    the counterexample can exhibit the discrepancy against both the correct
    formula and the observed sweep limit.
    """
    if real_mode(r) is not profile.mode or limit.mode is not profile.mode:
        raise ModeMismatchError("r, limit, and weight profile must share a mode")
    if not 0 < r < 1:
        raise DomainError(f"incorrect_rhs needs r in (0,1), got {r}")
    return limit * profile._incorrect_factor(r)


# ---------------------------------------------------------------------------
# mini-language: finite:1/3,1/3,1/3  geomtail:c=1/2,ratio=1/2  ratiotel:L=1/2
# ---------------------------------------------------------------------------


def parse_profile(text: str) -> WeightProfile:
    text = text.strip()
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"weight profile needs a ':' tag: {text!r}")
    head = head.strip().lower()
    if head == "finite":
        values = tuple(parse_scalar(part) for part in rest.split(","))
        return FiniteSupport(values)
    if head == "geomtail":
        fields = _parse_fields(rest, {"c", "ratio"})
        return GeometricTail(parse_scalar(fields["c"]), parse_rational(fields["ratio"]))
    if head == "ratiotel":
        fields = _parse_fields(rest, {"L"})
        return RatioTelescoping(parse_rational(fields["L"]))
    raise ParseError(f"unknown weight profile kind: {head!r}")


def _parse_fields(text: str, expected: set[str]) -> dict[str, str]:
    fields = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {part!r}")
        fields[key.strip()] = value.strip()
    if set(fields) != expected:
        raise ParseError(f"expected fields {sorted(expected)}, got {sorted(fields)}")
    return fields
