"""Symbolic sequence specifications with lazy evaluation.

A sequence is described, not materialized: each spec evaluates x_n on demand,
so long float-mode sweeps never allocate more than one prefix.  The right
shift prepends zeros ((Tx)_n = x_{n-1}, (Tx)_0 = 0) and the left shift drops
leading entries; both are needed because the recurrence checks relate
averages of x_{n+1} to averages of x_n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .convolution import WeightProfile, convolve_at, parse_profile
from .errors import DomainError, ModeMismatchError, ParseError
from .scalars import ComplexScalar, Mode, parse_scalar


class SequenceSpec:
    """Base class; subclasses are immutable and evaluation is pure."""

    def at(self, n: int) -> ComplexScalar:
        """x_n; deterministic for a fixed spec."""
        raise NotImplementedError

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        """[x_0, ..., x_{n_max}]."""
        if n_max < 0:
            raise DomainError(f"prefix needs n_max >= 0, got {n_max}")
        return [self.at(n) for n in range(n_max + 1)]

    @property
    def mode(self) -> Mode:
        raise NotImplementedError

    def is_bounded(self) -> bool:
        """Conservative boundedness certificate used by composition checks."""
        raise NotImplementedError

    def to_mode(self, mode: Mode) -> "SequenceSpec":
        raise NotImplementedError

    def _check_index(self, n: int) -> None:
        if n < 0:
            raise DomainError(f"sequence index must be >= 0, got {n}")


@dataclass(frozen=True)
class Constant(SequenceSpec):
    value: ComplexScalar

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        return self.value

    @property
    def mode(self) -> Mode:
        return self.value.mode

    def is_bounded(self) -> bool:
        return True

    def to_mode(self, mode: Mode) -> "Constant":
        return self if mode is self.mode else Constant(_convert(self.value, mode))


@dataclass(frozen=True)
class Geometric(SequenceSpec):
    """x_n = z^n (with z^0 = 1, including z = 0)."""

    z: ComplexScalar

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        acc = ComplexScalar.one(self.mode)
        for _ in range(n):
            acc = acc * self.z
        return acc

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        if n_max < 0:
            raise DomainError(f"prefix needs n_max >= 0, got {n_max}")
        out = [ComplexScalar.one(self.mode)]
        for _ in range(n_max):
            out.append(out[-1] * self.z)
        return out

    @property
    def mode(self) -> Mode:
        return self.z.mode

    def is_bounded(self) -> bool:
        return self.z.abs2() <= 1

    def to_mode(self, mode: Mode) -> "Geometric":
        return self if mode is self.mode else Geometric(_convert(self.z, mode))


@dataclass(frozen=True)
class Periodic(SequenceSpec):
    values: tuple[ComplexScalar, ...]

    def __post_init__(self):
        if not self.values:
            raise DomainError("Periodic needs at least one value")
        if len({v.mode for v in self.values}) != 1:
            raise ModeMismatchError("Periodic values mix arithmetic modes")

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        return self.values[n % len(self.values)]

    @property
    def mode(self) -> Mode:
        return self.values[0].mode

    def is_bounded(self) -> bool:
        return True

    def to_mode(self, mode: Mode) -> "Periodic":
        if mode is self.mode:
            return self
        return Periodic(tuple(_convert(v, mode) for v in self.values))


@dataclass(frozen=True)
class Tabulated(SequenceSpec):
    """A finite table of values; indexing past the end is an error."""

    values: tuple[ComplexScalar, ...]

    def __post_init__(self):
        if not self.values:
            raise DomainError("Tabulated needs at least one value")
        if len({v.mode for v in self.values}) != 1:
            raise ModeMismatchError("Tabulated values mix arithmetic modes")

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        if n >= len(self.values):
            raise DomainError(
                f"index {n} out of range for table of length {len(self.values)}"
            )
        return self.values[n]

    @property
    def mode(self) -> Mode:
        return self.values[0].mode

    def is_bounded(self) -> bool:
        return True

    def to_mode(self, mode: Mode) -> "Tabulated":
        if mode is self.mode:
            return self
        return Tabulated(tuple(_convert(v, mode) for v in self.values))


def from_file(path: str | Path) -> Tabulated:
    """Load a sequence file: one scalar per line, index = line number from 0."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read sequence file {path}: {exc}") from exc
    values = tuple(parse_scalar(line) for line in lines if line.strip())
    if not values:
        raise ParseError(f"sequence file {path} holds no values")
    return Tabulated(values)


@dataclass(frozen=True)
class ShiftRight(SequenceSpec):
    """k-fold right shift: zero-padded, x_n -> x_{n-k}."""

    inner: SequenceSpec
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"shift needs k >= 0, got {self.k}")

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        if n < self.k:
            return ComplexScalar.zero(self.mode)
        return self.inner.at(n - self.k)

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        if n_max < 0:
            raise DomainError(f"prefix needs n_max >= 0, got {n_max}")
        zeros = [ComplexScalar.zero(self.mode)] * min(self.k, n_max + 1)
        if n_max < self.k:
            return zeros
        return zeros + self.inner.prefix(n_max - self.k)

    @property
    def mode(self) -> Mode:
        return self.inner.mode

    def is_bounded(self) -> bool:
        return self.inner.is_bounded()

    def to_mode(self, mode: Mode) -> "ShiftRight":
        return self if mode is self.mode else ShiftRight(self.inner.to_mode(mode), self.k)


@dataclass(frozen=True)
class ShiftLeft(SequenceSpec):
    """k-fold left shift: x_n -> x_{n+k}."""

    inner: SequenceSpec
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"shift needs k >= 0, got {self.k}")

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        return self.inner.at(n + self.k)

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        if n_max < 0:
            raise DomainError(f"prefix needs n_max >= 0, got {n_max}")
        return self.inner.prefix(n_max + self.k)[self.k :]

    @property
    def mode(self) -> Mode:
        return self.inner.mode

    def is_bounded(self) -> bool:
        return self.inner.is_bounded()

    def to_mode(self, mode: Mode) -> "ShiftLeft":
        return self if mode is self.mode else ShiftLeft(self.inner.to_mode(mode), self.k)


@dataclass(frozen=True)
class Scale(SequenceSpec):
    inner: SequenceSpec
    factor: ComplexScalar

    def __post_init__(self):
        if self.factor.mode is not self.inner.mode:
            raise ModeMismatchError("scale factor and inner sequence disagree in mode")

    def at(self, n: int) -> ComplexScalar:
        return self.inner.at(n) * self.factor

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        return [v * self.factor for v in self.inner.prefix(n_max)]

    @property
    def mode(self) -> Mode:
        return self.inner.mode

    def is_bounded(self) -> bool:
        return self.inner.is_bounded()

    def to_mode(self, mode: Mode) -> "Scale":
        if mode is self.mode:
            return self
        return Scale(self.inner.to_mode(mode), _convert(self.factor, mode))


@dataclass(frozen=True)
class Sum(SequenceSpec):
    left: SequenceSpec
    right: SequenceSpec

    def __post_init__(self):
        if self.left.mode is not self.right.mode:
            raise ModeMismatchError("summed sequences disagree in mode")

    def at(self, n: int) -> ComplexScalar:
        return self.left.at(n) + self.right.at(n)

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        return [
            a + b
            for a, b in zip(self.left.prefix(n_max), self.right.prefix(n_max))
        ]

    @property
    def mode(self) -> Mode:
        return self.left.mode

    def is_bounded(self) -> bool:
        return self.left.is_bounded() and self.right.is_bounded()

    def to_mode(self, mode: Mode) -> "Sum":
        if mode is self.mode:
            return self
        return Sum(self.left.to_mode(mode), self.right.to_mode(mode))


@dataclass(frozen=True)
class Convolved(SequenceSpec):
    """y_n = sum_{k=0}^{n} lambda_k x_{n-k} for a closed-form weight profile."""

    inner: SequenceSpec
    weights: WeightProfile

    def __post_init__(self):
        if self.weights.mode is not self.inner.mode:
            raise ModeMismatchError("weight profile and inner sequence disagree in mode")

    def at(self, n: int) -> ComplexScalar:
        self._check_index(n)
        return convolve_at(self.inner, self.weights, n)

    def prefix(self, n_max: int) -> list[ComplexScalar]:
        if n_max < 0:
            raise DomainError(f"prefix needs n_max >= 0, got {n_max}")
        return self.weights.convolve_prefix(self.inner.prefix(n_max))

    @property
    def mode(self) -> Mode:
        return self.inner.mode

    def is_bounded(self) -> bool:
        # absolute summability of the weights preserves boundedness
        return self.inner.is_bounded()

    def to_mode(self, mode: Mode) -> "Convolved":
        if mode is self.mode:
            return self
        return Convolved(self.inner.to_mode(mode), self.weights.to_mode(mode))


def _convert(value: ComplexScalar, mode: Mode) -> ComplexScalar:
    if value.mode is mode:
        return value
    if mode is Mode.FLOAT:
        return value.to_float()
    raise DomainError("cannot promote float values to exact mode")


# ---------------------------------------------------------------------------
# operations (function spellings of the method surface)
# ---------------------------------------------------------------------------


def evaluate(spec: SequenceSpec, n: int) -> ComplexScalar:
    """x_n for the given spec."""
    return spec.at(n)


def prefix(spec: SequenceSpec, n_max: int) -> list[ComplexScalar]:
    """[x_0, ..., x_{n_max}]; convolved prefixes run in O(N^2) or better."""
    return spec.prefix(n_max)


# ---------------------------------------------------------------------------
# mini-language, e.g.  const:1   geom:-1   periodic:1,-1   shiftR:2(geom:0.5)
#                      scale:1/2(periodic:1,-1)   sum(const:1;geom:-1)
#                      conv(const:1;finite:1/3,1/3,1/3)   file:values.txt
# ---------------------------------------------------------------------------

_HEAD_RE = re.compile(r"^([a-zA-Z]+)\s*(:|\()")


def parse_sequence(text: str) -> SequenceSpec:
    text = text.strip()
    match = _HEAD_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse sequence spec: {text!r}")
    head = match.group(1).lower()

    if match.group(2) == "(":
        body = _paren_body(text, match.end() - 1)
        if head == "sum":
            left, right = _split_top(body)
            return Sum(parse_sequence(left), parse_sequence(right))
        if head == "conv":
            inner, profile = _split_top(body)
            return Convolved(parse_sequence(inner), parse_profile(profile))
        raise ParseError(f"unknown sequence combinator: {head!r}")

    rest = text[match.end() :]
    if head == "const":
        return Constant(parse_scalar(rest))
    if head == "geom":
        return Geometric(parse_scalar(rest))
    if head == "periodic":
        return Periodic(tuple(parse_scalar(p) for p in rest.split(",")))
    if head == "file":
        return from_file(rest.strip())
    if head in ("shiftr", "shiftl", "scale"):
        arg, sep, tail = rest.partition("(")
        if not sep or not tail.endswith(")"):
            raise ParseError(f"{head} needs a parenthesized inner spec: {text!r}")
        inner = parse_sequence(tail[:-1])
        if head == "shiftr":
            return ShiftRight(inner, _parse_shift(arg))
        if head == "shiftl":
            return ShiftLeft(inner, _parse_shift(arg))
        return Scale(inner, parse_scalar(arg))
    raise ParseError(f"unknown sequence kind: {head!r}")


def _parse_shift(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError as exc:
        raise ParseError(f"shift amount must be an integer, got {text!r}") from exc


def _paren_body(text: str, open_idx: int) -> str:
    depth = 0
    for i in range(open_idx, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                if text[i + 1 :].strip():
                    raise ParseError(f"trailing text after spec: {text!r}")
                return text[open_idx + 1 : i]
    raise ParseError(f"unbalanced parentheses: {text!r}")


def _split_top(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ";" and depth == 0:
            return body[:i], body[i + 1 :]
    raise ParseError(f"expected ';' separating two arguments: {body!r}")
