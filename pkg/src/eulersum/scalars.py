"""Mode-tagged complex scalars and exact binomial coefficients.

Everything downstream computes with :class:`ComplexScalar`, which carries its
value either as a pair of arbitrary-precision rationals (exact mode, no
rounding ever) or as a pair of IEEE-754 doubles (float mode).  Mixing the two
modes inside one computation raises :class:`~eulersum.errors.ModeMismatchError`
instead of silently coercing; identity checks rely on that guarantee.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .errors import DomainError, ModeMismatchError, ParseError

Real = Fraction | float  # a real number in either arithmetic mode


class Mode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def real_mode(value: Real) -> Mode:
    if isinstance(value, Fraction):
        return Mode.EXACT
    if isinstance(value, float):
        return Mode.FLOAT
    raise ModeMismatchError(f"not a mode-tagged real: {value!r}")


class ComplexScalar:
    """A complex number whose parts are both Fractions or both floats."""

    __slots__ = ("re", "im")

    def __init__(self, re: Real, im: Real):
        if type(re) is not type(im):
            raise ModeMismatchError(
                f"real and imaginary parts disagree: {re!r} vs {im!r}"
            )
        if not isinstance(re, (Fraction, float)):
            raise ModeMismatchError(f"unsupported part type: {type(re).__name__}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexScalar is immutable")

    # -- construction ---------------------------------------------------

    @classmethod
    def exact(cls, re, im=0) -> "ComplexScalar":
        """Exact-mode scalar; accepts ints, Fractions, and rational strings."""
        return cls(Fraction(re), Fraction(im))

    @classmethod
    def of_float(cls, re, im=0.0) -> "ComplexScalar":
        return cls(float(re), float(im))

    @classmethod
    def zero(cls, mode: Mode) -> "ComplexScalar":
        return cls.exact(0) if mode is Mode.EXACT else cls.of_float(0.0)

    @classmethod
    def one(cls, mode: Mode) -> "ComplexScalar":
        return cls.exact(1) if mode is Mode.EXACT else cls.of_float(1.0)

    # -- inspection -----------------------------------------------------

    @property
    def mode(self) -> Mode:
        return Mode.EXACT if isinstance(self.re, Fraction) else Mode.FLOAT

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def abs2(self) -> Real:
        """|z|^2 in the scalar's own mode (exact in exact mode)."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def to_float(self) -> "ComplexScalar":
        return ComplexScalar.of_float(float(self.re), float(self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "ComplexScalar":
        if isinstance(other, ComplexScalar):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"cannot mix {self.mode.value} and {other.mode.value} scalars"
                )
            return other
        if isinstance(other, int):
            # ints are exactly representable in both modes
            return (
                ComplexScalar.exact(other)
                if self.mode is Mode.EXACT
                else ComplexScalar.of_float(other)
            )
        if isinstance(other, Fraction):
            if self.mode is not Mode.EXACT:
                raise ModeMismatchError("rational operand in a float computation")
            return ComplexScalar.exact(other)
        if isinstance(other, float):
            if self.mode is not Mode.FLOAT:
                raise ModeMismatchError("float operand in an exact computation")
            return ComplexScalar.of_float(other)
        if isinstance(other, complex):
            if self.mode is not Mode.FLOAT:
                raise ModeMismatchError("complex float operand in an exact computation")
            return ComplexScalar.of_float(other.real, other.imag)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        return ComplexScalar(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float, complex, ComplexScalar)):
            try:
                o = self._coerce(other)
            except ModeMismatchError:
                return False
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexScalar({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# binomial coefficients
# ---------------------------------------------------------------------------


def binomial_coefficient(n: int, k: int) -> int:
    """C(n, k) for nonnegative n and k, with C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial_coefficient needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def generalized_binomial(a: int, j: int) -> int:
    """Falling-factorial binomial a(a-1)...(a-j+1)/j! for any integer a, j >= 0.

    Computed by alternating multiply and exact divide so intermediates stay
    the size of the answer; every prefix product is divisible by i!.
    Agrees with :func:`binomial_coefficient` when a >= 0.
    """
    if j < 0:
        raise DomainError(f"generalized_binomial needs j >= 0, got {j}")
    result = 1
    for i in range(1, j + 1):
        result = result * (a - i + 1) // i
    return result


# ---------------------------------------------------------------------------
# text formats: rationals "p/q", reals, and complex "a+bi"
# ---------------------------------------------------------------------------

_EULER_LITERALS = {"e": math.e, "+e": math.e, "-e": -math.e}


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p", or a plain decimal such as "0.5" into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational literal: {text!r}") from exc


def parse_real(text: str) -> Real:
    """Parse a real literal; rational forms stay exact, bare "e" is float."""
    text = text.strip()
    if text in _EULER_LITERALS:
        return _EULER_LITERALS[text]
    return parse_rational(text)


def _split_complex(text: str) -> tuple[str, str]:
    """Split "a+bi" into (real part, imaginary part without the i)."""
    body = text[:-1]
    # find the sign that separates the parts: last +/- that is not leading
    # and not an exponent sign as in "1e-3"
    for idx in range(len(body) - 1, 0, -1):
        ch = body[idx]
        if ch in "+-" and body[idx - 1] not in "eE/":
            real_part, imag_part = body[:idx], body[idx:]
            break
    else:
        real_part, imag_part = "", body
    if imag_part in ("", "+"):
        imag_part = "1"
    elif imag_part == "-":
        imag_part = "-1"
    return real_part, imag_part


def parse_scalar(text: str) -> ComplexScalar:
    """Parse "a+bi" with rational or decimal parts; locale-independent.

    Results are exact-mode whenever every part is rational; the only
    float-mode literal is Euler's number "e".
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty scalar literal")
    if text.endswith(("i", "I")):
        real_text, imag_text = _split_complex(text)
        re_val = parse_real(real_text) if real_text else Fraction(0)
        im_val = parse_real(imag_text)
        if isinstance(re_val, float) or isinstance(im_val, float):
            return ComplexScalar.of_float(float(re_val), float(im_val))
        return ComplexScalar(re_val, im_val)
    value = parse_real(text)
    if isinstance(value, float):
        return ComplexScalar.of_float(value)
    return ComplexScalar(value, Fraction(0))


def format_real(value: Real) -> str:
    """"p/q" for exact values, 17-significant-digit decimal for floats.

    Both forms round-trip losslessly through the matching parser.
    """
    if isinstance(value, Fraction):
        return str(value)
    return f"{value:.17g}"


def format_scalar(z: ComplexScalar) -> str:
    if z.im == 0:
        return format_real(z.re)
    imag = format_real(z.im)
    if z.re == 0:
        return f"{imag}i"
    sign = "+" if not imag.startswith("-") else ""
    return f"{format_real(z.re)}{sign}{imag}i"
