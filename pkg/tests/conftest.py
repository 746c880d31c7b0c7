"""Shared helpers: seeded random rational scalars and sequence specs."""

from __future__ import annotations

import random
from fractions import Fraction

from eulersum import (
    ComplexScalar,
    Constant,
    FiniteSupport,
    Geometric,
    Periodic,
    Scale,
    SequenceSpec,
    ShiftLeft,
    ShiftRight,
    Sum,
)


def rand_fraction(rng: random.Random, max_num: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_exact_scalar(rng: random.Random, complex_ok: bool = True) -> ComplexScalar:
    re = rand_fraction(rng)
    im = rand_fraction(rng) if complex_ok and rng.random() < 0.4 else Fraction(0)
    return ComplexScalar(re, im)


def _bounded_ratio(rng: random.Random) -> ComplexScalar:
    """A rational complex number with |z| <= 1."""
    while True:
        z = ComplexScalar(
            Fraction(rng.randint(-4, 4), 5),
            Fraction(rng.randint(-4, 4), 5) if rng.random() < 0.4 else Fraction(0),
        )
        if z.abs2() <= 1:
            return z


def rand_exact_sequence(
    rng: random.Random, depth: int = 2, bounded: bool = False
) -> SequenceSpec:
    """A random exact-mode spec built from leaves and combinators."""
    if depth <= 0 or rng.random() < 0.4:
        kind = rng.choice(["const", "geom", "periodic"])
        if kind == "const":
            return Constant(rand_exact_scalar(rng))
        if kind == "geom":
            z = _bounded_ratio(rng) if bounded else rand_exact_scalar(rng)
            return Geometric(z)
        length = rng.randint(1, 4)
        return Periodic(tuple(rand_exact_scalar(rng) for _ in range(length)))
    kind = rng.choice(["scale", "sum", "shiftR", "shiftL"])
    inner = rand_exact_sequence(rng, depth - 1, bounded)
    if kind == "scale":
        factor = rand_exact_scalar(rng)
        if bounded and factor.abs2() > 4:
            factor = ComplexScalar.exact(1)
        return Scale(inner, factor)
    if kind == "sum":
        return Sum(inner, rand_exact_sequence(rng, depth - 1, bounded))
    if kind == "shiftR":
        return ShiftRight(inner, rng.randint(0, 3))
    return ShiftLeft(inner, rng.randint(0, 2))


def rand_finite_profile(rng: random.Random, max_len: int = 5) -> FiniteSupport:
    length = rng.randint(1, max_len)
    return FiniteSupport(tuple(rand_exact_scalar(rng) for _ in range(length)))
