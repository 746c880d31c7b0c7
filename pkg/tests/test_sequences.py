"""Sequence specs: evaluation, prefixes, shifts, and the mini-language."""

import random
from fractions import Fraction

import pytest

from eulersum import (
    ComplexScalar,
    Constant,
    Convolved,
    DomainError,
    FiniteSupport,
    Geometric,
    GeometricTail,
    Mode,
    ModeMismatchError,
    ParseError,
    Periodic,
    RatioTelescoping,
    Scale,
    ShiftLeft,
    ShiftRight,
    Sum,
    Tabulated,
    evaluate,
    from_file,
    parse_sequence,
    prefix,
)
from conftest import rand_exact_sequence

E1 = ComplexScalar.exact(1)
THIRDS = FiniteSupport(
    (
        ComplexScalar.exact(Fraction(1, 3)),
        ComplexScalar.exact(Fraction(1, 3)),
        ComplexScalar.exact(Fraction(1, 3)),
    )
)


class TestEvaluation:
    def test_constant(self):
        assert evaluate(Constant(E1), 7) == 1

    def test_shift_right_zero_pads(self):
        assert evaluate(ShiftRight(Constant(E1), 2), 1) == 0
        assert evaluate(ShiftRight(Constant(E1), 2), 2) == 1

    def test_convolved_running_weight_sum(self):
        # constant input: value at n is the partial weight sum
        conv = Convolved(Constant(E1), THIRDS)
        assert evaluate(conv, 1) == Fraction(2, 3)

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            evaluate(Constant(E1), -1)


class TestPrefix:
    def test_periodic(self):
        seq = Periodic((E1, ComplexScalar.exact(-1)))
        assert prefix(seq, 3) == [1, -1, 1, -1]

    def test_convolved_thirds(self):
        conv = Convolved(Constant(E1), THIRDS)
        expected = [Fraction(1, 3), Fraction(2, 3), 1, 1, 1]
        assert prefix(conv, 4) == [ComplexScalar.exact(v) for v in expected]

    def test_shift_left_of_geometric(self):
        seq = ShiftLeft(Geometric(ComplexScalar.exact(2)), 1)
        assert prefix(seq, 2) == [2, 4, 8]

    def test_prefix_matches_pointwise_eval(self):
        rng = random.Random(101)
        for _ in range(30):
            seq = rand_exact_sequence(rng, depth=2)
            values = prefix(seq, 12)
            assert values == [evaluate(seq, n) for n in range(13)]

    def test_convolved_prefix_matches_eval_for_each_profile(self):
        # the prefix path uses per-profile recursions; eval sums directly
        rng = random.Random(55)
        inner = rand_exact_sequence(rng, depth=1)
        profiles = [
            THIRDS,
            GeometricTail(ComplexScalar.exact(Fraction(1, 2)), Fraction(1, 2)),
            RatioTelescoping(Fraction(2, 5)),
        ]
        for profile in profiles:
            conv = Convolved(inner, profile)
            assert prefix(conv, 15) == [evaluate(conv, n) for n in range(16)]


class TestShiftRoundTrips:
    def test_left_undoes_right(self):
        rng = random.Random(31)
        for _ in range(20):
            seq = rand_exact_sequence(rng, depth=2)
            for k in (0, 1, 3, 10):
                roundtrip = ShiftLeft(ShiftRight(seq, k), k)
                for n in range(8):
                    assert evaluate(roundtrip, n) == evaluate(seq, n)

    def test_right_after_left_matches_from_one(self):
        rng = random.Random(32)
        for _ in range(20):
            seq = rand_exact_sequence(rng, depth=2)
            roundtrip = ShiftRight(ShiftLeft(seq, 1), 1)
            assert evaluate(roundtrip, 0) == 0
            for n in range(1, 8):
                assert evaluate(roundtrip, n) == evaluate(seq, n)


class TestConstantConvolution:
    def test_equals_partial_weight_sums_exactly(self):
        c = ComplexScalar.exact(Fraction(5, 7))
        for profile in (
            THIRDS,
            GeometricTail(ComplexScalar.exact(Fraction(2, 3)), Fraction(1, 4)),
            RatioTelescoping(Fraction(1, 3)),
        ):
            conv = Convolved(Constant(c), profile)
            partial = ComplexScalar.exact(0)
            for n in range(12):
                partial = partial + profile.weight_at(n)
                assert evaluate(conv, n) == c * partial


class TestTables:
    def test_tabulated_out_of_range(self):
        table = Tabulated((E1, ComplexScalar.exact(2)))
        assert evaluate(table, 1) == 2
        with pytest.raises(DomainError):
            evaluate(table, 2)

    def test_from_file(self, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_text("1\n-2/3\n0.5+1/4i\n")
        seq = from_file(path)
        assert evaluate(seq, 0) == 1
        assert evaluate(seq, 1) == Fraction(-2, 3)
        assert evaluate(seq, 2) == ComplexScalar.exact(Fraction(1, 2), Fraction(1, 4))
        with pytest.raises(DomainError):
            evaluate(seq, 3)

    def test_missing_file(self):
        with pytest.raises(ParseError):
            from_file("/nonexistent/path/values.txt")


class TestModes:
    def test_mode_mixing_rejected(self):
        with pytest.raises(ModeMismatchError):
            Sum(Constant(E1), Constant(ComplexScalar.of_float(1.0)))
        with pytest.raises(ModeMismatchError):
            Scale(Constant(E1), ComplexScalar.of_float(2.0))

    def test_to_mode_float(self):
        seq = Sum(Constant(E1), Geometric(ComplexScalar.exact(-1)))
        floaty = seq.to_mode(Mode.FLOAT)
        assert floaty.mode is Mode.FLOAT
        assert evaluate(floaty, 3) == 0.0

    def test_float_to_exact_rejected(self):
        seq = Constant(ComplexScalar.of_float(1.0))
        with pytest.raises(DomainError):
            seq.to_mode(Mode.EXACT)

    def test_boundedness(self):
        assert Geometric(ComplexScalar.exact(2)).is_bounded() is False
        assert Geometric(ComplexScalar.exact(-1)).is_bounded() is True
        assert Sum(Constant(E1), Geometric(ComplexScalar.exact(2))).is_bounded() is False
        assert Convolved(Periodic((E1,)), THIRDS).is_bounded() is True


class TestMiniLanguage:
    @pytest.mark.parametrize(
        "text,index,expected",
        [
            ("const:1", 5, 1),
            ("geom:-1", 3, -1),
            ("periodic:1,-1", 2, 1),
            ("shiftR:2(geom:0.5)", 1, 0),
            ("shiftR:2(geom:0.5)", 3, Fraction(1, 2)),
            ("shiftL:1(geom:2)", 2, 8),
            ("scale:1/2(const:4)", 0, 2),
            ("sum(const:1;geom:-1)", 0, 2),
            ("sum(const:1;geom:-1)", 1, 0),
            ("conv(const:1;finite:1/3,1/3,1/3)", 1, Fraction(2, 3)),
        ],
    )
    def test_parse_and_eval(self, text, index, expected):
        assert evaluate(parse_sequence(text), index) == expected

    def test_nested(self):
        seq = parse_sequence("sum(conv(const:1;ratiotel:L=1/2);shiftR:1(const:-1))")
        # at 0: conv gives 1/2, shift gives 0
        assert evaluate(seq, 0) == Fraction(1, 2)

    def test_file_spec(self, tmp_path):
        path = tmp_path / "x.txt"
        path.write_text("3\n4\n")
        seq = parse_sequence(f"file:{path}")
        assert evaluate(seq, 1) == 4

    @pytest.mark.parametrize(
        "text",
        [
            "bogus:1",
            "const",
            "shiftR:2",
            "shiftR:x(const:1)",
            "sum(const:1)",
            "conv(const:1;finite:1/3",
            "sum(const:1;const:2)x",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_sequence(text)
