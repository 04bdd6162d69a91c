from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finmeas import BOOLEANS, RATIONALS, ParseError, format_rational, parse_rational

from .conftest import small_fractions


def test_parse_reduces():
    assert parse_rational("3/6") == Fraction(1, 2)


def test_parse_integer_embedding():
    assert parse_rational("-4") == Fraction(-4)


def test_parse_already_reduced():
    assert parse_rational("7/3") == Fraction(7, 3)


@pytest.mark.parametrize(
    "bad", ["", "1/0", "1/-2", "1.5", "a", "1e3", " 1", "1/", "--2", "+3"]
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(small_fractions())
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_drops_unit_denominator():
    assert format_rational(Fraction(-4, 1)) == "-4"
    assert format_rational(Fraction(7, 3)) == "7/3"


def test_field_arithmetic_examples():
    add = RATIONALS.add
    mul = RATIONALS.mul
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert mul(Fraction(2, 3), Fraction(3, 2)) == Fraction(1)
    assert RATIONALS.sub(Fraction(1), Fraction(1)) == Fraction(0)
    assert RATIONALS.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        RATIONALS.inv(Fraction(0))


@given(small_fractions(), small_fractions(), small_fractions())
def test_rational_semiring_laws(a, b, c):
    sr = RATIONALS
    assert sr.add(sr.add(a, b), c) == sr.add(a, sr.add(b, c))
    assert sr.add(a, b) == sr.add(b, a)
    assert sr.mul(sr.mul(a, b), c) == sr.mul(a, sr.mul(b, c))
    assert sr.mul(a, b) == sr.mul(b, a)
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.mul(sr.zero, a) == sr.zero
    assert sr.add(a, sr.neg(a)) == sr.zero


@given(st.booleans(), st.booleans(), st.booleans())
def test_boolean_rig_laws(a, b, c):
    sr = BOOLEANS
    assert sr.add(sr.add(a, b), c) == sr.add(a, sr.add(b, c))
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.mul(sr.one, a) == a
    assert sr.add(sr.zero, a) == a
    assert sr.mul(sr.zero, a) == sr.zero


def test_boolean_rig_has_no_ring_structure():
    assert not BOOLEANS.is_ring
    assert not BOOLEANS.has_inverses
    with pytest.raises(TypeError):
        BOOLEANS.sub(True, True)


def test_coercion_rejects_floats():
    with pytest.raises(TypeError):
        RATIONALS.coerce(0.5)
    with pytest.raises(TypeError):
        BOOLEANS.coerce(2)


def test_semiring_laws_at_full_case_count():
    # the module contract pins 1000 randomized exact-equality cases
    from finmeas import GenConfig, run_law

    cfg = GenConfig(seed=17, cases=1000)
    for name in ("scalar_field_laws", "boolean_rig_laws"):
        report = run_law(name, cfg)
        assert report.passed, report.counterexample
        assert report.cases_run == 1000
