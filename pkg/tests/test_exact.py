from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperbound.errors import DomainError
from hyperbound.exact import (
    Ordering,
    Precision,
    RealEnclosure,
    certified_compare,
    certify,
    decimal_approx,
    default_precision,
    floor_log2,
    format_rational,
    parse_rational,
    refine,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9)
enclosures = st.tuples(rationals, rationals).map(lambda t: RealEnclosure(min(t), max(t)))


def test_parse_and_format_examples():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-6/8") == Fraction(-3, 4)
    assert parse_rational("7") == 7
    assert format_rational(Fraction(7)) == "7/1"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    for bad in ("1/0", "x", "1.5", ""):
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_rational(bad)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_decimal_approx_significant_digits():
    assert decimal_approx(Fraction(10**338 * 2**28)) == "2.68435456e+346"
    assert decimal_approx(Fraction(1, 3), 4) == "3.333e-1"


def test_precision_validation_and_env(monkeypatch):
    assert Precision().bits == 128
    assert Precision(64).doubled() == Precision(128)
    with pytest.raises(ValueError):
        Precision(4)
    monkeypatch.setenv("HYPERBOUND_PRECISION", "256")
    assert default_precision() == Precision(256)


def test_enclosure_rejects_empty_interval():
    with pytest.raises(ValueError):
        RealEnclosure(Fraction(2), Fraction(1))


unit = st.fractions(min_value=0, max_value=1, max_denominator=1000)


@given(enclosures, enclosures, unit, unit)
def test_arithmetic_contains_pointwise_results(a, b, s, t):
    x = a.lo + s * a.width
    y = b.lo + t * b.width
    assert (a + b).contains(x + y)
    assert (a - b).contains(x - y)
    assert (a * b).contains(x * y)
    if b.lo > 0 or b.hi < 0:
        assert (a / b).contains(x / y)
    assert (a**2).contains(x**2)
    assert (a**3).contains(x**3)


def test_division_by_enclosure_containing_zero():
    with pytest.raises(ZeroDivisionError):
        RealEnclosure(1, 2) / RealEnclosure(-1, 1)


@given(enclosures)
def test_json_round_trip(a):
    assert RealEnclosure.from_json(a.to_json()) == a


def test_certified_compare_and_certify():
    a, b = RealEnclosure(1, 2), RealEnclosure(3, 4)
    assert certified_compare(a, b) is Ordering.LESS
    assert certified_compare(b, a) is Ordering.GREATER
    assert certified_compare(a, RealEnclosure(2, 3)) is Ordering.UNKNOWN
    assert certify(a, "<=", Fraction(2)) is True
    assert certify(a, "<", Fraction(2)) is None
    assert certify(b, "<=", a) is False
    assert certify(Fraction(1, 2), "=", Fraction(2, 4)) is True
    assert certify(a, "=", a) is None
    with pytest.raises(ValueError):
        certify(a, ">", b)


def test_refine_doubles_until_decided():
    seen = []

    def build(p):
        seen.append(p.bits)
        return p.bits

    value, p = refine(build, lambda bits: bits >= 512, 128)
    assert value == 512 and seen == [128, 256, 512]
    value, p = refine(build, lambda bits: False, 128, cap=256)
    assert p.bits == 256


@given(st.fractions(min_value=Fraction(1, 10**12), max_value=10**12))
def test_floor_log2_exact(x):
    k = floor_log2(x)
    assert Fraction(2) ** k <= x < Fraction(2) ** (k + 1)
    with pytest.raises(DomainError):
        floor_log2(Fraction(0))
