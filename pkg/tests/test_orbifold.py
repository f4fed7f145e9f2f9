from fractions import Fraction
from itertools import combinations_with_replacement
from math import lcm

import pytest
from hypothesis import given, strategies as st

from hyperbound.errors import InvalidSignatureError, NonHyperbolicError
from hyperbound.orbifold import (
    CurveSignature,
    MinimumCertificate,
    OrbifoldSignature,
    curve_euler,
    etale_cover_euler,
    is_hyperbolic,
    min_abs_euler_hyperbolic,
    orbifold_euler,
    require_hyperbolic_euler,
    riemann_hurwitz_cover_check,
)


def test_euler_examples():
    assert orbifold_euler(OrbifoldSignature(0, 0, (2, 3, 7))) == Fraction(-1, 42)
    assert orbifold_euler(OrbifoldSignature(0, 1, (2, 3))) == Fraction(-1, 6)
    assert orbifold_euler(OrbifoldSignature(0, 0, (2, 2, 2, 3))) == Fraction(-1, 6)
    assert orbifold_euler(OrbifoldSignature(0, 0, (2, 3, 6))) == 0
    assert curve_euler(CurveSignature(2)) == -2
    assert curve_euler(CurveSignature(0, 3)) == -1
    assert not is_hyperbolic(OrbifoldSignature(1, 0, ()))
    assert str(OrbifoldSignature(0, 0, (7, 2, 3))) == "(0;0;{2,3,7})"


def test_invalid_signatures():
    with pytest.raises(InvalidSignatureError):
        OrbifoldSignature(0, 0, (1, 3))
    with pytest.raises(InvalidSignatureError):
        OrbifoldSignature(-1, 0, ())
    with pytest.raises(InvalidSignatureError):
        CurveSignature(0, -2)
    with pytest.raises(NonHyperbolicError):
        require_hyperbolic_euler(0)


@given(st.integers(0, 4), st.integers(0, 4), st.lists(st.integers(2, 50), max_size=6))
def test_euler_formula_matches_definition(g, r, cones):
    sig = OrbifoldSignature(g, r, tuple(cones))
    direct = 2 - 2 * g - r - sum(Fraction(i - 1, i) for i in cones)
    assert orbifold_euler(sig) == direct
    if sig.is_hyperbolic:
        assert -orbifold_euler(sig) >= Fraction(1, 42)


@given(st.integers(-50, -1), st.integers(1, 100))
def test_etale_cover_scales_euler(e, d):
    assert etale_cover_euler(e, d) == d * e


def test_riemann_hurwitz_regression_pair():
    klein = OrbifoldSignature(0, 0, (2, 3, 7))
    assert riemann_hurwitz_cover_check(CurveSignature(3), 168, klein)
    assert not riemann_hurwitz_cover_check(CurveSignature(3), 84, klein)
    assert not riemann_hurwitz_cover_check(CurveSignature(1), 1, OrbifoldSignature(1))


def test_certified_minimum_and_unique_witness():
    cert = min_abs_euler_hyperbolic()
    assert cert.minimum == Fraction(1, 42)
    assert cert.witnesses == (OrbifoldSignature(0, 0, (2, 3, 7)),)


def test_trace_records_small_strata():
    cert = min_abs_euler_hyperbolic()
    four = cert.stratum(-2, 4)
    assert four.minimum == Fraction(1, 6)
    assert four.witnesses == (OrbifoldSignature(0, 0, (2, 2, 2, 3)),)
    assert cert.stratum(-1, 2).minimum == Fraction(1, 6)
    assert cert.stratum(-1, 2).witnesses == (OrbifoldSignature(0, 1, (2, 3)),)
    assert cert.stratum(-2, 2).minimum is None
    covers = {(r.t, r.covers) for r in cert.search_trace}
    assert (-2, "cones>=") in covers and (-1, "cones>=") in covers and (0, "cones>=") in covers
    assert (1, "t>=") in covers


def test_trace_json_round_trip():
    cert = min_abs_euler_hyperbolic()
    back = MinimumCertificate.from_json(cert.to_json())
    assert back == cert


def test_visited_leaves_never_beat_the_minimum():
    values = []
    cert = min_abs_euler_hyperbolic(on_visit=lambda t, cones, v: values.append((t, cones, v)))
    assert values
    assert min(v for _, _, v in values) == cert.minimum
    assert all(v > 0 for _, _, v in values)


def _brute_min(g_max, r_max, k_max, order_max):
    """Exhaustive minimum of |e| over a finite box, in integers scaled by lcm(2..order_max)."""
    L = lcm(*range(2, order_max + 1))
    best, wit = None, []
    for k in range(k_max + 1):
        for cones in combinations_with_replacement(range(2, order_max + 1), k):
            cone_part = sum(L - L // i for i in cones)
            for g in range(g_max + 1):
                for r in range(r_max + 1):
                    e = (2 - 2 * g - r) * L - cone_part
                    if e >= 0:
                        continue
                    if best is None or -e < best:
                        best, wit = -e, [(g, r, cones)]
                    elif -e == best:
                        wit.append((g, r, cones))
    return Fraction(best, L), wit


def test_brute_force_box_agrees_with_search():
    best, wit = _brute_min(2, 3, 4, 43)
    assert best == Fraction(1, 42)
    assert wit == [(0, 0, (2, 3, 7))]


def test_four_cone_stratum_brute_force():
    quads = list(combinations_with_replacement(range(2, 13), 4))
    hyper = [(2 - sum(Fraction(1, i) for i in c), c) for c in quads]
    assert [c for v, c in hyper if v <= 0] == [(2, 2, 2, 2)]
    hyper = [(v, c) for v, c in hyper if v > 0]
    best = min(v for v, _ in hyper)
    assert best == Fraction(1, 6)
    assert [c for v, c in hyper if v == best] == [(2, 2, 2, 3)]
