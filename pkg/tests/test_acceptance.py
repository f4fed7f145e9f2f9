"""One test per acceptance criterion; each records a PASS/FAIL line with its runtime."""

import random
import time
from fractions import Fraction

import mpmath
import pytest

from conftest import contains, mpf
from hyperbound.bounds import (
    affine_arithmetic_height_bound,
    main_theorem_bound,
    replay_theorem_certificate,
    verify_proof_inequalities,
)
from hyperbound.dessins import canonicalize, census_euler_check, enumerate_dessins, labeled_count
from hyperbound.orbifold import OrbifoldSignature, min_abs_euler_hyperbolic, orbifold_euler
from hyperbound.shimizu import Consistency, ShimizuConsistencyInput, covolume, load_field, odlyzko_constant_check, shimizu_consistency
from hyperbound.transcendental import enclose_exp, enclose_log, enclose_pi, enclose_sqrt
from test_dessins import naive_census

RESULTS = []


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        verdict = "PASS" if exc_type is None else "FAIL"
        note = "" if exc_type is None else f" ({exc_type.__name__}: {exc})"
        RESULTS.append(f"criterion {self.number}: {verdict} {self.title} [{elapsed:.2f}s]{note}")
        return False


def test_criterion_1_hurwitz_minimum():
    with Criterion(1, "orbifold |e| minimum is 1/42 at (0;0;{2,3,7}); four-cone minimum 1/6"):
        start = time.perf_counter()
        cert = min_abs_euler_hyperbolic(on_visit=lambda *a: None)
        elapsed = time.perf_counter() - start
        assert cert.minimum == Fraction(1, 42)
        assert cert.witnesses == (OrbifoldSignature(0, 0, (2, 3, 7)),)
        four = cert.stratum(-2, 4)
        assert four.minimum == Fraction(1, 6)
        assert four.witnesses == (OrbifoldSignature(0, 0, (2, 2, 2, 3)),)
        assert elapsed < 5


def test_criterion_2_closed_form_exactness():
    with Criterion(2, "closed-form bounds are bit-exact"):
        m = main_theorem_bound(-1, -1, 1)
        assert m == Fraction(10**338 * 2**28) and m.denominator == 1
        assert m.numerator == int("1" + "0" * 338) * 268435456
        a = affine_arithmetic_height_bound(-1)
        assert a == Fraction(10**300 * 2**14) and a.denominator == 1


def test_criterion_3_certificate_dominance():
    with Criterion(3, "certificates verify and are dominated on the (g_X, g_Y, deg_B) grid"):
        start = time.perf_counter()
        count = 0
        for gx in range(2, 21):
            for gy in range(2, 21):
                ex, ey = 2 - 2 * gx, 2 - 2 * gy
                for deg in (1, 5, 50):
                    statement = main_theorem_bound(ex, ey, deg)
                    for case in ("non-arithmetic", "arithmetic-projective"):
                        cert = replay_theorem_certificate(case, gx, gy, ex, ey, deg)
                        assert cert.verified, (case, gx, gy, deg, cert.failing_step)
                        assert cert.final_bound <= statement
                        assert cert.step("2^23 <= 10^8").status is True
                        count += 1
        for gx in range(0, 21):
            for r in (1, 2, 3):
                ex = 2 - 2 * gx - r
                if ex >= 0:
                    continue
                cert = replay_theorem_certificate("arithmetic-affine", gx, None, ex, None, None)
                assert cert.verified and cert.final_bound <= affine_arithmetic_height_bound(ex)
                assert cert.step("2^23 <= 10^8").status is True
                count += 1
        assert count == 19 * 19 * 3 * 2 + 21 * 3 - 2
        assert time.perf_counter() - start < 60


def test_criterion_4_proof_inequalities():
    with Criterion(4, "proof inequalities for g in [0, 50] and discriminant floor to n = 100 certify"):
        proof = verify_proof_inequalities(range(0, 51), 128)
        odl = odlyzko_constant_check(100, 128)
        for report in (proof, odl):
            assert report.count("unknown") == 0
            assert report.passed
            assert report.max_precision <= 256
        labels = {it.label for it in proof.items}
        assert "10^-46 < exp(-70 * 3/2)" in labels
        assert "(2 pi)^2 < 50^(3/2)" in labels
        assert len(odl.items) == 101


def test_criterion_5_dessins_oracle():
    with Criterion(5, "census equals naive oracle for d <= 5; d = 7 with jobs = 4"):
        start = time.perf_counter()
        for d in range(1, 6):
            oracle, labelled = naive_census(d)
            entries = enumerate_dessins(d)
            assert {(e.dessin.sigma0, e.dessin.sigma1) for e in entries} == set(oracle)
            assert all(canonicalize(e.dessin) == e.dessin for e in entries)
            assert all(census_euler_check(e) for e in entries)
            assert labeled_count(entries) == labelled
            assert all(oracle[(e.dessin.sigma0, e.dessin.sigma1)][0] == e.aut for e in entries)
        assert len(enumerate_dessins(1)) == 1 and len(enumerate_dessins(2)) == 3
        assert time.perf_counter() - start < 30
        start = time.perf_counter()
        seven = enumerate_dessins(7, jobs=4)
        assert len(seven) == 4163 and labeled_count(seven) == 20946960
        assert time.perf_counter() - start < 600


def test_criterion_6_shimizu_cross_check():
    with Criterion(6, "covolume of the rationals fixture is 1/6 = |e(0;1;{2,3})|"):
        f = load_field("Q")
        v = covolume(f, 128)
        assert v.width < Fraction(1, 10**20) and v.contains(Fraction(1, 6))
        assert -orbifold_euler(OrbifoldSignature(0, 1, (2, 3))) == Fraction(1, 6)
        assert shimizu_consistency(f, ShimizuConsistencyInput(1, 1, Fraction(1, 6)), 128) is Consistency.CONSISTENT
        assert shimizu_consistency(f, ShimizuConsistencyInput(1, 1, Fraction(1, 5)), 128) is Consistency.INCONSISTENT


def test_criterion_7_enclosure_soundness():
    with Criterion(7, "1000 randomized containment and nesting cases per function"):
        rng = random.Random(7)
        failures = 0
        for _ in range(1000):
            bits = rng.choice((16, 32, 64, 128, 256))
            x = Fraction(rng.randint(1, 10**15), rng.randint(1, 10**9))
            y = Fraction(rng.randint(-500 * 10**6, 500 * 10**6), 10**6)
            lg, ex, sq, pi = enclose_log(x, bits), enclose_exp(y, bits), enclose_sqrt(x, bits), enclose_pi(bits)
            with mpmath.workprec(4 * bits + 800):
                ok = (
                    contains(lg, mpmath.log(mpf(x)))
                    and contains(ex, mpmath.exp(mpf(y)))
                    and contains(sq, mpmath.sqrt(mpf(x)))
                    and contains(pi, mpmath.pi)
                )
            ok = ok and enclose_log(x, 2 * bits).issubset(lg) and enclose_exp(y, 2 * bits).issubset(ex)
            ok = ok and enclose_sqrt(x, 2 * bits).issubset(sq) and enclose_pi(2 * bits).issubset(pi)
            failures += not ok
        assert failures == 0
