from fractions import Fraction

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=100, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def mpf(q: Fraction) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def contains(enc, ref) -> bool:
    """Exact containment of an mpmath reference value (or interval) in an enclosure."""
    if isinstance(ref, mpmath.ctx_iv.ivmpf):
        return mpf(enc.lo) <= ref.a and ref.b <= mpf(enc.hi)
    return mpf(enc.lo) <= ref <= mpf(enc.hi)


@pytest.fixture
def ref_precision():
    """Run mpmath at 4x the enclosure precision inside the test."""

    def use(bits: int):
        return mpmath.workprec(4 * bits)

    return use


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)
