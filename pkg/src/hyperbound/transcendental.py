"""Certified enclosures of log, exp, pi and square roots.

Series are summed in fixed point (integers scaled by ``2**w``) with every
truncation accounted for, which gives a raw interval at working precision
``w``.  The raw interval is then snapped outward to a dyadic grid whose
spacing depends only on the requested precision and on the input, never on
``w``.  Because the raw width is kept below one grid step, enclosures
computed at a higher precision always nest inside those computed at a lower
one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exact import (
    Precision,
    PrecisionLike,
    RealEnclosure,
    as_enclosure,
    as_precision,
    ceil_div,
    floor_log2,
    isqrt_floor,
    require_positive,
)

# |x| beyond this makes 2**round(x/ln 2) impractically large
EXP_ARGUMENT_CAP = 1 << 24


def _atanh_fixed(u: int, v: int, w: int) -> tuple[int, int]:
    """Lower bound ``s`` and slack ``e`` with ``s <= atanh(u/v) * 2**w <= s + e``.

    Requires ``0 < u/v <= 1/2``.
    """
    power = (u << w) // v
    u2, v2 = u * u, v * v
    s = 0
    k = 0
    while power:
        s += power // (2 * k + 1)
        power = power * u2 // v2
        k += 1
    # per-term floor deficit < 3, remaining tail < 2
    return s, 3 * k + 2


def _atan_inv_fixed(q: int, w: int) -> tuple[int, int]:
    """Ball ``(m, e)`` with ``|atan(1/q) * 2**w - m| <= e`` for integer q >= 5."""
    power = (1 << w) // q
    q2 = q * q
    s = 0
    k = 0
    while power:
        term = power // (2 * k + 1)
        s += -term if k & 1 else term
        power //= q2
        k += 1
    return s, 3 * k + 2


def _exp_fixed(m: int, w: int) -> tuple[int, int]:
    """Ball for ``exp(m / 2**w) * 2**w``; requires ``|m| <= 2**(w-1)``."""
    one = 1 << w
    am = abs(m)
    term = one
    s = one
    j = 0
    while True:
        j += 1
        term = term * am // (j << w)
        if not term:
            break
        s += -term if (m < 0 and j & 1) else term
    return s, 2 * j + 6


@lru_cache(maxsize=64)
def _ln2_fixed(w: int) -> tuple[int, int]:
    s, e = _atanh_fixed(1, 3, w)
    return 2 * s, 2 * (s + e)


@lru_cache(maxsize=64)
def _pi_fixed(w: int) -> tuple[int, int]:
    m1, e1 = _atan_inv_fixed(5, w)
    m2, e2 = _atan_inv_fixed(239, w)
    m = 16 * m1 - 4 * m2
    e = 16 * e1 + 4 * e2
    return m - e, m + e


def _snap(lo: int, hi: int, w: int, grid_exp: int) -> tuple[Fraction, Fraction] | None:
    """Round ``[lo, hi] / 2**w`` outward to the ``2**grid_exp`` grid, widened by one step.

    Returns None when the raw width is not below one grid step (caller must
    raise the working precision).
    """
    shift = w + grid_exp
    if shift <= 0 or hi - lo >= (1 << shift):
        return None
    q_lo = (lo >> shift) - 1
    q_hi = -((-hi) >> shift) + 1
    return _scaled(q_lo, grid_exp), _scaled(q_hi, grid_exp)


def _scaled(q: int, e: int) -> Fraction:
    return Fraction(q << e) if e >= 0 else Fraction(q, 1 << -e)


def _guard(bits: int, *extra: int) -> int:
    return bits + 16 + bits.bit_length() + sum(abs(x).bit_length() for x in extra)


def _log_raw(x: Fraction, w: int) -> tuple[int, int]:
    k = floor_log2(x)
    y = x / (Fraction(2) ** k)
    if y > Fraction(4, 3):
        k += 1
        y /= 2
    num = y.numerator - y.denominator
    den = y.numerator + y.denominator
    if num == 0:
        a_lo = a_hi = 0
    elif num > 0:
        s, e = _atanh_fixed(num, den, w)
        a_lo, a_hi = s, s + e
    else:
        s, e = _atanh_fixed(-num, den, w)
        a_lo, a_hi = -s - e, -s
    l_lo, l_hi = _ln2_fixed(w)
    if k >= 0:
        k_lo, k_hi = k * l_lo, k * l_hi
    else:
        k_lo, k_hi = k * l_hi, k * l_lo
    return 2 * a_lo + k_lo, 2 * a_hi + k_hi


def enclose_log(x, p: PrecisionLike = None) -> RealEnclosure:
    """Enclosure of ln(x) for rational x > 0.

    Width is at most ``2**(2 - bits) * max(1, |ln x|)``.
    """
    x = require_positive(Fraction(x), "log argument")
    bits = as_precision(p).bits
    label = f"ln({x})"
    if x == 1:
        return RealEnclosure(0, 0, label)
    k = floor_log2(x)
    w = _guard(bits, k)
    while True:
        lo, hi = _log_raw(x, w)
        snapped = _snap(lo, hi, w, -(bits + 2))
        if snapped is not None:
            return RealEnclosure(*snapped, label)
        w += 32


def enclose_pi(p: PrecisionLike = None) -> RealEnclosure:
    """Enclosure of pi with width at most ``2**(2 - bits)`` (Machin's formula)."""
    bits = as_precision(p).bits
    w = _guard(bits)
    while True:
        lo, hi = _pi_fixed(w)
        snapped = _snap(lo, hi, w, -(bits + 2))
        if snapped is not None:
            return RealEnclosure(*snapped, "pi")
        w += 32


def enclose_exp(x, p: PrecisionLike = None) -> RealEnclosure:
    """Enclosure of e**x for rational x, relative width at most ``2**(2 - bits)``."""
    x = Fraction(x)
    bits = as_precision(p).bits
    label = f"exp({x})"
    if x == 0:
        return RealEnclosure(1, 1, label)
    if abs(x) > EXP_ARGUMENT_CAP:
        raise DomainError(f"exp argument {x} exceeds supported magnitude {EXP_ARGUMENT_CAP}")
    k = round(float(x) / math.log(2))
    w = _guard(bits, k)
    while True:
        scaled = x * (1 << w)
        xs_lo = scaled.numerator // scaled.denominator
        xs_hi = ceil_div(scaled.numerator, scaled.denominator)
        l_lo, l_hi = _ln2_fixed(w)
        if k >= 0:
            kl_lo, kl_hi = k * l_lo, k * l_hi
        else:
            kl_lo, kl_hi = k * l_hi, k * l_lo
        r_lo, r_hi = xs_lo - kl_hi, xs_hi - kl_lo
        s_lo, e_lo = _exp_fixed(r_lo, w)
        s_hi, e_hi = _exp_fixed(r_hi, w)
        snapped = _snap(s_lo - e_lo, s_hi + e_hi, w, -(bits + 3))
        if snapped is not None:
            scale = Fraction(2) ** k
            return RealEnclosure(snapped[0] * scale, snapped[1] * scale, label)
        w += 32


def enclose_sqrt(x, p: PrecisionLike = None) -> RealEnclosure:
    """Enclosure of sqrt(x) for a rational or an enclosure with non-negative lower end.

    Endpoints are the exact floor/ceiling of sqrt on a dyadic grid chosen from
    the magnitude of the argument, so results nest across precisions.  The
    bracket is re-checked by squaring.
    """
    if isinstance(x, RealEnclosure):
        if x.lo < 0:
            raise DomainError(f"square root of enclosure with negative part {x}")
        return RealEnclosure(_sqrt_bounds(x.lo, p)[0], _sqrt_bounds(x.hi, p)[1], f"sqrt({x.label})")
    x = Fraction(x)
    lo, hi = _sqrt_bounds(x, p)
    return RealEnclosure(lo, hi, f"sqrt({x})")


def _sqrt_bounds(x: Fraction, p: PrecisionLike) -> tuple[Fraction, Fraction]:
    if x < 0:
        raise DomainError(f"square root of negative number {x}")
    if x == 0:
        return Fraction(0), Fraction(0)
    bits = as_precision(p).bits
    s = bits + 2 - floor_log2(x) // 2
    root = isqrt_floor(x, s)
    lo = _scaled(root, -s)
    hi = lo if lo * lo == x else _scaled(root + 1, -s)
    if not (lo * lo <= x <= hi * hi):
        raise ArithmeticError(f"square-root bracket check failed for {x}")
    return lo, hi


def log_of(enc, p: PrecisionLike = None) -> RealEnclosure:
    """Enclosure of ln over a positive enclosure (log is increasing)."""
    enc = as_enclosure(enc)
    if enc.lo <= 0:
        raise DomainError(f"log of enclosure reaching non-positive values: [{enc.lo}, {enc.hi}]")
    if enc.is_point:
        return enclose_log(enc.lo, p)
    return RealEnclosure(enclose_log(enc.lo, p).lo, enclose_log(enc.hi, p).hi)


def exp_of(enc, p: PrecisionLike = None) -> RealEnclosure:
    enc = as_enclosure(enc)
    if enc.is_point:
        return enclose_exp(enc.lo, p)
    return RealEnclosure(enclose_exp(enc.lo, p).lo, enclose_exp(enc.hi, p).hi)


def three_halves_power(x, p: PrecisionLike = None) -> RealEnclosure:
    """x**(3/2) as the square root of the cube."""
    return enclose_sqrt(as_enclosure(x) ** 3, p)


def two_pi(p: PrecisionLike = None) -> RealEnclosure:
    return (2 * enclose_pi(p)).labelled("2*pi")


__all__ = [
    "Precision",
    "enclose_exp",
    "enclose_log",
    "enclose_pi",
    "enclose_sqrt",
    "exp_of",
    "log_of",
    "three_halves_power",
    "two_pi",
]
