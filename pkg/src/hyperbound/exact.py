"""Exact rationals, precision handles and certified real enclosures.

All rational quantities are :class:`fractions.Fraction` values (aliased as
``ExactRational``); arithmetic on them never rounds.  A
:class:`RealEnclosure` is a closed interval ``[lo, hi]`` with rational
endpoints that is guaranteed to contain some real target.  Interval
arithmetic between enclosures is carried out exactly on the endpoints, so it
is trivially sound; only the transcendental producers in
:mod:`hyperbound.transcendental` round, and they round outward to dyadic
grids.
"""

from __future__ import annotations

import enum
import math
import os
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, TypeVar, Union

from .errors import DomainError

ExactRational = Fraction

MIN_BITS = 8
DEFAULT_BITS = 128
MAX_BITS = 4096

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` (or a bare integer) into a reduced Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction | int) -> str:
    """Canonical ``"p/q"`` rendering; integers keep an explicit ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decimal_approx(q: Fraction | int, digits: int = 9) -> str:
    """Scientific-notation approximation of ``q`` to ``digits`` significant digits."""
    q = Fraction(q)
    if q == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits + 5
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return format(value, f".{digits - 1}e")


@dataclass(frozen=True, order=True)
class Precision:
    """Working precision in bits for dyadic endpoint rounding."""

    bits: int = DEFAULT_BITS

    def __post_init__(self):
        if not isinstance(self.bits, int) or self.bits < MIN_BITS:
            raise ValueError(f"precision must be an integer >= {MIN_BITS} bits, got {self.bits!r}")

    def doubled(self) -> "Precision":
        return Precision(self.bits * 2)


PrecisionLike = Union[Precision, int, None]


def as_precision(p: PrecisionLike) -> Precision:
    if p is None:
        return default_precision()
    if isinstance(p, Precision):
        return p
    return Precision(int(p))


def default_precision() -> Precision:
    """Default precision, overridable through ``HYPERBOUND_PRECISION``."""
    raw = os.environ.get("HYPERBOUND_PRECISION")
    if raw:
        return Precision(int(raw))
    return Precision(DEFAULT_BITS)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class RealEnclosure:
    """Certified interval ``[lo, hi]`` containing a real target.

    Arithmetic with other enclosures or exact rationals is exact on the
    endpoints.  ``label`` describes the enclosed real and is not part of
    equality.
    """

    lo: Fraction
    hi: Fraction
    label: str = ""

    def __post_init__(self):
        lo = _as_fraction(self.lo)
        hi = _as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty enclosure: lo={lo} > hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __eq__(self, other):
        if isinstance(other, RealEnclosure):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    @classmethod
    def point(cls, x, label: str = "") -> "RealEnclosure":
        x = _as_fraction(x)
        return cls(x, x, label)

    def labelled(self, label: str) -> "RealEnclosure":
        return RealEnclosure(self.lo, self.hi, label)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, RealEnclosure):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, float):
            x = Fraction(x)
        return self.lo <= x <= self.hi

    def issubset(self, other: "RealEnclosure") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other) -> bool:
        other = _coerce(other)
        return not (self.hi < other.lo or other.hi < self.lo)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return RealEnclosure(-self.hi, -self.lo)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return RealEnclosure(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return RealEnclosure(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_point and self.is_point:
            v = self.lo * other.lo
            return RealEnclosure(v, v)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RealEnclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "RealEnclosure":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"enclosure [{self.lo}, {self.hi}] contains zero")
        return RealEnclosure(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self ** (-n)).reciprocal()
        if n == 0:
            return RealEnclosure(1, 1)
        a, b = self.lo ** n, self.hi ** n
        if n % 2 == 0:
            if self.lo <= 0 <= self.hi:
                return RealEnclosure(0, max(a, b))
            return RealEnclosure(min(a, b), max(a, b))
        return RealEnclosure(a, b)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}

    @classmethod
    def from_json(cls, data: dict, label: str = "") -> "RealEnclosure":
        return cls(parse_rational(data["lo"]), parse_rational(data["hi"]), label)

    def approx(self, digits: int = 20) -> str:
        return decimal_approx(self.mid, digits) if self.mid != 0 else "0"

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"RealEnclosure(~{self.approx(12)} ± {float(self.width) / 2:.3g}{tag})"


def _coerce(x):
    if isinstance(x, RealEnclosure):
        return x
    if isinstance(x, (int, Fraction)):
        return RealEnclosure(x, x)
    return NotImplemented


def as_enclosure(x) -> RealEnclosure:
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot treat {type(x).__name__} as a real enclosure")
    return out


class Ordering(enum.Enum):
    LESS = "LESS"
    GREATER = "GREATER"
    UNKNOWN = "UNKNOWN"


def certified_compare(a, b) -> Ordering:
    """LESS iff a.hi < b.lo, GREATER iff a.lo > b.hi, UNKNOWN on overlap."""
    a, b = as_enclosure(a), as_enclosure(b)
    if a.hi < b.lo:
        return Ordering.LESS
    if a.lo > b.hi:
        return Ordering.GREATER
    return Ordering.UNKNOWN


RELATIONS = ("<=", "<", "=")


def certify(lhs, rel: str, rhs) -> bool | None:
    """Decide ``lhs rel rhs``.

    Returns True when the relation is certified, False when it is certifiably
    violated and None when the enclosures are too wide to decide.
    """
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {rel!r}")
    a, b = as_enclosure(lhs), as_enclosure(rhs)
    if rel == "<=":
        if a.hi <= b.lo:
            return True
        if a.lo > b.hi:
            return False
        return None
    if rel == "<":
        if a.hi < b.lo:
            return True
        if a.lo >= b.hi:
            return False
        return None
    if a.is_point and b.is_point:
        return a.lo == b.lo
    if a.hi < b.lo or b.hi < a.lo:
        return False
    return None


T = TypeVar("T")


def refine(build: Callable[[Precision], T], decided: Callable[[T], bool],
           start: PrecisionLike = None, cap: int = MAX_BITS) -> tuple[T, Precision]:
    """Evaluate ``build`` at doubling precisions until ``decided`` holds or ``cap`` is hit.

    Returns the last result together with the precision it was computed at.
    """
    p = as_precision(start)
    while True:
        result = build(p)
        if decided(result) or p.bits * 2 > cap:
            return result, p
        p = p.doubled()


def require_positive(x: Fraction, what: str = "argument") -> Fraction:
    x = _as_fraction(x)
    if x <= 0:
        raise DomainError(f"{what} must be positive, got {x}")
    return x


def floor_log2(x: Fraction) -> int:
    """Exact floor(log2(x)) for a positive rational."""
    x = require_positive(x)
    k = x.numerator.bit_length() - x.denominator.bit_length()
    if Fraction(2) ** k > x:
        k -= 1
    elif Fraction(2) ** (k + 1) <= x:
        k += 1
    return k


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def isqrt_floor(x: Fraction, scale_bits: int) -> int:
    """floor(sqrt(x) * 2**scale_bits) for rational x >= 0, computed exactly."""
    if x < 0:
        raise DomainError(f"square root of negative number {x}")
    if scale_bits >= 0:
        n = (x.numerator << (2 * scale_bits)) // x.denominator
    else:
        n = x.numerator // (x.denominator << (-2 * scale_bits))
    return math.isqrt(n)
