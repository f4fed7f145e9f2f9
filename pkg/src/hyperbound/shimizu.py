"""Covolumes of arithmetic Fuchsian groups from number-field data.

Field invariants (degree, discriminant, zeta_F(2) or the prime-ideal norms
needed to bound it, ramified norms of the quaternion algebra) are inputs;
nothing here computes them from a field presentation.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .bounds import monotonicity_item, odlyzko_items
from .certificate import VerificationReport
from .errors import HyperboundError, MissingZetaError
from .exact import (
    MAX_BITS,
    PrecisionLike,
    RealEnclosure,
    as_precision,
    parse_rational,
    refine,
)
from .transcendental import enclose_exp, three_halves_power, two_pi

BUILTIN_FIELDS = {"Q": "field_rationals.json", "qsqrt5": "field_qsqrt5.json"}


@dataclass(frozen=True)
class FieldData:
    degree_n: int
    abs_discriminant: int
    zeta2: RealEnclosure | None = None
    prime_norms: tuple[int, ...] = ()
    B: int | None = None
    ramified_norms: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prime_norms", tuple(int(q) for q in self.prime_norms))
        object.__setattr__(self, "ramified_norms", tuple(int(q) for q in self.ramified_norms))
        if self.degree_n < 1:
            raise HyperboundError(f"field degree must be >= 1, got {self.degree_n}")
        if self.abs_discriminant < 1:
            raise HyperboundError(f"|d_F| must be >= 1, got {self.abs_discriminant}")
        if self.degree_n >= 2 and self.abs_discriminant < 2:
            raise HyperboundError("a number field of degree >= 2 has |d_F| >= 2")
        if self.zeta2 is not None and self.zeta2.lo < 1:
            raise HyperboundError(f"zeta_F(2) >= 1, but the enclosure starts at {self.zeta2.lo}")
        if any(q < 2 for q in self.prime_norms + self.ramified_norms):
            raise HyperboundError("prime ideal norms must be >= 2")

    def with_zeta2(self, p: PrecisionLike = None) -> "FieldData":
        """Fill in zeta2 from the tabulated prime norms when it is missing."""
        if self.zeta2 is not None:
            return self
        if not self.prime_norms or self.B is None:
            raise MissingZetaError(
                "field data has no zeta_F(2) enclosure and no prime-norm table; "
                "supply one or build it with zeta2_enclosure(n, prime_norms, B)"
            )
        return replace(self, zeta2=zeta2_enclosure(self.degree_n, self.prime_norms, self.B, p))

    def to_json(self) -> dict:
        return {
            "n": self.degree_n,
            "dF": self.abs_discriminant,
            "zeta2": None if self.zeta2 is None else self.zeta2.to_json(),
            "prime_norms": list(self.prime_norms),
            "B": self.B,
            "ramified": list(self.ramified_norms),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FieldData":
        z = data.get("zeta2")
        return cls(
            int(data["n"]),
            int(data["dF"]),
            None if z is None else RealEnclosure.from_json(z),
            tuple(data.get("prime_norms", ())),
            None if data.get("B") is None else int(data["B"]),
            tuple(data.get("ramified", ())),
        )


def load_field(source: str | Path) -> FieldData:
    """Read field data from a JSON file, or a bundled field by name (``Q``, ``qsqrt5``)."""
    name = str(source)
    if name in BUILTIN_FIELDS:
        text = resources.files("hyperbound").joinpath("data", BUILTIN_FIELDS[name]).read_text(encoding="utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    return FieldData.from_json(json.loads(text))


@dataclass(frozen=True)
class ShimizuConsistencyInput:
    d_1: int
    d_2: int
    abs_e_X: Fraction

    def __post_init__(self):
        if self.d_1 < 1 or self.d_2 < 1:
            raise HyperboundError("subgroup indices d_1, d_2 must be >= 1")
        e = parse_rational(self.abs_e_X)
        if e <= 0:
            raise HyperboundError(f"|e(X)| must be positive, got {e}")
        object.__setattr__(self, "abs_e_X", e)


def zeta2_tail_exponent(n: int, B: int) -> Fraction:
    return Fraction(n * (2 * B + 1), 2 * B * (B + 1))


def zeta2_enclosure(n: int, prime_norms: Sequence[int], B: int, p: PrecisionLike = None) -> RealEnclosure:
    """[T, T exp(n(2B+1)/(2B(B+1)))] with T the Euler product over ``prime_norms``.

    ``prime_norms`` must list every prime ideal of norm <= B, with
    multiplicity. The missing factors are (1 - N^-2)^-1 over ideals of norm
    N > B, and -log(1 - N^-2) <= 1/(N^2 - 1). Each prime power q is the norm
    of at most n prime ideals, so the log of the tail is at most
    n * sum_{m > B} 1/(m^2 - 1), which telescopes to n(2B+1)/(2B(B+1)).
    This is below 2n/B.
    """
    if B < 2:
        raise HyperboundError(f"cutoff B must be >= 2, got {B}")
    if not prime_norms:
        raise HyperboundError("empty prime-norm list: zeta_F(2) cannot be bracketed")
    if n < 1:
        raise HyperboundError(f"field degree must be >= 1, got {n}")
    T = Fraction(1)
    for q in prime_norms:
        if q < 2:
            raise HyperboundError(f"prime ideal norm must be >= 2, got {q}")
        q2 = Fraction(q) ** 2
        T *= q2 / (q2 - 1)
    tail = enclose_exp(zeta2_tail_exponent(n, B), p)
    return RealEnclosure(T, T * tail.hi, "zeta_F(2)")


def covolume(f: FieldData, p: PrecisionLike = None) -> RealEnclosure:
    """4 d_F^(3/2) zeta_F(2) prod(N(p) - 1) / (2 pi)^(2n)."""
    if f.zeta2 is None:
        raise MissingZetaError(
            "field data has no zeta_F(2) enclosure; compute one with zeta2_enclosure() "
            "or FieldData.with_zeta2()"
        )
    ram = 1
    for q in f.ramified_norms:
        ram *= q - 1
    disc = three_halves_power(f.abs_discriminant, p)
    return (4 * ram) * disc * f.zeta2 / two_pi(p) ** (2 * f.degree_n)


def odlyzko_floor(n: int, p: PrecisionLike = None) -> RealEnclosure:
    """50^n e^-70, the discriminant floor for totally real fields of degree n."""
    if n < 1:
        raise HyperboundError(f"field degree must be >= 1, got {n}")
    return Fraction(50) ** n * enclose_exp(-70, p)


def odlyzko_constant_check(n_max: int, p: PrecisionLike = None, cap: int = MAX_BITS) -> VerificationReport:
    """The monotonicity factor (2 pi)^2 < 50^(3/2), then every n in 1..n_max explicitly."""
    if n_max < 1:
        raise HyperboundError(f"n_max must be >= 1, got {n_max}")
    items = [monotonicity_item(p, cap)]
    items.extend(odlyzko_items(range(1, n_max + 1), p, cap))
    return VerificationReport("discriminant floor constant", tuple(items))


class Consistency(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    UNKNOWN = "unknown"


DEFAULT_RESOLUTION = Fraction(1, 2**32)


def _judge(lhs: RealEnclosure, rhs: Fraction, resolution: Fraction) -> Consistency:
    if not lhs.contains(rhs):
        return Consistency.INCONSISTENT
    if lhs.width <= resolution * rhs:
        return Consistency.CONSISTENT
    return Consistency.UNKNOWN


def shimizu_consistency(f: FieldData, c: ShimizuConsistencyInput, p: PrecisionLike = None,
                        resolution: Fraction = DEFAULT_RESOLUTION, cap: int = MAX_BITS) -> Consistency:
    """Compare d_2 * covolume(f) with the exact d_1 |e(X)|.

    INCONSISTENT when the enclosure excludes the exact value. CONSISTENT when
    it contains it and its relative width is at most ``resolution``.
    Otherwise precision is raised; a still-wide enclosure (typically from a
    loose zeta_F(2)) gives UNKNOWN.
    """
    rhs = c.d_1 * c.abs_e_X

    def build(prec):
        return _judge(c.d_2 * covolume(f, prec), rhs, resolution)

    verdict, _ = refine(build, lambda v: v is not Consistency.UNKNOWN, as_precision(p), cap)
    return verdict


__all__ = [
    "Consistency",
    "FieldData",
    "ShimizuConsistencyInput",
    "covolume",
    "load_field",
    "odlyzko_constant_check",
    "odlyzko_floor",
    "shimizu_consistency",
    "zeta2_enclosure",
]
