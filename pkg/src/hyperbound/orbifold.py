"""Euler characteristics of curves and orbifold curves, and the 1/42 minimum.

An orbifold signature ``(g; r; i_1, ..., i_k)`` has compactly supported Euler
characteristic ``2 - 2g - r - sum((i - 1) / i)``.  Writing ``t = 2g - 2 + r``
the absolute value for a hyperbolic signature is ``t + k - sum(1 / i)``,
which is what the search below minimises stratum by stratum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .errors import InvalidSignatureError, NonHyperbolicError
from .exact import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class CurveSignature:
    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise InvalidSignatureError(f"genus and punctures must be >= 0: {self}")

    @property
    def euler(self) -> Fraction:
        return curve_euler(self)

    @property
    def is_hyperbolic(self) -> bool:
        return self.euler < 0

    def as_orbifold(self) -> "OrbifoldSignature":
        return OrbifoldSignature(self.genus, self.punctures, ())

    def to_json(self) -> dict:
        return {"g": self.genus, "r": self.punctures}


@dataclass(frozen=True)
class OrbifoldSignature:
    """Genus, number of punctures and the multiset of cone orders (stored sorted)."""

    genus: int
    punctures: int = 0
    cones: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise InvalidSignatureError(f"genus and punctures must be >= 0, got {self.genus}, {self.punctures}")
        cones = tuple(sorted(int(i) for i in self.cones))
        if any(i < 2 for i in cones):
            raise InvalidSignatureError(f"cone orders must be >= 2, got {list(cones)}")
        object.__setattr__(self, "cones", cones)

    @property
    def t(self) -> int:
        return 2 * self.genus - 2 + self.punctures

    @property
    def euler(self) -> Fraction:
        return orbifold_euler(self)

    @property
    def is_hyperbolic(self) -> bool:
        return self.euler < 0

    def sort_key(self):
        return (self.genus, self.punctures, self.cones)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        return {"g": self.genus, "r": self.punctures, "cones": list(self.cones)}

    @classmethod
    def from_json(cls, data: dict) -> "OrbifoldSignature":
        return cls(int(data["g"]), int(data["r"]), tuple(data.get("cones", ())))

    def __str__(self):
        return f"({self.genus};{self.punctures};{{{','.join(map(str, self.cones))}}})"


def curve_euler(sig: CurveSignature) -> Fraction:
    return Fraction(2 - 2 * sig.genus - sig.punctures)


def orbifold_euler(sig: OrbifoldSignature) -> Fraction:
    return 2 - 2 * sig.genus - sig.punctures - sum((Fraction(i - 1, i) for i in sig.cones), Fraction(0))


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return orbifold_euler(sig) < 0


def etale_cover_euler(base_euler, degree: int) -> Fraction:
    """Euler characteristic of a degree-``degree`` finite etale cover."""
    if degree < 1:
        raise ValueError(f"cover degree must be >= 1, got {degree}")
    return degree * Fraction(base_euler)


def riemann_hurwitz_cover_check(top: CurveSignature, degree: int, base: OrbifoldSignature) -> bool:
    """True iff |e(top)| = degree * |e(base)| with both sides hyperbolic."""
    if degree < 1:
        return False
    e_top = curve_euler(top)
    e_base = orbifold_euler(base)
    if e_top >= 0 or e_base >= 0:
        return False
    return -e_top == degree * -e_base


# -- the exhaustive minimum ------------------------------------------------

# (g, r) pairs realising a given t = 2g - 2 + r, for t <= 1
_GR_FOR_T = {-2: ((0, 0),), -1: ((0, 1),), 0: ((0, 2), (1, 0)), 1: ((0, 3), (1, 1))}


@dataclass(frozen=True)
class StratumRecord:
    """Minimum of |e| over hyperbolic signatures in one stratum (or a tail of strata).

    ``covers`` is ``"exact"`` for the single stratum ``(t, cones)``,
    ``"cones>="`` for every stratum with this ``t`` and at least ``cones``
    cone points, and ``"t>="`` for every stratum with ``t' >= t``.
    ``minimum`` is None when the stratum holds no hyperbolic signature.
    """

    t: int
    cones: int
    covers: str
    minimum: Fraction | None
    witnesses: tuple[OrbifoldSignature, ...]
    method: str
    nodes: int = 0
    max_order: int | None = None

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "cones": self.cones,
            "covers": self.covers,
            "minimum": None if self.minimum is None else format_rational(self.minimum),
            "witnesses": [w.to_json() for w in self.witnesses],
            "method": self.method,
            "nodes": self.nodes,
            "max_order": self.max_order,
        }

    @classmethod
    def from_json(cls, data: dict) -> "StratumRecord":
        return cls(
            t=data["t"],
            cones=data["cones"],
            covers=data["covers"],
            minimum=None if data["minimum"] is None else parse_rational(data["minimum"]),
            witnesses=tuple(OrbifoldSignature.from_json(w) for w in data["witnesses"]),
            method=data["method"],
            nodes=data.get("nodes", 0),
            max_order=data.get("max_order"),
        )


@dataclass(frozen=True)
class MinimumCertificate:
    minimum: Fraction
    witnesses: tuple[OrbifoldSignature, ...]
    search_trace: tuple[StratumRecord, ...] = field(default=())

    def stratum(self, t: int, cones: int) -> StratumRecord:
        for rec in self.search_trace:
            if rec.covers == "exact" and rec.t == t and rec.cones == cones:
                return rec
        raise KeyError((t, cones))

    def to_json(self, trace: bool = True) -> dict:
        out = {
            "minimum": format_rational(self.minimum),
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if trace:
            out["trace"] = [rec.to_json() for rec in self.search_trace]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MinimumCertificate":
        return cls(
            minimum=parse_rational(data["minimum"]),
            witnesses=tuple(OrbifoldSignature.from_json(w) for w in data["witnesses"]),
            search_trace=tuple(StratumRecord.from_json(r) for r in data.get("trace", ())),
        )


def _signatures(t: int, cones: Iterable[int]) -> list[OrbifoldSignature]:
    return [OrbifoldSignature(g, r, tuple(cones)) for g, r in _GR_FOR_T[t]]


class _StratumSearch:
    """Branch and bound over sorted cone tuples for a fixed ``(t, k)``.

    The value ``t + k - sum(1/i)`` increases in every cone order, which gives
    both the pruning bound and a closed form for the last coordinate.
    """

    def __init__(self, t: int, k: int, on_visit: Callable[[int, tuple[int, ...], Fraction], None] | None = None):
        self.t, self.k = t, k
        self.on_visit = on_visit
        self.nodes = 0
        self.max_order = 0
        # seed incumbent: all orders equal to the smallest hyperbolic value
        m = k // (t + k) + 1
        self.best = t + k - Fraction(k, m)
        self.found: set[tuple[int, ...]] = {(m,) * k}

    def _offer(self, cones: tuple[int, ...], value: Fraction):
        self.nodes += 1
        self.max_order = max(self.max_order, cones[-1])
        if self.on_visit is not None:
            self.on_visit(self.t, cones, value)
        if value < self.best:
            self.best = value
            self.found = {cones}
        elif value == self.best:
            self.found.add(cones)

    def run(self):
        self._dfs((), Fraction(self.t + self.k))
        return self.best, sorted(self.found)

    def _dfs(self, prefix: tuple[int, ...], slack: Fraction):
        # slack = value of the signature if every remaining order went to infinity
        if slack <= 0:
            return
        remaining = self.k - len(prefix)
        start = prefix[-1] if prefix else 2
        if remaining == 1:
            # smallest order keeping the signature hyperbolic
            order = max(start, int(1 / slack) + 1)
            self._offer(prefix + (order,), slack - Fraction(1, order))
            return
        m = start
        while True:
            bound = slack - Fraction(remaining, m)
            if bound > self.best:
                break
            self.nodes += 1
            self._dfs(prefix + (m,), slack - Fraction(1, m))
            m += 1


def _stratum_record(t: int, k: int, on_visit=None) -> StratumRecord:
    if t + k <= 0:
        return StratumRecord(t, k, "exact", None, (), "empty")
    if 2 * t + k > 0:
        return StratumRecord(t, k, "exact", t + Fraction(k, 2), tuple(_signatures(t, (2,) * k)), "analytic")
    search = _StratumSearch(t, k, on_visit)
    best, tuples = search.run()
    wits = sorted(s for c in tuples for s in _signatures(t, c))
    return StratumRecord(t, k, "exact", best, tuple(wits), "branch-and-bound", search.nodes, search.max_order)


def search_trace(on_visit=None) -> list[StratumRecord]:
    """Per-stratum minima for t in {-2, -1, 0} plus analytic tails.

    For fixed t every stratum with ``2t + k > 0`` is minimised by all cone
    orders equal to 2, so its minimum ``t + k/2`` grows with k; the strata
    beyond the first such k are summarised in one tail record.  All strata
    with ``t >= 1`` have ``|e| >= t >= 1``, attained at ``t = 1`` with no cones.
    """
    trace = []
    for t in (-2, -1, 0):
        k_last = -2 * t + 1
        for k in range(k_last + 1):
            trace.append(_stratum_record(t, k, on_visit))
        trace.append(StratumRecord(t, k_last + 1, "cones>=", t + Fraction(k_last + 1, 2),
                                   tuple(_signatures(t, (2,) * (k_last + 1))), "analytic"))
    trace.append(StratumRecord(1, 0, "t>=", Fraction(1), tuple(_signatures(1, ())), "analytic"))
    return trace


@lru_cache(maxsize=1)
def _cached_certificate() -> MinimumCertificate:
    return _build_certificate(None)


def _build_certificate(on_visit) -> MinimumCertificate:
    trace = search_trace(on_visit)
    minimum = min(rec.minimum for rec in trace if rec.minimum is not None)
    wits = sorted({w for rec in trace if rec.minimum == minimum for w in rec.witnesses})
    return MinimumCertificate(minimum, tuple(wits), tuple(trace))


def min_abs_euler_hyperbolic(on_visit: Callable[[int, tuple[int, ...], Fraction], None] | None = None) -> MinimumCertificate:
    """Exhaustively certify the minimum of |e| over hyperbolic orbifold signatures.

    ``on_visit(t, cones, value)`` is called for every leaf signature the
    search evaluates; passing it bypasses the cache.
    """
    if on_visit is not None:
        return _build_certificate(on_visit)
    return _cached_certificate()


def require_hyperbolic_euler(e, what: str = "Euler characteristic") -> Fraction:
    e = Fraction(e)
    if e >= 0:
        raise NonHyperbolicError(f"{what} must be negative (hyperbolic), got {e}")
    return e
