"""Explicit height and cover-degree bounds, and replayable certificates for them.

Every closed-form bound is an exact rational. The two proof chains (the
general isogeny bound and the affine arithmetic bound) are rebuilt as
sequences of inequality steps that are each decided either exactly or by
certified enclosure comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .certificate import (
    BoundCertificate,
    Step,
    VerificationReport,
    build_certificate,
    check_item,
)
from .errors import HyperboundError, InvalidSignatureError, NonHyperbolicError
from .exact import (
    MAX_BITS,
    Precision,
    PrecisionLike,
    RealEnclosure,
    as_enclosure,
    as_precision,
)
from .orbifold import min_abs_euler_hyperbolic, require_hyperbolic_euler
from .transcendental import enclose_exp, enclose_log, log_of, three_halves_power, two_pi

REF_HURWITZ = "minimum of |e| over hyperbolic orbifolds is 1/42"
REF_NONARITH = "non-arithmetic isogeny cover degree bound 42|e|"
REF_ARITH_PROJ = "arithmetic projective isogeny cover degree bound"
REF_ARITH_AFFINE = "arithmetic affine Belyi cover bound"
REF_DFS = "effective de Franchis-Severi height inequality"
REF_BELYI_HEIGHT = "Faltings height bounded by 10^9 deg_B^6"
REF_PULLBACK = "Belyi degree of an etale cover: deg_B(C) <= deg(pi) deg_B(X)"
REF_GENUS = "hyperbolicity gives g <= |e|"
REF_LOG = "log x <= x"
REF_ALGEBRA = "exact algebra"
REF_AFFINE_PROP = "affine arithmetic height bound"
REF_THEOREM = "isogeny height bound"
REF_ODLYZKO = "totally real discriminant floor 50^n exp(-70)"


class CaseDiscriminator(enum.Enum):
    NON_ARITHMETIC = "non-arithmetic"
    ARITHMETIC_AFFINE = "arithmetic-affine"
    ARITHMETIC_PROJECTIVE = "arithmetic-projective"

    @classmethod
    def parse(cls, value) -> "CaseDiscriminator":
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown case {value!r}; expected one of {[m.value for m in cls]}")


@dataclass(frozen=True)
class HeightBound:
    value: RealEnclosure
    provenance: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "value", as_enclosure(self.value))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if not self.provenance:
            raise ValueError("a height bound needs at least one provenance entry")

    @classmethod
    def from_belyi_degree(cls, deg_b: int) -> "HeightBound":
        return cls(RealEnclosure.point(belyi_height_bound(deg_b)), (REF_BELYI_HEIGHT,))

    def extended(self, value: RealEnclosure, ref: str) -> "HeightBound":
        return HeightBound(value, self.provenance + (ref,))


@dataclass(frozen=True)
class IsogenyDegreeBounds:
    bound_pi_X: Fraction
    bound_pi_Y: Fraction

    def __post_init__(self):
        for name in ("bound_pi_X", "bound_pi_Y"):
            v = Fraction(getattr(self, name))
            if v < 1 or v.denominator != 1:
                raise ValueError(f"{name} must be a positive integer, got {v}")
            object.__setattr__(self, name, v)


# -- input validation ------------------------------------------------------

def _curve_euler(e, what: str) -> Fraction:
    e = require_hyperbolic_euler(e, what)
    if e.denominator != 1:
        raise InvalidSignatureError(f"{what} of a curve must be an integer, got {e}")
    return e


def _positive_int(n, what: str) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise HyperboundError(f"{what} must be a positive integer, got {n}")
    return int(n)


def _genus(g, what: str, minimum: int = 0) -> int:
    if isinstance(g, bool) or int(g) != g or g < minimum:
        raise InvalidSignatureError(f"{what} must be an integer >= {minimum}, got {g}")
    return int(g)


def _punctures(g: int, e: Fraction, what: str) -> int:
    r = 2 - 2 * g - e
    if r < 0:
        raise InvalidSignatureError(f"{what}: e = {e} is impossible for genus {g} (needs r = {r} >= 0)")
    return int(r)


# -- closed forms ----------------------------------------------------------

def isogeny_degree_bound_nonarithmetic(e_X, e_Y) -> IsogenyDegreeBounds:
    e_X = require_hyperbolic_euler(e_X, "e(X)")
    e_Y = require_hyperbolic_euler(e_Y, "e(Y)")
    return IsogenyDegreeBounds(42 * abs(e_Y), 42 * abs(e_X))


def arithmetic_affine_cover_bounds(g_X: int, e_X) -> tuple[Fraction, Fraction]:
    """(Belyi map degree bound, cover degree bound) for an affine arithmetic curve."""
    g_X = _genus(g_X, "g_X")
    e_X = require_hyperbolic_euler(e_X, "e(X)")
    return Fraction(10**46 * 2 ** (2 * g_X + 3)) * abs(e_X), Fraction(2 ** (2 * g_X + 2))


def arithmetic_projective_isogeny_bounds(g_X: int, g_Y: int) -> IsogenyDegreeBounds:
    g_X = _genus(g_X, "g_X", 2)
    g_Y = _genus(g_Y, "g_Y", 2)
    base = 10**48 * 2 ** (2 * g_X + 2 * g_Y)
    return IsogenyDegreeBounds(Fraction(base * (2 * g_Y - 2)), Fraction(base * (2 * g_X - 2)))


def belyi_height_bound(deg_b: int) -> Fraction:
    deg_b = _positive_int(deg_b, "Belyi degree")
    return Fraction(10**9 * deg_b**6)


def belyi_pullback_bound(deg_b_X: int, deg_pi: int) -> Fraction:
    return Fraction(_positive_int(deg_pi, "cover degree") * _positive_int(deg_b_X, "Belyi degree"))


def affine_arithmetic_height_bound(e_X) -> Fraction:
    a = abs(_curve_euler(e_X, "e(X)"))
    return Fraction(10**300 * 2 ** (14 * int(a))) * a**6


def main_theorem_bound(e_X, e_Y, deg_b_X: int) -> Fraction:
    """10^338 2^(14|e_X| + 14|e_Y|) (|e_X| |e_Y| deg_B)^6."""
    a = abs(_curve_euler(e_X, "e(X)"))
    b = abs(_curve_euler(e_Y, "e(Y)"))
    d = _positive_int(deg_b_X, "Belyi degree")
    return Fraction(10**338 * 2 ** (14 * int(a) + 14 * int(b))) * (a * b * d) ** 6


def dfs_height_bound(h_X: HeightBound, g_X: int, deg_f: int, p: PrecisionLike = None) -> HeightBound:
    """h_X + g_X log(2 pi deg f)."""
    g_X = _genus(g_X, "g_X")
    deg_f = _positive_int(deg_f, "deg f")
    if g_X == 0:
        return h_X.extended(h_X.value, REF_DFS)
    term = g_X * log_of(two_pi(p) * deg_f, p)
    return h_X.extended(h_X.value + term, REF_DFS)


def dfs_height_bound_sharp(h_X: HeightBound, g_X: int, g_Y: int, deg_f: int,
                           p: PrecisionLike = None) -> HeightBound:
    """h_X + (g_X - g_Y)/2 log(2 pi) + g_Y log(deg f)."""
    g_X = _genus(g_X, "g_X")
    g_Y = _genus(g_Y, "g_Y")
    deg_f = _positive_int(deg_f, "deg f")
    if g_Y > g_X:
        raise InvalidSignatureError(f"a finite morphism cannot map genus {g_X} onto genus {g_Y}")
    value = h_X.value
    if g_X > g_Y:
        value = value + Fraction(g_X - g_Y, 2) * log_of(two_pi(p), p)
    if g_Y and deg_f > 1:
        value = value + g_Y * enclose_log(deg_f, p)
    return h_X.extended(value, REF_DFS)


# -- certificate replay ----------------------------------------------------

def _theorem_steps(case: CaseDiscriminator, g_X: int, g_Y: int, e_X: Fraction, e_Y: Fraction,
                   deg_b: int, prec: Precision) -> tuple[dict, list[Step], Fraction]:
    aX, aY = int(-e_X), int(-e_Y)
    G = 2 ** (2 * aX + 2 * aY)
    statement = main_theorem_bound(e_X, e_Y, deg_b)
    steps = [
        Step("g_X <= |e(X)|", Fraction(g_X), "<=", Fraction(aX), REF_GENUS),
        Step("g_Y <= |e(Y)|", Fraction(g_Y), "<=", Fraction(aY), REF_GENUS),
        Step("affine arithmetic bound for Y <= statement bound",
             affine_arithmetic_height_bound(e_Y), "<=", statement, REF_AFFINE_PROP),
    ]
    if case is CaseDiscriminator.NON_ARITHMETIC:
        steps.append(Step("Hurwitz minimum |e| = 1/42", min_abs_euler_hyperbolic().minimum, "=",
                          Fraction(1, 42), REF_HURWITZ))
        degs = isogeny_degree_bound_nonarithmetic(e_X, e_Y)
        ref_deg = REF_NONARITH
        if g_X >= 2 and g_Y >= 2:
            proj = arithmetic_projective_isogeny_bounds(g_X, g_Y)
            steps.append(Step("branch dominance deg pi_X", degs.bound_pi_X, "<=", proj.bound_pi_X, REF_ARITH_PROJ))
            steps.append(Step("branch dominance deg pi_Y", degs.bound_pi_Y, "<=", proj.bound_pi_Y, REF_ARITH_PROJ))
    else:
        degs = arithmetic_projective_isogeny_bounds(g_X, g_Y)
        ref_deg = REF_ARITH_PROJ
    D_X, D_Y = degs.bound_pi_X, degs.bound_pi_Y
    B = belyi_pullback_bound(deg_b, int(D_X))
    B_prime = Fraction(10**48 * G * aY * deg_b)
    tp = two_pi(prec)
    steps += [
        Step("2*pi <= 10", tp, "<=", Fraction(10), "pi enclosure"),
        Step("2^23 <= 10^8", Fraction(2**23), "<=", Fraction(10**8), REF_ALGEBRA),
        Step("deg_B(C) <= deg pi_X bound * deg_B(X)", B, "<=", B_prime, REF_PULLBACK),
    ]
    belyi = belyi_height_bound(int(B))
    a1 = belyi + B * log_of(tp * D_Y, prec)
    a2 = belyi + B * enclose_log(10 * D_Y, prec)
    a3 = belyi + 10 * D_Y * B
    a3b = (10**9 + 10 * D_Y) * B**6
    a4 = Fraction(10**50 * G * aX) * B**6
    a5 = Fraction(10**50 * G * aX) * B_prime**6
    a6 = Fraction(10**338 * 2 ** (14 * aX + 14 * aY) * aX * aY**6 * deg_b**6)
    steps += [
        Step("h(Y) <= 10^9 B^6 + B log(2 pi D_Y) <= 10^9 B^6 + B log(10 D_Y)", a1, "<=", a2,
             f"{REF_DFS}; {REF_BELYI_HEIGHT}; 2*pi <= 10"),
        Step("B log(10 D_Y) <= 10 D_Y B", a2, "<=", a3, REF_LOG),
        Step("10^9 B^6 + 10 D_Y B <= (10^9 + 10 D_Y) B^6", a3, "<=", a3b, REF_ALGEBRA),
    ]
    if case is CaseDiscriminator.ARITHMETIC_PROJECTIVE:
        a4p = Fraction(10**50 * 2 ** (2 * g_X + 2 * g_Y) * (2 * g_X - 2)) * B**6
        steps += [
            Step("(10^9 + 10 D_Y) B^6 <= 10^50 2^(2g_X+2g_Y) (2g_X-2) B^6", a3b, "<=", a4p, REF_ALGEBRA),
            Step("... <= 10^50 2^(2|e(X)|+2|e(Y)|) |e(X)| B^6", a4p, "<=", a4, REF_GENUS),
        ]
    else:
        steps.append(Step("(10^9 + 10 D_Y) B^6 <= 10^50 2^(2|e(X)|+2|e(Y)|) |e(X)| B^6", a3b, "<=", a4,
                          REF_ALGEBRA))
    steps += [
        Step("substitute deg_B(C) bound", a4, "<=", a5, REF_PULLBACK),
        Step("proof bound <= statement bound", a6, "<=", statement, REF_THEOREM),
        Step("10^50 2^(2|e(X)|+2|e(Y)|) |e(X)| B'^6 = 10^338 2^(14|e(X)|+14|e(Y)|) |e(X)| |e(Y)|^6 deg_B^6",
             a5, "=", a6, REF_ALGEBRA),
    ]
    inputs = {
        "case": case.value, "g_X": g_X, "g_Y": g_Y, "e_X": e_X, "e_Y": e_Y, "deg_B_X": deg_b,
        "deg_pi_X_bound": D_X, "deg_pi_Y_bound": D_Y, "deg_pi_ref": ref_deg,
        "deg_B_C_bound": B, "statement_bound": statement,
    }
    return inputs, steps, a6


def _affine_steps(g_X: int, e_X: Fraction, prec: Precision) -> tuple[dict, list[Step], Fraction]:
    a = int(-e_X)
    P1, P2 = arithmetic_affine_cover_bounds(g_X, e_X)
    lg = 2 ** (2 * g_X + 5)
    belyi = belyi_height_bound(int(P1))
    l1 = belyi + P1 * log_of(two_pi(prec) * P2, prec)
    l2 = belyi + P1 * lg
    l3 = Fraction(10**9 * lg) * P1**6
    l4 = Fraction(10**285 * 2 ** (14 * g_X + 23) * a**6)
    l5 = Fraction(10**293 * 2 ** (14 * g_X) * a**6)
    l6 = Fraction(10**293 * 2 ** (14 * a) * a**6)
    statement = affine_arithmetic_height_bound(e_X)
    steps = [
        Step("g_X <= |e(X)|", Fraction(g_X), "<=", Fraction(a), REF_GENUS),
        Step("2^23 <= 10^8", Fraction(2**23), "<=", Fraction(10**8), REF_ALGEBRA),
        Step(f"log(2 pi 2^(2g_X+2)) <= 2^(2g_X+5)", log_of(two_pi(prec) * P2, prec), "<=", Fraction(lg), REF_LOG),
        Step("h(X) <= 10^9 P1^6 + P1 log(2 pi P2) <= 10^9 P1^6 + P1 2^(2g_X+5)", l1, "<=", l2,
             f"{REF_DFS}; {REF_BELYI_HEIGHT}"),
        Step("... <= 10^9 2^(2g_X+5) P1^6", l2, "<=", l3, REF_ALGEBRA),
        Step("... = 10^285 2^(14g_X+23) |e(X)|^6", l3, "=", l4, REF_ALGEBRA),
        Step("2^23 <= 10^8 absorbed", l4, "<=", l5, REF_ALGEBRA),
        Step("2^(14g_X) <= 2^(14|e(X)|)", l5, "<=", l6, REF_GENUS),
        Step("10^293 <= 10^300", l6, "<=", statement, REF_AFFINE_PROP),
    ]
    inputs = {
        "case": CaseDiscriminator.ARITHMETIC_AFFINE.value, "g_X": g_X, "e_X": e_X,
        "belyi_map_degree_bound": P1, "cover_degree_bound": P2, "statement_bound": statement,
    }
    return inputs, steps, statement


def replay_theorem_certificate(case, g_X: int, g_Y: int | None, e_X, e_Y, deg_b_X: int | None,
                               p: PrecisionLike = None, cap: int = MAX_BITS) -> BoundCertificate:
    """Rebuild the proof chain for the given case as a checked certificate.

    Precision starts at ``p`` and doubles while any enclosure step is
    undecided; a certificate that is still undecided at ``cap`` comes back
    unverified with its first failing step exposed.
    """
    case = CaseDiscriminator.parse(case)
    g_X = _genus(g_X, "g_X")
    e_X = _curve_euler(e_X, "e(X)")
    r_X = _punctures(g_X, e_X, "X")
    if case is CaseDiscriminator.ARITHMETIC_AFFINE:
        if r_X < 1:
            raise InvalidSignatureError("the affine arithmetic case needs at least one puncture on X")
        return build_certificate(lambda prec: _affine_steps(g_X, e_X, prec), p, cap)

    g_Y = _genus(g_Y, "g_Y")
    e_Y = _curve_euler(e_Y, "e(Y)")
    r_Y = _punctures(g_Y, e_Y, "Y")
    deg_b = _positive_int(deg_b_X, "deg_B(X)")
    if case is CaseDiscriminator.ARITHMETIC_PROJECTIVE:
        if r_X or r_Y:
            raise InvalidSignatureError("the projective arithmetic case needs compact X and Y (no punctures)")
        if g_X < 2 or g_Y < 2:
            raise InvalidSignatureError("the projective arithmetic cover bound needs genus >= 2 on both curves")
    return build_certificate(lambda prec: _theorem_steps(case, g_X, g_Y, e_X, e_Y, deg_b, prec), p, cap)


# -- standalone inequality suite -------------------------------------------

def _log_absorption(g: int):
    def build(prec: Precision):
        return log_of(two_pi(prec) * 2 ** (2 * g + 2), prec), Fraction(2 ** (2 * g + 5))
    return build


def _monotonicity(prec: Precision):
    return two_pi(prec) ** 2, three_halves_power(50, prec)


def _exp_floor(prec: Precision):
    return Fraction(1, 10**46), enclose_exp(-105, prec)


def odlyzko_term(n: int, prec: Precision) -> RealEnclosure:
    """4 (50^n e^-70)^(3/2) / (2 pi)^(2n)."""
    floor = Fraction(50) ** n * enclose_exp(-70, prec)
    return 4 * three_halves_power(floor, prec) / two_pi(prec) ** (2 * n)


def _odlyzko_item(n: int):
    def build(prec: Precision):
        return Fraction(1, 10**46), odlyzko_term(n, prec)
    return build


def odlyzko_items(ns: Iterable[int], p: PrecisionLike = None, cap: int = MAX_BITS):
    for n in ns:
        if n < 1:
            raise ValueError(f"field degree must be >= 1, got {n}")
        yield check_item(f"10^-46 < 4 (50^{n} e^-70)^(3/2) / (2 pi)^{2 * n}", REF_ODLYZKO, "<",
                         _odlyzko_item(n), p, cap)


def monotonicity_item(p: PrecisionLike = None, cap: int = MAX_BITS):
    return check_item("(2 pi)^2 < 50^(3/2)", REF_ODLYZKO, "<", _monotonicity, p, cap)


def verify_proof_inequalities(g_range: Iterable[int], p: PrecisionLike = None,
                              cap: int = MAX_BITS) -> VerificationReport:
    """Certify the numeric side conditions the proofs rely on.

    For each g: log(2 pi 2^(2g+2)) <= 2^(2g+5). Once: (2 pi)^2 < 50^(3/2) and
    exp(-105) > 10^-46. For each g >= 1 read as a field degree n: the
    discriminant-floor inequality. Each item refines independently.
    """
    p = as_precision(p)
    gs = sorted(set(int(g) for g in g_range))
    if any(g < 0 for g in gs):
        raise ValueError("genus range must be non-negative")
    items = [check_item(f"log(2 pi 2^{2 * g + 2}) <= 2^{2 * g + 5}", REF_LOG, "<=", _log_absorption(g), p, cap)
             for g in gs]
    items.append(monotonicity_item(p, cap))
    items.append(check_item("10^-46 < exp(-70 * 3/2)", REF_ODLYZKO, "<", _exp_floor, p, cap))
    items.extend(odlyzko_items([n for n in gs if n >= 1], p, cap))
    return VerificationReport("proof inequalities", tuple(items))


__all__ = [
    "CaseDiscriminator",
    "HeightBound",
    "IsogenyDegreeBounds",
    "NonHyperbolicError",
    "affine_arithmetic_height_bound",
    "arithmetic_affine_cover_bounds",
    "arithmetic_projective_isogeny_bounds",
    "belyi_height_bound",
    "belyi_pullback_bound",
    "dfs_height_bound",
    "dfs_height_bound_sharp",
    "isogeny_degree_bound_nonarithmetic",
    "main_theorem_bound",
    "odlyzko_term",
    "replay_theorem_certificate",
    "verify_proof_inequalities",
]
