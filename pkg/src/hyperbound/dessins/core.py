"""Dessins as permutation pairs, their genus, passport and canonical form.

A degree-d dessin is a pair ``(sigma0, sigma1)`` of permutations of
``{1..d}`` stored as 1-based image tuples; ``sigma_inf`` is always derived as
``(sigma0 o sigma1)^-1`` where ``(sigma0 o sigma1)(i) = sigma0(sigma1(i))``.
Two dessins are isomorphic iff the pairs are simultaneously conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from ..errors import NonTransitiveError
from ._backend import get_kernels


def _check_perm(images: Sequence[int], d: int, name: str) -> tuple[int, ...]:
    images = tuple(int(x) for x in images)
    if len(images) != d or sorted(images) != list(range(1, d + 1)):
        raise ValueError(f"{name} is not a permutation of 1..{d}: {list(images)}")
    return images


def _zero(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - 1 for x in p)


def _one(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + 1 for x in p)


@dataclass(frozen=True, order=True)
class Dessin:
    degree: int
    sigma0: tuple[int, ...]
    sigma1: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        object.__setattr__(self, "sigma0", _check_perm(self.sigma0, self.degree, "sigma0"))
        object.__setattr__(self, "sigma1", _check_perm(self.sigma1, self.degree, "sigma1"))

    @classmethod
    def from_zero_based(cls, s0: Sequence[int], s1: Sequence[int]) -> "Dessin":
        return cls(len(s0), _one(s0), _one(s1))

    @property
    def sigma_inf(self) -> tuple[int, ...]:
        k = get_kernels()
        return _one(k.inverse(k.compose(_zero(self.sigma0), _zero(self.sigma1))))

    def zero_based(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return _zero(self.sigma0), _zero(self.sigma1)

    def conjugated(self, tau: Sequence[int]) -> "Dessin":
        """Relabel along ``tau`` (1-based images): returns ``tau sigma tau^-1`` for both."""
        k = get_kernels()
        t = _zero(_check_perm(tau, self.degree, "tau"))
        a, b = self.zero_based()
        return Dessin.from_zero_based(k.conjugate(t, a), k.conjugate(t, b))


@dataclass(frozen=True)
class Passport:
    """Cycle types of (sigma0, sigma1, sigma_inf), each a partition of d in descending order."""

    sigma0: tuple[int, ...]
    sigma1: tuple[int, ...]
    sigma_inf: tuple[int, ...]

    def as_lists(self) -> list[list[int]]:
        return [list(self.sigma0), list(self.sigma1), list(self.sigma_inf)]


def is_transitive(t: Dessin) -> bool:
    a, b = t.zero_based()
    return bool(get_kernels().is_transitive(a, b))


def _require_transitive(t: Dessin):
    if not is_transitive(t):
        raise NonTransitiveError(f"<sigma0, sigma1> is not transitive on 1..{t.degree}: {t}")


def passport(t: Dessin) -> Passport:
    k = get_kernels()
    a, b = t.zero_based()
    c = _zero(t.sigma_inf)
    return Passport(k.cycle_type(a), k.cycle_type(b), k.cycle_type(c))


def genus_of(t: Dessin) -> int:
    """Genus from 2 - 2g = c0 + c1 + c_inf - d."""
    _require_transitive(t)
    pp = passport(t)
    chi = len(pp.sigma0) + len(pp.sigma1) + len(pp.sigma_inf) - t.degree
    g2 = 2 - chi
    if g2 < 0 or g2 % 2:
        raise ArithmeticError(f"Riemann-Hurwitz produced a non-integral genus for {t}")
    return g2 // 2


# -- conjugacy-class machinery ---------------------------------------------

def class_representative(cycle_lengths: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least permutation (0-based) of the given cycle type.

    Cycles appear in ascending length, each on consecutive points
    ``a -> a+1 -> ... -> a+L-1 -> a``.
    """
    out = []
    start = 0
    for length in sorted(cycle_lengths):
        for j in range(length):
            out.append(start + (j + 1) % length)
        start += length
    return tuple(out)


def _blocks(cycle_lengths: Sequence[int]) -> dict[int, list[int]]:
    blocks: dict[int, list[int]] = {}
    start = 0
    for length in sorted(cycle_lengths):
        blocks.setdefault(length, []).append(start)
        start += length
    return blocks


def centralizer_generators(cycle_lengths: Sequence[int]) -> list[tuple[int, ...]]:
    """Generators (0-based) of the centralizer of ``class_representative``.

    The centralizer is a product of wreath products ``C_L wr S_m``: rotate the
    first L-block, swap the first two L-blocks, cycle all L-blocks.
    """
    d = sum(cycle_lengths)
    gens = []
    for length, starts in sorted(_blocks(cycle_lengths).items()):
        if length > 1:
            g = list(range(d))
            s = starts[0]
            for j in range(length):
                g[s + j] = s + (j + 1) % length
            gens.append(tuple(g))
        if len(starts) >= 2:
            g = list(range(d))
            a, b = starts[0], starts[1]
            for j in range(length):
                g[a + j], g[b + j] = b + j, a + j
            gens.append(tuple(g))
        if len(starts) >= 3:
            g = list(range(d))
            m = len(starts)
            for idx, s in enumerate(starts):
                t = starts[(idx + 1) % m]
                for j in range(length):
                    g[s + j] = t + j
            gens.append(tuple(g))
    return gens


def centralizer_order(cycle_lengths: Sequence[int]) -> int:
    order = 1
    for length, starts in _blocks(cycle_lengths).items():
        order *= factorial(len(starts)) * length ** len(starts)
    return order


def _align_to_representative(a: tuple[int, ...]) -> tuple[int, ...]:
    """A 0-based tau with ``tau a tau^-1 == class_representative(cycle type of a)``."""
    d = len(a)
    seen = [False] * d
    cycles = []
    for i in range(d):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        cycles.append(cyc)
    cycles.sort(key=len)
    tau = [0] * d
    start = 0
    for cyc in cycles:
        for j, x in enumerate(cyc):
            tau[x] = start + j
        start += len(cyc)
    return tuple(tau)


def canonicalize(t: Dessin) -> Dessin:
    """Lexicographically least simultaneous conjugate of ``(sigma0, sigma1)``.

    The least first coordinate is the class representative of sigma0's
    cycle type; among conjugates achieving it, the least second coordinate is
    the minimum over the orbit of the aligned sigma1 under that
    representative's centralizer.
    """
    _require_transitive(t)
    k = get_kernels()
    a, b = t.zero_based()
    lengths = k.cycle_type(a)
    rho = class_representative(lengths)
    tau = _align_to_representative(a)
    b_aligned = k.conjugate(tau, b)
    gens = centralizer_generators(lengths)
    b_min, _ = k.orbit_min(b_aligned, gens) if gens else (b_aligned, 1)
    return Dessin.from_zero_based(rho, b_min)


def automorphism_count(t: Dessin) -> int:
    """Order of the simultaneous centralizer of (sigma0, sigma1)."""
    _require_transitive(t)
    k = get_kernels()
    a, b = t.zero_based()
    lengths = k.cycle_type(a)
    tau = _align_to_representative(a)
    gens = centralizer_generators(lengths)
    size = k.orbit_min(k.conjugate(tau, b), gens)[1] if gens else 1
    return centralizer_order(lengths) // size
