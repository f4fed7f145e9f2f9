"""Census of dessins of a given degree and its JSON-lines persistence."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator

from .. import __version__
from ..errors import DegreeCapError
from ._backend import BACKEND, get_kernels
from .core import (
    Dessin,
    Passport,
    centralizer_generators,
    centralizer_order,
    class_representative,
)

DEFAULT_DEGREE_CAP = 8


@dataclass(frozen=True)
class CensusEntry:
    dessin: Dessin
    genus: int
    passport: Passport
    aut: int

    @property
    def degree(self) -> int:
        return self.dessin.degree

    def to_json(self) -> dict:
        return {
            "d": self.dessin.degree,
            "s0": list(self.dessin.sigma0),
            "s1": list(self.dessin.sigma1),
            "genus": self.genus,
            "passport": self.passport.as_lists(),
            "aut": self.aut,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CensusEntry":
        pp = data["passport"]
        return cls(
            Dessin(int(data["d"]), tuple(data["s0"]), tuple(data["s1"])),
            int(data["genus"]),
            Passport(tuple(pp[0]), tuple(pp[1]), tuple(pp[2])),
            int(data["aut"]),
        )


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in descending order, each as a descending tuple."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def census_euler_check(entry: CensusEntry) -> bool:
    """Punctured cover has Euler characteristic d * e(P^1 - {0,1,inf}) = -d."""
    pp = entry.passport
    cusps = len(pp.sigma0) + len(pp.sigma1) + len(pp.sigma_inf)
    return 2 - 2 * entry.genus - cusps == -entry.degree


def _entries_for_class(d: int, lengths: tuple[int, ...], backend: str | None) -> list[CensusEntry]:
    k = get_kernels(backend)
    rho = class_representative(lengths)
    gens = centralizer_generators(lengths)
    order = centralizer_order(lengths)
    pp0 = tuple(sorted(lengths, reverse=True))
    out = []
    for s1, orbit_size in k.orbit_reps(rho, gens, d, order):
        s_inf = k.inverse(k.compose(rho, s1))
        pp = Passport(pp0, k.cycle_type(s1), k.cycle_type(s_inf))
        cycles = len(pp.sigma0) + len(pp.sigma1) + len(pp.sigma_inf)
        genus = (2 + d - cycles) // 2
        out.append(CensusEntry(Dessin.from_zero_based(rho, s1), genus, pp, order // orbit_size))
    return out


def enumerate_dessins(d: int, *, cap: int = DEFAULT_DEGREE_CAP, jobs: int = 1,
                      backend: str | None = None) -> list[CensusEntry]:
    """All degree-d dessins up to isomorphism, sorted by canonical form.

    sigma0 runs over one representative per cycle type; sigma1 over all
    permutations, reduced to orbits of the representative's centralizer.
    ``jobs > 1`` spreads the cycle types over worker processes; the merge is
    a sort, so the output does not depend on ``jobs``.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d > cap:
        raise DegreeCapError(
            f"degree {d} exceeds the census cap {cap}; the number of permutation pairs grows like (d!)^2. "
            "Raise the cap explicitly to proceed."
        )
    classes = list(partitions(d))
    name = backend or BACKEND
    if jobs > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_entries_for_class, [d] * len(classes), classes, [name] * len(classes)))
    else:
        chunks = [_entries_for_class(d, lengths, name) for lengths in classes]
    entries = [e for chunk in chunks for e in chunk]
    entries.sort(key=lambda e: (e.dessin.sigma0, e.dessin.sigma1))
    return entries


def labeled_count(entries: Iterable[CensusEntry]) -> int:
    """Sum of d!/aut: the number of labelled transitive pairs the census accounts for."""
    total = 0
    for e in entries:
        total += factorial(e.degree) // e.aut
    return total


def census_header(d: int, cap: int, count: int) -> dict:
    return {"tool": "hyperbound", "version": __version__, "cap": cap, "degree": d, "count": count}


def census_lines(d: int, entries: list[CensusEntry], cap: int = DEFAULT_DEGREE_CAP) -> list[str]:
    lines = [json.dumps(census_header(d, cap, len(entries)), sort_keys=True)]
    lines.extend(json.dumps(e.to_json(), sort_keys=True) for e in entries)
    return lines


def write_census(path: str | Path, d: int, entries: list[CensusEntry], cap: int = DEFAULT_DEGREE_CAP) -> None:
    Path(path).write_text("\n".join(census_lines(d, entries, cap)) + "\n", encoding="utf-8")


def read_census(path: str | Path) -> tuple[dict, list[CensusEntry]]:
    lines = [ln for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"empty census file {path}")
    header = json.loads(lines[0])
    return header, [CensusEntry.from_json(json.loads(ln)) for ln in lines[1:]]
