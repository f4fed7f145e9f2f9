"""Pure-Python permutation kernels (fallback for the compiled ``_kernels``).

Permutations are 0-based image tuples.  Both backends expose the same
functions with the same results; the census code never needs to know which
one is active.
"""

from __future__ import annotations

from itertools import permutations


def is_transitive(a, b) -> bool:
    d = len(a)
    if d == 0:
        return True
    seen = [False] * d
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in (a[x], b[x]):
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == d


def cycle_type(a) -> tuple[int, ...]:
    d = len(a)
    seen = [False] * d
    lengths = []
    for i in range(d):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            n += 1
        lengths.append(n)
    lengths.sort(reverse=True)
    return tuple(lengths)


def num_cycles(a) -> int:
    return len(cycle_type(a))


def compose(a, b) -> tuple[int, ...]:
    """``a o b``: apply b first."""
    return tuple(a[x] for x in b)


def inverse(a) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conjugate(c, s) -> tuple[int, ...]:
    """``c s c^-1``: the relabelling of s along c."""
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[c[i]] = c[x]
    return tuple(out)


def _orbit(s, gens) -> set:
    orbit = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for c in gens:
            y = conjugate(c, x)
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def orbit_min(s, gens) -> tuple[tuple[int, ...], int]:
    """Lexicographically least element and size of the conjugation orbit of s."""
    orbit = _orbit(tuple(s), gens)
    return min(orbit), len(orbit)


def orbit_reps(rho, gens, d: int, group_order: int = 0) -> list[tuple[tuple[int, ...], int]]:
    """Orbit representatives of transitive partners of ``rho``.

    Walks all permutations of ``range(d)`` in lexicographic order; the first
    unvisited transitive one is the least element of its orbit under the
    group generated by ``gens`` (acting by conjugation).  Returns
    ``(representative, orbit_size)`` pairs in lexicographic order.
    """
    rho = tuple(rho)
    gens = [tuple(c) for c in gens]
    visited: set = set()
    out = []
    for s in permutations(range(d)):
        if s in visited or not is_transitive(rho, s):
            continue
        orbit = _orbit(s, gens)
        visited |= orbit
        out.append((s, len(orbit)))
    return out
