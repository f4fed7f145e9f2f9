"""Regenerate the bundled field fixtures in src/hyperbound/data."""

import json
from pathlib import Path

from hyperbound.transcendental import enclose_pi

DATA = Path(__file__).resolve().parents[1] / "src" / "hyperbound" / "data"


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, ok in enumerate(sieve) if ok]


def qsqrt5_norms(B):
    """Prime ideal norms <= B in the real quadratic field of discriminant 5."""
    norms = []
    for p in primes_upto(B):
        if p == 5:
            norms.append(5)
        elif p % 5 in (1, 4):
            norms += [p, p]
        elif p * p <= B:
            norms.append(p * p)
    return sorted(norms)


def main():
    pi = enclose_pi(256)
    zeta = pi * pi / 6
    rationals = {"n": 1, "dF": 1, "zeta2": zeta.to_json(), "prime_norms": [], "B": None, "ramified": []}
    qsqrt5 = {"n": 2, "dF": 5, "zeta2": None, "prime_norms": qsqrt5_norms(100), "B": 100, "ramified": []}
    for name, data in (("field_rationals.json", rationals), ("field_qsqrt5.json", qsqrt5)):
        (DATA / name).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
