"""Degree-d covers of the thrice-punctured line as permutation pairs."""

from ._backend import BACKEND, AVAILABLE, get_kernels
from .census import (
    DEFAULT_DEGREE_CAP,
    CensusEntry,
    census_euler_check,
    enumerate_dessins,
    labeled_count,
    partitions,
    read_census,
    write_census,
)
from .core import (
    Dessin,
    Passport,
    automorphism_count,
    canonicalize,
    class_representative,
    genus_of,
    is_transitive,
    passport,
)

__all__ = [
    "AVAILABLE",
    "BACKEND",
    "DEFAULT_DEGREE_CAP",
    "CensusEntry",
    "Dessin",
    "Passport",
    "automorphism_count",
    "canonicalize",
    "census_euler_check",
    "class_representative",
    "enumerate_dessins",
    "genus_of",
    "get_kernels",
    "is_transitive",
    "labeled_count",
    "partitions",
    "passport",
    "read_census",
    "write_census",
]
