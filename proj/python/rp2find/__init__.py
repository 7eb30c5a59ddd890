"""Find RP2 subcomplexes in 3-uniform hypergraphs."""

from ._core import (
    Hypergraph,
    InputError,
    admissibility,
    classify,
    complete_hypergraph,
    find_rp2,
    find_sphere,
    fixture,
    fixture_names,
    random_hypergraph,
)

__all__ = [
    "Hypergraph",
    "InputError",
    "admissibility",
    "classify",
    "complete_hypergraph",
    "find_rp2",
    "find_sphere",
    "fixture",
    "fixture_names",
    "random_hypergraph",
]
