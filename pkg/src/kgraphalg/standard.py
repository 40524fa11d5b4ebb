"""Small presentations used throughout the tests and the acceptance suite."""

from __future__ import annotations

from .degrees import Degree
from .kgraph import KGraph, omega


def lambda_1() -> KGraph:
    """Rank 2; two vertices, one edge of each color from w into v, no
    composable two-colored words. w is a source."""
    return KGraph(2, ["v", "w"],
                  {"e": (1, "v", "w"), "f": (2, "v", "w")}, [])


def lambda_2() -> KGraph:
    """Rank 2; a single vertex with one commuting loop of each color."""
    return KGraph(2, ["v"],
                  {"e": (1, "v", "v"), "f": (2, "v", "v")},
                  [(("e", "f"), ("f", "e"))])


def twist() -> KGraph:
    """Rank 2; one vertex, two color-1 loops and one color-2 loop, with
    squares exchanging the color-1 loops across the color-2 one. No
    sources, several paths per degree."""
    return KGraph(2, ["v"],
                  {"e1": (1, "v", "v"), "e2": (1, "v", "v"), "f": (2, "v", "v")},
                  [(("e1", "f"), ("f", "e2")),
                   (("e2", "f"), ("f", "e1"))])


def omega_2_12() -> KGraph:
    """The rank-2 grid graph with top corner (1, 2): six vertices."""
    return omega(2, Degree((1, 2)))
