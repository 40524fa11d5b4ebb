"""The doubled graph: a live (a:) and a dead-end (b:) copy of every vertex
and edge of a no-sources graph.

Ranges always land in the live copy, so a path word contains at most one
b: edge and only in final position. The commuting squares are lifted from
the base with the tag of the trailing edge carried along; this is forced,
since factorisation downstairs must match factorisation upstairs under
`classify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .degrees import Degree
from .kgraph import (KGraph, KGraphError, Path, has_no_sources, path_from_edges,
                     vertex_path)
from .combinatorics import ExhaustiveVerdict, is_exhaustive
from .kgraph import sources as graph_sources

ALPHA = "a"
BETA = "b"
_APREF = "a:"
_BPREF = "b:"


class HasSources(KGraphError):
    pass


def mangle(tag: str, name: str) -> str:
    return f"{tag}:{name}"


def unmangle(name: str) -> tuple[str, str]:
    if name.startswith(_APREF):
        return ALPHA, name[len(_APREF):]
    if name.startswith(_BPREF):
        return BETA, name[len(_BPREF):]
    raise KGraphError(f"{name!r} carries no a:/b: tag")


@dataclass
class TLambda:
    base: KGraph
    graph: KGraph

    def alpha(self, lam: Path) -> Path:
        """Tag-preserving embedding into the live copy."""
        if lam.graph is not self.base:
            raise KGraphError("path not from the base graph")
        if lam.is_vertex():
            return vertex_path(self.graph, mangle(ALPHA, lam.base))
        return path_from_edges(self.graph, [mangle(ALPHA, e) for e in lam.edges])

    def beta(self, lam: Path) -> Path:
        """Embedding whose source falls in the dead-end copy."""
        if lam.graph is not self.base:
            raise KGraphError("path not from the base graph")
        if lam.is_vertex():
            return vertex_path(self.graph, mangle(BETA, lam.base))
        word = [mangle(ALPHA, e) for e in lam.edges[:-1]]
        word.append(mangle(BETA, lam.edges[-1]))
        return path_from_edges(self.graph, word)

    def classify(self, tau: Path) -> tuple[str, Path]:
        """Inverse of the embeddings: the tag and the underlying path."""
        if tau.graph is not self.graph:
            raise KGraphError("path not from the doubled graph")
        if tau.is_vertex():
            tag, name = unmangle(tau.base)
            return tag, vertex_path(self.base, name)
        tags = [unmangle(e)[0] for e in tau.edges]
        if BETA in tags[:-1] or tags.count(BETA) > 1:
            raise KGraphError(f"{tau!r}: a b: edge may only close the word")
        under = path_from_edges(self.base, [unmangle(e)[1] for e in tau.edges])
        return (BETA if tags[-1] == BETA else ALPHA), under


def build_tlambda(g: KGraph) -> TLambda:
    """Construct the doubled graph of a valid no-sources presentation."""
    g.ensure_valid()
    if not has_no_sources(g):
        raise HasSources("graph has sources: " + ", ".join(graph_sources(g)))
    vertices = [mangle(t, v) for v in g.vertices for t in (ALPHA, BETA)]
    edges: dict[str, tuple] = {}
    for name, e in g.edges.items():
        edges[mangle(ALPHA, name)] = (e.color, mangle(ALPHA, e.range),
                                      mangle(ALPHA, e.source))
        edges[mangle(BETA, name)] = (e.color, mangle(ALPHA, e.range),
                                     mangle(BETA, e.source))
    squares = []
    for (a, b), (c, d) in g.squares:
        squares.append(((mangle(ALPHA, a), mangle(ALPHA, b)),
                        (mangle(ALPHA, c), mangle(ALPHA, d))))
        squares.append(((mangle(ALPHA, a), mangle(BETA, b)),
                        (mangle(ALPHA, c), mangle(BETA, d))))
    doubled = KGraph(g.rank, vertices, edges, squares)
    doubled.ensure_valid()
    return TLambda(base=g, graph=doubled)


@dataclass
class ExhaustiveCheckReport:
    vertex: str
    full_edges: tuple[Path, ...]
    full_verdict: ExhaustiveVerdict
    subsets: list = field(default_factory=list)  # (names, verdict)

    @property
    def ok(self) -> bool:
        proper_all_fail = all(v.status == "NOT_EXHAUSTIVE" for _, v in self.subsets)
        return bool(self.full_verdict) and proper_all_fail


def tlambda_exhaustive_check(tl: TLambda, v: str) -> ExhaustiveCheckReport:
    """Check that the full edge set at a live vertex is the only exhaustive
    subset of it, confirming every proper subset with an explicit witness."""
    tg = tl.graph
    av = mangle(ALPHA, v)
    bound = Degree((2,) * tg.rank)
    full = sorted((path_from_edges(tg, [e]) for e in tg.edges_at(av)),
                  key=lambda p: p.key)
    report = ExhaustiveCheckReport(
        vertex=av, full_edges=tuple(full),
        full_verdict=is_exhaustive(tg, av, full, bound))
    for size in range(len(full)):
        for subset in combinations(full, size):
            verdict = is_exhaustive(tg, av, list(subset), bound)
            report.subsets.append((tuple(p.edges[0] for p in subset), verdict))
    return report
