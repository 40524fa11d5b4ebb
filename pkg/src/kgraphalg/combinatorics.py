"""Common-extension combinatorics: MCE, minimal pairs, Ext, exhaustive
sets and the aperiodicity probe."""

from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import Degree, join_all
from .kgraph import (KGraph, KGraphError, Path, compose, has_no_sources,
                     paths_from, paths_up_to, segment, vertex_path)

EXHAUSTIVE = "EXHAUSTIVE"
NOT_EXHAUSTIVE = "NOT_EXHAUSTIVE"
UNKNOWN_UP_TO_BOUND = "UNKNOWN_UP_TO_BOUND"


def mce(lam: Path, mu: Path) -> tuple[Path, ...]:
    """Minimal common extensions: common extensions of degree d(lam) v d(mu)."""
    if lam.graph is not mu.graph:
        raise KGraphError("paths from different graphs")
    g = lam.graph
    ck = (lam.key, mu.key)
    hit = g._mce_cache.get(ck)
    if hit is not None:
        return hit
    out: tuple[Path, ...]
    if lam.range != mu.range:
        out = ()
    else:
        join = lam.degree.join(mu.degree)
        found = []
        for rho in paths_from(g, lam.source, join - lam.degree):
            tau = compose(lam, rho)
            if segment(tau, Degree.zero(g.rank), mu.degree) == mu:
                found.append(tau)
        out = tuple(found)
    g._mce_cache[ck] = out
    return out


def lambda_min(lam: Path, mu: Path) -> tuple[tuple[Path, Path], ...]:
    """Pairs (lam', mu') with lam.lam' = mu.mu' a minimal common extension."""
    pairs = []
    for tau in mce(lam, mu):
        pairs.append((segment(tau, lam.degree, tau.degree),
                      segment(tau, mu.degree, tau.degree)))
    return tuple(pairs)


def ext(lam: Path, collection) -> tuple[Path, ...]:
    """Ext(lam; E): the lam-side complements over all members of E."""
    out = {rho for mu in collection for rho, _ in lambda_min(lam, mu)}
    return tuple(sorted(out, key=lambda p: p.key))


def i_of(collection) -> tuple[Path, ...]:
    """Initial edges of members of E, one per color with positive degree."""
    out = set()
    for lam in collection:
        g = lam.graph
        for i in range(1, g.rank + 1):
            if lam.degree[i - 1] > 0:
                out.add(segment(lam, Degree.zero(g.rank), Degree.basis(g.rank, i)))
    return tuple(sorted(out, key=lambda p: p.key))


def l_of(collection) -> int:
    """Sum over colors of the maximal degree coordinate appearing in E."""
    items = list(collection)
    if not items:
        return 0
    rank = items[0].graph.rank
    return sum(max(lam.degree[i] for lam in items) for i in range(rank))


@dataclass
class ExhaustiveVerdict:
    status: str
    witness: Path | None = None
    bound: Degree | None = None

    def __bool__(self) -> bool:
        return self.status == EXHAUSTIVE


def _matches_some(lam: Path, collection) -> bool:
    return any(mce(lam, mu) for mu in collection)


def is_exhaustive(g: KGraph, v: str, collection, bound: Degree | None = None) -> ExhaustiveVerdict:
    """Decide whether E subset of vΛ is exhaustive (every path at v has a
    common extension with some member).

    Exact when the graph has no sources: it suffices to check the paths of
    degree N = join of the member degrees, since any path extends to one
    whose degree-N initial segment then matches. The containment E >= vΛ^1
    is also decisive for any graph. Otherwise the search is a bounded
    semi-decision (default bound 2N): a failing path refutes
    exhaustiveness outright, while a clean sweep only reports
    UNKNOWN_UP_TO_BOUND because graphs with sources can hide failures past
    any fixed level.
    """
    members = list(collection)
    for mu in members:
        if mu.graph is not g or mu.range != v:
            raise KGraphError(f"{mu!r} is not a path at {v}")
    vertex = vertex_path(g, v)
    if vertex in members:
        return ExhaustiveVerdict(EXHAUSTIVE, bound=Degree.zero(g.rank))
    if not members:
        return ExhaustiveVerdict(NOT_EXHAUSTIVE, witness=vertex)
    level = join_all((mu.degree for mu in members), g.rank)

    if has_no_sources(g):
        for lam in paths_from(g, v, level):
            if not _matches_some(lam, members):
                return ExhaustiveVerdict(NOT_EXHAUSTIVE, witness=lam, bound=level)
        return ExhaustiveVerdict(EXHAUSTIVE, bound=level)

    edge_set = {p for i in range(1, g.rank + 1)
                for p in paths_from(g, v, Degree.basis(g.rank, i))}
    if edge_set and edge_set <= set(members):
        # every positive-degree path matches its own initial edge and the
        # vertex matches any member, so containing all of vΛ^1 is decisive
        # even though the graph has sources
        return ExhaustiveVerdict(EXHAUSTIVE, bound=Degree((1,) * g.rank))
    if bound is None:
        bound = level + level
    for lam in paths_up_to(g, v, bound):
        if not _matches_some(lam, members):
            return ExhaustiveVerdict(NOT_EXHAUSTIVE, witness=lam, bound=bound)
    return ExhaustiveVerdict(UNKNOWN_UP_TO_BOUND, bound=bound)


@dataclass
class AperiodicityReport:
    bound: Degree
    witnessed: dict = field(default_factory=dict)    # (lam, mu) -> eta
    unresolved: list = field(default_factory=list)   # [(lam, mu)]

    @property
    def all_witnessed(self) -> bool:
        return not self.unresolved


def aperiodicity_probe(g: KGraph, bound: Degree) -> AperiodicityReport:
    """Search, for every distinct pair with a common source and degrees
    within the bound, an extension eta killing all common extensions of
    the extended pair. Semi-decision: unresolved pairs stay unresolved."""
    bound = Degree(bound)
    report = AperiodicityReport(bound=bound)
    by_source: dict[str, list[Path]] = {}
    for v in g.vertices:
        for lam in paths_up_to(g, v, bound):
            by_source.setdefault(lam.source, []).append(lam)
    for src in sorted(by_source):
        bucket = sorted(by_source[src], key=lambda p: p.key)
        for a, lam in enumerate(bucket):
            for mu in bucket[a + 1:]:
                eta_found = None
                for eta in paths_up_to(g, src, bound):
                    if not mce(compose(lam, eta), compose(mu, eta)):
                        eta_found = eta
                        break
                if eta_found is None:
                    report.unresolved.append((lam, mu))
                else:
                    report.witnessed[(lam, mu)] = eta_found
    return report
