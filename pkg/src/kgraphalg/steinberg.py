"""The path groupoid and its convolution algebra of locally constant,
compactly supported functions.

Groupoid elements are triples (x, m, y) of paths with some pair of tails
agreeing after shifts p and q with p - q = m. The basic compact open
bisections are

    TZ(lam * mu \\ G) = {(lam z, d(lam)-d(mu), mu z) : z a path from
                         s(lam) whose word extends no member of G}

with G a finite antichain of removed extensions. These sets are
manipulated purely symbolically; truncated triples serve as the semantic
cross-check.

Normal form. Linear combinations are refined into disjoint "prefix
atoms": fix B, the join of every prefix degree mentioned by the terms of
one m-group (the d(lam_i) and d(lam_i . g)). A triple's class is the pair
of truncated prefixes (x(0, d(x) ^ B), y(0, ...)) and membership of a
whole class in each term is uniform, so coefficients add classwise. An
atom with prefix a shorter than B in some colors is again a basic
bisection: the removed set consists of the edges at s(a) of exactly the
colors where a is not yet saturated. (The naive refinement by appending
all degree-n extensions is not exact here because the path space contains
the finite paths themselves; the unsaturated-color removal carries those
short-tailed points.)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .degrees import Degree, degrees_up_to, join_all
from .kgraph import (KGraph, KGraphError, Path, compose, path_from_edges,
                     paths_up_to, segment, shift, vertex_path)
from .combinatorics import lambda_min
from .algebra import AlgebraElement
from .rings import Ring, ring_by_name


def _extends(longer: Path, prefix: Path) -> bool:
    return (prefix.degree.le(longer.degree)
            and segment(longer, Degree.zero(longer.graph.rank), prefix.degree) == prefix)


def _antichain(paths) -> frozenset:
    items = set(paths)
    keep = {p for p in items
            if not any(q != p and _extends(p, q) for q in items)}
    return frozenset(keep)


class Bisection:
    """A basic compact open bisection TZ(lam * mu \\ removed)."""

    __slots__ = ("lam", "mu", "removed")

    def __init__(self, lam: Path, mu: Path, removed=()):
        if lam.graph is not mu.graph:
            raise KGraphError("paths from different graphs")
        if lam.source != mu.source:
            raise KGraphError(f"bisection sides need a common source "
                              f"({lam!r}, {mu!r})")
        for nu in removed:
            if nu.graph is not lam.graph or nu.range != lam.source:
                raise KGraphError(f"removed extension {nu!r} does not start at s(lam)")
        self.lam = lam
        self.mu = mu
        self.removed = _antichain(removed)

    @property
    def m(self) -> tuple:
        return tuple(a - b for a, b in zip(self.lam.degree, self.mu.degree))

    def is_empty(self) -> bool:
        # the finite path lam itself is a member unless the empty tail is removed
        return any(nu.is_vertex() for nu in self.removed)

    def key(self):
        return (self.m, self.lam.key, self.mu.key,
                tuple(sorted(nu.key for nu in self.removed)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Bisection) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        minus = ""
        if self.removed:
            minus = " \\ {" + ", ".join(sorted(repr(nu) for nu in self.removed)) + "}"
        return f"TZ({self.lam!r} * {self.mu!r}{minus})"

    def transpose(self) -> "Bisection":
        """The inverse bisection, swapping the two legs."""
        return Bisection(self.mu, self.lam, self.removed)

    def contains(self, x: Path, m, y: Path) -> bool:
        if tuple(m) != self.m:
            return False
        if not (_extends(x, self.lam) and _extends(y, self.mu)):
            return False
        zx = shift(x, self.lam.degree)
        zy = shift(y, self.mu.degree)
        if zx != zy:
            return False
        return not any(_extends(zx, nu) for nu in self.removed)

    def canonical_triple(self):
        """(lam, m, mu), a member whenever the set is nonempty."""
        return (self.lam, self.m, self.mu)


def bisection_product(u: Bisection, v: Bisection) -> list[Bisection]:
    """The set product UV as a disjoint list of basic bisections: minimal
    common extensions of the inner legs glue the factors, and each removed
    set is pushed through the corresponding complement."""
    if u.lam.graph is not v.lam.graph:
        raise KGraphError("bisections over different graphs")
    out = []
    for rho, zeta in lambda_min(u.mu, v.lam):
        removed = set()
        for g_tail in u.removed:
            removed.update(a for a, _ in lambda_min(rho, g_tail))
        for h_tail in v.removed:
            removed.update(a for a, _ in lambda_min(zeta, h_tail))
        piece = Bisection(compose(u.lam, rho), compose(v.mu, zeta), removed)
        if not piece.is_empty():
            out.append(piece)
    return out


# -- normal form -------------------------------------------------------------

def _group_bound(graph: KGraph, terms) -> Degree:
    degs = []
    for bis, _ in terms:
        degs.append(bis.lam.degree)
        for g_tail in bis.removed:
            degs.append(bis.lam.degree + g_tail.degree)
    return join_all(degs, graph.rank)


def _atoms_of(graph: KGraph, bis: Bisection, bound: Degree):
    """The disjoint prefix atoms of one bisection at refinement bound B,
    as (a, b, removed_edge_paths) triples."""
    tail_bound = bound - bis.lam.degree
    for rho in paths_up_to(graph, bis.lam.source, tail_bound):
        if any(_extends(rho, g_tail) for g_tail in bis.removed):
            continue
        a = compose(bis.lam, rho)
        b = compose(bis.mu, rho)
        unsaturated = [i + 1 for i in range(graph.rank) if a.degree[i] < bound[i]]
        removed = [path_from_edges(graph, [e])
                   for i in unsaturated for e in graph.edges_at(a.source, i)]
        yield a, b, removed


def _normalize(graph: KGraph, ring: Ring, raw_terms) -> tuple:
    terms = [(bis, c) for bis, c in raw_terms
             if not bis.is_empty() and not ring.is_zero(c)]
    groups: dict[tuple, list] = {}
    for bis, c in terms:
        groups.setdefault(bis.m, []).append((bis, c))
    out = []
    for m in sorted(groups):
        group = groups[m]
        if len(group) == 1:
            out.append(group[0])
            continue
        bound = _group_bound(graph, group)
        acc: dict[tuple, list] = {}
        for bis, c in group:
            for a, b, removed in _atoms_of(graph, bis, bound):
                key = (a.key, b.key)
                if key in acc:
                    acc[key][2] = ring.add(acc[key][2], c)
                else:
                    acc[key] = [Bisection(a, b, removed), None, c]
        for key in sorted(acc):
            bis, _, c = acc[key]
            if not ring.is_zero(c):
                out.append((bis, c))
    return tuple(sorted(out, key=lambda t: t[0].key()))


class SteinbergElement:
    """An R-linear combination of pairwise disjoint basic bisections."""

    __slots__ = ("ring", "graph", "terms")

    def __init__(self, ring: Ring, graph: KGraph, terms):
        self.ring = ring
        self.graph = graph
        self.terms = _normalize(graph, ring, terms)

    @classmethod
    def zero(cls, ring: Ring, graph: KGraph) -> "SteinbergElement":
        return cls(ring, graph, ())

    @classmethod
    def indicator(cls, ring: Ring, bis: Bisection) -> "SteinbergElement":
        return cls(ring, bis.lam.graph, ((bis, ring.one()),))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "SteinbergElement") -> None:
        if self.graph is not other.graph or self.ring.name != other.ring.name:
            raise KGraphError("elements over different graphs or rings")

    def __add__(self, other: "SteinbergElement") -> "SteinbergElement":
        self._check(other)
        return SteinbergElement(self.ring, self.graph, self.terms + other.terms)

    def __neg__(self) -> "SteinbergElement":
        return self.scale(self.ring.neg(self.ring.one()))

    def __sub__(self, other: "SteinbergElement") -> "SteinbergElement":
        return self + (-other)

    def scale(self, r) -> "SteinbergElement":
        return SteinbergElement(self.ring, self.graph,
                                [(b, self.ring.mul(r, c)) for b, c in self.terms])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SteinbergElement)
                and self.graph is other.graph
                and self.ring.name == other.ring.name
                and (self - other).is_zero())

    def __hash__(self):
        raise TypeError("SteinbergElement is not hashable")

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{self.ring.fmt(c)} 1[{b!r}]" for b, c in self.terms)

    def evaluate(self, x: Path, m, y: Path):
        """The function value at the triple (x, m, y)."""
        total = self.ring.zero()
        for bis, c in self.terms:
            if bis.contains(x, m, y):
                total = self.ring.add(total, c)
        return total

    def transpose(self) -> "SteinbergElement":
        return SteinbergElement(self.ring, self.graph,
                                [(b.transpose(), c) for b, c in self.terms])


def convolve(f: SteinbergElement, g: SteinbergElement) -> SteinbergElement:
    """Bilinear extension of the bisection product."""
    f._check(g)
    ring = f.ring
    terms = []
    for bu, cu in f.terms:
        for bv, cv in g.terms:
            c = ring.mul(cu, cv)
            for piece in bisection_product(bu, bv):
                terms.append((piece, c))
    return SteinbergElement(ring, f.graph, terms)


def convolve_pointwise(f: SteinbergElement, g: SteinbergElement,
                       x: Path, m, y: Path):
    """The convolution formula evaluated directly at one triple: sum of
    f(b) g(b^{-1} a) over the b in supp(f) with the same range as a."""
    ring = f.ring
    total = ring.zero()
    m = tuple(m)
    for bis, c in f.terms:
        if not _extends(x, bis.lam):
            continue
        z = shift(x, bis.lam.degree)
        if any(_extends(z, nu) for nu in bis.removed):
            continue
        w = compose(bis.mu, z)
        rest = tuple(a - b for a, b in zip(m, bis.m))
        total = ring.add(total, ring.mul(c, g.evaluate(w, rest, y)))
    return total


def phi_q(ring: Ring, a: AlgebraElement) -> SteinbergElement:
    """The groupoid model of a symbolic element: a normal word maps to the
    indicator of its double cylinder."""
    terms = [(Bisection(w.lam, w.mu), c) for w, c in a.terms.items()]
    return SteinbergElement(ring, a.graph, terms)


def union_to_span(ring: Ring, graph: KGraph, bisections) -> SteinbergElement:
    """The indicator of a finite union of basic bisections, as an R-linear
    combination of disjoint basic indicators."""
    groups: dict[tuple, list] = {}
    for bis in bisections:
        if not bis.is_empty():
            groups.setdefault(bis.m, []).append(bis)
    terms = []
    for m in sorted(groups):
        group = groups[m]
        bound = _group_bound(graph, [(b, None) for b in group])
        seen: dict[tuple, Bisection] = {}
        for bis in group:
            for a, b, removed in _atoms_of(graph, bis, bound):
                seen.setdefault((a.key, b.key), Bisection(a, b, removed))
        for key in sorted(seen):
            terms.append((seen[key], ring.one()))
    return SteinbergElement(ring, graph, terms)


# -- truncated-triple semantics ----------------------------------------------

def is_triple(x: Path, m, y: Path) -> bool:
    """Whether (x, m, y) is a groupoid element: some shifts p - q = m make
    the tails agree."""
    if x.graph is not y.graph:
        return False
    m = tuple(m)
    for p in degrees_up_to(x.degree):
        q = tuple(a - b for a, b in zip(p, m))
        if any(c < 0 for c in q) or not Degree(q).le(y.degree):
            continue
        if shift(x, p) == shift(y, Degree(q)):
            return True
    return False


def truncated_triples(graph: KGraph, cap: Degree):
    """All groupoid triples whose legs have degree <= cap, generated as
    (lam z, d(lam)-d(mu), mu z) over bounded spans."""
    cap = Degree(cap)
    seen = set()
    for v in graph.vertices:
        for lam in paths_up_to(graph, v, cap):
            for mu in paths_up_to(graph, v, cap):
                if lam.source != mu.source:
                    continue
                m = tuple(a - b for a, b in zip(lam.degree, mu.degree))
                room = [c - max(dl, dm) for c, dl, dm
                        in zip(cap, lam.degree, mu.degree)]
                for z in paths_up_to(graph, lam.source, Degree(room)):
                    trip = (compose(lam, z), m, compose(mu, z))
                    key = (trip[0].key, m, trip[2].key)
                    if key not in seen:
                        seen.add(key)
                        yield trip


@dataclass
class EffectivenessReport:
    bound: Degree
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def effectiveness_probe(graph: KGraph, bound: Degree) -> EffectivenessReport:
    """Certify on basic bisections with legs up to the bound and removed
    sets of edges that only unit-space-shaped sets sit inside the
    isotropy: every nonempty set contains its canonical triple, and any
    set all of whose truncated triples are isotropic must have equal legs."""
    bound = Degree(bound)
    report = EffectivenessReport(bound=bound)
    tail_cap = Degree((1,) * graph.rank)
    for v in graph.vertices:
        for lam in paths_up_to(graph, v, bound):
            for mu in paths_up_to(graph, v, bound):
                if lam.source != mu.source:
                    continue
                edge_paths = [path_from_edges(graph, [e])
                              for e in graph.edges_at(lam.source)]
                for size in range(len(edge_paths) + 1):
                    for g_set in combinations(edge_paths, size):
                        bis = Bisection(lam, mu, g_set)
                        if bis.is_empty():
                            continue
                        report.checked += 1
                        cx, cm, cy = bis.canonical_triple()
                        if not bis.contains(cx, cm, cy):
                            report.violations.append(
                                (bis, "canonical triple missing"))
                            continue
                        inside_iso = True
                        for z in paths_up_to(graph, lam.source, tail_cap):
                            if any(_extends(z, nu) for nu in bis.removed):
                                continue
                            if compose(lam, z) != compose(mu, z):
                                inside_iso = False
                                break
                        if inside_iso and lam != mu:
                            report.violations.append(
                                (bis, "isotropy-contained set with distinct legs"))
    return report


# -- coordinates and JSON ----------------------------------------------------

def coordinate_vectors(graph: KGraph, ring: Ring, elements) -> list[dict]:
    """Sparse coordinates of several elements over one shared atom
    refinement, suitable for exact rank computations."""
    groups: dict[tuple, list] = {}
    for el in elements:
        for bis, _ in el.terms:
            groups.setdefault(bis.m, []).append((bis, None))
    bounds = {m: _group_bound(graph, group) for m, group in groups.items()}
    out = []
    for el in elements:
        vec: dict = {}
        for bis, c in el.terms:
            for a, b, _ in _atoms_of(graph, bis, bounds[bis.m]):
                key = (bis.m, a.key, b.key)
                prev = vec.get(key, ring.zero())
                vec[key] = ring.add(prev, c)
        out.append({k: v for k, v in vec.items() if not ring.is_zero(v)})
    return out


def _path_json(p: Path) -> list:
    return list(p.edges)


def _path_unjson(graph: KGraph, edges, base: str) -> Path:
    if edges:
        return path_from_edges(graph, edges)
    return vertex_path(graph, base)


def bisection_to_json(bis: Bisection) -> dict:
    out = {"lambda": _path_json(bis.lam), "mu": _path_json(bis.mu),
           "minus": sorted(_path_json(nu) for nu in bis.removed)}
    if bis.lam.is_vertex():
        out["vertex"] = bis.lam.base
    elif bis.mu.is_vertex():
        out["vertex"] = bis.mu.base
    return out


def bisection_from_json(graph: KGraph, data: dict) -> Bisection:
    vertex = data.get("vertex")
    if data["lambda"]:
        lam = path_from_edges(graph, data["lambda"])
    else:
        lam = vertex_path(graph, vertex)
    if data["mu"]:
        mu = path_from_edges(graph, data["mu"])
    else:
        mu = vertex_path(graph, vertex)
    removed = [_path_unjson(graph, word, lam.source)
               for word in data.get("minus", ())]
    return Bisection(lam, mu, removed)


def element_to_json(el: SteinbergElement) -> dict:
    terms = []
    for bis, c in el.terms:
        item = bisection_to_json(bis)
        item["coeff"] = el.ring.fmt(c)
        terms.append(item)
    return {"ring": el.ring.name, "terms": terms}


def element_from_json(graph: KGraph, data: dict,
                      ring: Ring | None = None) -> SteinbergElement:
    ring = ring or ring_by_name(data["ring"])
    terms = [(bisection_from_json(graph, item), ring.parse(item["coeff"]))
             for item in data["terms"]]
    return SteinbergElement(ring, graph, terms)


def element_to_json_str(el: SteinbergElement) -> str:
    return json.dumps(element_to_json(el), indent=2, sort_keys=True)
