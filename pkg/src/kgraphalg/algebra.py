"""The universal path algebra of a presentation: R-linear spans of normal
words t_lam t_mu* with s(lam) = s(mu).

Multiplication reduces every product of normal words through the minimal
common-extension expansion
    (t_lam t_mu*)(t_nu t_gam*) = sum over (rho, zeta) minimal for (mu, nu)
                                 of t_{lam.rho} t_{(gam.zeta)*}
and the empty sum is 0. Vertex generators are the words (v, v); the
boundary idempotent of a vertex is
    F_v = t_v - prod over e in vΛ^1 of (t_v - t_e t_e*),
with the empty product read as t_v, so F_v = 0 at a vertex without edges.
Elements are immutable; all operations return fresh values.
"""

from __future__ import annotations

import json
from typing import NamedTuple

from .kgraph import KGraph, KGraphError, Path, compose, path_from_edges, vertex_path
from .combinatorics import lambda_min
from .rings import Ring, ring_by_name


class NormalWord(NamedTuple):
    lam: Path
    mu: Path

    @property
    def weight(self):
        """Z^k grading degree d(lam) - d(mu)."""
        return tuple(a - b for a, b in zip(self.lam.degree, self.mu.degree))

    def key(self):
        return (self.lam.degree, self.lam.key, self.mu.degree, self.mu.key)


def normal_word(lam: Path, mu: Path) -> NormalWord:
    if lam.graph is not mu.graph:
        raise KGraphError("paths from different graphs")
    if lam.source != mu.source:
        raise KGraphError(f"words need a common source: s({lam!r}) != s({mu!r})")
    return NormalWord(lam, mu)


class AlgebraElement:
    """A finite R-linear combination of normal words; zero coefficients
    are never stored."""

    __slots__ = ("ring", "graph", "terms")

    def __init__(self, ring: Ring, graph: KGraph, terms: dict):
        self.ring = ring
        self.graph = graph
        self.terms = {w: c for w, c in terms.items() if not ring.is_zero(c)}

    @classmethod
    def zero(cls, ring: Ring, graph: KGraph) -> AlgebraElement:
        return cls(ring, graph, {})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0].key())

    def _check(self, other: AlgebraElement) -> None:
        if self.graph is not other.graph:
            raise KGraphError("elements over different graphs")
        if self.ring.name != other.ring.name:
            raise KGraphError(f"elements over different rings "
                              f"({self.ring.name} vs {other.ring.name})")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = self.ring.add(out.get(w, self.ring.zero()), c)
        return AlgebraElement(self.ring, self.graph, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.ring, self.graph,
                              {w: self.ring.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, r) -> AlgebraElement:
        return AlgebraElement(self.ring, self.graph,
                              {w: self.ring.mul(r, c) for w, c in self.terms.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        ring = self.ring
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = ring.mul(c1, c2)
                if ring.is_zero(c):
                    continue
                for rho, zeta in lambda_min(w1.mu, w2.lam):
                    word = NormalWord(compose(w1.lam, rho), compose(w2.mu, zeta))
                    out[word] = ring.add(out.get(word, ring.zero()), c)
        return AlgebraElement(ring, self.graph, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.graph is other.graph
                and self.ring.name == other.ring.name and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("AlgebraElement is not hashable")

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            if w.lam == w.mu and w.lam.is_vertex():
                body = f"t[{w.lam!r}]"
            else:
                body = f"t[{w.lam!r}]t*[{w.mu!r}]"
            bits.append(f"{self.ring.fmt(c)} {body}")
        return " + ".join(bits)


def gen(graph: KGraph, ring: Ring, lam: Path | str) -> AlgebraElement:
    """The generator t_lam; a vertex name or vertex path gives t_v."""
    if isinstance(lam, str):
        lam = vertex_path(graph, lam)
    word = normal_word(lam, vertex_path(graph, lam.source))
    return AlgebraElement(ring, graph, {word: ring.one()})


def gen_star(graph: KGraph, ring: Ring, mu: Path | str) -> AlgebraElement:
    """The ghost generator t_mu*; vertices satisfy v* = v."""
    if isinstance(mu, str):
        mu = vertex_path(graph, mu)
    word = normal_word(vertex_path(graph, mu.source), mu)
    return AlgebraElement(ring, graph, {word: ring.one()})


def word_element(graph: KGraph, ring: Ring, lam: Path, mu: Path) -> AlgebraElement:
    return AlgebraElement(ring, graph, {normal_word(lam, mu): ring.one()})


def f_idempotent(graph: KGraph, ring: Ring, v: str,
                 edge_order=None) -> AlgebraElement:
    """The boundary idempotent F_v. The factors commute, so any edge
    order gives the same element; `edge_order` exists for asserting that."""
    edges = graph.edges_at(v) if edge_order is None else tuple(edge_order)
    tv = gen(graph, ring, v)
    prod = tv
    for e in edges:
        ep = path_from_edges(graph, [e])
        prod = prod * (tv - gen(graph, ring, ep) * gen_star(graph, ring, ep))
    return tv - prod


def graded_component(a: AlgebraElement, n) -> AlgebraElement:
    n = tuple(int(c) for c in n)
    return AlgebraElement(a.ring, a.graph,
                          {w: c for w, c in a.terms.items() if w.weight == n})


def degree_support(a: AlgebraElement) -> tuple:
    return tuple(sorted({w.weight for w in a.terms}))


# -- JSON element format ----------------------------------------------------

def _path_to_json(p: Path) -> dict:
    out: dict = {"edges": list(p.edges)}
    if p.is_vertex():
        out["vertex"] = p.base
    return out


def _path_from_json(graph: KGraph, edges, vertex=None) -> Path:
    if edges:
        return path_from_edges(graph, edges)
    if vertex is None:
        raise KGraphError("empty path word needs a \"vertex\" field")
    return vertex_path(graph, vertex)


def element_to_json(a: AlgebraElement) -> dict:
    terms = []
    for w, c in a.sorted_terms():
        item = {"lambda": list(w.lam.edges), "mu": list(w.mu.edges),
                "coeff": a.ring.fmt(c)}
        if w.lam.is_vertex():
            item["vertex"] = w.lam.base
        elif w.mu.is_vertex():
            item["vertex"] = w.mu.base
        terms.append(item)
    return {"ring": a.ring.name, "terms": terms}


def element_from_json(graph: KGraph, data: dict, ring: Ring | None = None) -> AlgebraElement:
    ring = ring or ring_by_name(data["ring"])
    terms: dict = {}
    for item in data["terms"]:
        vertex = item.get("vertex")
        lam = _path_from_json(graph, item["lambda"], vertex)
        mu = _path_from_json(graph, item["mu"], vertex)
        w = normal_word(lam, mu)
        c = ring.parse(item["coeff"])
        terms[w] = ring.add(terms.get(w, ring.zero()), c)
    return AlgebraElement(ring, graph, terms)


def element_to_json_str(a: AlgebraElement) -> str:
    return json.dumps(element_to_json(a), indent=2, sort_keys=True)
