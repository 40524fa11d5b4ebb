"""Generic verifier for the three defining relations of a path-indexed
operator family, over any carrier algebra.

A family object supplies the generator images and the carrier operations:

    vertex(v) / path(lam) / ghost(mu)   generator images
    mul(a, b), add(a, b), zero()        carrier arithmetic
    equal(a, b), is_zero(a)             carrier comparisons

The relations checked, over all vertices and all path pairs within a
degree bound:

    R1  vertex images are mutually orthogonal idempotents
    R2  path images are multiplicative along composition, ghost images
        anti-multiplicative
    R3  ghost-times-path expands over minimal common extension pairs,
        empty expansions meaning zero
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import Degree
from .kgraph import KGraph, Path, compose, paths_up_to, vertex_path
from .combinatorics import lambda_min
from .algebra import AlgebraElement, gen, gen_star
from .pathrep import TruncatedModule, op_ghost, op_path, op_vertex
from .rings import Ring
from . import steinberg


@dataclass
class AxiomFailure:
    axiom: str
    detail: str


@dataclass
class AxiomReport:
    bound: Degree
    checked: int = 0
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class SymbolicFamily:
    """The universal family: generators map to themselves."""

    def __init__(self, graph: KGraph, ring: Ring):
        self.graph = graph
        self.ring = ring

    def vertex(self, v: str):
        return gen(self.graph, self.ring, v)

    def path(self, lam: Path):
        return gen(self.graph, self.ring, lam)

    def ghost(self, mu: Path):
        return gen_star(self.graph, self.ring, mu)

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def zero(self):
        return AlgebraElement.zero(self.ring, self.graph)

    def equal(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def coordinate_vectors(self, elements):
        return [dict(el.terms) for el in elements]


class RepFamily:
    """The truncated path-space representation as a family."""

    def __init__(self, module: TruncatedModule, ring: Ring):
        self.module = module
        self.graph = module.graph
        self.ring = ring

    def vertex(self, v: str):
        return op_vertex(self.module, self.ring, v)

    def path(self, lam: Path):
        return op_path(self.module, self.ring, lam)

    def ghost(self, mu: Path):
        return op_ghost(self.module, self.ring, mu)

    def mul(self, a, b):
        return a.compose(b)

    def add(self, a, b):
        return a + b

    def zero(self):
        from .pathrep import RepOperator
        return RepOperator(self.module, self.ring, Degree.zero(self.graph.rank), {})

    def equal(self, a, b) -> bool:
        same, _ = a.equal_on_window(b)
        return same

    def is_zero(self, a) -> bool:
        return a.is_zero_on_window()

    def coordinate_vectors(self, elements):
        margin = Degree.zero(self.graph.rank)
        for el in elements:
            margin = margin.join(el.margin)
        window = self.module.window(margin)
        out = []
        for el in elements:
            vec = {}
            for x in window:
                for y, c in el.apply(x).items():
                    vec[(x.key, y.key)] = c
            out.append(vec)
        return out


class SteinbergFamily:
    """The groupoid convolution model as a family: generators map to
    indicators of their double cylinders."""

    def __init__(self, graph: KGraph, ring: Ring):
        self.graph = graph
        self.ring = ring

    def _indicator(self, lam: Path, mu: Path):
        return steinberg.SteinbergElement.indicator(
            self.ring, steinberg.Bisection(lam, mu))

    def vertex(self, v: str):
        p = vertex_path(self.graph, v)
        return self._indicator(p, p)

    def path(self, lam: Path):
        return self._indicator(lam, vertex_path(self.graph, lam.source))

    def ghost(self, mu: Path):
        return self._indicator(vertex_path(self.graph, mu.source), mu)

    def mul(self, a, b):
        return steinberg.convolve(a, b)

    def add(self, a, b):
        return a + b

    def zero(self):
        return steinberg.SteinbergElement.zero(self.ring, self.graph)

    def equal(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def coordinate_vectors(self, elements):
        return steinberg.coordinate_vectors(self.graph, self.ring, elements)


def verify_cohn_axioms(family, graph: KGraph, bound: Degree) -> AxiomReport:
    bound = Degree(bound)
    report = AxiomReport(bound=bound)
    ring = family.ring

    def check(condition: bool, axiom: str, detail: str):
        report.checked += 1
        if not condition:
            report.failures.append(AxiomFailure(axiom, detail))

    for v in graph.vertices:
        tv = family.vertex(v)
        check(family.equal(family.mul(tv, tv), tv), "R1", f"T[{v}] not idempotent")
        for w in graph.vertices:
            if w == v:
                continue
            check(family.is_zero(family.mul(tv, family.vertex(w))),
                  "R1", f"T[{v}] T[{w}] nonzero")

    all_paths = [p for v in graph.vertices for p in paths_up_to(graph, v, bound)]

    for lam in all_paths:
        for mu in paths_up_to(graph, lam.source, bound):
            composite = compose(lam, mu)
            check(family.equal(family.mul(family.path(lam), family.path(mu)),
                               family.path(composite)),
                  "R2", f"T[{lam!r}] T[{mu!r}] != T[{composite!r}]")
            check(family.equal(family.mul(family.ghost(mu), family.ghost(lam)),
                               family.ghost(composite)),
                  "R2", f"T*[{mu!r}] T*[{lam!r}] != T*[{composite!r}]")

    for lam in all_paths:
        for mu in all_paths:
            lhs = family.mul(family.ghost(lam), family.path(mu))
            rhs = family.zero()
            for nu, gam in lambda_min(lam, mu):
                rhs = family.add(rhs, family.mul(family.path(nu), family.ghost(gam)))
            check(family.equal(lhs, rhs),
                  "R3", f"T*[{lam!r}] T[{mu!r}] fails the minimal-pair expansion")

    return report
