"""Representation on the degree-truncated free module over finite paths.

A vertex acts as the range projection, a path by left concatenation, a
ghost path by matching off its word and shifting. Left concatenation can
push a basis path past the degree cap; each operator therefore carries a
conservative margin vector and comparisons are restricted to inputs whose
degree stays at least the margin below the cap, where truncation cannot
have discarded anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import Degree, join_all
from .kgraph import KGraph, KGraphError, Path, compose, segment
from .kgraph import all_paths_up_to
from .algebra import AlgebraElement, NormalWord
from .rings import Ring


class WindowTooSmall(KGraphError):
    pass


CONSISTENT = "CONSISTENT"
DISTINGUISHED = "DISTINGUISHED"


class TruncatedModule:
    """Free R-module on the paths of degree <= cap."""

    def __init__(self, graph: KGraph, cap: Degree):
        self.graph = graph
        self.cap = Degree(cap)
        self.basis = tuple(all_paths_up_to(graph, self.cap))
        self._index = {p: i for i, p in enumerate(self.basis)}
        self._op_cache: dict = {}

    def window(self, margin: Degree) -> tuple[Path, ...]:
        if not margin.le(self.cap):
            return ()
        limit = self.cap - margin
        return tuple(p for p in self.basis if p.degree.le(limit))


def _zero_margin(graph: KGraph) -> Degree:
    return Degree.zero(graph.rank)


class RepOperator:
    """Module endomorphism given by its action table on basis paths,
    together with the exactness margin."""

    __slots__ = ("module", "ring", "margin", "table")

    def __init__(self, module: TruncatedModule, ring: Ring, margin: Degree,
                 table: dict):
        self.module = module
        self.ring = ring
        self.margin = margin
        # table: basis path -> {basis path: coeff}, zero rows omitted
        self.table = {x: {y: c for y, c in row.items() if not ring.is_zero(c)}
                      for x, row in table.items()}
        for x in list(self.table):
            if not self.table[x]:
                del self.table[x]

    def apply(self, x: Path) -> dict:
        return self.table.get(x, {})

    def apply_vector(self, vec: dict) -> dict:
        ring = self.ring
        out: dict = {}
        for x, c in vec.items():
            for y, c2 in self.apply(x).items():
                out[y] = ring.add(out.get(y, ring.zero()), ring.mul(c, c2))
        return {y: c for y, c in out.items() if not ring.is_zero(c)}

    def __add__(self, other: RepOperator) -> RepOperator:
        ring = self.ring
        table: dict = {}
        for x in set(self.table) | set(other.table):
            row = dict(self.apply(x))
            for y, c in other.apply(x).items():
                row[y] = ring.add(row.get(y, ring.zero()), c)
            table[x] = row
        return RepOperator(self.module, ring, self.margin.join(other.margin), table)

    def scale(self, r) -> RepOperator:
        ring = self.ring
        return RepOperator(self.module, ring, self.margin,
                           {x: {y: ring.mul(r, c) for y, c in row.items()}
                            for x, row in self.table.items()})

    def compose(self, other: RepOperator) -> RepOperator:
        """self after other; margins add."""
        table = {x: self.apply_vector(row) for x, row in other.table.items()}
        return RepOperator(self.module, self.ring, self.margin + other.margin, table)

    def window(self) -> tuple[Path, ...]:
        return self.module.window(self.margin)

    def is_zero_on_window(self) -> bool:
        return all(not self.apply(x) for x in self.window())

    def equal_on_window(self, other: RepOperator) -> tuple[bool, Path | None]:
        margin = self.margin.join(other.margin)
        window = self.module.window(margin)
        if not window:
            raise WindowTooSmall(f"margin {margin} exceeds cap {self.module.cap}")
        for x in window:
            if self.apply(x) != other.apply(x):
                return False, x
        return True, None


def _word_margin(word: NormalWord) -> Degree:
    raise_by = [max(a - b, 0) for a, b in zip(word.lam.degree, word.mu.degree)]
    return Degree(raise_by)


def word_operator(module: TruncatedModule, ring: Ring, word: NormalWord,
                  coeff=None) -> RepOperator:
    """Action of t_lam t_mu*: keep paths whose word starts with mu, shift
    off mu, then concatenate lam; drop anything past the cap."""
    cache_key = (ring.name, word.key())
    unit = module._op_cache.get(cache_key)
    if unit is None:
        g = module.graph
        lam, mu = word.lam, word.mu
        table: dict = {}
        for x in module.basis:
            if not mu.degree.le(x.degree):
                continue
            if segment(x, Degree.zero(g.rank), mu.degree) != mu:
                continue
            tail = segment(x, mu.degree, x.degree)
            y = compose(lam, tail)
            if y.degree.le(module.cap):
                table[x] = {y: ring.one()}
        unit = RepOperator(module, ring, _word_margin(word), table)
        module._op_cache[cache_key] = unit
    if coeff is None or coeff == ring.one():
        return unit
    return unit.scale(coeff)


def op_vertex(module: TruncatedModule, ring: Ring, v) -> RepOperator:
    from .kgraph import vertex_path
    p = vertex_path(module.graph, v) if isinstance(v, str) else v
    return word_operator(module, ring, NormalWord(p, p))


def op_path(module: TruncatedModule, ring: Ring, lam: Path) -> RepOperator:
    from .kgraph import vertex_path
    return word_operator(module, ring,
                         NormalWord(lam, vertex_path(module.graph, lam.source)))


def op_ghost(module: TruncatedModule, ring: Ring, mu: Path) -> RepOperator:
    from .kgraph import vertex_path
    return word_operator(module, ring,
                         NormalWord(vertex_path(module.graph, mu.source), mu))


def represent(module: TruncatedModule, ring: Ring, a: AlgebraElement) -> RepOperator:
    if a.graph is not module.graph:
        raise KGraphError("element over a different graph")
    out = RepOperator(module, ring, _zero_margin(module.graph), {})
    for w, c in a.terms.items():
        out = out + word_operator(module, ring, w, c)
    return out


@dataclass
class OracleVerdict:
    status: str
    cap: Degree
    witness: Path | None = None

    def __bool__(self) -> bool:
        return self.status == CONSISTENT


def default_cap(a: AlgebraElement, extra: Degree | None = None) -> Degree:
    g = a.graph
    degs = [w.lam.degree for w in a.terms] + [w.mu.degree for w in a.terms]
    cap = join_all(degs, g.rank)
    if extra is not None:
        cap = cap + extra
    return cap


def oracle_equal(a: AlgebraElement, b: AlgebraElement,
                 cap: Degree | None = None) -> OracleVerdict:
    """Compare two elements through their module actions on every basis
    path inside the common exact window."""
    if a.graph is not b.graph:
        raise KGraphError("elements over different graphs")
    if cap is None:
        margin = join_all((_word_margin(w) for w in
                           list(a.terms) + list(b.terms)), a.graph.rank)
        cap = default_cap(a) .join(default_cap(b)) + margin
    module = TruncatedModule(a.graph, cap)
    ra = represent(module, a.ring, a)
    rb = represent(module, b.ring, b)
    same, witness = ra.equal_on_window(rb)
    if same:
        return OracleVerdict(CONSISTENT, cap=Degree(cap))
    return OracleVerdict(DISTINGUISHED, cap=Degree(cap), witness=witness)
