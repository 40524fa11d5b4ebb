"""Finitely presented higher-rank graphs and their factorisation calculus.

A presentation is a k-colored multigraph (the skeleton) together with
commuting-square data: every composable two-edge word with distinct colors
is paired with the unique word traversing the other color first. Paths are
kept in a canonical form with edges grouped into ascending color blocks,
reading from the range; this is the color-block factorisation of the
underlying morphism and is unique once the presentation is valid.

All structures are immutable after validation and every operation is a
pure function, so shared concurrent reads are safe. Internal caches are
only populated with values that are deterministic in the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple

from .degrees import Degree, degrees_up_to


class KGraphError(Exception):
    pass


class NotComposable(KGraphError):
    pass


class DegreeOutOfRange(KGraphError):
    pass


class InvalidKGraph(KGraphError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid presentation: " + "; ".join(
            f"{v.kind}: {v.detail}" for v in report.violations[:4]))


class Edge(NamedTuple):
    color: int
    range: str
    source: str


# validation violation kinds
MALFORMED = "MALFORMED"
INCOMPLETE_SQUARES = "INCOMPLETE_SQUARES"
CUBE_INCONSISTENT = "CUBE_INCONSISTENT"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass
class ValidationReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


class KGraph:
    """A finite presentation of a row-finite k-graph.

    `squares` is a list of ((a, b), (c, d)) pairs meaning the two-edge word
    a.b (a nearest the range) equals c.d. Both orientations are entered
    into the swap table. Construction is permissive; call `validate` for
    the full axiom check, or `ensure_valid` to raise on a bad presentation.
    """

    def __init__(self, rank: int, vertices: Iterable[str],
                 edges: dict[str, tuple], squares: Iterable[tuple]):
        self.rank = int(rank)
        self.vertices = tuple(sorted(set(vertices)))
        self._vertex_set = frozenset(self.vertices)
        self.edges = {name: Edge(int(c), r, s)
                      for name, (c, r, s) in sorted(edges.items())}
        self.squares = tuple((tuple(lhs), tuple(rhs)) for lhs, rhs in squares)
        self.swap: dict[tuple[str, str], tuple[str, str]] = {}
        self._square_conflicts: list[tuple] = []
        for lhs, rhs in self.squares:
            for key, val in ((lhs, rhs), (rhs, lhs)):
                if key in self.swap and self.swap[key] != val:
                    self._square_conflicts.append(key)
                self.swap[key] = val
        by_rc: dict[tuple[str, int], list[str]] = {}
        by_range: dict[str, list[str]] = {}
        for name, e in self.edges.items():
            by_rc.setdefault((e.range, e.color), []).append(name)
            by_range.setdefault(e.range, []).append(name)
        self._edges_by_range_color = {k: tuple(v) for k, v in by_rc.items()}
        self._edges_by_range = {k: tuple(v) for k, v in by_range.items()}
        self._validation: ValidationReport | None = None
        self._path_cache: dict = {}
        self._segment_cache: dict = {}
        self._mce_cache: dict = {}

    # -- skeleton access -------------------------------------------------

    def color(self, edge: str) -> int:
        return self.edges[edge].color

    def erange(self, edge: str) -> str:
        return self.edges[edge].range

    def esource(self, edge: str) -> str:
        return self.edges[edge].source

    def edges_at(self, v: str, color: int | None = None) -> tuple[str, ...]:
        """Edge names with range v (vΛ^1), optionally of one color."""
        if color is None:
            return self._edges_by_range.get(v, ())
        return self._edges_by_range_color.get((v, color), ())

    def signature(self):
        """Structural identity, used for round-trip comparisons."""
        return (self.rank, self.vertices, tuple(sorted(self.edges.items())),
                frozenset(frozenset((lhs, rhs)) for lhs, rhs in self.squares))

    def __repr__(self) -> str:
        return (f"KGraph(rank={self.rank}, |V|={len(self.vertices)}, "
                f"|E|={len(self.edges)}, squares={len(self.squares)})")

    def ensure_valid(self) -> "KGraph":
        report = validate(self)
        if not report.ok:
            raise InvalidKGraph(report)
        return self


_NAME_BAD_CHARS = set(". \t")


def _name_ok(name: str) -> bool:
    return bool(name) and not (_NAME_BAD_CHARS & set(name))


def validate(g: KGraph) -> ValidationReport:
    """Full presentation check: skeleton sanity, square totality and
    bijectivity, endpoint compatibility, and (for rank >= 3) consistency
    of the two color-sorting routes on every tri-colored word."""
    if g._validation is not None:
        return g._validation
    bad: list[Violation] = []

    if g.rank < 1:
        bad.append(Violation(MALFORMED, f"rank must be >= 1, got {g.rank}"))
    for v in g.vertices:
        if not _name_ok(v):
            bad.append(Violation(MALFORMED, f"bad vertex name {v!r}"))
    for name, e in g.edges.items():
        if not _name_ok(name):
            bad.append(Violation(MALFORMED, f"bad edge name {name!r}"))
        if name in g._vertex_set:
            bad.append(Violation(MALFORMED, f"name {name!r} is both vertex and edge"))
        if not 1 <= e.color <= g.rank:
            bad.append(Violation(MALFORMED, f"edge {name}: color {e.color} not in 1..{g.rank}"))
        if e.range not in g._vertex_set:
            bad.append(Violation(MALFORMED, f"edge {name}: unknown range vertex {e.range!r}"))
        if e.source not in g._vertex_set:
            bad.append(Violation(MALFORMED, f"edge {name}: unknown source vertex {e.source!r}"))
    if bad:
        g._validation = ValidationReport(False, bad)
        return g._validation

    def composable(a: str, b: str) -> bool:
        return g.esource(a) == g.erange(b)

    seen: set[tuple[str, str]] = set()
    for lhs, rhs in g.squares:
        (a, b), (c, d) = lhs, rhs
        words = [w for w in (a, b, c, d) if w not in g.edges]
        if words:
            bad.append(Violation(MALFORMED, f"square {a}.{b} ~ {c}.{d}: unknown edge {words[0]!r}"))
            continue
        if g.color(a) == g.color(b):
            bad.append(Violation(INCOMPLETE_SQUARES,
                                 f"square {a}.{b} ~ {c}.{d}: sides must mix two colors"))
            continue
        if not (composable(a, b) and composable(c, d)):
            bad.append(Violation(INCOMPLETE_SQUARES,
                                 f"square {a}.{b} ~ {c}.{d}: side not composable"))
            continue
        if g.color(c) != g.color(b) or g.color(d) != g.color(a):
            bad.append(Violation(INCOMPLETE_SQUARES,
                                 f"square {a}.{b} ~ {c}.{d}: colors do not commute"))
        if g.erange(a) != g.erange(c) or g.esource(b) != g.esource(d):
            bad.append(Violation(INCOMPLETE_SQUARES,
                                 f"square {a}.{b} ~ {c}.{d}: endpoints disagree"))
        for key in (lhs, rhs):
            if key in seen:
                bad.append(Violation(INCOMPLETE_SQUARES,
                                     f"word {key[0]}.{key[1]} appears in more than one square"))
            seen.add(key)

    for a, ea in g.edges.items():
        for b in g.edges_at(ea.source):
            if g.color(b) == ea.color:
                continue
            if (a, b) not in g.swap:
                bad.append(Violation(INCOMPLETE_SQUARES,
                                     f"no square covers the word {a}.{b}"))

    if g.rank >= 3 and not bad:
        bad.extend(_check_cubes(g))

    g._validation = ValidationReport(not bad, bad)
    return g._validation


def _swap_at(g: KGraph, word: list[str], i: int) -> None:
    word[i], word[i + 1] = g.swap[(word[i], word[i + 1])]


def _check_cubes(g: KGraph) -> list[Violation]:
    # Two ways of reversing the color pattern (i,j,l) -> (l,j,i) must agree
    # on every composable word; otherwise the squares do not present a
    # k-graph even though they are total.
    bad = []
    for x in g.edges:
        i = g.color(x)
        for y in g.edges_at(g.esource(x)):
            j = g.color(y)
            if j <= i:
                continue
            for z in g.edges_at(g.esource(y)):
                color_l = g.color(z)
                if color_l <= j:
                    continue
                wa = [x, y, z]
                for pos in (1, 0, 1):
                    _swap_at(g, wa, pos)
                wb = [x, y, z]
                for pos in (0, 1, 0):
                    _swap_at(g, wb, pos)
                if wa != wb:
                    bad.append(Violation(
                        CUBE_INCONSISTENT,
                        f"word {x}.{y}.{z} sorts to both {wa} and {wb}"))
    return bad


class Path:
    """A morphism of the k-graph in canonical color-block form.

    Degree-0 paths are vertices and carry `base`; positive-degree paths
    carry the canonical edge word `edges`, listed range to source.
    """

    __slots__ = ("graph", "edges", "base", "degree", "range", "source")

    def __init__(self, graph: KGraph, edges: tuple[str, ...], base: str | None):
        self.graph = graph
        self.edges = edges
        self.base = base
        if edges:
            coords = [0] * graph.rank
            for e in edges:
                coords[graph.color(e) - 1] += 1
            self.degree = Degree(coords)
            self.range = graph.erange(edges[0])
            self.source = graph.esource(edges[-1])
        else:
            self.degree = Degree.zero(graph.rank)
            self.range = base
            self.source = base

    @property
    def key(self):
        return (self.degree, self.edges if self.edges else (self.base,))

    def is_vertex(self) -> bool:
        return not self.edges

    def __eq__(self, other) -> bool:
        return (isinstance(other, Path) and self.graph is other.graph
                and self.edges == other.edges and self.base == other.base)

    def __hash__(self) -> int:
        return hash((id(self.graph), self.edges, self.base))

    def __repr__(self) -> str:
        return self.base if self.is_vertex() else ".".join(self.edges)

    def extends(self, other: "Path") -> bool:
        """True when `other` is the initial segment of this path at its degree."""
        return (other.degree.le(self.degree)
                and segment(self, Degree.zero(self.graph.rank), other.degree) == other)


def vertex_path(g: KGraph, v: str) -> Path:
    if v not in g._vertex_set:
        raise KGraphError(f"unknown vertex {v!r}")
    return Path(g, (), v)


def _canonical_word(g: KGraph, word: list[str]) -> tuple[str, ...]:
    # Bubble the word into ascending color blocks; every adjacent swap is a
    # square application, so the morphism is unchanged and the inversion
    # count drops by one per step.
    i = 0
    while i + 1 < len(word):
        if g.color(word[i]) > g.color(word[i + 1]):
            try:
                _swap_at(g, word, i)
            except KeyError:
                raise InvalidKGraph(validate(g)) from None
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(word)


def path_from_edges(g: KGraph, edges: Iterable[str]) -> Path:
    """Build a path from a composable edge word (any color order)."""
    word = list(edges)
    if not word:
        raise KGraphError("empty edge word has no base vertex; use vertex_path")
    for e in word:
        if e not in g.edges:
            raise KGraphError(f"unknown edge {e!r}")
    for a, b in zip(word, word[1:]):
        if g.esource(a) != g.erange(b):
            raise NotComposable(f"{a} (source {g.esource(a)}) then {b} (range {g.erange(b)})")
    return Path(g, _canonical_word(g, word), None)


def compose(lam: Path, mu: Path) -> Path:
    """The composite path lam.mu; requires s(lam) = r(mu)."""
    if lam.graph is not mu.graph:
        raise KGraphError("paths from different graphs")
    if lam.source != mu.range:
        raise NotComposable(f"s({lam!r}) = {lam.source} but r({mu!r}) = {mu.range}")
    if lam.is_vertex():
        return mu
    if mu.is_vertex():
        return lam
    g = lam.graph
    return Path(g, _canonical_word(g, list(lam.edges + mu.edges)), None)


def _split(path: Path, m: Degree) -> tuple[Path, Path]:
    """The unique factorisation path = prefix.suffix with d(prefix) = m."""
    g = path.graph
    if not m.le(path.degree):
        raise DegreeOutOfRange(f"{m} exceeds d = {path.degree}")
    word = list(path.edges)
    prefix: list[str] = []
    for color in range(1, g.rank + 1):
        for _ in range(m[color - 1]):
            pos = next(i for i, e in enumerate(word) if g.color(e) == color)
            for j in range(pos, 0, -1):
                _swap_at(g, word, j - 1)
            prefix.append(word.pop(0))
    if prefix:
        pre = Path(g, tuple(prefix), None)
    else:
        pre = vertex_path(g, path.range)
    if word:
        suf = Path(g, tuple(word), None)
    else:
        suf = vertex_path(g, path.source)
    return pre, suf


def segment(path: Path, m: Degree, n: Degree) -> Path:
    """The factor path(m, n), for m <= n <= d(path)."""
    g = path.graph
    m, n = Degree(m), Degree(n)
    if not (m.le(n) and n.le(path.degree)):
        raise DegreeOutOfRange(f"need {m} <= {n} <= {path.degree}")
    cache = g._segment_cache
    ck = (path.key, m, n)
    hit = cache.get(ck)
    if hit is not None:
        return hit
    _, tail = _split(path, m)
    out, _ = _split(tail, n - m)
    cache[ck] = out
    return out


def shift(path: Path, n: Degree) -> Path:
    """The tail sigma^n(path) = path(n, d(path))."""
    return segment(path, n, path.degree)


def paths_from(g: KGraph, v: str, n: Degree) -> tuple[Path, ...]:
    """All paths with range v and degree n (vΛ^n), canonically sorted.

    Canonical words of degree n starting at v are exactly the composable
    color-block words, so depth-first extension along ascending colors
    enumerates each path once.
    """
    n = Degree(n)
    key = (v, n)
    hit = g._path_cache.get(key)
    if hit is not None:
        return hit
    if v not in g._vertex_set:
        raise KGraphError(f"unknown vertex {v!r}")
    if n == Degree.zero(g.rank):
        out: tuple[Path, ...] = (vertex_path(g, v),)
    else:
        color = next(i + 1 for i, c in enumerate(n) if c > 0)
        rest = n - Degree.basis(g.rank, color)
        found = []
        for e in g.edges_at(v, color):
            for tail in paths_from(g, g.esource(e), rest):
                found.append(Path(g, (e,) + tail.edges, None))
        out = tuple(sorted(found, key=lambda p: p.key))
    g._path_cache[key] = out
    return out


def paths_up_to(g: KGraph, v: str, bound: Degree):
    """All paths with range v and degree componentwise <= bound."""
    for n in degrees_up_to(bound):
        yield from paths_from(g, v, n)


def all_paths_up_to(g: KGraph, bound: Degree):
    for v in g.vertices:
        yield from paths_up_to(g, v, bound)


def sources(g: KGraph) -> tuple[str, ...]:
    """Vertices missing an edge of some color (vΛ^{e_i} empty)."""
    return tuple(v for v in g.vertices
                 if any(not g.edges_at(v, i) for i in range(1, g.rank + 1)))


def has_no_sources(g: KGraph) -> bool:
    return not sources(g)


def omega(k: int, n: Degree) -> KGraph:
    """The k-graph with vertex set {p <= n} and a unique morphism p -> q
    for every p <= q, i.e. degree map (p, q) -> q - p."""
    n = Degree(n)
    if len(n) != k:
        raise ValueError(f"bound {n} does not have rank {k}")

    def vname(p) -> str:
        return "-".join(str(c) for c in p)

    grid = [Degree(p) for p in product(*(range(c + 1) for c in n))]
    vertices = [vname(p) for p in grid]
    edges: dict[str, tuple] = {}
    for p in grid:
        for i in range(1, k + 1):
            q = p + Degree.basis(k, i)
            if q.le(n):
                edges[f"x{i}_{vname(p)}"] = (i, vname(p), vname(q))
    squares = []
    for p in grid:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                ei, ej = Degree.basis(k, i), Degree.basis(k, j)
                if (p + ei + ej).le(n):
                    squares.append(((f"x{i}_{vname(p)}", f"x{j}_{vname(p + ei)}"),
                                    (f"x{j}_{vname(p)}", f"x{i}_{vname(p + ej)}")))
    return KGraph(k, vertices, edges, squares)
