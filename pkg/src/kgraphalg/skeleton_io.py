"""Line-oriented skeleton format (.kg) and DOT export.

Grammar, one declaration per line, `#` comments allowed:

    kgraph rank=K
    vertex NAME
    edge NAME : RANGE <- SOURCE color I
    square A.B ~ C.D

`A.B ~ C.D` states that the two-edge word A then B (A nearest the range)
equals C then D. Names may not contain whitespace or dots.
"""

from __future__ import annotations

from .kgraph import KGraph, KGraphError


class SkeletonParseError(KGraphError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def parse_kg(text: str) -> KGraph:
    rank = None
    vertices: list[str] = []
    edges: dict[str, tuple] = {}
    squares: list[tuple] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "kgraph":
            if rank is not None:
                raise SkeletonParseError(line_no, "duplicate kgraph header")
            if len(tokens) != 2 or not tokens[1].startswith("rank="):
                raise SkeletonParseError(line_no, "expected: kgraph rank=K")
            try:
                rank = int(tokens[1][len("rank="):])
            except ValueError:
                raise SkeletonParseError(line_no, f"bad rank {tokens[1]!r}") from None
        elif head == "vertex":
            if rank is None:
                raise SkeletonParseError(line_no, "declaration before kgraph header")
            if len(tokens) != 2:
                raise SkeletonParseError(line_no, "expected: vertex NAME")
            _check_name(line_no, tokens[1])
            vertices.append(tokens[1])
        elif head == "edge":
            if rank is None:
                raise SkeletonParseError(line_no, "declaration before kgraph header")
            # edge NAME : RANGE <- SOURCE color I
            if (len(tokens) != 8 or tokens[2] != ":" or tokens[4] != "<-"
                    or tokens[6] != "color"):
                raise SkeletonParseError(
                    line_no, "expected: edge NAME : RANGE <- SOURCE color I")
            name, rng, src = tokens[1], tokens[3], tokens[5]
            for n in (name, rng, src):
                _check_name(line_no, n)
            if name in edges:
                raise SkeletonParseError(line_no, f"duplicate edge {name!r}")
            try:
                color = int(tokens[7])
            except ValueError:
                raise SkeletonParseError(line_no, f"bad color {tokens[7]!r}") from None
            edges[name] = (color, rng, src)
        elif head == "square":
            if rank is None:
                raise SkeletonParseError(line_no, "declaration before kgraph header")
            if len(tokens) != 4 or tokens[2] != "~":
                raise SkeletonParseError(line_no, "expected: square A.B ~ C.D")
            lhs, rhs = tokens[1].split("."), tokens[3].split(".")
            if len(lhs) != 2 or len(rhs) != 2:
                raise SkeletonParseError(line_no, "each square side needs exactly two edges")
            squares.append((tuple(lhs), tuple(rhs)))
        else:
            raise SkeletonParseError(line_no, f"unknown declaration {head!r}")
    if rank is None:
        raise SkeletonParseError(0, "missing kgraph header")
    return KGraph(rank, vertices, edges, squares)


def _check_name(line_no: int, name: str) -> None:
    if "." in name or not name:
        raise SkeletonParseError(line_no, f"illegal name {name!r}")


def parse_kg_file(path) -> KGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_kg(fh.read())


def format_kg(g: KGraph) -> str:
    lines = [f"kgraph rank={g.rank}"]
    lines += [f"vertex {v}" for v in g.vertices]
    for name, e in sorted(g.edges.items()):
        lines.append(f"edge {name} : {e.range} <- {e.source} color {e.color}")
    for (a, b), (c, d) in sorted(g.squares):
        lines.append(f"square {a}.{b} ~ {c}.{d}")
    return "\n".join(lines) + "\n"


_EDGE_STYLES = ("solid", "dashed", "dotted", "bold")


def to_dot(g: KGraph, name: str = "skeleton") -> str:
    """DOT rendering of the skeleton; per-color edge styles, arrows drawn
    source -> range."""
    out = [f"digraph {name} {{"]
    for v in g.vertices:
        out.append(f'  "{v}";')
    for ename, e in sorted(g.edges.items()):
        style = _EDGE_STYLES[(e.color - 1) % len(_EDGE_STYLES)]
        out.append(f'  "{e.source}" -> "{e.range}" '
                   f'[label="{ename}", style={style}, colorscheme=dark28, '
                   f'color={(e.color - 1) % 8 + 1}];')
    out.append("}")
    return "\n".join(out) + "\n"
