"""Command-line front end.

Paths on the command line are written as dotted edge words (`e.f`) or
`@v` for a vertex. Degree bounds are comma-separated (`--bound 2,2`).
Exit codes: 0 success, 1 property failure, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .degrees import Degree, parse_degree
from .kgraph import (InvalidKGraph, KGraph, KGraphError, Path, omega,
                     path_from_edges, paths_from, validate, vertex_path)
from .combinatorics import (aperiodicity_probe, ext, is_exhaustive,
                            lambda_min, mce)
from .skeleton_io import SkeletonParseError, format_kg, parse_kg_file, to_dot
from .tgraph import build_tlambda
from .algebra import (element_from_json, element_to_json, f_idempotent,
                      graded_component, degree_support)
from .pathrep import TruncatedModule
from .axioms import RepFamily, verify_cohn_axioms
from .kpbridge import HypothesisFailed, SImageFamily, uniqueness_harness, verify_kp_family
from . import steinberg
from .rings import ring_by_name
from .suite import acceptance_battery, graph_suite

OK, PROPERTY_FAILURE, INPUT_ERROR = 0, 1, 2


def _load_graph(path: str) -> KGraph:
    g = parse_kg_file(path)
    report = validate(g)
    if not report.ok:
        raise InvalidKGraph(report)
    return g


def _parse_path(g: KGraph, text: str) -> Path:
    if text.startswith("@"):
        return vertex_path(g, text[1:])
    return path_from_edges(g, text.split("."))


def _path_out(p: Path) -> str:
    return f"@{p.base}" if p.is_vertex() else ".".join(p.edges)


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _bound(args, g: KGraph, default=(2,)) -> Degree:
    if args.bound is not None:
        return parse_degree(args.bound, g.rank)
    return Degree(tuple(default) * g.rank if len(default) == 1 else default)


def cmd_validate(args) -> int:
    try:
        g = parse_kg_file(args.file)
    except SkeletonParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    report = validate(g)
    payload = {"ok": report.ok,
               "violations": [{"kind": v.kind, "detail": v.detail}
                              for v in report.violations]}
    _emit(args, payload,
          ["valid"] if report.ok else
          [f"{v.kind}: {v.detail}" for v in report.violations])
    return OK if report.ok else INPUT_ERROR


def cmd_paths(args) -> int:
    g = _load_graph(args.file)
    found = paths_from(g, args.vertex, parse_degree(args.degree, g.rank))
    payload = {"vertex": args.vertex, "degree": args.degree,
               "paths": [_path_out(p) for p in found]}
    _emit(args, payload, [_path_out(p) for p in found])
    return OK


def cmd_mce(args) -> int:
    g = _load_graph(args.file)
    out = mce(_parse_path(g, args.lam), _parse_path(g, args.mu))
    _emit(args, {"mce": [_path_out(p) for p in out]},
          [_path_out(p) for p in out])
    return OK


def cmd_min(args) -> int:
    g = _load_graph(args.file)
    pairs = lambda_min(_parse_path(g, args.lam), _parse_path(g, args.mu))
    payload = {"pairs": [[_path_out(a), _path_out(b)] for a, b in pairs]}
    _emit(args, payload, [f"{_path_out(a)}  {_path_out(b)}" for a, b in pairs])
    return OK


def cmd_ext(args) -> int:
    g = _load_graph(args.file)
    members = [_parse_path(g, t) for t in args.members]
    out = ext(_parse_path(g, args.lam), members)
    _emit(args, {"ext": [_path_out(p) for p in out]}, [_path_out(p) for p in out])
    return OK


def cmd_exhaustive(args) -> int:
    g = _load_graph(args.file)
    members = [_parse_path(g, t) for t in args.members]
    bound = parse_degree(args.bound, g.rank) if args.bound else None
    verdict = is_exhaustive(g, args.vertex, members, bound)
    payload = {"status": verdict.status,
               "witness": _path_out(verdict.witness) if verdict.witness else None,
               "bound": list(verdict.bound) if verdict.bound else None}
    _emit(args, payload, [verdict.status
                          + (f" witness {_path_out(verdict.witness)}"
                             if verdict.witness else "")])
    return OK


def cmd_aperiodic(args) -> int:
    g = _load_graph(args.file)
    report = aperiodicity_probe(g, _bound(args, g))
    payload = {
        "witnessed": [[_path_out(a), _path_out(b), _path_out(eta)]
                      for (a, b), eta in sorted(report.witnessed.items(),
                                                key=lambda kv: (kv[0][0].key, kv[0][1].key))],
        "unresolved": [[_path_out(a), _path_out(b)] for a, b in report.unresolved],
    }
    _emit(args, payload,
          [f"witnessed {len(report.witnessed)}, unresolved {len(report.unresolved)}"]
          + [f"UNRESOLVED {_path_out(a)} {_path_out(b)}" for a, b in report.unresolved])
    return OK


def cmd_tgraph(args) -> int:
    g = _load_graph(args.file)
    tl = build_tlambda(g)
    text = format_kg(tl.graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return OK


def cmd_mult(args) -> int:
    g = _load_graph(args.file)
    with open(args.a, encoding="utf-8") as fh:
        a = element_from_json(g, json.load(fh))
    with open(args.b, encoding="utf-8") as fh:
        b = element_from_json(g, json.load(fh), ring=a.ring)
    print(json.dumps(element_to_json(a * b), indent=2, sort_keys=True))
    return OK


def cmd_fproj(args) -> int:
    g = _load_graph(args.file)
    ring = ring_by_name(args.ring)
    print(json.dumps(element_to_json(f_idempotent(g, ring, args.vertex)),
                     indent=2, sort_keys=True))
    return OK


def cmd_grade(args) -> int:
    g = _load_graph(args.file)
    with open(args.element, encoding="utf-8") as fh:
        a = element_from_json(g, json.load(fh))
    if args.component:
        n = tuple(int(c) for c in args.component.split(","))
        print(json.dumps(element_to_json(graded_component(a, n)),
                         indent=2, sort_keys=True))
    else:
        print(json.dumps({"support": [list(n) for n in degree_support(a)]},
                         indent=2, sort_keys=True))
    return OK


def cmd_iso_check(args) -> int:
    g = _load_graph(args.file)
    ring = ring_by_name(args.ring)
    bound = _bound(args, g)
    tl = build_tlambda(g)
    fam = SImageFamily(tl, ring)
    ax = verify_cohn_axioms(fam, tl.graph, bound)
    kp = verify_kp_family(fam, tl.graph, stepstone_bound=bound.meet(Degree((1,) * g.rank)))
    passed = ax.ok and kp.ok
    payload = {"relations_ok": ax.ok, "relations_checked": ax.checked,
               "annihilation_ok": kp.ok,
               "live_vertices": sorted(kp.products),
               "pass": passed}
    _emit(args, payload, [f"relations: {'ok' if ax.ok else 'FAIL'}",
                          f"annihilation: {'ok' if kp.ok else 'FAIL'}"])
    return OK if passed else PROPERTY_FAILURE


def cmd_rep_check(args) -> int:
    g = _load_graph(args.file)
    ring = ring_by_name(args.ring)
    cap = parse_degree(args.cap, g.rank) if args.cap else Degree((3,) * g.rank)
    module = TruncatedModule(g, cap)
    fam = RepFamily(module, ring)
    bound = _bound(args, g, default=(1,))
    ax = verify_cohn_axioms(fam, g, bound)
    try:
        uniq = uniqueness_harness(fam, g, ring, bound)
        hypo_ok, independent = True, uniq.independent
    except HypothesisFailed as exc:
        hypo_ok, independent = False, None
        print(str(exc), file=sys.stderr)
    passed = ax.ok and hypo_ok and independent is not False
    payload = {"cap": list(cap), "relations_ok": ax.ok,
               "hypotheses_ok": hypo_ok, "independent": independent,
               "pass": passed}
    _emit(args, payload, [f"cap {cap}: relations {'ok' if ax.ok else 'FAIL'}, "
                          f"hypotheses {'ok' if hypo_ok else 'FAIL'}, "
                          f"independent {independent}"])
    return OK if passed else PROPERTY_FAILURE


def cmd_steinberg(args) -> int:
    g = _load_graph(args.file)
    if args.action != "mult":
        print(f"unknown steinberg action {args.action!r}", file=sys.stderr)
        return INPUT_ERROR
    with open(args.a, encoding="utf-8") as fh:
        a = steinberg.element_from_json(g, json.load(fh))
    with open(args.b, encoding="utf-8") as fh:
        b = steinberg.element_from_json(g, json.load(fh), ring=a.ring)
    print(steinberg.element_to_json_str(steinberg.convolve(a, b)))
    return OK


def cmd_suite(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("KGRAPH_SUITE_SEED", "0"))
    if args.file is None:
        results = acceptance_battery()
        payload = {"results": [{"criterion": r.number, "name": r.name,
                                "pass": r.passed, "detail": r.detail}
                               for r in results]}
        _emit(args, payload, [r.line() for r in results])
        return OK if all(r.passed for r in results) else PROPERTY_FAILURE
    g = _load_graph(args.file)
    ring = ring_by_name(args.ring)
    checks = graph_suite(g, ring, _bound(args, g), seed=seed)
    payload = {"results": [{"name": c.name, "pass": c.passed, "detail": c.detail}
                           for c in checks]}
    _emit(args, payload, [c.line() for c in checks])
    return OK if all(c.passed for c in checks) else PROPERTY_FAILURE


def cmd_dot(args) -> int:
    g = _load_graph(args.file)
    text = to_dot(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return OK


def cmd_omega(args) -> int:
    shape = parse_degree(args.shape)
    g = omega(len(shape), shape)
    text = format_kg(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgraphalg",
        description="Path algebras of finitely presented higher-rank graphs.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check a skeleton file")
    p.add_argument("file")

    p = add("paths", cmd_paths, help="enumerate vΛ^n")
    p.add_argument("file")
    p.add_argument("-v", "--vertex", required=True)
    p.add_argument("-n", "--degree", required=True)

    for name, fn in (("mce", cmd_mce), ("min", cmd_min)):
        p = add(name, fn, help=f"{name} of two paths")
        p.add_argument("file")
        p.add_argument("lam")
        p.add_argument("mu")

    p = add("ext", cmd_ext, help="complements of a path against a set")
    p.add_argument("file")
    p.add_argument("lam")
    p.add_argument("members", nargs="+")

    p = add("exhaustive", cmd_exhaustive, help="decide exhaustiveness of a set")
    p.add_argument("file")
    p.add_argument("-v", "--vertex", required=True)
    p.add_argument("-E", "--members", nargs="+", default=[])
    p.add_argument("--bound")

    p = add("aperiodic", cmd_aperiodic, help="bounded aperiodicity probe")
    p.add_argument("file")
    p.add_argument("--bound")

    p = add("tgraph", cmd_tgraph, help="build the doubled graph")
    p.add_argument("action", choices=("build",))
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("mult", cmd_mult, help="multiply two JSON elements")
    p.add_argument("file")
    p.add_argument("a")
    p.add_argument("b")

    p = add("fproj", cmd_fproj, help="boundary idempotent of a vertex")
    p.add_argument("file")
    p.add_argument("-v", "--vertex", required=True)
    p.add_argument("--ring", default="Z")

    p = add("grade", cmd_grade, help="graded component or degree support")
    p.add_argument("file")
    p.add_argument("element")
    p.add_argument("-n", "--component")

    p = add("iso-check", cmd_iso_check, help="doubled-graph image verification")
    p.add_argument("file")
    p.add_argument("--bound")
    p.add_argument("--ring", default="Z")

    p = add("rep-check", cmd_rep_check, help="module representation verification")
    p.add_argument("file")
    p.add_argument("--cap")
    p.add_argument("--bound")
    p.add_argument("--ring", default="Z")

    p = add("steinberg", cmd_steinberg, help="groupoid-model operations")
    p.add_argument("action", choices=("mult",))
    p.add_argument("file")
    p.add_argument("a")
    p.add_argument("b")

    p = add("suite", cmd_suite,
            help="property battery (fixed acceptance battery without a file)")
    p.add_argument("file", nargs="?")
    p.add_argument("--ring", default="Z")
    p.add_argument("--bound")
    p.add_argument("--seed", type=int)

    p = add("dot", cmd_dot, help="DOT export of the skeleton")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("omega", cmd_omega, help="emit a grid graph presentation")
    p.add_argument("shape", help="top corner, e.g. 1,2")
    p.add_argument("-o", "--output")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
    except SkeletonParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = INPUT_ERROR
    except InvalidKGraph as exc:
        kinds = ", ".join(sorted(exc.report.kinds()))
        print(f"invalid presentation ({kinds})", file=sys.stderr)
        for v in exc.report.violations:
            print(f"  {v.kind}: {v.detail}", file=sys.stderr)
        code = INPUT_ERROR
    except (KGraphError, FileNotFoundError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = INPUT_ERROR
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
