"""Property batteries: the pinned acceptance criteria and a generic
per-graph suite for the CLI.

Every criterion is exact (symbolic equality or integer counts); there are
no numeric tolerances to calibrate. The default scope is degree bound
(2,2) over the integers with spot checks over the rationals and Z/4.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .degrees import Degree, degrees_up_to
from .kgraph import (KGraph, compose, has_no_sources, path_from_edges,
                     paths_up_to, segment, sources, validate)
from .combinatorics import aperiodicity_probe
from .algebra import (AlgebraElement, degree_support, f_idempotent, gen,
                      gen_star, word_element)
from .pathrep import TruncatedModule, represent
from .axioms import RepFamily, SteinbergFamily, SymbolicFamily, verify_cohn_axioms
from .kpbridge import (HypothesisFailed, SImageFamily, pi, uniqueness_harness,
                       verify_kp_family)
from .tgraph import build_tlambda, tlambda_exhaustive_check
from .steinberg import (convolve, convolve_pointwise, effectiveness_probe,
                        phi_q, truncated_triples)
from .rings import IntegersMod, QQ, Ring, ZZ
from .standard import lambda_2, omega_2_12


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} ({self.name}): {status} [{self.detail}]"


BOUND = Degree((2, 2))


def _spanning_words(g: KGraph, ring: Ring, bound: Degree) -> list[AlgebraElement]:
    by_source: dict[str, list] = {}
    for v in g.vertices:
        for p in paths_up_to(g, v, bound):
            by_source.setdefault(p.source, []).append(p)
    words = []
    for src in sorted(by_source):
        bucket = sorted(by_source[src], key=lambda p: p.key)
        for lam in bucket:
            for mu in bucket:
                words.append(word_element(g, ring, lam, mu))
    return words


def criterion_1() -> CriterionResult:
    """Defining relations hold exhaustively for the symbolic family."""
    failures = 0
    checked = 0
    g2 = lambda_2()
    for g in (g2, omega_2_12()):
        rep = verify_cohn_axioms(SymbolicFamily(g, ZZ), g, BOUND)
        failures += len(rep.failures)
        checked += rep.checked
    for ring in (QQ, IntegersMod(4)):
        rep = verify_cohn_axioms(SymbolicFamily(g2, ring), g2, Degree((1, 1)))
        failures += len(rep.failures)
        checked += rep.checked
    return CriterionResult(1, "axiom suite", failures == 0,
                           f"{checked} relations, {failures} failures")


def criterion_2() -> CriterionResult:
    """The module action is multiplicative on every spanning-word pair."""
    g = lambda_2()
    words = _spanning_words(g, ZZ, BOUND)
    module = TruncatedModule(g, Degree((6, 6)))
    reps = [represent(module, ZZ, w) for w in words]
    bad = 0
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            lhs = represent(module, ZZ, a * b)
            same, _ = lhs.equal_on_window(reps[i].compose(reps[j]))
            if not same:
                bad += 1
    return CriterionResult(2, "path-representation oracle", bad == 0,
                           f"{len(words)}^2 pairs, {bad} discrepancies")


def criterion_3() -> CriterionResult:
    """Scaled vertex units and edge products act nontrivially."""
    cases = ((ZZ, (1, -1, 2)), (IntegersMod(4), (1, 2)))
    bad = []
    for ring, scalars in cases:
        for g in (lambda_2(), omega_2_12()):
            module = TruncatedModule(g, Degree((2, 2)))
            for v in g.vertices:
                tv = gen(g, ring, v)
                prod = tv - f_idempotent(g, ring, v)
                for r in scalars:
                    rr = ring.coerce(r)
                    if represent(module, ring, tv.scale(rr)).is_zero_on_window():
                        bad.append((ring.name, v, r, "vertex"))
                    if represent(module, ring, prod.scale(rr)).is_zero_on_window():
                        bad.append((ring.name, v, r, "product"))
    return CriterionResult(3, "nondegeneracy", not bad,
                           f"{len(bad)} vanishing images" if bad else
                           "all scaled images nonzero")


def _f_identities(g: KGraph, ring: Ring, bound: Degree) -> list[str]:
    bad = []
    f_of = {v: f_idempotent(g, ring, v) for v in g.vertices}
    t_of = {v: gen(g, ring, v) for v in g.vertices}
    for v in g.vertices:
        fv, tv = f_of[v], t_of[v]
        if fv * fv != fv:
            bad.append(f"F[{v}] not idempotent")
        if (tv - fv) * (tv - fv) != tv - fv:
            bad.append(f"t[{v}]-F[{v}] not idempotent")
        if tv * fv != fv or fv * tv != fv:
            bad.append(f"t[{v}] F[{v}] != F[{v}]")
        for w in g.vertices:
            if w == v:
                continue
            if not (f_of[w] * fv).is_zero() or not (t_of[w] * fv).is_zero():
                bad.append(f"F/t at {w} against F[{v}] nonzero")
        for lam in paths_up_to(g, v, bound):
            if lam.is_vertex():
                continue
            tl = gen(g, ring, lam)
            if fv * tl != tl:
                bad.append(f"F[{v}] t[{lam!r}] != t[{lam!r}]")
            if gen_star(g, ring, lam) * fv != gen_star(g, ring, lam):
                bad.append(f"t*[{lam!r}] F[{v}] != t*[{lam!r}]")
    return bad


def criterion_4() -> CriterionResult:
    """Boundary idempotent identities, plus edge-order independence."""
    g2 = lambda_2()
    graphs = [(g2, ZZ), (build_tlambda(g2).graph, ZZ), (g2, IntegersMod(4))]
    bad: list[str] = []
    for g, ring in graphs:
        bad.extend(_f_identities(g, ring, BOUND))
        for v in g.vertices:
            edges = g.edges_at(v)
            if len(edges) > 4:
                continue
            base = f_idempotent(g, ring, v)
            for order in permutations(edges):
                if f_idempotent(g, ring, v, order) != base:
                    bad.append(f"edge order changes F[{v}]")
    return CriterionResult(4, "F-identity suite", not bad,
                           "; ".join(bad) if bad else "all identities hold")


def criterion_5() -> CriterionResult:
    """Doubled-graph structure and its exhaustive-set rigidity."""
    g = lambda_2()
    tl = build_tlambda(g)
    problems = []
    if not validate(tl.graph).ok:
        problems.append("doubled graph invalid")
    if sources(tl.graph) != ("b:v",):
        problems.append(f"sources {sources(tl.graph)}")
    check = tlambda_exhaustive_check(tl, "v")
    if not check.full_verdict:
        problems.append("full edge set not certified exhaustive")
    if not check.ok:
        problems.append("some proper subset not refuted")
    dropped_alpha = next((v for names, v in check.subsets
                          if set(names) == {"a:f", "b:e", "b:f"}), None)
    if dropped_alpha is None or dropped_alpha.witness is None or \
            dropped_alpha.witness.key != (Degree((2, 0)), ("a:e", "b:e")):
        problems.append("missing witness b(ee) for the dropped live edge")
    return CriterionResult(5, "doubled-graph structure", not problems,
                           "; ".join(problems) if problems else
                           f"{len(check.subsets)} proper subsets refuted")


def criterion_6() -> CriterionResult:
    """Generator images: relations, annihilation, reconstruction, grading."""
    g = lambda_2()
    tl = build_tlambda(g)
    fam = SImageFamily(tl, ZZ)
    problems = []
    ax = verify_cohn_axioms(fam, tl.graph, BOUND)
    if not ax.ok:
        problems.append(f"{len(ax.failures)} relation failures")
    kp = verify_kp_family(fam, tl.graph, stepstone_bound=Degree((1, 1)))
    if not kp.ok:
        problems.append("edge annihilation fails")
    for v in g.vertices:
        for lam in paths_up_to(g, v, BOUND):
            lhs = gen(g, ZZ, lam)
            if lhs != fam.path(tl.alpha(lam)) + fam.path(tl.beta(lam)):
                problems.append(f"t[{lam!r}] not reconstructed")
            star = gen_star(g, ZZ, lam)
            if star != fam.ghost(tl.alpha(lam)) + fam.ghost(tl.beta(lam)):
                problems.append(f"t*[{lam!r}] not reconstructed")
    pairs = 0
    for v in tl.graph.vertices:
        for tau in paths_up_to(tl.graph, v, BOUND):
            for omega in paths_up_to(tl.graph, v, BOUND):
                if tau.source != omega.source:
                    continue
                img = pi(tl, ZZ, [(1, tau, omega)])
                weight = tuple(a - b for a, b in zip(tau.degree, omega.degree))
                if any(wt != weight for wt in degree_support(img)):
                    problems.append(f"graded image of ({tau!r},{omega!r}) leaks")
                pairs += 1
    return CriterionResult(6, "isomorphism suite", not problems,
                           "; ".join(problems) if problems else
                           f"annihilation zero, {pairs} graded words")


def criterion_7() -> CriterionResult:
    """Injectivity evidence for both concrete models, over Z and Q."""
    g = lambda_2()
    problems = []
    for ring in (ZZ, QQ):
        rep_fam = RepFamily(TruncatedModule(g, Degree((4, 4))), ring)
        st_fam = SteinbergFamily(g, ring)
        for label, fam in (("module", rep_fam), ("groupoid", st_fam)):
            try:
                report = uniqueness_harness(fam, g, ring, BOUND)
            except HypothesisFailed as exc:
                problems.append(f"{label}/{ring.name}: {exc}")
                continue
            if report.independent is not True:
                problems.append(f"{label}/{ring.name}: dependent images")
    return CriterionResult(7, "uniqueness harness", not problems,
                           "; ".join(problems) if problems else
                           "hypotheses and independence hold for both models")


def criterion_8() -> CriterionResult:
    """Groupoid model: multiplicativity, pointwise convolution, unions,
    effectiveness."""
    g = lambda_2()
    words = _spanning_words(g, ZZ, BOUND)
    images = [phi_q(ZZ, w) for w in words]
    problems = []
    bad_mult = 0
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if phi_q(ZZ, a * b) != convolve(images[i], images[j]):
                bad_mult += 1
    if bad_mult:
        problems.append(f"{bad_mult} non-multiplicative pairs")
    triples = list(truncated_triples(g, Degree((2, 2))))
    rng = random.Random(11)
    for _ in range(40):
        fa = images[rng.randrange(len(images))]
        fb = images[rng.randrange(len(images))]
        conv = convolve(fa, fb)
        if any(conv.evaluate(*t) != convolve_pointwise(fa, fb, *t) for t in triples):
            problems.append("pointwise convolution disagrees")
            break
    from .steinberg import Bisection, SteinbergElement, union_to_span
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    ef = compose(e, f)
    union = union_to_span(ZZ, g, [Bisection(e, e), Bisection(f, f)])
    incl_excl = (SteinbergElement.indicator(ZZ, Bisection(e, e))
                 + SteinbergElement.indicator(ZZ, Bisection(f, f))
                 - SteinbergElement.indicator(ZZ, Bisection(ef, ef)))
    if union != incl_excl:
        problems.append("union indicator differs from inclusion-exclusion")
    for graph in (g, build_tlambda(g).graph):
        eff = effectiveness_probe(graph, BOUND)
        if not eff.ok:
            problems.append(f"effectiveness violations on {graph!r}")
    return CriterionResult(8, "groupoid model suite", not problems,
                           "; ".join(problems) if problems else
                           f"{len(words)}^2 pairs multiplicative, unions and "
                           f"effectiveness confirmed")


def criterion_9() -> CriterionResult:
    """Aperiodicity classification of the two canonical graphs."""
    g = lambda_2()
    tl = build_tlambda(g)
    probe_t = aperiodicity_probe(tl.graph, BOUND)
    probe_l = aperiodicity_probe(g, BOUND)
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    pair_flagged = any({lam, mu} == {e, f} for lam, mu in probe_l.unresolved)
    passed = probe_t.all_witnessed and pair_flagged
    return CriterionResult(
        9, "aperiodicity probe", passed,
        f"doubled graph {len(probe_t.witnessed)} witnessed / "
        f"{len(probe_t.unresolved)} unresolved; loop pair flagged: {pair_flagged}")


def acceptance_battery() -> list[CriterionResult]:
    return [criterion_1(), criterion_2(), criterion_3(), criterion_4(),
            criterion_5(), criterion_6(), criterion_7(), criterion_8(),
            criterion_9()]


# -- generic per-graph battery ------------------------------------------------

@dataclass
class SuiteCheck:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status}" + (f" [{self.detail}]" if self.detail else "")


def graph_suite(g: KGraph, ring: Ring, bound: Degree,
                seed: int = 0) -> list[SuiteCheck]:
    """All properties that make sense for one presentation: validation,
    factorisation round trips, symbolic relations, module homomorphism,
    nondegeneracy, groupoid multiplicativity, and (without sources) the
    doubled-graph battery."""
    checks = []
    rng = random.Random(seed)
    report = validate(g)
    checks.append(SuiteCheck("presentation valid", report.ok,
                             "; ".join(v.detail for v in report.violations[:3])))
    if not report.ok:
        return checks

    pool = [p for v in g.vertices for p in paths_up_to(g, v, bound)]
    round_trip_ok = True
    for lam in pool:
        cuts = list(degrees_up_to(lam.degree))
        for m in cuts:
            for n in cuts:
                if not (m.le(n) and n.le(lam.degree)):
                    continue
                parts = compose(segment(lam, Degree.zero(g.rank), m),
                                compose(segment(lam, m, n), segment(lam, n, lam.degree)))
                if parts != lam:
                    round_trip_ok = False
    checks.append(SuiteCheck("factorisation round trip", round_trip_ok,
                             f"{len(pool)} paths"))

    ax = verify_cohn_axioms(SymbolicFamily(g, ring), g, bound)
    checks.append(SuiteCheck("symbolic relations", ax.ok, f"{ax.checked} checked"))

    module = TruncatedModule(g, bound + bound + bound)
    words = _spanning_words(g, ring, bound)
    sample = words if len(words) <= 40 else rng.sample(words, 40)
    hom_ok = True
    for a in sample:
        for b in sample[:20]:
            lhs = represent(module, ring, a * b)
            rhs = represent(module, ring, a).compose(represent(module, ring, b))
            same, _ = lhs.equal_on_window(rhs)
            hom_ok = hom_ok and same
    checks.append(SuiteCheck("module action multiplicative", hom_ok,
                             f"{len(sample)} words sampled"))

    nondeg_ok = True
    for v in g.vertices:
        tv = gen(g, ring, v)
        prod = tv - f_idempotent(g, ring, v)
        for r in ring.nonzero_samples():
            if represent(module, ring, tv.scale(r)).is_zero_on_window():
                nondeg_ok = False
            if represent(module, ring, prod.scale(r)).is_zero_on_window():
                nondeg_ok = False
    checks.append(SuiteCheck("nondegeneracy", nondeg_ok))

    st_ok = True
    for a in sample[:15]:
        for b in sample[:15]:
            if phi_q(ring, a * b) != convolve(phi_q(ring, a), phi_q(ring, b)):
                st_ok = False
    checks.append(SuiteCheck("groupoid model multiplicative", st_ok))
    eff = effectiveness_probe(g, bound)
    checks.append(SuiteCheck("effectiveness probe", eff.ok, f"{eff.checked} sets"))

    probe = aperiodicity_probe(g, bound)
    checks.append(SuiteCheck(
        "aperiodicity probe (informational)", True,
        f"{len(probe.witnessed)} witnessed, {len(probe.unresolved)} unresolved"))

    if has_no_sources(g):
        tl = build_tlambda(g)
        checks.append(SuiteCheck("doubled graph valid", validate(tl.graph).ok))
        fam = SImageFamily(tl, ring)
        kp = verify_kp_family(fam, tl.graph)
        checks.append(SuiteCheck("doubled-graph annihilation", kp.ok,
                                 f"{len(kp.products)} live vertices"))
        if ring.name in ("Z", "Q"):
            try:
                u = uniqueness_harness(RepFamily(module, ring), g, ring, bound)
                checks.append(SuiteCheck("uniqueness harness", bool(u.ok),
                                         f"{u.words} words"))
            except HypothesisFailed as exc:
                checks.append(SuiteCheck("uniqueness harness", False, str(exc)))
    return checks
