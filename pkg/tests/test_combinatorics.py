import pytest

from kgraphalg import (Degree, KGraphError, aperiodicity_probe, compose, ext,
                       i_of, is_exhaustive, l_of, lambda_min, mce,
                       path_from_edges, paths_up_to, vertex_path)
from kgraphalg.combinatorics import EXHAUSTIVE, NOT_EXHAUSTIVE, UNKNOWN_UP_TO_BOUND


def _p(g, *edges):
    return path_from_edges(g, list(edges))


# -- MCE and minimal pairs -----------------------------------------------------

def test_mce_lambda2(g_lambda2):
    e, f = _p(g_lambda2, "e"), _p(g_lambda2, "f")
    assert [t.edges for t in mce(e, f)] == [("e", "f")]


def test_mce_reflexive(g_lambda2):
    lam = _p(g_lambda2, "e", "f")
    assert mce(lam, lam) == (lam,)


def test_mce_lambda1_empty(g_lambda1):
    assert mce(_p(g_lambda1, "e"), _p(g_lambda1, "f")) == ()


def test_mce_symmetry(g_twist, bound22):
    pool = list(paths_up_to(g_twist, "v", Degree((1, 1))))
    for lam in pool:
        for mu in pool:
            assert set(mce(lam, mu)) == set(mce(mu, lam))
            swapped = {(b, a) for a, b in lambda_min(mu, lam)}
            assert set(lambda_min(lam, mu)) == swapped


def test_lambda_min_lambda2(g_lambda2):
    e, f = _p(g_lambda2, "e"), _p(g_lambda2, "f")
    assert lambda_min(e, f) == ((f, e),)


def test_lambda_min_reflexive(g_lambda2):
    lam = _p(g_lambda2, "e")
    s = vertex_path(g_lambda2, "v")
    assert lambda_min(lam, lam) == ((s, lam),) or lambda_min(lam, lam) == ((s, s),)
    lamp, mup = lambda_min(lam, lam)[0]
    assert lamp.is_vertex() and mup.is_vertex()


def test_lambda_min_glues(g_twist):
    pool = list(paths_up_to(g_twist, "v", Degree((1, 1))))
    for lam in pool:
        for mu in pool:
            for lamp, mup in lambda_min(lam, mu):
                assert compose(lam, lamp) == compose(mu, mup)


# -- Ext, I, L ------------------------------------------------------------------

def test_ext_examples(g_lambda2):
    e, f = _p(g_lambda2, "e"), _p(g_lambda2, "f")
    v = vertex_path(g_lambda2, "v")
    assert ext(e, [f]) == (f,)
    assert ext(e, []) == ()
    assert ext(v, [e]) == (e,)


def test_i_of_l_of(g_lambda2):
    e, f = _p(g_lambda2, "e"), _p(g_lambda2, "f")
    ef = _p(g_lambda2, "e", "f")
    v = vertex_path(g_lambda2, "v")
    assert set(i_of([ef])) == {e, f}
    assert i_of([v]) == ()
    assert l_of([ef, e]) == 2
    assert l_of([]) == 0


def test_length_drops_along_ext(g_twist):
    # the induction step: L(Ext(e; E)) < L(E) for an initial edge of an
    # exhaustive E avoiding the vertex
    g = g_twist
    e1, f = _p(g, "e1"), _p(g, "f")
    members = [_p(g, "e1", "f"), _p(g, "e2", "f")]
    verdict = is_exhaustive(g, "v", members)
    assert verdict.status == EXHAUSTIVE
    for edge in i_of(members):
        extended = ext(edge, members)
        assert extended
        assert l_of(extended) < l_of(members)


# -- exhaustive verdicts ---------------------------------------------------------

def test_exhaustive_single_edge(g_lambda2):
    verdict = is_exhaustive(g_lambda2, "v", [_p(g_lambda2, "e")])
    assert verdict.status == EXHAUSTIVE
    assert verdict.bound == Degree((1, 0))


def test_vertex_member_trivially_exhaustive(g_lambda1):
    verdict = is_exhaustive(g_lambda1, "v", [vertex_path(g_lambda1, "v")])
    assert verdict.status == EXHAUSTIVE


def test_empty_set_not_exhaustive(g_lambda2):
    verdict = is_exhaustive(g_lambda2, "v", [])
    assert verdict.status == NOT_EXHAUSTIVE
    assert verdict.witness == vertex_path(g_lambda2, "v")


def test_wrong_range_rejected(g_lambda1):
    with pytest.raises(KGraphError):
        is_exhaustive(g_lambda1, "w", [_p(g_lambda1, "e")])


def test_tlambda_dropped_live_edge_witness(tl_lambda2):
    tg = tl_lambda2.graph
    members = [_p(tg, x) for x in ("a:f", "b:e", "b:f")]
    verdict = is_exhaustive(tg, "a:v", members, Degree((2, 2)))
    assert verdict.status == NOT_EXHAUSTIVE
    assert verdict.witness.edges == ("a:e", "b:e")
    assert verdict.witness.degree == Degree((2, 0))


def test_tlambda_level_one_scan_is_inconclusive(tl_lambda2):
    # the same dropped set passes every check at degrees <= (1,1): the
    # refutation genuinely needs the doubled bound
    tg = tl_lambda2.graph
    members = [_p(tg, x) for x in ("a:f", "b:e", "b:f")]
    verdict = is_exhaustive(tg, "a:v", members, Degree((1, 1)))
    assert verdict.status == UNKNOWN_UP_TO_BOUND


def test_tlambda_full_edge_set_exhaustive(tl_lambda2):
    tg = tl_lambda2.graph
    members = [_p(tg, x) for x in tg.edges_at("a:v")]
    assert is_exhaustive(tg, "a:v", members).status == EXHAUSTIVE


# -- aperiodicity probe ----------------------------------------------------------

def test_lambda2_probe_unresolved(g_lambda2, bound22):
    report = aperiodicity_probe(g_lambda2, bound22)
    assert not report.witnessed
    e, f = _p(g_lambda2, "e"), _p(g_lambda2, "f")
    assert any({lam, mu} == {e, f} for lam, mu in report.unresolved)


def test_tlambda_probe_all_witnessed(tl_lambda2, bound22):
    report = aperiodicity_probe(tl_lambda2.graph, bound22)
    assert report.all_witnessed
    assert report.witnessed


def test_omega_pair_witnessed(g_omega12, bound22):
    # two morphisms into (1,1) separated by extending to the corner
    lam = _p(g_omega12, "x1_0-0", "x2_1-0")   # (0,0) <- (1,1)
    mu = _p(g_omega12, "x2_1-0")              # (1,0) <- (1,1)
    report = aperiodicity_probe(g_omega12, bound22)
    eta = report.witnessed.get((lam, mu)) or report.witnessed.get((mu, lam))
    assert eta is not None
    assert not mce(compose(lam, eta), compose(mu, eta))


def test_twist_probe_witnesses_checkable(g_twist):
    report = aperiodicity_probe(g_twist, Degree((1, 1)))
    for (lam, mu), eta in report.witnessed.items():
        assert not mce(compose(lam, eta), compose(mu, eta))
