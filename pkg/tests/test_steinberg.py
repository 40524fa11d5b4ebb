import pytest

from kgraphalg import (Degree, KGraphError, compose, gen, gen_star,
                       f_idempotent, paths_up_to, path_from_edges,
                       vertex_path, word_element)
from kgraphalg.steinberg import (Bisection, SteinbergElement,
                                 bisection_product, bisection_from_json,
                                 bisection_to_json, convolve,
                                 convolve_pointwise, effectiveness_probe,
                                 element_from_json, element_to_json,
                                 is_triple, phi_q, truncated_triples,
                                 union_to_span)
from kgraphalg.rings import QQ, ZZ


def _b(g, lam_edges, mu_edges, removed=()):
    lam = path_from_edges(g, lam_edges) if lam_edges else vertex_path(g, "v")
    mu = path_from_edges(g, mu_edges) if mu_edges else vertex_path(g, "v")
    rem = [path_from_edges(g, r) for r in removed]
    return Bisection(lam, mu, rem)


# -- bisections ----------------------------------------------------------------

def test_requires_common_source(g_lambda1):
    e = path_from_edges(g_lambda1, ["e"])
    with pytest.raises(KGraphError):
        Bisection(e, vertex_path(g_lambda1, "v"))


def test_removed_set_normalized_to_antichain(g_lambda2):
    bis = _b(g_lambda2, ["e"], ["e"], removed=[["e"], ["e", "e"]])
    assert {nu.edges for nu in bis.removed} == {("e",)}


def test_emptiness(g_lambda2):
    v = vertex_path(g_lambda2, "v")
    assert Bisection(v, v, [v]).is_empty()
    assert not _b(g_lambda2, ["e"], ["e"]).is_empty()


def test_membership(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    ef = compose(e, f)
    bis = Bisection(e, f)
    assert bis.contains(e, (1, -1), f)
    assert bis.contains(ef, (1, -1), compose(f, f))
    assert not bis.contains(e, (1, -1), e)
    assert not bis.contains(f, (-1, 1), e)
    carved = Bisection(e, f, [f])
    assert carved.contains(e, (1, -1), f)
    assert not carved.contains(ef, (1, -1), compose(f, f))


def test_canonical_triple_member(g_lambda2):
    bis = _b(g_lambda2, ["e"], ["f"], removed=[["e"]])
    assert bis.contains(*bis.canonical_triple())


# -- products ------------------------------------------------------------------

def test_product_glue_through_units(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    v = vertex_path(g, "v")
    (piece,) = bisection_product(Bisection(e, v), Bisection(v, f))
    assert piece == Bisection(e, f)


def test_product_routes_through_minimal_pairs(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    v = vertex_path(g, "v")
    (piece,) = bisection_product(Bisection(v, e), Bisection(f, v))
    assert piece == Bisection(f, e)


def test_unit_idempotent(g_lambda2):
    v = vertex_path(g_lambda2, "v")
    unit = Bisection(v, v)
    assert bisection_product(unit, unit) == [unit]


def test_product_pushes_removals(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    v = vertex_path(g, "v")
    u = Bisection(v, v, [e])
    (piece,) = bisection_product(u, Bisection(v, e))
    assert piece.lam == v and piece.mu == e
    assert {nu.edges for nu in piece.removed} == {("e",)}
    # removing the whole glued tail empties the product
    assert bisection_product(u, Bisection(e, e)) == []


def test_product_on_twist_squares(g_twist):
    g = g_twist
    e1 = path_from_edges(g, ["e1"])
    f = path_from_edges(g, ["f"])
    v = vertex_path(g, "v")
    (piece,) = bisection_product(Bisection(v, e1), Bisection(f, v))
    # common extensions of e1 and f: e1.f = f.e2, so the glued legs are f.? * e1.?
    assert piece.lam.range == "v" and piece.m == (-1, 1)
    trip = piece.canonical_triple()
    assert piece.contains(*trip)


# -- elements and convolution -----------------------------------------------------

def test_normalization_merges_and_cancels(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    v = vertex_path(g, "v")
    a = SteinbergElement.indicator(ZZ, Bisection(v, v))
    b = SteinbergElement.indicator(ZZ, Bisection(e, e))
    assert (a - a).is_zero()
    diff = a - b
    (term,) = diff.terms
    assert term[0] == Bisection(v, v, [e]) and term[1] == 1


def test_phi_q_examples(g_lambda2):
    g = g_lambda2
    tv = gen(g, ZZ, "v")
    v = vertex_path(g, "v")
    assert phi_q(ZZ, tv) == SteinbergElement.indicator(ZZ, Bisection(v, v))
    prod = tv - f_idempotent(g, ZZ, "v")
    img = phi_q(ZZ, prod.scale(2))
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    expected = SteinbergElement(ZZ, g, [(Bisection(v, v, [e, f]), 2)])
    assert img == expected
    assert not img.is_zero()


def test_phi_q_on_words(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    w = word_element(g, ZZ, e, f)
    assert phi_q(ZZ, w) == SteinbergElement.indicator(ZZ, Bisection(e, f))


def test_convolution_matches_symbolic_product(g_lambda2, bound22):
    g = g_lambda2
    words = []
    for v in g.vertices:
        for lam in paths_up_to(g, v, bound22):
            for mu in paths_up_to(g, v, bound22):
                if lam.source == mu.source:
                    words.append(word_element(g, ZZ, lam, mu))
    for a in words[::5]:
        for b in words[::5]:
            assert phi_q(ZZ, a * b) == convolve(phi_q(ZZ, a), phi_q(ZZ, b))


def test_convolve_zero(g_lambda2):
    z = SteinbergElement.zero(ZZ, g_lambda2)
    f = phi_q(ZZ, gen(g_lambda2, ZZ, "v"))
    assert convolve(f, z).is_zero()
    assert convolve(z, f).is_zero()


def test_range_projection_product(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    ef = compose(e, f)
    qe = phi_q(ZZ, gen(g, ZZ, e))
    qes = phi_q(ZZ, gen_star(g, ZZ, e))
    qf = phi_q(ZZ, gen(g, ZZ, f))
    qfs = phi_q(ZZ, gen_star(g, ZZ, f))
    lhs = convolve(convolve(qe, qes), convolve(qf, qfs))
    assert lhs == SteinbergElement.indicator(ZZ, Bisection(ef, ef))


def test_pointwise_convolution_formula(g_twist):
    g = g_twist
    cap = Degree((2, 2))
    triples = list(truncated_triples(g, Degree((1, 1))))
    assert triples
    e1 = path_from_edges(g, ["e1"])
    f = path_from_edges(g, ["f"])
    fa = phi_q(ZZ, word_element(g, ZZ, e1, f))
    fb = phi_q(ZZ, word_element(g, ZZ, f, e1) - gen(g, ZZ, "v").scale(2))
    conv = convolve(fa, fb)
    for trip in triples:
        assert conv.evaluate(*trip) == convolve_pointwise(fa, fb, *trip)


def _factors_through(u, v_bis, x, m, y):
    """Whether (x, m, y) = ab with a in U, b in V; the intermediate leg is
    forced once x lies over U's left leg."""
    from kgraphalg.steinberg import _extends
    from kgraphalg import shift
    if not _extends(x, u.lam):
        return False
    z = shift(x, u.lam.degree)
    if any(_extends(z, nu) for nu in u.removed):
        return False
    w = compose(u.mu, z)
    if not u.contains(x, u.m, w):
        return False
    rest = tuple(a - b for a, b in zip(m, u.m))
    return v_bis.contains(w, rest, y)


@pytest.mark.parametrize("removed", [(), (("e",),)])
def test_membership_coherence(g_lambda2, removed):
    # a truncated triple lies in the product exactly when it factors as a
    # composable pair from the two factors
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    u = Bisection(e, f)
    v_bis = Bisection(f, e, [path_from_edges(g, list(r)) for r in removed])
    pieces = bisection_product(u, v_bis)
    hits = 0
    for x, m, y in truncated_triples(g, Degree((3, 3))):
        in_product = any(p.contains(x, m, y) for p in pieces)
        assert in_product == _factors_through(u, v_bis, x, m, y)
        hits += in_product
    assert hits > 0


# -- involution -----------------------------------------------------------------

def test_transpose_membership(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    u = Bisection(e, f, [f])
    for x, m, y in truncated_triples(g, Degree((2, 2))):
        assert u.contains(x, m, y) == u.transpose().contains(
            y, tuple(-c for c in m), x)


def test_product_transpose_law(g_twist):
    g = g_twist
    e1 = path_from_edges(g, ["e1"])
    f = path_from_edges(g, ["f"])
    v = vertex_path(g, "v")
    u = Bisection(e1, v)
    w = Bisection(v, f)
    lhs = sorted(p.key() for p in bisection_product(u, w))
    rhs = sorted(p.transpose().key()
                 for p in bisection_product(w.transpose(), u.transpose()))
    assert lhs == rhs


def test_element_transpose_involutive(g_lambda2):
    el = phi_q(ZZ, f_idempotent(g_lambda2, ZZ, "v"))
    assert el.transpose().transpose() == el


# -- unions ----------------------------------------------------------------------

def test_union_disjoint_is_sum(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    u = union_to_span(ZZ, g, [Bisection(e, f), Bisection(f, e)])
    assert u == (SteinbergElement.indicator(ZZ, Bisection(e, f))
                 + SteinbergElement.indicator(ZZ, Bisection(f, e)))


def test_union_absorbs_contained(g_lambda2):
    g = g_lambda2
    v = vertex_path(g, "v")
    e = path_from_edges(g, ["e"])
    u = union_to_span(ZZ, g, [Bisection(v, v), Bisection(e, e)])
    assert u == SteinbergElement.indicator(ZZ, Bisection(v, v))


def test_union_inclusion_exclusion(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    ef = compose(e, f)
    u = union_to_span(ZZ, g, [Bisection(e, e), Bisection(f, f)])
    expected = (SteinbergElement.indicator(ZZ, Bisection(e, e))
                + SteinbergElement.indicator(ZZ, Bisection(f, f))
                - SteinbergElement.indicator(ZZ, Bisection(ef, ef)))
    assert u == expected


def test_union_values_are_indicators(g_twist):
    g = g_twist
    e1 = path_from_edges(g, ["e1"])
    e2 = path_from_edges(g, ["e2"])
    members = [Bisection(e1, e1), Bisection(e2, e2), Bisection(e1, e1, [e2])]
    u = union_to_span(ZZ, g, members)
    for x, m, y in truncated_triples(g, Degree((2, 2))):
        want = 1 if any(b.contains(x, m, y) for b in members) else 0
        assert u.evaluate(x, m, y) == want


# -- effectiveness and triples ----------------------------------------------------

def test_effectiveness(g_lambda2, tl_lambda2, bound22):
    for g in (g_lambda2, tl_lambda2.graph):
        report = effectiveness_probe(g, bound22)
        assert report.ok
        assert report.checked > 0


def test_is_triple(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    ef = compose(e, f)
    assert is_triple(e, (1, 0), vertex_path(g, "v"))
    assert is_triple(ef, (1, -1), compose(f, f))
    assert not is_triple(e, (0, 1), f)
    assert is_triple(e, (1, -1), f)


def test_truncated_triples_valid(g_twist):
    trips = list(truncated_triples(g_twist, Degree((1, 1))))
    assert trips
    for x, m, y in trips:
        assert is_triple(x, m, y)


# -- serialization -----------------------------------------------------------------

def test_bisection_json_round_trip(g_lambda2):
    g = g_lambda2
    e = path_from_edges(g, ["e"])
    f = path_from_edges(g, ["f"])
    bis = Bisection(e, f, [f])
    assert bisection_from_json(g, bisection_to_json(bis)) == bis
    v = vertex_path(g, "v")
    unit = Bisection(v, v, [e])
    assert bisection_from_json(g, bisection_to_json(unit)) == unit


def test_element_json_round_trip(g_lambda2):
    el = phi_q(QQ, f_idempotent(g_lambda2, QQ, "v").scale(QQ.parse("2/3")))
    data = element_to_json(el)
    assert data["ring"] == "Q"
    assert element_from_json(g_lambda2, data) == el
