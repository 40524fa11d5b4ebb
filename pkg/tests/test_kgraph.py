import pytest

from kgraphalg import (Degree, DegreeOutOfRange, KGraph, NotComposable,
                       compose, degrees_up_to, omega, path_from_edges,
                       paths_from, paths_up_to, segment, shift, sources,
                       validate, vertex_path)

from helpers import path_classes, square_closure


# -- validation ---------------------------------------------------------------

def test_lambda2_valid(g_lambda2):
    assert validate(g_lambda2).ok


def test_lambda1_valid(g_lambda1):
    assert validate(g_lambda1).ok


def test_missing_square_reported():
    g = KGraph(2, ["v"], {"e": (1, "v", "v"), "f": (2, "v", "v")}, [])
    report = validate(g)
    assert not report.ok
    assert report.kinds() == {"INCOMPLETE_SQUARES"}


def test_dangling_vertex_reported():
    g = KGraph(2, ["v"], {"e": (1, "v", "nowhere"), "f": (2, "v", "v")}, [])
    assert "MALFORMED" in validate(g).kinds()


def test_duplicate_square_word_reported():
    g = KGraph(2, ["v"],
               {"e": (1, "v", "v"), "e2": (1, "v", "v"), "f": (2, "v", "v")},
               [(("e", "f"), ("f", "e")), (("e2", "f"), ("f", "e")),
                (("e2", "f"), ("f", "e2"))])
    report = validate(g)
    assert not report.ok
    assert any("more than one square" in v.detail for v in report.violations)


def test_cube_consistency_flagged():
    # two loops per color on one vertex; the 2-3 pairing is twisted against
    # the identity 1-2 and 1-3 pairings, so every square is covered yet the
    # two sorting routes of tri-colored words disagree
    edges = {name: (i, "v", "v") for i in (1, 2, 3) for name in (f"a{i}", f"b{i}")}
    squares_bad = [
        (("a1", "a2"), ("a2", "a1")), (("a1", "b2"), ("a2", "b1")),
        (("b1", "a2"), ("b2", "a1")), (("b1", "b2"), ("b2", "b1")),
        (("a1", "a3"), ("a3", "a1")), (("a1", "b3"), ("a3", "b1")),
        (("b1", "a3"), ("b3", "a1")), (("b1", "b3"), ("b3", "b1")),
        (("a2", "a3"), ("a3", "a2")), (("a2", "b3"), ("a3", "b2")),
        (("b2", "a3"), ("b3", "b2")), (("b2", "b3"), ("b3", "a2")),
    ]
    g = KGraph(3, ["v"], edges, squares_bad)
    report = validate(g)
    assert not report.ok
    assert report.kinds() == {"CUBE_INCONSISTENT"}


def test_rank3_grid_passes_cube_check():
    assert validate(omega(3, Degree((1, 1, 1)))).ok


# -- omega --------------------------------------------------------------------

def test_omega_2_12_counts(g_omega12):
    assert len(g_omega12.vertices) == 6
    assert len(g_omega12.edges) == 7
    assert len(g_omega12.squares) == 2


def test_omega_1_0_trivial():
    g = omega(1, Degree((0,)))
    assert len(g.vertices) == 1 and len(g.edges) == 0


def test_omega_2_11_counts():
    g = omega(2, Degree((1, 1)))
    assert len(g.vertices) == 4
    assert len(g.edges) == 4
    assert len(g.squares) == 1


# -- path enumeration against the brute-force oracle --------------------------

def test_lambda2_unique_path_per_degree(g_lambda2):
    for n in degrees_up_to(Degree((2, 2))):
        found = paths_from(g_lambda2, "v", n)
        assert len(found) == 1
        classes = path_classes(g_lambda2, "v", n)
        assert len(classes) == 1
        assert found[0].edges in classes.pop() or n == Degree((0, 0))


def test_lambda2_degree_11_word(g_lambda2):
    (p,) = paths_from(g_lambda2, "v", Degree((1, 1)))
    assert p.edges == ("e", "f")


def test_lambda1_no_mixed_paths(g_lambda1):
    assert paths_from(g_lambda1, "v", Degree((1, 1))) == ()


def test_degree_zero_paths_are_vertices(g_lambda2):
    (p,) = paths_from(g_lambda2, "v", Degree((0, 0)))
    assert p.is_vertex() and p.base == "v"


def test_twist_counts_match_oracle(g_twist):
    for n in degrees_up_to(Degree((2, 2))):
        found = paths_from(g_twist, "v", n)
        classes = path_classes(g_twist, "v", n)
        assert len(found) == len(classes)
        # each class contains exactly one canonical (color-sorted) word
        for cls in classes:
            assert sum(1 for p in found if p.edges in cls) == 1


def test_omega_unique_paths(g_omega12):
    top = (1, 2)
    for v in g_omega12.vertices:
        for n in degrees_up_to(Degree((1, 2))):
            count = len(paths_from(g_omega12, v, n))
            p = tuple(int(c) for c in v.split("-"))
            target = tuple(a + b for a, b in zip(p, n))
            fits = all(a <= b for a, b in zip(target, top))
            assert count == (1 if fits else 0)


# -- composition and factorisation --------------------------------------------

def test_compose_resorts_via_square(g_lambda2):
    e = path_from_edges(g_lambda2, ["e"])
    f = path_from_edges(g_lambda2, ["f"])
    assert compose(f, e).edges == ("e", "f")


def test_compose_identity(g_lambda2):
    lam = path_from_edges(g_lambda2, ["e", "f"])
    v = vertex_path(g_lambda2, "v")
    assert compose(v, lam) == lam
    assert compose(lam, v) == lam


def test_compose_rejects_mismatch(g_lambda1):
    e = path_from_edges(g_lambda1, ["e"])
    with pytest.raises(NotComposable):
        compose(e, e)


def test_compose_in_omega(g_omega12):
    a = path_from_edges(g_omega12, ["x1_0-0"])   # (0,0) <- (1,0)
    b = path_from_edges(g_omega12, ["x2_1-0"])   # (1,0) <- (1,1)
    c = compose(a, b)
    assert c.range == "0-0" and c.source == "1-1"
    assert c.degree == Degree((1, 1))


def test_segment_full_and_split(g_lambda2):
    lam = path_from_edges(g_lambda2, ["e", "f"])
    assert segment(lam, Degree((0, 0)), lam.degree) == lam
    assert segment(lam, Degree((0, 0)), Degree((0, 1))).edges == ("f",)
    assert segment(lam, Degree((0, 1)), Degree((1, 1))).edges == ("e",)


def test_segment_on_omega_matches_category(g_omega12):
    # the unique morphism p -> q factors through p+m -> p+n
    for v in g_omega12.vertices:
        p = tuple(int(c) for c in v.split("-"))
        for n in degrees_up_to(Degree((1, 2))):
            found = paths_from(g_omega12, v, n)
            if not found:
                continue
            (lam,) = found
            for m1 in degrees_up_to(n):
                for m2 in degrees_up_to(n):
                    if not (m1.le(m2)):
                        continue
                    seg = segment(lam, m1, m2)
                    assert seg.range == "-".join(str(a + b) for a, b in zip(p, m1))
                    assert seg.source == "-".join(str(a + b) for a, b in zip(p, m2))


def test_segment_bounds_checked(g_lambda2):
    lam = path_from_edges(g_lambda2, ["e"])
    with pytest.raises(DegreeOutOfRange):
        segment(lam, Degree((0, 1)), Degree((1, 1)))


def test_factorisation_round_trip(g_twist):
    for lam in paths_up_to(g_twist, "v", Degree((2, 2))):
        for m in degrees_up_to(lam.degree):
            for n in degrees_up_to(lam.degree):
                if not (m.le(n) and n.le(lam.degree)):
                    continue
                rebuilt = compose(
                    segment(lam, Degree((0, 0)), m),
                    compose(segment(lam, m, n), segment(lam, n, lam.degree)))
                assert rebuilt == lam


def test_degree_additivity(g_twist):
    pool = list(paths_up_to(g_twist, "v", Degree((1, 1))))
    for lam in pool:
        for mu in pool:
            assert compose(lam, mu).degree == lam.degree + mu.degree


def test_canonical_segments_consistent_with_closure(g_twist):
    # the canonical prefix of degree m must lie in the square closure of
    # any raw factorisation prefix
    lam = path_from_edges(g_twist, ["e1", "f"])
    closure = square_closure(g_twist, lam.edges)
    assert ("f", "e2") in closure
    pre = segment(lam, Degree((0, 0)), Degree((0, 1)))
    assert pre.edges == ("f",)
    post = segment(lam, Degree((0, 1)), Degree((1, 1)))
    assert post.edges == ("e2",)


# -- sources ------------------------------------------------------------------

def test_sources(g_lambda1, g_lambda2, g_omega12):
    assert sources(g_lambda1) == ("w",)
    assert sources(g_lambda2) == ()
    assert "1-2" in sources(g_omega12)


def test_no_sources_every_degree_inhabited(g_twist):
    for n in degrees_up_to(Degree((2, 2))):
        assert paths_from(g_twist, "v", n)


def test_shift(g_lambda2):
    lam = path_from_edges(g_lambda2, ["e", "f"])
    assert shift(lam, Degree((1, 0))).edges == ("f",)
