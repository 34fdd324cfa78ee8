from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import brute
from clique_immersion.andrasfai import (
    Homomorphism,
    blowup_coloring,
    blowup_completion,
    build_gamma,
    find_homomorphism,
    find_induced_c4,
    fold_dominated,
    gamma_coloring,
    gamma_maximal_independent_sets,
    gamma_window,
    is_homomorphism,
    search_gamma_target,
)
from clique_immersion.errors import TriangleInSource
from clique_immersion.generators import XorShift64Star, blowup_of_gamma
from clique_immersion.graph import Graph, complement, induced_subgraph
from clique_immersion.oracles import find_triangle, max_clique


def brute_has_hom(f: Graph, target: Graph) -> bool:
    def extend(image):
        u = len(image)
        if u == f.n:
            return True
        for x in range(target.n):
            if all(target.has_edge(x, image[w]) for w in range(u) if f.has_edge(u, w)):
                if extend(image + [x]):
                    return True
        return False

    return extend([])


def test_gamma_2_is_c5():
    g = build_gamma(2).graph
    assert g.n == 5
    assert g.edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_gamma_1_is_k2():
    assert build_gamma(1).graph == Graph.complete(2)
    with pytest.raises(ValueError):
        build_gamma(0)


@pytest.mark.parametrize("d", range(1, 8))
def test_windows_are_the_maximal_independent_sets(d):
    g = build_gamma(d).graph
    ours = gamma_maximal_independent_sets(d)
    assert len(ours) == 3 * d - 1
    if d <= 4:
        assert set(ours) == brute.maximal_independent_sets(g)
    else:
        assert all(brute.is_independent(g, w) for w in ours)


def test_gamma_2_windows():
    assert gamma_maximal_independent_sets(2) == [{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}]


def test_gamma_coloring_d2():
    assert gamma_coloring(2, {0, 1}) == ({0, 1}, {2, 3}, {4})
    assert gamma_coloring(2, {4, 0}) == ({4, 0}, {1, 2}, {3})
    with pytest.raises(ValueError):
        gamma_coloring(2, {0, 2})


def test_find_induced_c4():
    c4 = Graph.cycle(4)
    assert find_induced_c4(c4, range(4)) == (0, 1, 2, 3)
    assert find_induced_c4(Graph.complete(4), range(4)) is None
    assert find_induced_c4(c4, {0, 1, 2}) is None


@given(st.integers(4, 8).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(list(combinations(range(n), 2)))))))
def test_find_induced_c4_against_brute(args):
    n, edges = args
    g = Graph.from_edges(n, edges)
    found = find_induced_c4(g, range(n))
    subs = (induced_subgraph(g, quad)[0] for quad in combinations(range(n), 4))
    exists = any(sub.min_degree() == sub.max_degree() == 2 for sub in subs)
    assert (found is not None) == exists
    if found:
        a, b, c, d = found
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)


def test_homomorphism_examples():
    c5 = Graph.cycle(5)
    assert find_homomorphism(c5, 2) is not None
    assert find_homomorphism(Graph.cycle(7), 2) is not None
    assert search_gamma_target(c5) == (2, search_gamma_target(c5)[1])
    assert search_gamma_target(Graph.complete(2))[0] == 1
    assert search_gamma_target(Graph.empty(3))[0] == 1
    assert search_gamma_target(build_gamma(3).graph)[0] == 3
    assert find_homomorphism(build_gamma(3).graph, 2) is None


def test_homomorphism_rejects_triangle():
    with pytest.raises(TriangleInSource):
        find_homomorphism(Graph.complete(3), 2)


def test_petersen_has_no_gamma_target(petersen_graph):
    assert search_gamma_target(petersen_graph) is None


@settings(max_examples=40)
@given(st.integers(0, 2**32))
def test_homomorphism_against_brute(seed):
    rng = XorShift64Star(seed)
    n = rng.randint(2, 8)
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.4 and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    f = Graph(n, tuple(adj))
    for d in (1, 2, 3):
        h = find_homomorphism(f, d)
        target = build_gamma(d).graph
        assert (h is not None) == brute_has_hom(f, target)
        if h is not None:
            assert is_homomorphism(f, target, h.map)


def test_fold_dominated_blowup_collapses():
    g, _ = blowup_of_gamma(2, [2, 1, 3, 1, 2])
    core, folds = fold_dominated(g)
    assert len(core) == 5 and len(folds) == 4


def test_blowup_completion_restores_missing_edge():
    f = Graph.from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4)])
    h = Homomorphism(2, (0, 1, 2, 3, 4))
    assert blowup_completion(f, h) == build_gamma(2).graph


def test_blowup_coloring_c5():
    c5 = build_gamma(2).graph
    h = Homomorphism(2, tuple(range(5)))
    parts = blowup_coloring(c5, h, {0, 1})
    assert [len(p) for p in parts] == [2, 2, 1]


def test_blowup_coloring_k2():
    h = Homomorphism(1, (0, 1))
    assert blowup_coloring(Graph.complete(2), h, {0}) == ({0}, {1}, frozenset())


def test_blowup_coloring_balanced_d2():
    g, h = blowup_of_gamma(2, [2, 2, 2, 2, 2])
    parts = blowup_coloring(g, h, h.preimage({0, 1}))
    assert [len(p) for p in parts] == [4, 4, 2]


def test_blowup_coloring_rejects_non_maximal():
    g, h = blowup_of_gamma(2, [1, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        blowup_coloring(g, h, {0})


@pytest.mark.parametrize("seed", range(200))
def test_blowup_coloring_at_scale(seed):
    rng = XorShift64Star(seed)
    d = rng.randint(1, 5)
    sizes = [rng.randint(0, 3) for _ in range(3 * d - 1)]
    g, h = blowup_of_gamma(d, sizes)
    assert find_triangle(g) is None
    i1 = max_clique(complement(g))
    parts = blowup_coloring(g, h, i1)
    assert sorted(v for p in parts for v in p) == list(range(g.n))
    assert all(brute.is_independent(g, p) for p in parts)
    assert find_induced_c4(complement(g), parts.p2 | parts.p3) is None


def test_window_helper():
    assert gamma_window(3, 7) == {7, 0, 1}
