"""The compiled and pure-Python kernels must agree exactly, tie-breaks included."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from clique_immersion import kernels
from clique_immersion.andrasfai import build_gamma
from clique_immersion.generators import XorShift64Star
from clique_immersion.graph import Graph
from test_graph import graphs

py = kernels.BACKENDS["python"]
cy = kernels.BACKENDS.get("cython")
needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def triangle_free(seed: int, n: int) -> Graph:
    rng = XorShift64Star(seed)
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.35 and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def test_backend_reported():
    assert kernels.backend_name() in kernels.BACKENDS


@needs_cython
@given(graphs(max_n=24))
def test_max_clique_agrees(g):
    assert cy.max_clique(list(g.adj), g.n) == py.max_clique(list(g.adj), g.n)


@needs_cython
@given(graphs(max_n=12), st.integers(0, 5))
def test_k_coloring_agrees(g, k):
    assert cy.k_coloring(list(g.adj), g.n, k) == py.k_coloring(list(g.adj), g.n, k)


@needs_cython
@settings(max_examples=60)
@given(st.integers(0, 2**32), st.integers(2, 14), st.integers(1, 4))
def test_hom_search_agrees(seed, n, d):
    f = triangle_free(seed, n)
    gamma = build_gamma(d)
    args = (list(f.adj), f.n, list(gamma.graph.adj), gamma.order, 0)
    assert cy.hom_search(*args) == py.hom_search(*args)


def test_wide_graphs_fall_back_to_python():
    n = 70
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    assert kernels._pick(n) is py
    assert kernels.max_clique(g.adj, n) == 0b11
    colors = kernels.k_coloring(g.adj, n, 2)
    assert all(colors[u] != colors[v] for u, v in g.edges())
    assert kernels.k_coloring(g.adj, n, 1) is None


def test_max_clique_empty_graph():
    assert kernels.max_clique((), 0) == 0
    assert kernels.max_clique((0, 0), 2) == 0b1
