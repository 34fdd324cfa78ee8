from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from clique_immersion.errors import AlphaTooLarge, Claim1Violation, CompleteGraph, NotMinimal
from clique_immersion.gauthier import (
    GauthierFrame,
    construct_2n5_immersion,
    edge_minimal_reduction,
    find_induced_c5,
    is_induced_c5,
    partition_windows,
    select_xy,
)
from clique_immersion.generators import gen_random_alpha2
from clique_immersion.graph import Graph
from clique_immersion.immersion import verify_immersion
from clique_immersion.oracles import independent_triple
from instances import gauthier_frame_problems, random_alpha2_instance


def naive_edge_minimal(g: Graph) -> Graph:
    """Rescan from the first edge after every deletion."""
    while True:
        for u, v in g.edges():
            trial = Graph.from_edges(g.n, [e for e in g.edges() if e != (u, v)])
            if independent_triple(trial) is None:
                g = trial
                break
        else:
            return g


def test_edge_minimal_examples():
    assert edge_minimal_reduction(Graph.cycle(5)) == (Graph.cycle(5), [])
    reduced, removed = edge_minimal_reduction(Graph.complete(3))
    assert removed == [(0, 1), (0, 2)] and reduced.edges() == [(1, 2)]
    # two isolated vertices still have alpha 2, so the lone edge goes
    assert edge_minimal_reduction(Graph.complete(2))[1] == [(0, 1)]
    with pytest.raises(AlphaTooLarge):
        edge_minimal_reduction(Graph.empty(3))


@settings(max_examples=60)
@given(st.integers(1, 11), st.floats(0, 1), st.integers(0, 2**32))
def test_edge_minimal_matches_rescan(n, p, seed):
    g = gen_random_alpha2(n, p, seed)
    reduced, _ = edge_minimal_reduction(g)
    assert reduced == naive_edge_minimal(g)


def test_find_induced_c5(c5, k4, co_petersen):
    assert sorted(find_induced_c5(c5)) == [0, 1, 2, 3, 4]
    with pytest.raises(CompleteGraph):
        find_induced_c5(k4)
    reduced, _ = edge_minimal_reduction(co_petersen)
    assert is_induced_c5(reduced, find_induced_c5(reduced))
    with pytest.raises(NotMinimal):
        find_induced_c5(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_is_induced_c5():
    assert is_induced_c5(Graph.cycle(5), (0, 1, 2, 3, 4))
    assert not is_induced_c5(Graph.cycle(5), (0, 2, 4, 1, 3))
    assert not is_induced_c5(Graph.complete(5), (0, 1, 2, 3, 4))


def test_partition_windows_examples():
    w = partition_windows(Graph.cycle(5), (0, 1, 2, 3, 4), frozenset())
    assert w.zones == (frozenset(),) * 5 and w.rotation == 0

    # vertex 5 sees v1, v2, v3, so it sits in zone 2 under labels (0..4)
    g = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 1), (5, 2)])
    w = partition_windows(g, (0, 1, 2, 3, 4), frozenset())
    assert sum(len(z) for z in w.zones) == 1
    assert len(w.zones[1]) == 0

    # one extra vertex per window: every zone has size one and zone 2 stays put
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for j in range(5):
        edges += [(5 + j, (j - 1) % 5), (5 + j, j), (5 + j, (j + 1) % 5)]
    g = Graph.from_edges(10, edges)
    w = partition_windows(g, (0, 1, 2, 3, 4), frozenset())
    assert w.rotation == 0 and w.zones[1] == {6}

    # zone 1 strictly smallest: rotate it into position 2
    w = partition_windows(g, (0, 1, 2, 3, 4), frozenset({5}))
    assert w.rotation == 4 and w.cycle == (4, 0, 1, 2, 3)
    assert w.zones[1] == frozenset()


def test_partition_windows_claim1_violation():
    g = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0)])
    with pytest.raises(Claim1Violation) as info:
        partition_windows(g, (0, 1, 2, 3, 4), frozenset())
    assert info.value.vertex == 5


def _frame(**kw):
    base = dict(t=1, cycle=(0, 1, 2, 3, 4), branch=frozenset(), zones=(frozenset(),) * 5, rotation=0,
                x1=frozenset(), x3=frozenset(), y1_plus=frozenset(), y3_plus=frozenset())
    base.update(kw)
    return GauthierFrame(**base)


def test_select_xy_rules():
    g = Graph.cycle(5)
    assert select_xy(g, _frame(y1_plus=frozenset({5}), y3_plus=frozenset({6}))) == ((), ())
    # priority: 7 lies only in Y1+, 5 and 6 are shared
    frame = _frame(t=1, x1=frozenset({10}), y1_plus=frozenset({5, 6, 7}), y3_plus=frozenset({5, 6}))
    assert select_xy(g, frame)[0] == (7,)
    # only shared vertices: Y1 takes 5 and 6, Y3 still finds 8
    frame = _frame(t=1, x1=frozenset({10, 11}), x3=frozenset({12}), y1_plus=frozenset({5, 6, 8}),
                   y3_plus=frozenset({5, 6, 8, 9}), zones=(frozenset(), frozenset({9}), frozenset(), frozenset(), frozenset()))
    y1, y3 = select_xy(g, frame)
    assert y1 == (5, 6) and y3 == (8,)


def test_small_cases(c5, co_petersen):
    assert construct_2n5_immersion(Graph.complete(4))[0].size == 0
    im, _ = construct_2n5_immersion(c5)
    assert im.size == 2 and verify_immersion(c5, im, True, True).valid
    im, _ = construct_2n5_immersion(co_petersen)
    assert im.size == 4 and verify_immersion(co_petersen, im, True, True).valid


@pytest.mark.parametrize("seed", range(40))
def test_random_instances(seed):
    g = random_alpha2_instance(seed, n_max=40)
    im, trace = construct_2n5_immersion(g)
    assert im.size == 2 * (g.n // 5)
    report = verify_immersion(g, im, True, True)
    assert report.valid and report.strong
    assert {len(p) - 1 for p in im.paths.values()} <= {1, 3}
    assert gauthier_frame_problems(g, trace) == []


def test_shortcut_returns_clique():
    # complement of a triangle-free graph with a vertex of large co-degree
    g = gen_random_alpha2(30, 0.05, 3)
    im, trace = construct_2n5_immersion(g)
    for level in trace.levels:
        if "shortcut" in level:
            clique = level["shortcut"]["clique"]
            assert all(g.has_edge(a, b) for a, b in combinations(clique, 2))
    assert verify_immersion(g, im, True, True).valid


def test_trace_is_deterministic():
    g = random_alpha2_instance(11)
    assert construct_2n5_immersion(g) == construct_2n5_immersion(g)

