"""Andrasfai graphs, their window colourings, and homomorphisms into them.

``Gamma_d`` has vertices ``0..3d-2`` (the usual labels ``1..3d-1`` shifted
down by one) and an edge ``xy`` whenever ``(y - x) mod (3d - 1)`` lies in
``[d, 2d - 1]``.  Its maximal independent sets are exactly the ``3d - 1``
windows of ``d`` cyclically consecutive vertices.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import kernels
from .errors import TriangleInSource, WitnessInconsistency
from .graph import (
    Graph,
    bits,
    components,
    from_mask,
    induced_subgraph,
    is_independent_mask,
    to_mask,
)
from .oracles import find_triangle


@dataclass(frozen=True)
class GammaGraph:
    d: int
    graph: Graph

    @property
    def order(self) -> int:
        return 3 * self.d - 1


@dataclass(frozen=True)
class Homomorphism:
    d: int
    map: tuple[int, ...]

    def classes(self) -> list[frozenset[int]]:
        """Preimage of each Gamma_d vertex."""
        out: list[set[int]] = [set() for _ in range(3 * self.d - 1)]
        for u, x in enumerate(self.map):
            out[x].add(u)
        return [frozenset(c) for c in out]

    def preimage(self, targets: Iterable[int]) -> frozenset[int]:
        wanted = set(targets)
        return frozenset(u for u, x in enumerate(self.map) if x in wanted)


class TriColoring(NamedTuple):
    p1: frozenset[int]
    p2: frozenset[int]
    p3: frozenset[int]


@lru_cache(maxsize=None)
def build_gamma(d: int) -> GammaGraph:
    if d < 1:
        raise ValueError("Andrasfai graphs need d >= 1")
    m = 3 * d - 1
    adj = []
    for x in range(m):
        row = 0
        for i in range(d, 2 * d):
            row |= 1 << ((x + i) % m)
        adj.append(row)
    return GammaGraph(d, Graph(m, tuple(adj)))


def gamma_window(d: int, start: int) -> frozenset[int]:
    m = 3 * d - 1
    return frozenset((start + i) % m for i in range(d))


def gamma_maximal_independent_sets(d: int) -> list[frozenset[int]]:
    """The ``3d - 1`` windows, ordered by starting vertex."""
    if d < 1:
        raise ValueError("Andrasfai graphs need d >= 1")
    return [gamma_window(d, s) for s in range(3 * d - 1)]


def gamma_coloring(d: int, first: Iterable[int]) -> TriColoring:
    """Three-colouring of Gamma_d with the window ``first`` as a class.

    With ``first`` rotated to ``{0..d-1}`` the other classes are
    ``{d..2d-1}`` and ``{2d..3d-2}``; the complement restricted to their
    union has no induced C4.
    """
    m = 3 * d - 1
    window = frozenset(first)
    for s in range(m):
        if gamma_window(d, s) == window:
            break
    else:
        raise ValueError(f"{sorted(window)} is not a window of Gamma_{d}")
    second = frozenset((s + d + i) % m for i in range(d))
    third = frozenset((s + 2 * d + i) % m for i in range(d - 1))
    return TriColoring(window, second, third)


def find_induced_c4(g: Graph, s: Iterable[int]) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle ``(a, b, c, d)`` inside ``g[s]`` in cycle order."""
    mask = to_mask(s)
    for a in bits(mask):
        # opposite corner c > a, non-adjacent to a
        for c in bits(mask & ~g.adj[a] & ~((1 << (a + 1)) - 1)):
            common = g.adj[a] & g.adj[c] & mask
            for b in bits(common):
                rest = common & ~g.adj[b] & ~((1 << (b + 1)) - 1)
                if rest:
                    return (a, b, c, (rest & -rest).bit_length() - 1)
    return None


def is_homomorphism(f: Graph, target: Graph, image: Iterable[int]) -> bool:
    image = tuple(image)
    if len(image) != f.n:
        return False
    return all(target.has_edge(image[u], image[v]) for u, v in f.edges())


def fold_dominated(f: Graph) -> tuple[frozenset[int], list[tuple[int, int]]]:
    """Repeatedly delete a vertex ``u`` whose neighbourhood lies inside that of
    another live vertex ``v``; ``u`` can then copy ``v``'s image under any
    homomorphism of what remains.  Returns the survivors and the ``(u, v)``
    folds in deletion order."""
    alive = f.full_mask
    folds = []
    changed = True
    while changed:
        changed = False
        for u in bits(alive):
            nu = f.adj[u] & alive
            for v in bits(alive & ~(1 << u)):
                if not nu & ~f.adj[v]:
                    folds.append((u, v))
                    alive &= ~(1 << u)
                    changed = True
                    break
    return from_mask(alive), folds


def find_homomorphism(f: Graph, d: int) -> Homomorphism | None:
    """A homomorphism from the triangle-free graph ``f`` into Gamma_d.

    Dominated vertices are folded away first (see :func:`fold_dominated`).
    Each connected component of the rest is searched separately with its
    highest-degree vertex pinned to 0, which loses nothing because Gamma_d
    is vertex-transitive.  Isolated vertices map to 0.
    """
    triangle = find_triangle(f)
    if triangle is not None:
        raise TriangleInSource(triangle)
    gamma = build_gamma(d)
    image = [0] * f.n
    core, folds = fold_dominated(f)
    core_graph, core_members = induced_subgraph(f, core)
    for comp in components(core_graph):
        if len(comp) == 1:
            continue
        sub, local = induced_subgraph(core_graph, comp)
        members = [core_members[i] for i in local]
        degree = [row.bit_count() for row in sub.adj]
        root = max(range(sub.n), key=lambda v: (degree[v], -v))
        found = kernels.hom_search(sub.adj, sub.n, gamma.graph.adj, gamma.order, root)
        if found is None:
            return None
        for i, x in enumerate(found):
            image[members[i]] = x
    for u, v in reversed(folds):
        image[u] = image[v]
    if not is_homomorphism(f, gamma.graph, image):
        raise WitnessInconsistency("search returned a non-homomorphism")
    return Homomorphism(d, tuple(image))


def default_d_max(n: int) -> int:
    return max(1, -(-(n + 1) // 3))


def search_gamma_target(f: Graph, d_max: int | None = None) -> tuple[int, Homomorphism] | None:
    """Least ``d <= d_max`` admitting a homomorphism ``f -> Gamma_d``.

    ``None`` means no target was found up to ``d_max``; it is not a proof
    that none exists for larger ``d``.
    """
    if d_max is None:
        d_max = default_d_max(f.n)
    for d in range(1, d_max + 1):
        h = find_homomorphism(f, d)
        if h is not None:
            return d, h
    return None


def blowup_completion(f: Graph, h: Homomorphism) -> Graph:
    """The blow-up of Gamma_d along the classes of ``h``: ``uv`` is an edge
    iff ``h(u)h(v)`` is.  Contains ``f`` whenever ``h`` is valid."""
    gamma = build_gamma(h.d).graph
    if not is_homomorphism(f, gamma, h.map):
        raise ValueError("h is not a homomorphism of f")
    class_mask = [0] * gamma.n
    for u, x in enumerate(h.map):
        class_mask[x] |= 1 << u
    adj = []
    for u in range(f.n):
        row = 0
        for y in bits(gamma.adj[h.map[u]]):
            row |= class_mask[y]
        adj.append(row)
    return Graph(f.n, tuple(adj))


def blowup_coloring(H: Graph, h: Homomorphism, first: Iterable[int]) -> TriColoring:
    """Three-colouring ``(I1, I2, I3)`` of a Gamma_d blow-up with the maximal
    independent set ``I1`` as a class, such that the complement restricted
    to ``I2 | I3`` has no induced C4.

    The image of ``I1`` may be a proper subset of a window when classes are
    empty; the lexicographically least window containing it is used, and
    its preimage must then be exactly ``I1``.
    """
    d = h.d
    if blowup_completion(H, h) != H:
        raise ValueError("H is not the blow-up completion of h")
    i1 = to_mask(first)
    if not is_independent_mask(H, i1):
        raise ValueError("I1 is not independent")
    outside = H.full_mask & ~i1
    for v in bits(outside):
        if not H.adj[v] & i1:
            raise ValueError(f"I1 is not maximal: {v} can be added")
    image = {h.map[u] for u in bits(i1)}
    windows = [w for w in gamma_maximal_independent_sets(d) if image <= w]
    if not windows:
        raise WitnessInconsistency(f"h(I1) = {sorted(image)} lies in no window")
    window = min(windows, key=sorted)
    if to_mask(h.preimage(window)) != i1:
        raise WitnessInconsistency("preimage of the chosen window differs from I1")
    coloring = gamma_coloring(d, window)
    return TriColoring(from_mask(i1), h.preimage(coloring.p2), h.preimage(coloring.p3))
