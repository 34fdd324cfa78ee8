"""Exact desk-scale oracles: cliques, independence, matchings, colourings.

These are used as preconditions and shortcuts by the constructions and as
ground truth in the tests.  The exponential searches live in
:mod:`clique_immersion.kernels`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .errors import AlphaTooLarge
from .graph import Graph, bits, complement, from_mask

Matching = frozenset[tuple[int, int]]


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least triangle ``(u, v, w)`` with ``u < v < w``."""
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(above_u):
            common = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                return (u, v, (common & -common).bit_length() - 1)
    return None


def independent_triple(g: Graph) -> tuple[int, int, int] | None:
    return find_triangle(complement(g))


def require_alpha_le_2(g: Graph) -> None:
    triple = independent_triple(g)
    if triple is not None:
        raise AlphaTooLarge(triple)


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique; the lexicographically least one among ties."""
    return from_mask(kernels.max_clique(g.adj, g.n))


def clique_number(g: Graph) -> int:
    return kernels.max_clique(g.adj, g.n).bit_count()


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


# -------------------------------------------------------------------- matching


def _lca(a: int, b: int, base: list[int], match: list[int], parent: list[int]) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def augment_from(adj: list[int] | tuple[int, ...], match: list[int], root: int, alive: int) -> bool:
    """Search for an augmenting path from the exposed vertex ``root`` in the
    subgraph induced by ``alive``; flip it into ``match`` if found.

    Edmonds' blossom search: BFS over an alternating forest rooted at
    ``root``, contracting odd cycles by re-basing their vertices.
    """
    n = len(adj)
    base = list(range(n))
    parent = [-1] * n
    even = [False] * n
    even[root] = True
    queue = deque([root])

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in bits(adj[v] & alive):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                b = _lca(v, to, base, match, parent)
                blossom = [False] * n
                mark_path(v, b, to, blossom)
                mark_path(to, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not even[i]:
                            even[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                even[match[to]] = True
                queue.append(match[to])
    return False


def matching_array(g: Graph, alive: int | None = None) -> list[int]:
    """Mate of each vertex (``-1`` if exposed) in a maximum matching."""
    if alive is None:
        alive = g.full_mask
    match = [-1] * g.n
    for v in bits(alive):
        if match[v] == -1:
            augment_from(g.adj, match, v, alive)
    return match


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of a general graph."""
    match = matching_array(g)
    return frozenset((u, w) for u, w in enumerate(match) if u < w)


# -------------------------------------------------------------------- colouring


def chromatic_number_alpha2(g: Graph) -> int:
    """Exact chromatic number of a graph with independence number at most 2.

    Every colour class is then a clique of the complement of size at most 2,
    so an optimal colouring pairs up vertices along a maximum matching of
    the complement: chi(G) = n - nu(complement(G)).
    """
    comp = complement(g)
    triangle = find_triangle(comp)
    if triangle is not None:
        raise AlphaTooLarge(triangle)
    return g.n - sum(1 for u, w in enumerate(matching_array(comp)) if u < w)


def alpha2_coloring(g: Graph) -> list[frozenset[int]]:
    """Optimal colouring of an alpha <= 2 graph from the complement matching."""
    require_alpha_le_2(g)
    match = matching_array(complement(g))
    return [frozenset((u, w)) if w > u else frozenset((u,)) for u, w in enumerate(match) if w == -1 or w > u]


def is_k_colorable(g: Graph, k: int) -> list[frozenset[int]] | None:
    """A proper colouring with ``k`` classes (some possibly empty), or None."""
    colors = kernels.k_coloring(g.adj, g.n, k)
    if colors is None:
        return None
    classes: list[set[int]] = [set() for _ in range(k)]
    for v, c in enumerate(colors):
        classes[c].add(v)
    return [frozenset(c) for c in classes]


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking (no independence assumption)."""
    k = 0
    while is_k_colorable(g, k) is None:
        k += 1
    return k


def clique_cover_number(g: Graph, cap: int) -> int | None:
    """Least ``k <= cap`` such that V(g) splits into ``k`` cliques; ``None``
    when more than ``cap`` are needed."""
    comp = complement(g)
    for k in range(cap + 1):
        if is_k_colorable(comp, k) is not None:
            return k
    return None


@dataclass(frozen=True)
class GateReport:
    n: int
    max_degree: int
    alpha_le_2: bool
    clique_cover: int | None  # None: more than 3 cliques needed
    thm4: bool
    thm5: bool

    @property
    def applies(self) -> bool:
        """True when a guaranteed K_chi construction regime covers ``g``."""
        return self.alpha_le_2 and (self.thm4 or self.thm5)


def gate_check(g: Graph) -> GateReport:
    """Degree and clique-cover hypotheses of the two guaranteed K_chi regimes.

    Thresholds are compared in integers: ``D < 19n/29 - 1`` as
    ``29 D < 19 n - 29`` and ``D < 2n/3 - 1`` as ``3 D < 2 n - 3``.
    """
    n, delta = g.n, g.max_degree()
    cover = clique_cover_number(g, 3)
    thm4 = n >= 11 and 29 * delta < 19 * n - 29
    thm5 = 3 * delta < 2 * n - 3 and cover is not None
    return GateReport(
        n=n,
        max_degree=delta,
        alpha_le_2=independent_triple(g) is None,
        clique_cover=cover,
        thm4=thm4,
        thm5=thm5,
    )
