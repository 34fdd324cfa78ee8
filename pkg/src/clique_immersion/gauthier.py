"""Strong immersions of K_{2 floor(n/5)} in every graph with alpha <= 2.

Each recursion level trims ``n`` to a multiple ``5t`` of five, strips edges
while alpha stays at most 2, and then either finds a co-neighbourhood of
size ``2t`` (a clique, done) or an induced C5 ``v1..v5``.  An immersion of
``K_{2t-2}`` in the rest is extended by ``v1`` and ``v3``: every branch
vertex ``x`` missing ``v1`` is reached as ``<v1, y, c, x>`` with a private
``y`` outside the current branch set and ``c`` in ``{v2, v4, v5}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .errors import Claim1Violation, CompleteGraph, ConstructionError, NotMinimal, SelectionInfeasible
from .graph import Graph, Path, bits, from_mask, induced_subgraph, to_mask
from .immersion import Immersion, clique_immersion, verify_immersion
from .oracles import require_alpha_le_2


def edge_minimal_reduction(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Delete edges, in lexicographic order, while alpha stays at most 2.

    Removing ``uv`` is safe iff no third vertex misses both ``u`` and ``v``.
    Deletions only enlarge non-neighbourhoods, so an edge that is unsafe
    once stays unsafe: one ordered pass gives the same result as rescanning
    from the start after every deletion.
    """
    require_alpha_le_2(g)
    adj = list(g.adj)
    full = g.full_mask
    removed = []
    for u, v in g.edges():
        outside = full & ~adj[u] & ~adj[v] & ~(1 << u) & ~(1 << v)
        if not outside:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            removed.append((u, v))
    return Graph(g.n, tuple(adj)), removed


def find_induced_c5(g: Graph) -> tuple[int, int, int, int, int]:
    """Induced 5-cycle ``(v1, ..., v5)`` of an edge-minimal alpha = 2 graph.

    ``<v1, v2, v3>`` is the start of a shortest path between the least
    non-adjacent pair; ``v4`` is the least vertex missing ``v1`` and ``v2``,
    ``v5`` the least missing ``v2`` and ``v3``.  Minimality is what makes
    these exist; a disconnected graph has no induced P3 and is rejected.
    """
    if g.is_complete():
        raise CompleteGraph("complete graph has no induced C5")
    path = None
    for u in range(g.n):
        parent = {u: u}
        frontier = [u]
        while frontier and path is None:
            nxt = []
            for a in frontier:
                for b in bits(g.adj[a]):
                    if b not in parent:
                        parent[b] = a
                        nxt.append(b)
            frontier = sorted(nxt)
            far = [b for b in frontier if not g.has_edge(u, b)]
            if far:
                walk = [far[0]]
                while walk[-1] != u:
                    walk.append(parent[walk[-1]])
                path = walk[::-1]
        if path is not None:
            break
    if path is None:
        raise NotMinimal("no induced path on three vertices (graph is disconnected)")
    v1, v2, v3 = path[:3]
    full = g.full_mask
    miss12 = full & ~g.adj[v1] & ~g.adj[v2] & ~(1 << v1) & ~(1 << v2)
    miss23 = full & ~g.adj[v2] & ~g.adj[v3] & ~(1 << v2) & ~(1 << v3)
    if not miss12 or not miss23:
        raise NotMinimal(f"an edge of <{v1}, {v2}, {v3}> can be removed keeping alpha <= 2")
    v4 = (miss12 & -miss12).bit_length() - 1
    v5 = (miss23 & -miss23).bit_length() - 1
    cycle = (v1, v2, v3, v4, v5)
    if not is_induced_c5(g, cycle):
        raise NotMinimal(f"{cycle} is not an induced C5")
    return cycle


def is_induced_c5(g: Graph, cycle: tuple[int, ...]) -> bool:
    if len(set(cycle)) != 5:
        return False
    for i in range(5):
        if not g.has_edge(cycle[i], cycle[(i + 1) % 5]):
            return False
        if g.has_edge(cycle[i], cycle[(i + 2) % 5]):
            return False
    return True


class Windows(NamedTuple):
    cycle: tuple[int, int, int, int, int]
    zones: tuple[frozenset[int], ...]
    rotation: int


def partition_windows(g: Graph, cycle: tuple[int, ...], branch: frozenset[int] | set[int]) -> Windows:
    """Split the vertices outside ``branch`` and the cycle into five zones.

    Zone ``i`` (1-based) takes vertices adjacent to ``v_{i-1}, v_i,
    v_{i+1}``; a vertex fitting several zones goes to the least.  The cycle
    is then rotated so a smallest zone is zone 2, trying zones in the order
    2, 3, 4, 5, 1 on ties (no rotation when zone 2 is already smallest);
    ``rotation`` is the offset of the new ``v1`` in the input cycle.
    """
    cmask = to_mask(cycle)
    outside = g.full_mask & ~cmask & ~to_mask(branch)
    zones = [0] * 5
    for u in bits(outside):
        for j in range(5):
            if all(g.has_edge(u, cycle[(j + s) % 5]) for s in (-1, 0, 1)):
                zones[j] |= 1 << u
                break
        else:
            raise Claim1Violation(u)
    smallest = min(range(5), key=lambda j: (zones[j].bit_count(), (j - 1) % 5))
    rotation = (smallest - 1) % 5
    rotated = tuple(cycle[(i + rotation) % 5] for i in range(5))
    return Windows(rotated, tuple(from_mask(zones[(i + rotation) % 5]) for i in range(5)), rotation)  # type: ignore[arg-type]


@dataclass
class GauthierFrame:
    """State of one extension step, in the labels of that level's graph."""

    t: int
    cycle: tuple[int, int, int, int, int]
    branch: frozenset[int]
    zones: tuple[frozenset[int], ...]
    rotation: int
    x1: frozenset[int]
    x3: frozenset[int]
    y1_plus: frozenset[int]
    y3_plus: frozenset[int]
    y1: tuple[int, ...] = ()
    y3: tuple[int, ...] = ()
    commons: dict[tuple[int, int], int] = field(default_factory=dict)


def build_frame(g: Graph, cycle: tuple[int, ...], branch: frozenset[int], t: int) -> GauthierFrame:
    """Windows and the X/Y+ sets around an induced C5; checks the window
    bound and the disjointness/covering facts the extension relies on."""
    windows = partition_windows(g, cycle, branch)
    v1, _, v3, _, _ = windows.cycle
    if 5 * len(windows.zones[1]) > 3 * (t - 1):
        raise ConstructionError(f"zone 2 has {len(windows.zones[1])} vertices, more than 3(t-1)/5")
    imask = to_mask(branch)
    outside = g.full_mask & ~imask & ~to_mask(cycle)
    x1, x3 = imask & ~g.adj[v1], imask & ~g.adj[v3]
    y1p, y3p = g.adj[v1] & outside, g.adj[v3] & outside
    if x1 & x3:
        raise ConstructionError("X1 and X3 intersect")
    if y1p | y3p != outside:
        raise ConstructionError("Y1+ and Y3+ do not cover the outside vertices")
    return GauthierFrame(
        t=t,
        cycle=windows.cycle,
        branch=frozenset(branch),
        zones=windows.zones,
        rotation=windows.rotation,
        x1=from_mask(x1),
        x3=from_mask(x3),
        y1_plus=from_mask(y1p),
        y3_plus=from_mask(y3p),
    )


def select_xy(g: Graph, frame: GauthierFrame) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Disjoint ``Y1``, ``Y3`` avoiding zone 2 with ``|Yi| = |Xi|``.

    ``Y1`` prefers vertices outside ``Y3+``, then ascending index; ``Y3``
    takes the least remaining vertices of ``Y3+``.  Requires every vertex
    to have degree at least ``3t``.
    """
    t = frame.t
    need1, need3 = len(frame.x1), len(frame.x3)
    for plus, need, name in ((frame.y1_plus, need1, "Y1+"), (frame.y3_plus, need3, "Y3+")):
        if len(plus) < t + need:
            raise SelectionInfeasible(f"|{name}| = {len(plus)} < t + |X| = {t + need}")
    z2 = to_mask(frame.zones[1])
    y3p = to_mask(frame.y3_plus)
    pool1 = to_mask(frame.y1_plus) & ~z2
    order = list(bits(pool1 & ~y3p)) + list(bits(pool1 & y3p))
    if len(order) < need1:
        raise SelectionInfeasible(f"only {len(order)} candidates for Y1, need {need1}")
    y1 = tuple(sorted(order[:need1]))
    pool3 = list(bits(y3p & ~z2 & ~to_mask(y1)))
    if len(pool3) < need3:
        raise SelectionInfeasible(f"only {len(pool3)} candidates for Y3, need {need3}")
    return y1, tuple(pool3[:need3])


def _extend(g: Graph, frame: GauthierFrame) -> dict[tuple[int, int], Path]:
    """New paths joining ``v1`` and ``v3`` to each other and to the branch set."""
    v1, v2, v3, v4, v5 = frame.cycle
    paths: dict[tuple[int, int], Path] = {}

    def put(path: Path) -> None:
        if path[0] > path[-1]:
            path = path[::-1]
        paths[(path[0], path[-1])] = path

    for apex, xs, ys in ((v1, frame.x1, frame.y1), (v3, frame.x3, frame.y3)):
        for x in sorted(frame.branch - xs):
            put((apex, x))
        for x, y in zip(sorted(xs), ys):
            common = next((c for c in (v2, v4, v5) if g.has_edge(c, x) and g.has_edge(c, y)), None)
            if common is None:
                raise ConstructionError(f"{x} and {y} have no common neighbour among v2, v4, v5")
            frame.commons[(x, y)] = common
            put((apex, y, common, x))
    put((v1, v5, v4, v3))
    return paths


@dataclass
class GauthierTrace:
    levels: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"method": "gauthier", "levels": self.levels}


def _trim(h: Graph) -> list[int]:
    """Vertices kept after dropping ``n mod 5`` of least degree (ties by index)."""
    drop = set(sorted(range(h.n), key=lambda v: (h.degree(v), v))[: h.n % 5])
    return [v for v in range(h.n) if v not in drop]


def _build(h: Graph, labels: tuple[int, ...], depth: int, trace: GauthierTrace) -> Immersion:
    """Immersion of K_{2 floor(n/5)} in ``h``, in ``h``'s own labels.
    ``labels`` maps them to the caller's graph for the trace only."""
    n = h.n
    level: dict[str, Any] = {"depth": depth, "n": n}
    trace.levels.append(level)
    if n <= 9:
        if n < 5:
            level["base"] = []
            return Immersion(frozenset(), {})
        u, v = h.edges()[0]
        level["base"] = [labels[u], labels[v]]
        return clique_immersion(h, (u, v))

    kept = _trim(h)
    t = len(kept) // 5
    work, wmembers = induced_subgraph(h, kept)
    reduced, removed = edge_minimal_reduction(work)
    wlabels = tuple(labels[v] for v in wmembers)
    level.update(
        t=t,
        trimmed=[labels[v] for v in range(n) if v not in set(kept)],
        removed_edges=[[wlabels[a], wlabels[b]] for a, b in removed],
    )

    for u in range(reduced.n):
        co = reduced.full_mask & ~reduced.adj[u] & ~(1 << u)
        if co.bit_count() >= 2 * t:
            clique = list(bits(co))[: 2 * t]
            level["shortcut"] = {"vertex": wlabels[u], "clique": [wlabels[c] for c in clique]}
            return clique_immersion(reduced, clique).relabel(wmembers)

    cycle = find_induced_c5(reduced)
    rest = [v for v in range(reduced.n) if v not in cycle]
    inner_graph, inner_members = induced_subgraph(reduced, rest)
    inner = _build(inner_graph, tuple(wlabels[v] for v in inner_members), depth + 1, trace)
    inner = inner.relabel(inner_members)
    if inner.size != 2 * t - 2:
        raise ConstructionError(f"inner immersion has {inner.size} branch vertices, expected {2 * t - 2}")

    frame = build_frame(reduced, cycle, inner.branch, t)
    y1, y3 = select_xy(reduced, frame)
    frame.y1, frame.y3 = y1, y3
    paths = dict(inner.paths)
    paths.update(_extend(reduced, frame))
    v1, _, v3, _, _ = frame.cycle
    im = Immersion(inner.branch | {v1, v3}, dict(sorted(paths.items())))
    report = verify_immersion(reduced, im, require_strong=True, require_totally_odd=True)
    if not report.valid:
        raise ConstructionError(f"level {depth}: {report.violations[0].message}")

    def lab(vs: Any) -> list[int]:
        return sorted(wlabels[v] for v in vs)

    level.update(
        cycle=[wlabels[v] for v in frame.cycle],
        rotation=frame.rotation,
        zones=[lab(z) for z in frame.zones],
        X1=lab(frame.x1),
        X3=lab(frame.x3),
        Y1=[wlabels[v] for v in y1],
        Y3=[wlabels[v] for v in y3],
        commons=[[wlabels[x], wlabels[y], wlabels[c]] for (x, y), c in frame.commons.items()],
    )
    return im.relabel(wmembers)


def construct_2n5_immersion(g: Graph) -> tuple[Immersion, GauthierTrace]:
    """Strong, totally odd immersion of K_{2 floor(n/5)} in ``g``."""
    require_alpha_le_2(g)
    trace = GauthierTrace()
    im = _build(g, tuple(range(g.n)), 0, trace)
    if im.size != 2 * (g.n // 5):
        raise ConstructionError(f"{im.size} branch vertices, expected {2 * (g.n // 5)}")
    report = verify_immersion(g, im, require_strong=True, require_totally_odd=True)
    if not report.valid:
        raise ConstructionError(f"certificate rejected: {report.violations[0].message}")
    return im, trace
