"""Clique immersion certificates: construction from a special clique
colouring, joining, restriction, and independent verification."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from .andrasfai import find_induced_c4
from .errors import (
    AlphaMismatch,
    ConstructionError,
    D1NotMaximum,
    HallViolation,
    InducedC4Present,
    NotCliquePartition,
)
from .graph import Graph, Path, bits, from_mask, is_clique_mask, to_mask
from .oracles import clique_number, independent_triple

Pair = tuple[int, int]


@dataclass(frozen=True)
class Immersion:
    """Branch vertices plus one path per unordered branch pair.

    Paths are keyed ``(u, v)`` with ``u < v`` and listed from ``u`` to ``v``.
    """

    branch: frozenset[int]
    paths: Mapping[Pair, Path] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.branch)

    def edges(self) -> Iterable[tuple[Pair, Pair]]:
        """``(pair, edge)`` for every edge on every path."""
        for pair, path in self.paths.items():
            for a, b in zip(path, path[1:]):
                yield pair, (min(a, b), max(a, b))

    def relabel(self, mapping: Mapping[int, int] | tuple[int, ...]) -> Immersion:
        """Translate vertex labels, e.g. from an induced subgraph back to its host."""
        if isinstance(mapping, tuple):
            mapping = dict(enumerate(mapping))
        paths = {}
        for (u, v), path in self.paths.items():
            a, b = mapping[u], mapping[v]
            new = tuple(mapping[x] for x in path)
            if a > b:
                a, b, new = b, a, new[::-1]
            paths[(a, b)] = new
        return Immersion(frozenset(mapping[x] for x in self.branch), dict(sorted(paths.items())))


def clique_immersion(g: Graph, vertices: Iterable[int]) -> Immersion:
    """The immersion of a clique of ``g`` by its own edges."""
    branch = sorted(set(vertices))
    if not is_clique_mask(g, to_mask(branch)):
        raise ValueError(f"{branch} is not a clique")
    return Immersion(frozenset(branch), {(u, v): (u, v) for u, v in combinations(branch, 2)})


# ------------------------------------------------------------------ verification


class Finding(str, Enum):
    MALFORMED = "malformed"
    MISSING_PAIR = "missing_pair"
    ENDPOINT_MISMATCH = "endpoint_mismatch"
    NON_EDGE_STEP = "non_edge_step"
    DUPLICATE_EDGE = "duplicate_edge"
    BRANCH_INTERNAL_VERTEX = "branch_internal_vertex"
    EVEN_PATH = "even_path"


@dataclass(frozen=True)
class Violation:
    kind: Finding
    message: str
    pairs: tuple[Pair, ...] = ()
    edge: Pair | None = None
    vertex: int | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value, "message": self.message}
        if self.pairs:
            out["pairs"] = [list(p) for p in self.pairs]
        if self.edge is not None:
            out["edge"] = list(self.edge)
        if self.vertex is not None:
            out["vertex"] = self.vertex
        return out


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    strong: bool
    totally_odd: bool
    violations: tuple[Violation, ...]

    def kinds(self) -> set[Finding]:
        return {v.kind for v in self.violations}

    def to_dict(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "strong": self.strong,
            "totally_odd": self.totally_odd,
            "violations": [v.to_dict() for v in self.violations],
        }


def verify_immersion(
    g: Graph,
    im: Immersion,
    require_strong: bool = False,
    require_totally_odd: bool = False,
) -> VerificationReport:
    """Check a certificate against ``g`` and list every violation found.

    Never raises on a malformed certificate.  ``strong`` and
    ``totally_odd`` are always reported; they only produce violations when
    required.
    """
    found: list[Violation] = []
    branch = set(im.branch)
    for b in sorted(branch):
        if not 0 <= b < g.n:
            found.append(Violation(Finding.MALFORMED, f"branch vertex {b} out of range", vertex=b))

    usable: dict[Pair, Path] = {}
    for pair, path in im.paths.items():
        u, v = pair
        if not (u < v and u in branch and v in branch):
            found.append(Violation(Finding.MALFORMED, f"path keyed {pair} is not a branch pair", pairs=(pair,)))
            continue
        if len(path) < 2:
            found.append(Violation(Finding.MALFORMED, f"path for {pair} has no edge", pairs=(pair,)))
            continue
        bad = [x for x in path if not 0 <= x < g.n]
        if bad:
            found.append(Violation(Finding.MALFORMED, f"path for {pair} leaves the graph at {bad[0]}", pairs=(pair,), vertex=bad[0]))
            continue
        if len(set(path)) != len(path):
            found.append(Violation(Finding.MALFORMED, f"path for {pair} repeats a vertex", pairs=(pair,)))
            continue
        usable[pair] = path

    for pair in combinations(sorted(branch), 2):
        if pair not in im.paths:
            found.append(Violation(Finding.MISSING_PAIR, f"no path for pair {pair}", pairs=(pair,)))

    for pair, path in usable.items():
        if (path[0], path[-1]) != pair:
            found.append(
                Violation(Finding.ENDPOINT_MISMATCH, f"path for {pair} runs {path[0]}..{path[-1]}", pairs=(pair,))
            )

    owners: dict[Pair, list[Pair]] = defaultdict(list)
    for pair, path in usable.items():
        for a, b in zip(path, path[1:]):
            edge = (min(a, b), max(a, b))
            if not g.has_edge(a, b):
                found.append(Violation(Finding.NON_EDGE_STEP, f"path for {pair} steps along non-edge {edge}", pairs=(pair,), edge=edge))
            owners[edge].append(pair)
    for edge in sorted(owners):
        if len(owners[edge]) > 1:
            pairs = tuple(owners[edge])
            found.append(Violation(Finding.DUPLICATE_EDGE, f"edge {edge} used by {list(pairs)}", pairs=pairs, edge=edge))

    strong = True
    for pair, path in usable.items():
        for x in path[1:-1]:
            if x in branch:
                strong = False
                if require_strong:
                    found.append(
                        Violation(Finding.BRANCH_INTERNAL_VERTEX, f"branch vertex {x} is internal to the path for {pair}", pairs=(pair,), vertex=x)
                    )

    totally_odd = True
    for pair, path in usable.items():
        if (len(path) - 1) % 2 == 0:
            totally_odd = False
            if require_totally_odd:
                found.append(Violation(Finding.EVEN_PATH, f"path for {pair} has even length {len(path) - 1}", pairs=(pair,)))

    return VerificationReport(not found, strong, totally_odd, tuple(found))


# -------------------------------------------------------------- combination


def join_immersions(g: Graph, first: Immersion, second: Immersion) -> Immersion:
    """Union of two immersions whose branch sets are completely joined in ``g``;
    cross pairs are routed along the joining edges."""
    if first.branch & second.branch:
        raise ValueError("branch sets overlap")
    used = {edge for _, edge in first.edges()}
    for _, edge in second.edges():
        if edge in used:
            raise ValueError(f"edge {edge} used by both immersions")
    paths = dict(first.paths)
    paths.update(second.paths)
    for a in first.branch:
        for b in second.branch:
            if not g.has_edge(a, b):
                raise ValueError(f"cross pair {a}-{b} is not an edge")
            paths[(min(a, b), max(a, b))] = (min(a, b), max(a, b))
    return Immersion(first.branch | second.branch, dict(sorted(paths.items())))


def branch_restrict(im: Immersion, target: Iterable[int]) -> Immersion:
    """Sub-immersion on ``target``: the paths between target pairs only."""
    keep = frozenset(target)
    if not keep <= im.branch:
        raise ValueError(f"{sorted(keep - im.branch)} are not branch vertices")
    return Immersion(keep, {p: path for p, path in im.paths.items() if p[0] in keep and p[1] in keep})


# -------------------------------------------------------------- construction


def hall_matching(g: Graph, side: Iterable[int], ground: Iterable[int]) -> dict[int, int]:
    """Match every vertex of ``side`` to a distinct non-neighbour in ``ground``.

    Augmenting paths scan ``side`` and ``ground`` in ascending order.  On
    failure the raised :class:`HallViolation` carries the set of side
    vertices reached by the failed search, which has fewer co-neighbours in
    ``ground`` than members.
    """
    side_list = sorted(set(side))
    ground_mask = to_mask(ground)
    if to_mask(side_list) & ground_mask:
        raise ValueError("side and ground must be disjoint")
    options = {x: list(bits(ground_mask & ~g.adj[x])) for x in side_list}
    owner: dict[int, int] = {}

    def augment(x: int, seen: set[int], reached: set[int]) -> bool:
        reached.add(x)
        for y in options[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen, reached):
                owner[y] = x
                return True
        return False

    for x in side_list:
        seen: set[int] = set()
        reached: set[int] = set()
        if not augment(x, seen, reached):
            raise HallViolation(frozenset(reached), frozenset(seen))
    return {x: y for y, x in sorted(owner.items(), key=lambda item: item[1])}


def _check_clique_partition(g: Graph, parts: tuple[frozenset[int], ...]) -> None:
    covered = 0
    for i, part in enumerate(parts, start=1):
        mask = to_mask(part)
        if any(not 0 <= v < g.n for v in part):
            raise NotCliquePartition(f"D{i} has a vertex outside the graph")
        if mask & covered:
            raise NotCliquePartition(f"D{i} overlaps an earlier class")
        if not is_clique_mask(g, mask):
            raise NotCliquePartition(f"D{i} is not a clique")
        covered |= mask
    if covered != g.full_mask:
        raise NotCliquePartition(f"classes miss {sorted(from_mask(g.full_mask & ~covered))}")


def representatives(g: Graph, coloring: tuple[Iterable[int], Iterable[int], Iterable[int]]) -> dict[int, int]:
    """Representative in D1 of every vertex of D2 and D3 (two Hall matchings)."""
    d1, d2, d3 = (frozenset(p) for p in coloring)
    reps = hall_matching(g, d2, d1)
    reps.update(hall_matching(g, d3, d1))
    return reps


def construct_from_clique_coloring(
    g: Graph, coloring: tuple[Iterable[int], Iterable[int], Iterable[int]]
) -> Immersion:
    """Clique immersion with branch set exactly ``D2 | D3``.

    Requires ``(D1, D2, D3)`` to partition V(g) into cliques with D1 a
    maximum clique and no induced C4 in ``g[D2 | D3]``, and alpha(g) = 2.
    Adjacent pairs use their edge; a non-adjacent pair ``u in D2``,
    ``v in D3`` uses ``<u, r_v, r_u, v>`` through the representatives.
    """
    d1, d2, d3 = (frozenset(p) for p in coloring)
    _check_clique_partition(g, (d1, d2, d3))
    branch = sorted(d2 | d3)
    if g.is_complete():
        return clique_immersion(g, branch)

    triple = independent_triple(g)
    if triple is not None:
        raise AlphaMismatch(f"independent triple {triple}: alpha(G) > 2")
    omega = clique_number(g)
    if len(d1) != omega:
        raise D1NotMaximum(f"|D1| = {len(d1)} but the clique number is {omega}")
    c4 = find_induced_c4(g, d2 | d3)
    if c4 is not None:
        raise InducedC4Present(c4)

    reps = representatives(g, (d1, d2, d3))
    paths: dict[Pair, Path] = {}
    for u, v in combinations(branch, 2):
        if g.has_edge(u, v):
            paths[(u, v)] = (u, v)
            continue
        # non-adjacent pairs only occur across D2 x D3
        ru, rv = reps[u], reps[v]
        if ru == rv:
            raise ConstructionError(f"{u} and {v} share representative {ru}")
        if not (g.has_edge(rv, u) and g.has_edge(ru, v) and g.has_edge(ru, rv)):
            raise ConstructionError(f"representatives {ru}, {rv} do not route {u}-{v}")
        paths[(u, v)] = (u, rv, ru, v)
    im = Immersion(frozenset(branch), paths)
    report = verify_immersion(g, im, require_strong=True, require_totally_odd=True)
    if not report.valid:
        raise ConstructionError(f"constructed certificate rejected: {report.violations[0].message}")
    return im
