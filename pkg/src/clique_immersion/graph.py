"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Adjacency rows are Python ints used as bitsets: bit ``v`` of ``adj[u]`` is
set iff ``uv`` is an edge.  Vertex sets crossing the public API are
``frozenset[int]``; internally most code works on masks.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Literal

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    SelfLoopError,
    VertexRangeError,
)

Path = tuple[int, ...]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbour out of range")
            if row >> u & 1:
                raise ValueError(f"self-loop at {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> frozenset[int]:
        return from_mask(self.adj[u])

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines format.

    Blank lines and lines starting with ``#`` are skipped.  Raises a
    :class:`~clique_immersion.errors.GraphParseError` subclass naming the
    offending line.
    """
    header: tuple[int, int] | None = None
    adj: list[int] = []
    seen = 0
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        last_line = line_no
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedLineError(line_no, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLineError(line_no, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise MalformedLineError(line_no, "negative size in header")
            header = (a, b)
            adj = [0] * a
            continue
        n, m = header
        if seen == m:
            raise MalformedLineError(line_no, f"more than the declared {m} edges")
        for x in (a, b):
            if not 0 <= x < n:
                raise VertexRangeError(line_no, f"vertex {x} not in [0, {n})")
        if a == b:
            raise SelfLoopError(line_no, f"self-loop at {a}")
        if adj[a] >> b & 1:
            raise DuplicateEdgeError(line_no, f"duplicate edge {a} {b}")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
        seen += 1
    if header is None:
        raise MalformedLineError(last_line + 1, "missing 'n m' header")
    if seen != header[1]:
        raise MalformedLineError(last_line + 1, f"declared {header[1]} edges, found {seen}")
    return Graph(header[0], tuple(adj))


def serialize_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` relabelled ``0..|s|-1`` in ascending order, plus the map
    from new labels back to the original vertices."""
    members = tuple(sorted(set(s)))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        row = 0
        for w in bits(g.adj[v]):
            i = index.get(w)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph(len(members), tuple(adj)), members


def co_neighbors(g: Graph, u: int, x: Iterable[int]) -> frozenset[int]:
    """Vertices of ``x`` other than ``u`` that are not adjacent to ``u``."""
    return from_mask(to_mask(x) & ~g.adj[u] & ~(1 << u))


def is_clique_mask(g: Graph, mask: int) -> bool:
    return all(mask & ~g.adj[v] == 1 << v for v in bits(mask))


def is_independent_mask(g: Graph, mask: int) -> bool:
    return all(not (mask & g.adj[v]) for v in bits(mask))


def check_set(g: Graph, s: Iterable[int], mode: Literal["clique", "independent"]) -> bool:
    mask = to_mask(s)
    if mode == "clique":
        return is_clique_mask(g, mask)
    if mode == "independent":
        return is_independent_mask(g, mask)
    raise ValueError(f"unknown mode {mode!r}")


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by least vertex."""
    remaining = g.full_mask
    out = []
    while remaining:
        frontier = comp = remaining & -remaining
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(from_mask(comp))
        remaining &= ~comp
    return out
