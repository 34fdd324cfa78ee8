"""Seeded instance generators.

Randomness comes from :class:`XorShift64Star` (Vigna's xorshift64*, state
seeded through one splitmix64 step) rather than the stdlib Mersenne
Twister, so that a seed names the same instance in any implementation.
"""

from __future__ import annotations

from collections.abc import MutableSequence, Sequence
from typing import TypeVar

from .andrasfai import Homomorphism, build_gamma
from .graph import Graph, complement

T = TypeVar("T")

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    """xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D)."""

    def __init__(self, seed: int) -> None:
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def randint(self, a: int, b: int) -> int:
        return a + self.randbelow(b - a + 1)

    def shuffle(self, seq: MutableSequence[T]) -> None:
        """Fisher-Yates, swapping position ``i`` (descending) with ``randbelow(i + 1)``."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def blowup_of_gamma(d: int, sizes: Sequence[int]) -> tuple[Graph, Homomorphism]:
    """Blow-up of Gamma_d with class ``i`` of size ``sizes[i]``; classes take
    consecutive vertex labels in class order.  Also returns the class map."""
    gamma = build_gamma(d).graph
    if len(sizes) != gamma.n:
        raise ValueError(f"Gamma_{d} has {gamma.n} vertices, got {len(sizes)} sizes")
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be non-negative")
    image = tuple(x for x, size in enumerate(sizes) for _ in range(size))
    n = len(image)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if gamma.has_edge(image[u], image[v]):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj)), Homomorphism(d, image)


def gen_blowup_complement(d: int, sizes: Sequence[int], seed: int | None = None) -> Graph:
    """Complement of a Gamma_d blow-up; alpha <= 2 since blow-ups of Gamma_d
    are triangle-free.  ``seed`` is accepted for interface uniformity only."""
    blowup, _ = blowup_of_gamma(d, sizes)
    return complement(blowup)


def gen_random_alpha2(n: int, p: float, seed: int) -> Graph:
    """Complement of a random triangle-free graph.

    Candidate pairs are visited in a seeded shuffle of lexicographic order;
    each draws one coin and is inserted when the coin is below ``p`` and no
    triangle would form.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = XorShift64Star(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    tri_free = [0] * n
    for u, v in pairs:
        if rng.random() < p and not tri_free[u] & tri_free[v]:
            tri_free[u] |= 1 << v
            tri_free[v] |= 1 << u
    return complement(Graph(n, tuple(tri_free)))
