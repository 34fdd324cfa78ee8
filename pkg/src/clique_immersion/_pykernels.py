"""Pure-Python search kernels.

These are the reference implementations of the exact searches; the Cython
module ``_kernels`` mirrors them step for step (same branching order, same
tie-breaks) so both backends return identical answers.  All graphs arrive as
lists of adjacency bitmasks.
"""

from __future__ import annotations

from collections.abc import Sequence


def _color_bound(adj: Sequence[int], p: int) -> int:
    # Greedy sequential colouring of p in ascending order; an upper bound on
    # the clique number of the subgraph induced by p.
    count = 0
    while p:
        count += 1
        q = p
        while q:
            low = q & -q
            p &= ~low
            q &= ~adj[low.bit_length() - 1] & ~low
    return count


def max_clique(adj: Sequence[int], n: int) -> int:
    """Mask of the lexicographically least maximum clique.

    Include-before-exclude branching on the least candidate visits cliques of
    equal size in lexicographic order, so the first clique reaching the
    optimum size is the lexicographically least one.
    """
    best_mask = 0
    best_size = 0

    def expand(r: int, size: int, p: int) -> None:
        nonlocal best_mask, best_size
        if size > best_size:
            best_mask, best_size = r, size
        while p:
            if size + _color_bound(adj, p) <= best_size:
                return
            low = p & -p
            expand(r | low, size + 1, p & adj[low.bit_length() - 1])
            p &= ~low

    expand(0, 0, (1 << n) - 1)
    return best_mask


def k_coloring(adj: Sequence[int], n: int, k: int) -> list[int] | None:
    """Colour per vertex of a proper ``k``-colouring, or ``None``.

    DSATUR order (most distinct forbidden colours, then highest degree, then
    least index); colours tried ascending and a fresh colour is only opened
    as the next unused one.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    forbidden = [0] * n
    degree = [row.bit_count() for row in adj]

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = -1
        best_sat = best_deg = -1
        for u in range(n):
            if color[u] < 0:
                sat = forbidden[u].bit_count()
                if sat > best_sat or (sat == best_sat and degree[u] > best_deg):
                    v, best_sat, best_deg = u, sat, degree[u]
        limit = min(used + 1, k)
        for c in range(limit):
            if forbidden[v] >> c & 1:
                continue
            saved = []
            bit = 1 << c
            row = adj[v]
            while row:
                low = row & -row
                w = low.bit_length() - 1
                row ^= low
                if color[w] < 0 and not forbidden[w] & bit:
                    saved.append(w)
                    forbidden[w] |= bit
            color[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
            color[v] = -1
            for w in saved:
                forbidden[w] &= ~bit
        return False

    return color if rec(0, 0) else None


def hom_search(
    adj: Sequence[int], n: int, target_adj: Sequence[int], m: int, root: int
) -> list[int] | None:
    """Homomorphism of a connected source into the target, or ``None``.

    ``root`` is pinned to target vertex 0 (the caller relies on the target
    being vertex-transitive).  Forward checking keeps every unassigned
    vertex's domain consistent with its assigned neighbours; the next vertex
    is the one with the smallest domain, then highest degree, then least
    index; targets are tried ascending.
    """
    if n == 0:
        return []
    dom = [(1 << m) - 1] * n
    dom[root] = 1
    image = [-1] * n
    degree = [row.bit_count() for row in adj]

    def rec(done: int) -> bool:
        if done == n:
            return True
        v = -1
        best_size = m + 1
        best_deg = -1
        for u in range(n):
            if image[u] < 0:
                size = dom[u].bit_count()
                if size < best_size or (size == best_size and degree[u] > best_deg):
                    v, best_size, best_deg = u, size, degree[u]
        choices = dom[v]
        while choices:
            low = choices & -choices
            c = low.bit_length() - 1
            choices ^= low
            allowed = target_adj[c]
            saved = []
            ok = True
            row = adj[v]
            while row:
                wl = row & -row
                w = wl.bit_length() - 1
                row ^= wl
                if image[w] < 0:
                    narrowed = dom[w] & allowed
                    if narrowed != dom[w]:
                        saved.append((w, dom[w]))
                        dom[w] = narrowed
                    if not narrowed:
                        ok = False
                        break
            if ok:
                image[v] = c
                if rec(done + 1):
                    return True
                image[v] = -1
            for w, old in saved:
                dom[w] = old
        return False

    return image if rec(0) else None
