# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit bitsets.

Step-for-step mirror of ``_pykernels``; callers must keep n <= 64 (and
m <= 64 for the homomorphism target).
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long)
    int ctz "__builtin_ctzll"(unsigned long long)


cdef inline uint64_t full_mask(int n):
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef void load(list rows, uint64_t* out, int n):
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>rows[i]


# ---------------------------------------------------------------- max clique

cdef struct CliqueCtx:
    uint64_t adj[64]
    uint64_t best_mask
    int best_size


cdef int color_bound(CliqueCtx* ctx, uint64_t p):
    cdef int count = 0
    cdef uint64_t q, low
    while p:
        count += 1
        q = p
        while q:
            low = q & (~q + 1)
            p &= ~low
            q &= ~ctx.adj[ctz(low)] & ~low
    return count


cdef void expand(CliqueCtx* ctx, uint64_t r, int size, uint64_t p):
    cdef uint64_t low
    if size > ctx.best_size:
        ctx.best_mask = r
        ctx.best_size = size
    while p:
        if size + color_bound(ctx, p) <= ctx.best_size:
            return
        low = p & (~p + 1)
        expand(ctx, r | low, size + 1, p & ctx.adj[ctz(low)])
        p &= ~low


def max_clique(list adj, int n):
    cdef CliqueCtx ctx
    load(adj, ctx.adj, n)
    ctx.best_mask = 0
    ctx.best_size = 0
    expand(&ctx, 0, 0, full_mask(n))
    return int(ctx.best_mask)


# ---------------------------------------------------------------- k-colouring

cdef struct ColorCtx:
    uint64_t adj[64]
    uint64_t forbidden[64]
    int color[64]
    int degree[64]
    int n
    int k


cdef bint color_rec(ColorCtx* ctx, int done, int used):
    cdef int u, v, c, w, sat, limit, nsaved, i
    cdef int best_sat = -1
    cdef int best_deg = -1
    cdef uint64_t bit, row, low
    cdef int saved[64]
    if done == ctx.n:
        return True
    v = -1
    for u in range(ctx.n):
        if ctx.color[u] < 0:
            sat = popcount(ctx.forbidden[u])
            if sat > best_sat or (sat == best_sat and ctx.degree[u] > best_deg):
                v = u
                best_sat = sat
                best_deg = ctx.degree[u]
    limit = used + 1 if used + 1 < ctx.k else ctx.k
    for c in range(limit):
        bit = (<uint64_t>1) << c
        if ctx.forbidden[v] & bit:
            continue
        nsaved = 0
        row = ctx.adj[v]
        while row:
            low = row & (~row + 1)
            w = ctz(low)
            row ^= low
            if ctx.color[w] < 0 and not (ctx.forbidden[w] & bit):
                saved[nsaved] = w
                nsaved += 1
                ctx.forbidden[w] |= bit
        ctx.color[v] = c
        if color_rec(ctx, done + 1, used if used > c + 1 else c + 1):
            return True
        ctx.color[v] = -1
        for i in range(nsaved):
            ctx.forbidden[saved[i]] &= ~bit
    return False


def k_coloring(list adj, int n, int k):
    cdef ColorCtx ctx
    cdef int i
    if n == 0:
        return []
    if k <= 0:
        return None
    if k > 64:
        k = 64
    load(adj, ctx.adj, n)
    ctx.n = n
    ctx.k = k
    for i in range(n):
        ctx.color[i] = -1
        ctx.forbidden[i] = 0
        ctx.degree[i] = popcount(ctx.adj[i])
    if color_rec(&ctx, 0, 0):
        return [ctx.color[i] for i in range(n)]
    return None


# ---------------------------------------------------------------- homomorphism

cdef struct HomCtx:
    uint64_t adj[64]
    uint64_t tadj[64]
    uint64_t dom[64]
    int image[64]
    int degree[64]
    int n
    int m


cdef bint hom_rec(HomCtx* ctx, int done):
    cdef int u, v, c, w, size, nsaved, i
    cdef int best_size = ctx.m + 1
    cdef int best_deg = -1
    cdef uint64_t choices, low, allowed, row, wl, narrowed
    cdef bint ok
    cdef int saved_w[64]
    cdef uint64_t saved_dom[64]
    if done == ctx.n:
        return True
    v = -1
    for u in range(ctx.n):
        if ctx.image[u] < 0:
            size = popcount(ctx.dom[u])
            if size < best_size or (size == best_size and ctx.degree[u] > best_deg):
                v = u
                best_size = size
                best_deg = ctx.degree[u]
    choices = ctx.dom[v]
    while choices:
        low = choices & (~choices + 1)
        c = ctz(low)
        choices ^= low
        allowed = ctx.tadj[c]
        nsaved = 0
        ok = True
        row = ctx.adj[v]
        while row:
            wl = row & (~row + 1)
            w = ctz(wl)
            row ^= wl
            if ctx.image[w] < 0:
                narrowed = ctx.dom[w] & allowed
                if narrowed != ctx.dom[w]:
                    saved_w[nsaved] = w
                    saved_dom[nsaved] = ctx.dom[w]
                    nsaved += 1
                    ctx.dom[w] = narrowed
                if not narrowed:
                    ok = False
                    break
        if ok:
            ctx.image[v] = c
            if hom_rec(ctx, done + 1):
                return True
            ctx.image[v] = -1
        for i in range(nsaved):
            ctx.dom[saved_w[i]] = saved_dom[i]
    return False


def hom_search(list adj, int n, list target_adj, int m, int root):
    cdef HomCtx ctx
    cdef int i
    if n == 0:
        return []
    load(adj, ctx.adj, n)
    load(target_adj, ctx.tadj, m)
    ctx.n = n
    ctx.m = m
    for i in range(n):
        ctx.dom[i] = full_mask(m)
        ctx.image[i] = -1
        ctx.degree[i] = popcount(ctx.adj[i])
    ctx.dom[root] = 1
    if hom_rec(&ctx, 0):
        return [ctx.image[i] for i in range(n)]
    return None
