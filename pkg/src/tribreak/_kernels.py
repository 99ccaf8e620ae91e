"""Numba kernels over CSR adjacency arrays.

Every kernel works on the raw arrays held by :class:`tribreak.graph.Graph`:

    indptr, indices   CSR rows, each row sorted ascending by internal label
    slot_edge         canonical edge id of each directed slot
    edge_removed      tombstone per canonical edge
    node_removed      tombstone per node

A live edge always has two live endpoints, so kernels only test
``edge_removed`` when walking a row.
"""

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# forward triangle counting / listing
# ---------------------------------------------------------------------------


@njit(cache=True)
def forward_count(n, indptr, indices, slot_edge, edge_removed, node_removed, m_total):
    T = np.zeros(n, np.int64)
    tr = np.zeros(m_total, np.int64)
    # A(x) lives in the slot range of row x; filled in decreasing label order
    a_node = np.empty(indices.shape[0], np.int64)
    a_edge = np.empty(indices.shape[0], np.int64)
    a_len = np.zeros(n, np.int64)
    total = 0
    for u in range(n - 1, -1, -1):
        if node_removed[u]:
            continue
        for s in range(indptr[u], indptr[u + 1]):
            v = indices[s]
            if v >= u:
                break
            e_uv = slot_edge[s]
            if edge_removed[e_uv]:
                continue
            i = indptr[u]
            iend = i + a_len[u]
            j = indptr[v]
            jend = j + a_len[v]
            while i < iend and j < jend:
                a = a_node[i]
                b = a_node[j]
                if a == b:
                    T[u] += 1
                    T[v] += 1
                    T[a] += 1
                    tr[e_uv] += 1
                    tr[a_edge[i]] += 1
                    tr[a_edge[j]] += 1
                    total += 1
                    i += 1
                    j += 1
                elif a > b:
                    i += 1
                else:
                    j += 1
            p = indptr[v] + a_len[v]
            a_node[p] = u
            a_edge[p] = e_uv
            a_len[v] += 1
    return T, tr, total


@njit(cache=True)
def forward_list(n, indptr, indices, slot_edge, edge_removed, node_removed, total):
    out = np.empty((total, 3), np.int64)
    a_node = np.empty(indices.shape[0], np.int64)
    a_len = np.zeros(n, np.int64)
    k = 0
    for u in range(n - 1, -1, -1):
        if node_removed[u]:
            continue
        for s in range(indptr[u], indptr[u + 1]):
            v = indices[s]
            if v >= u:
                break
            if edge_removed[slot_edge[s]]:
                continue
            i = indptr[u]
            iend = i + a_len[u]
            j = indptr[v]
            jend = j + a_len[v]
            while i < iend and j < jend:
                a = a_node[i]
                b = a_node[j]
                if a == b:
                    # v < u < a by construction
                    out[k, 0] = v
                    out[k, 1] = u
                    out[k, 2] = a
                    k += 1
                    i += 1
                    j += 1
                elif a > b:
                    i += 1
                else:
                    j += 1
            a_node[indptr[v] + a_len[v]] = u
            a_len[v] += 1
    return out[:k]


# ---------------------------------------------------------------------------
# bucket queue: score-indexed buckets, each a lazy binary min-heap of ids
#
# Scores only fall one unit at a time, so an element enters bucket b at most
# once and only if its initial score is >= b. Bucket capacities are therefore
# known at build time and every heap lives in one flat pool:
# heap b occupies pool[offset[b] : offset[b + 1]], of which sizes[b] are used.
# ---------------------------------------------------------------------------


@njit(cache=True)
def queue_build(score):
    """Return ``(pool, offset, sizes, top)``.

    Bucket 0 is never stored: once the cursor reaches it no further
    decrement is possible, so its members are served by scanning ids.
    """
    top = 0
    for x in range(score.shape[0]):
        if score[x] > top:
            top = score[x]
    at_least = np.zeros(top + 2, np.int64)
    for x in range(score.shape[0]):
        at_least[score[x]] += 1
    for b in range(top - 1, -1, -1):
        at_least[b] += at_least[b + 1]
    offset = np.zeros(top + 2, np.int64)
    for b in range(1, top + 1):
        offset[b + 1] = offset[b] + at_least[b]
    pool = np.empty(offset[top + 1], np.int64)
    sizes = np.zeros(top + 1, np.int64)
    # ids pushed in ascending order form valid min-heaps without sifting
    for x in range(score.shape[0]):
        b = score[x]
        if b > 0:
            pool[offset[b] + sizes[b]] = x
            sizes[b] += 1
    return pool, offset, sizes, top


@njit(cache=True)
def _heap_push(pool, offset, sizes, b, x):
    base = offset[b]
    i = sizes[b]
    while i > 0:
        p = (i - 1) >> 1
        if pool[base + p] <= x:
            break
        pool[base + i] = pool[base + p]
        i = p
    pool[base + i] = x
    sizes[b] += 1


@njit(cache=True)
def _heap_pop(pool, offset, sizes, b):
    base = offset[b]
    n = sizes[b] - 1
    top = pool[base]
    x = pool[base + n]
    i = 0
    while True:
        c = 2 * i + 1
        if c >= n:
            break
        if c + 1 < n and pool[base + c + 1] < pool[base + c]:
            c += 1
        if x <= pool[base + c]:
            break
        pool[base + i] = pool[base + c]
        i = c
    pool[base + i] = x
    sizes[b] = n
    return top


@njit(cache=True)
def queue_pop(pool, offset, sizes, score, alive, b, z):
    """Pop (max score, min id).

    ``b`` is the bucket cursor and ``z`` the scan position inside the zero
    bucket; returns ``(x, b, z)`` with ``x = -1`` once empty. Callers keep
    the cursor in locals, which is far cheaper than an array round trip.
    """
    while b > 0:
        if sizes[b] == 0:
            b -= 1
            continue
        x = _heap_pop(pool, offset, sizes, b)
        # stale entry: scores only fall, so x reached this bucket once
        if alive[x] and score[x] == b:
            alive[x] = False
            return x, b, z
    n = alive.shape[0]
    if b < 0:
        return -1, b, z
    while z < n and not alive[z]:
        z += 1
    if z == n:
        return -1, -1, z
    alive[z] = False
    return z, 0, z + 1


@njit(cache=True)
def queue_decrement(pool, offset, sizes, score, x):
    s = score[x] - 1
    score[x] = s
    if s > 0:
        _heap_push(pool, offset, sizes, s, x)


# ---------------------------------------------------------------------------
# discounting phases
# ---------------------------------------------------------------------------


@njit(cache=True)
def node_discount_steps(indptr, indices, slot_edge, degree, node_removed,
                        edge_removed, edge_count, pool, offset, sizes, score, alive,
                        cursor, rank_node, node_rank, mark, max_steps, target,
                        cumulative, out_rank, out_gain):
    """Pop-and-discount up to ``max_steps`` nodes.

    Stops early once ``cumulative`` reaches ``target`` (target <= 0 disables).
    ``edge_count`` is a 1-element array and ``cursor`` holds the queue cursor
    pair. Returns the number of steps taken.
    """
    steps = 0
    b = cursor[0]
    z = cursor[1]
    while steps < max_steps:
        if target > 0 and cumulative >= target:
            break
        r, b, z = queue_pop(pool, offset, sizes, score, alive, b, z)
        if r < 0:
            break
        u = rank_node[r]
        gain = score[r]
        out_rank[steps] = r
        out_gain[steps] = gain
        cumulative += gain
        steps += 1
        lo = indptr[u]
        hi = indptr[u + 1]
        if gain > 0:
            for s in range(lo, hi):
                if not edge_removed[slot_edge[s]]:
                    mark[indices[s]] = True
            for s in range(lo, hi):
                if edge_removed[slot_edge[s]]:
                    continue
                v = indices[s]
                rv = node_rank[v]
                if score[rv] == 0:
                    continue
                # unordered pairs only: w > v, so each broken triangle
                # decrements each surviving corner exactly once
                for t in range(indptr[v], indptr[v + 1]):
                    w = indices[t]
                    if w > v and mark[w] and not edge_removed[slot_edge[t]]:
                        queue_decrement(pool, offset, sizes, score, rv)
                        queue_decrement(pool, offset, sizes, score, node_rank[w])
        for s in range(lo, hi):
            e = slot_edge[s]
            if edge_removed[e]:
                continue
            v = indices[s]
            mark[v] = False
            edge_removed[e] = True
            degree[v] -= 1
            edge_count[0] -= 1
        degree[u] = 0
        node_removed[u] = True
    cursor[0] = b
    cursor[1] = z
    return steps


@njit(cache=True)
def edge_discount_steps(indptr, indices, slot_edge, edges, degree,
                        edge_removed, edge_count, pool, offset, sizes, score, alive,
                        cursor, rank_edge, edge_rank, max_steps, target,
                        cumulative, out_rank, out_gain):
    steps = 0
    b = cursor[0]
    z = cursor[1]
    while steps < max_steps:
        if target > 0 and cumulative >= target:
            break
        r, b, z = queue_pop(pool, offset, sizes, score, alive, b, z)
        if r < 0:
            break
        e = rank_edge[r]
        gain = score[r]
        out_rank[steps] = r
        out_gain[steps] = gain
        cumulative += gain
        steps += 1
        p = edges[e, 0]
        q = edges[e, 1]
        edge_removed[e] = True
        degree[p] -= 1
        degree[q] -= 1
        edge_count[0] -= 1
        if gain == 0:
            continue
        i = indptr[p]
        iend = indptr[p + 1]
        j = indptr[q]
        jend = indptr[q + 1]
        while i < iend and j < jend:
            x = indices[i]
            y = indices[j]
            if x == y:
                ea = slot_edge[i]
                eb = slot_edge[j]
                if not edge_removed[ea] and not edge_removed[eb]:
                    queue_decrement(pool, offset, sizes, score, edge_rank[ea])
                    queue_decrement(pool, offset, sizes, score, edge_rank[eb])
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
    cursor[0] = b
    cursor[1] = z
    return steps
