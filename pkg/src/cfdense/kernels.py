"""Compiled bitmask kernels.

Vertex sets are int64 masks (bit ``v`` set means ``v`` is in the set) and a
graph is an int64 array ``adj`` with ``adj[v]`` the neighbor mask of ``v``.
Everything here is a pure function of ``(adj, n, mask)`` so the Python layer
can call it from any thread.
"""

import numpy as np
from numba import njit

MAX_VERTICES = 62

# variant codes shared with the Python layer
Z, ZT, ZC = 0, 1, 2


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def bit_index(b):
    # b must be a nonzero mask; returns the index of its lowest set bit
    i = 0
    while not (b >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def closure(adj, n, s):
    """Fixpoint of the color change rule started from ``s``."""
    blue = s
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (blue >> v) & 1:
                w = adj[v] & ~blue
                if w != 0 and (w & (w - 1)) == 0:
                    blue |= w
                    changed = True
    return blue


@njit(cache=True)
def is_connected(adj, n, s):
    if s == 0:
        return False
    reach = s & -s
    frontier = reach
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        nxt &= s & ~reach
        reach |= nxt
        frontier = nxt
    return reach == s


@njit(cache=True)
def component_count(adj, n, s):
    count = 0
    rest = s
    while rest:
        reach = rest & -rest
        frontier = reach
        while frontier:
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            nxt &= rest & ~reach
            reach |= nxt
            frontier = nxt
        rest &= ~reach
        count += 1
    return count


@njit(cache=True)
def isolate_free(adj, n, s):
    for v in range(n):
        if (s >> v) & 1 and (adj[v] & s) == 0:
            return False
    return True


@njit(cache=True)
def chronology(adj, n, s):
    """Synchronous forcing from ``s``.

    Returns ``(closure, forcer, when)`` where ``forcer[w]`` is the vertex
    that forced ``w`` (-1 if never forced) and ``when[w]`` its timestep.
    Forces valid at the same step fire together; when several forcers target
    one vertex the lowest index is recorded.
    """
    forcer = np.full(n, -1, np.int64)
    when = np.zeros(n, np.int64)
    blue = s
    t = 0
    while True:
        t += 1
        newly = 0
        for u in range(n):
            if (blue >> u) & 1:
                w = adj[u] & ~blue
                if w != 0 and (w & (w - 1)) == 0 and (newly & w) == 0:
                    newly |= w
                    i = bit_index(w)
                    forcer[i] = u
                    when[i] = t
        if newly == 0:
            break
        blue |= newly
    return blue, forcer, when


@njit(cache=True)
def reversal(adj, n, s):
    """Terminal vertices of the forcing chains of ``s``; -1 if ``s`` is not forcing."""
    full = (1 << n) - 1
    blue, forcer, _ = chronology(adj, n, s)
    if blue != full:
        return -1
    nxt = np.full(n, -1, np.int64)
    for w in range(n):
        if forcer[w] >= 0:
            nxt[forcer[w]] = w
    out = 0
    for v in range(n):
        if (s >> v) & 1:
            x = v
            while nxt[x] >= 0:
                x = nxt[x]
            out |= 1 << x
    return out


@njit(cache=True)
def _push(buf, cnt, m):
    if cnt == buf.size:
        grown = np.empty(buf.size * 2, np.int64)
        grown[:cnt] = buf[:cnt]
        buf = grown
    buf[cnt] = m
    return buf


@njit(cache=True)
def search_subsets(adj, n, k, variant, stop_first, store):
    """Scan k-subsets in lexicographic order for zero (or total) forcing sets.

    Returns ``(masks, count, nodes)``: accepted masks (when ``store``), the
    number accepted and the number of candidates evaluated.
    """
    full = (1 << n) - 1
    buf = np.empty(16, np.int64)
    cnt = 0
    nodes = 0
    if k < 0 or k > n:
        return buf[:0], 0, 0
    idx = np.arange(k)
    while True:
        m = 0
        for j in range(k):
            m |= 1 << idx[j]
        nodes += 1
        ok = True
        if variant == ZT and not isolate_free(adj, n, m):
            ok = False
        if ok and closure(adj, n, m) == full:
            if store:
                buf = _push(buf, cnt, m)
            cnt += 1
            if stop_first:
                break
        j = k - 1
        while j >= 0 and idx[j] == n - k + j:
            j -= 1
        if j < 0:
            break
        idx[j] += 1
        for t in range(j + 1, k):
            idx[t] = idx[t - 1] + 1
    return buf[:cnt], cnt, nodes


@njit(cache=True)
def search_connected(adj, n, k, stop_first, store):
    """Scan connected k-subsets for forcing sets.

    Connected sets are grown from their smallest vertex by include/exclude
    branching on the lowest eligible boundary vertex, so each connected set
    is generated exactly once and disconnected sets are never visited.
    """
    full = (1 << n) - 1
    buf = np.empty(16, np.int64)
    cnt = 0
    nodes = 0
    if k < 1 or k > n:
        return buf[:0], 0, 0
    cap = 2 * n + 4
    st_s = np.empty(cap, np.int64)
    st_e = np.empty(cap, np.int64)
    st_x = np.empty(cap, np.int64)
    st_c = np.empty(cap, np.int64)
    for r in range(n):
        low = (1 << (r + 1)) - 1
        st_s[0] = 1 << r
        st_e[0] = adj[r] & ~low
        st_x[0] = low & ~(1 << r)
        st_c[0] = 1
        top = 1
        while top > 0:
            top -= 1
            s = st_s[top]
            e = st_e[top]
            x = st_x[top]
            c = st_c[top]
            if c == k:
                nodes += 1
                if closure(adj, n, s) == full:
                    if store:
                        buf = _push(buf, cnt, s)
                    cnt += 1
                    if stop_first:
                        return buf[:cnt], cnt, nodes
                continue
            if e == 0:
                continue
            u = e & -e
            ui = bit_index(u)
            st_s[top] = s
            st_e[top] = e ^ u
            st_x[top] = x | u
            st_c[top] = c
            top += 1
            s2 = s | u
            st_s[top] = s2
            st_e[top] = ((e ^ u) | adj[ui]) & ~s2 & ~x
            st_x[top] = x
            st_c[top] = c + 1
            top += 1
    return buf[:cnt], cnt, nodes


@njit(cache=True)
def connected_forcing_profile(adj, n):
    """Histogram of connected forcing sets by size over all connected sets.

    Returns ``(hist, best, cover)`` with ``hist[i]`` = number of connected
    forcing sets of size ``i``, ``best`` the minimum size (n+1 if none) and
    ``cover`` the union of all minimum ones.
    """
    full = (1 << n) - 1
    hist = np.zeros(n + 1, np.int64)
    best = n + 1
    cover = 0
    cap = 2 * n + 4
    st_s = np.empty(cap, np.int64)
    st_e = np.empty(cap, np.int64)
    st_x = np.empty(cap, np.int64)
    st_c = np.empty(cap, np.int64)
    st_f = np.empty(cap, np.int64)  # 1 = new set, 2 = known forcing
    for r in range(n):
        low = (1 << (r + 1)) - 1
        st_s[0] = 1 << r
        st_e[0] = adj[r] & ~low
        st_x[0] = low & ~(1 << r)
        st_c[0] = 1
        st_f[0] = 1
        top = 1
        while top > 0:
            top -= 1
            s = st_s[top]
            e = st_e[top]
            x = st_x[top]
            c = st_c[top]
            f = st_f[top]
            forcing = (f & 2) != 0
            if f & 1:
                if not forcing:
                    forcing = closure(adj, n, s) == full
                if forcing:
                    hist[c] += 1
                    if c < best:
                        best = c
                        cover = s
                    elif c == best:
                        cover |= s
            if e == 0:
                continue
            u = e & -e
            ui = bit_index(u)
            known = 2 if forcing else 0
            st_s[top] = s
            st_e[top] = e ^ u
            st_x[top] = x | u
            st_c[top] = c
            st_f[top] = known
            top += 1
            s2 = s | u
            st_s[top] = s2
            st_e[top] = ((e ^ u) | adj[ui]) & ~s2 & ~x
            st_x[top] = x
            st_c[top] = c + 1
            st_f[top] = 1 | known
            top += 1
    return hist, best, cover


@njit(cache=True)
def subset_flags(adj, n):
    """Brute-force classification of every subset: bit 1 zero forcing,
    bit 2 induces a connected subgraph, bit 4 induces no isolated vertex."""
    full = (1 << n) - 1
    flags = np.zeros(1 << n, np.uint8)
    for m in range(1 << n):
        f = 0
        if closure(adj, n, m) == full:
            f |= 1
        if is_connected(adj, n, m):
            f |= 2
        if isolate_free(adj, n, m):
            f |= 4
        flags[m] = f
    return flags


@njit(cache=True)
def extremal_counts(adj, n):
    """Closed-form connected forcing counts at sizes 1, n-2, n-1 and n.

    Returns ``[c1, c_{n-2}, c_{n-1}, c_n]``; entries for sizes below 1 are -1.
    Assumes a connected graph.
    """
    full = (1 << n) - 1
    out = np.full(4, -1, np.int64)
    out[3] = 1
    if n >= 2:
        c = 0
        for v in range(n):
            if component_count(adj, n, full & ~(1 << v)) == 1:
                c += 1
        out[2] = c
    if n >= 3:
        c = 0
        for u in range(n):
            for v in range(u + 1, n):
                rest = full & ~(1 << u) & ~(1 << v)
                if component_count(adj, n, rest) != 1:
                    continue
                if (adj[u] & ~(1 << v)) != (adj[v] & ~(1 << u)):
                    c += 1
        out[1] = c
    edges2 = 0
    maxdeg = 0
    for v in range(n):
        d = popcount(adj[v])
        edges2 += d
        if d > maxdeg:
            maxdeg = d
    is_path = is_connected(adj, n, full) and edges2 == 2 * (n - 1) and maxdeg <= 2
    if is_path:
        out[0] = 1 if n == 1 else 2
    else:
        out[0] = 0
    return out


@njit(cache=True)
def strong_support_rule(adj, n):
    """CF-density test for trees: P1, P2, or a non-path tree whose support
    vertices are all strong support vertices."""
    if n <= 2:
        return True
    leaves = 0
    maxdeg = 0
    for v in range(n):
        d = popcount(adj[v])
        if d == 1:
            leaves |= 1 << v
        if d > maxdeg:
            maxdeg = d
    if maxdeg <= 2:
        return False
    for v in range(n):
        near = adj[v] & leaves
        if near != 0 and (near & (near - 1)) == 0:
            return False
    return True


@njit(cache=True)
def prufer_decode(seq, n, adj):
    """Fill ``adj`` with the labeled tree encoded by ``seq`` (length n-2)."""
    for v in range(n):
        adj[v] = 0
    if n == 1:
        return
    degree = np.ones(n, np.int64)
    for x in seq:
        degree[x] += 1
    for x in seq:
        leaf = 0
        while degree[leaf] != 1:
            leaf += 1
        adj[leaf] |= 1 << x
        adj[x] |= 1 << leaf
        degree[leaf] -= 1
        degree[x] -= 1
    u = -1
    w = -1
    for v in range(n):
        if degree[v] == 1:
            if u < 0:
                u = v
            else:
                w = v
    adj[u] |= 1 << w
    adj[w] |= 1 << u


@njit(cache=True)
def sweep_prufer_trees(n):
    """Compare the strong-support rule with brute-force CF-density on every
    labeled tree with ``n`` vertices.

    Returns ``(trees, dense, mismatches, first_mismatch_code)`` where the code
    is the Prüfer sequence read as a base-n integer (-1 if none).
    """
    adj = np.zeros(n, np.int64)
    full = (1 << n) - 1
    length = max(n - 2, 0)
    seq = np.zeros(length, np.int64)
    trees = 0
    dense = 0
    mismatches = 0
    first = -1
    code = 0
    while True:
        prufer_decode(seq, n, adj)
        trees += 1
        hist, best, cover = connected_forcing_profile(adj, n)
        oracle = cover == full
        if oracle:
            dense += 1
        if strong_support_rule(adj, n) != oracle:
            mismatches += 1
            if first < 0:
                first = code
        j = length - 1
        while j >= 0 and seq[j] == n - 1:
            seq[j] = 0
            j -= 1
        if j < 0:
            break
        seq[j] += 1
        code += 1
    return trees, dense, mismatches, first


# layout of the statistics vector returned by sweep_labeled_graphs
STAT_GRAPHS = 0
STAT_CONNECTED = 1
STAT_UNIQUENESS = 2
STAT_EXTREMAL_1 = 3
STAT_EXTREMAL_NM2 = 4
STAT_EXTREMAL_NM1 = 5
STAT_EXTREMAL_N = 6
STAT_CHAIN = 7
STAT_REVERSAL = 8
STAT_FEW_MIN_ZF = 9
STAT_CHAIN_CHECKED = 10
N_STATS = 11


@njit(cache=True)
def sweep_labeled_graphs(n):
    """Exhaustive pass over all labeled graphs on ``n`` vertices.

    For each connected graph the brute-force profile (every vertex subset)
    is compared against: the uniqueness theorem, the extremal closed forms,
    the min-degree chain (non-paths), and chain reversal of every minimum
    zero forcing set. Returns ``(stats, first_failure)``; ``first_failure[k]``
    is the edge code of the first graph failing statistic ``k`` or -1.
    """
    pairs_u = np.empty(n * (n - 1) // 2, np.int64)
    pairs_v = np.empty(n * (n - 1) // 2, np.int64)
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            pairs_u[p] = u
            pairs_v[p] = v
            p += 1
    n_pairs = p
    full = (1 << n) - 1
    adj = np.zeros(n, np.int64)
    stats = np.zeros(N_STATS, np.int64)
    first = np.full(N_STATS, -1, np.int64)
    hist = np.zeros(n + 1, np.int64)
    for code in range(1 << n_pairs):
        for v in range(n):
            adj[v] = 0
        for q in range(n_pairs):
            if (code >> q) & 1:
                adj[pairs_u[q]] |= 1 << pairs_v[q]
                adj[pairs_v[q]] |= 1 << pairs_u[q]
        stats[STAT_GRAPHS] += 1
        if not is_connected(adj, n, full):
            continue
        stats[STAT_CONNECTED] += 1
        for i in range(n + 1):
            hist[i] = 0
        z = n + 1
        zt = n + 1
        zc = n + 1
        for m in range(1, 1 << n):
            if closure(adj, n, m) != full:
                continue
            size = popcount(m)
            if size < z:
                z = size
            if size < zt and isolate_free(adj, n, m):
                zt = size
            if is_connected(adj, n, m):
                hist[size] += 1
                if size < zc:
                    zc = size
        for i in range(1, n + 1):
            if hist[i] == 1 and i != zc and i != n:
                stats[STAT_UNIQUENESS] += 1
                if first[STAT_UNIQUENESS] < 0:
                    first[STAT_UNIQUENESS] = code
                break
        ext = extremal_counts(adj, n)
        sizes = np.array([1, n - 2, n - 1, n])
        for j in range(4):
            if sizes[j] >= 1 and ext[j] != hist[sizes[j]]:
                stats[STAT_EXTREMAL_1 + j] += 1
                if first[STAT_EXTREMAL_1 + j] < 0:
                    first[STAT_EXTREMAL_1 + j] = code
        edges2 = 0
        mindeg = n
        maxdeg = 0
        for v in range(n):
            d = popcount(adj[v])
            edges2 += d
            mindeg = min(mindeg, d)
            maxdeg = max(maxdeg, d)
        is_path = edges2 == 2 * (n - 1) and maxdeg <= 2
        if not is_path:
            stats[STAT_CHAIN_CHECKED] += 1
            if not (mindeg <= z and z <= zt and zt <= zc):
                stats[STAT_CHAIN] += 1
                if first[STAT_CHAIN] < 0:
                    first[STAT_CHAIN] = code
        if n >= 2:
            n_min = 0
            bad = False
            for m in range(1, 1 << n):
                if popcount(m) != z or closure(adj, n, m) != full:
                    continue
                n_min += 1
                r = reversal(adj, n, m)
                if r < 0 or r == m or popcount(r) != z or closure(adj, n, r) != full:
                    bad = True
            if bad:
                stats[STAT_REVERSAL] += 1
                if first[STAT_REVERSAL] < 0:
                    first[STAT_REVERSAL] = code
            if n_min < 2:
                stats[STAT_FEW_MIN_ZF] += 1
                if first[STAT_FEW_MIN_ZF] < 0:
                    first[STAT_FEW_MIN_ZF] = code
    return stats, first


@njit(cache=True)
def adjacency_from_code(n, code):
    """Adjacency of the labeled graph whose edge (u<v) pairs, in lexicographic
    order, are selected by the bits of ``code``."""
    adj = np.zeros(n, np.int64)
    q = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (code >> q) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            q += 1
    return adj
