import numpy as np
from numba import njit

UNREACHABLE = -1

# neighbourhood modes
IN = 0
OUT = 1
BOTH = 2
CLOSED = 3


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def transpose(n, out_rows):
    in_rows = np.zeros(n, np.int64)
    for u in range(n):
        r = out_rows[u]
        for v in range(n):
            if (r >> v) & 1:
                in_rows[v] |= np.int64(1) << u
    return in_rows


@njit(cache=True)
def _closure(n, rows, src):
    seen = np.int64(1) << src
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        for u in range(n):
            if (frontier >> u) & 1:
                nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


@njit(cache=True)
def is_strong(n, out_rows):
    if n <= 1:
        return True
    full = (np.int64(1) << n) - 1
    if _closure(n, out_rows, 0) != full:
        return False
    return _closure(n, transpose(n, out_rows), 0) == full


@njit(cache=True)
def distance_matrix(n, out_rows):
    d = np.full((n, n), UNREACHABLE, np.int64)
    for s in range(n):
        d[s, s] = 0
        seen = np.int64(1) << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = np.int64(0)
            for u in range(n):
                if (frontier >> u) & 1:
                    nxt |= out_rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            for v in range(n):
                if (frontier >> v) & 1:
                    d[s, v] = level
    return d


@njit(cache=True)
def diameter(n, out_rows):
    """Largest directed distance, or UNREACHABLE when some pair is disconnected."""
    best = 0
    full = (np.int64(1) << n) - 1
    for s in range(n):
        seen = np.int64(1) << s
        frontier = seen
        level = 0
        while frontier:
            nxt = np.int64(0)
            for u in range(n):
                if (frontier >> u) & 1:
                    nxt |= out_rows[u]
            frontier = nxt & ~seen
            if frontier:
                level += 1
            seen |= frontier
        if seen != full:
            return UNREACHABLE
        if level > best:
            best = level
    return best


@njit(cache=True)
def kpath_ends(n, out_rows, u, k):
    """Mask of vertices ``v`` reachable from ``u`` by a path of exactly ``k`` arcs on distinct vertices."""
    ends = np.int64(0)
    if k < 1 or k > n - 1:
        return ends
    # DFS over (vertex, visited, remaining candidates)
    vert = np.empty(k + 1, np.int64)
    cand = np.empty(k + 1, np.int64)
    visited = np.empty(k + 1, np.int64)
    vert[0] = u
    visited[0] = np.int64(1) << u
    cand[0] = out_rows[u] & ~visited[0]
    depth = 0
    while depth >= 0:
        c = cand[depth]
        if c == 0:
            depth -= 1
            continue
        low = c & -c
        cand[depth] = c & ~low
        w = 0
        while (low >> w) != 1:
            w += 1
        if depth + 1 == k:
            ends |= low
            continue
        depth += 1
        vert[depth] = w
        visited[depth] = visited[depth - 1] | low
        cand[depth] = out_rows[w] & ~visited[depth]
    return ends


@njit(cache=True)
def has_k_path(n, out_rows, u, v, k):
    return (kpath_ends(n, out_rows, u, k) >> v) & 1 == 1


@njit(cache=True)
def is_k_quasi_transitive(n, out_rows, k):
    in_rows = transpose(n, out_rows)
    for u in range(n):
        ends = kpath_ends(n, out_rows, u, k)
        if ends & ~(out_rows[u] | in_rows[u]):
            return False
    return True


@njit(cache=True)
def is_k_transitive(n, out_rows, k):
    for u in range(n):
        if kpath_ends(n, out_rows, u, k) & ~out_rows[u]:
            return False
    return True


@njit(cache=True)
def is_k_anti_transitive(n, out_rows, k):
    for u in range(n):
        if kpath_ends(n, out_rows, u, k) & out_rows[u]:
            return False
    return True


@njit(cache=True)
def _semicomplete_on(n, adj, mask):
    for u in range(n):
        if (mask >> u) & 1:
            if (mask & ~adj[u]) & ~(np.int64(1) << u):
                return False
    return True


@njit(cache=True)
def underlying(n, out_rows):
    return out_rows | transpose(n, out_rows)


@njit(cache=True)
def is_semicomplete(n, out_rows):
    return _semicomplete_on(n, underlying(n, out_rows), (np.int64(1) << n) - 1)


@njit(cache=True)
def is_asymmetric(n, out_rows):
    in_rows = transpose(n, out_rows)
    for u in range(n):
        if out_rows[u] & in_rows[u]:
            return False
    return True


@njit(cache=True)
def is_locally_semicomplete(n, out_rows, mode):
    in_rows = transpose(n, out_rows)
    adj = out_rows | in_rows
    for v in range(n):
        if mode == CLOSED:
            if not _semicomplete_on(n, adj, adj[v]):
                return False
            continue
        if mode != OUT and not _semicomplete_on(n, adj, in_rows[v]):
            return False
        if mode != IN and not _semicomplete_on(n, adj, out_rows[v]):
            return False
    return True


@njit(cache=True)
def _arc_local(n, rows, adj, out_rows):
    for x in range(n):
        for y in range(n):
            if not (out_rows[x] >> y) & 1:
                continue
            for z in range(n):
                if not (rows[x] >> z) & 1:
                    continue
                # every w in rows[y] must equal z or be adjacent to z
                if rows[y] & ~adj[z] & ~(np.int64(1) << z):
                    return False
    return True


@njit(cache=True)
def is_arc_locally_semicomplete(n, out_rows, mode):
    in_rows = transpose(n, out_rows)
    adj = out_rows | in_rows
    if mode != OUT and not _arc_local(n, in_rows, adj, out_rows):
        return False
    if mode != IN and not _arc_local(n, out_rows, adj, out_rows):
        return False
    return True


@njit(cache=True)
def has_tt3_subdigraph(n, out_rows):
    for a in range(n):
        for b in range(n):
            if (out_rows[a] >> b) & 1:
                # c with b->c and a->c, c distinct from a and b
                if out_rows[b] & out_rows[a] & ~(np.int64(1) << a) & ~(np.int64(1) << b):
                    return True
    return False


@njit(cache=True)
def three_cycles_have_two_symmetric(n, out_rows):
    """Every directed 3-cycle has at least two symmetrical arcs."""
    for a in range(n):
        for b in range(n):
            if not (out_rows[a] >> b) & 1:
                continue
            for c in range(n):
                if c == a or c == b:
                    continue
                if (out_rows[b] >> c) & 1 and (out_rows[c] >> a) & 1:
                    sym = 0
                    sym += (out_rows[b] >> a) & 1
                    sym += (out_rows[c] >> b) & 1
                    sym += (out_rows[a] >> c) & 1
                    if sym < 2:
                        return False
    return True


@njit(cache=True)
def _is_cycle_graph(n, adj, mask, k):
    # k vertices, all degree two inside mask, connected
    for v in range(n):
        if (mask >> v) & 1:
            if popcount(adj[v] & mask) != 2:
                return False
    low = mask & -mask
    seen = low
    frontier = low
    while frontier:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v] & mask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == mask


@njit(cache=True)
def is_underlying_perfect(n, out_rows):
    """No induced odd hole or odd antihole of length >= 5 in the underlying graph."""
    adj = underlying(n, out_rows)
    full = (np.int64(1) << n) - 1
    comp = np.empty(n, np.int64)
    for v in range(n):
        comp[v] = full & ~adj[v] & ~(np.int64(1) << v)
    for mask in range(1, np.int64(1) << n):
        k = popcount(mask)
        if k < 5 or k % 2 == 0:
            continue
        if _is_cycle_graph(n, adj, mask, k) or _is_cycle_graph(n, comp, mask, k):
            return False
    return True


@njit(cache=True)
def circumference(n, out_rows):
    """Length of a longest directed cycle (2-cycles included), 0 if acyclic."""
    best = 0
    for k in range(n, 1, -1):
        for u in range(n):
            # k-cycle through u as its smallest vertex: (k-1)-path u..w with w->u
            allowed = np.int64(0)
            for w in range(u, n):
                allowed |= np.int64(1) << w
            rows = out_rows & allowed
            ends = kpath_ends(n, rows, u, k - 1)
            for w in range(n):
                if (ends >> w) & 1 and (out_rows[w] >> u) & 1:
                    return k
    return best
