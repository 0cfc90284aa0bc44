import numpy as np
from numba import njit

from .graph import popcount, transpose


@njit(cache=True)
def find_induced(n, d_out, h, h_out, mapping):
    """Backtracking search for an induced copy of H in D; fills ``mapping`` and returns True on success."""
    if h > n:
        return False
    if h == 0:
        return True
    d_in = transpose(n, d_out)
    h_in = transpose(h, h_out)
    d_od = np.empty(n, np.int64)
    d_id = np.empty(n, np.int64)
    for v in range(n):
        d_od[v] = popcount(d_out[v])
        d_id[v] = popcount(d_in[v])
    h_od = np.empty(h, np.int64)
    h_id = np.empty(h, np.int64)
    for v in range(h):
        h_od[v] = popcount(h_out[v])
        h_id[v] = popcount(h_in[v])
    nxt = np.zeros(h, np.int64)  # next D vertex to try at each depth
    used = np.int64(0)
    depth = 0
    while depth >= 0:
        if depth == h:
            return True
        placed = False
        c = nxt[depth]
        while c < n:
            cand = c
            c += 1
            if (used >> cand) & 1:
                continue
            if d_od[cand] < h_od[depth] or d_id[cand] < h_id[depth]:
                continue
            ok = True
            for j in range(depth):
                m = mapping[j]
                if ((h_out[depth] >> j) & 1) != ((d_out[cand] >> m) & 1):
                    ok = False
                    break
                if ((h_out[j] >> depth) & 1) != ((d_out[m] >> cand) & 1):
                    ok = False
                    break
            if ok:
                nxt[depth] = c
                mapping[depth] = cand
                used |= np.int64(1) << cand
                depth += 1
                if depth < h:
                    nxt[depth] = 0
                placed = True
                break
        if not placed:
            nxt[depth] = 0
            depth -= 1
            if depth >= 0:
                used &= ~(np.int64(1) << mapping[depth])
    return False
