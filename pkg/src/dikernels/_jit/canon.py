"""Canonical labelling by ordered partition refinement and exhaustive individualisation."""
import numpy as np
from numba import njit

MAXN = 64


@njit(cache=True)
def _refine(n, out_rows, in_rows, cell):
    """Refine ``cell`` (ranks, modified in place) to the coarsest equitable ordered partition.

    Ranks stay consistent with the incoming order, and new ranks depend only on
    isomorphism-invariant neighbour counts.
    """
    sig = np.empty((n, 2 * n + 1), np.int64)
    order = np.empty(n, np.int64)
    ncells = 0
    for v in range(n):
        if cell[v] + 1 > ncells:
            ncells = cell[v] + 1
    while True:
        width = 2 * ncells + 1
        for v in range(n):
            sig[v, 0] = cell[v]
            for c in range(1, width):
                sig[v, c] = 0
            ro = out_rows[v]
            ri = in_rows[v]
            for u in range(n):
                if (ro >> u) & 1:
                    sig[v, 1 + cell[u]] += 1
                if (ri >> u) & 1:
                    sig[v, 1 + ncells + cell[u]] += 1
        # insertion sort of vertices by signature
        for v in range(n):
            order[v] = v
        for a in range(1, n):
            x = order[a]
            b = a - 1
            while b >= 0:
                y = order[b]
                cmp = 0
                for c in range(width):
                    if sig[y, c] != sig[x, c]:
                        cmp = 1 if sig[y, c] > sig[x, c] else -1
                        break
                if cmp <= 0:
                    break
                order[b + 1] = y
                b -= 1
            order[b + 1] = x
        rank = 0
        cell[order[0]] = 0
        for a in range(1, n):
            x = order[a]
            y = order[a - 1]
            for c in range(width):
                if sig[y, c] != sig[x, c]:
                    rank += 1
                    break
            cell[x] = rank
        if rank + 1 == ncells:
            return ncells
        ncells = rank + 1


@njit(cache=True)
def _leaf_rows(n, out_rows, cell, rows_out):
    # cell is discrete: cell[v] is the position of v
    pos_vertex = np.empty(n, np.int64)
    for v in range(n):
        pos_vertex[cell[v]] = v
    for i in range(n):
        r = out_rows[pos_vertex[i]]
        val = 0
        for j in range(n):
            val = (val << 1) | ((r >> pos_vertex[j]) & 1)
        rows_out[i] = val


@njit(cache=True)
def canonical_positions(n, out_rows, in_rows):
    """Return ``pos`` with ``pos[v]`` the canonical position of vertex ``v``.

    The canonical matrix is the lexicographically least row-major adjacency
    string over all leaves of the individualisation-refinement tree.
    """
    best_pos = np.zeros(n, np.int64)
    if n <= 1:
        return best_pos
    best_rows = np.empty(n, np.int64)
    cand_rows = np.empty(n, np.int64)
    have_best = False
    # explicit DFS stack of partitions
    stack = np.empty((n * n + 2, n), np.int64)
    top = 0
    root = np.zeros(n, np.int64)
    _refine(n, out_rows, in_rows, root)
    stack[0, :] = root
    top = 1
    while top > 0:
        top -= 1
        cur = stack[top].copy()
        ncells = 0
        for v in range(n):
            if cur[v] + 1 > ncells:
                ncells = cur[v] + 1
        if ncells == n:
            _leaf_rows(n, out_rows, cur, cand_rows)
            better = not have_best
            if have_best:
                for i in range(n):
                    if cand_rows[i] != best_rows[i]:
                        better = cand_rows[i] < best_rows[i]
                        break
            if better:
                have_best = True
                best_rows[:] = cand_rows
                best_pos[:] = cur
            continue
        # target: first non-singleton cell in rank order
        size = np.zeros(ncells, np.int64)
        for v in range(n):
            size[cur[v]] += 1
        target = 0
        while size[target] == 1:
            target += 1
        # push children in descending vertex order so the lowest vertex is expanded first
        for v in range(n - 1, -1, -1):
            if cur[v] != target:
                continue
            child = np.empty(n, np.int64)
            for u in range(n):
                c = cur[u]
                if c > target or (c == target and u != v):
                    child[u] = c + 1
                else:
                    child[u] = c
            _refine(n, out_rows, in_rows, child)
            stack[top, :] = child
            top += 1
    return best_pos


@njit(cache=True)
def canonical_code(n, out_rows, in_rows):
    """Canonical row-major adjacency bits packed MSB-first into an int (n <= 8)."""
    pos = canonical_positions(n, out_rows, in_rows)
    vert = np.empty(n, np.int64)
    for v in range(n):
        vert[pos[v]] = v
    code = np.uint64(0)
    for i in range(n):
        r = out_rows[vert[i]]
        for j in range(n):
            code = (code << np.uint64(1)) | np.uint64((r >> vert[j]) & 1)
    return code
