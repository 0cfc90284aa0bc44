import numpy as np
from numba import njit

from .graph import transpose


@njit(cache=True)
def is_absorbent(n, out_rows, s, mask):
    rest = mask & ~s
    for u in range(n):
        if (rest >> u) & 1 and (out_rows[u] & s) == 0:
            return False
    return True


@njit(cache=True)
def is_independent(n, out_rows, s):
    for u in range(n):
        if (s >> u) & 1 and (out_rows[u] & s):
            return False
    return True


@njit(cache=True)
def _closed_nbhd(n, out_rows):
    in_rows = transpose(n, out_rows)
    nb = np.empty(n, np.int64)
    for v in range(n):
        nb[v] = out_rows[v] | in_rows[v] | (np.int64(1) << v)
    return nb


@njit(cache=True)
def kernels_within(n, out_rows, nb, mask, stop_at_first, out):
    """Kernels of the subdigraph induced by ``mask``, written to ``out``; returns how many.

    Maximal independent sets of the underlying graph are listed by an iterative
    Bron-Kerbosch search with pivoting and each is tested for absorbency.
    """
    found = 0
    cap = n * n + n + 2
    sr = np.empty(cap, np.int64)
    sp = np.empty(cap, np.int64)
    sx = np.empty(cap, np.int64)
    sr[0] = 0
    sp[0] = mask
    sx[0] = 0
    top = 1
    while top > 0:
        top -= 1
        r = sr[top]
        p = sp[top]
        x = sx[top]
        if p == 0:
            if x == 0 and is_absorbent(n, out_rows, r, mask):
                if found < out.shape[0]:
                    out[found] = r
                found += 1
                if stop_at_first:
                    return found
            continue
        # pivot maximising |P \ N[u]|, i.e. the fewest branches P & N[u]
        px = p | x
        best_u = -1
        best_c = n + 1
        for u in range(n):
            if (px >> u) & 1:
                c = 0
                t = p & nb[u]
                while t:
                    t &= t - 1
                    c += 1
                if c < best_c:
                    best_c = c
                    best_u = u
        branch = p & nb[best_u]
        for v in range(n):
            if (branch >> v) & 1:
                bit = np.int64(1) << v
                sr[top] = r | bit
                sp[top] = p & ~nb[v]
                sx[top] = x & ~nb[v]
                top += 1
                p &= ~bit
                x |= bit
    return found


@njit(cache=True)
def has_kernel_within(n, out_rows, nb, mask):
    buf = np.empty(1, np.int64)
    return kernels_within(n, out_rows, nb, mask, True, buf) > 0


@njit(cache=True)
def has_kernel(n, out_rows):
    nb = _closed_nbhd(n, out_rows)
    return has_kernel_within(n, out_rows, nb, (np.int64(1) << n) - 1)


@njit(cache=True)
def all_kernels(n, out_rows):
    nb = _closed_nbhd(n, out_rows)
    mask = (np.int64(1) << n) - 1
    buf = np.empty(0, np.int64)
    count = kernels_within(n, out_rows, nb, mask, False, buf)
    buf = np.empty(count, np.int64)
    kernels_within(n, out_rows, nb, mask, False, buf)
    buf.sort()
    return buf


@njit(cache=True)
def kernel_perfect_lattice(n, out_rows, nb, upto):
    """``kp[S]`` for all S < upto: every induced subdigraph of D[S] has a kernel."""
    kp = np.zeros(upto, np.bool_)
    if upto > 0:
        kp[0] = True
    for s in range(1, upto):
        ok = True
        t = s
        while t:
            low = t & -t
            if not kp[s ^ low]:
                ok = False
                break
            t ^= low
        if ok:
            ok = has_kernel_within(n, out_rows, nb, s)
        kp[s] = ok
    return kp


@njit(cache=True)
def is_kernel_perfect(n, out_rows):
    if n == 0:
        return True
    nb = _closed_nbhd(n, out_rows)
    full = (np.int64(1) << n) - 1
    return kernel_perfect_lattice(n, out_rows, nb, full + 1)[full]


@njit(cache=True)
def is_cki(n, out_rows):
    if n == 0:
        return False
    nb = _closed_nbhd(n, out_rows)
    full = (np.int64(1) << n) - 1
    if has_kernel_within(n, out_rows, nb, full):
        return False
    kp = kernel_perfect_lattice(n, out_rows, nb, full)
    for v in range(n):
        if not kp[full ^ (np.int64(1) << v)]:
            return False
    return True
