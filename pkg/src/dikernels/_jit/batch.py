"""Vectorised application of scalar predicates ``f(n, rows, arg) -> bool`` over row matrices."""
import numpy as np
from numba import njit

from . import graph as g
from . import kernel as kn
from .induced import find_induced

_BATCH_CACHE = {}


def batch_of(fn):
    """Compiled loop applying ``fn`` to every row of a 2-D row matrix."""
    key = id(fn)
    if key not in _BATCH_CACHE:

        @njit(nogil=True)
        def run(rows2d, n, arg):
            out = np.empty(rows2d.shape[0], np.bool_)
            for i in range(rows2d.shape[0]):
                out[i] = fn(n, rows2d[i], arg)
            return out

        _BATCH_CACHE[key] = (fn, run)
    return _BATCH_CACHE[key][1]


# uniform-signature scalar predicates

@njit(cache=True, nogil=True)
def p_kqt(n, rows, k):
    return g.is_k_quasi_transitive(n, rows, k)


@njit(cache=True, nogil=True)
def p_kt(n, rows, k):
    return g.is_k_transitive(n, rows, k)


@njit(cache=True, nogil=True)
def p_kat(n, rows, k):
    return g.is_k_anti_transitive(n, rows, k)


@njit(cache=True, nogil=True)
def p_tt3_free(n, rows, _):
    return not g.has_tt3_subdigraph(n, rows)


@njit(cache=True, nogil=True)
def p_semicomplete(n, rows, _):
    return g.is_semicomplete(n, rows)


@njit(cache=True, nogil=True)
def p_asymmetric(n, rows, _):
    return g.is_asymmetric(n, rows)


@njit(cache=True, nogil=True)
def p_locally(n, rows, mode):
    if mode == 4:  # in or out
        return g.is_locally_semicomplete(n, rows, g.IN) or g.is_locally_semicomplete(n, rows, g.OUT)
    return g.is_locally_semicomplete(n, rows, mode)


@njit(cache=True, nogil=True)
def p_arc_locally(n, rows, mode):
    if mode == 4:
        return g.is_arc_locally_semicomplete(n, rows, g.IN) or g.is_arc_locally_semicomplete(n, rows, g.OUT)
    return g.is_arc_locally_semicomplete(n, rows, mode)


@njit(cache=True, nogil=True)
def p_underlying_perfect(n, rows, _):
    return g.is_underlying_perfect(n, rows)


@njit(cache=True, nogil=True)
def p_kernel_perfect(n, rows, _):
    return kn.is_kernel_perfect(n, rows)


@njit(cache=True, nogil=True)
def p_has_kernel(n, rows, _):
    return kn.has_kernel(n, rows)


@njit(cache=True, nogil=True)
def p_cki(n, rows, _):
    return kn.is_cki(n, rows)


@njit(cache=True, nogil=True)
def p_strong(n, rows, _):
    return g.is_strong(n, rows)


@njit(cache=True, nogil=True)
def p_diameter(n, rows, dval):
    return g.diameter(n, rows) == dval


@njit(cache=True, nogil=True)
def p_far_pair(n, rows, dval):
    """Some ordered pair at finite distance at least ``dval``."""
    for s in range(n):
        seen = np.int64(1) << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = np.int64(0)
            for u in range(n):
                if (frontier >> u) & 1:
                    nxt |= rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            if frontier and level >= dval:
                return True
    return False


@njit(cache=True, nogil=True)
def p_three_cycles_two_sym(n, rows, _):
    return g.three_cycles_have_two_symmetric(n, rows)


def make_free_of(h_rows):
    """Scalar predicate: no induced copy of the digraph with out-rows ``h_rows``."""
    harr = np.array(h_rows, dtype=np.int64)
    h = len(h_rows)

    @njit(nogil=True)
    def p_free(n, rows, _):
        mapping = np.empty(max(h, 1), np.int64)
        return not find_induced(n, rows, h, harr, mapping)

    return p_free
