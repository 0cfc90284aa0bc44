import numpy as np
from numba import njit

from .canon import canonical_code

# enumeration classes
ALL = 0
ORIENTED = 1
SEMICOMPLETE = 2


@njit(cache=True, nogil=True)
def _state_table(cls):
    # pair state -> (new->old arc, old->new arc)
    if cls == ALL:
        return np.array([[0, 0], [1, 0], [0, 1], [1, 1]], np.int64)
    if cls == ORIENTED:
        return np.array([[0, 0], [1, 0], [0, 1]], np.int64)
    return np.array([[1, 0], [0, 1], [1, 1]], np.int64)


@njit(cache=True, nogil=True)
def extend_codes(parents, m, cls, out):
    """Canonical codes of every one-vertex extension of each parent (rows of order ``m``)."""
    table = _state_table(cls)
    k = table.shape[0]
    n = m + 1
    orow = np.empty(n, np.int64)
    irow = np.empty(n, np.int64)
    total = k ** m
    idx = 0
    for p in range(parents.shape[0]):
        for s in range(total):
            for i in range(m):
                orow[i] = parents[p, i]
            orow[m] = 0
            x = s
            for i in range(m):
                st = x % k
                x //= k
                if table[st, 0]:
                    orow[m] |= np.int64(1) << i
                if table[st, 1]:
                    orow[i] |= np.int64(1) << m
            for i in range(n):
                irow[i] = 0
            for i in range(n):
                r = orow[i]
                for j in range(n):
                    if (r >> j) & 1:
                        irow[j] |= np.int64(1) << i
            out[idx] = canonical_code(n, orow, irow)
            idx += 1
    return idx


@njit(cache=True, nogil=True)
def decode_codes(codes, n):
    rows = np.zeros((codes.shape[0], n), np.int64)
    nn = n * n
    for k in range(codes.shape[0]):
        c = codes[k]
        for i in range(n):
            for j in range(n):
                if (c >> np.uint64(nn - 1 - (i * n + j))) & np.uint64(1):
                    rows[k, i] |= np.int64(1) << j
    return rows


@njit(cache=True, nogil=True)
def encode_rows(rows, n):
    """Row-major code of already-labelled rows (inverse of ``decode_codes``)."""
    codes = np.empty(rows.shape[0], np.uint64)
    for k in range(rows.shape[0]):
        c = np.uint64(0)
        for i in range(n):
            r = rows[k, i]
            for j in range(n):
                c = (c << np.uint64(1)) | np.uint64((r >> j) & 1)
        codes[k] = c
    return codes


@njit(cache=True, nogil=True)
def canonical_codes(rows, n):
    codes = np.empty(rows.shape[0], np.uint64)
    irow = np.empty(n, np.int64)
    for k in range(rows.shape[0]):
        for i in range(n):
            irow[i] = 0
        for i in range(n):
            r = rows[k, i]
            for j in range(n):
                if (r >> j) & 1:
                    irow[j] |= np.int64(1) << i
        codes[k] = canonical_code(n, rows[k], irow)
    return codes
