"""Numba-compiled hot loops. Digraphs are passed as ``int64`` arrays of out-neighbour bit rows."""
